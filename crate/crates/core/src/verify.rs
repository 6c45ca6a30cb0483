//! Exhaustive checks over all small trees and tree pairs.
//!
//! Every check enumerates instances in a fixed order and reports the first
//! failing one, so counterexamples are the smallest available.

use std::fmt;

use crate::dyadic::{SdPartition, Sign};
use crate::exec::Exec;
use crate::halfgrid::{HalfGrid, Mark};
use crate::linkdiag::{self, SignConvention};
use crate::linkgroup::{abelianization, grid_presentation, half_grid_presentation};
use crate::thompson::{BinaryTree, NSign, TreePair};

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_leaves: usize,
    pub exec: Exec,
    pub convention: SignConvention,
}

impl VerifyOptions {
    pub fn new(max_leaves: usize) -> Self {
        VerifyOptions { max_leaves, exec: Exec::default(), convention: SignConvention::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
    /// Reported but never a failure.
    pub informational: bool,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.informational || self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_leaves: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify: trees with 1..={} leaves", self.max_leaves)?;
        let mut checks: Vec<&CheckResult> = self.checks.iter().collect();
        checks.sort_by_key(|c| c.name);
        let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in checks {
            let status = match (c.informational, c.failures) {
                (true, 0) => "info".to_string(),
                (true, k) => format!("info ({k} noted)"),
                (false, 0) => "ok".to_string(),
                (false, k) => format!("FAIL ({k})"),
            };
            writeln!(f, "{:<width$}  {:>8}  {}", c.name, c.instances, status)?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "{:<width$}  first: {}", "", ce)?;
            }
        }
        writeln!(f, "{}", if self.passed() { "all checks passed" } else { "some checks FAILED" })
    }
}

/// Outcome of one instance: `None` when the property holds.
type Outcome = Option<String>;

fn collect(name: &'static str, outcomes: impl IntoIterator<Item = Outcome>) -> CheckResult {
    let mut instances = 0;
    let mut failures = 0;
    let mut counterexample = None;
    for o in outcomes {
        instances += 1;
        if let Some(msg) = o {
            failures += 1;
            counterexample.get_or_insert(msg);
        }
    }
    CheckResult { name, instances, failures, counterexample, informational: false }
}

fn fail_unless(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    (!ok).then(msg)
}

/// Everything derived from one tree.
struct TreeData {
    tree: BinaryTree,
    partition: SdPartition,
    signs: NSign,
    half: HalfGrid,
}

/// Per-instance results of the checks that run on every pair of equal-size trees.
#[derive(Default)]
struct PairOutcomes {
    dual: Outcome,
    compat: Option<Outcome>,
    converse: Option<Outcome>,
    writhe: Option<Outcome>,
    top_half: Option<Outcome>,
    front: Option<Outcome>,
    components: Option<Outcome>,
    tb_rot_parity: Option<Outcome>,
    seifert: Option<Outcome>,
    crossing_count: Option<Outcome>,
    right_marks: Option<Outcome>,
    presentation: Outcome,
    free_rank: Outcome,
}

pub fn verify_suite(opts: VerifyOptions) -> VerifyReport {
    let max = opts.max_leaves.clamp(1, 8);
    let levels: Vec<Vec<TreeData>> = (1..=max)
        .map(|n| {
            BinaryTree::enumerate(n)
                .into_iter()
                .map(|tree| {
                    let partition = tree.to_partition().expect("small trees fit");
                    let half = HalfGrid::from_partition(&partition).expect("construction succeeds");
                    TreeData { signs: tree.leaf_signs(), tree, partition, half }
                })
                .collect()
        })
        .collect();
    let all_trees: Vec<&TreeData> = levels.iter().flatten().collect();

    let mut checks = Vec::new();
    checks.push(collect("catalan-count", (1..=max).map(|n| {
        let want = catalan(n - 1);
        let got = levels[n - 1].len();
        fail_unless(got == want, || format!("n={n}: {got} trees, expected {want}"))
    })));
    checks.push(collect("spanning-cardinality", all_trees.iter().map(|d| spanning_check(d))));
    checks.push(collect("spanning-routes-agree", all_trees.iter().map(|d| {
        let p = &d.partition;
        fail_unless(p.spanning_intervals() == p.spanning_intervals_by_pairs(), || format!("I={p}"))
    })));
    checks.push(collect("tree-partition-roundtrip", all_trees.iter().map(|d| {
        fail_unless(BinaryTree::from_partition(&d.partition) == d.tree, || format!("tree {}", d.tree))
    })));
    checks.push(collect("n-sign", all_trees.iter().map(|d| nsign_check(d))));
    checks.push(collect("half-grid-column-signs", all_trees.iter().map(|d| column_sign_check(d))));
    checks.push(collect("codec-roundtrip", all_trees.iter().map(|d| {
        let back = HalfGrid::perm_decode(&d.half.perm_encode());
        fail_unless(back.as_ref() == Ok(&d.half), || format!("H={}", d.half))
    })));

    // all ordered pairs of equal-size trees
    let pairs: Vec<(&TreeData, &TreeData)> =
        levels.iter().flat_map(|lv| lv.iter().flat_map(move |a| lv.iter().map(move |b| (a, b)))).collect();
    let outcomes: Vec<PairOutcomes> = opts.exec.map(&pairs, |&(a, b)| pair_checks(a, b, opts.convention));
    macro_rules! gather {
        ($name:literal, $field:ident) => {
            collect($name, outcomes.iter().filter_map(|o| o.$field.clone()))
        };
    }
    checks.push(collect("dual-membership", outcomes.iter().map(|o| o.dual.clone())));
    checks.push(gather!("compatibility", compat));
    let mut converse = gather!("compatibility-converse", converse);
    converse.informational = true;
    checks.push(converse);
    checks.push(gather!("writhe-zero", writhe));
    checks.push(gather!("top-half-positive", top_half));
    checks.push(gather!("front-tb-rot", front));
    checks.push(gather!("component-parity", components));
    checks.push(gather!("tb-rot-parity", tb_rot_parity));
    checks.push(gather!("seifert-euler", seifert));
    checks.push(gather!("crossing-count", crossing_count));
    checks.push(gather!("right-mark-balance", right_marks));
    checks.push(collect("presentation-equality", outcomes.iter().map(|o| o.presentation.clone())));
    checks.push(collect("free-rank-components", outcomes.iter().map(|o| o.free_rank.clone())));

    // group-level checks on smaller pairs
    let small: Vec<TreePair> = pairs
        .iter()
        .filter(|(a, _)| a.signs.len() <= 5)
        .map(|(a, b)| TreePair::new(a.tree.clone(), b.tree.clone()).expect("equal sizes"))
        .collect();
    checks.push(collect("inverse", small.iter().map(|g| {
        let ok = g.multiply(&g.inverse()).map(|p| p.is_identity()).unwrap_or(false);
        fail_unless(ok, || format!("g={g}"))
    })));
    checks.push(collect("refinement-roundtrip", small.iter().flat_map(|g| {
        let r = g.reduce();
        (0..g.leaves()).map(move |i| {
            let refined = g.add_caret(i).expect("small tree");
            let ok = refined.reduce() == r && refined.is_oriented() == g.is_oriented();
            fail_unless(ok, || format!("g={g} caret at leaf {i}"))
        })
    })));
    let oriented: Vec<TreePair> = {
        let mut v: Vec<TreePair> = pairs
            .iter()
            .filter(|(a, b)| a.signs.len() <= 6 && a.signs == b.signs)
            .map(|(a, b)| TreePair::new(a.tree.clone(), b.tree.clone()).expect("equal sizes").reduce())
            .collect();
        v.sort_by_key(|g| (g.leaves(), g.to_string()));
        v.dedup();
        v
    };
    let closure_pairs: Vec<(&TreePair, &TreePair)> =
        oriented.iter().flat_map(|g| oriented.iter().map(move |h| (g, h))).collect();
    checks.push(collect(
        "oriented-closure",
        opts.exec.map(&closure_pairs, |&(g, h)| {
            let ok = g.inverse().is_oriented() && g.multiply(h).map(|p| p.is_oriented()).unwrap_or(false);
            fail_unless(ok, || format!("g={g} h={h}"))
        }),
    ));

    VerifyReport { max_leaves: max, checks }
}

pub fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn spanning_check(d: &TreeData) -> Outcome {
    let n = d.signs.len();
    let s = d.partition.spanning_intervals();
    let plus = s.iter().filter(|iv| iv.sign() == Sign::Plus).count();
    fail_unless(s.len() == 2 * n - 1 && plus == n && s.len() - plus == n - 1, || {
        format!("I={}: |S|={} |S+|={} |S-|={}", d.partition, s.len(), plus, s.len() - plus)
    })
}

fn nsign_check(d: &TreeData) -> Outcome {
    let valid = NSign::new(d.signs.signs().to_vec()).is_ok();
    let from_e: Vec<Sign> = d
        .tree
        .leaf_intervals()
        .expect("small tree")
        .iter()
        .map(|iv| crate::dyadic::point_sign(iv.midpoint().expect("small")).expect("midpoint in E"))
        .collect();
    fail_unless(valid && from_e == d.signs.signs(), || format!("tree {}: signs {}", d.tree, d.signs))
}

fn column_sign_check(d: &TreeData) -> Outcome {
    let marks = d.half.column_marks();
    let ok = marks[0] == Mark::O
        && d.partition.spanning_intervals().iter().enumerate().all(|(i, iv)| {
            marks[i + 1] == if iv.sign() == Sign::Plus { Mark::X } else { Mark::O }
        });
    fail_unless(ok, || format!("I={}: H={}", d.partition, d.half))
}

/// Right marks: the row partner lies to the west. Returns `(right X, right O)`.
fn right_marks(h: &HalfGrid) -> (i64, i64) {
    let mut x = 0;
    let mut o = 0;
    for (&xc, &oc) in h.x_cols().iter().zip(h.o_cols()) {
        if oc < xc {
            x += 1;
        } else {
            o += 1;
        }
    }
    (x, o)
}

fn pair_checks(a: &TreeData, b: &TreeData, conv: SignConvention) -> PairOutcomes {
    let n = a.signs.len();
    let tag = || format!("I={} J={}", a.partition, b.partition);
    let mut out = PairOutcomes::default();

    let g = TreePair::new(a.tree.clone(), b.tree.clone()).expect("equal sizes");
    let by_signs = g.is_oriented();
    let by_action = g.preserves_e_signs().expect("small pair");
    out.dual = fail_unless(by_signs == by_action, || format!("{}: n-sign {by_signs}, action {by_action}", tag()));

    let compatible = a.half.is_compatible(&b.half).expect("equal sizes");
    let by_perm = a.half.is_compatible_by_perm(&b.half).expect("equal sizes");
    let same_signs = a.signs == b.signs;
    if same_signs {
        let assembled = a.half.assemble(&b.half);
        out.compat = Some(fail_unless(compatible && by_perm && assembled.is_ok(), || {
            format!("{}: compatible={compatible} by_perm={by_perm}", tag())
        }));
        if let Ok(grid) = assembled {
            battery(&grid, a, b, n, conv, &tag, &mut out);
        }
    } else {
        out.converse = Some(fail_unless(!compatible, || format!("{}: different n-signs, compatible half grids", tag())));
    }

    let un = a.half.assemble_unoriented(&b.half).expect("equal sizes");
    let hp = half_grid_presentation(&a.half.perm_encode(), &b.half.perm_encode()).expect("equal degrees");
    let gp = grid_presentation(&un);
    out.presentation = fail_unless(hp.same_relators(&gp), || format!("{}: {hp:?} vs {gp:?}", tag()));
    let rank = abelianization(&hp).free_rank;
    let comps = linkdiag::components(&un).count();
    out.free_rank = fail_unless(rank == comps, || format!("{}: free rank {rank}, {comps} components", tag()));
    out
}

fn battery(
    grid: &crate::halfgrid::GridDiagram,
    a: &TreeData,
    b: &TreeData,
    n: usize,
    conv: SignConvention,
    tag: &dyn Fn() -> String,
    out: &mut PairOutcomes,
) {
    let n_i = n as i64;
    let cs = linkdiag::crossings_with(grid, conv).expect("oriented");
    let writhe: i64 = cs.iter().map(|c| c.sign as i64).sum();
    out.writhe = Some(fail_unless(writhe == 0, || format!("{}: writhe {writhe}", tag())));

    let top: Vec<_> = cs.iter().filter(|c| c.row > n).collect();
    out.top_half = Some(fail_unless(top.len() == n - 1 && top.iter().all(|c| c.sign == 1), || {
        let signs: Vec<i8> = top.iter().map(|c| c.sign).collect();
        format!("{}: top-half signs {signs:?}", tag())
    }));
    out.crossing_count = Some(fail_unless(cs.len() == 2 * (n - 1), || format!("{}: {} crossings", tag(), cs.len())));

    let front = linkdiag::front_stats(grid);
    let comps = linkdiag::components(grid).count() as i64;
    out.components = Some(fail_unless((comps - n_i).rem_euclid(2) == 0, || format!("{}: {comps} components", tag())));
    match front {
        Ok(f) => {
            let tb = writhe - f.cusps / 2;
            out.front = Some(fail_unless(tb == -n_i && f.rot == 0, || format!("{}: tb={tb} rot={}", tag(), f.rot)));
            out.tb_rot_parity = Some(fail_unless((tb - f.rot - comps).rem_euclid(2) == 0, || {
                format!("{}: tb={tb} rot={} components={comps}", tag(), f.rot)
            }));
            let (xi, oi) = right_marks(&a.half);
            let (xj, oj) = right_marks(&b.half);
            let ok = xi == xj && oi == oj && f.up_cusps == xi + oj && f.down_cusps == oi + xj;
            out.right_marks = Some(fail_unless(ok, || {
                format!("{}: right X/O {xi}/{oi} vs {xj}/{oj}, cusps up {} down {}", tag(), f.up_cusps, f.down_cusps)
            }));
        }
        Err(e) => {
            let msg = Some(format!("{}: {e}", tag()));
            out.front = Some(msg.clone());
            out.tb_rot_parity = Some(msg.clone());
            out.right_marks = Some(msg);
        }
    }
    out.seifert = Some(match linkdiag::seifert_stats(grid) {
        Ok(s) => fail_unless(s.euler == 2 - n_i, || format!("{}: euler {}", tag(), s.euler)),
        Err(e) => Some(format!("{}: {e}", tag())),
    });
}
