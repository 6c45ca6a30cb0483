//! Acceptance run: ten end-to-end criteria, each with its own time budget.
//!
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thompson_links::dyadic::Sign;
use thompson_links::linkdiag::{self, kauffman_bracket, LaurentPoly};
use thompson_links::linkgroup::{abelianization, grid_presentation, half_grid_presentation};
use thompson_links::{BinaryTree, Exec, GridDiagram, HalfGrid, Permutation, TreePair};

use common::{framing, pd_bracket, pd_writhe, random_half_grid, random_pair, RIGHT_TREFOIL_PD};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalan(n: usize) -> usize {
    // C_n = binom(2n, n) / (n + 1)
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (2 * n as u128 - i) / (i + 1);
    }
    (c / (n as u128 + 1)) as usize
}

fn trees_by_size(max: usize) -> Result<Vec<Vec<BinaryTree>>, String> {
    (1..=max)
        .map(|n| {
            let ts = BinaryTree::enumerate(n);
            ensure(ts.len() == catalan(n - 1), || format!("{} trees with {n} leaves", ts.len()))?;
            let distinct: HashSet<&BinaryTree> = ts.iter().collect();
            ensure(distinct.len() == ts.len(), || format!("duplicate trees at n={n}"))?;
            Ok(ts)
        })
        .collect()
}

fn half(t: &BinaryTree) -> HalfGrid {
    HalfGrid::from_tree(t).expect("construction")
}

/// Half grid conditions checked from scratch: `n` rows, columns `1..=2n`,
/// one mark per column.
fn valid_half_grid(h: &HalfGrid, n: usize) -> bool {
    let (x, o) = (h.x_cols(), h.o_cols());
    if x.len() != n || o.len() != n {
        return false;
    }
    let mut cols: Vec<usize> = x.iter().chain(o).copied().collect();
    cols.sort_unstable();
    cols == (1..=2 * n).collect::<Vec<_>>()
}

/// Grid conditions checked from scratch: one X and one O in every row and column.
fn valid_grid(g: &GridDiagram) -> bool {
    let m = g.size();
    let sorted = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v == (1..=m).collect::<Vec<_>>()
    };
    sorted(g.x_cols()) && sorted(g.o_cols()) && g.x_cols().iter().zip(g.o_cols()).all(|(a, b)| a != b)
}

fn c1_cardinality() -> Check {
    let levels = trees_by_size(6)?;
    let mut count = 0;
    for (i, ts) in levels.iter().enumerate() {
        let n = i + 1;
        for t in ts {
            let p = t.to_partition().map_err(|e| e.to_string())?;
            let s = p.spanning_intervals();
            let by_pairs = p.spanning_intervals_by_pairs();
            let plus = s.iter().filter(|iv| iv.sign() == Sign::Plus).count();
            let minus = s.iter().filter(|iv| iv.sign() == Sign::Minus).count();
            ensure(s == by_pairs, || format!("I={p}: routes disagree"))?;
            ensure(s.len() == 2 * n - 1 && plus == n && minus == n - 1, || {
                format!("I={p}: |S|={} |S+|={plus} |S-|={minus}", s.len())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} trees, n <= 6"))
}

fn c2_construction() -> Check {
    let levels = trees_by_size(6)?;
    let mut count = 0;
    for (i, ts) in levels.iter().enumerate() {
        for t in ts {
            let h = half(t);
            ensure(valid_half_grid(&h, i + 1), || format!("tree {t}: {h}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} half grids valid"))
}

fn same_sign_pairs(levels: &[Vec<BinaryTree>]) -> Vec<(usize, BinaryTree, BinaryTree)> {
    let mut out = Vec::new();
    for (i, ts) in levels.iter().enumerate() {
        for a in ts {
            for b in ts {
                if a.leaf_signs() == b.leaf_signs() {
                    out.push((i + 1, a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

fn c3_compatibility() -> Check {
    let levels = trees_by_size(5)?;
    let pairs = same_sign_pairs(&levels);
    for (_, a, b) in &pairs {
        let (ha, hb) = (half(a), half(b));
        ensure(ha.is_compatible(&hb) == Ok(true), || format!("{a}|{b} not compatible"))?;
        let g = ha.assemble(&hb).map_err(|e| format!("{a}|{b}: {e}"))?;
        ensure(valid_grid(&g), || format!("{a}|{b}: invalid grid {g}"))?;
    }
    Ok(format!("{} same-sign pairs", pairs.len()))
}

fn c4_battery() -> Check {
    let levels = trees_by_size(5)?;
    let pairs = same_sign_pairs(&levels);
    for (n, a, b) in &pairs {
        let n = *n;
        let ni = n as i64;
        let tag = || format!("{a}|{b}");
        let (ha, hb) = (half(a), half(b));
        let g = ha.assemble(&hb).map_err(|e| e.to_string())?;
        let cs = linkdiag::crossings(&g).map_err(|e| e.to_string())?;
        let writhe: i64 = cs.iter().map(|c| c.sign as i64).sum();
        ensure(writhe == 0, || format!("{}: writhe {writhe}", tag()))?;
        let top: Vec<_> = cs.iter().filter(|c| c.row > n).collect();
        ensure(top.len() == n - 1 && top.iter().all(|c| c.sign == 1), || format!("{}: top half {top:?}", tag()))?;
        ensure(cs.len() == 2 * (n - 1), || format!("{}: {} crossings", tag(), cs.len()))?;
        let f = linkdiag::front_stats(&g).map_err(|e| e.to_string())?;
        ensure(f.tb == -ni && f.rot == 0, || format!("{}: tb={} rot={}", tag(), f.tb, f.rot))?;
        let comps = linkdiag::components(&g).count() as i64;
        ensure((comps - ni).rem_euclid(2) == 0, || format!("{}: {comps} components", tag()))?;
        ensure((f.tb - f.rot - comps).rem_euclid(2) == 0, || format!("{}: tb-rot parity", tag()))?;
        let s = linkdiag::seifert_stats(&g).map_err(|e| e.to_string())?;
        ensure(s.euler == 2 - ni, || format!("{}: euler {}", tag(), s.euler))?;
    }
    Ok(format!("{} compatible pairs, 8 invariants each", pairs.len()))
}

fn c5_trefoil() -> Check {
    let plus: Permutation = "4 2 5 3 1 6".parse().map_err(|e| format!("{e}"))?;
    let minus: Permutation = "3 1 5 2 6 4".parse().map_err(|e| format!("{e}"))?;
    let hp = HalfGrid::perm_decode(&plus).map_err(|e| e.to_string())?;
    let hm = HalfGrid::perm_decode(&minus).map_err(|e| e.to_string())?;
    let g = hp.assemble_unoriented(&hm).map_err(|e| e.to_string())?;
    ensure(g.size() == 6 && !g.is_oriented(), || format!("grid {g}"))?;
    let comps = linkdiag::components(&g).count();
    ensure(comps == 1, || format!("{comps} components"))?;

    let reference = pd_bracket(&RIGHT_TREFOIL_PD);
    let want = LaurentPoly::from_terms(&[(-1, 5), (-1, -3), (1, -7)]);
    ensure(reference == want, || format!("PD oracle gave {reference}"))?;
    let got = kauffman_bracket(&g).map_err(|e| e.to_string())?;
    let w = linkdiag::writhe(&g.orient()).map_err(|e| e.to_string())?;
    let k = (w - pd_writhe(&RIGHT_TREFOIL_PD)) as i32;
    ensure(got == &reference * &framing(k), || format!("bracket {got}, reference {reference}, k={k}"))?;

    let p = half_grid_presentation(&plus, &minus).map_err(|e| e.to_string())?;
    let paper: Vec<Vec<i32>> =
        vec![vec![1, 2, 3, 4, 5, 6], vec![1, 3, 5, 6], vec![1, 6], vec![2, 4, 5, 6], vec![4, 6]];
    ensure(p.generator_count == 6 && p.relators == paper, || format!("presentation {p}"))?;
    let ab = abelianization(&p);
    ensure(ab.free_rank == 1 && ab.torsion.is_empty(), || format!("abelianization {ab}"))?;
    Ok(format!("bracket {got} (k={k}), 5 relators, H1 = {ab}"))
}

fn c6_codec() -> Check {
    let mut count = 0;
    for n in 1..=4 {
        let mut seen = HashSet::new();
        for sigma in Permutation::all(2 * n) {
            let h = HalfGrid::perm_decode(&sigma).map_err(|e| e.to_string())?;
            ensure(valid_half_grid(&h, n), || format!("{sigma} decodes to {h}"))?;
            ensure(h.perm_encode() == sigma, || format!("{sigma} does not round trip"))?;
            seen.insert(h);
            count += 1;
        }
        // decode is injective, so every half grid of this size was produced
        ensure(seen.len() == (1..=2 * n).product::<usize>(), || format!("n={n}: {} distinct", seen.len()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10_000 {
        let h = random_half_grid(&mut rng, 10);
        let back = HalfGrid::perm_decode(&h.perm_encode()).map_err(|e| e.to_string())?;
        ensure(back == h, || format!("{h} does not round trip"))?;
    }
    Ok(format!("{count} exhaustive + 10000 random at n=10"))
}

fn c7_dual_membership() -> Check {
    let levels = trees_by_size(5)?;
    let mut count = 0;
    let mut oriented = 0;
    for ts in &levels {
        for a in ts {
            for b in ts {
                let g = TreePair::new(a.clone(), b.clone()).map_err(|e| e.to_string())?;
                let s = g.is_oriented();
                let e = g.preserves_e_signs().map_err(|e| e.to_string())?;
                ensure(s == e, || format!("{g}: n-sign says {s}, action says {e}"))?;
                count += 1;
                oriented += s as usize;
            }
        }
    }
    Ok(format!("{count} pairs, {oriented} oriented"))
}

/// Representatives of half grids up to swapping X and O within rows: the
/// permutations with `σ(2i-1) < σ(2i)` for every row.
fn row_pair_classes(n: usize) -> Vec<Permutation> {
    Permutation::all(2 * n)
        .into_iter()
        .filter(|s| (1..=n).all(|i| s.apply(2 * i - 1) < s.apply(2 * i)))
        .collect()
}

/// Swaps X and O in the rows selected by `mask`.
fn swap_rows(sigma: &Permutation, mask: u32) -> Permutation {
    let mut v = sigma.images().to_vec();
    for i in 0..v.len() / 2 {
        if mask >> i & 1 == 1 {
            v.swap(2 * i, 2 * i + 1);
        }
    }
    Permutation::new(v).expect("still a permutation")
}

/// Presentation equality and free rank for one pair; returns the presentation
/// and component count so callers can compare classes.
fn presentation_case(a: &Permutation, b: &Permutation) -> Result<(Vec<Vec<i32>>, usize), String> {
    let ha = HalfGrid::perm_decode(a).map_err(|e| e.to_string())?;
    let hb = HalfGrid::perm_decode(b).map_err(|e| e.to_string())?;
    let g = ha.assemble_unoriented(&hb).map_err(|e| e.to_string())?;
    let hp = half_grid_presentation(a, b).map_err(|e| e.to_string())?;
    let gp = grid_presentation(&g);
    ensure(hp.same_relators(&gp), || format!("({a}) ({b}): {:?} vs {:?}", hp.relators, gp.relators))?;
    let comps = linkdiag::components(&g).count();
    let rank = abelianization(&hp).free_rank;
    ensure(rank == comps, || format!("({a}) ({b}): free rank {rank}, {comps} components"))?;
    Ok((hp.sorted_relators(), comps))
}

fn c8_presentations() -> Check {
    let mut direct = 0usize;
    // every pair of half grids, n <= 3
    for n in 1..=3 {
        let perms = Permutation::all(2 * n);
        for a in &perms {
            for b in &perms {
                presentation_case(a, b)?;
                direct += 1;
            }
        }
    }
    // n = 4: every pair of row-pair classes. Both presentations and the
    // component count only see which two columns share each row, so all
    // 2^4 * 2^4 pairs in a class pair give the same answer; that is checked
    // exhaustively for a sample of class pairs below.
    let reps = row_pair_classes(4);
    ensure(reps.len() == 2520, || format!("{} classes", reps.len()))?;
    let results: Vec<Result<(), String>> = Exec::default().map(&reps, |a| {
        for b in &reps {
            presentation_case(a, b)?;
        }
        Ok(())
    });
    results.into_iter().collect::<Result<Vec<()>, String>>()?;
    let class_pairs = reps.len() * reps.len();

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut members = 0;
    for _ in 0..200 {
        let a = &reps[rng.gen_range(0..reps.len())];
        let b = &reps[rng.gen_range(0..reps.len())];
        let base = presentation_case(a, b)?;
        for ma in 0..16 {
            for mb in 0..16 {
                let got = presentation_case(&swap_rows(a, ma), &swap_rows(b, mb))?;
                ensure(got == base, || format!("row swap changed the answer for ({a}) ({b})"))?;
                members += 1;
            }
        }
    }
    Ok(format!(
        "{direct} pairs n<=3 directly, {class_pairs} class pairs at n=4 ({} pairs), {members} class members rechecked",
        class_pairs * 256
    ))
}

fn c9_group_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let id = TreePair::identity();
    let err = |e: thompson_links::thompson::ThompsonError| e.to_string();
    for _ in 0..1000 {
        let (g, h, k) = (random_pair(&mut rng, 5), random_pair(&mut rng, 5), random_pair(&mut rng, 5));
        ensure(g.multiply(&g.inverse()).map_err(err)? == id, || format!("g g^-1 != 1 for {g}"))?;
        ensure(g.inverse().multiply(&g).map_err(err)? == id, || format!("g^-1 g != 1 for {g}"))?;
        let left = g.multiply(&h).map_err(err)?.multiply(&k).map_err(err)?;
        let right = g.multiply(&h.multiply(&k).map_err(err)?).map_err(err)?;
        ensure(left == right, || format!("associativity fails for {g}, {h}, {k}"))?;
        let r = g.reduce();
        ensure(r.reduce() == r && r.is_reduced(), || format!("reduce not idempotent on {g}"))?;
        let i = rng.gen_range(0..g.leaves());
        let refined = g.add_caret(i).map_err(err)?;
        ensure(refined.reduce() == r, || format!("caret {i} on {g} does not reduce back"))?;
        let target = g.bottom().add_caret(rng.gen_range(0..g.leaves())).map_err(err)?;
        let moved = g.refine_to(&target).map_err(err)?;
        ensure(moved.bottom() == &target && moved.reduce() == r, || format!("refine_to on {g}"))?;
    }
    Ok("1000 random triples, n <= 5".into())
}

fn c10_mirror() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut max_crossings = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let a = random_half_grid(&mut rng, n);
        let b = random_half_grid(&mut rng, n);
        let ab = a.assemble_unoriented(&b).map_err(|e| e.to_string())?;
        let ba = b.assemble_unoriented(&a).map_err(|e| e.to_string())?;
        max_crossings = max_crossings.max(linkdiag::crossing_positions(&ab).len());
        let x = kauffman_bracket(&ab).map_err(|e| format!("{a} / {b}: {e}"))?;
        let y = kauffman_bracket(&ba).map_err(|e| format!("{b} / {a}: {e}"))?;
        ensure(y == x.mirror(), || format!("{a} / {b}: {x} vs {y}"))?;
    }
    Ok(format!("100 random pairs, up to {max_crossings} crossings"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "cardinality", budget: secs(1), run: c1_cardinality },
        Criterion { id: 2, name: "construction validity", budget: secs(1), run: c2_construction },
        Criterion { id: 3, name: "compatibility", budget: secs(10), run: c3_compatibility },
        Criterion { id: 4, name: "invariant battery", budget: secs(60), run: c4_battery },
        Criterion { id: 5, name: "trefoil golden", budget: secs(1), run: c5_trefoil },
        Criterion { id: 6, name: "codec round trip", budget: None, run: c6_codec },
        Criterion { id: 7, name: "dual membership", budget: None, run: c7_dual_membership },
        Criterion { id: 8, name: "presentation equality", budget: secs(60), run: c8_presentations },
        Criterion { id: 9, name: "group algebra", budget: None, run: c9_group_algebra },
        Criterion { id: 10, name: "mirror bracket", budget: None, run: c10_mirror },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let over = c.budget.is_some_and(|b| took > b);
        let budget = c.budget.map(|b| format!(" / {}s", b.as_secs())).unwrap_or_default();
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{:>2}] {:<22} {:>8.3}s{budget}  {detail}", c.id, c.name, took.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

