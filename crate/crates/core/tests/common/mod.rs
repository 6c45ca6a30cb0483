//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use thompson_links::linkdiag::LaurentPoly;
use thompson_links::{BinaryTree, HalfGrid, Permutation, TreePair};

/// Kauffman bracket of a diagram in PD notation, by brute force over states.
///
/// Each crossing `[i, j, k, l]` lists its edge labels counterclockwise starting
/// from the incoming under-strand. The A-smoothing joins `i` with `j` and `k`
/// with `l`; the B-smoothing joins `i` with `l` and `j` with `k`.
pub fn pd_bracket(pd: &[[usize; 4]]) -> LaurentPoly {
    let edges = pd.iter().flatten().copied().max().unwrap_or(0);
    let d = LaurentPoly::from_terms(&[(-1, 2), (-1, -2)]);
    let mut total = LaurentPoly::zero();
    for state in 0u32..(1 << pd.len()) {
        let mut parent: Vec<usize> = (0..=edges).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        };
        let mut a_count = 0i32;
        for (bit, &[i, j, k, l]) in pd.iter().enumerate() {
            if state >> bit & 1 == 0 {
                a_count += 1;
                union(i, j);
                union(k, l);
            } else {
                union(i, l);
                union(j, k);
            }
        }
        let loops = (1..=edges).filter(|&e| find(&mut parent, e) == e).count();
        let b_count = pd.len() as i32 - a_count;
        let term = &LaurentPoly::monomial(1, a_count - b_count) * &d.pow(loops as u32 - 1);
        total = &total + &term;
    }
    total
}

/// Writhe of a PD diagram: a crossing is positive when the over-strand runs
/// from its `l` edge to its `j` edge.
pub fn pd_writhe(pd: &[[usize; 4]]) -> i64 {
    let edges = pd.iter().flatten().copied().max().unwrap_or(0);
    pd.iter()
        .map(|&[_, j, _, l]| if j == l % edges + 1 { 1 } else { -1 })
        .sum()
}

/// The standard right-handed trefoil diagram.
pub const RIGHT_TREFOIL_PD: [[usize; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];

pub fn random_tree(rng: &mut impl Rng, n: usize) -> BinaryTree {
    BinaryTree::enumerate(n).choose(rng).unwrap().clone()
}

pub fn random_pair(rng: &mut impl Rng, max_leaves: usize) -> TreePair {
    let n = rng.gen_range(1..=max_leaves);
    TreePair::new(random_tree(rng, n), random_tree(rng, n)).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, d: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=d).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

pub fn random_half_grid(rng: &mut impl Rng, n: usize) -> HalfGrid {
    HalfGrid::perm_decode(&random_perm(rng, 2 * n)).unwrap()
}

/// Multiplies out `(-A^3)^k` for any integer `k`.
pub fn framing(k: i32) -> LaurentPoly {
    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, 3 * k)
}
