//! Link group presentations from grids and half grids, and their abelianization.

use std::fmt;

use thiserror::Error;

use crate::halfgrid::{GridDiagram, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkGroupError {
    #[error("permutations have degrees {0} and {1}; need equal even degrees")]
    DegreeMismatch(usize, usize),
}

/// Generators `x1..xN` and relator words. A letter `i > 0` is `x_i`, `-i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    pub generator_count: usize,
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    /// Relators ordered by length, then lexicographically.
    pub fn sorted_relators(&self) -> Vec<Vec<i32>> {
        let mut r = self.relators.clone();
        r.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        r
    }

    pub fn same_relators(&self, other: &GroupPresentation) -> bool {
        self.generator_count == other.generator_count && self.sorted_relators() == other.sorted_relators()
    }

    /// A presentation in GAP's input syntax.
    pub fn to_gap(&self) -> String {
        let mut out = format!("F := FreeGroup({});;\nx := GeneratorsOfGroup(F);;\nG := F / [\n", self.generator_count);
        let words: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                if w.is_empty() {
                    return "  One(F)".to_string();
                }
                let letters: Vec<String> = w
                    .iter()
                    .map(|&l| if l > 0 { format!("x[{l}]") } else { format!("x[{}]^-1", -l) })
                    .collect();
                format!("  {}", letters.join("*"))
            })
            .collect();
        out.push_str(&words.join(",\n"));
        out.push_str("\n];\n");
        out
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens={}", self.generator_count)?;
        for w in &self.relators {
            let letters: Vec<String> =
                w.iter().map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) }).collect();
            writeln!(f, "rel: {}", letters.join(" "))?;
        }
        Ok(())
    }
}

/// One generator per column; relator `j` lists, left to right, the columns
/// whose vertical segment crosses the horizontal line between rows `j` and `j+1`.
pub fn grid_presentation(g: &GridDiagram) -> GroupPresentation {
    let m = g.size();
    let spans = g.column_spans();
    let relators = (1..m)
        .map(|j| {
            (1..=m)
                .filter(|&c| spans[c - 1].0 <= j && j < spans[c - 1].1)
                .map(|c| c as i32)
                .collect()
        })
        .collect();
    GroupPresentation { generator_count: m, relators }
}

/// The word `x1 ... x2n`, then for each side the words left after deleting
/// `x_σ(1), ..., x_σ(2i)` for `i = 1..n-1`: plus side first.
pub fn half_grid_presentation(plus: &Permutation, minus: &Permutation) -> Result<GroupPresentation, LinkGroupError> {
    let d = plus.degree();
    if d != minus.degree() || d % 2 == 1 {
        return Err(LinkGroupError::DegreeMismatch(d, minus.degree()));
    }
    let n = d / 2;
    let full: Vec<i32> = (1..=d as i32).collect();
    let mut relators = vec![full.clone()];
    for sigma in [plus, minus] {
        let mut removed = vec![false; d + 1];
        for i in 1..n {
            removed[sigma.apply(2 * i - 1)] = true;
            removed[sigma.apply(2 * i)] = true;
            relators.push(full.iter().copied().filter(|&x| !removed[x as usize]).collect());
        }
    }
    Ok(GroupPresentation { generator_count: d, relators })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<u64>,
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        if self.free_rank > 0 || parts.is_empty() {
            parts.insert(0, if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        f.write_str(&parts.join(" + "))
    }
}

pub fn abelianization(p: &GroupPresentation) -> Abelianization {
    let cols = p.generator_count;
    let mut a = Matrix { rows: p.relators.len(), cols, cells: vec![0; p.relators.len() * cols] };
    for (i, w) in p.relators.iter().enumerate() {
        for &l in w {
            *a.at(i, l.unsigned_abs() as usize - 1) += l.signum() as i128;
        }
    }
    let diag = smith_diagonal(&mut a);
    let rank = diag.len();
    let torsion = diag.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect();
    Abelianization { free_rank: cols - rank, torsion }
}

struct Matrix {
    rows: usize,
    cols: usize,
    cells: Vec<i128>,
}

impl Matrix {
    fn at(&mut self, i: usize, j: usize) -> &mut i128 {
        &mut self.cells[i * self.cols + j]
    }

    fn get(&self, i: usize, j: usize) -> i128 {
        self.cells[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i != k {
            for j in 0..self.cols {
                self.cells.swap(i * self.cols + j, k * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j != k {
            for i in 0..self.rows {
                self.cells.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }
}

/// Nonzero diagonal of the Smith normal form, ascending under divisibility.
fn smith_diagonal(a: &mut Matrix) -> Vec<i128> {
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut pivot = None;
        for i in t..rows {
            for j in t..cols {
                let v = a.get(i, j).abs();
                if v != 0 && pivot.is_none_or(|(_, _, b)| v < b) {
                    pivot = Some((i, j, v));
                }
            }
        }
        let Some((pr, pc, _)) = pivot else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let mut clean = true;
            let p = a.get(t, t);
            let unit = p.abs() == 1;
            let quot = |v: i128| if unit { v * p } else { v / p };
            for i in t + 1..rows {
                let q = quot(a.get(i, t));
                if q != 0 {
                    for j in t..cols {
                        let v = a.get(t, j);
                        *a.at(i, j) -= q * v;
                    }
                }
                clean &= a.get(i, t) == 0;
            }
            for j in t + 1..cols {
                let q = quot(a.get(t, j));
                if q != 0 {
                    for i in 0..rows {
                        let v = a.get(i, t);
                        *a.at(i, j) -= q * v;
                    }
                }
                clean &= a.get(t, j) == 0;
            }
            if clean && unit {
                break;
            }
            if clean {
                // the pivot must divide the rest of the block
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a.get(i, j) % p != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            let v = a.get(i, j);
                            *a.at(t, j) += v;
                        }
                    }
                }
            }
            // move a smaller remainder into the pivot position
            let (mut br, mut bc) = (t, t);
            for i in t..rows {
                if a.get(i, t) != 0 && a.get(i, t).abs() < a.get(br, bc).abs() {
                    (br, bc) = (i, t);
                }
            }
            for j in t..cols {
                if a.get(t, j) != 0 && a.get(t, j).abs() < a.get(br, bc).abs() {
                    (br, bc) = (t, j);
                }
            }
            a.swap_rows(t, br);
            a.swap_cols(t, bc);
        }
        diag.push(a.get(t, t).abs());
        t += 1;
    }
    diag
}
