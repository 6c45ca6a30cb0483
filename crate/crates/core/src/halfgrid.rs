//! Half grids, grid diagrams and the permutation codec.
//!
//! Columns and rows are 1-based; rows are numbered bottom to top.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dyadic::{cmp_len, cmp_mid, DyadicError, SdInterval, SdPartition, Sign};
use crate::thompson::BinaryTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HalfGridError {
    #[error("invalid half grid: {0}")]
    InvalidHalfGrid(String),
    #[error("invalid grid diagram: {0}")]
    InvalidGrid(String),
    #[error("half grids have {0} and {1} rows")]
    SizeMismatch(usize, usize),
    #[error("half grids disagree in column {0}")]
    Incompatible(usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("permutation degree {0} is odd")]
    OddDegree(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Dyadic(#[from] DyadicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    X,
    O,
}

impl Mark {
    pub fn swap(self) -> Mark {
        match self {
            Mark::X => Mark::O,
            Mark::O => Mark::X,
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mark::X => "X",
            Mark::O => "O",
        })
    }
}

/// An `n × 2n` array with one X and one O per row and one mark per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfGrid {
    n: usize,
    x_cols: Vec<usize>,
    o_cols: Vec<usize>,
}

impl HalfGrid {
    pub fn new(x_cols: Vec<usize>, o_cols: Vec<usize>) -> Result<Self, HalfGridError> {
        let bad = |m: String| HalfGridError::InvalidHalfGrid(m);
        let n = x_cols.len();
        if n == 0 || o_cols.len() != n {
            return Err(bad(format!("{} X marks and {} O marks", n, o_cols.len())));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &c in x_cols.iter().chain(&o_cols) {
            if c == 0 || c > 2 * n {
                return Err(bad(format!("column {c} outside 1..={}", 2 * n)));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(bad(format!("column {c} has two marks")));
            }
        }
        Ok(HalfGrid { n, x_cols, o_cols })
    }

    /// `H_I`: the half grid built from a standard dyadic partition.
    pub fn from_partition(p: &SdPartition) -> Result<Self, HalfGridError> {
        let n = p.len();
        let spanning = p.spanning_intervals();
        debug_assert!(spanning.windows(2).all(|w| cmp_mid(&w[0], &w[1]).is_lt()));

        let mut plus: Vec<SdInterval> =
            spanning.iter().copied().filter(|iv| iv.sign() == Sign::Plus).collect();
        plus.sort_by(cmp_len);
        assert!(plus.windows(2).all(|w| cmp_len(&w[0], &w[1]).is_lt()), "length order has ties");
        let row_of = |iv: &SdInterval| plus.iter().position(|q| q == iv).map(|i| i + 1);

        let mut x_cols = vec![0; n];
        let mut o_cols = vec![0; n];
        o_cols[n - 1] = 1;
        for (rank, iv) in spanning.iter().enumerate() {
            let col = rank + 2;
            match iv.sign() {
                Sign::Plus => {
                    let row = row_of(iv).expect("positive interval is ranked");
                    x_cols[row - 1] = col;
                }
                Sign::Minus => {
                    let row = row_of(&iv.conjugate()?).expect("conjugate of a negative interval is positive");
                    o_cols[row - 1] = col;
                }
            }
        }
        Self::new(x_cols, o_cols)
    }

    pub fn from_tree(t: &BinaryTree) -> Result<Self, HalfGridError> {
        Self::from_partition(&t.to_partition().map_err(|e| HalfGridError::Parse(e.to_string()))?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_cols(&self) -> &[usize] {
        &self.x_cols
    }

    pub fn o_cols(&self) -> &[usize] {
        &self.o_cols
    }

    /// Mark type in each column `1..=2n` (index 0 is column 1).
    pub fn column_marks(&self) -> Vec<Mark> {
        let mut out = vec![Mark::X; 2 * self.n];
        for &c in &self.o_cols {
            out[c - 1] = Mark::O;
        }
        out
    }

    /// Row (1-based) and mark in column `c`.
    pub fn column_mark(&self, c: usize) -> (usize, Mark) {
        if let Some(i) = self.x_cols.iter().position(|&x| x == c) {
            (i + 1, Mark::X)
        } else {
            let i = self.o_cols.iter().position(|&o| o == c).expect("every column is marked");
            (i + 1, Mark::O)
        }
    }

    pub fn is_compatible(&self, other: &HalfGrid) -> Result<bool, HalfGridError> {
        Ok(self.first_disagreement(other)?.is_none())
    }

    /// First column whose marks differ.
    pub fn first_disagreement(&self, other: &HalfGrid) -> Result<Option<usize>, HalfGridError> {
        if self.n != other.n {
            return Err(HalfGridError::SizeMismatch(self.n, other.n));
        }
        let (a, b) = (self.column_marks(), other.column_marks());
        Ok((0..a.len()).find(|&i| a[i] != b[i]).map(|i| i + 1))
    }

    /// Compatibility read off the permutations: `σ⁻¹(i)` has the same parity on both sides.
    pub fn is_compatible_by_perm(&self, other: &HalfGrid) -> Result<bool, HalfGridError> {
        if self.n != other.n {
            return Err(HalfGridError::SizeMismatch(self.n, other.n));
        }
        let a = self.perm_encode().inverse();
        let b = other.perm_encode().inverse();
        Ok(a.images().iter().zip(b.images()).all(|(p, q)| p % 2 == q % 2))
    }

    /// `σ = (X(1) O(1) X(2) O(2) ... X(n) O(n))`.
    pub fn perm_encode(&self) -> Permutation {
        let images = self.x_cols.iter().zip(&self.o_cols).flat_map(|(&x, &o)| [x, o]).collect();
        Permutation(images)
    }

    pub fn perm_decode(sigma: &Permutation) -> Result<HalfGrid, HalfGridError> {
        let d = sigma.degree();
        if d % 2 == 1 {
            return Err(HalfGridError::OddDegree(d));
        }
        let x = sigma.0.iter().step_by(2).copied().collect();
        let o = sigma.0.iter().skip(1).step_by(2).copied().collect();
        HalfGrid::new(x, o)
    }

    /// Stacks `self` on top of the flipped, mark-swapped `bottom`.
    pub fn assemble(&self, bottom: &HalfGrid) -> Result<GridDiagram, HalfGridError> {
        if let Some(c) = self.first_disagreement(bottom)? {
            return Err(HalfGridError::Incompatible(c));
        }
        let (x, o) = self.stack(bottom);
        GridDiagram::new(x, o, true)
    }

    /// Same placement as [`assemble`](Self::assemble) without requiring compatibility.
    pub fn assemble_unoriented(&self, bottom: &HalfGrid) -> Result<GridDiagram, HalfGridError> {
        if self.n != bottom.n {
            return Err(HalfGridError::SizeMismatch(self.n, bottom.n));
        }
        let (x, o) = self.stack(bottom);
        GridDiagram::new(x, o, false)
    }

    fn stack(&self, bottom: &HalfGrid) -> (Vec<usize>, Vec<usize>) {
        let mut x: Vec<usize> = bottom.o_cols.iter().rev().copied().collect();
        let mut o: Vec<usize> = bottom.x_cols.iter().rev().copied().collect();
        x.extend(&self.x_cols);
        o.extend(&self.o_cols);
        (x, o)
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for HalfGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; X={}; O={}", self.n, join(&self.x_cols), join(&self.o_cols))
    }
}

/// Splits `"k=v; k=v; ..."` into values for the expected keys, in order.
fn fields<'a>(s: &'a str, keys: &[&str]) -> Result<Vec<&'a str>, HalfGridError> {
    let parts: Vec<&str> = s.trim().split(';').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.len() != keys.len() {
        return Err(HalfGridError::Parse(format!("expected fields {}", keys.join(", "))));
    }
    parts
        .iter()
        .zip(keys)
        .map(|(p, k)| {
            let (key, val) = p
                .split_once('=')
                .ok_or_else(|| HalfGridError::Parse(format!("expected '{k}=...', found {p:?}")))?;
            if key.trim() != *k {
                return Err(HalfGridError::Parse(format!("expected '{k}=...', found {p:?}")));
            }
            Ok(val.trim())
        })
        .collect()
}

fn parse_cols(s: &str) -> Result<Vec<usize>, HalfGridError> {
    s.split(',')
        .map(|c| c.trim().parse::<usize>().map_err(|_| HalfGridError::Parse(format!("bad column {c:?}"))))
        .collect()
}

fn parse_n(s: &str, len: usize) -> Result<(), HalfGridError> {
    let n: usize = s.parse().map_err(|_| HalfGridError::Parse(format!("bad size {s:?}")))?;
    if n != len {
        return Err(HalfGridError::Parse(format!("size {n} but {len} rows listed")));
    }
    Ok(())
}

impl FromStr for HalfGrid {
    type Err = HalfGridError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f = fields(s, &["n", "X", "O"])?;
        let (x, o) = (parse_cols(f[1])?, parse_cols(f[2])?);
        parse_n(f[0], x.len())?;
        HalfGrid::new(x, o)
    }
}

/// A square grid with one X and one O per row.
///
/// Oriented grids also have one X and one O per column. Unoriented grids only
/// need two marks per column; their marks are read as unlabelled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    size: usize,
    x_cols: Vec<usize>,
    o_cols: Vec<usize>,
    oriented: bool,
}

impl GridDiagram {
    pub fn new(x_cols: Vec<usize>, o_cols: Vec<usize>, oriented: bool) -> Result<Self, HalfGridError> {
        let bad = |m: String| HalfGridError::InvalidGrid(m);
        let size = x_cols.len();
        if size == 0 || o_cols.len() != size {
            return Err(bad(format!("{} X marks and {} O marks", size, o_cols.len())));
        }
        let mut xs = vec![0u32; size + 1];
        let mut os = vec![0u32; size + 1];
        for (r, (&x, &o)) in x_cols.iter().zip(&o_cols).enumerate() {
            for c in [x, o] {
                if c == 0 || c > size {
                    return Err(bad(format!("column {c} outside 1..={size}")));
                }
            }
            if x == o {
                return Err(bad(format!("row {} has both marks in column {x}", r + 1)));
            }
            xs[x] += 1;
            os[o] += 1;
        }
        for c in 1..=size {
            if oriented && (xs[c] != 1 || os[c] != 1) {
                return Err(bad(format!("column {c} has {} X and {} O", xs[c], os[c])));
            }
            if xs[c] + os[c] != 2 {
                return Err(bad(format!("column {c} has {} marks", xs[c] + os[c])));
            }
        }
        Ok(GridDiagram { size, x_cols, o_cols, oriented })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn x_cols(&self) -> &[usize] {
        &self.x_cols
    }

    pub fn o_cols(&self) -> &[usize] {
        &self.o_cols
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    /// Every mark as `(column, row, mark)`, sorted by column then row.
    pub fn marks(&self) -> Vec<(usize, usize, Mark)> {
        let mut out: Vec<_> = (0..self.size)
            .flat_map(|r| [(self.x_cols[r], r + 1, Mark::X), (self.o_cols[r], r + 1, Mark::O)])
            .collect();
        out.sort_by_key(|&(c, r, _)| (c, r));
        out
    }

    /// The two marks of column `c` as `(row, mark)`, lower first.
    pub fn column(&self, c: usize) -> [(usize, Mark); 2] {
        let mut out = [(0, Mark::X); 2];
        let mut k = 0;
        for r in 0..self.size {
            if self.x_cols[r] == c {
                out[k] = (r + 1, Mark::X);
                k += 1;
            }
            if self.o_cols[r] == c {
                out[k] = (r + 1, Mark::O);
                k += 1;
            }
        }
        assert!(k == 2, "column has two marks");
        out
    }

    /// Lower and upper row of every column, indexed by `column - 1`.
    pub fn column_spans(&self) -> Vec<(usize, usize)> {
        let mut spans = vec![(0, 0); self.size];
        for r in 1..=self.size {
            for c in [self.x_cols[r - 1], self.o_cols[r - 1]] {
                let s = &mut spans[c - 1];
                if s.0 == 0 {
                    s.0 = r;
                } else {
                    s.1 = r;
                }
            }
        }
        spans
    }

    /// The same coordinates read as an unoriented grid.
    pub fn unoriented(&self) -> GridDiagram {
        GridDiagram { oriented: false, ..self.clone() }
    }

    /// An orientation of the underlying unoriented link: each component is
    /// walked from the lower mark of its smallest column, going up first.
    pub fn orient(&self) -> GridDiagram {
        if self.oriented {
            return self.clone();
        }
        let m = self.size;
        let mut x_cols = vec![0; m];
        let mut o_cols = vec![0; m];
        let mut row_done = vec![false; m + 1];
        let spans = self.column_spans();
        for c0 in 1..=m {
            let r0 = spans[c0 - 1].0;
            if row_done[r0] {
                continue;
            }
            // at (c, r) labelled O, step vertically to X, then horizontally to O
            let (mut c, mut r) = (c0, r0);
            loop {
                let (ra, rb) = spans[c - 1];
                let up = if ra == r { rb } else { ra };
                let other = if self.x_cols[up - 1] == c { self.o_cols[up - 1] } else { self.x_cols[up - 1] };
                x_cols[up - 1] = c;
                o_cols[up - 1] = other;
                row_done[up] = true;
                c = other;
                r = up;
                if c == c0 && r == r0 {
                    break;
                }
            }
        }
        GridDiagram::new(x_cols, o_cols, true).expect("orientation of a valid grid is valid")
    }

    /// Quarter turn counterclockwise: the mark at `(c, r)` moves to `(m+1-r, c)`.
    /// Unoriented grids are oriented first and stay unoriented.
    pub fn rotate90(&self) -> GridDiagram {
        let g = self.orient();
        let m = self.size;
        let mut x_cols = vec![0; m];
        let mut o_cols = vec![0; m];
        for r in 1..=m {
            x_cols[g.x_cols[r - 1] - 1] = m + 1 - r;
            o_cols[g.o_cols[r - 1] - 1] = m + 1 - r;
        }
        GridDiagram::new(x_cols, o_cols, self.oriented).expect("rotation of a valid grid is valid")
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}; X={}; O={}; oriented={}",
            self.size,
            join(&self.x_cols),
            join(&self.o_cols),
            self.oriented
        )
    }
}

impl FromStr for GridDiagram {
    type Err = HalfGridError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f = fields(s, &["n", "X", "O", "oriented"])?;
        let (x, o) = (parse_cols(f[1])?, parse_cols(f[2])?);
        parse_n(f[0], x.len())?;
        let oriented = f[3]
            .parse::<bool>()
            .map_err(|_| HalfGridError::Parse(format!("bad flag {:?}", f[3])))?;
        GridDiagram::new(x, o, oriented)
    }
}

/// A bijection of `{1, ..., d}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, HalfGridError> {
        let d = images.len();
        let mut seen = vec![false; d + 1];
        for &i in &images {
            if i == 0 || i > d {
                return Err(HalfGridError::NotAPermutation(format!("image {i} outside 1..={d}")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(HalfGridError::NotAPermutation(format!("{i} appears twice")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((1..=d).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Every permutation of degree `d` in lexicographic order.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=d).collect();
        let mut out = vec![Permutation(cur.clone())];
        // standard next-permutation
        while let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = HalfGridError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| HalfGridError::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if images.is_empty() {
            return Err(HalfGridError::Parse("empty permutation".into()));
        }
        Permutation::new(images)
    }
}
