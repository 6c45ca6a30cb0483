//! Links traced out of grid diagrams.
//!
//! Rows run from X to O and sit above the columns, which run from O to X.

mod bracket;
mod diagram;
mod front;
pub mod render;

use thiserror::Error;

use crate::halfgrid::{GridDiagram, HalfGrid, Mark};

pub use bracket::{kauffman_bracket, kauffman_bracket_with, loop_value, LaurentPoly, BRACKET_CAP};
pub use diagram::{seifert_stats, PlanarDiagram, SeifertStats};
pub use front::{corner, front_stats, Corner, FrontStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkDiagError {
    #[error("crossing signs need an oriented grid")]
    UnorientedDiagram,
    #[error("{0} crossings exceed the bracket cap of {BRACKET_CAP}")]
    TooManyCrossings(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Horizontal,
    Vertical,
}

/// One straight piece of the link: a row from X to O or a column from O to X.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub kind: SegmentKind,
    /// Row of a horizontal segment, column of a vertical one.
    pub fixed: usize,
    pub span: (usize, usize),
    /// `+1` toward larger coordinates, `-1` toward smaller.
    pub dir: i8,
}

impl Segment {
    fn strictly_inside(&self, t: usize) -> bool {
        self.span.0 < t && t < self.span.1
    }
}

/// How crossing signs are read from the over and under directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// `+1` when the cross product `over × under` is positive.
    #[default]
    RightHanded,
    /// The opposite reading. Only useful for checking that the harness notices.
    Flipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub row: usize,
    pub col: usize,
    /// Unit direction `(dx, dy)` of the horizontal strand.
    pub over_dir: (i8, i8),
    /// Unit direction `(dx, dy)` of the vertical strand.
    pub under_dir: (i8, i8),
    pub sign: i8,
}

fn sign_of(over: (i8, i8), under: (i8, i8), conv: SignConvention) -> i8 {
    let cross = over.0 * under.1 - over.1 * under.0;
    match conv {
        SignConvention::RightHanded => cross.signum(),
        SignConvention::Flipped => -cross.signum(),
    }
}

fn row_segment(g: &GridDiagram, r: usize) -> Segment {
    let (x, o) = (g.x_cols()[r - 1], g.o_cols()[r - 1]);
    Segment { kind: SegmentKind::Horizontal, fixed: r, span: (x.min(o), x.max(o)), dir: if o > x { 1 } else { -1 } }
}

fn column_segment(g: &GridDiagram, c: usize) -> Segment {
    let [(ra, ma), (rb, _)] = g.column(c);
    // lower mark is O: the column runs upward
    let dir = if ma == Mark::O { 1 } else { -1 };
    Segment { kind: SegmentKind::Vertical, fixed: c, span: (ra, rb), dir }
}

/// All `2m` segments of an oriented grid: rows first, then columns.
pub fn segments(g: &GridDiagram) -> Result<Vec<Segment>, LinkDiagError> {
    if !g.is_oriented() {
        return Err(LinkDiagError::UnorientedDiagram);
    }
    let m = g.size();
    Ok((1..=m).map(|r| row_segment(g, r)).chain((1..=m).map(|c| column_segment(g, c))).collect())
}

/// Crossing positions `(row, col)` in row-major order. Orientation is not needed.
pub fn crossing_positions(g: &GridDiagram) -> Vec<(usize, usize)> {
    let m = g.size();
    let cols: Vec<(usize, usize)> = (1..=m).map(|c| column_segment(g, c).span).collect();
    let mut out = Vec::new();
    for r in 1..=m {
        let h = row_segment(g, r);
        for c in h.span.0 + 1..h.span.1 {
            let (lo, hi) = cols[c - 1];
            if lo < r && r < hi {
                out.push((r, c));
            }
        }
    }
    out
}

pub fn crossings(g: &GridDiagram) -> Result<Vec<Crossing>, LinkDiagError> {
    crossings_with(g, SignConvention::RightHanded)
}

pub fn crossings_with(g: &GridDiagram, conv: SignConvention) -> Result<Vec<Crossing>, LinkDiagError> {
    if !g.is_oriented() {
        return Err(LinkDiagError::UnorientedDiagram);
    }
    Ok(crossing_positions(g)
        .into_iter()
        .map(|(row, col)| {
            let h = row_segment(g, row);
            let v = column_segment(g, col);
            debug_assert!(h.strictly_inside(col) && v.strictly_inside(row));
            let over_dir = (h.dir, 0);
            let under_dir = (0, v.dir);
            Crossing { row, col, over_dir, under_dir, sign: sign_of(over_dir, under_dir, conv) }
        })
        .collect())
}

pub fn writhe(g: &GridDiagram) -> Result<i64, LinkDiagError> {
    writhe_with(g, SignConvention::RightHanded)
}

pub fn writhe_with(g: &GridDiagram, conv: SignConvention) -> Result<i64, LinkDiagError> {
    Ok(crossings_with(g, conv)?.iter().map(|c| c.sign as i64).sum())
}

/// Link components, each given by the columns its vertical segments use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Columns of each component, ascending; components ordered by smallest column.
    pub cycles: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }
}

/// A closed walk `column, row, column, row, ...`: each step goes up or down a
/// column to a mark, then along that mark's row to the other mark.
pub(crate) struct Walk {
    /// `(column, row)` of each mark reached by a vertical move, in order.
    pub(crate) turns: Vec<(usize, usize)>,
}

/// Walks of every component of the oriented reading of `g`. For oriented grids
/// each walk starts at the O of its smallest column; unoriented grids are first
/// oriented with [`GridDiagram::orient`].
pub(crate) fn walks(g: &GridDiagram) -> Vec<Walk> {
    let g = g.orient();
    let m = g.size();
    let mut x_row = vec![0; m + 1];
    for (r, &c) in g.x_cols().iter().enumerate() {
        x_row[c] = r + 1;
    }
    let mut done = vec![false; m + 1];
    let mut out = Vec::new();
    for c0 in 1..=m {
        if done[c0] {
            continue;
        }
        let mut turns = Vec::new();
        let mut c = c0;
        loop {
            done[c] = true;
            let r = x_row[c];
            turns.push((c, r));
            c = g.o_cols()[r - 1];
            if c == c0 {
                break;
            }
        }
        out.push(Walk { turns });
    }
    out
}

pub fn components(g: &GridDiagram) -> Components {
    let cycles = walks(g)
        .into_iter()
        .map(|w| {
            let mut cols: Vec<usize> = w.turns.iter().map(|t| t.0).collect();
            cols.sort_unstable();
            cols
        })
        .collect();
    Components { cycles }
}

/// Crossings of the tangle drawn from a half grid: each row joins its X and O,
/// and every mark drops a vertical strand to the bottom edge (upward into an
/// X, downward out of an O).
pub fn tangle_crossings(h: &HalfGrid) -> Vec<Crossing> {
    let n = h.n();
    let mut out = Vec::new();
    for r in 1..=n {
        let (x, o) = (h.x_cols()[r - 1], h.o_cols()[r - 1]);
        let dir: i8 = if o > x { 1 } else { -1 };
        for c in x.min(o) + 1..x.max(o) {
            let (mr, mark) = h.column_mark(c);
            if mr > r {
                let under_dir = (0, if mark == Mark::X { 1 } else { -1 });
                let over_dir = (dir, 0);
                out.push(Crossing { row: r, col: c, over_dir, under_dir, sign: sign_of(over_dir, under_dir, SignConvention::RightHanded) });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfgrid::Permutation;

    fn hg(p: &str) -> HalfGrid {
        HalfGrid::from_partition(&p.parse().unwrap()).unwrap()
    }

    pub(crate) fn trefoil_grid() -> GridDiagram {
        let plus = HalfGrid::perm_decode(&"4 2 5 3 1 6".parse::<Permutation>().unwrap()).unwrap();
        let minus = HalfGrid::perm_decode(&"3 1 5 2 6 4".parse::<Permutation>().unwrap()).unwrap();
        plus.assemble_unoriented(&minus).unwrap()
    }

    #[test]
    fn unknot() {
        let d = hg("0,1");
        let g = d.assemble(&d).unwrap();
        assert_eq!(components(&g).count(), 1);
        assert!(crossings(&g).unwrap().is_empty());
        assert_eq!(writhe(&g).unwrap(), 0);
    }

    #[test]
    fn two_component_unlink() {
        let h = hg("0,1/2,1");
        let g = h.assemble(&h).unwrap();
        assert_eq!(components(&g).cycles, vec![vec![1, 3], vec![2, 4]]);
        let cs = crossings(&g).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(writhe(&g).unwrap(), 0);
        assert_eq!(cs.iter().filter(|c| c.row > 2).map(|c| c.sign).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn trefoil_crossings() {
        let g = trefoil_grid();
        assert_eq!(components(&g).count(), 1);
        assert_eq!(crossing_positions(&g), vec![(2, 4), (3, 2), (4, 3)]);
        assert!(matches!(crossings(&g), Err(LinkDiagError::UnorientedDiagram)));
        let o = g.orient();
        assert!(crossings(&o).unwrap().iter().all(|c| c.sign == 1));
        assert_eq!(writhe(&o).unwrap(), 3);
        assert_eq!(writhe_with(&o, SignConvention::Flipped).unwrap(), -3);
    }

    #[test]
    fn top_half_matches_tangle() {
        for s in ["0,1/2,1", "0,1/4,3/8,1/2,1", "0,1/8,1/4,1/2,3/4,7/8,1"] {
            let h = hg(s);
            let n = h.n();
            let g = h.assemble(&h).unwrap();
            let top: Vec<_> = crossings(&g)
                .unwrap()
                .into_iter()
                .filter(|c| c.row > n)
                .map(|c| (c.row - n, c.col, c.sign))
                .collect();
            let tangle: Vec<_> = tangle_crossings(&h).into_iter().map(|c| (c.row, c.col, c.sign)).collect();
            assert_eq!(top, tangle);
            assert_eq!(tangle.len(), n - 1);
            assert!(tangle.iter().all(|c| c.2 == 1));
        }
    }

    #[test]
    fn segments_follow_orientation() {
        let h = hg("0,1/2,1");
        let g = h.assemble(&h).unwrap();
        let s = segments(&g).unwrap();
        // row 1: X at 1, O at 3
        assert_eq!(s[0], Segment { kind: SegmentKind::Horizontal, fixed: 1, span: (1, 3), dir: 1 });
        // column 1: X at row 1, O at row 4, so the column runs down
        assert_eq!(s[4], Segment { kind: SegmentKind::Vertical, fixed: 1, span: (1, 4), dir: -1 });
        assert!(segments(&g.unoriented()).is_err());
    }
}
