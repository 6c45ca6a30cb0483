//! The planar link diagram of a grid as crossings with four arms each.
//!
//! Arms are numbered `4 * crossing + side` with sides N, E, S, W. Arcs of the
//! link join an exit arm to the next entry arm along the walk. A smoothing of
//! a crossing pairs its four arms; loops are then cycles alternating arcs and
//! smoothing pairs.

use crate::halfgrid::GridDiagram;

use super::{crossing_positions, walks, LinkDiagError};

pub(crate) const N: usize = 0;
pub(crate) const E: usize = 1;
pub(crate) const S: usize = 2;
pub(crate) const W: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    /// `(row, col)` of each crossing.
    pub positions: Vec<(usize, usize)>,
    /// The arm at the other end of each arm's arc.
    pub(crate) arc: Vec<usize>,
    /// Entry and exit arm of the horizontal (over) strand, per crossing.
    pub(crate) over: Vec<(usize, usize)>,
    /// Entry and exit arm of the vertical (under) strand, per crossing.
    pub(crate) under: Vec<(usize, usize)>,
    /// Components that pass through no crossing.
    pub free_loops: usize,
}

impl PlanarDiagram {
    pub fn from_grid(g: &GridDiagram) -> PlanarDiagram {
        let positions = crossing_positions(g);
        let m = g.size();
        let mut index = vec![usize::MAX; (m + 1) * (m + 1)];
        for (i, &(r, c)) in positions.iter().enumerate() {
            index[r * (m + 1) + c] = i;
        }
        let k = positions.len();
        let mut arc = vec![usize::MAX; 4 * k];
        let mut over = vec![(0, 0); k];
        let mut under = vec![(0, 0); k];
        let mut free_loops = 0;

        let o = g.orient();
        for walk in walks(&o) {
            // (crossing, entry side, exit side) in travel order
            let mut visits: Vec<(usize, usize, usize)> = Vec::new();
            let turns = &walk.turns;
            for (t, &(c, r)) in turns.iter().enumerate() {
                // vertical move in column c from the previous row to r
                let prev_row = if t == 0 { turns[turns.len() - 1].1 } else { turns[t - 1].1 };
                let rows: Box<dyn Iterator<Item = usize>> = if r > prev_row {
                    Box::new(prev_row + 1..r)
                } else {
                    Box::new((r + 1..prev_row).rev())
                };
                let (entry, exit) = if r > prev_row { (S, N) } else { (N, S) };
                for row in rows {
                    let i = index[row * (m + 1) + c];
                    if i != usize::MAX {
                        visits.push((i, entry, exit));
                        under[i] = (4 * i + entry, 4 * i + exit);
                    }
                }
                // horizontal move in row r from column c to the O
                let to = o.o_cols()[r - 1];
                let cols: Box<dyn Iterator<Item = usize>> =
                    if to > c { Box::new(c + 1..to) } else { Box::new((to + 1..c).rev()) };
                let (entry, exit) = if to > c { (W, E) } else { (E, W) };
                for col in cols {
                    let i = index[r * (m + 1) + col];
                    if i != usize::MAX {
                        visits.push((i, entry, exit));
                        over[i] = (4 * i + entry, 4 * i + exit);
                    }
                }
            }
            if visits.is_empty() {
                free_loops += 1;
                continue;
            }
            for j in 0..visits.len() {
                let (a, _, exit) = visits[j];
                let (b, entry, _) = visits[(j + 1) % visits.len()];
                let (from, to) = (4 * a + exit, 4 * b + entry);
                arc[from] = to;
                arc[to] = from;
            }
        }
        debug_assert!(arc.iter().all(|&a| a != usize::MAX));
        PlanarDiagram { positions, arc, over, under, free_loops }
    }

    pub fn crossing_count(&self) -> usize {
        self.positions.len()
    }

    /// Number of loops after smoothing every crossing by `pair`, which maps an
    /// arm to the arm it is joined to inside its crossing.
    pub fn count_loops(&self, pair: impl Fn(usize) -> usize) -> usize {
        let mut seen = vec![false; self.arc.len()];
        let mut loops = self.free_loops;
        for start in 0..self.arc.len() {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut a = start;
            loop {
                seen[a] = true;
                let b = self.arc[a];
                seen[b] = true;
                a = pair(b);
                if a == start {
                    break;
                }
            }
        }
        loops
    }

    /// Loops of the state where crossing `i` is A-smoothed iff bit `i` of `state` is 0.
    ///
    /// The horizontal strand is always over, so the A-smoothing joins N with W
    /// and S with E; the B-smoothing joins N with E and S with W.
    pub fn state_loops(&self, state: u64) -> usize {
        if self.arc.len() <= 128 {
            return self.state_loops_mask(state);
        }
        self.count_loops(|arm| smooth(arm, state >> (arm / 4) & 1 == 1))
    }

    fn state_loops_mask(&self, state: u64) -> usize {
        let mut seen: u128 = 0;
        let total = self.arc.len();
        let all: u128 = if total == 128 { u128::MAX } else { (1u128 << total) - 1 };
        let mut loops = self.free_loops;
        while seen != all {
            let start = (!seen).trailing_zeros() as usize;
            loops += 1;
            let mut a = start;
            loop {
                let b = self.arc[a];
                seen |= (1u128 << a) | (1u128 << b);
                a = smooth(b, state >> (b / 4) & 1 == 1);
                if a == start {
                    break;
                }
            }
        }
        loops
    }
}

#[inline]
pub(crate) fn smooth(arm: usize, b_smoothing: bool) -> usize {
    let base = arm & !3;
    let side = arm & 3;
    let other = match (b_smoothing, side) {
        (false, N) => W,
        (false, W) => N,
        (false, S) => E,
        (false, E) => S,
        (true, N) => E,
        (true, E) => N,
        (true, S) => W,
        _ => S,
    };
    base + other
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeifertStats {
    pub circles: usize,
    /// `circles - crossings`.
    pub euler: i64,
}

/// Seifert circles: each crossing is smoothed so that the incoming over arm
/// continues into the outgoing under arm and vice versa.
pub fn seifert_stats(g: &GridDiagram) -> Result<SeifertStats, LinkDiagError> {
    if !g.is_oriented() {
        return Err(LinkDiagError::UnorientedDiagram);
    }
    let d = PlanarDiagram::from_grid(g);
    let mut partner = vec![0; d.arc.len()];
    for i in 0..d.crossing_count() {
        let (oi, oo) = d.over[i];
        let (ui, uo) = d.under[i];
        partner[oi] = uo;
        partner[uo] = oi;
        partner[ui] = oo;
        partner[oo] = ui;
    }
    let circles = d.count_loops(|a| partner[a]);
    Ok(SeifertStats { circles, euler: circles as i64 - d.crossing_count() as i64 })
}
