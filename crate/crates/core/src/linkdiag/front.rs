//! Front statistics read off the corners of an oriented grid.
//!
//! Turning the grid by 45 degrees makes the NE and SW corners into cusps.

use crate::halfgrid::{GridDiagram, Mark};

use super::{crossings, LinkDiagError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    NE,
    NW,
    SE,
    SW,
}

/// Corner formed at a mark whose row partner lies east (`east`) or west and
/// whose column partner lies north (`north`) or south.
///
/// The two stubs point away from the corner's name: stubs W and S meet in an
/// NE corner.
pub fn corner(east: bool, north: bool) -> Corner {
    match (east, north) {
        (false, false) => Corner::NE,
        (true, false) => Corner::NW,
        (false, true) => Corner::SE,
        (true, true) => Corner::SW,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrontStats {
    pub writhe: i64,
    pub cusps: i64,
    pub up_cusps: i64,
    pub down_cusps: i64,
    pub tb: i64,
    pub rot: i64,
}

pub fn front_stats(g: &GridDiagram) -> Result<FrontStats, LinkDiagError> {
    if !g.is_oriented() {
        return Err(LinkDiagError::UnorientedDiagram);
    }
    let writhe: i64 = crossings(g)?.iter().map(|c| c.sign as i64).sum();
    let m = g.size();
    let mut up = 0i64;
    let mut down = 0i64;
    for r in 1..=m {
        let (x, o) = (g.x_cols()[r - 1], g.o_cols()[r - 1]);
        for (c, mark, partner) in [(x, Mark::X, o), (o, Mark::O, x)] {
            let [(ra, _), (rb, _)] = g.column(c);
            let other_row = if ra == r { rb } else { ra };
            match (corner(partner > c, other_row > r), mark) {
                (Corner::NE, Mark::X) | (Corner::SW, Mark::O) => up += 1,
                (Corner::NE, Mark::O) | (Corner::SW, Mark::X) => down += 1,
                _ => {}
            }
        }
    }
    let cusps = up + down;
    if cusps % 2 != 0 {
        return Err(LinkDiagError::Internal(format!("odd cusp count {cusps}")));
    }
    let rot2 = down - up;
    if rot2 % 2 != 0 {
        return Err(LinkDiagError::Internal(format!("half-integral rotation {rot2}/2")));
    }
    Ok(FrontStats { writhe, cusps, up_cusps: up, down_cusps: down, tb: writhe - cusps / 2, rot: rot2 / 2 })
}
