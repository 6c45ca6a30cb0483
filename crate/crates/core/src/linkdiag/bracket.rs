//! Laurent polynomials in `A` and the Kauffman bracket state sum.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::exec::Exec;
use crate::halfgrid::GridDiagram;

use super::diagram::PlanarDiagram;
use super::LinkDiagError;

/// Largest crossing count the state sum accepts.
pub const BRACKET_CAP: usize = 24;

/// An integer Laurent polynomial in `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, e);
        p
    }

    pub fn from_terms(terms: &[(i64, i32)]) -> Self {
        let mut p = Self::zero();
        for &(c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, c: i64, e: i32) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs, ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Substitutes `A ↦ A⁻¹`.
    pub fn mirror(&self) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms `c*A^e` in descending exponent, joined by `" + "`; negative
    /// exponents are parenthesized. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(&e, &c)| if e < 0 { format!("{c}*A^({e})") } else { format!("{c}*A^{e}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The loop value `d = -A² - A⁻²`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(&[(-1, 2), (-1, -2)])
}

pub fn kauffman_bracket(g: &GridDiagram) -> Result<LaurentPoly, LinkDiagError> {
    kauffman_bracket_with(g, Exec::default())
}

/// `Σ_states A^(#A - #B) d^(loops - 1)` over all `2^c` smoothings.
///
/// States are split into contiguous blocks; each block tallies how many states
/// have a given `(#B, loops)`, and block tallies add up.
pub fn kauffman_bracket_with(g: &GridDiagram, exec: Exec) -> Result<LaurentPoly, LinkDiagError> {
    let d = PlanarDiagram::from_grid(g);
    let c = d.crossing_count();
    if c > BRACKET_CAP {
        return Err(LinkDiagError::TooManyCrossings(c));
    }
    let max_loops = c + d.free_loops + 1;
    let width = max_loops + 1;
    let states = 1u64 << c;
    let block_bits = c.min(12);
    let blocks = states >> block_bits;
    let tally = exec.map_reduce(
        blocks,
        vec![0u64; (c + 1) * width],
        |b| {
            let mut t = vec![0u64; (c + 1) * width];
            let lo = b << block_bits;
            for s in lo..lo + (1u64 << block_bits) {
                let loops = d.state_loops(s);
                t[s.count_ones() as usize * width + loops] += 1;
            }
            t
        },
        |mut a, b| {
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            a
        },
    );

    let dl = loop_value();
    let mut powers = vec![LaurentPoly::one()];
    for i in 1..width {
        powers.push(&powers[i - 1] * &dl);
    }
    let mut out = LaurentPoly::zero();
    for nb in 0..=c {
        for loops in 1..width {
            let count = tally[nb * width + loops];
            if count == 0 {
                continue;
            }
            let e = c as i32 - 2 * nb as i32;
            let term = &LaurentPoly::monomial(count as i64, e) * &powers[loops - 1];
            out = &out + &term;
        }
    }
    Ok(out)
}
