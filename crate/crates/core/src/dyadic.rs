//! Exact dyadic rationals, standard dyadic intervals and partitions of `[0,1]`.
//!
//! Everything here is exact: a [`Dyadic`] is a numerator over a power of two
//! and comparisons widen to `i128`. Exponents are capped at [`DEPTH_CAP`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use thiserror::Error;

/// Largest exponent (and tree depth) any value may carry.
pub const DEPTH_CAP: u32 = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyadicError {
    #[error("exponent {0} exceeds the depth cap of {DEPTH_CAP}")]
    DepthExceeded(u32),
    #[error("[{k}/2^{m}, {k1}/2^{m}] is not a standard dyadic interval", k1 = .k + 1)]
    InvalidInterval { k: u64, m: u32 },
    #[error("{0} is not in E (dyadic rationals strictly between 0 and 1)")]
    NotInE(Dyadic),
    #[error("[0,1] has no conjugate")]
    NoConjugate,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("arithmetic overflow")]
    Overflow,
}

/// What went wrong while parsing partition text, tagged with the item index
/// (0-based) and byte offset where it happened.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("item {index} (byte {offset}): {kind}")]
pub struct PartitionParseError {
    pub index: usize,
    pub offset: usize,
    pub kind: PartitionParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionParseErrorKind {
    #[error("empty item")]
    Empty,
    #[error("malformed number {0:?}")]
    Malformed(String),
    #[error("denominator {0} is not a power of two")]
    NonDyadicDenominator(u64),
    #[error("value lies outside [0,1]")]
    OutOfRange,
    #[error("breakpoints are not strictly increasing")]
    NotMonotone,
    #[error("partition must start at 0")]
    MissingZero,
    #[error("partition must end at 1")]
    MissingOne,
    #[error("[{0}, {1}] is not a standard dyadic interval")]
    NotStandard(Dyadic, Dyadic),
    #[error(transparent)]
    Dyadic(#[from] DyadicError),
}

/// An exact dyadic rational `num / 2^exp`, kept normalized (`exp == 0` or `num` odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    pub fn new(num: i64, exp: u32) -> Result<Self, DyadicError> {
        Self::from_wide(num as i128, exp)
    }

    /// Normalizes a wide numerator, failing if the reduced exponent is too deep
    /// or the numerator no longer fits.
    fn from_wide(mut num: i128, mut exp: u32) -> Result<Self, DyadicError> {
        if num == 0 {
            return Ok(Self::ZERO);
        }
        let tz = num.trailing_zeros().min(exp);
        num >>= tz;
        exp -= tz;
        if exp > DEPTH_CAP {
            return Err(DyadicError::DepthExceeded(exp));
        }
        let num = i64::try_from(num).map_err(|_| DyadicError::Overflow)?;
        Ok(Dyadic { num, exp })
    }

    pub fn integer(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    /// Numerator over `2^exp` for any `exp >= self.exp()`.
    fn scaled(&self, exp: u32) -> i128 {
        (self.num as i128) << (exp - self.exp)
    }

    pub fn checked_add(self, rhs: Dyadic) -> Result<Dyadic, DyadicError> {
        let e = self.exp.max(rhs.exp);
        Self::from_wide(self.scaled(e) + rhs.scaled(e), e)
    }

    pub fn checked_sub(self, rhs: Dyadic) -> Result<Dyadic, DyadicError> {
        let e = self.exp.max(rhs.exp);
        Self::from_wide(self.scaled(e) - rhs.scaled(e), e)
    }

    /// Multiplies by `2^shift` (shift may be negative).
    pub fn mul_pow2(self, shift: i64) -> Result<Dyadic, DyadicError> {
        if self.num == 0 {
            return Ok(self);
        }
        if shift >= 0 {
            let s = shift as u32;
            if s <= self.exp {
                return Ok(Dyadic { num: self.num, exp: self.exp - s });
            }
            let extra = s - self.exp;
            let wide = (self.num as i128)
                .checked_mul(1i128.checked_shl(extra).ok_or(DyadicError::Overflow)?)
                .ok_or(DyadicError::Overflow)?;
            Self::from_wide(wide, 0)
        } else {
            let e = self.exp as i64 - shift;
            if e > DEPTH_CAP as i64 {
                return Err(DyadicError::DepthExceeded(e.min(u32::MAX as i64) as u32));
            }
            Ok(Dyadic { num: self.num, exp: e as u32 })
        }
    }

    /// True for points of `E`, the dyadics strictly between 0 and 1.
    pub fn is_in_e(&self) -> bool {
        *self > Self::ZERO && *self < Self::ONE
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.exp)
        }
    }
}

impl FromStr for Dyadic {
    type Err = PartitionParseErrorKind;

    /// Accepts `"k"` or `"k/d"` with `d` a decimal power of two.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PartitionParseErrorKind::Empty);
        }
        let malformed = || PartitionParseErrorKind::Malformed(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| malformed())?,
                d.trim().parse::<u64>().map_err(|_| malformed())?,
            ),
            None => (s.parse::<i64>().map_err(|_| malformed())?, 1),
        };
        if den == 0 || !den.is_power_of_two() {
            return Err(PartitionParseErrorKind::NonDyadicDenominator(den));
        }
        Ok(Dyadic::new(num, den.trailing_zeros())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The standard dyadic interval `[k/2^m, (k+1)/2^m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SdInterval {
    k: u64,
    m: u32,
}

impl SdInterval {
    pub const UNIT: SdInterval = SdInterval { k: 0, m: 0 };

    pub fn new(k: u64, m: u32) -> Result<Self, DyadicError> {
        if m > DEPTH_CAP {
            return Err(DyadicError::DepthExceeded(m));
        }
        if k >= 1u64 << m {
            return Err(DyadicError::InvalidInterval { k, m });
        }
        Ok(SdInterval { k, m })
    }

    /// The interval `[a, b]` if it is standard dyadic.
    pub fn from_endpoints(a: Dyadic, b: Dyadic) -> Option<SdInterval> {
        if a < Dyadic::ZERO || b > Dyadic::ONE || a >= b {
            return None;
        }
        let len = b.checked_sub(a).ok()?;
        // length must be 1/2^m
        if len.num != 1 {
            return None;
        }
        let m = len.exp;
        // a must be a multiple of 1/2^m
        if a.exp > m {
            return None;
        }
        let k = a.scaled(m) as u64;
        SdInterval::new(k, m).ok()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn left(&self) -> Dyadic {
        Dyadic::from_wide(self.k as i128, self.m).expect("interval endpoints fit")
    }

    pub fn right(&self) -> Dyadic {
        Dyadic::from_wide(self.k as i128 + 1, self.m).expect("interval endpoints fit")
    }

    pub fn is_unit(&self) -> bool {
        self.m == 0
    }

    pub fn midpoint(&self) -> Result<Dyadic, DyadicError> {
        Dyadic::from_wide(2 * self.k as i128 + 1, self.m + 1)
    }

    /// The unique interval whose midpoint is `p`.
    pub fn midpoint_inverse(p: Dyadic) -> Result<SdInterval, DyadicError> {
        if !p.is_in_e() {
            return Err(DyadicError::NotInE(p));
        }
        // p = a/2^n with a odd and n >= 1
        let a = p.num as u64;
        SdInterval::new((a - 1) / 2, p.exp - 1)
    }

    pub fn side(&self) -> Side {
        if self.m > 0 && self.k.is_multiple_of(2) {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn conjugate(&self) -> Result<SdInterval, DyadicError> {
        if self.is_unit() {
            return Err(DyadicError::NoConjugate);
        }
        Ok(match self.side() {
            Side::Left => SdInterval { k: self.k + 1, m: self.m },
            Side::Right => SdInterval { k: self.k - 1, m: self.m },
        })
    }

    /// `A ∪ Ā`, the interval this one was cut from.
    pub fn parent(&self) -> Option<SdInterval> {
        (!self.is_unit()).then(|| SdInterval { k: self.k / 2, m: self.m - 1 })
    }

    pub fn children(&self) -> Result<(SdInterval, SdInterval), DyadicError> {
        if self.m + 1 > DEPTH_CAP {
            return Err(DyadicError::DepthExceeded(self.m + 1));
        }
        Ok((
            SdInterval { k: 2 * self.k, m: self.m + 1 },
            SdInterval { k: 2 * self.k + 1, m: self.m + 1 },
        ))
    }

    /// Root is `+`; a left child keeps its parent's sign, a right child flips it.
    ///
    /// Walking from the root, the path to `[k/2^m, ...]` reads the binary digits
    /// of `k` (1 = right child), so the sign is the parity of `k`'s popcount.
    pub fn sign(&self) -> Sign {
        if self.k.count_ones().is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn contains_interval(&self, other: &SdInterval) -> bool {
        other.m >= self.m && (other.k >> (other.m - self.m)) == self.k
    }

    pub fn cmp_mid(&self, other: &SdInterval) -> Ordering {
        // (2k+1)/2^(m+1) compared at the common exponent
        let e = self.m.max(other.m);
        let a = (2 * self.k as u128 + 1) << (e - self.m);
        let b = (2 * other.k as u128 + 1) << (e - other.m);
        a.cmp(&b)
    }

    /// Shorter first; equal lengths fall back to the midpoint order.
    pub fn cmp_len(&self, other: &SdInterval) -> Ordering {
        other.m.cmp(&self.m).then_with(|| self.cmp_mid(other))
    }
}

impl fmt::Display for SdInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.left(), self.right())
    }
}

pub fn cmp_mid(a: &SdInterval, b: &SdInterval) -> Ordering {
    a.cmp_mid(b)
}

pub fn cmp_len(a: &SdInterval, b: &SdInterval) -> Ordering {
    a.cmp_len(b)
}

/// Sign carried by a point of `E`: the sign of the interval it is the midpoint of.
pub fn point_sign(p: Dyadic) -> Result<Sign, DyadicError> {
    Ok(SdInterval::midpoint_inverse(p)?.sign())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPoint {
    pub point: Dyadic,
    pub sign: Sign,
}

impl fmt::Display for SignedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.point, self.sign)
    }
}

/// A standard dyadic partition `0 = a_0 < a_1 < ... < a_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SdPartition {
    breakpoints: Vec<Dyadic>,
}

impl SdPartition {
    pub fn new(breakpoints: Vec<Dyadic>) -> Result<Self, DyadicError> {
        Self::validate(&breakpoints)
            .map_err(|(_, kind)| DyadicError::InvalidPartition(kind.to_string()))?;
        Ok(SdPartition { breakpoints })
    }

    fn validate(points: &[Dyadic]) -> Result<(), (usize, PartitionParseErrorKind)> {
        use PartitionParseErrorKind as K;
        match points.first() {
            Some(p) if *p == Dyadic::ZERO => {}
            _ => return Err((0, K::MissingZero)),
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err((i + 1, K::NotMonotone));
            }
            if w[1] > Dyadic::ONE {
                return Err((i + 1, K::OutOfRange));
            }
            if SdInterval::from_endpoints(w[0], w[1]).is_none() {
                return Err((i + 1, K::NotStandard(w[0], w[1])));
            }
        }
        if points.len() < 2 || *points.last().unwrap() != Dyadic::ONE {
            return Err((points.len().saturating_sub(1), K::MissingOne));
        }
        Ok(())
    }

    /// The trivial partition `δ = {0, 1}`.
    pub fn trivial() -> Self {
        SdPartition { breakpoints: vec![Dyadic::ZERO, Dyadic::ONE] }
    }

    pub fn from_subintervals(intervals: &[SdInterval]) -> Result<Self, DyadicError> {
        let mut points = vec![Dyadic::ZERO];
        points.extend(intervals.iter().map(|iv| iv.right()));
        Self::new(points)
    }

    pub fn breakpoints(&self) -> &[Dyadic] {
        &self.breakpoints
    }

    /// Number of subintervals.
    pub fn len(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn subintervals(&self) -> Vec<SdInterval> {
        self.breakpoints
            .windows(2)
            .map(|w| SdInterval::from_endpoints(w[0], w[1]).expect("validated partition"))
            .collect()
    }

    /// `S(I)`: every `[a_i, a_j]` that is standard dyadic, in midpoint order.
    ///
    /// These are exactly the edges of the partition's binary tree, so they are
    /// collected by walking each subinterval up to the root.
    pub fn spanning_intervals(&self) -> Vec<SdInterval> {
        let mut seen = BTreeSet::new();
        for leaf in self.subintervals() {
            let mut cur = Some(leaf);
            while let Some(iv) = cur {
                if !seen.insert((iv.m, iv.k)) {
                    break;
                }
                cur = iv.parent();
            }
        }
        let mut out: Vec<SdInterval> = seen.into_iter().map(|(m, k)| SdInterval { k, m }).collect();
        out.sort_by(cmp_mid);
        out
    }

    /// Same set as [`spanning_intervals`](Self::spanning_intervals), found by
    /// testing every pair of breakpoints.
    pub fn spanning_intervals_by_pairs(&self) -> Vec<SdInterval> {
        let b = &self.breakpoints;
        let mut out = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if let Some(iv) = SdInterval::from_endpoints(b[i], b[j]) {
                    out.push(iv);
                }
            }
        }
        out.sort_by(cmp_mid);
        out
    }

    /// `E(I)` in increasing order, each point signed by the interval it is the midpoint of.
    pub fn e_points(&self) -> Result<Vec<SignedPoint>, DyadicError> {
        self.spanning_intervals()
            .into_iter()
            .map(|iv| Ok(SignedPoint { point: iv.midpoint()?, sign: iv.sign() }))
            .collect()
    }
}

impl fmt::Display for SdPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.breakpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for SdPartition {
    type Err = PartitionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut points = Vec::new();
        let mut offsets = Vec::new();
        let mut offset = 0;
        for (index, item) in s.split(',').enumerate() {
            let lead = item.len() - item.trim_start().len();
            let p = item
                .parse::<Dyadic>()
                .map_err(|kind| PartitionParseError { index, offset: offset + lead, kind })?;
            if p < Dyadic::ZERO || p > Dyadic::ONE {
                return Err(PartitionParseError {
                    index,
                    offset: offset + lead,
                    kind: PartitionParseErrorKind::OutOfRange,
                });
            }
            points.push(p);
            offsets.push(offset + lead);
            offset += item.len() + 1;
        }
        Self::validate(&points).map_err(|(index, kind)| PartitionParseError {
            index,
            offset: offsets.get(index).copied().unwrap_or(0),
            kind,
        })?;
        Ok(SdPartition { breakpoints: points })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    fn iv(a: &str, b: &str) -> SdInterval {
        SdInterval::from_endpoints(d(a), d(b)).unwrap()
    }

    fn part(s: &str) -> SdPartition {
        s.parse().unwrap()
    }

    // Recursion straight from the definition, independent of the popcount shortcut.
    fn sign_by_recursion(a: SdInterval) -> Sign {
        match a.parent() {
            None => Sign::Plus,
            Some(p) => match a.side() {
                Side::Left => sign_by_recursion(p),
                Side::Right => sign_by_recursion(p).flip(),
            },
        }
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(Dyadic::new(4, 3).unwrap(), d("1/2"));
        assert_eq!(Dyadic::new(6, 4).unwrap().to_string(), "3/8");
        assert_eq!(d("2/4"), Dyadic::HALF);
        assert_eq!(d("0").to_string(), "0");
        assert!(matches!(Dyadic::new(1, 63), Err(DyadicError::DepthExceeded(63))));
        assert_eq!(Dyadic::new(2, 63).unwrap(), Dyadic::new(1, 62).unwrap());
    }

    #[test]
    fn ordering_is_exact() {
        assert!(d("7/16") < d("1/2"));
        assert!(d("3/8") > d("5/16"));
        let tiny = Dyadic::new(1, 62).unwrap();
        assert!(Dyadic::ZERO < tiny);
        assert!(Dyadic::ONE.checked_sub(tiny).unwrap() < Dyadic::ONE);
    }

    #[test]
    fn midpoints() {
        assert_eq!(SdInterval::UNIT.midpoint().unwrap(), d("1/2"));
        assert_eq!(iv("1/2", "1").midpoint().unwrap(), d("3/4"));
        assert_eq!(iv("3/8", "1/2").midpoint().unwrap(), d("7/16"));
        let deep = SdInterval::new(0, DEPTH_CAP).unwrap();
        assert!(matches!(deep.midpoint(), Err(DyadicError::DepthExceeded(_))));
    }

    #[test]
    fn midpoint_inverse_examples() {
        assert_eq!(SdInterval::midpoint_inverse(d("1/2")).unwrap(), SdInterval::UNIT);
        assert_eq!(SdInterval::midpoint_inverse(d("3/4")).unwrap(), iv("1/2", "1"));
        assert_eq!(SdInterval::midpoint_inverse(d("7/16")).unwrap(), iv("3/8", "1/2"));
        assert!(matches!(SdInterval::midpoint_inverse(Dyadic::ZERO), Err(DyadicError::NotInE(_))));
        assert!(matches!(SdInterval::midpoint_inverse(Dyadic::ONE), Err(DyadicError::NotInE(_))));
    }

    #[test]
    fn sides_and_conjugates() {
        assert_eq!(iv("0", "1/2").side(), Side::Left);
        assert_eq!(iv("1/2", "1").side(), Side::Right);
        assert_eq!(SdInterval::UNIT.side(), Side::Right);
        assert_eq!(iv("0", "1/2").conjugate().unwrap(), iv("1/2", "1"));
        assert_eq!(iv("1/2", "1").conjugate().unwrap(), iv("0", "1/2"));
        assert_eq!(iv("1/4", "1/2").conjugate().unwrap(), iv("0", "1/4"));
        assert_eq!(SdInterval::UNIT.conjugate(), Err(DyadicError::NoConjugate));
    }

    #[test]
    fn signs() {
        assert_eq!(SdInterval::UNIT.sign(), Sign::Plus);
        assert_eq!(iv("1/2", "1").sign(), Sign::Minus);
        assert_eq!(iv("1/4", "1/2").sign(), Sign::Minus);
        for m in 0..=10 {
            for k in 0..(1u64 << m) {
                let a = SdInterval::new(k, m).unwrap();
                assert_eq!(a.sign(), sign_by_recursion(a), "{a}");
                if !a.is_unit() {
                    let c = a.conjugate().unwrap();
                    assert_eq!(c.conjugate().unwrap(), a);
                    assert_eq!(c.sign(), a.sign().flip());
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(cmp_mid(&iv("0", "1/2"), &SdInterval::UNIT), Ordering::Less);
        assert_eq!(cmp_len(&iv("0", "1/2"), &iv("1/2", "1")), Ordering::Less);
        assert_eq!(cmp_len(&iv("0", "1/2"), &SdInterval::UNIT), Ordering::Less);
        assert_eq!(cmp_len(&iv("1/4", "3/8"), &iv("0", "1/2")), Ordering::Less);
    }

    #[test]
    fn spanning_intervals_examples() {
        assert_eq!(SdPartition::trivial().spanning_intervals(), vec![SdInterval::UNIT]);
        assert_eq!(
            part("0,1/2,1").spanning_intervals(),
            vec![iv("0", "1/2"), SdInterval::UNIT, iv("1/2", "1")]
        );
        let fig = part("0,1/4,3/8,1/2,1");
        let s = fig.spanning_intervals();
        assert_eq!(s.len(), 7);
        assert_eq!(s, fig.spanning_intervals_by_pairs());
        assert_eq!(
            s,
            vec![
                iv("0", "1/4"),
                iv("0", "1/2"),
                iv("1/4", "3/8"),
                iv("1/4", "1/2"),
                iv("3/8", "1/2"),
                SdInterval::UNIT,
                iv("1/2", "1"),
            ]
        );
    }

    #[test]
    fn e_points_examples() {
        let e = SdPartition::trivial().e_points().unwrap();
        assert_eq!(e, vec![SignedPoint { point: d("1/2"), sign: Sign::Plus }]);
        let e = part("0,1/2,1").e_points().unwrap();
        let got: Vec<_> = e.iter().map(|p| (p.point, p.sign)).collect();
        assert_eq!(
            got,
            vec![(d("1/4"), Sign::Plus), (d("1/2"), Sign::Plus), (d("3/4"), Sign::Minus)]
        );
    }

    #[test]
    fn breakpoint_sign_is_opposite_of_next_midpoint() {
        for s in ["0,1/2,1", "0,1/4,3/8,1/2,1", "0,1/4,3/8,1/2,3/4,7/8,1", "0,1/8,1/4,1/2,5/8,3/4,1"] {
            let p = part(s);
            let e = p.e_points().unwrap();
            let sign_at = |x: Dyadic| e.iter().find(|sp| sp.point == x).unwrap().sign;
            for w in p.subintervals().iter().skip(1) {
                assert_eq!(sign_at(w.left()), sign_at(w.midpoint().unwrap()).flip(), "{s} at {}", w.left());
            }
        }
    }

    #[test]
    fn parse_errors_are_position_tagged() {
        let e = "0,1/3,1".parse::<SdPartition>().unwrap_err();
        assert_eq!(e.index, 1);
        assert_eq!(e.offset, 2);
        assert_eq!(e.kind, PartitionParseErrorKind::NonDyadicDenominator(3));

        let e = "0,1/2,1/4,1".parse::<SdPartition>().unwrap_err();
        assert_eq!((e.index, e.kind), (2, PartitionParseErrorKind::NotMonotone));

        let e = "0,3/4,1".parse::<SdPartition>().unwrap_err();
        assert!(matches!(e.kind, PartitionParseErrorKind::NotStandard(..)));

        let e = "1/2,1".parse::<SdPartition>().unwrap_err();
        assert_eq!(e.kind, PartitionParseErrorKind::MissingZero);
        let e = "0,1/2".parse::<SdPartition>().unwrap_err();
        assert_eq!(e.kind, PartitionParseErrorKind::MissingOne);
        let e = "0,x,1".parse::<SdPartition>().unwrap_err();
        assert!(matches!(e.kind, PartitionParseErrorKind::Malformed(_)));
        let e = "0,,1".parse::<SdPartition>().unwrap_err();
        assert_eq!(e.kind, PartitionParseErrorKind::Empty);
    }

    #[test]
    fn partition_text_round_trip() {
        for s in ["0,1", "0,1/2,1", "0,1/4,3/8,1/2,1", "0,1/8,1/4,1/2,3/4,1"] {
            assert_eq!(part(s).to_string(), s);
        }
        assert_eq!(part(" 0, 2/4 ,1").to_string(), "0,1/2,1");
    }
}
