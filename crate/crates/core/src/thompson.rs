//! Binary trees and tree pairs: elements of Thompson's group `F`.
//!
//! A [`TreePair`] `(top, bottom)` stands for the piecewise-linear map sending the
//! `i`-th breakpoint of `top`'s partition to the `i`-th breakpoint of `bottom`'s.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dyadic::{point_sign, Dyadic, DyadicError, SdInterval, SdPartition, Sign, DEPTH_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThompsonError {
    #[error("trees have {top} and {bottom} leaves")]
    LeafCountMismatch { top: usize, bottom: usize },
    #[error("target tree does not refine the bottom tree")]
    NotARefinement,
    #[error("leaf index {index} out of range for a tree with {leaves} leaves")]
    NoSuchLeaf { index: usize, leaves: usize },
    #[error("{0} is outside [0,1]")]
    OutOfRange(Dyadic),
    #[error("invalid n-sign {0}")]
    InvalidNSign(String),
    #[error("tree syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Dyadic(#[from] DyadicError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

use BinaryTree::{Leaf, Node};

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        Node(Box::new(left), Box::new(right))
    }

    /// The single caret `(..)`.
    pub fn caret() -> BinaryTree {
        Self::node(Leaf, Leaf)
    }

    pub fn leaves(&self) -> usize {
        match self {
            Leaf => 1,
            Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Number of edges on the longest root-to-leaf path.
    pub fn depth(&self) -> u32 {
        match self {
            Leaf => 0,
            Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    fn check_depth(self) -> Result<Self, ThompsonError> {
        let d = self.depth();
        if d > DEPTH_CAP {
            return Err(DyadicError::DepthExceeded(d).into());
        }
        Ok(self)
    }

    pub fn from_partition(p: &SdPartition) -> BinaryTree {
        fn build(within: SdInterval, leaves: &[SdInterval]) -> BinaryTree {
            if leaves.len() == 1 {
                debug_assert_eq!(leaves[0], within);
                return Leaf;
            }
            let (l, r) = within.children().expect("partition depth is within the cap");
            let split = leaves.partition_point(|iv| l.contains_interval(iv));
            BinaryTree::node(build(l, &leaves[..split]), build(r, &leaves[split..]))
        }
        build(SdInterval::UNIT, &p.subintervals())
    }

    /// The subintervals cut out by this tree, left to right.
    pub fn leaf_intervals(&self) -> Result<Vec<SdInterval>, ThompsonError> {
        fn walk(t: &BinaryTree, iv: SdInterval, out: &mut Vec<SdInterval>) -> Result<(), ThompsonError> {
            match t {
                Leaf => out.push(iv),
                Node(l, r) => {
                    let (a, b) = iv.children()?;
                    walk(l, a, out)?;
                    walk(r, b, out)?;
                }
            }
            Ok(())
        }
        let mut out = Vec::with_capacity(self.leaves());
        walk(self, SdInterval::UNIT, &mut out)?;
        Ok(out)
    }

    pub fn to_partition(&self) -> Result<SdPartition, ThompsonError> {
        Ok(SdPartition::from_subintervals(&self.leaf_intervals()?)?)
    }

    /// Sign of each leaf edge: root `+`, left child keeps, right child flips.
    pub fn leaf_signs(&self) -> NSign {
        fn walk(t: &BinaryTree, s: Sign, out: &mut Vec<Sign>) {
            match t {
                Leaf => out.push(s),
                Node(l, r) => {
                    walk(l, s, out);
                    walk(r, s.flip(), out);
                }
            }
        }
        let mut out = Vec::with_capacity(self.leaves());
        walk(self, Sign::Plus, &mut out);
        NSign(out)
    }

    /// Replaces leaf `index` (0-based) by a caret.
    pub fn add_caret(&self, index: usize) -> Result<BinaryTree, ThompsonError> {
        fn go(t: &BinaryTree, index: usize) -> BinaryTree {
            match t {
                Leaf => BinaryTree::caret(),
                Node(l, r) => {
                    let nl = l.leaves();
                    if index < nl {
                        BinaryTree::node(go(l, index), (**r).clone())
                    } else {
                        BinaryTree::node((**l).clone(), go(r, index - nl))
                    }
                }
            }
        }
        let leaves = self.leaves();
        if index >= leaves {
            return Err(ThompsonError::NoSuchLeaf { index, leaves });
        }
        go(self, index).check_depth()
    }

    /// Leaf indices `i` such that leaves `i` and `i+1` hang from a common caret.
    pub fn caret_positions(&self) -> Vec<usize> {
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<usize>) {
            if let Node(l, r) = t {
                if matches!((&**l, &**r), (Leaf, Leaf)) {
                    out.push(offset);
                } else {
                    walk(l, offset, out);
                    walk(r, offset + l.leaves(), out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Collapses the caret whose left leaf is `index`.
    fn remove_caret(&self, index: usize) -> BinaryTree {
        match self {
            Leaf => Leaf,
            Node(l, r) => {
                if index == 0 && matches!((&**l, &**r), (Leaf, Leaf)) {
                    return Leaf;
                }
                let nl = l.leaves();
                if index < nl {
                    BinaryTree::node(l.remove_caret(index), (**r).clone())
                } else {
                    BinaryTree::node((**l).clone(), r.remove_caret(index - nl))
                }
            }
        }
    }

    /// Least common refinement: the smallest tree having both as rooted prefixes.
    pub fn common_refinement(&self, other: &BinaryTree) -> BinaryTree {
        match (self, other) {
            (Leaf, t) | (t, Leaf) => t.clone(),
            (Node(a, b), Node(c, d)) => BinaryTree::node(a.common_refinement(c), b.common_refinement(d)),
        }
    }

    /// The subtrees of `target` hanging where the leaves of `self` sit, or
    /// `None` if `self` is not a rooted prefix of `target`.
    fn grafts<'a>(&self, target: &'a BinaryTree, out: &mut Vec<&'a BinaryTree>) -> bool {
        match (self, target) {
            (Leaf, t) => {
                out.push(t);
                true
            }
            (Node(a, b), Node(c, d)) => a.grafts(c, out) && b.grafts(d, out),
            (Node(..), Leaf) => false,
        }
    }

    /// Replaces the leaves of `self`, left to right, by `subtrees`.
    fn substitute(&self, subtrees: &mut impl Iterator<Item = BinaryTree>) -> BinaryTree {
        match self {
            Leaf => subtrees.next().expect("one subtree per leaf"),
            Node(l, r) => {
                let l = l.substitute(subtrees);
                let r = r.substitute(subtrees);
                BinaryTree::node(l, r)
            }
        }
    }

    /// Every tree with `n` leaves, in recursive split order: the left subtree
    /// size runs `1..n`, and for each size left trees vary slowest.
    pub fn enumerate(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![Leaf]];
        for size in 2..=n {
            let mut here = Vec::new();
            for k in 1..size {
                for l in &table[k] {
                    for r in &table[size - k] {
                        here.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(here);
        }
        if n == 0 {
            return Vec::new();
        }
        table.swap_remove(n)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => f.write_str("."),
            Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

struct TreeParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl TreeParser<'_> {
    fn err(&self, message: impl Into<String>) -> ThompsonError {
        ThompsonError::Parse { offset: self.base + self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn tree(&mut self, depth: u32) -> Result<BinaryTree, ThompsonError> {
        if depth > DEPTH_CAP {
            return Err(self.err(format!("tree deeper than {DEPTH_CAP}")));
        }
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'.') => {
                self.pos += 1;
                Ok(Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let l = self.tree(depth + 1)?;
                let r = self.tree(depth + 1)?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(BinaryTree::node(l, r))
            }
            Some(c) => Err(self.err(format!("unexpected {:?}", *c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn parse_all(s: &str, base: usize) -> Result<BinaryTree, ThompsonError> {
        let mut p = TreeParser { bytes: s.as_bytes(), pos: 0, base };
        let t = p.tree(0)?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

impl FromStr for BinaryTree {
    type Err = ThompsonError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TreeParser::parse_all(s, 0)
    }
}

/// A sign sequence induced by a tree; the first sign is `+`, the second `-`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NSign(Vec<Sign>);

impl NSign {
    pub fn new(signs: Vec<Sign>) -> Result<Self, ThompsonError> {
        let ok = match signs.as_slice() {
            [] => false,
            [Sign::Plus] => true,
            [Sign::Plus, Sign::Minus, ..] => true,
            _ => false,
        };
        if !ok {
            let text: String = signs.iter().map(|s| s.to_string()).collect();
            return Err(ThompsonError::InvalidNSign(text));
        }
        Ok(NSign(signs))
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// An element of `F` as a pair of trees with equal leaf counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreePair {
    top: BinaryTree,
    bottom: BinaryTree,
    reduced: bool,
}

impl TreePair {
    pub fn new(top: BinaryTree, bottom: BinaryTree) -> Result<Self, ThompsonError> {
        let (a, b) = (top.leaves(), bottom.leaves());
        if a != b {
            return Err(ThompsonError::LeafCountMismatch { top: a, bottom: b });
        }
        let top = top.check_depth()?;
        let bottom = bottom.check_depth()?;
        Ok(Self::from_parts(top, bottom))
    }

    fn from_parts(top: BinaryTree, bottom: BinaryTree) -> Self {
        let reduced = common_caret(&top, &bottom).is_none();
        TreePair { top, bottom, reduced }
    }

    pub fn from_partitions(top: &SdPartition, bottom: &SdPartition) -> Result<Self, ThompsonError> {
        Self::new(BinaryTree::from_partition(top), BinaryTree::from_partition(bottom))
    }

    pub fn identity() -> Self {
        TreePair { top: Leaf, bottom: Leaf, reduced: true }
    }

    pub fn top(&self) -> &BinaryTree {
        &self.top
    }

    pub fn bottom(&self) -> &BinaryTree {
        &self.bottom
    }

    pub fn leaves(&self) -> usize {
        self.top.leaves()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_identity(&self) -> bool {
        self.reduce().top == Leaf
    }

    /// Cancels common carets until none are left.
    pub fn reduce(&self) -> TreePair {
        if self.reduced {
            return self.clone();
        }
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        while let Some(i) = common_caret(&top, &bottom) {
            top = top.remove_caret(i);
            bottom = bottom.remove_caret(i);
        }
        TreePair { top, bottom, reduced: true }
    }

    /// Adds a caret under leaf `index` of both trees; same element, one more leaf.
    pub fn add_caret(&self, index: usize) -> Result<TreePair, ThompsonError> {
        Ok(Self::from_parts(self.top.add_caret(index)?, self.bottom.add_caret(index)?))
    }

    /// The equivalent pair whose bottom tree is `target_bottom`.
    pub fn refine_to(&self, target_bottom: &BinaryTree) -> Result<TreePair, ThompsonError> {
        let mut grafts = Vec::new();
        if !self.bottom.grafts(target_bottom, &mut grafts) {
            return Err(ThompsonError::NotARefinement);
        }
        let top = self.top.substitute(&mut grafts.into_iter().cloned()).check_depth()?;
        Ok(Self::from_parts(top, target_bottom.clone()))
    }

    /// `self` followed by `other`, as maps: `x ↦ other(self(x))`. Reduced.
    pub fn multiply(&self, other: &TreePair) -> Result<TreePair, ThompsonError> {
        let common = self.bottom.common_refinement(&other.top).check_depth()?;
        let first = self.refine_to(&common)?;
        let second = other.inverse().refine_to(&common)?;
        Ok(Self::from_parts(first.top, second.top).reduce())
    }

    pub fn inverse(&self) -> TreePair {
        TreePair { top: self.bottom.clone(), bottom: self.top.clone(), reduced: self.reduced }
    }

    /// The exact image of `x` under the piecewise-linear map.
    pub fn apply(&self, x: Dyadic) -> Result<Dyadic, ThompsonError> {
        if x < Dyadic::ZERO || x > Dyadic::ONE {
            return Err(ThompsonError::OutOfRange(x));
        }
        let src = self.top.leaf_intervals()?;
        let dst = self.bottom.leaf_intervals()?;
        let i = src.partition_point(|iv| iv.right() < x);
        let (a, b) = (src[i], dst[i]);
        // slope is 2^(m_a - m_b)
        let offset = x.checked_sub(a.left())?;
        let scaled = offset.mul_pow2(a.m() as i64 - b.m() as i64)?;
        Ok(b.left().checked_add(scaled)?)
    }

    /// Membership in the oriented subgroup: both trees induce the same n-sign.
    pub fn is_oriented(&self) -> bool {
        let r = self.reduce();
        r.top.leaf_signs() == r.bottom.leaf_signs()
    }

    /// Membership test through the action on `E`: every breakpoint and
    /// subinterval midpoint of the top partition keeps its sign under the map.
    pub fn preserves_e_signs(&self) -> Result<bool, ThompsonError> {
        let part = self.top.to_partition()?;
        let points = part.breakpoints();
        let mut e = Vec::with_capacity(2 * points.len());
        for w in points.windows(2) {
            e.push(w[0].checked_add(w[1])?.mul_pow2(-1)?);
        }
        e.extend(points[1..points.len() - 1].iter().copied());
        for p in e {
            if point_sign(self.apply(p)?)? != point_sign(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// First leaf index carrying a caret in both trees.
fn common_caret(top: &BinaryTree, bottom: &BinaryTree) -> Option<usize> {
    let b = bottom.caret_positions();
    top.caret_positions().into_iter().find(|i| b.contains(i))
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.top, self.bottom)
    }
}

impl FromStr for TreePair {
    type Err = ThompsonError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bar = s.find('|').ok_or(ThompsonError::Parse {
            offset: s.len(),
            message: "expected '<top>|<bottom>'".into(),
        })?;
        let top = TreeParser::parse_all(&s[..bar], 0)?;
        let bottom = TreeParser::parse_all(&s[bar + 1..], bar + 1)?;
        TreePair::new(top, bottom)
    }
}
