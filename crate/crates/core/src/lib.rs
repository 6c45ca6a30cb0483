//! Half grid diagrams built from Thompson group elements.
//!
//! A standard dyadic partition of `[0,1]` gives a half grid (an `n × 2n` array of
//! X and O marks); two half grids with matching columns stack into a grid
//! diagram, and hence a link. The crate covers the exact arithmetic, the tree
//! pair algebra, the construction, link invariants of the resulting diagrams and
//! link group presentations, plus an exhaustive checking harness in [`verify`].

pub mod dyadic;
pub mod exec;
pub mod halfgrid;
pub mod linkdiag;
pub mod linkgroup;
pub mod thompson;
pub mod verify;

pub use dyadic::{Dyadic, SdInterval, SdPartition, Sign, SignedPoint};
pub use exec::Exec;
pub use halfgrid::{GridDiagram, HalfGrid, Permutation};
pub use linkgroup::GroupPresentation;
pub use thompson::{BinaryTree, NSign, TreePair};
