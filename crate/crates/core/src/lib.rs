//! Combinatorics of local models: root data, finite and extended affine Weyl
//! groups, Kottwitz–Rapoport admissible sets, and the `B×B`-orbit poset of
//! the wonderful compactification together with the He–Lam map relating the
//! two.
//!
//! Everything is exact integer arithmetic over enumerated groups. The heavy
//! verification loops run through [`par`], which uses rayon when the
//! `parallel` feature is enabled and plain iterators otherwise.

pub mod admissible;
pub mod affine_weyl;
mod error;
pub mod par;
pub mod poset;
pub mod report;
pub mod root_system;
mod subset;
pub mod weyl;
pub mod wonderful;

pub use error::{Error, Result};
pub use subset::NodeSet;

pub use admissible::{AdmissibleSet, ParahoricProjection};
pub use affine_weyl::{AffineElement, AffineWeylGroup, BoundedWindow, OmegaClass};
pub use root_system::{CartanType, Coweight, Family, LatticeChoice, RootDatum};
pub use weyl::{FiniteWeylGroup, WeylElement};
pub use wonderful::{OrbitLabel, SliceSet, Wonderful};
