//! Finite transitive groupoids, their actions and Bredon (co)homology.
//!
//! Everything here is exact: integers are arbitrary precision and every
//! structural claim (group axioms, equivariance, isomorphisms between
//! constructions) is certified by exhaustive enumeration over the finite
//! data rather than assumed.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and random instance generation live in the companion `bredon-cli`
//! crate.
//!
//! Conventions used throughout:
//!
//! * composition `compose(f, g) = f∘g` is defined when `source(f) == target(g)`;
//! * groupoids act on spaces from the right: `x·g` is defined when
//!   `anchor(x) == target(g)` and lands over `source(g)`;
//! * isotropy groups therefore act on fibres from the right, and the orbit
//!   category is built from right cosets `K∘g`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod bredon;
pub mod bundles;
pub mod fixtures;
pub mod gcw;
pub mod group;
pub mod groupoid;
pub mod gspace;
pub mod orbitcat;
pub mod zlinalg;

mod util;

pub mod failure;
pub use failure::VerificationFailure;

pub use bredon::{
    bredon_cohomology, bredon_homology, coend_tensor, nat_group, BredonComplex, CoefficientSystem, Presentation,
    Variance,
};
pub use bundles::{GroupBundle, PrincipalBundle};
pub use gcw::{ChainFunctor, GcwComplex, PlainComplex};
pub use group::{FiniteGroup, GroupSet};
pub use groupoid::{ArrowId, FiniteGroupoid, IsotropyGroup, ObjectId, TargetFibre};
pub use gspace::{EquivariantMap, FibreSpace, FiniteGSpace, PointId};
pub use orbitcat::{OrbitCategory, Subgroup};
pub use zlinalg::{FgAbelianGroup, IntMatrix, SnfResult};
