//! Exact computation with finite permutation groups and restricted wreath
//! products `G ≀_X H`, aimed at invariable generation.
//!
//! * [`perm`] and [`group`]: permutations, closure, conjugacy classes and
//!   subgroup lattices of small groups.
//! * [`action`]: head actions (finite, or `ℤ` by translation) and the
//!   torsion-type property.
//! * [`wreath`]: arithmetic in `G ≀_X H` with finitely supported base tuples.
//! * [`invgen`]: deciding invariable generation two independent ways.
//! * [`constructions`]: explicit invariable generating sets and the `α`/`β`
//!   elements of `G ≀ ℤ`.
//! * [`classify`]: the FIG / IG / ¬IG status engine.
//! * [`verify`]: seeded self-checks of the conjugation identities and
//!   constructions.

pub mod action;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod group;
pub mod invgen;
pub mod named;
pub mod perm;
pub mod verify;
pub mod wreath;

pub use action::{ActionDescriptor, ActionSpec, FiniteAction, HeadElement, OrbitSize, Point};
pub use classify::{GroupDescriptor, IgStatus};
pub use error::{Error, Result};
pub use group::{closure, FiniteGroup};
pub use perm::Perm;
pub use wreath::{BaseTuple, Wreath, WreathElement};
