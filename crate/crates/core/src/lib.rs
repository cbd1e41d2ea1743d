//! Exact root-system combinatorics for minimal inversion complete sets.
//!
//! The crate builds positive root systems of every irreducible type, words in
//! the Weyl group with their inversion sets, the abelian ideals of the Borel
//! subalgebra, and the canonical minimal inversion complete sets attached to
//! maximal abelian ideals. All arithmetic is on small integers.

pub mod error;
pub mod ideals;
pub mod mics;
pub mod rootsys;
pub mod weylword;

pub use error::{Error, Result};
pub use ideals::{AbelianIdeal, Fiber, IdealLattice, PairingCheck};
pub use mics::{
    ConjectureReport, ConjectureRow, ConjectureScope, Construction, FamilyTag, HatData, Member,
    MicsFamily, MicsStats, MicsVerdict, StronglyAbelianMax, MultiplicityCheck, HatCheck,
    Witness, F4_WITNESS,
};
pub use rootsys::{
    CartanType, Labeling, LengthClass, LeviComponent, Root, RootId, RootSet, RootSystem, SystemId,
};
pub use weylword::{Reducedness, Transporter, WeylElement, WeylWord};
