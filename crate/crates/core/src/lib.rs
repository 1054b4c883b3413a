//! Choice-based rough approximations over finite tolerance approximation
//! spaces.
//!
//! A tolerance space is a finite universe with a reflexive, symmetric
//! relation. Its granules are the *blocks* of the relation (maximal sets of
//! pairwise related points). Approximations are built under the requirement
//! that definite objects are unions of pairwise disjoint blocks; a
//! deterministic, lattice-coherent choice function [`choice::lambda_select`]
//! resolves the loss of uniqueness.
//!
//! The crate is `no_std` and only needs `alloc`. IO, reports and the CLI live
//! in the companion `lcd-rough-cli` crate.
//!
//! Layout:
//!
//! * [`space`] / [`blocks`]: tolerance spaces, neighborhoods, the dominance
//!   partition and block enumeration.
//! * [`choice`]: block collections, the disjoint-subfamily searches and the
//!   choice function.
//! * [`approx`]: the approximation operators and profiles.
//! * [`quotient`]: the quotient partial algebra of subsets with equal
//!   profiles.
//! * [`tarski`]: block-complement families, implication and filters.
//! * [`audit`]: executable checks for every catalogued claim, sweeps and
//!   replayable counterexamples.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx;
pub mod audit;
pub mod blocks;
pub mod choice;
mod error;
pub mod quotient;
pub mod space;
pub mod tarski;

pub use approx::{ApproxSpace, ApproximationProfile, ChoiceConfig, EmptyCover};
pub use blocks::{Block, BlockFamily};
pub use choice::{BlockCollection, CollectionFamily};
pub use error::Error;
pub use quotient::{ClassId, PartialValue, QuotientAlgebra};
pub use space::{Partition, Subset, ToleranceSpace};

pub type Result<T, E = Error> = core::result::Result<T, E>;
