//! Finite topological semigroups: tables, congruences, embeddings into
//! transformation and partial-permutation monoids, and forcing certificates
//! for truncated countable examples.

pub mod bits;
pub mod embed;
pub mod error;
pub mod obstruct;
pub mod semigroup;
pub mod topo;
pub mod transforms;

pub use bits::Bits;
pub use embed::{Image, RepresentationMap};
pub use error::{Error, Result};
pub use obstruct::{ObstructionCertificate, Target, Verdict};
pub use semigroup::{Congruence, CongruenceKind, FinSemigroup, InverseStructure};
pub use topo::{TopSpec, TruncatedPresentation};
