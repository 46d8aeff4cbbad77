//! Exact arithmetic for the P^(k-1)-functor `Φ: D^b(X) → D^b(X^[k])` attached to a
//! K3 surface `X` with `NS(X) = Zh`.
//!
//! The crate works entirely at the level of numerical invariants: Mukai vectors and
//! their pairing, the admissibility conditions under which `Φ(E)` is a stable
//! vector bundle, the rank and first Chern class of `Φ(E)` on the Hilbert scheme,
//! graded Ext dimensions, and a complete bounded search for admissible vectors.
//! Every quantity is an arbitrary-precision integer or an exact rational.

pub mod certificate;
pub mod conditions;
mod decimal;
mod error;
pub mod hilb;
pub mod lattice;
pub mod pfunctor;
pub mod search;

pub use certificate::{BundleBlock, Certificate, ExtensionEuler, Notes, VectorEcho};
pub use conditions::{AdmissibilityReport, InequalityCheck, VanishingCertificate};
pub use error::{Error, Result};
pub use hilb::{DestabilizerCase, HilbNSClass, ProductClass, SheafInvariants};
pub use lattice::{K3Surface, MukaiVector};
pub use pfunctor::GradedDims;
pub use search::{enumerate, search_bounds, SearchBounds, SearchHit, SearchQuery};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
