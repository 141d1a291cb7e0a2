//! Generalized rough sets over symmetric and transitive relations and the
//! matroids they induce.
//!
//! A symmetric and transitive relation `R` on a finite universe `U` gives the
//! lower and upper approximation operators of [`rough`], and also a matroid
//! `M(R)` whose circuits are the related pairs ([`bridge`]). The crate computes
//! both sides, converts between them, and ships exhaustive checkers
//! ([`verify`]) that confirm or refute each claimed link on small universes.
//!
//! Exhaustive loops run on rayon when the `parallel` feature is enabled
//! (default); see [`par::Strategy`].

pub mod bridge;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod io;
pub mod matroid;
pub mod par;
pub mod relation;
pub mod rough;
pub mod sample;
pub mod universe;
pub mod verify;

pub use error::{Error, Result, Violation};
pub use family::SetFamily;
pub use matroid::{Axiom, AxiomReport, AxiomWitness, Matroid};
pub use par::Strategy;
pub use relation::{Classes, PropertyReport, Relation};
pub use rough::{ApproxReport, ProbeReport, Property, Rational};
pub use universe::{ElementSet, Universe, ENUMERATION_CAP, MAX_UNIVERSE};
