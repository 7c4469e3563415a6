//! Exact computation, classification and mod-p census of knot Jones
//! polynomials.
//!
//! - [`laurent`]: Laurent polynomials over ℤ and 𝔽_p, exact values at roots of unity
//! - [`classify`]: root-of-unity conditions and the four reference families
//! - [`modp`]: reference sets, residues modulo `f̄`, admissible windows
//! - [`knot`]: PD codes, braid closures, Kauffman bracket, Jones polynomial
//! - [`knotdb`]: named knot table and connected-sum expressions
//! - [`verify`]: census checks over degree windows of span 8

pub mod classify;
pub mod error;
pub mod knot;
pub mod knotdb;
pub mod laurent;
pub mod modp;
pub mod verify;

pub use classify::{check_conditions, classify, reference_poly, Classification, ConditionsReport, Family};
pub use error::{Error, Result};
pub use laurent::{eval_special, parse_poly, LaurentPoly, Prime, SpecialValues};

/// Serialize any `Display` value as its string form.
pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
