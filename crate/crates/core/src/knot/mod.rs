//! Knot diagrams and their Jones polynomials.
//!
//! `V(t) = (−A)^(−3w)·⟨D⟩` evaluated at `A = t^(−1/4)`.

mod braid;
mod bracket;
mod pd;

pub use braid::{parse_braid, BraidWord};
pub use bracket::{
    bracket_contracted, bracket_contracted_with_order, bracket_state_sum, kauffman_bracket, NAIVE_STATE_SUM_LIMIT,
};
pub use pd::{parse_pd, PDCode};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub fn braid_to_pd(w: &BraidWord) -> Result<PDCode> {
    w.to_pd()
}

/// Convert a bracket to `V(t)` given the diagram's writhe.
pub fn bracket_to_jones(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly> {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let mut terms = Vec::new();
    for (e, c) in bracket.terms() {
        let e = e - 3 * writhe;
        if e % 4 != 0 {
            return Err(Error::NonIntegralExponent(e));
        }
        terms.push((-e / 4, c * BigInt::from(sign)));
    }
    Ok(LaurentPoly::from_terms(terms, None))
}

/// Jones polynomial of a knot diagram.
pub fn jones(pd: &PDCode) -> Result<LaurentPoly> {
    bracket_to_jones(&kauffman_bracket(pd), pd.writhe()?)
}

/// Jones polynomial through the contraction route, as an independent check.
pub fn jones_contracted(pd: &PDCode) -> Result<LaurentPoly> {
    bracket_to_jones(&bracket_contracted(pd), pd.writhe()?)
}

pub fn connected_sum(v1: &LaurentPoly, v2: &LaurentPoly) -> Result<LaurentPoly> {
    v1.try_mul(v2)
}

pub fn mirror(v: &LaurentPoly) -> LaurentPoly {
    v.invert_variable()
}
