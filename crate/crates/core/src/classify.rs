//! Root-of-unity conditions on knot Jones polynomials and the four-family
//! classification modulo `f(t)`.
//!
//! Every knot Jones polynomial `V` satisfies
//!
//! 1. `V(1) = 1`
//! 2. `V′(1) = 0`
//! 3. `V(ζ3) = 1`
//! 4. `V(i) = ±1`
//! 5. `V(ζ6) = ±(√−3)^m`
//!
//! and is congruent modulo `f(t)` to exactly one polynomial of degree ≤ 7 from
//! the families
//!
//! | family | base                       | `V(i)` | `m`  |
//! |--------|----------------------------|--------|------|
//! | I      | `1 + n·h`                  | `+1`   | even |
//! | II     | `V(3₁) + n·h·(2t−1)`       | `−1`   | odd  |
//! | III    | `V(5₁) + n·h`              | `−1`   | even |
//! | IV     | `V(8₂₁) + n·h·(2t−1)`      | `+1`   | odd  |

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{eval_special, f_poly, h_poly, EisensteinInt, GaussianInt, LaurentPoly};

/// `V(3₁) = −t⁴ + t³ + t`
pub fn trefoil_jones() -> LaurentPoly {
    LaurentPoly::from_coeffs(1, [1, 0, 1, -1])
}

/// `V(5₁) = −t⁷ + t⁶ − t⁵ + t⁴ + t²`
pub fn cinquefoil_jones() -> LaurentPoly {
    LaurentPoly::from_coeffs(2, [1, 0, 1, -1, 1, -1])
}

/// `V(8₂₁) = t⁷ − 2t⁶ + 2t⁵ − 3t⁴ + 3t³ − 2t² + 2t`
pub fn knot_8_21_jones() -> LaurentPoly {
    LaurentPoly::from_coeffs(1, [2, -2, 3, -3, 2, -2, 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    I,
    II,
    III,
    IV,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::I, Family::II, Family::III, Family::IV];

    fn base(self) -> LaurentPoly {
        match self {
            Family::I => LaurentPoly::one(),
            Family::II => trefoil_jones(),
            Family::III => cinquefoil_jones(),
            Family::IV => knot_8_21_jones(),
        }
    }

    /// The polynomial multiplied by `n`: `h` or `h·(2t−1)`.
    fn step(self) -> LaurentPoly {
        match self {
            Family::I | Family::III => h_poly(),
            Family::II | Family::IV => &h_poly() * &LaurentPoly::from_coeffs(0, [-1, 2]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::IV => "IV",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "I" | "i" | "1" => Family::I,
            "II" | "ii" | "2" => Family::II,
            "III" | "iii" | "3" => Family::III,
            "IV" | "iv" | "4" => Family::IV,
            _ => {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("unknown family {s:?}"),
                })
            }
        })
    }
}

/// The family polynomial at parameter `n`; its degrees lie in `[0, 7]`.
pub fn reference_poly(family: Family, n: &BigInt) -> LaurentPoly {
    &family.base() + &family.step().scale(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsReport {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    pub c5: bool,
    /// `V(i)` when condition 4 holds.
    pub arf_sign: Option<i8>,
    /// Exponent of `√−3` when condition 5 holds.
    pub m: Option<u32>,
    pub zeta6_sign: Option<i8>,
    pub at_i: GaussianInt,
    pub at_zeta6: EisensteinInt,
}

impl ConditionsReport {
    pub fn all_pass(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4 && self.c5
    }

    pub fn failed(&self) -> Vec<&'static str> {
        [
            (self.c1, "V(1)=1"),
            (self.c2, "V'(1)=0"),
            (self.c3, "V(zeta3)=1"),
            (self.c4, "V(i)=±1"),
            (self.c5, "V(zeta6)=±(√-3)^m"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

/// Exact `log₃ x`, if `x` is a power of three (`3⁰ = 1` included).
pub fn log3_exact(x: &BigInt) -> Option<u32> {
    if !x.is_positive() {
        return None;
    }
    let three = BigInt::from(3);
    let mut x = x.clone();
    let mut k = 0;
    while !x.is_one() {
        let (q, r) = x.div_rem(&three);
        if !r.is_zero() {
            return None;
        }
        x = q;
        k += 1;
    }
    Some(k)
}

pub fn check_conditions(v: &LaurentPoly) -> Result<ConditionsReport> {
    let vals = eval_special(v)?;
    let c4 = vals.at_i.im.is_zero() && vals.at_i.re.abs().is_one();
    let arf_sign = c4.then(|| if vals.at_i.re.is_positive() { 1 } else { -1 });

    let mut m = None;
    let mut zeta6_sign = None;
    if let Some(k) = log3_exact(&vals.at_zeta6.norm()) {
        let unit = EisensteinInt::sqrt_minus3().pow(k);
        if vals.at_zeta6 == unit {
            m = Some(k);
            zeta6_sign = Some(1);
        } else if vals.at_zeta6 == -unit {
            m = Some(k);
            zeta6_sign = Some(-1);
        }
    }

    Ok(ConditionsReport {
        c1: vals.at_one.is_one(),
        c2: vals.deriv_at_one.is_zero(),
        c3: vals.at_zeta3 == EisensteinInt::one(),
        c4,
        c5: m.is_some(),
        arf_sign,
        m,
        zeta6_sign,
        at_i: vals.at_i,
        at_zeta6: vals.at_zeta6,
    })
}

/// True iff `|2n − 1|` or `|2n + 1|` is a power of 3.
pub fn is_n_realizable(n: &BigInt) -> bool {
    let two_n: BigInt = n * 2;
    let minus: BigInt = &two_n - 1;
    let plus: BigInt = &two_n + 1;
    log3_exact(&minus.abs()).is_some() || log3_exact(&plus.abs()).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub family: Family,
    #[serde(serialize_with = "crate::serialize_display")]
    pub n: BigInt,
    pub base: LaurentPoly,
    pub realizable_n: bool,
}

/// Classify a polynomial satisfying all five conditions.
///
/// The family is read off the sign of `V(i)` and the parity of `m`; `n` is
/// solved from `V(ζ6)`. Divisibility of `V − base` by `f` is re-checked.
pub fn classify(v: &LaurentPoly) -> Result<Classification> {
    let report = check_conditions(v)?;
    if !report.all_pass() {
        return Err(Error::ConditionsFailed(report.failed().join(", ")));
    }
    let arf = report.arf_sign.expect("c4");
    let odd_m = report.m.expect("c5") % 2 == 1;
    let family = match (odd_m, arf) {
        (false, 1) => Family::I,
        (true, -1) => Family::II,
        (false, _) => Family::III,
        (true, _) => Family::IV,
    };
    let z = &report.at_zeta6;
    let half = |x: BigInt| -> Result<BigInt> {
        let (q, r) = x.div_rem(&BigInt::from(2));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::CrossCheckFailed(format!("V(zeta6) = {z} gives a non-integral n")))
        }
    };
    let n = match family {
        Family::I | Family::III => {
            if !z.b.is_zero() {
                return Err(Error::CrossCheckFailed(format!("V(zeta6) = {z} is not an integer")));
            }
            if family == Family::I {
                half(&z.a - 1)?
            } else {
                half(&z.a + 1)?
            }
        }
        Family::II | Family::IV => {
            // c·(2ζ6 − 1) = −c + 2c·ζ6
            let c = -&z.a;
            if z.b != &c * 2 {
                return Err(Error::CrossCheckFailed(format!("V(zeta6) = {z} is not a multiple of √-3")));
            }
            half(c - 1)?
        }
    };
    let base = reference_poly(family, &n);
    if !(v - &base).divide_by(&f_poly())?.divisible {
        return Err(Error::CrossCheckFailed(format!(
            "{v} - ({base}) is not divisible by f"
        )));
    }
    Ok(Classification {
        family,
        realizable_n: is_n_realizable(&n),
        n,
        base,
    })
}

/// Parameter map under mirroring: `n ↦ n` for families I, III and
/// `n ↦ −n − 1` for II, IV.
pub fn mirror_parameter(family: Family, n: &BigInt) -> BigInt {
    match family {
        Family::I | Family::III => n.clone(),
        Family::II | Family::IV => -n - 1,
    }
}
