//! Exact values at the roots of unity `1, i, ζ3, ζ6`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// `re + im·i`
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// `i^k`
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianInt {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianInt {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

/// `a + b·ζ6` in ℤ[ζ6], where `ζ6² = ζ6 − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn zeta6() -> Self {
        Self::new(0, 1)
    }

    /// `ζ3 = ζ6 − 1`
    pub fn zeta3() -> Self {
        Self::new(-1, 1)
    }

    /// `√−3 = 2ζ6 − 1`
    pub fn sqrt_minus3() -> Self {
        Self::new(-1, 2)
    }

    /// `ζ6^k` from the period-6 cycle `1, ζ6, ζ6−1, −1, −ζ6, 1−ζ6`.
    pub fn zeta6_pow(k: i64) -> Self {
        match k.rem_euclid(6) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 1),
            3 => Self::new(-1, 0),
            4 => Self::new(0, -1),
            _ => Self::new(1, -1),
        }
    }

    /// Complex conjugate: `(a + b) − b·ζ6`.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// `a² + ab + b²`
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        EisensteinInt {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        EisensteinInt {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        EisensteinInt {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd(ω − 1)
        let bd = &self.b * &o.b;
        EisensteinInt {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}ζ6", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialValues {
    #[serde(serialize_with = "crate::serialize_display")]
    pub at_one: BigInt,
    #[serde(serialize_with = "crate::serialize_display")]
    pub deriv_at_one: BigInt,
    pub at_i: GaussianInt,
    pub at_zeta3: EisensteinInt,
    pub at_zeta6: EisensteinInt,
}

/// Evaluate an integer Laurent polynomial at `1, i, ζ3, ζ6` and take `g′(1)`.
pub fn eval_special(g: &LaurentPoly) -> Result<SpecialValues> {
    if let Some(p) = g.modulus() {
        return Err(Error::ModularInput(p.get()));
    }
    let mut at_i = GaussianInt::default();
    let mut at_zeta3 = EisensteinInt::default();
    let mut at_zeta6 = EisensteinInt::default();
    for (k, c) in g.terms() {
        at_i = at_i + scale_g(GaussianInt::i_pow(k), c);
        at_zeta3 = at_zeta3 + EisensteinInt::zeta6_pow(2 * k).scale(c);
        at_zeta6 = at_zeta6 + EisensteinInt::zeta6_pow(k).scale(c);
    }
    Ok(SpecialValues {
        at_one: g.value_at_one(),
        deriv_at_one: g.derivative_at_one(),
        at_i,
        at_zeta3,
        at_zeta6,
    })
}

fn scale_g(z: GaussianInt, c: &BigInt) -> GaussianInt {
    GaussianInt {
        re: z.re * c,
        im: z.im * c,
    }
}

impl Serialize for GaussianInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for EisensteinInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
