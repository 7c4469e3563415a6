//! Exact Laurent polynomials in one variable `t`, over ℤ or over a prime
//! field 𝔽_p.
//!
//! A [`LaurentPoly`] stores a dense coefficient vector together with the
//! exponent of its first entry. Both ends of the vector are nonzero; the zero
//! polynomial has no coefficients and no degree. Polynomials reduced modulo a
//! prime keep every coefficient in `[0, p)`.

mod parse;
mod values;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::parse_poly;
pub use values::{eval_special, EisensteinInt, GaussianInt, SpecialValues};

/// A prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub(crate) fn big(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Laurent polynomial `Σ c_k t^k` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<BigInt>,
    modulus: Option<Prime>,
}

/// Result of [`LaurentPoly::divide_by`]: `g = d·quotient + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotient: LaurentPoly,
    pub remainder: LaurentPoly,
    pub divisible: bool,
}

impl LaurentPoly {
    fn normalized(mut min_degree: i64, mut coeffs: Vec<BigInt>, modulus: Option<Prime>) -> Self {
        if let Some(p) = modulus {
            let p = p.big();
            for c in coeffs.iter_mut() {
                *c = c.mod_floor(&p);
            }
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            coeffs.drain(..lead);
            min_degree += lead as i64;
        }
        if coeffs.is_empty() {
            min_degree = 0;
        }
        LaurentPoly {
            min_degree,
            coeffs,
            modulus,
        }
    }

    pub fn zero() -> Self {
        Self::normalized(0, Vec::new(), None)
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, degree: i64) -> Self {
        Self::normalized(degree, vec![coeff.into()], None)
    }

    /// Polynomial over ℤ with `coeffs[i]` the coefficient of `t^(min_degree + i)`.
    pub fn from_coeffs<C: Into<BigInt>>(min_degree: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::normalized(min_degree, coeffs.into_iter().map(Into::into).collect(), None)
    }

    /// Same as [`from_coeffs`](Self::from_coeffs) but reduced modulo `p`.
    pub fn from_coeffs_mod<C: Into<BigInt>>(
        min_degree: i64,
        coeffs: impl IntoIterator<Item = C>,
        p: Prime,
    ) -> Self {
        Self::normalized(min_degree, coeffs.into_iter().map(Into::into).collect(), Some(p))
    }

    /// Build from `(degree, coefficient)` pairs; repeated degrees are summed.
    pub fn from_terms<C: Into<BigInt>>(
        terms: impl IntoIterator<Item = (i64, C)>,
        modulus: Option<Prime>,
    ) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(d, c)| (d, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero().with_modulus(modulus);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (d, c) in terms {
            coeffs[(d - lo) as usize] += c;
        }
        Self::normalized(lo, coeffs, modulus)
    }

    fn with_modulus(self, modulus: Option<Prime>) -> Self {
        Self::normalized(self.min_degree, self.coeffs, modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_degree == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn modulus(&self) -> Option<Prime> {
        self.modulus
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_degree)
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_degree + self.coeffs.len() as i64 - 1)
    }

    pub fn span(&self) -> Option<i64> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    /// Dense coefficients from [`min_degree`](Self::min_degree) upward.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: i64) -> BigInt {
        let idx = degree - self.min_degree;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_degree + i as i64, c))
    }

    /// True when every nonzero term has degree in `[a, b]`.
    pub fn supported_in(&self, a: i64, b: i64) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => lo >= a && hi <= b,
            _ => true,
        }
    }

    fn common_modulus(&self, other: &Self) -> Result<Option<Prime>> {
        match (self.modulus, other.modulus) {
            (Some(p), Some(q)) if p != q => Err(Error::ModulusMismatch {
                left: p.get(),
                right: q.get(),
            }),
            (p, q) => Ok(p.or(q)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let modulus = self.common_modulus(other)?;
        Ok(self.combine(other, modulus, |acc, c| *acc += c))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let modulus = self.common_modulus(other)?;
        Ok(self.combine(other, modulus, |acc, c| *acc -= c))
    }

    fn combine(&self, other: &Self, modulus: Option<Prime>, op: impl Fn(&mut BigInt, &BigInt)) -> Self {
        if other.is_zero() {
            return self.clone().with_modulus(modulus);
        }
        if self.is_zero() {
            let mut coeffs = vec![BigInt::zero(); other.coeffs.len()];
            for (acc, c) in coeffs.iter_mut().zip(&other.coeffs) {
                op(acc, c);
            }
            return Self::normalized(other.min_degree, coeffs, modulus);
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_degree - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            op(&mut coeffs[(other.min_degree - lo) as usize + i], c);
        }
        Self::normalized(lo, coeffs, modulus)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let modulus = self.common_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero().with_modulus(modulus));
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::normalized(self.min_degree + other.min_degree, coeffs, modulus))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::normalized(
            self.min_degree,
            self.coeffs.iter().map(|c| c * k).collect(),
            self.modulus,
        )
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            min_degree: self.min_degree + k,
            ..self.clone()
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one().with_modulus(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        match self.max_degree() {
            None => self.clone(),
            Some(hi) => LaurentPoly {
                min_degree: -hi,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
                modulus: self.modulus,
            },
        }
    }

    /// Coefficient sum, i.e. the value at `t = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `Σ k·c_k`, the derivative at `t = 1`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.terms().map(|(k, c)| c * BigInt::from(k)).sum()
    }

    /// Reduce coefficients into `[0, p)`.
    pub fn reduce_mod(&self, p: Prime) -> Result<Self> {
        match self.modulus {
            Some(q) if q != p => Err(Error::ModulusMismatch {
                left: q.get(),
                right: p.get(),
            }),
            _ => Ok(self.clone().with_modulus(Some(p))),
        }
    }

    /// [`reduce_mod`](Self::reduce_mod) taking a raw integer, rejecting non-primes.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Self> {
        self.reduce_mod(Prime::new(p)?)
    }

    /// Forget the modulus, lifting residues to their representatives in `[0, p)`.
    pub fn lift(&self) -> Self {
        LaurentPoly {
            modulus: None,
            ..self.clone()
        }
    }

    /// Long division by `d` after shifting both operands to ordinary polynomials.
    ///
    /// The leading coefficient of `d` must be a unit (±1 over ℤ, nonzero mod p).
    /// Since `t` is a unit and the shifted divisor has nonzero constant term,
    /// the `divisible` flag does not depend on the shift.
    pub fn divide_by(&self, d: &Self) -> Result<Division> {
        let modulus = self.common_modulus(d)?;
        let (Some(d_lo), Some(lead)) = (d.min_degree(), d.coeffs.last()) else {
            return Err(Error::ZeroDivisor);
        };
        let lead_inv = unit_inverse(lead, modulus)?;
        if self.is_zero() {
            let z = Self::zero().with_modulus(modulus);
            return Ok(Division {
                quotient: z.clone(),
                remainder: z,
                divisible: true,
            });
        }
        let g_lo = self.min_degree;
        let (q, r) = poly_divrem(&self.coeffs, &d.coeffs, &lead_inv, modulus);
        // g·t^-g_lo = (d·t^-d_lo)·q' + r', so g = d·(q'·t^(g_lo-d_lo)) + r'·t^g_lo
        let remainder = Self::normalized(g_lo, r, modulus);
        Ok(Division {
            quotient: Self::normalized(g_lo - d_lo, q, modulus),
            divisible: remainder.is_zero(),
            remainder,
        })
    }

    /// Remainder of an ordinary polynomial (all exponents ≥ 0) modulo `d`,
    /// where `d` is also ordinary with unit leading coefficient.
    pub(crate) fn poly_rem(&self, d: &Self) -> Result<Self> {
        let modulus = self.common_modulus(d)?;
        debug_assert!(self.min_degree().is_none_or(|lo| lo >= 0));
        let lead = d.coeffs.last().ok_or(Error::ZeroDivisor)?;
        let lead_inv = unit_inverse(lead, modulus)?;
        if self.is_zero() {
            return Ok(self.clone().with_modulus(modulus));
        }
        // Pad from t^0 and from d's t^0 so exponents line up.
        let g: Vec<BigInt> = std::iter::repeat_n(BigInt::zero(), self.min_degree as usize)
            .chain(self.coeffs.iter().cloned())
            .collect();
        let dd: Vec<BigInt> = std::iter::repeat_n(BigInt::zero(), d.min_degree as usize)
            .chain(d.coeffs.iter().cloned())
            .collect();
        let (_, r) = poly_divrem(&g, &dd, &lead_inv, modulus);
        Ok(Self::normalized(0, r, modulus))
    }
}

fn unit_inverse(lead: &BigInt, modulus: Option<Prime>) -> Result<BigInt> {
    match modulus {
        None if lead.abs().is_one() => Ok(lead.clone()),
        None => Err(Error::NonUnitDivisor(lead.to_string())),
        Some(p) => {
            let p = p.big();
            let l = lead.mod_floor(&p);
            if l.is_zero() {
                return Err(Error::NonUnitDivisor(lead.to_string()));
            }
            // Fermat inverse
            Ok(l.modpow(&(&p - 2u32), &p))
        }
    }
}

/// Ordinary long division on ascending coefficient vectors.
fn poly_divrem(
    g: &[BigInt],
    d: &[BigInt],
    lead_inv: &BigInt,
    modulus: Option<Prime>,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let reduce = |x: BigInt| match modulus {
        Some(p) => x.mod_floor(&p.big()),
        None => x,
    };
    let mut r: Vec<BigInt> = g.to_vec();
    if g.len() < d.len() {
        return (Vec::new(), r);
    }
    let dl = d.len() - 1;
    let mut q = vec![BigInt::zero(); g.len() - dl];
    for i in (dl..g.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let c = reduce(&r[i] * lead_inv);
        for (j, dj) in d.iter().enumerate() {
            let k = i - dl + j;
            r[k] = reduce(&r[k] - &c * dj);
        }
        q[i - dl] = c;
    }
    r.truncate(dl);
    (q, r)
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.modulus
            .cmp(&other.modulus)
            .then(self.max_degree().cmp(&other.max_degree()))
            .then_with(|| {
                self.terms()
                    .rev()
                    .map(|(k, c)| (k, c.clone()))
                    .cmp(other.terms().rev().map(|(k, c)| (k, c.clone())))
            })
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (deg, c)) in self.terms().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if deg == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                1 => f.write_str("t")?,
                _ => write!(f, "t^{deg}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s, None)
    }
}

/// Panics on a modulus mismatch; use [`LaurentPoly::try_add`] to handle it.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        self.try_add(rhs).expect("modulus mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self.try_sub(rhs).expect("modulus mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        self.try_mul(rhs).expect("modulus mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: Self) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| &acc * &x)
    }
}

/// `h(t) = (t³−1)(t−1)(t²+1)`
pub fn h_poly() -> LaurentPoly {
    let a = LaurentPoly::from_coeffs(0, [-1, 0, 0, 1]);
    let b = LaurentPoly::from_coeffs(0, [-1, 1]);
    let c = LaurentPoly::from_coeffs(0, [1, 0, 1]);
    &(&a * &b) * &c
}

/// `f(t) = (t²−t+1)·h(t)`, the degree-8 product of cyclotomic factors.
pub fn f_poly() -> LaurentPoly {
    &LaurentPoly::from_coeffs(0, [1, -1, 1]) * &h_poly()
}
