//! Jones polynomials modulo a prime.
//!
//! Reducing the four-family classification mod `p` leaves at most `4p`
//! reference polynomials of degree ≤ 7. A mod-`p` Laurent polynomial is
//! *admissible* when its class in `𝔽_p[t^±1]/(f̄)` is one of them. In a degree
//! window `[a, b]` of width at least 8 the residue map is a surjective linear
//! map onto `𝔽_p^8`, so every admissible class contributes an affine subspace
//! of size `p^(b−a−7)`.

mod linalg;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::classify::{reference_poly, Family};
use crate::error::{Error, Result};
use crate::laurent::{f_poly, LaurentPoly, Prime};
use linalg::{FpMatrix, Solver};

/// Default number of members an [`AdmissibleWindow`] materializes.
pub const DEFAULT_MEMBER_CAP: u64 = 1 << 16;

/// Largest brute-force search space (`p^(b−a+1)`).
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceEntry {
    pub family: Family,
    /// Parameter in `0..p`.
    pub n: u64,
    pub poly: LaurentPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceSet {
    pub p: Prime,
    pub entries: Vec<ReferenceEntry>,
    pub distinct_count: usize,
    #[serde(skip)]
    index: HashMap<LaurentPoly, usize>,
}

impl ReferenceSet {
    fn from_entries(p: Prime, entries: Vec<ReferenceEntry>) -> Self {
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            index.entry(e.poly.clone()).or_insert(i);
        }
        ReferenceSet {
            p,
            distinct_count: index.len(),
            entries,
            index,
        }
    }

    /// Distinct reference polynomials, in order of first appearance.
    pub fn distinct(&self) -> Vec<&LaurentPoly> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(i, e)| self.index[&e.poly] == *i)
            .map(|(_, e)| &e.poly)
            .collect()
    }

    /// Index of the first entry whose polynomial equals `residue`.
    pub fn lookup(&self, residue: &LaurentPoly) -> Option<usize> {
        self.index.get(residue).copied()
    }

    /// Index of the entry congruent to `g` modulo `f̄`, if any.
    pub fn admissible_index(&self, g: &LaurentPoly) -> Result<Option<usize>> {
        let g = g.reduce_mod(self.p)?;
        Ok(self.lookup(&canonical_residue(&g)?))
    }
}

/// All `4p` reduced family polynomials, `n` ranging over `0..p`.
pub fn reference_set(p: Prime) -> ReferenceSet {
    let mut entries = Vec::with_capacity(4 * p.get() as usize);
    for family in Family::ALL {
        for n in 0..p.get() {
            let poly = reference_poly(family, &BigInt::from(n))
                .reduce_mod(p)
                .expect("integer polynomial");
            entries.push(ReferenceEntry { family, n, poly });
        }
    }
    ReferenceSet::from_entries(p, entries)
}

/// `{±3^l mod p}`
fn signed_powers_of_three(p: u64) -> Vec<bool> {
    let mut hit = vec![false; p as usize];
    let mut x = 1u64;
    loop {
        hit[x as usize] = true;
        hit[((p - x) % p) as usize] = true;
        x = x * 3 % p;
        if x == 1 {
            break;
        }
    }
    hit
}

/// Reference entries whose parameter is compatible with `V(ζ6) = ±3^l` or
/// `±3^l·√−3`: family I and II/IV keep `1 + 2n ∈ ±⟨3⟩`, family III keeps
/// `2n − 1 ∈ ±⟨3⟩`.
pub fn refined_reference_set(p: Prime) -> Result<ReferenceSet> {
    let q = p.get();
    if q < 5 {
        return Err(Error::PrimeTooSmall(q));
    }
    let allowed = signed_powers_of_three(q);
    let keep = |e: &ReferenceEntry| {
        let v = match e.family {
            Family::III => (2 * e.n + q - 1) % q,
            _ => (2 * e.n + 1) % q,
        };
        allowed[v as usize]
    };
    let entries = reference_set(p).entries.into_iter().filter(keep).collect();
    Ok(ReferenceSet::from_entries(p, entries))
}

/// Residue of `t⁻¹` modulo `f`: writing `f = t·q + 1` gives `t⁻¹ ≡ −q`.
fn inverse_t_residue(f: &LaurentPoly) -> LaurentPoly {
    debug_assert_eq!(f.min_degree(), Some(0));
    let q = (f - &LaurentPoly::one().with_modulus_of(f)).shift(-1);
    -&q
}

impl LaurentPoly {
    fn with_modulus_of(self, other: &LaurentPoly) -> LaurentPoly {
        match other.modulus() {
            Some(p) => self.reduce_mod(p).expect("fresh integer polynomial"),
            None => self,
        }
    }
}

/// The unique representative of degree ≤ 7 of `g` modulo `f` (or `f̄`).
///
/// Works over ℤ and over 𝔽_p; `f` is monic with constant term 1, so `t` is
/// invertible modulo `f`.
pub fn canonical_residue(g: &LaurentPoly) -> Result<LaurentPoly> {
    let f = f_poly().with_modulus_of(g);
    let Some(lo) = g.min_degree() else {
        return Ok(g.clone());
    };
    if lo >= 0 {
        return g.poly_rem(&f);
    }
    let k = (-lo) as u64;
    let head = g.shift(-lo).poly_rem(&f)?;
    // t^lo ≡ (t⁻¹)^k, by square-and-multiply
    let mut base = inverse_t_residue(&f);
    let mut acc = LaurentPoly::one().with_modulus_of(g);
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &base).poly_rem(&f)?;
        }
        e >>= 1;
        if e > 0 {
            base = (&base * &base).poly_rem(&f)?;
        }
    }
    (&head * &acc).poly_rem(&f)
}

/// Entry index in [`reference_set`] congruent to `g`, which must be reduced mod p.
pub fn is_admissible(g: &LaurentPoly) -> Result<Option<usize>> {
    let p = g
        .modulus()
        .ok_or(Error::NeedsModulus)?;
    reference_set(p).admissible_index(g)
}

fn check_window(a: i64, b: i64) -> Result<()> {
    if b - a < 7 {
        Err(Error::WindowTooNarrow { a, b })
    } else {
        Ok(())
    }
}

/// `(4p·p^(b−a−7), 4/p^7)`
pub fn admissible_bound(p: Prime, a: i64, b: i64) -> Result<(BigUint, BigRational)> {
    check_window(a, b)?;
    let pb = BigUint::from(p.get());
    let width = (b - a + 1) as u32;
    let bound = BigUint::from(4u32) * &pb * pb.pow(width - 8);
    let total = pb.pow(width);
    let density = BigRational::new(bound.clone().into(), total.into());
    Ok((bound, density))
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibleWindow {
    pub p: Prime,
    pub a: i64,
    pub b: i64,
    #[serde(serialize_with = "crate::serialize_display")]
    pub count: BigUint,
    #[serde(serialize_with = "crate::serialize_display")]
    pub bound: BigUint,
    #[serde(serialize_with = "crate::serialize_display")]
    pub density: BigRational,
    /// Number of distinct reference residues.
    pub classes: usize,
    members: Option<Vec<LaurentPoly>>,
    #[serde(skip)]
    particulars: Vec<Vec<u64>>,
    #[serde(skip)]
    kernel: Vec<Vec<u64>>,
}

impl AdmissibleWindow {
    /// Sorted members, when the count did not exceed the cap.
    pub fn members(&self) -> Option<&[LaurentPoly]> {
        self.members.as_deref()
    }

    /// Every member, lazily, in a deterministic order.
    pub fn iter(&self) -> impl Iterator<Item = LaurentPoly> + '_ {
        let p = self.p;
        let a = self.a;
        let k = self.kernel.len();
        self.particulars.iter().flat_map(move |x0| {
            let mut digits = vec![0u64; k];
            let mut done = false;
            std::iter::from_fn(move || {
                if done {
                    return None;
                }
                let mut x = x0.clone();
                for (c, v) in digits.iter().zip(&self.kernel) {
                    if *c != 0 {
                        for (xi, vi) in x.iter_mut().zip(v) {
                            *xi = (*xi + c * vi) % p.get();
                        }
                    }
                }
                // odometer
                done = true;
                for d in digits.iter_mut() {
                    *d += 1;
                    if *d < p.get() {
                        done = false;
                        break;
                    }
                    *d = 0;
                }
                Some(LaurentPoly::from_coeffs_mod(a, x, p))
            })
        })
    }

    pub fn contains(&self, g: &LaurentPoly) -> Result<bool> {
        if !g.supported_in(self.a, self.b) {
            return Ok(false);
        }
        Ok(reference_set(self.p).admissible_index(g)?.is_some())
    }
}

/// Residue of `t^k` as a length-8 vector over 𝔽_p.
fn residue_vector(p: Prime, k: i64) -> Result<Vec<u64>> {
    let r = canonical_residue(&LaurentPoly::monomial(1, k).reduce_mod(p)?)?;
    Ok((0..8).map(|i| r.coeff(i).to_u64().expect("reduced")).collect())
}

pub fn enumerate_admissible(p: Prime, a: i64, b: i64) -> Result<AdmissibleWindow> {
    enumerate_admissible_with_cap(p, a, b, DEFAULT_MEMBER_CAP)
}

/// Solve the residue map on the window `[a, b]` and collect the preimages of
/// the distinct reference residues.
pub fn enumerate_admissible_with_cap(p: Prime, a: i64, b: i64, cap: u64) -> Result<AdmissibleWindow> {
    let (bound, density) = admissible_bound(p, a, b)?;
    let width = (b - a + 1) as usize;
    let mut m = FpMatrix::zeros(p.get(), 8, width);
    for j in 0..width {
        for (i, v) in residue_vector(p, a + j as i64)?.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    let solver = Solver::new(&m);
    debug_assert_eq!(solver.rank(), 8, "residue map is surjective");
    let refs = reference_set(p);
    let particulars: Vec<Vec<u64>> = refs
        .distinct()
        .into_iter()
        .map(|r| {
            let target: Vec<u64> = (0..8).map(|i| r.coeff(i).to_u64().expect("reduced")).collect();
            solver.particular(&target).expect("surjective residue map")
        })
        .collect();
    let kernel = solver.kernel();
    let count = BigUint::from(particulars.len()) * BigUint::from(p.get()).pow(kernel.len() as u32);
    let mut window = AdmissibleWindow {
        p,
        a,
        b,
        classes: particulars.len(),
        count,
        bound,
        density,
        members: None,
        particulars,
        kernel,
    };
    if window.count <= BigUint::from(cap) {
        let mut members: Vec<LaurentPoly> = window.iter().collect();
        members.sort();
        window.members = Some(members);
    }
    Ok(window)
}

/// Test oracle: filter every polynomial supported in `[a, b]`.
pub fn brute_force_admissible(p: Prime, a: i64, b: i64) -> Result<Vec<LaurentPoly>> {
    check_window(a, b)?;
    let width = (b - a + 1) as usize;
    let fits = |w: usize| (p.get() as u128).checked_pow(w as u32).is_some_and(|s| s <= BRUTE_FORCE_LIMIT as u128);
    if !fits(width) {
        let limit = (1..).take_while(|&w| fits(w)).last().unwrap_or(0);
        return Err(Error::WindowTooWide { a, b, limit });
    }
    let refs = reference_set(p);
    let mut out = Vec::new();
    let mut digits = vec![0u64; width];
    loop {
        let g = LaurentPoly::from_coeffs_mod(a, digits.iter().copied(), p);
        if refs.admissible_index(&g)?.is_some() {
            out.push(g);
        }
        let mut carry = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p.get() {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Multiplicative order of `t` modulo `f̄`.
pub fn residue_order_of_t(p: Prime) -> Result<u64> {
    let one = LaurentPoly::one().reduce_mod(p)?;
    let t = LaurentPoly::t().reduce_mod(p)?;
    let mut x = t.clone();
    for k in 1..=100_000u64 {
        if canonical_residue(&x)? == one {
            return Ok(k);
        }
        x = canonical_residue(&(&x * &t))?;
    }
    Err(Error::CrossCheckFailed("t has no small order modulo f".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn mp(s: &str, p: u64) -> LaurentPoly {
        parse_poly(s, Some(pr(p))).unwrap()
    }

    #[test]
    fn reference_set_mod_2() {
        let refs = reference_set(pr(2));
        assert_eq!(refs.entries.len(), 8);
        assert_eq!(refs.distinct_count, 8);
        let want = [
            "1",
            "t^4+t^3+t",
            "t^7+t^6+t^5+t^4+t^2",
            "t^6+t^5+t^4+t^2+t",
            "t^7+t^4+t^3",
            "t^7+t+1",
            "t^7+t^6+t^5+t^3+t^2+t+1",
            "t^6+t^5+t^3+t^2+1",
        ];
        let mut got: Vec<String> = refs.entries.iter().map(|e| e.poly.to_string()).collect();
        let mut want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn family_one_n_one_mod_2() {
        let refs = reference_set(pr(2));
        let e = refs.entries.iter().find(|e| e.family == Family::I && e.n == 1).unwrap();
        assert_eq!(e.poly, mp("t+t^2+t^4+t^5+t^6", 2));
    }

    #[test]
    fn reference_set_mod_3_count() {
        let refs = reference_set(pr(3));
        assert_eq!(refs.entries.len(), 12);
        assert!(refs.distinct_count <= 12);
    }

    #[test]
    fn inverse_t() {
        let z = LaurentPoly::monomial(1, -1);
        assert_eq!(
            canonical_residue(&z).unwrap().to_string(),
            "-t^7+2t^6-3t^5+4t^4-4t^3+4t^2-3t+2"
        );
        assert_eq!(canonical_residue(&mp("t^-1", 2)).unwrap().to_string(), "t^7+t^5+t");
    }

    #[test]
    fn t12_is_one_mod_2() {
        assert!(canonical_residue(&mp("t^12", 2)).unwrap().is_one());
        assert!(canonical_residue(&mp("t^-12", 2)).unwrap().is_one());
    }

    #[test]
    fn low_degree_is_fixed() {
        let g = mp("t^7+2t^3+1", 3);
        assert_eq!(canonical_residue(&g).unwrap(), g);
    }

    #[test]
    fn admissibility_examples() {
        let refs = reference_set(pr(2));
        let idx = refs.admissible_index(&mp("t^12", 2)).unwrap().unwrap();
        assert_eq!((refs.entries[idx].family, refs.entries[idx].n), (Family::I, 0));
        assert_eq!(refs.admissible_index(&mp("t^5", 2)).unwrap(), None);
        for (i, e) in refs.entries.iter().enumerate() {
            assert_eq!(refs.admissible_index(&e.poly).unwrap(), Some(i));
        }
        assert_eq!(is_admissible(&mp("t^12", 2)).unwrap(), Some(idx));
    }

    #[test]
    fn bound_examples() {
        let (c, d) = admissible_bound(pr(2), 0, 8).unwrap();
        assert_eq!((c, d), (BigUint::from(16u32), BigRational::new(1.into(), 32.into())));
        let (c, d) = admissible_bound(pr(3), 0, 7).unwrap();
        assert_eq!((c, d), (BigUint::from(12u32), BigRational::new(4.into(), 2187.into())));
        let (c, d) = admissible_bound(pr(2), 0, 15).unwrap();
        assert_eq!((c, d), (BigUint::from(2048u32), BigRational::new(1.into(), 32.into())));
        assert_eq!(admissible_bound(pr(2), 0, 6), Err(Error::WindowTooNarrow { a: 0, b: 6 }));
    }

    #[test]
    fn enumerate_small_windows() {
        let w = enumerate_admissible(pr(2), 0, 7).unwrap();
        assert_eq!(w.members().unwrap().len(), 8);
        let w = enumerate_admissible(pr(2), 0, 8).unwrap();
        assert_eq!(w.members().unwrap().len(), 16);
        for a in -4..=2 {
            let w = enumerate_admissible(pr(2), a, a + 8).unwrap();
            assert_eq!(w.count, BigUint::from(16u32));
        }
    }

    #[test]
    fn cap_switches_to_streaming() {
        let w = enumerate_admissible_with_cap(pr(2), 0, 10, 10).unwrap();
        assert!(w.members().is_none());
        assert_eq!(w.iter().count(), 64);
        assert_eq!(w.count, BigUint::from(64u32));
    }

    #[test]
    fn refined_mod_5() {
        let r = refined_reference_set(pr(5)).unwrap();
        let fam1: Vec<u64> = r.entries.iter().filter(|e| e.family == Family::I).map(|e| e.n).collect();
        assert_eq!(fam1, vec![0, 1, 3, 4]);
        assert_eq!(r.entries.len(), 16);
        assert!(r.distinct_count < 20);
        assert_eq!(refined_reference_set(pr(3)).unwrap_err(), Error::PrimeTooSmall(3));
    }

    #[test]
    fn refined_mod_7_drops_one_per_family() {
        let r = refined_reference_set(pr(7)).unwrap();
        for fam in Family::ALL {
            assert_eq!(r.entries.iter().filter(|e| e.family == fam).count(), 6);
        }
    }

    #[test]
    fn order_of_t() {
        assert_eq!(residue_order_of_t(pr(2)).unwrap(), 12);
        assert_eq!(residue_order_of_t(pr(3)).unwrap(), 36);
        assert_eq!(residue_order_of_t(pr(5)).unwrap(), 60);
    }
}
