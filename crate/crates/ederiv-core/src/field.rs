//! Exact coefficient fields: the rationals and their cyclotomic extensions.
//!
//! A session fixes one field up front via [`FieldSpec`]: `Q` when the
//! conductor is 1, otherwise `Q(zeta_r)` where `zeta_r` is a fixed primitive
//! r-th root of unity. Elements are residue classes modulo the r-th
//! cyclotomic polynomial, stored with arbitrary-precision rational
//! coefficients, so equality and zero tests are exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Declares the coefficient field of a session.
///
/// Conductor 1 is the rationals; conductor `r > 1` is `Q(zeta_r)` with the
/// r-th cyclotomic polynomial as modulus. Mixing elements of different
/// fields is rejected rather than coerced.
#[derive(Clone)]
pub struct FieldSpec {
    conductor: u64,
    // coefficients of Phi_r, ascending, monic; shared across all elements
    modulus: Arc<Vec<BigInt>>,
}

impl FieldSpec {
    /// The rational field `Q`.
    pub fn rationals() -> Self {
        Self::cyclotomic(1)
    }

    /// The cyclotomic field `Q(zeta_r)`; `r = 1` gives `Q`.
    ///
    /// # Panics
    /// Panics when `r = 0`.
    pub fn cyclotomic(r: u64) -> Self {
        assert!(r >= 1, "conductor must be a positive integer");
        FieldSpec {
            conductor: r,
            modulus: Arc::new(cyclotomic_polynomial(r)),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Degree of the extension over `Q`, i.e. `deg Phi_r = phi(r)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub(crate) fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Whether two specs denote the same field.
    pub fn same_field(&self, other: &FieldSpec) -> bool {
        self.conductor == other.conductor
    }

    /// An element of exact multiplicative order `n`, when the field has one.
    ///
    /// The torsion units of `Q(zeta_r)` form a cyclic group of order
    /// `lcm(2, r)`, so this returns a power of `zeta` (or of `-zeta` for odd
    /// conductors) and `None` when `n` does not divide that order.
    pub fn primitive_root_of_order(&self, n: u64) -> Option<Coeff> {
        assert!(n >= 1);
        if n == 1 {
            return Some(Coeff::one(self.clone()));
        }
        let r = self.conductor;
        if r % n == 0 {
            return Some(Coeff::zeta(self.clone()).pow(r / n));
        }
        if r % 2 == 1 && (2 * r) % n == 0 {
            // -zeta has order 2r when r is odd
            return Some(Coeff::zeta(self.clone()).neg().pow(2 * r / n));
        }
        None
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "Q")
        } else {
            write!(f, "Q(zeta_{})", self.conductor)
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An element of the session field, fully reduced modulo the cyclotomic
/// modulus.
///
/// The residue is stored in ascending powers of `zeta` with trailing zeros
/// trimmed, so the representation is canonical and equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct Coeff {
    residue: Vec<BigRational>,
    spec: FieldSpec,
}

impl Coeff {
    pub fn zero(spec: FieldSpec) -> Self {
        Coeff {
            residue: Vec::new(),
            spec,
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Coeff::from_rational(BigRational::one(), spec)
    }

    pub fn from_integer(n: i64, spec: FieldSpec) -> Self {
        Coeff::from_rational(BigRational::from_integer(BigInt::from(n)), spec)
    }

    pub fn from_rational(q: BigRational, spec: FieldSpec) -> Self {
        let residue = if q.is_zero() { Vec::new() } else { vec![q] };
        Coeff { residue, spec }
    }

    /// The fixed primitive root `zeta_r`; for conductor 1 this is `1`.
    pub fn zeta(spec: FieldSpec) -> Self {
        if spec.degree() == 1 {
            // Phi_1 = t - 1 or Phi_2 = t + 1: zeta is rational
            let root = -BigRational::from_integer(spec.modulus()[0].clone());
            return Coeff::from_rational(root, spec);
        }
        let mut residue = vec![BigRational::zero(), BigRational::one()];
        normalize(&mut residue);
        Coeff { residue, spec }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.residue.len() == 1 && self.residue[0].is_one()
    }

    /// Whether the element lies in the prime field `Q`.
    pub fn is_rational(&self) -> bool {
        self.residue.len() <= 1
    }

    /// The element as a rational number, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.residue.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.residue[0].clone()),
            _ => None,
        }
    }

    /// Coefficient of `zeta^k` in the reduced residue.
    pub fn residue_coeff(&self, k: usize) -> BigRational {
        self.residue.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    fn assert_same_field(&self, other: &Coeff) {
        assert!(
            self.spec.same_field(&other.spec),
            "mixed coefficient fields: {} vs {}",
            self.spec,
            other.spec
        );
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        self.assert_same_field(other);
        let n = self.residue.len().max(other.residue.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.residue_coeff(k) + other.residue_coeff(k));
        }
        normalize(&mut out);
        Coeff {
            residue: out,
            spec: self.spec.clone(),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        Coeff {
            residue: self.residue.iter().map(|c| -c.clone()).collect(),
            spec: self.spec.clone(),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Coeff::zero(self.spec.clone());
        }
        let mut prod = vec![BigRational::zero(); self.residue.len() + other.residue.len() - 1];
        for (i, a) in self.residue.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.residue.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        reduce_mod_modulus(&mut prod, self.spec.modulus());
        normalize(&mut prod);
        Coeff {
            residue: prod,
            spec: self.spec.clone(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero; every nonzero element of a field is invertible.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        if self.residue.len() == 1 {
            return Coeff::from_rational(self.residue[0].recip(), self.spec.clone());
        }
        let modulus: Vec<BigRational> = self
            .spec
            .modulus()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // extended Euclid in Q[t]: u*residue + v*Phi_r = gcd; Phi_r is
        // irreducible over Q so the gcd is a nonzero constant
        let (g, u) = ext_gcd_first(&self.residue, &modulus);
        assert_eq!(g.len(), 1, "cyclotomic modulus must be coprime to residue");
        let scale = g[0].recip();
        let mut out: Vec<BigRational> = u.iter().map(|c| c * &scale).collect();
        reduce_mod_modulus(&mut out, self.spec.modulus());
        normalize(&mut out);
        Coeff {
            residue: out,
            spec: self.spec.clone(),
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: u64) -> Coeff {
        let mut base = self.clone();
        let mut acc = Coeff::one(self.spec.clone());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power with negative exponents via the inverse.
    pub fn powi(&self, e: i64) -> Coeff {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().pow(e.unsigned_abs())
        }
    }

    /// Exact multiplicative order, when the element is a root of unity.
    ///
    /// Torsion units of `Q(zeta_r)` are exactly `(+/-) zeta_r^k`, so the
    /// order divides `2r`; testing every divisor of `2r` is a complete,
    /// exact decision with no numerical approximation.
    ///
    /// # Panics
    /// Panics on zero input.
    pub fn multiplicative_order(&self) -> Option<u64> {
        assert!(!self.is_zero(), "multiplicative order of zero");
        for t in sorted_divisors(2 * self.spec.conductor()) {
            if self.pow(t).is_one() {
                return Some(t);
            }
        }
        None
    }

    /// Whether the element is a primitive `n`-th root of unity.
    pub fn is_primitive_root(&self, n: u64) -> bool {
        !self.is_zero() && self.multiplicative_order() == Some(n)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.residue.len()).rev() {
            let c = &self.residue[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (unit_mag, k) {
                (true, 0) => write!(f, "1")?,
                (true, 1) => write!(f, "z")?,
                (true, _) => write!(f, "z^{k}")?,
                (false, 0) => write!(f, "{mag}")?,
                (false, 1) => write!(f, "{mag}*z")?,
                (false, _) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.spec)
    }
}

fn normalize(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Reduce a rational polynomial in place modulo a monic integer modulus.
fn reduce_mod_modulus(v: &mut Vec<BigRational>, modulus: &[BigInt]) {
    let d = modulus.len() - 1;
    while v.len() > d {
        let lead = v.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = v.len() - d;
        for (k, m) in modulus.iter().take(d).enumerate() {
            if !m.is_zero() {
                let delta = &lead * BigRational::from_integer(m.clone());
                v[shift + k] -= delta;
            }
        }
    }
}

/// Extended Euclid over Q[t] returning `(gcd, u)` with `u*a = gcd (mod b)`.
fn ext_gcd_first(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut u0 = vec![BigRational::one()];
    let mut u1 = Vec::new();
    normalize(&mut r0);
    normalize(&mut r1);
    while !r1.is_empty() {
        let (q, rem) = rat_poly_div_rem(&r0, &r1);
        r0 = std::mem::replace(&mut r1, rem);
        let qu1 = rat_poly_mul(&q, &u1);
        let next = rat_poly_sub(&u0, &qu1);
        u0 = std::mem::replace(&mut u1, next);
    }
    (r0, u0)
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    normalize(&mut out);
    out
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    normalize(&mut out);
    out
}

fn rat_poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    normalize(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let factor = rem[da].clone() / &lead;
        quot[da - db] = factor.clone();
        for k in 0..=db {
            let delta = &factor * &b[k];
            rem[da - db + k] -= delta;
        }
        normalize(&mut rem);
    }
    normalize(&mut quot);
    (quot, rem)
}

/// Coefficients of the r-th cyclotomic polynomial, ascending and monic.
fn cyclotomic_polynomial(r: u64) -> Vec<BigInt> {
    let mut computed: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for d in sorted_divisors(r) {
        // Phi_d = (t^d - 1) / prod of Phi_e over proper divisors e of d
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for (&e, phi_e) in computed.iter() {
            if d % e == 0 && e < d {
                num = int_poly_div_exact(&num, phi_e);
            }
        }
        computed.insert(d, num);
    }
    computed.remove(&r).expect("r divides itself")
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for da in (db..a.len()).rev() {
        let factor = rem[da].clone();
        if factor.is_zero() {
            continue;
        }
        quot[da - db] = factor.clone();
        for k in 0..=db {
            let delta = &factor * &b[k];
            rem[da - db + k] -= delta;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
    quot
}

/// Divisors of `n` in increasing order.
pub(crate) fn sorted_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(1), vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(
            cyclotomic_polynomial(3),
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(
            cyclotomic_polynomial(4),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        );
        assert_eq!(
            cyclotomic_polynomial(6),
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        // Phi_12 = t^4 - t^2 + 1
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(-1),
                BigInt::from(0),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn zeta_has_conductor_order() {
        for r in [2u64, 3, 4, 5, 6, 8, 12] {
            let spec = FieldSpec::cyclotomic(r);
            let z = Coeff::zeta(spec);
            assert_eq!(z.multiplicative_order(), Some(r), "conductor {r}");
        }
    }

    #[test]
    fn inverse_is_exact() {
        let spec = FieldSpec::cyclotomic(5);
        let z = Coeff::zeta(spec.clone());
        let c = z.add(&Coeff::from_integer(3, spec.clone()));
        let prod = c.mul(&c.inv());
        assert!(prod.is_one());
    }

    #[test]
    fn order_of_minus_one_is_two() {
        let c = Coeff::from_integer(-1, q());
        assert_eq!(c.multiplicative_order(), Some(2));
    }

    #[test]
    fn two_is_not_a_root_of_unity() {
        let c = Coeff::from_integer(2, q());
        assert_eq!(c.multiplicative_order(), None);
    }

    #[test]
    fn zeta6_has_order_six() {
        let spec = FieldSpec::cyclotomic(6);
        assert_eq!(Coeff::zeta(spec).multiplicative_order(), Some(6));
    }

    #[test]
    #[should_panic(expected = "multiplicative order of zero")]
    fn order_of_zero_is_rejected() {
        let _ = Coeff::zero(q()).multiplicative_order();
    }

    #[test]
    #[should_panic(expected = "mixed coefficient fields")]
    fn mixed_fields_are_rejected() {
        let a = Coeff::one(q());
        let b = Coeff::one(FieldSpec::cyclotomic(3));
        let _ = a.add(&b);
    }

    #[test]
    fn primitive_roots_from_spec() {
        let spec = FieldSpec::cyclotomic(12);
        for n in [1u64, 2, 3, 4, 6, 12] {
            let w = spec.primitive_root_of_order(n).expect("root exists");
            assert_eq!(w.multiplicative_order(), Some(n));
        }
        assert!(spec.primitive_root_of_order(5).is_none());
        // odd conductor picks up the extra factor of two from -1
        let spec3 = FieldSpec::cyclotomic(3);
        let w6 = spec3.primitive_root_of_order(6).expect("order six in Q(zeta_3)");
        assert_eq!(w6.multiplicative_order(), Some(6));
    }

    #[test]
    fn display_round_trips_signs() {
        let spec = FieldSpec::cyclotomic(4);
        let z = Coeff::zeta(spec.clone());
        let c = z.neg().add(&Coeff::from_integer(2, spec));
        assert_eq!(c.to_string(), "-z + 2");
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let c = Coeff::from_integer(2, q());
        assert_eq!(
            c.powi(-2).as_rational().unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(4))
        );
    }
}
