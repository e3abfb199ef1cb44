//! Dense univariate polynomials in `y` over the session field.
//!
//! These carry the moduli of principal quotients and the `p` parameter of
//! the torsion triangular normal form. Coefficients are stored ascending
//! with the trailing entry nonzero, so the zero polynomial is empty and
//! representations are canonical.

use std::fmt;

use crate::field::{Coeff, FieldSpec};
use crate::poly::{BiPoly, Monomial};

#[derive(Clone, PartialEq, Eq)]
pub struct YPoly {
    field: FieldSpec,
    coeffs: Vec<Coeff>,
}

impl YPoly {
    pub fn zero(field: FieldSpec) -> Self {
        YPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        YPoly::constant(Coeff::one(field))
    }

    pub fn constant(c: Coeff) -> Self {
        let field = c.spec().clone();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        YPoly { field, coeffs }
    }

    pub fn var(field: FieldSpec) -> Self {
        YPoly {
            coeffs: vec![Coeff::zero(field.clone()), Coeff::one(field.clone())],
            field,
        }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(field: FieldSpec, mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        YPoly { field, coeffs }
    }

    /// `y^k` with coefficient one.
    pub fn monomial(field: FieldSpec, k: u64) -> Self {
        let mut coeffs = vec![Coeff::zero(field.clone()); k as usize + 1];
        coeffs[k as usize] = Coeff::one(field.clone());
        YPoly { field, coeffs }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as u64 - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Coeff::zero(self.field.clone()))
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Coeff::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Constant term `p(0)`.
    pub fn eval_at_zero(&self) -> Coeff {
        self.coeff(0)
    }

    pub fn eval(&self, point: &Coeff) -> Coeff {
        let mut acc = Coeff::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(point).add(c);
        }
        acc
    }

    fn assert_same_field(&self, other: &YPoly) {
        assert!(
            self.field.same_field(&other.field),
            "mixed coefficient fields: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &YPoly) -> YPoly {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&other.coeff(k)));
        }
        YPoly::from_coeffs(self.field.clone(), out)
    }

    pub fn sub(&self, other: &YPoly) -> YPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> YPoly {
        YPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> YPoly {
        if c.is_zero() {
            return YPoly::zero(self.field.clone());
        }
        YPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|k| k.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &YPoly) -> YPoly {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return YPoly::zero(self.field.clone());
        }
        let mut out =
            vec![Coeff::zero(self.field.clone()); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        YPoly::from_coeffs(self.field.clone(), out)
    }

    pub fn pow(&self, e: u64) -> YPoly {
        let mut base = self.clone();
        let mut acc = YPoly::one(self.field.clone());
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

    /// Division with remainder; the divisor may have any nonzero leading
    /// coefficient since we work over a field.
    ///
    /// # Panics
    /// Panics when dividing by the zero polynomial.
    pub fn div_rem(&self, divisor: &YPoly) -> (YPoly, YPoly) {
        self.assert_same_field(divisor);
        let dd = divisor.degree().expect("division by zero polynomial") as usize;
        let lead_inv = divisor.leading_coeff().expect("nonzero").inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (YPoly::zero(self.field.clone()), self.clone());
        }
        let mut quot = vec![Coeff::zero(self.field.clone()); rem.len() - dd];
        while rem.len() > dd {
            let da = rem.len() - 1;
            let factor = rem[da].mul(&lead_inv);
            if !factor.is_zero() {
                quot[da - dd] = factor.clone();
                for k in 0..=dd {
                    let delta = factor.mul(&divisor.coeffs[k]);
                    rem[da - dd + k] = rem[da - dd + k].sub(&delta);
                }
            }
            rem.pop();
            while rem.last().is_some_and(Coeff::is_zero) {
                rem.pop();
            }
        }
        (
            YPoly::from_coeffs(self.field.clone(), quot),
            YPoly::from_coeffs(self.field.clone(), rem),
        )
    }

    pub fn rem(&self, divisor: &YPoly) -> YPoly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &YPoly) -> Option<YPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> YPoly {
        if self.coeffs.len() <= 1 {
            return YPoly::zero(self.field.clone());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let factor = Coeff::from_rational(
                num_rational::BigRational::from_integer(num_bigint::BigInt::from(k)),
                self.field.clone(),
            );
            out.push(c.mul(&factor));
        }
        YPoly::from_coeffs(self.field.clone(), out)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &YPoly) -> YPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Normalize to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> YPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lead) if lead.is_one() => self.clone(),
            Some(lead) => self.scale(&lead.inv()),
        }
    }

    /// The squarefree part `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> YPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
            .expect("gcd divides the polynomial")
            .monic()
    }

    /// Substitute `y -> y^r`.
    pub fn inflate(&self, r: u64) -> YPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out =
            vec![Coeff::zero(self.field.clone()); (self.coeffs.len() - 1) * r as usize + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * r as usize] = c.clone();
        }
        YPoly::from_coeffs(self.field.clone(), out)
    }

    /// Multiply by `y^s`.
    pub fn shift_up(&self, s: u64) -> YPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![Coeff::zero(self.field.clone()); s as usize];
        out.extend(self.coeffs.iter().cloned());
        YPoly::from_coeffs(self.field.clone(), out)
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(
            self.field.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::new(0, k as u64), c.clone())),
        )
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bipoly())
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ypoly;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn yp(text: &str) -> YPoly {
        parse_ypoly(text, &q()).expect("parse")
    }

    #[test]
    fn div_rem_recovers_factors() {
        let prod = yp("y+1").mul(&yp("y^2+2"));
        let (quot, rem) = prod.div_rem(&yp("y+1"));
        assert_eq!(quot, yp("y^2+2"));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = yp("y^2 - 1");
        let b = yp("y^2 + 2*y + 1");
        assert_eq!(a.gcd(&b), yp("y + 1"));
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        let h = yp("y^2 - 1").pow(2);
        assert_eq!(h.squarefree_part(), yp("y^2 - 1"));
        assert_eq!(yp("y^2").squarefree_part(), yp("y"));
        assert_eq!(yp("y^3 + y").squarefree_part(), yp("y^3 + y"));
    }

    #[test]
    fn inflate_substitutes_power() {
        assert_eq!(yp("y + 1").inflate(2), yp("y^2 + 1"));
        assert_eq!(yp("y^2 + 2*y + 2").inflate(2), yp("y^4 + 2*y^2 + 2"));
    }

    #[test]
    fn eval_by_horner() {
        let p = yp("y^2 + y + 1");
        let two = Coeff::from_integer(2, q());
        assert_eq!(p.eval(&two), Coeff::from_integer(7, q()));
        assert_eq!(p.eval_at_zero(), Coeff::from_integer(1, q()));
    }
}
