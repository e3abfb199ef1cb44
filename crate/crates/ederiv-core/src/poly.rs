//! Sparse bivariate polynomials over the session field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose derived order
//! is the lexicographic order with `x > y` — the single monomial order used
//! throughout the library. No stored coefficient is ever zero, so the zero
//! polynomial is the empty map and equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::field::{Coeff, FieldSpec};
use crate::ypoly::YPoly;

/// Exponent pair for `x^i * y^j`.
///
/// The derived `Ord` compares the `x` exponent first, which is exactly the
/// lex order with `x > y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub x: u64,
    pub y: u64,
}

impl Monomial {
    pub fn new(x: u64, y: u64) -> Self {
        Monomial { x, y }
    }

    pub fn one() -> Self {
        Monomial { x: 0, y: 0 }
    }

    pub fn is_constant(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn total_degree(&self) -> u64 {
        self.x
            .checked_add(self.y)
            .expect("monomial degree overflow")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.checked_add(other.x).expect("exponent overflow"),
            y: self.y.checked_add(other.y).expect("exponent overflow"),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (1, 0) => write!(f, "x"),
            (i, 0) => write!(f, "x^{i}"),
            (0, 1) => write!(f, "y"),
            (0, j) => write!(f, "y^{j}"),
            (1, 1) => write!(f, "x*y"),
            (1, j) => write!(f, "x*y^{j}"),
            (i, 1) => write!(f, "x^{i}*y"),
            (i, j) => write!(f, "x^{i}*y^{j}"),
        }
    }
}

/// A sparse polynomial in `x` and `y` with exact field coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Coeff>,
}

impl BiPoly {
    pub fn zero(field: FieldSpec) -> Self {
        BiPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        BiPoly::constant(Coeff::one(field))
    }

    pub fn constant(c: Coeff) -> Self {
        let field = c.spec().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        BiPoly { field, terms }
    }

    pub fn var_x(field: FieldSpec) -> Self {
        BiPoly::from_monomial(Monomial::new(1, 0), Coeff::one(field))
    }

    pub fn var_y(field: FieldSpec) -> Self {
        BiPoly::from_monomial(Monomial::new(0, 1), Coeff::one(field))
    }

    pub fn from_monomial(m: Monomial, c: Coeff) -> Self {
        let field = c.spec().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { field, terms }
    }

    pub fn from_terms<I>(field: FieldSpec, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut out = BiPoly::zero(field);
        for (m, c) in iter {
            out.add_term(m, &c);
        }
        out
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// The support, i.e. the set of monomials with nonzero coefficient.
    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn max_y_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn min_y_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.y).min()
    }

    pub fn max_x_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.x).max()
    }

    /// The lex-greatest term; `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(Monomial, &Coeff)> {
        self.terms.last_key_value().map(|(m, c)| (*m, c))
    }

    fn assert_same_field(&self, other: &BiPoly) {
        assert!(
            self.field.same_field(&other.field),
            "mixed coefficient fields: {} vs {}",
            self.field,
            other.field
        );
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        self.assert_same_field(other);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> BiPoly {
        assert!(
            self.field.same_field(c.spec()),
            "mixed coefficient fields: {} vs {}",
            self.field,
            c.spec()
        );
        if c.is_zero() {
            return BiPoly::zero(self.field.clone());
        }
        BiPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        self.assert_same_field(other);
        let mut out = BiPoly::zero(self.field.clone());
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }

    /// `self^e` by binary exponentiation; `f^0 = 1`.
    pub fn pow(&self, e: u64) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one(self.field.clone());
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

    /// Evaluate `f(px, py)`, the image under the endomorphism sending
    /// `x` to `px` and `y` to `py`.
    pub fn substitute(&self, px: &BiPoly, py: &BiPoly) -> BiPoly {
        self.assert_same_field(px);
        self.assert_same_field(py);
        let mut pow_x: BTreeMap<u64, BiPoly> = BTreeMap::new();
        let mut pow_y: BTreeMap<u64, BiPoly> = BTreeMap::new();
        let mut out = BiPoly::zero(self.field.clone());
        for (m, c) in self.terms() {
            let xi = pow_x
                .entry(m.x)
                .or_insert_with(|| px.pow(m.x))
                .clone();
            let yj = pow_y
                .entry(m.y)
                .or_insert_with(|| py.pow(m.y))
                .clone();
            out = out.add(&xi.mul(&yj).scale(c));
        }
        out
    }

    /// Formal partial derivative with respect to `x`.
    pub fn partial_x(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.field.clone());
        for (m, c) in self.terms() {
            if m.x == 0 {
                continue;
            }
            let factor = Coeff::from_rational(
                num_rational::BigRational::from_integer(num_bigint::BigInt::from(m.x)),
                self.field.clone(),
            );
            out.add_term(Monomial::new(m.x - 1, m.y), &c.mul(&factor));
        }
        out
    }

    /// Formal partial derivative with respect to `y`.
    pub fn partial_y(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.field.clone());
        for (m, c) in self.terms() {
            if m.y == 0 {
                continue;
            }
            let factor = Coeff::from_rational(
                num_rational::BigRational::from_integer(num_bigint::BigInt::from(m.y)),
                self.field.clone(),
            );
            out.add_term(Monomial::new(m.x, m.y - 1), &c.mul(&factor));
        }
        out
    }

    /// Whether every monomial is free of `x`.
    pub fn is_univariate_y(&self) -> bool {
        self.terms.keys().all(|m| m.x == 0)
    }

    /// Whether the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    pub fn constant_coeff(&self) -> Coeff {
        self.coeff(&Monomial::one())
            .cloned()
            .unwrap_or_else(|| Coeff::zero(self.field.clone()))
    }

    /// Convert to a univariate polynomial in `y` when `x` does not occur.
    pub fn to_ypoly(&self) -> Option<YPoly> {
        if !self.is_univariate_y() {
            return None;
        }
        let deg = self.max_y_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Coeff::zero(self.field.clone()); deg + 1];
        for (m, c) in self.terms() {
            coeffs[m.y as usize] = c.clone();
        }
        Some(YPoly::from_coeffs(self.field.clone(), coeffs))
    }

    /// Division with remainder by a monic univariate polynomial in `y`,
    /// viewing `self` as a polynomial in `y` over `K[x]`.
    ///
    /// # Panics
    /// Panics when `h` is not monic (or zero).
    pub fn div_rem_y(&self, h: &YPoly) -> (BiPoly, BiPoly) {
        assert!(h.is_monic(), "modulus must be monic in y");
        let d = h.degree().expect("monic implies nonzero") as u64;
        let h_poly = h.to_bipoly();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(self.field.clone());
        loop {
            let Some(jmax) = rem.max_y_degree() else {
                break;
            };
            if jmax < d {
                break;
            }
            // peel every term at the top y-degree in one pass
            let top: Vec<(Monomial, Coeff)> = rem
                .terms()
                .filter(|(m, _)| m.y == jmax)
                .map(|(m, c)| (*m, c.clone()))
                .collect();
            for (m, c) in top {
                let shift = Monomial::new(m.x, m.y - d);
                quot.add_term(shift, &c);
                let subtrahend = h_poly
                    .mul(&BiPoly::from_monomial(shift, c));
                rem = rem.sub(&subtrahend);
            }
        }
        (quot, rem)
    }

    /// Exact division by a monic univariate polynomial in `y`; `None` when
    /// the remainder is nonzero.
    pub fn exact_div_y(&self, h: &YPoly) -> Option<BiPoly> {
        let (q, r) = self.div_rem_y(h);
        r.is_zero().then_some(q)
    }

    /// Exact division by `y^s`; `None` when some term has `y`-degree < `s`.
    pub fn exact_div_y_power(&self, s: u64) -> Option<BiPoly> {
        if self.terms.keys().any(|m| m.y < s) {
            return None;
        }
        Some(BiPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x, m.y - s), c.clone()))
                .collect(),
        })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending lex for canonical output
        for (m, c) in self.terms.iter().rev() {
            if let Some(q) = c.as_rational() {
                let mag = q.abs();
                if first {
                    if q.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if q.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                if m.is_constant() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{m}")?;
                } else {
                    write!(f, "{mag}*{m}")?;
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if m.is_constant() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn p(text: &str) -> BiPoly {
        parse_poly(text, &q()).expect("parse")
    }

    #[test]
    fn lex_order_puts_x_first() {
        assert!(Monomial::new(2, 0) > Monomial::new(1, 3));
        assert!(Monomial::new(0, 4) > Monomial::new(0, 2));
        assert!(Monomial::new(1, 0) > Monomial::new(0, 100));
    }

    #[test]
    fn mul_difference_of_squares() {
        let lhs = p("x+y").mul(&p("x-y"));
        assert_eq!(lhs, p("x^2 - y^2"));
    }

    #[test]
    fn pow_binomial_square() {
        assert_eq!(p("x+y").pow(2), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("x+y").pow(0), p("1"));
    }

    #[test]
    fn scale_by_half() {
        let half = Coeff::from_rational(
            num_rational::BigRational::new(1.into(), 2.into()),
            q(),
        );
        assert_eq!(p("x").scale(&half), p("1/2*x"));
    }

    #[test]
    fn leading_term_examples() {
        let (m, c) = p("x^2 + x*y^3").leading_term().unwrap();
        assert_eq!(m, Monomial::new(2, 0));
        assert!(c.is_one());

        let (m, _) = p("y^4 + y^2").leading_term().unwrap();
        assert_eq!(m, Monomial::new(0, 4));

        let (m, c) = p("2*x - y^3 - y").leading_term().unwrap();
        assert_eq!(m, Monomial::new(1, 0));
        assert_eq!(c, Coeff::from_integer(2, q()));

        assert!(p("0").leading_term().is_none());
    }

    #[test]
    fn substitution_examples() {
        // x*y under x -> -x + y^3 + y, y -> -y
        let image = p("x*y").substitute(&p("-x + y^3 + y"), &p("-y"));
        assert_eq!(image, p("x*y - y^4 - y^2"));
        // identity endomorphism fixes everything
        let f = p("x^2*y - 3");
        assert_eq!(f.substitute(&p("x"), &p("y")), f);
        // constants are untouched
        assert_eq!(p("1").substitute(&p("x+y"), &p("x*y")), p("1"));
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x^2*y").partial_x(), p("2*x*y"));
        assert_eq!(p("x^2*y").partial_y(), p("x^2"));
        assert_eq!(p("5").partial_x(), p("0"));
    }

    #[test]
    fn leading_term_is_multiplicative() {
        let f = p("x^2 + y");
        let g = p("x*y^3 - 2");
        let (mf, cf) = f.leading_term().unwrap();
        let (mg, cg) = g.leading_term().unwrap();
        let (mfg, cfg) = f.mul(&g).leading_term().unwrap();
        assert_eq!(mfg, mf.mul(&mg));
        assert_eq!(*cfg, cf.mul(cg));
    }

    #[test]
    #[should_panic(expected = "mixed coefficient fields")]
    fn mixed_field_addition_is_rejected() {
        let a = BiPoly::var_x(q());
        let b = BiPoly::var_x(FieldSpec::cyclotomic(3));
        let _ = a.add(&b);
    }

    #[test]
    fn div_rem_by_y_modulus() {
        let h = p("y^3 + y").to_ypoly().unwrap();
        let (quot, rem) = p("y^4 + y^2").div_rem_y(&h);
        assert_eq!(quot, p("y"));
        assert!(rem.is_zero());

        let (_, rem) = p("x^2").div_rem_y(&h);
        assert_eq!(rem, p("x^2"));
    }

    #[test]
    fn exact_division_by_y_power() {
        assert_eq!(p("y^4 + y^2").exact_div_y_power(2).unwrap(), p("y^2 + 1"));
        assert!(p("y^4 + x").exact_div_y_power(1).is_none());
    }
}
