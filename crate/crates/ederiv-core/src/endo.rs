//! Endomorphisms and E-derivations of `K[x,y]`.
//!
//! An endomorphism is determined by the images of the two generators; the
//! associated E-derivation is `delta = id - phi`, the linear map whose
//! complement is multiplicative. This module carries the seven-class
//! catalog of locally finite endomorphisms in normal form, closed
//! formulas for `delta` on monomials in the triangular classes, a
//! local-finiteness probe with exact stabilization certificates, and the
//! purely syntactic recognizer for the catalog shapes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::field::{Coeff, FieldSpec};
use crate::linalg::TruncatedSpace;
use crate::poly::{BiPoly, Monomial};
use crate::ypoly::YPoly;

/// An algebra endomorphism of `K[x,y]`, given by the images of `x` and `y`.
#[derive(Clone, PartialEq, Eq)]
pub struct Endomorphism {
    image_x: BiPoly,
    image_y: BiPoly,
}

impl Endomorphism {
    /// # Panics
    /// Panics when the two images live in different fields.
    pub fn new(image_x: BiPoly, image_y: BiPoly) -> Self {
        assert!(
            image_x.field().same_field(image_y.field()),
            "mixed coefficient fields: {} vs {}",
            image_x.field(),
            image_y.field()
        );
        Endomorphism { image_x, image_y }
    }

    pub fn identity(field: FieldSpec) -> Self {
        Endomorphism {
            image_x: BiPoly::var_x(field.clone()),
            image_y: BiPoly::var_y(field),
        }
    }

    pub fn image_x(&self) -> &BiPoly {
        &self.image_x
    }

    pub fn image_y(&self) -> &BiPoly {
        &self.image_y
    }

    pub fn field(&self) -> &FieldSpec {
        self.image_x.field()
    }

    /// Apply to an arbitrary polynomial by substitution.
    pub fn apply(&self, f: &BiPoly) -> BiPoly {
        f.substitute(&self.image_x, &self.image_y)
    }

    /// `self` after `inner`: the map sending `f` to `self(inner(f))`.
    pub fn compose(&self, inner: &Endomorphism) -> Endomorphism {
        Endomorphism {
            image_x: self.apply(&inner.image_x),
            image_y: self.apply(&inner.image_y),
        }
    }

    /// Jacobian determinant of the image pair.
    pub fn jacobian_determinant(&self) -> BiPoly {
        let a = self.image_x.partial_x().mul(&self.image_y.partial_y());
        let b = self.image_x.partial_y().mul(&self.image_y.partial_x());
        a.sub(&b)
    }

    /// Whether the second and third iterates agree on both generators,
    /// which suffices since generators determine the endomorphism.
    pub fn is_eventually_idempotent(&self) -> bool {
        let x2 = self.apply(&self.image_x);
        let y2 = self.apply(&self.image_y);
        let x3 = self.apply(&x2);
        let y3 = self.apply(&y2);
        x2 == x3 && y2 == y3
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x-> {}, y-> {}", self.image_x, self.image_y)
    }
}

/// The E-derivation `delta = id - phi` attached to an endomorphism.
#[derive(Clone)]
pub struct EDerivation {
    phi: Endomorphism,
}

impl EDerivation {
    pub fn from_endomorphism(phi: Endomorphism) -> Self {
        EDerivation { phi }
    }

    pub fn endomorphism(&self) -> &Endomorphism {
        &self.phi
    }

    pub fn field(&self) -> &FieldSpec {
        self.phi.field()
    }

    /// `delta(f) = f - phi(f)`.
    pub fn apply(&self, f: &BiPoly) -> BiPoly {
        f.sub(&self.phi.apply(f))
    }

    pub fn apply_monomial(&self, m: Monomial) -> BiPoly {
        let f = BiPoly::from_monomial(m, Coeff::one(self.field().clone()));
        self.apply(&f)
    }
}

/// Why a normal form could not be constructed or used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalFormError {
    /// A parameter that must be nonzero was zero.
    ZeroParameter(&'static str),
    /// The `b` of the free triangular class must not be a root of unity.
    UnexpectedRootOfUnity { order: u64 },
    /// The `b` of the torsion triangular class must have exact order `r`.
    NotPrimitiveRoot { expected: u64, actual: Option<u64> },
    /// The `p` of the torsion triangular class must be monic.
    NotMonic,
    /// The image machinery additionally needs `p(0)` nonzero.
    ZeroConstantTerm,
    /// The eventually idempotent class is a property, not a formula.
    NoCanonicalImages,
    /// A closed-form operation was handed the wrong catalog class.
    WrongCase { expected: &'static str },
    /// `delta` of a constant is zero; the closed form starts at degree one.
    ConstantMonomial,
}

impl fmt::Display for NormalFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalFormError::ZeroParameter(name) => {
                write!(f, "parameter {name} must be nonzero")
            }
            NormalFormError::UnexpectedRootOfUnity { order } => {
                write!(f, "b is a root of unity (order {order}), which this class forbids")
            }
            NormalFormError::NotPrimitiveRoot { expected, actual } => match actual {
                Some(t) => write!(f, "b has order {t}, expected a primitive {expected}-th root of unity"),
                None => write!(f, "b is not a root of unity, expected a primitive {expected}-th root"),
            },
            NormalFormError::NotMonic => write!(f, "p must be monic"),
            NormalFormError::ZeroConstantTerm => write!(f, "p(0) must be nonzero"),
            NormalFormError::NoCanonicalImages => {
                write!(f, "the eventually idempotent class has no canonical images")
            }
            NormalFormError::WrongCase { expected } => {
                write!(f, "operation requires the {expected} class")
            }
            NormalFormError::ConstantMonomial => {
                write!(f, "the constant monomial is excluded; delta of constants is zero")
            }
        }
    }
}

impl std::error::Error for NormalFormError {}

/// The seven-class catalog of locally finite endomorphisms in normal form.
///
/// Parameter constraints are enforced at construction. The eventually
/// idempotent class is a marker: it is recognized by the relation
/// `phi^2 = phi^3` and has no parameterized images.
#[derive(Clone, PartialEq)]
pub enum NormalForm {
    /// Case 1: `x -> b*x`, `y -> a*y` with `a, b` nonzero.
    Diagonal { a: Coeff, b: Coeff },
    /// Case 2: `x -> b*x`, `y -> y + 1` with `b` nonzero.
    ScaleShift { b: Coeff },
    /// Case 3: `x -> b^s*x + a*y^s`, `y -> b*y` with `s >= 1` and `b` not
    /// a root of unity.
    TriangularFree { s: u64, a: Coeff, b: Coeff },
    /// Case 4: `x -> b^s*x + y^s*p(y^r)`, `y -> b*y` with `b` a primitive
    /// r-th root of unity and `p` monic.
    TriangularTorsion { r: u64, s: u64, b: Coeff, p: YPoly },
    /// Case 5: the relation `phi^2 = phi^3`.
    EventuallyIdempotent,
    /// Case 6: `x -> lambda*x + y*g`, `y -> 0` with `lambda` nonzero.
    CollapseScale { lambda: Coeff, g: BiPoly },
    /// Case 7: `x -> x + lambda + y*g`, `y -> 0` with `lambda` nonzero.
    CollapseShift { lambda: Coeff, g: BiPoly },
}

impl NormalForm {
    pub fn diagonal(a: Coeff, b: Coeff) -> Result<Self, NormalFormError> {
        if a.is_zero() {
            return Err(NormalFormError::ZeroParameter("a"));
        }
        if b.is_zero() {
            return Err(NormalFormError::ZeroParameter("b"));
        }
        Ok(NormalForm::Diagonal { a, b })
    }

    pub fn scale_shift(b: Coeff) -> Result<Self, NormalFormError> {
        if b.is_zero() {
            return Err(NormalFormError::ZeroParameter("b"));
        }
        Ok(NormalForm::ScaleShift { b })
    }

    pub fn triangular_free(s: u64, a: Coeff, b: Coeff) -> Result<Self, NormalFormError> {
        if s == 0 {
            return Err(NormalFormError::ZeroParameter("s"));
        }
        if b.is_zero() {
            return Err(NormalFormError::ZeroParameter("b"));
        }
        if let Some(order) = b.multiplicative_order() {
            return Err(NormalFormError::UnexpectedRootOfUnity { order });
        }
        Ok(NormalForm::TriangularFree { s, a, b })
    }

    pub fn triangular_torsion(
        r: u64,
        s: u64,
        b: Coeff,
        p: YPoly,
    ) -> Result<Self, NormalFormError> {
        if r == 0 {
            return Err(NormalFormError::ZeroParameter("r"));
        }
        if b.is_zero() {
            return Err(NormalFormError::ZeroParameter("b"));
        }
        let actual = b.multiplicative_order();
        if actual != Some(r) {
            return Err(NormalFormError::NotPrimitiveRoot {
                expected: r,
                actual,
            });
        }
        if !p.is_monic() {
            return Err(NormalFormError::NotMonic);
        }
        Ok(NormalForm::TriangularTorsion { r, s, b, p })
    }

    pub fn collapse_scale(lambda: Coeff, g: BiPoly) -> Result<Self, NormalFormError> {
        if lambda.is_zero() {
            return Err(NormalFormError::ZeroParameter("lambda"));
        }
        Ok(NormalForm::CollapseScale { lambda, g })
    }

    pub fn collapse_shift(lambda: Coeff, g: BiPoly) -> Result<Self, NormalFormError> {
        if lambda.is_zero() {
            return Err(NormalFormError::ZeroParameter("lambda"));
        }
        Ok(NormalForm::CollapseShift { lambda, g })
    }

    /// Position of this class in the catalog, 1 through 7.
    pub fn case_number(&self) -> u8 {
        match self {
            NormalForm::Diagonal { .. } => 1,
            NormalForm::ScaleShift { .. } => 2,
            NormalForm::TriangularFree { .. } => 3,
            NormalForm::TriangularTorsion { .. } => 4,
            NormalForm::EventuallyIdempotent => 5,
            NormalForm::CollapseScale { .. } => 6,
            NormalForm::CollapseShift { .. } => 7,
        }
    }

    /// The endomorphism with the stated images. The eventually idempotent
    /// class is excluded: it is a property, not a formula.
    pub fn to_endomorphism(&self) -> Result<Endomorphism, NormalFormError> {
        match self {
            NormalForm::Diagonal { a, b } => {
                let field = b.spec().clone();
                Ok(Endomorphism::new(
                    BiPoly::var_x(field.clone()).scale(b),
                    BiPoly::var_y(field).scale(a),
                ))
            }
            NormalForm::ScaleShift { b } => {
                let field = b.spec().clone();
                Ok(Endomorphism::new(
                    BiPoly::var_x(field.clone()).scale(b),
                    BiPoly::var_y(field.clone()).add(&BiPoly::one(field)),
                ))
            }
            NormalForm::TriangularFree { s, a, b } => {
                let field = b.spec().clone();
                let tail = BiPoly::from_monomial(Monomial::new(0, *s), a.clone());
                Ok(Endomorphism::new(
                    BiPoly::var_x(field.clone()).scale(&b.pow(*s)).add(&tail),
                    BiPoly::var_y(field).scale(b),
                ))
            }
            NormalForm::TriangularTorsion { r, s, b, p } => {
                let field = b.spec().clone();
                let tail = p.inflate(*r).shift_up(*s).to_bipoly();
                Ok(Endomorphism::new(
                    BiPoly::var_x(field.clone()).scale(&b.pow(*s)).add(&tail),
                    BiPoly::var_y(field).scale(b),
                ))
            }
            NormalForm::EventuallyIdempotent => Err(NormalFormError::NoCanonicalImages),
            NormalForm::CollapseScale { lambda, g } => {
                let field = lambda.spec().clone();
                let tail = BiPoly::var_y(field.clone()).mul(g);
                Ok(Endomorphism::new(
                    BiPoly::var_x(field.clone()).scale(lambda).add(&tail),
                    BiPoly::zero(field),
                ))
            }
            NormalForm::CollapseShift { lambda, g } => {
                let field = lambda.spec().clone();
                let tail = BiPoly::var_y(field.clone()).mul(g);
                Ok(Endomorphism::new(
                    BiPoly::var_x(field.clone())
                        .add(&BiPoly::constant(lambda.clone()))
                        .add(&tail),
                    BiPoly::zero(field),
                ))
            }
        }
    }

    /// The E-derivation `id - phi` of the built normal form.
    pub fn to_derivation(&self) -> Result<EDerivation, NormalFormError> {
        Ok(EDerivation::from_endomorphism(self.to_endomorphism()?))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Diagonal { a, b } => {
                write!(f, "case1 {{ a = \"{a}\", b = \"{b}\" }}")
            }
            NormalForm::ScaleShift { b } => write!(f, "case2 {{ b = \"{b}\" }}"),
            NormalForm::TriangularFree { s, a, b } => {
                write!(f, "case3 {{ s = {s}, a = \"{a}\", b = \"{b}\" }}")
            }
            NormalForm::TriangularTorsion { r, s, b, p } => {
                write!(f, "case4 {{ r = {r}, s = {s}, b = \"{b}\", p = \"{p}\" }}")
            }
            NormalForm::EventuallyIdempotent => write!(f, "case5 {{ }}"),
            NormalForm::CollapseScale { lambda, g } => {
                write!(f, "case6 {{ lambda = \"{lambda}\", g = \"{g}\" }}")
            }
            NormalForm::CollapseShift { lambda, g } => {
                write!(f, "case7 {{ lambda = \"{lambda}\", g = \"{g}\" }}")
            }
        }
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn integer_coeff(n: BigInt, field: FieldSpec) -> Coeff {
    Coeff::from_rational(BigRational::from_integer(n), field)
}

/// Closed form for `delta(x^m y^n)` in the torsion triangular class:
///
/// `(1 - b^(ms+n)) x^m y^n - sum_{i=1..m} C(m,i) b^((m-i)s+n) x^(m-i)
/// y^(is+n) p(y^r)^i`,
///
/// with the empty-sum convention when `m = 0`.
pub fn delta_monomial_closed_form(
    m: u64,
    n: u64,
    nf: &NormalForm,
) -> Result<BiPoly, NormalFormError> {
    let NormalForm::TriangularTorsion { r, s, b, p } = nf else {
        return Err(NormalFormError::WrongCase {
            expected: "torsion triangular (case 4)",
        });
    };
    let field = b.spec().clone();
    let one = Coeff::one(field.clone());
    let diag = one.sub(&b.pow(m * s + n));
    let mut out = BiPoly::from_monomial(Monomial::new(m, n), diag);
    if m == 0 {
        return Ok(out);
    }
    let p_inflated = p.inflate(*r).to_bipoly();
    let mut p_power = BiPoly::one(field.clone());
    for i in 1..=m {
        p_power = p_power.mul(&p_inflated);
        let c = integer_coeff(binomial(BigInt::from(m), BigInt::from(i)), field.clone())
            .mul(&b.pow((m - i) * s + n))
            .neg();
        let term = p_power.mul(&BiPoly::from_monomial(Monomial::new(m - i, i * s + n), c));
        out = out.add(&term);
    }
    Ok(out)
}

/// Closed form for `delta(x^m y^n)` in the collapse-scale class:
/// `x^m y^n` when `n > 0`; `(1 - lambda^m) x^m + y*f_m` when `n = 0`,
/// where the tail `y*f_m` is obtained by expanding `x^m - (lambda*x + y*g)^m`
/// and verifying that everything off the diagonal is divisible by `y`.
pub fn delta_collapse_scale_closed_form(
    m: u64,
    n: u64,
    nf: &NormalForm,
) -> Result<BiPoly, NormalFormError> {
    let NormalForm::CollapseScale { lambda, g } = nf else {
        return Err(NormalFormError::WrongCase {
            expected: "collapse-scale (case 6)",
        });
    };
    if m == 0 && n == 0 {
        return Err(NormalFormError::ConstantMonomial);
    }
    let field = lambda.spec().clone();
    if n > 0 {
        return Ok(BiPoly::from_monomial(
            Monomial::new(m, n),
            Coeff::one(field),
        ));
    }
    let phi_x = BiPoly::var_x(field.clone())
        .scale(lambda)
        .add(&BiPoly::var_y(field.clone()).mul(g));
    let xm = BiPoly::from_monomial(Monomial::new(m, 0), Coeff::one(field.clone()));
    let out = xm.sub(&phi_x.pow(m));
    let diag = BiPoly::from_monomial(
        Monomial::new(m, 0),
        Coeff::one(field.clone()).sub(&lambda.pow(m)),
    );
    let tail = out.sub(&diag);
    assert!(
        tail.min_y_degree().map_or(true, |j| j >= 1),
        "collapse-scale tail must be divisible by y"
    );
    Ok(out)
}

/// Verdict of the local-finiteness probe for a single seed polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LfVerdict {
    /// The iterate span stabilized: an exact linear dependence certifies
    /// that the span is invariant, so this verdict is definitive.
    FiniteDimensional { dim: usize },
    /// Neither cutoff sufficed; inconclusive by contract.
    CutoffExceeded,
}

/// Probe result with the dimension trajectory after each insertion.
#[derive(Clone, Debug)]
pub struct LfEntry {
    pub verdict: LfVerdict,
    pub trajectory: Vec<usize>,
}

impl LfEntry {
    pub fn is_finite(&self) -> bool {
        matches!(self.verdict, LfVerdict::FiniteDimensional { .. })
    }
}

/// The probe applied to both generators.
#[derive(Clone, Debug)]
pub struct LfReport {
    pub on_x: LfEntry,
    pub on_y: LfEntry,
}

impl LfReport {
    pub fn all_finite(&self) -> bool {
        self.on_x.is_finite() && self.on_y.is_finite()
    }
}

/// Compute `dim span{f, phi f, phi^2 f, ...}` by exact echelon insertion.
///
/// A dependent iterate proves the span is `phi`-invariant, so the
/// finite-dimensional verdict is exact; exceeding either cutoff is
/// reported as inconclusive together with the dimension trajectory.
pub fn local_finite_probe(
    phi: &Endomorphism,
    f: &BiPoly,
    max_dim: usize,
    max_iter: usize,
) -> LfEntry {
    assert!(max_dim >= 1 && max_iter >= 1, "cutoffs must be positive");
    let mut span = TruncatedSpace::new(None);
    let mut current = f.clone();
    let mut trajectory = Vec::new();
    for _ in 0..=max_iter {
        let grew = span.insert(&current);
        trajectory.push(span.dim());
        if !grew {
            return LfEntry {
                verdict: LfVerdict::FiniteDimensional { dim: span.dim() },
                trajectory,
            };
        }
        if span.dim() > max_dim {
            break;
        }
        current = phi.apply(&current);
    }
    LfEntry {
        verdict: LfVerdict::CutoffExceeded,
        trajectory,
    }
}

/// Probe local finiteness on the generators `x` and `y`, which determine
/// the map.
pub fn local_finite_report(phi: &Endomorphism, max_dim: usize, max_iter: usize) -> LfReport {
    let field = phi.field().clone();
    LfReport {
        on_x: local_finite_probe(phi, &BiPoly::var_x(field.clone()), max_dim, max_iter),
        on_y: local_finite_probe(phi, &BiPoly::var_y(field), max_dim, max_iter),
    }
}

/// Syntactic recognition of the catalog shapes.
///
/// This matches the image pair against the seven normal forms, checking
/// the relation `phi^2 = phi^3` last. No conjugation search is attempted:
/// `None` simply means the input is not written in normal form.
pub fn recognize_normal_form(phi: &Endomorphism) -> Option<NormalForm> {
    let nf = recognize_shape(phi)?;
    match nf.to_endomorphism() {
        // a recognized form must rebuild to the same images
        Ok(rebuilt) if &rebuilt == phi => Some(nf),
        Ok(_) => None,
        // the marker class has no images to compare
        Err(_) => Some(nf),
    }
}

fn recognize_shape(phi: &Endomorphism) -> Option<NormalForm> {
    let fx = phi.image_x();
    let fy = phi.image_y();
    let field = phi.field().clone();

    if let Some(b) = scalar_multiple_of_y(fy) {
        if let Some((c, h)) = split_x_linear(fx) {
            if !c.is_zero() {
                if h.is_zero() {
                    // diagonal shape takes precedence
                    if let Ok(nf) = NormalForm::diagonal(b.clone(), c.clone()) {
                        return Some(nf);
                    }
                }
                match b.multiplicative_order() {
                    None => {
                        // free triangular: the tail must be a single a*y^s
                        if let Some((m, a)) = single_term(&h) {
                            if m.x == 0 && m.y >= 1 && c == b.pow(m.y) {
                                if let Ok(nf) =
                                    NormalForm::triangular_free(m.y, a.clone(), b.clone())
                                {
                                    return Some(nf);
                                }
                            }
                        }
                    }
                    Some(r) => {
                        if let Some((s, p)) = tail_as_shifted_inflation(&h, r) {
                            if c == b.pow(s) {
                                if let Ok(nf) =
                                    NormalForm::triangular_torsion(r, s, b.clone(), p)
                                {
                                    return Some(nf);
                                }
                            }
                        }
                    }
                }
            }
        }
    } else if fy == &BiPoly::var_y(field.clone()).add(&BiPoly::one(field.clone())) {
        if let Some((m, b)) = single_term(fx) {
            if m == Monomial::new(1, 0) {
                if let Ok(nf) = NormalForm::scale_shift(b.clone()) {
                    return Some(nf);
                }
            }
        }
    } else if fy.is_zero() {
        if let Some(nf) = recognize_collapse(fx, &field) {
            return Some(nf);
        }
    }

    if phi.is_eventually_idempotent() {
        return Some(NormalForm::EventuallyIdempotent);
    }
    None
}

fn recognize_collapse(fx: &BiPoly, field: &FieldSpec) -> Option<NormalForm> {
    // split fx into its y-free part and y * g
    let mut y_free = BiPoly::zero(field.clone());
    let mut g = BiPoly::zero(field.clone());
    for (m, c) in fx.terms() {
        if m.y == 0 {
            y_free = y_free.add(&BiPoly::from_monomial(*m, c.clone()));
        } else {
            g = g.add(&BiPoly::from_monomial(Monomial::new(m.x, m.y - 1), c.clone()));
        }
    }
    let x_coeff = y_free
        .coeff(&Monomial::new(1, 0))
        .cloned()
        .unwrap_or_else(|| Coeff::zero(field.clone()));
    let constant = y_free.constant_coeff();
    let extra = y_free.num_terms()
        - usize::from(!x_coeff.is_zero())
        - usize::from(!constant.is_zero());
    if extra > 0 {
        return None;
    }
    if !x_coeff.is_zero() && constant.is_zero() {
        return NormalForm::collapse_scale(x_coeff, g).ok();
    }
    if x_coeff.is_one() && !constant.is_zero() {
        return NormalForm::collapse_shift(constant, g).ok();
    }
    None
}

fn scalar_multiple_of_y(f: &BiPoly) -> Option<&Coeff> {
    let (m, c) = single_term(f)?;
    (m == Monomial::new(0, 1)).then_some(c)
}

fn single_term(f: &BiPoly) -> Option<(Monomial, &Coeff)> {
    if f.num_terms() == 1 {
        f.leading_term()
    } else {
        None
    }
}

/// Split `f` as `c*x + h(y)` when it has that shape.
fn split_x_linear(f: &BiPoly) -> Option<(Coeff, BiPoly)> {
    let field = f.field().clone();
    let mut c = Coeff::zero(field.clone());
    let mut h = BiPoly::zero(field);
    for (m, k) in f.terms() {
        if m.x == 0 {
            h = h.add(&BiPoly::from_monomial(*m, k.clone()));
        } else if *m == Monomial::new(1, 0) {
            c = k.clone();
        } else {
            return None;
        }
    }
    Some((c, h))
}

/// Recover `(s, p)` from a tail `h = y^s * p(y^r)` with `p(0)` nonzero.
///
/// The minimal-shift parameterization is canonical: `s` is the least
/// `y`-exponent, which forces `p(0)` nonzero.
fn tail_as_shifted_inflation(h: &BiPoly, r: u64) -> Option<(u64, YPoly)> {
    if !h.is_univariate_y() || h.is_zero() {
        return None;
    }
    let s = h.min_y_degree().expect("nonzero");
    let top = h.max_y_degree().expect("nonzero");
    let deg = (top - s) / r;
    if (top - s) % r != 0 {
        return None;
    }
    let field = h.field().clone();
    let mut coeffs = vec![Coeff::zero(field.clone()); deg as usize + 1];
    for (m, c) in h.terms() {
        let e = m.y - s;
        if e % r != 0 {
            return None;
        }
        coeffs[(e / r) as usize] = c.clone();
    }
    Some((s, YPoly::from_coeffs(field, coeffs)))
}
