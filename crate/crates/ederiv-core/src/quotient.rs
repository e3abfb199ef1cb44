//! Quotients by principal ideals in `y`, their decompositions, and the
//! probing machinery for Mathieu-Zhao style questions.
//!
//! The quotient `K[x,y]/<h(y)>` keeps unique normal forms by `y`-division.
//! Nilpotency there is a total exact decision through the squarefree part
//! of the modulus. A factored modulus splits the quotient into coprime
//! components, idempotents of the circulant algebra `K[y]/<y^r - 1>` are
//! found by enumerating value vectors under the inverse discrete Fourier
//! transform, and named membership oracles let the weak-radical and
//! falsifier probes compose with any subspace.

use std::fmt;
use std::sync::Arc;

use crate::field::{Coeff, FieldSpec};
use crate::poly::{BiPoly, Monomial};
use crate::subspace::{self, MonomialPattern};
use crate::ypoly::YPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientError {
    /// The modulus of a principal quotient must be monic in `y`.
    NonMonic,
    /// CRT roots must be pairwise distinct.
    RepeatedRoot,
    /// CRT roots must be nonzero; the zero root is carried by `y^s`.
    ZeroRoot,
    /// The reassembled factorization must equal the declared polynomial.
    FactorizationMismatch,
    /// The session field has no primitive root of the requested order.
    MissingPrimitiveRoot { order: u64 },
    /// A probe precondition failed at the stated power.
    PreconditionFailed { power: u64 },
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::NonMonic => write!(f, "modulus must be monic in y"),
            QuotientError::RepeatedRoot => write!(f, "factorization roots must be distinct"),
            QuotientError::ZeroRoot => write!(f, "factorization roots must be nonzero"),
            QuotientError::FactorizationMismatch => {
                write!(f, "factorization does not reassemble to the declared polynomial")
            }
            QuotientError::MissingPrimitiveRoot { order } => {
                write!(f, "field has no primitive root of unity of order {order}")
            }
            QuotientError::PreconditionFailed { power } => {
                write!(f, "weak-radical precondition fails at power {power}")
            }
        }
    }
}

impl std::error::Error for QuotientError {}

/// Remainder of `f` under `y`-division by a monic modulus.
pub fn reduce_mod(f: &BiPoly, h: &YPoly) -> Result<BiPoly, QuotientError> {
    if !h.is_monic() {
        return Err(QuotientError::NonMonic);
    }
    Ok(f.div_rem_y(h).1)
}

/// The quotient ring `K[x,y]/<h(y)>` with cached squarefree part.
#[derive(Clone)]
pub struct PrincipalQuotient {
    modulus: YPoly,
    squarefree: YPoly,
}

impl PrincipalQuotient {
    pub fn new(modulus: YPoly) -> Result<Self, QuotientError> {
        if !modulus.is_monic() {
            return Err(QuotientError::NonMonic);
        }
        let squarefree = modulus.squarefree_part();
        Ok(PrincipalQuotient { modulus, squarefree })
    }

    pub fn modulus(&self) -> &YPoly {
        &self.modulus
    }

    pub fn squarefree_part(&self) -> &YPoly {
        &self.squarefree
    }

    /// Normal form: `y`-degree strictly below `deg h`, `x` untouched.
    pub fn reduce(&self, f: &BiPoly) -> BiPoly {
        f.div_rem_y(&self.modulus).1
    }

    pub fn mul(&self, f: &BiPoly, g: &BiPoly) -> BiPoly {
        self.reduce(&f.mul(g))
    }

    /// Exact nilpotency decision: `f` is nilpotent modulo `h` exactly when
    /// it vanishes modulo the squarefree part of `h`.
    pub fn is_nilpotent(&self, f: &BiPoly) -> bool {
        f.div_rem_y(&self.squarefree).1.is_zero()
    }
}

/// Free-function form of the nilpotency decision.
pub fn is_nilpotent_in_quotient(f: &BiPoly, h: &YPoly) -> Result<bool, QuotientError> {
    Ok(PrincipalQuotient::new(h.clone())?.is_nilpotent(f))
}

/// One coprime component of a factored modulus.
#[derive(Clone)]
pub struct CrtFactor {
    /// `y^s` for the zero component, `(y^r - a)^n` otherwise.
    pub modulus: YPoly,
    /// The root `a`, absent for the `y^s` component.
    pub root: Option<Coeff>,
    pub multiplicity: u64,
}

impl CrtFactor {
    /// The projection onto this component, as a normal form.
    pub fn project(&self, f: &BiPoly) -> BiPoly {
        f.div_rem_y(&self.modulus).1
    }
}

/// A factored modulus `y^s * prod (y^r - a_i)^(n_i)` with its projections.
#[derive(Clone)]
pub struct CrtDecomposition {
    pub s: u64,
    pub r: u64,
    pub source: YPoly,
    pub factors: Vec<CrtFactor>,
}

impl CrtDecomposition {
    /// The tuple of component normal forms; injective on normal forms of
    /// the source quotient because the component moduli are coprime.
    pub fn project_tuple(&self, f: &BiPoly) -> Vec<BiPoly> {
        self.factors.iter().map(|c| c.project(f)).collect()
    }
}

/// Split `y^s p(y^r)` along a declared factorization `p = prod (t - a_i)^(n_i)`.
///
/// Verifies that the roots are distinct and nonzero, that the declared
/// factorization reassembles to `p` exactly, and that the component moduli
/// are pairwise coprime (an exact gcd computation, which is what makes the
/// combined projection injective).
pub fn crt_decompose(
    s: u64,
    factored_p: &[(Coeff, u64)],
    r: u64,
    p: &YPoly,
) -> Result<CrtDecomposition, QuotientError> {
    let field = p.field().clone();
    for (i, (a, _)) in factored_p.iter().enumerate() {
        if a.is_zero() {
            return Err(QuotientError::ZeroRoot);
        }
        if factored_p[i + 1..].iter().any(|(b, _)| b == a) {
            return Err(QuotientError::RepeatedRoot);
        }
    }
    // reassemble prod (t - a_i)^(n_i) and compare with the declared p
    let t = YPoly::var(field.clone());
    let mut product = YPoly::one(field.clone());
    for (a, n) in factored_p {
        let linear = t.sub(&YPoly::constant(a.clone()));
        product = product.mul(&linear.pow(*n));
    }
    if &product != p {
        return Err(QuotientError::FactorizationMismatch);
    }

    let mut factors = Vec::new();
    if s > 0 {
        factors.push(CrtFactor {
            modulus: YPoly::monomial(field.clone(), s),
            root: None,
            multiplicity: s,
        });
    }
    for (a, n) in factored_p {
        let base = YPoly::monomial(field.clone(), r).sub(&YPoly::constant(a.clone()));
        factors.push(CrtFactor {
            modulus: base.pow(*n),
            root: Some(a.clone()),
            multiplicity: *n,
        });
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let g = factors[i].modulus.gcd(&factors[j].modulus);
            if !g.is_one() {
                return Err(QuotientError::FactorizationMismatch);
            }
        }
    }
    Ok(CrtDecomposition {
        s,
        r,
        source: p.inflate(r).shift_up(s),
        factors,
    })
}

/// The circulant algebra `R = K[y]/<y^r - 1>` on the basis `1, y, ...,
/// y^(r-1)`; elements are coefficient vectors of length `r`.
#[derive(Clone)]
pub struct FiniteAlgebra {
    r: u64,
    field: FieldSpec,
}

impl FiniteAlgebra {
    pub fn new(r: u64, field: FieldSpec) -> Self {
        assert!(r >= 1);
        FiniteAlgebra { r, field }
    }

    pub fn order(&self) -> u64 {
        self.r
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn zero(&self) -> Vec<Coeff> {
        vec![Coeff::zero(self.field.clone()); self.r as usize]
    }

    pub fn one(&self) -> Vec<Coeff> {
        let mut e = self.zero();
        e[0] = Coeff::one(self.field.clone());
        e
    }

    /// Cyclic convolution: multiplication with `y^r = 1`.
    pub fn mul(&self, a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
        let r = self.r as usize;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % r;
                out[k] = out[k].add(&x.mul(y));
            }
        }
        out
    }

    pub fn is_zero_element(&self, a: &[Coeff]) -> bool {
        a.iter().all(Coeff::is_zero)
    }

    pub fn is_idempotent(&self, a: &[Coeff]) -> bool {
        self.mul(a, a) == a
    }
}

/// Inverse discrete Fourier transform over the session field:
/// `b_j = (1/r) * sum_i values_i * omega^(-i*j)`.
///
/// The field must contain a primitive root of unity of order `r`.
pub fn inverse_dft(values: &[Coeff], field: &FieldSpec) -> Result<Vec<Coeff>, QuotientError> {
    let r = values.len() as u64;
    let omega = field
        .primitive_root_of_order(r)
        .ok_or(QuotientError::MissingPrimitiveRoot { order: r })?;
    let omega_inv = omega.inv();
    let r_inv = Coeff::from_integer(r as i64, field.clone()).inv();
    let mut out = Vec::with_capacity(values.len());
    for j in 0..r {
        let mut acc = Coeff::zero(field.clone());
        for (i, v) in values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            acc = acc.add(&v.mul(&omega_inv.pow(i as u64 * j)));
        }
        out.push(acc.mul(&r_inv));
    }
    Ok(out)
}

/// Evaluate a coefficient vector at the powers of the primitive root:
/// the forward transform `f(omega^i) = sum_j b_j omega^(i*j)`.
pub fn forward_dft(coeffs: &[Coeff], field: &FieldSpec) -> Result<Vec<Coeff>, QuotientError> {
    let r = coeffs.len() as u64;
    let omega = field
        .primitive_root_of_order(r)
        .ok_or(QuotientError::MissingPrimitiveRoot { order: r })?;
    let mut out = Vec::with_capacity(coeffs.len());
    for i in 0..r {
        let mut acc = Coeff::zero(field.clone());
        for (j, b) in coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc = acc.add(&b.mul(&omega.pow(i * j as u64)));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Search for idempotents of the circulant algebra lying in the span of
/// `y, ..., y^(r-1)` (constant coordinate zero).
///
/// Idempotents correspond to `{0,1}`-valued functions on the roots of
/// unity, so the search enumerates all `2^r` value vectors, inverts each by
/// the discrete Fourier transform, and keeps those with vanishing constant
/// coefficient. The returned list is expected to contain only zero.
pub fn idempotent_search_cprime(
    r: u64,
    field: &FieldSpec,
) -> Result<Vec<Vec<Coeff>>, QuotientError> {
    assert!(r >= 1 && r < 32, "enumeration is 2^r; keep r small");
    // fail early when the field cannot express the transform
    field
        .primitive_root_of_order(r)
        .ok_or(QuotientError::MissingPrimitiveRoot { order: r })?;
    let one = Coeff::one(field.clone());
    let zero = Coeff::zero(field.clone());
    let mut found = Vec::new();
    for mask in 0u64..(1 << r) {
        let values: Vec<Coeff> = (0..r)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    one.clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        let coeffs = inverse_dft(&values, field)?;
        if coeffs[0].is_zero() {
            found.push(coeffs);
        }
    }
    Ok(found)
}

/// A named, pure membership predicate over polynomials.
#[derive(Clone)]
pub struct MembershipOracle {
    name: String,
    pred: Arc<dyn Fn(&BiPoly) -> bool + Send + Sync>,
}

impl MembershipOracle {
    pub fn new(
        name: impl Into<String>,
        pred: impl Fn(&BiPoly) -> bool + Send + Sync + 'static,
    ) -> Self {
        MembershipOracle {
            name: name.into(),
            pred: Arc::new(pred),
        }
    }

    /// Membership in `C(r,s) + <y^s p(y^r)>`.
    pub fn c_plus_ideal(r: u64, s: u64, p: &YPoly) -> Self {
        let h = p.inflate(r).shift_up(s);
        let name = format!("C({r},{s}) + <{}>", h);
        let p = p.clone();
        MembershipOracle::new(name, move |f| {
            subspace::membership_c_plus_ideal(f, r, s, &p).unwrap_or(false)
        })
    }

    /// Membership in `C(r,s) + <h>` for an arbitrary monic modulus `h`;
    /// this is how the subspace transports into a quotient component.
    pub fn pattern_plus_modulus(r: u64, s: u64, h: &YPoly) -> Self {
        let name = format!("C({r},{s}) + <{}>", h);
        let h = h.clone();
        MembershipOracle::new(name, move |f| {
            subspace::membership_pattern_plus_principal(f, r, s, &h)
        })
    }

    /// Support membership in a monomial pattern.
    pub fn from_pattern(pattern: MonomialPattern) -> Self {
        let name = pattern.to_string();
        MembershipOracle::new(name, move |f| subspace::support_membership(f, &pattern))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, f: &BiPoly) -> bool {
        (self.pred)(f)
    }
}

impl fmt::Debug for MembershipOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "oracle({})", self.name)
    }
}

/// First power `1 <= m <= n` with `f^m` outside the subspace, if any.
pub fn weak_radical_first_failure(
    f: &BiPoly,
    oracle: &MembershipOracle,
    n: u64,
) -> Option<u64> {
    let mut power = BiPoly::one(f.field().clone());
    for m in 1..=n {
        power = power.mul(f);
        if !oracle.contains(&power) {
            return Some(m);
        }
    }
    None
}

/// Finite window onto the weak radical: `f^m` in the subspace for every
/// `1 <= m <= n`. A positive answer is evidence, not proof.
pub fn weak_radical_probe(f: &BiPoly, oracle: &MembershipOracle, n: u64) -> bool {
    weak_radical_first_failure(f, oracle, n).is_none()
}

/// Result of checking that projections preserve weak-radical windows.
#[derive(Clone, Debug)]
pub struct WrTransferReport {
    pub checked: usize,
    pub skipped: usize,
    /// Samples whose projection left the transported window; a theorem
    /// says this cannot happen, so entries indicate an implementation bug.
    pub violations: Vec<BiPoly>,
}

impl WrTransferReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each sample inside the weak-radical window of `C(r,s) + <y^s p(y^r)>`,
/// assert that its projection lies in the weak-radical window of the
/// transported subspace `C(r,s) + <component modulus>`.
pub fn wr_transfer_check(
    samples: &[BiPoly],
    r: u64,
    s: u64,
    p: &YPoly,
    factor: &CrtFactor,
    n: u64,
) -> WrTransferReport {
    let source = MembershipOracle::c_plus_ideal(r, s, p);
    let transported = MembershipOracle::pattern_plus_modulus(r, s, &factor.modulus);
    let mut report = WrTransferReport {
        checked: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for f in samples {
        if !weak_radical_probe(f, &source, n) {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let projected = factor.project(f);
        if !weak_radical_probe(&projected, &transported, n) {
            report.violations.push(f.clone());
        }
    }
    report
}

/// Falsifier verdict for one multiplier monomial.
#[derive(Clone, Debug)]
pub struct MzGeneratorOutcome {
    pub generator: Monomial,
    /// Least `n` with `f^m * g` inside the subspace for all `n < m <= hi`;
    /// `None` when the top of the window still fails.
    pub stabilizes_after: Option<u64>,
    /// Powers in the window where membership failed.
    pub failing_powers: Vec<u64>,
}

/// Report of the falsifier probe over all multiplier monomials.
#[derive(Clone, Debug)]
pub struct MzProbeReport {
    pub outcomes: Vec<MzGeneratorOutcome>,
}

impl MzProbeReport {
    /// Generators still failing at the top of the power window.
    pub fn persistent_violations(&self) -> Vec<&MzGeneratorOutcome> {
        self.outcomes
            .iter()
            .filter(|o| o.stabilizes_after.is_none())
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.persistent_violations().is_empty()
    }
}

/// Hunt for a counterexample to the Mathieu-Zhao behaviour of a subspace:
/// given `f` whose powers stay in the subspace, every multiplier `g` must
/// have `f^m g` inside it for all sufficiently large `m`.
///
/// Requires the weak-radical window to hold for `f` up to `m_hi` first;
/// probes every monomial `g` of degree at most `gen_deg` over powers
/// `m_lo <= m <= m_hi`.
pub fn mz_falsifier_probe(
    f: &BiPoly,
    oracle: &MembershipOracle,
    gen_deg: u64,
    m_lo: u64,
    m_hi: u64,
) -> Result<MzProbeReport, QuotientError> {
    assert!(1 <= m_lo && m_lo <= m_hi, "power window must be nonempty");
    if let Some(power) = weak_radical_first_failure(f, oracle, m_hi) {
        return Err(QuotientError::PreconditionFailed { power });
    }
    let field = f.field().clone();
    // precompute the powers of f in the window
    let mut powers = Vec::with_capacity((m_hi - m_lo + 1) as usize);
    let mut acc = BiPoly::one(field.clone());
    for m in 1..=m_hi {
        acc = acc.mul(f);
        if m >= m_lo {
            powers.push((m, acc.clone()));
        }
    }
    let mut outcomes = Vec::new();
    for deg in 0..=gen_deg {
        for i in 0..=deg {
            let generator = Monomial::new(i, deg - i);
            let g = BiPoly::from_monomial(generator, Coeff::one(field.clone()));
            let mut failing = Vec::new();
            for (m, fm) in &powers {
                if !oracle.contains(&fm.mul(&g)) {
                    failing.push(*m);
                }
            }
            let stabilizes_after = match failing.last() {
                Some(&top) if top == m_hi => None,
                Some(&last) => Some(last),
                None => Some(m_lo - 1),
            };
            outcomes.push(MzGeneratorOutcome {
                generator,
                stabilizes_after,
                failing_powers: failing,
            });
        }
    }
    Ok(MzProbeReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_ypoly};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn p(text: &str) -> BiPoly {
        parse_poly(text, &q()).expect("parse")
    }

    fn yp(text: &str) -> YPoly {
        parse_ypoly(text, &q()).expect("parse")
    }

    #[test]
    fn reduce_mod_examples() {
        let h = yp("y^3 + y");
        assert!(reduce_mod(&p("y^4 + y^2"), &h).unwrap().is_zero());
        assert_eq!(reduce_mod(&p("x^2"), &h).unwrap(), p("x^2"));
        assert!(reduce_mod(&p("y^2"), &yp("y^2")).unwrap().is_zero());
        assert_eq!(
            reduce_mod(&p("y"), &yp("2*y + 1")).unwrap_err(),
            QuotientError::NonMonic
        );
    }

    #[test]
    fn reduce_mod_is_idempotent_and_linear() {
        let quot = PrincipalQuotient::new(yp("y^3 + y")).unwrap();
        let f = p("x*y^5 + y^4 + x^2*y + 3");
        let once = quot.reduce(&f);
        assert_eq!(quot.reduce(&once), once);
        let g = p("y^6 - x");
        assert_eq!(
            quot.reduce(&f.add(&g)),
            quot.reduce(&f).add(&quot.reduce(&g))
        );
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent_in_quotient(&p("x*y"), &yp("y^2")).unwrap());
        assert!(!is_nilpotent_in_quotient(&p("x"), &yp("y^2")).unwrap());
        let h = yp("y^2 - 1").pow(2);
        assert!(is_nilpotent_in_quotient(&p("y^3 - y"), &h).unwrap());
    }

    #[test]
    fn nilpotency_matches_power_iteration() {
        let moduli = [yp("y^2"), yp("y^3 + y"), yp("y^2 - 1").pow(2)];
        let samples = [
            p("y"),
            p("x*y"),
            p("y^2 - 1"),
            p("y^3 - y"),
            p("x + y"),
            p("0"),
        ];
        for h in &moduli {
            let quot = PrincipalQuotient::new(h.clone()).unwrap();
            let bound = h.degree().unwrap();
            for f in &samples {
                // power iteration oracle: nilpotent iff f^(deg h) is zero
                let mut acc = quot.reduce(f);
                for _ in 1..bound {
                    acc = quot.mul(&acc, &quot.reduce(f));
                }
                let by_iteration = acc.is_zero();
                assert_eq!(quot.is_nilpotent(f), by_iteration, "f = {f}, h = {h}");
            }
        }
    }

    #[test]
    fn crt_examples() {
        // y * (y^2 + 1): the single root is -1 with multiplicity 1
        let dec = crt_decompose(
            1,
            &[(Coeff::from_integer(-1, q()), 1)],
            2,
            &yp("y + 1"),
        )
        .unwrap();
        assert_eq!(dec.factors.len(), 2);
        assert_eq!(dec.factors[0].modulus, yp("y"));
        assert_eq!(dec.factors[1].modulus, yp("y^2 + 1"));
        assert_eq!(dec.source, yp("y^3 + y"));

        // pure y^2: an empty factor list
        let dec = crt_decompose(2, &[], 1, &yp("1")).unwrap();
        assert_eq!(dec.factors.len(), 1);
        assert_eq!(dec.factors[0].modulus, yp("y^2"));

        // (y - 1)^2 over r = 1
        let dec = crt_decompose(
            0,
            &[(Coeff::from_integer(1, q()), 2)],
            1,
            &yp("y^2 - 2*y + 1"),
        )
        .unwrap();
        assert_eq!(dec.factors.len(), 1);
        assert_eq!(dec.factors[0].multiplicity, 2);
    }

    #[test]
    fn crt_validates_input() {
        assert_eq!(
            crt_decompose(0, &[(Coeff::zero(q()), 1)], 2, &yp("y")).unwrap_err(),
            QuotientError::ZeroRoot
        );
        assert_eq!(
            crt_decompose(
                0,
                &[
                    (Coeff::from_integer(1, q()), 1),
                    (Coeff::from_integer(1, q()), 1)
                ],
                2,
                &yp("y^2 - 2*y + 1")
            )
            .unwrap_err(),
            QuotientError::RepeatedRoot
        );
        assert_eq!(
            crt_decompose(0, &[(Coeff::from_integer(1, q()), 1)], 2, &yp("y + 1"))
                .unwrap_err(),
            QuotientError::FactorizationMismatch
        );
    }

    #[test]
    fn crt_tuple_separates_normal_forms() {
        let dec = crt_decompose(
            1,
            &[(Coeff::from_integer(-1, q()), 1)],
            2,
            &yp("y + 1"),
        )
        .unwrap();
        // distinct normal forms mod y^3 + y yield distinct tuples
        let reps = [p("1"), p("y"), p("y^2"), p("x"), p("x*y"), p("y^2 + y")];
        for (i, f) in reps.iter().enumerate() {
            for g in reps.iter().skip(i + 1) {
                assert_ne!(dec.project_tuple(f), dec.project_tuple(g));
            }
        }
    }

    #[test]
    fn inverse_dft_examples() {
        let spec = FieldSpec::cyclotomic(4);
        let one = Coeff::one(spec.clone());
        let zero = Coeff::zero(spec.clone());

        let b = inverse_dft(&[one.clone(); 4], &spec).unwrap();
        assert!(b[0].is_one() && b[1..].iter().all(Coeff::is_zero));

        let b = inverse_dft(&[zero.clone(); 4], &spec).unwrap();
        assert!(b.iter().all(Coeff::is_zero));

        // r = 2 over Q: values (0, 1) come from (1 - y)/2
        let qspec = q();
        let b = inverse_dft(
            &[Coeff::zero(qspec.clone()), Coeff::one(qspec.clone())],
            &qspec,
        )
        .unwrap();
        let half = Coeff::from_rational(num_rational::BigRational::new(1.into(), 2.into()), qspec);
        assert_eq!(b[0], half);
        assert_eq!(b[1], half.neg());
    }

    #[test]
    fn dft_round_trip() {
        let spec = FieldSpec::cyclotomic(6);
        let values: Vec<Coeff> = (0..6)
            .map(|k| Coeff::from_integer(k * k - 3, spec.clone()))
            .collect();
        let coeffs = inverse_dft(&values, &spec).unwrap();
        let back = forward_dft(&coeffs, &spec).unwrap();
        assert_eq!(back, values);
    }

    #[test]
    fn idempotent_search_finds_only_zero() {
        for r in 1..=4u64 {
            let spec = FieldSpec::cyclotomic(r);
            let found = idempotent_search_cprime(r, &spec).unwrap();
            assert_eq!(found.len(), 1, "r = {r}");
            assert!(found[0].iter().all(Coeff::is_zero), "r = {r}");
        }
    }

    #[test]
    fn circulant_algebra_idempotents() {
        let spec = FieldSpec::rationals();
        let alg = FiniteAlgebra::new(2, spec.clone());
        // (1 + y)/2 is idempotent mod y^2 - 1
        let half = Coeff::from_rational(
            num_rational::BigRational::new(1.into(), 2.into()),
            spec.clone(),
        );
        let e = vec![half.clone(), half];
        assert!(alg.is_idempotent(&e));
        assert!(alg.is_idempotent(&alg.one()));
        assert!(alg.is_idempotent(&alg.zero()));
    }

    #[test]
    fn weak_radical_examples() {
        let oracle = MembershipOracle::c_plus_ideal(2, 1, &yp("y + 1"));
        // y is in C but y^2 escapes
        assert_eq!(weak_radical_first_failure(&p("y"), &oracle, 4), Some(2));
        assert!(weak_radical_probe(&p("0"), &oracle, 4));
        // the ideal generator absorbs all powers
        assert!(weak_radical_probe(&p("y^3 + y"), &oracle, 8));
    }

    #[test]
    fn wr_transfer_holds_on_samples() {
        let p_param = yp("y + 1");
        let dec = crt_decompose(
            1,
            &[(Coeff::from_integer(-1, q()), 1)],
            2,
            &p_param,
        )
        .unwrap();
        let samples = vec![
            p("y^3 + y"),
            p("0"),
            p("x*y^3 + x*y"),
            p("y^6 + 2*y^4 + y^2"),
            p("x"),
        ];
        for factor in &dec.factors {
            let report = wr_transfer_check(&samples, 2, 1, &p_param, factor, 6);
            assert!(report.passed());
            assert_eq!(report.checked + report.skipped, samples.len());
        }
    }

    #[test]
    fn falsifier_on_ideal_element() {
        let oracle = MembershipOracle::c_plus_ideal(2, 1, &yp("y + 1"));
        let report = mz_falsifier_probe(&p("y^3 + y"), &oracle, 3, 1, 8).unwrap();
        assert!(report.passed());
        // the ideal absorbs every product immediately
        assert!(report.outcomes.iter().all(|o| o.stabilizes_after == Some(0)));
    }

    #[test]
    fn falsifier_rejects_bad_precondition() {
        let oracle = MembershipOracle::c_plus_ideal(2, 1, &yp("y + 1"));
        let err = mz_falsifier_probe(&p("x"), &oracle, 2, 1, 4).unwrap_err();
        assert_eq!(err, QuotientError::PreconditionFailed { power: 2 });
    }

    #[test]
    fn falsifier_on_full_ideal_pattern() {
        let oracle = MembershipOracle::from_pattern(MonomialPattern::FullIdealXY);
        let report = mz_falsifier_probe(&p("x"), &oracle, 2, 1, 6).unwrap();
        // every positive-degree multiplier lands in the ideal at once; the
        // constant multiplier stabilizes as well since x^m itself is inside
        assert!(report.passed());
    }
}
