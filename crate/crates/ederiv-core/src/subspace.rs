//! Monomial-pattern subspaces and the image machinery built on them.
//!
//! The patterns are arithmetic conditions on exponent pairs: `C(r,s)` keeps
//! the monomials `x^i y^j` with `r` not dividing `i*s + j`, `B(r,s)` is its
//! complement, `B1` the part of `B` with positive `x`-degree, and `C'(r)`
//! the pure `x`-powers with exponent prime to the pattern period. On top of
//! these sit the triangular preimage solver, truncated windows onto the
//! image of an E-derivation, and the decision procedure for membership in
//! `C + <y^s p(y^r)>`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::endo::{EDerivation, NormalForm};
use crate::field::{Coeff, FieldSpec};
use crate::linalg::TruncatedSpace;
use crate::poly::{BiPoly, Monomial};
use crate::ypoly::YPoly;

/// An arithmetically defined monomial-spanned subspace.
#[derive(Clone, Debug)]
pub enum MonomialPattern {
    /// `x^i y^j` with `r` not dividing `i*s + j`.
    C { r: u64, s: u64 },
    /// `x^i y^j` with `r` dividing `i*s + j`.
    B { r: u64, s: u64 },
    /// The part of `B` with `i > 0`.
    B1 { r: u64, s: u64 },
    /// Pure powers `x^m` with `r` not dividing `m`.
    CPrime { r: u64 },
    /// Every monomial except the constant.
    FullIdealXY,
    /// An explicit table, only defined up to its degree bound.
    Custom {
        bound: u64,
        members: BTreeSet<Monomial>,
    },
}

fn weighted_residue(m: &Monomial, r: u64, s: u64) -> u64 {
    let value = m.x as u128 * s as u128 + m.y as u128;
    (value % r as u128) as u64
}

impl MonomialPattern {
    /// Decide membership by evaluating the arithmetic condition.
    ///
    /// # Panics
    /// Panics when a `Custom` table is queried beyond its bound.
    pub fn contains(&self, m: &Monomial) -> bool {
        match self {
            MonomialPattern::C { r, s } => weighted_residue(m, *r, *s) != 0,
            MonomialPattern::B { r, s } => weighted_residue(m, *r, *s) == 0,
            MonomialPattern::B1 { r, s } => m.x > 0 && weighted_residue(m, *r, *s) == 0,
            MonomialPattern::CPrime { r } => m.y == 0 && m.x % r != 0,
            MonomialPattern::FullIdealXY => !m.is_constant(),
            MonomialPattern::Custom { bound, members } => {
                assert!(
                    m.total_degree() <= *bound,
                    "custom pattern queried beyond its bound"
                );
                members.contains(m)
            }
        }
    }
}

impl fmt::Display for MonomialPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialPattern::C { r, s } => write!(f, "C(r={r}, s={s})"),
            MonomialPattern::B { r, s } => write!(f, "B(r={r}, s={s})"),
            MonomialPattern::B1 { r, s } => write!(f, "B1(r={r}, s={s})"),
            MonomialPattern::CPrime { r } => write!(f, "C'(r={r})"),
            MonomialPattern::FullIdealXY => write!(f, "<x,y>"),
            MonomialPattern::Custom { bound, .. } => write!(f, "custom(deg <= {bound})"),
        }
    }
}

/// Whether every monomial of `Sup(f)` satisfies the pattern. Membership in
/// a monomial-spanned subspace is exactly support containment.
pub fn support_membership(f: &BiPoly, pattern: &MonomialPattern) -> bool {
    f.support().all(|m| pattern.contains(m))
}

/// Why the triangular solver gave up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// The target has a monomial outside the pattern.
    TargetNotInPattern(Monomial),
    /// The image of a pattern monomial was zero or not led by that monomial.
    LeadingTermCondition(Monomial),
    /// The image of a pattern monomial left the pattern span.
    PatternNotPreserved { input: Monomial, offending: Monomial },
    /// The back-substitution needed a monomial beyond the degree bound.
    DegreeBoundExceeded(Monomial),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::TargetNotInPattern(m) => {
                write!(f, "target monomial {m} lies outside the pattern")
            }
            SolveError::LeadingTermCondition(m) => {
                write!(f, "leading-term condition violated at {m}")
            }
            SolveError::PatternNotPreserved { input, offending } => {
                write!(f, "image of {input} contains {offending} outside the pattern")
            }
            SolveError::DegreeBoundExceeded(m) => {
                write!(f, "solution escapes the degree bound at {m}")
            }
        }
    }
}

impl std::error::Error for SolveError {}

/// Solve `delta(h) = target` with `h` supported on the pattern, by
/// descending-lex back-substitution.
///
/// This is the constructive content of the triangular surjectivity
/// argument: whenever each pattern monomial maps to something led by
/// itself (with nonzero coefficient) and supported inside the pattern,
/// eliminating the leading term of the residual strictly decreases it in
/// the lex well-order, so the loop terminates with an exact preimage.
pub fn triangular_preimage_solve<F>(
    delta_apply: F,
    pattern: &MonomialPattern,
    target: &BiPoly,
    degree_bound: u64,
) -> Result<BiPoly, SolveError>
where
    F: Fn(Monomial) -> BiPoly,
{
    if let Some(bad) = target.support().find(|m| !pattern.contains(m)) {
        return Err(SolveError::TargetNotInPattern(*bad));
    }
    let field = target.field().clone();
    let mut work = target.clone();
    let mut solution = BiPoly::zero(field);
    while let Some((u, c)) = work.leading_term() {
        if u.total_degree() > degree_bound {
            return Err(SolveError::DegreeBoundExceeded(u));
        }
        let image = delta_apply(u);
        if let Some(off) = image.support().find(|m| !pattern.contains(m)) {
            return Err(SolveError::PatternNotPreserved {
                input: u,
                offending: *off,
            });
        }
        let Some((lead, lead_coeff)) = image.leading_term() else {
            return Err(SolveError::LeadingTermCondition(u));
        };
        if lead != u {
            return Err(SolveError::LeadingTermCondition(u));
        }
        let factor = c.div(lead_coeff);
        solution.add_term(u, &factor);
        work = work.sub(&image.scale(&factor));
    }
    Ok(solution)
}

/// Echelon span of `{delta(x^m y^n) : m+n <= d_in, deg <= d_out}`.
///
/// Only generator images fitting wholly inside `d_out` are admitted, so the
/// result is a genuine subspace of the image — an under-approximation with
/// no false positives.
pub fn truncated_image(delta: &EDerivation, d_in: u64, d_out: u64) -> TruncatedSpace {
    assert!(d_in >= d_out, "input window must cover the output window");
    let mut space = TruncatedSpace::new(Some(d_out));
    for deg in 0..=d_in {
        for m in 0..=deg {
            let image = delta.apply_monomial(Monomial::new(m, deg - m));
            match image.total_degree() {
                Some(ideg) if ideg <= d_out => {
                    space.insert(&image);
                }
                _ => {}
            }
        }
    }
    space
}

/// Largest total degree of `delta(x^m y^n)` over `m + n <= d_in`; zero when
/// every image vanishes. Used to widen the output window so no generator
/// image is discarded.
pub fn max_image_degree(delta: &EDerivation, d_in: u64) -> u64 {
    let mut best = 0;
    for deg in 0..=d_in {
        for m in 0..=deg {
            if let Some(d) = delta
                .apply_monomial(Monomial::new(m, deg - m))
                .total_degree()
            {
                best = best.max(d);
            }
        }
    }
    best
}

/// Validation errors for the subspace operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubspaceError {
    /// `p` must be monic.
    NotMonic,
    /// `p(0)` must be nonzero.
    ZeroConstantTerm,
    /// The operation requires a different catalog class.
    WrongCase { expected: &'static str },
    /// No closed-form image is on file for this class.
    UnsupportedCase { case: u8 },
}

impl fmt::Display for SubspaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceError::NotMonic => write!(f, "p must be monic"),
            SubspaceError::ZeroConstantTerm => write!(f, "p(0) must be nonzero"),
            SubspaceError::WrongCase { expected } => {
                write!(f, "operation requires the {expected} class")
            }
            SubspaceError::UnsupportedCase { case } => {
                write!(f, "no closed-form image for case {case}")
            }
        }
    }
}

impl std::error::Error for SubspaceError {}

/// Decide `f` in `C(r,s) + <h>` for a monic univariate modulus `h`.
///
/// Reduction modulo a polynomial in `y` alone preserves `x`-degree, so the
/// decision splits into `x`-degree slices. For slice `i` the admissible
/// normal forms `y^j mod h` (over `j` with `r` not dividing `i*s + j`) span
/// a subspace of the residue ring; the slice passes exactly when its own
/// normal form lies in that span. The span stabilizes because the residues
/// of `y^j` satisfy a linear recurrence of order `deg h`; we stop after
/// `deg(h) * r` consecutive admissible indices without growth.
pub(crate) fn membership_pattern_plus_principal(
    f: &BiPoly,
    r: u64,
    s: u64,
    h: &YPoly,
) -> bool {
    assert!(r >= 1, "pattern period must be positive");
    assert!(h.is_monic(), "modulus must be monic");
    let hdeg = h.degree().expect("monic implies nonzero");
    if hdeg == 0 {
        // the ideal is the whole ring
        return true;
    }
    let field = f.field().clone();
    let pattern_of = |i: u64, j: u64| (i as u128 * s as u128 + j as u128) % r as u128 != 0;

    // group f into x-degree slices
    let mut slices: BTreeMap<u64, BiPoly> = BTreeMap::new();
    for (m, c) in f.terms() {
        slices
            .entry(m.x)
            .or_insert_with(|| BiPoly::zero(field.clone()))
            .add_term(Monomial::new(0, m.y), c);
    }

    // admissible spans depend on i only through (i*s) mod r
    let mut span_cache: BTreeMap<u64, TruncatedSpace> = BTreeMap::new();
    let window = hdeg * r;

    for (i, slice) in slices {
        let slice_y = slice.to_ypoly().expect("slice is univariate");
        let nf = slice_y.rem(h).to_bipoly();
        if nf.is_zero() {
            continue;
        }
        let class = ((i as u128 * s as u128) % r as u128) as u64;
        let span = span_cache.entry(class).or_insert_with(|| {
            let mut span = TruncatedSpace::new(Some(hdeg.saturating_sub(1)));
            // residues of y^j satisfy a linear recurrence of order deg h,
            // so we can keep the iterate reduced at every step
            let mut power = YPoly::one(field.clone());
            let y = YPoly::var(field.clone());
            let mut stable = 0u64;
            let mut j = 0u64;
            while stable < window {
                if pattern_of(i, j) {
                    let grew = span.insert(&power.to_bipoly());
                    if grew {
                        stable = 0;
                    } else {
                        stable += 1;
                    }
                }
                power = power.mul(&y).rem(h);
                j += 1;
            }
            span
        });
        if !span.contains(&nf) {
            return false;
        }
    }
    true
}

/// Decide membership in `C(r,s) + <y^s p(y^r)>`.
///
/// The degenerate modulus `s = 0, p = 1` makes the ideal the whole ring, so
/// membership is trivially true.
pub fn membership_c_plus_ideal(
    f: &BiPoly,
    r: u64,
    s: u64,
    p: &YPoly,
) -> Result<bool, SubspaceError> {
    if !p.is_monic() {
        return Err(SubspaceError::NotMonic);
    }
    if p.eval_at_zero().is_zero() {
        return Err(SubspaceError::ZeroConstantTerm);
    }
    if s == 0 && p.is_one() {
        return Ok(true);
    }
    let h = p.inflate(r).shift_up(s);
    Ok(membership_pattern_plus_principal(f, r, s, &h))
}

/// Outcome of the two-sided desk-scale image verification.
#[derive(Clone, Debug)]
pub struct ImageIdentityReport {
    pub degree_bound: u64,
    pub margin: u64,
    /// Monomials whose delta image escaped `C + <y^s p(y^r)>`.
    pub forward_failures: Vec<(Monomial, BiPoly)>,
    /// Elements of the right-hand side not found in the truncated image.
    pub reverse_failures: Vec<BiPoly>,
}

impl ImageIdentityReport {
    pub fn passed(&self) -> bool {
        self.forward_failures.is_empty() && self.reverse_failures.is_empty()
    }
}

/// Check both inclusions of `Im delta = C + <y^s p(y^r)>` at desk scale.
///
/// Forward: every `delta(x^m y^n)` with `m + n <= d` must pass the
/// membership decision. Reverse: every monomial of `C` with degree at most
/// `d`, and every `x^m y^(n+s) p(y^r)` of degree at most `d`, must lie in
/// the truncated image built from generators up to degree `d + margin`
/// (with the output window widened so no generator image is discarded).
pub fn verify_image_identity(
    nf: &NormalForm,
    d: u64,
    margin: u64,
) -> Result<ImageIdentityReport, SubspaceError> {
    let NormalForm::TriangularTorsion { r, s, p, .. } = nf else {
        return Err(SubspaceError::WrongCase {
            expected: "torsion triangular (case 4)",
        });
    };
    let (r, s) = (*r, *s);
    if p.eval_at_zero().is_zero() {
        return Err(SubspaceError::ZeroConstantTerm);
    }
    let delta = nf.to_derivation().expect("constructible class");
    let field = delta.field().clone();
    let one = Coeff::one(field.clone());

    let mut forward_failures = Vec::new();
    for deg in 0..=d {
        for m in 0..=deg {
            let mono = Monomial::new(m, deg - m);
            let image = delta.apply_monomial(mono);
            if !membership_c_plus_ideal(&image, r, s, p)? {
                forward_failures.push((mono, image));
            }
        }
    }

    let d_in = d + margin;
    let d_out = max_image_degree(&delta, d_in).max(d_in);
    let window = truncated_image(&delta, d_in, d_out);
    let c_pattern = MonomialPattern::C { r, s };

    let mut reverse_failures = Vec::new();
    for deg in 1..=d {
        for m in 0..=deg {
            let mono = Monomial::new(m, deg - m);
            if !c_pattern.contains(&mono) {
                continue;
            }
            let poly = BiPoly::from_monomial(mono, one.clone());
            if !window.contains(&poly) {
                reverse_failures.push(poly);
            }
        }
    }
    let ideal_gen = p.inflate(r).shift_up(s).to_bipoly();
    if let Some(gen_deg) = ideal_gen.total_degree() {
        for m in 0..=d.saturating_sub(gen_deg) {
            for n in 0..=(d.saturating_sub(gen_deg) - m) {
                let target =
                    ideal_gen.mul(&BiPoly::from_monomial(Monomial::new(m, n), one.clone()));
                if !window.contains(&target) {
                    reverse_failures.push(target);
                }
            }
        }
    }

    Ok(ImageIdentityReport {
        degree_bound: d,
        margin,
        forward_failures,
        reverse_failures,
    })
}

/// Violations of the `B1` transport window: for every `B1`-monomial up to
/// degree `d`, the product `x * delta(x^m y^n)` must divide exactly by
/// `y^s p(y^r)` with quotient supported back inside `B1`.
pub fn b1_transport_check(nf: &NormalForm, d: u64) -> Result<Vec<Monomial>, SubspaceError> {
    let NormalForm::TriangularTorsion { r, s, p, .. } = nf else {
        return Err(SubspaceError::WrongCase {
            expected: "torsion triangular (case 4)",
        });
    };
    let (r, s) = (*r, *s);
    let delta = nf.to_derivation().expect("constructible class");
    let field = delta.field().clone();
    let b1 = MonomialPattern::B1 { r, s };
    let p_inflated = p.inflate(r);
    let mut violations = Vec::new();
    for deg in 1..=d {
        for m in 1..=deg {
            let mono = Monomial::new(m, deg - m);
            if !b1.contains(&mono) {
                continue;
            }
            let image = delta.apply_monomial(mono);
            let shifted = image.mul(&BiPoly::var_x(field.clone()));
            let quotient = shifted
                .exact_div_y_power(s)
                .and_then(|t| t.exact_div_y(&p_inflated));
            match quotient {
                Some(q) if support_membership(&q, &b1) => {}
                _ => violations.push(mono),
            }
        }
    }
    Ok(violations)
}

/// The truncation of the closed-form image for the classes where one is
/// known: the diagonal class keeps the monomials whose eigenvalue is not
/// one; the free triangular class fills the whole augmentation ideal; the
/// collapse-scale class depends on the torsion of `lambda`.
pub fn expected_image_for_case(nf: &NormalForm, d: u64) -> Result<TruncatedSpace, SubspaceError> {
    let mut space = TruncatedSpace::new(Some(d));
    match nf {
        NormalForm::Diagonal { a, b } => {
            let field = a.spec().clone();
            for deg in 0..=d {
                for i in 0..=deg {
                    let j = deg - i;
                    if b.pow(i).mul(&a.pow(j)).is_one() {
                        continue;
                    }
                    space.insert(&BiPoly::from_monomial(
                        Monomial::new(i, j),
                        Coeff::one(field.clone()),
                    ));
                }
            }
            Ok(space)
        }
        NormalForm::TriangularFree { b, .. } => {
            let field = b.spec().clone();
            insert_augmentation_ideal(&mut space, &field, d);
            Ok(space)
        }
        NormalForm::CollapseScale { lambda, .. } => {
            let field = lambda.spec().clone();
            match lambda.multiplicative_order() {
                None => {
                    insert_augmentation_ideal(&mut space, &field, d);
                }
                Some(r) => {
                    for deg in 1..=d {
                        for i in 0..=deg {
                            let j = deg - i;
                            if j >= 1 || i % r != 0 {
                                space.insert(&BiPoly::from_monomial(
                                    Monomial::new(i, j),
                                    Coeff::one(field.clone()),
                                ));
                            }
                        }
                    }
                }
            }
            Ok(space)
        }
        other => Err(SubspaceError::UnsupportedCase {
            case: other.case_number(),
        }),
    }
}

fn insert_augmentation_ideal(space: &mut TruncatedSpace, field: &FieldSpec, d: u64) {
    for deg in 1..=d {
        for i in 0..=deg {
            space.insert(&BiPoly::from_monomial(
                Monomial::new(i, deg - i),
                Coeff::one(field.clone()),
            ));
        }
    }
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

    fn case4_running_example() -> NormalForm {
        NormalForm::triangular_torsion(
            2,
            1,
            Coeff::from_integer(-1, q()),
            parse_ypoly("y + 1", &q()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn pattern_membership_examples() {
        let c = MonomialPattern::C { r: 2, s: 1 };
        assert!(!c.contains(&Monomial::new(1, 1))); // 2 | 1*1 + 1
        assert!(c.contains(&Monomial::new(1, 0)));
        let b1 = MonomialPattern::B1 { r: 2, s: 1 };
        assert!(!b1.contains(&Monomial::new(0, 2))); // i = 0 excluded
        assert!(b1.contains(&Monomial::new(1, 1)));
    }

    #[test]
    fn pattern_partitions_monomials() {
        let c = MonomialPattern::C { r: 3, s: 2 };
        let b = MonomialPattern::B { r: 3, s: 2 };
        for i in 0..=20u64 {
            for j in 0..=(20 - i) {
                let m = Monomial::new(i, j);
                assert!(c.contains(&m) ^ b.contains(&m), "at {m}");
            }
        }
    }

    #[test]
    fn support_membership_examples() {
        let c = MonomialPattern::C { r: 2, s: 1 };
        assert!(support_membership(&p("x + x^2*y"), &c));
        assert!(support_membership(&p("0"), &c));
        assert!(!support_membership(&p("x*y"), &c));
    }

    #[test]
    fn solver_inverts_delta_on_the_pattern() {
        let nf = case4_running_example();
        let delta = nf.to_derivation().unwrap();
        let pattern = MonomialPattern::C { r: 2, s: 1 };
        let apply = |m: Monomial| delta.apply_monomial(m);

        let h = triangular_preimage_solve(apply, &pattern, &p("x"), 16).unwrap();
        assert_eq!(h, p("1/2*x + 1/4*y^3 + 1/4*y"));
        assert_eq!(delta.apply(&h), p("x"));

        let h = triangular_preimage_solve(apply, &pattern, &p("y"), 16).unwrap();
        assert_eq!(h, p("1/2*y"));

        let err =
            triangular_preimage_solve(apply, &pattern, &p("x*y"), 16).unwrap_err();
        assert_eq!(err, SolveError::TargetNotInPattern(Monomial::new(1, 1)));
    }

    #[test]
    fn solver_reports_degree_escape() {
        let nf = case4_running_example();
        let delta = nf.to_derivation().unwrap();
        let pattern = MonomialPattern::C { r: 2, s: 1 };
        let err = triangular_preimage_solve(
            |m| delta.apply_monomial(m),
            &pattern,
            &p("x"),
            2,
        )
        .unwrap_err();
        assert!(matches!(err, SolveError::DegreeBoundExceeded(_)));
    }

    #[test]
    fn solver_reports_broken_leading_terms() {
        // a map that annihilates y cannot be triangular on C
        let pattern = MonomialPattern::C { r: 2, s: 1 };
        let zero_on_y = |m: Monomial| {
            if m == Monomial::new(0, 1) {
                p("0")
            } else {
                BiPoly::from_monomial(m, Coeff::one(q()))
            }
        };
        let err =
            triangular_preimage_solve(zero_on_y, &pattern, &p("y"), 8).unwrap_err();
        assert_eq!(err, SolveError::LeadingTermCondition(Monomial::new(0, 1)));
    }

    #[test]
    fn truncated_image_of_diagonal_class() {
        let nf = NormalForm::diagonal(
            Coeff::from_integer(2, q()),
            Coeff::from_integer(3, q()),
        )
        .unwrap();
        let delta = nf.to_derivation().unwrap();
        let window = truncated_image(&delta, 2, 2);
        // the diagonal action hits every monomial of degree 1..2
        for mono in [
            Monomial::new(1, 0),
            Monomial::new(0, 1),
            Monomial::new(2, 0),
            Monomial::new(1, 1),
            Monomial::new(0, 2),
        ] {
            assert!(window.contains(&BiPoly::from_monomial(mono, Coeff::one(q()))));
        }
        assert_eq!(window.dim(), 5);
    }

    #[test]
    fn truncated_image_contains_x_via_combination() {
        let nf = case4_running_example();
        let delta = nf.to_derivation().unwrap();
        let window = truncated_image(&delta, 3, 3);
        assert!(window.contains(&p("x")));
    }

    #[test]
    fn truncated_image_of_identity_is_zero() {
        let delta = EDerivation::from_endomorphism(crate::endo::Endomorphism::identity(q()));
        let window = truncated_image(&delta, 4, 4);
        assert_eq!(window.dim(), 0);
    }

    #[test]
    fn truncated_image_is_monotone_in_input_degree() {
        let nf = case4_running_example();
        let delta = nf.to_derivation().unwrap();
        let small = truncated_image(&delta, 4, 4);
        let large = truncated_image(&delta, 6, 6);
        assert!(large.contains_space(&small));
    }

    #[test]
    fn membership_examples() {
        let p_param = parse_ypoly("y + 1", &q()).unwrap();
        assert!(membership_c_plus_ideal(&p("y^4 + y^2"), 2, 1, &p_param).unwrap());
        assert!(membership_c_plus_ideal(&p("x"), 2, 1, &p_param).unwrap());
        assert!(!membership_c_plus_ideal(&p("x^2"), 2, 1, &p_param).unwrap());
    }

    #[test]
    fn membership_degenerate_modulus_is_everything() {
        let one = parse_ypoly("1", &q()).unwrap();
        assert!(membership_c_plus_ideal(&p("x^2 + y"), 1, 0, &one).unwrap());
    }

    #[test]
    fn membership_validates_p() {
        let bad = parse_ypoly("2*y + 1", &q()).unwrap();
        assert_eq!(
            membership_c_plus_ideal(&p("x"), 2, 1, &bad).unwrap_err(),
            SubspaceError::NotMonic
        );
        let zero_const = parse_ypoly("y^2 + y", &q()).unwrap();
        assert_eq!(
            membership_c_plus_ideal(&p("x"), 2, 1, &zero_const).unwrap_err(),
            SubspaceError::ZeroConstantTerm
        );
    }

    #[test]
    fn image_identity_passes_on_small_window() {
        let report = verify_image_identity(&case4_running_example(), 4, 4).unwrap();
        assert!(report.passed(), "failures: {:?}", report.reverse_failures);
    }

    #[test]
    fn image_identity_catches_corruption() {
        // deliberately corrupt the derivation: phi fixes y, so delta(y) = 0
        // even though y is in C
        let phi = crate::endo::Endomorphism::new(p("-x + y^3 + y"), p("y"));
        let delta = EDerivation::from_endomorphism(phi);
        let window = truncated_image(&delta, 8, 8);
        assert!(!window.contains(&p("y")));
    }

    #[test]
    fn b1_transport_window_is_clean() {
        let violations = b1_transport_check(&case4_running_example(), 6).unwrap();
        assert!(violations.is_empty(), "violations: {violations:?}");
    }

    #[test]
    fn expected_image_diagonal_excludes_eigenvalue_one() {
        // a = 1/2, b = 2 makes x*y a fixed monomial
        let nf = NormalForm::diagonal(
            Coeff::from_rational(num_rational::BigRational::new(1.into(), 2.into()), q()),
            Coeff::from_integer(2, q()),
        )
        .unwrap();
        let expected = expected_image_for_case(&nf, 2).unwrap();
        assert!(!expected.contains(&p("x*y")));
        assert!(expected.contains(&p("x")));
        assert_eq!(expected.dim(), 4);
    }

    #[test]
    fn expected_image_collapse_scale_torsion() {
        let nf = NormalForm::collapse_scale(Coeff::from_integer(-1, q()), p("x")).unwrap();
        let expected = expected_image_for_case(&nf, 3).unwrap();
        assert!(expected.contains(&p("x")));
        assert!(expected.contains(&p("x^3")));
        assert!(!expected.contains(&p("x^2")));
        assert!(expected.contains(&p("x^2*y")));
    }
}
