//! Seeded random polynomial generation for probes and test suites.
//!
//! Every consumer of randomness in the library goes through a ChaCha
//! stream cipher seeded explicitly, so identical seeds reproduce identical
//! samples (and therefore identical reports) on every platform.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Coeff, FieldSpec};
use crate::poly::{BiPoly, Monomial};

/// The deterministic generator used throughout.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational coefficient with numerator in `[-max_num, max_num]`
/// (never zero) and denominator in `[1, max_den]`.
pub fn random_coeff(rng: &mut ChaCha8Rng, field: &FieldSpec, max_num: i64, max_den: i64) -> Coeff {
    let mut numer = 0i64;
    while numer == 0 {
        numer = rng.gen_range(-max_num..=max_num);
    }
    let denom = rng.gen_range(1..=max_den);
    Coeff::from_rational(
        BigRational::new(BigInt::from(numer), BigInt::from(denom)),
        field.clone(),
    )
}

/// A random polynomial with at most `max_terms` terms of total degree at
/// most `max_degree`. May be zero when colliding monomials cancel.
pub fn random_bipoly(
    rng: &mut ChaCha8Rng,
    field: &FieldSpec,
    max_degree: u64,
    max_terms: usize,
) -> BiPoly {
    let terms = rng.gen_range(1..=max_terms);
    let mut out = BiPoly::zero(field.clone());
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree);
        let i = rng.gen_range(0..=deg);
        let mono = Monomial::new(i, deg - i);
        let coeff = random_coeff(rng, field, 4, 2);
        out = out.add(&BiPoly::from_monomial(mono, coeff));
    }
    out
}

/// Like [`random_bipoly`] but guaranteed nonzero.
pub fn random_nonzero_bipoly(
    rng: &mut ChaCha8Rng,
    field: &FieldSpec,
    max_degree: u64,
    max_terms: usize,
) -> BiPoly {
    loop {
        let f = random_bipoly(rng, field, max_degree, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_samples() {
        let field = FieldSpec::rationals();
        let mut a = seeded_rng(7);
        let mut b = seeded_rng(7);
        for _ in 0..10 {
            assert_eq!(
                random_bipoly(&mut a, &field, 6, 8),
                random_bipoly(&mut b, &field, 6, 8)
            );
        }
    }

    #[test]
    fn respects_degree_bound() {
        let field = FieldSpec::rationals();
        let mut rng = seeded_rng(3);
        for _ in 0..50 {
            let f = random_bipoly(&mut rng, &field, 5, 6);
            if let Some(d) = f.total_degree() {
                assert!(d <= 5);
            }
        }
    }
}
