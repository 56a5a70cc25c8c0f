//! Seeded random inputs for numeric checks: unit-scale rationals, polynomial
//! paths and integration intervals.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::expr::Rational;
use crate::numeric::Path;

pub const MAX_DENOMINATOR: i64 = 16;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `1 ≤ d ≤ 16` and `|n| ≤ d`, so the value lies in `[-1, 1]`.
pub fn unit_rational(rng: &mut impl Rng) -> Rational {
    let d = rng.gen_range(1..=MAX_DENOMINATOR);
    let n = rng.gen_range(-d..=d);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Like [`unit_rational`] but never zero.
pub fn nonzero_unit_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = unit_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn unit_f64(rng: &mut impl Rng) -> f64 {
    use num_traits::ToPrimitive;
    unit_rational(rng).to_f64().expect("small rational")
}

/// Unprimed path of exactly `degree` (coefficients in `[-1, 1]`).
pub fn path(rng: &mut impl Rng, degree: usize) -> Path {
    let coeffs = (0..=degree).map(|_| unit_f64(rng)).collect();
    Path::unprimed(coeffs).expect("bounded degree and finite coefficients")
}

/// `t0 < t1` inside `[-1, 1]`.
pub fn interval(rng: &mut impl Rng) -> (f64, f64) {
    loop {
        let a = unit_f64(rng);
        let b = unit_f64(rng);
        if a != b {
            return (a.min(b), a.max(b));
        }
    }
}
