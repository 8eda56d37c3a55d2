//! Shared combinatorics kernel: the zero-extended binomial coefficient.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient C(a, b) with the zero-extension convention:
/// returns 0 whenever `b < 0`, `b > a`, or `a < 0`.
///
/// The zero extension is load-bearing: the closed-form multiplicity sums are
/// written with deliberately loose index ranges whose out-of-range terms must
/// vanish (e.g. C(0, t-2j+1) or C(k-1, t+1-2j) with a negative lower index).
pub fn binom(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    // Symmetry keeps the product loop short.
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut c = BigUint::one();
    for i in 0..b {
        // Exact at every step: the running value is C(a, i+1).
        c = c * (a - i) / (i + 1);
    }
    c
}
