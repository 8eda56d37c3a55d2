//! Exact Kirchhoff-index machinery: the spectral formula, the closed forms
//! (general, folded k = 1, top k = n-1), the increment in k with its
//! monotonicity certificate, bounds, and the normalized asymptotic ratio.
//! Everything returns exact rationals; rounding happens only in `decimal`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combin::binom;
use crate::error::{Error, Result};
use crate::group::EnhancedParams;
use crate::spectrum::{gamma, Spectrum, SpectrumKind};
use crate::ExactRational;

fn rat(num: BigInt, den: BigInt) -> ExactRational {
    ExactRational::new(num, den)
}

fn int(value: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(value.into())
}

fn pow2(exp: u32) -> BigInt {
    BigInt::one() << exp
}

/// Kirchhoff index from a Laplacian spectrum: |V| times the sum of
/// multiplicity/eigenvalue over the nonzero eigenvalues. Requires a
/// connected graph, i.e. eigenvalue 0 with multiplicity exactly 1.
pub fn kf_from_laplacian(spectrum: &Spectrum) -> Result<ExactRational> {
    if spectrum.kind() != SpectrumKind::Laplacian {
        return Err(Error::WrongSpectrumKind {
            expected: "laplacian",
            got: spectrum.kind().as_str(),
        });
    }
    match spectrum.multiplicity(0) {
        Some(m) if m.is_one() => {}
        Some(m) => {
            return Err(Error::DisconnectedSpectrum {
                zero_multiplicity: m.to_string(),
            })
        }
        None => {
            return Err(Error::DisconnectedSpectrum {
                zero_multiplicity: "0".to_string(),
            })
        }
    }
    let reciprocal_sum: ExactRational = spectrum
        .entries()
        .iter()
        .filter(|(value, _)| *value != 0)
        .map(|(value, mult)| rat(BigInt::from(mult.clone()), BigInt::from(*value)))
        .sum();
    Ok(int(BigInt::from(spectrum.vertex_count())) * reciprocal_sum)
}

/// Closed-form Kirchhoff index of Q_{n,k}:
/// 2^{n-1} * sum over t of gamma_t/(t+1), where t runs to n when n and k
/// share parity and to n-1 otherwise (the top multiplicity vanishes there).
pub fn kf_closed_form(params: EnhancedParams) -> ExactRational {
    let n = params.n();
    let t_max = if n % 2 == params.k() % 2 { n } else { n - 1 };
    let mut sum = ExactRational::zero();
    for t in 0..=t_max {
        sum += rat(BigInt::from(gamma(params, t)), BigInt::from(t + 1));
    }
    int(pow2(n - 1)) * sum
}

/// Both sides of the reciprocal-binomial identity
///   sum_{i=1..n} C(n+1, 2i)/(2i)  =  sum_{s=1..n} (2^s - 1)/(s+1),
/// returned as (left, right); their equality is the tested property.
pub fn even_binomial_reciprocal_sides(n: u32) -> (ExactRational, ExactRational) {
    debug_assert!(n >= 1);
    let left: ExactRational = (1..=n)
        .map(|i| {
            rat(
                BigInt::from(binom(n as i64 + 1, 2 * i as i64)),
                BigInt::from(2 * i),
            )
        })
        .sum();
    let right: ExactRational = (1..=n).map(|s| rat(pow2(s) - 1, BigInt::from(s + 1))).sum();
    (left, right)
}

/// Kirchhoff index of the folded hypercube Q_{n,1}:
/// 2^{n-1} * sum_{t=1..n} (2^t - 1)/(t+1).
pub fn kf_folded(n: u32) -> ExactRational {
    assert!(n >= 2, "folded hypercube needs n >= 2");
    let sum: ExactRational = (1..=n).map(|t| rat(pow2(t) - 1, BigInt::from(t + 1))).sum();
    int(pow2(n - 1)) * sum
}

/// Kirchhoff index of Q_{n,n-1}:
/// 2^{n-1} * (sum_{t=1..n-2} (2^t - 1)/t + 3((n-2)2^{n-1} + 1)/(n(n-1))),
/// with the empty sum at n = 2 evaluating to 0.
pub fn kf_k_max(n: u32) -> ExactRational {
    assert!(n >= 2, "the top parameter k = n-1 needs n >= 2");
    let head: ExactRational = (1..=n.saturating_sub(2))
        .map(|t| rat(pow2(t) - 1, BigInt::from(t)))
        .sum();
    let tail = rat(
        BigInt::from(3u32) * (BigInt::from(n - 2) * pow2(n - 1) + 1),
        BigInt::from(n) * BigInt::from(n - 1),
    );
    int(pow2(n - 1)) * (head + tail)
}

/// The increment Kf(Q_{n,k+1}) - Kf(Q_{n,k}), computed both as a difference
/// of closed forms and via the unified double sum
///   2^{n-1} sum_t 1/(t+1) sum_j [C(n-k+1,2j)C(k-1,t-2j)
///                                 - C(n-k+1,2j-1)C(k-1,t-2j+1)],
/// asserting the two routes agree. Defined for 1 <= k <= n-2.
pub fn delta_k(n: u32, k: u32) -> Result<ExactRational> {
    if n < 3 || k < 1 || k > n - 2 {
        return Err(Error::InvalidIncrementParams { n, k });
    }
    let by_difference =
        kf_closed_form(EnhancedParams::new(n, k + 1)?) - kf_closed_form(EnhancedParams::new(n, k)?);

    let (ni, ki) = (n as i64, k as i64);
    let j_max = (ni - ki + 2) / 2;
    let mut sum = ExactRational::zero();
    for t in 0..=ni {
        let mut inner = BigInt::zero();
        for j in 0..=j_max {
            inner += BigInt::from(binom(ni - ki + 1, 2 * j) * binom(ki - 1, t - 2 * j));
            inner -= BigInt::from(binom(ni - ki + 1, 2 * j - 1) * binom(ki - 1, t - 2 * j + 1));
        }
        sum += rat(inner, BigInt::from(t + 1));
    }
    let by_double_sum = int(pow2(n - 1)) * sum;

    assert_eq!(
        by_difference, by_double_sum,
        "increment routes disagree at n={n}, k={k}"
    );
    Ok(by_difference)
}

/// Evidence that Kf(Q_{n,k}) increases in k: the bridge quantity F(n,k)
/// evaluated two independent ways (a double sum, and the exact integral of
/// u(1-u)^{n-k}(1+u)^{k-1} over [0,1] by polynomial expansion), plus the
/// increment itself when it exists (k <= n-2; at k = n-1 the family has no
/// successor, so `delta` is None).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityCertificate {
    pub n: u32,
    pub k: u32,
    pub f_sum: ExactRational,
    pub f_integral: ExactRational,
    pub delta: Option<ExactRational>,
}

/// Builds the certificate for (n, k), 1 <= k <= n-1, and enforces its
/// invariants: f_sum = f_integral >= 0, and delta > 0 when present.
pub fn monotonicity_certificate(n: u32, k: u32) -> Result<MonotonicityCertificate> {
    EnhancedParams::new(n, k)?;
    let (ni, ki) = (n as i64, k as i64);

    // F(n,k) as the double sum.
    let j_max = (ni - ki) / 2 + 1;
    let mut f_sum = ExactRational::zero();
    for t in 0..=ni {
        let mut inner = BigInt::zero();
        for j in 0..=j_max {
            inner += BigInt::from(binom(ni - ki, 2 * j) * binom(ki - 1, t - 2 * j - 1));
            inner -= BigInt::from(binom(ni - ki, 2 * j - 1) * binom(ki - 1, t - 2 * j));
        }
        f_sum += rat(inner, BigInt::from(t + 1));
    }

    // F(n,k) as the exact integral of u(1-u)^{n-k}(1+u)^{k-1} over [0,1]:
    // the coefficient of u^{1+i+j} is (-1)^i C(n-k,i) C(k-1,j), and each
    // monomial integrates to 1/(i+j+2).
    let mut f_integral = ExactRational::zero();
    for i in 0..=(ni - ki) {
        for j in 0..=(ki - 1) {
            let coeff = BigInt::from(binom(ni - ki, i) * binom(ki - 1, j));
            let signed = if i % 2 == 0 { coeff } else { -coeff };
            f_integral += rat(signed, BigInt::from(i + j + 2));
        }
    }

    let delta = if k <= n - 2 {
        Some(delta_k(n, k)?)
    } else {
        None
    };

    assert_eq!(
        f_sum, f_integral,
        "certificate routes disagree at n={n}, k={k}"
    );
    assert!(
        !f_sum.is_negative(),
        "certificate value negative at n={n}, k={k}"
    );
    if let Some(d) = &delta {
        assert!(d.is_positive(), "increment not positive at n={n}, k={k}");
    }

    Ok(MonotonicityCertificate {
        n,
        k,
        f_sum,
        f_integral,
        delta,
    })
}

/// Row bounds: Kf(Q_{n,1}) <= Kf(Q_{n,k}) <= Kf(Q_{n,n-1}) for every k,
/// returned as (lower, upper) full Kirchhoff values.
pub fn bounds(n: u32) -> (ExactRational, ExactRational) {
    assert!(n >= 2);
    (kf_folded(n), kf_k_max(n))
}

/// The normalized ratio Kf(Q_{n,k}) * (n+1) / 2^{2n}, which tends to 1.
pub fn limit_ratio(params: EnhancedParams) -> ExactRational {
    let n = params.n();
    kf_closed_form(params) * rat(BigInt::from(n + 1), pow2(2 * n))
}

/// The sandwich sequences (A_n, B_n): the normalized ratios of the two
/// extreme closed forms. A_n <= limit_ratio(n, k) <= B_n for every k, and
/// both tend to 1.
pub fn asymptotic_sequences(n: u32) -> (ExactRational, ExactRational) {
    assert!(n >= 3, "the upper sequence needs n >= 3");
    let scale = rat(BigInt::from(n + 1), pow2(2 * n));
    (kf_folded(n) * scale.clone(), kf_k_max(n) * scale)
}
