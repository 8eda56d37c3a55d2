//! Presentation-layer decimal rendering of exact rationals.
//!
//! All arithmetic in this crate is exact; these helpers round only at the
//! display boundary. Rounding is half-up (ties away from zero), output is
//! plain decimal notation (never scientific), and rendered strings are never
//! fed back into arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ExactRational;

fn two() -> BigUint {
    BigUint::from(2u32)
}

/// |x| rounded half-up at `decimals` places, as an unsigned digit string of
/// the scaled integer (no decimal point yet).
fn scaled_round_abs(x: &ExactRational, decimals: usize) -> BigUint {
    let num = x.numer().abs().to_biguint().expect("abs is non-negative");
    let den = x.denom().to_biguint().expect("denominator is positive");
    let scale = BigUint::from(10u32).pow(decimals as u32);
    // floor((2*num*scale + den) / (2*den)) rounds half-up.
    (two() * num * scale + &den) / (two() * den)
}

/// Renders x rounded half-up to exactly `decimals` digits after the point
/// (a plain integer string when `decimals` is 0).
pub fn decimal_fixed(x: &ExactRational, decimals: usize) -> String {
    let q = scaled_round_abs(x, decimals);
    let digits = q.to_string();
    let body = if decimals == 0 {
        digits
    } else {
        let digits = if digits.len() <= decimals {
            format!("{}{}", "0".repeat(decimals + 1 - digits.len()), digits)
        } else {
            digits
        };
        let split = digits.len() - decimals;
        format!("{}.{}", &digits[..split], &digits[split..])
    };
    if x.is_negative() && !q.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders x rounded half-up to `sig` significant digits, in plain decimal
/// notation. Positions below the rounding point render as zeros (so a
/// six-digit value at 5 significant digits keeps its magnitude: "106870").
pub fn decimal_significant(x: &ExactRational, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if x.is_zero() {
        return "0".to_string();
    }
    let num = x.numer().abs().to_biguint().expect("abs is non-negative");
    let den = x.denom().to_biguint().expect("denominator is positive");
    let int_part = &num / &den;
    if int_part.is_zero() {
        // |x| < 1: skip the leading zeros to the first significant digit.
        let mut leading = 0usize;
        let mut scaled = num;
        while scaled < den {
            scaled *= 10u32;
            leading += 1;
        }
        decimal_fixed(x, sig + leading - 1)
    } else {
        let int_digits = int_part.to_string().len();
        if int_digits <= sig {
            decimal_fixed(x, sig - int_digits)
        } else {
            // Round away the excess integer digits, then restore magnitude.
            let drop = int_digits - sig;
            let scaled_den = den * BigUint::from(10u32).pow(drop as u32);
            let q = (two() * num + &scaled_den) / (two() * scaled_den);
            let body = format!("{}{}", q, "0".repeat(drop));
            if x.is_negative() {
                format!("-{body}")
            } else {
                body
            }
        }
    }
}

/// Default display rendering: exact integers print bare; everything else is
/// rounded to 6 significant digits with trailing fractional zeros trimmed.
pub fn display_default(x: &ExactRational) -> String {
    if x.denom().is_one() {
        return x.numer().to_string();
    }
    let s = decimal_significant(x, 6);
    if s.contains('.') {
        let s = s.trim_end_matches('0').trim_end_matches('.');
        s.to_string()
    } else {
        s
    }
}

/// Wire form of an exact rational: numerator/denominator as decimal strings
/// plus the default display rendering alongside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

impl From<&ExactRational> for RationalRepr {
    fn from(x: &ExactRational) -> Self {
        Self {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
            decimal: display_default(x),
        }
    }
}

impl RationalRepr {
    /// Parses the num/den fields back to the exact value (the decimal field
    /// is display-only and ignored).
    pub fn to_rational(&self) -> Option<ExactRational> {
        let num = self.num.parse().ok()?;
        let den: num_bigint::BigInt = self.den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(ExactRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fixed_rounding_half_up() {
        assert_eq!(decimal_fixed(&rat(258, 5), 1), "51.6");
        assert_eq!(decimal_fixed(&rat(258, 5), 0), "52"); // 51.6 -> 52
        assert_eq!(decimal_fixed(&rat(5, 2), 0), "3"); // tie goes up
        assert_eq!(decimal_fixed(&rat(-5, 2), 0), "-3"); // ties away from zero
        assert_eq!(decimal_fixed(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal_fixed(&rat(2, 3), 2), "0.67");
        assert_eq!(decimal_fixed(&rat(-1, 800), 2), "0.00"); // no negative zero
        assert_eq!(decimal_fixed(&rat(3, 1), 0), "3");
        assert_eq!(decimal_fixed(&rat(3, 1), 2), "3.00");
    }

    #[test]
    fn table_style_roundings() {
        // The published-precision roundings exercised by the reference table.
        assert_eq!(decimal_fixed(&rat(148128, 5), 0), "29626"); // 29625.6
        assert_eq!(decimal_fixed(&rat(49160, 21), 1), "2341.0");
        assert_eq!(decimal_fixed(&rat(548, 3), 1), "182.7");
        assert_eq!(decimal_significant(&rat(534336, 5), 5), "106870"); // 106867.2
    }

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(decimal_significant(&rat(258, 5), 6), "51.6000");
        assert_eq!(decimal_significant(&rat(548, 3), 6), "182.667");
        assert_eq!(decimal_significant(&rat(1, 3), 3), "0.333");
        assert_eq!(decimal_significant(&rat(1, 800), 2), "0.0013"); // 0.00125 ties up
        assert_eq!(decimal_significant(&rat(9_996, 10), 3), "1000"); // carry widens
        assert_eq!(decimal_significant(&rat(-534336, 5), 5), "-106870");
    }

    #[test]
    fn default_display() {
        assert_eq!(display_default(&rat(3, 1)), "3");
        assert_eq!(display_default(&rat(258, 5)), "51.6");
        assert_eq!(display_default(&rat(548, 3)), "182.667");
        assert_eq!(display_default(&rat(-7, 2)), "-3.5");
        // Integers keep all their digits even beyond 6 significant.
        assert_eq!(display_default(&rat(12345678, 1)), "12345678");
        // Large non-integers round at 6 significant digits, no point shown.
        assert_eq!(display_default(&rat(24691357, 2)), "12345700");
    }

    #[test]
    fn repr_round_trip() {
        let x = rat(-258, 5);
        let r = RationalRepr::from(&x);
        assert_eq!(r.num, "-258");
        assert_eq!(r.den, "5");
        assert_eq!(r.decimal, "-51.6");
        assert_eq!(r.to_rational().unwrap(), x);
    }
}
