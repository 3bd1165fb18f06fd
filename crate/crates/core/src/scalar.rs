//! Scalar abstraction for densities, thresholds and constant schedules.
//!
//! Every check in [`crate::regularity`] is generic over [`Scalar`]. The exact
//! rational types make threshold comparisons such as `d >= delta + eps`
//! meaningful at the boundary; the float types are for quick exploratory runs.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// Number type used by the regularity and constant checks.
pub trait Scalar:
    Clone + PartialOrd + fmt::Debug + fmt::Display + Num + Signed + Send + Sync
{
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_count(count: u64) -> Self {
        Self::from_ratio(count as i64, 1)
    }

    /// Largest integer not exceeding `self`.
    fn floor_int(&self) -> i64;

    fn to_f64(&self) -> f64;

    /// Smallest nonnegative integer strictly greater than `self * count`.
    ///
    /// This is the least set size `s` with `s > self * count`.
    fn min_size_above(&self, count: usize) -> usize {
        let scaled = self.clone() * Self::from_count(count as u64);
        (scaled.floor_int() + 1).max(0) as usize
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_ratio(num: i64, den: i64) -> Self {
                num as $t / den as $t
            }

            fn floor_int(&self) -> i64 {
                self.floor() as i64
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);

macro_rules! impl_ratio_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn from_ratio(num: i64, den: i64) -> Self {
                Ratio::new(num as $t, den as $t)
            }

            fn floor_int(&self) -> i64 {
                self.floor().to_integer() as i64
            }

            fn to_f64(&self) -> f64 {
                ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
            }
        }
    )*};
}

impl_ratio_scalar!(i64, i128);

/// Parse `"1/10"`, `"0.1"`, `"1e-5"` or `"9e-6"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Ratio<i128>> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i128 = num.trim().parse().ok()?;
        let den: i128 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: i128 = if digits.is_empty() { 0 } else { digits.parse().ok()? };
    if negative {
        num = -num;
    }
    let scale = exponent - frac_part.len() as i32;
    if scale.unsigned_abs() > 30 {
        return None;
    }
    let pow = 10i128.checked_pow(scale.unsigned_abs())?;
    Some(if scale >= 0 {
        Ratio::from_integer(num.checked_mul(pow)?)
    } else {
        Ratio::new(num, pow)
    })
}
