//! Edge-weight scalars.
//!
//! Everything that sums or compares weights is generic over [`Weight`].
//! Floating point types are supported for convenience; [`Exact`] keeps
//! decimal input exact so that optimum comparisons are not subject to
//! rounding.

use std::fmt::Debug;
use std::ops::{Add, Sub};

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

/// Exact rational weight. Decimal input such as `3.25` is stored as `13/4`.
pub type Exact = Ratio<i64>;

pub trait Weight:
    Clone
    + Debug
    + PartialOrd
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Parses a plain decimal literal (`12`, `0.5`, `-3.25`).
    fn parse_decimal(text: &str) -> Option<Self>;

    /// Renders the value as a decimal string; exact for [`Exact`] values
    /// whose denominator divides a power of ten.
    fn to_decimal(&self) -> String;

    /// Finite and nonnegative.
    fn is_admissible(&self) -> bool;

    fn from_u32(value: u32) -> Self;
}

macro_rules! float_weight {
    ($t:ty) => {
        impl Weight for $t {
            fn parse_decimal(text: &str) -> Option<Self> {
                text.trim().parse::<$t>().ok()
            }

            fn to_decimal(&self) -> String {
                format!("{}", self)
            }

            fn is_admissible(&self) -> bool {
                self.is_finite() && *self >= 0.0
            }

            fn from_u32(value: u32) -> Self {
                value as $t
            }
        }
    };
}

float_weight!(f32);
float_weight!(f64);

impl Weight for Exact {
    fn parse_decimal(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((p, q)) = text.split_once('/') {
            let (p, q): (i64, i64) = (p.parse().ok()?, q.parse().ok()?);
            return (q > 0).then(|| Ratio::new(p, q));
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) {
            return None;
        }
        let mut numer: i64 = 0;
        for b in int_part.bytes().chain(frac_part.bytes()) {
            numer = numer.checked_mul(10)?.checked_add(i64::from(b - b'0'))?;
        }
        let denom = 10i64.checked_pow(u32::try_from(frac_part.len()).ok()?)?;
        let numer = if negative { -numer } else { numer };
        Some(Ratio::new(numer, denom))
    }

    fn to_decimal(&self) -> String {
        let (numer, denom) = (*self.numer(), *self.denom());
        let mut rest = denom;
        let (mut twos, mut fives) = (0u32, 0u32);
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        let places = twos.max(fives);
        let scaled = 10i128
            .checked_pow(places)
            .map(|p| i128::from(numer) * (p / i128::from(denom)));
        match (rest, scaled) {
            (1, Some(scaled)) if places == 0 => scaled.to_string(),
            (1, Some(scaled)) => {
                let sign = if scaled < 0 { "-" } else { "" };
                let digits = format!("{:0>width$}", scaled.unsigned_abs(), width = places as usize + 1);
                let (int_digits, frac_digits) = digits.split_at(digits.len() - places as usize);
                format!("{sign}{int_digits}.{frac_digits}")
            }
            _ => format!("{numer}/{denom}"),
        }
    }

    fn is_admissible(&self) -> bool {
        *self.numer() >= 0
    }

    fn from_u32(value: u32) -> Self {
        Ratio::from_integer(i64::from(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_decimal_round_trip() {
        for text in ["0", "24", "3.5", "0.125", "17.05", "-2.5"] {
            let w = Exact::parse_decimal(text).unwrap();
            assert_eq!(w.to_decimal(), text);
        }
        assert_eq!(Exact::parse_decimal("3.50").unwrap(), Ratio::new(7, 2));
        assert_eq!(Exact::parse_decimal(".5").unwrap().to_decimal(), "0.5");
        assert_eq!(Exact::parse_decimal("1.").unwrap().to_decimal(), "1");
        assert_eq!(Ratio::new(1i64, 3).to_decimal(), "1/3");
        assert_eq!(Exact::parse_decimal("1/3"), Some(Ratio::new(1, 3)));
    }

    #[test]
    fn exact_rejects_garbage() {
        for text in ["", ".", "1e3", "abc", "1.2.3", "--1", "99999999999999999999", "1/0", "1/-2"] {
            assert!(Exact::parse_decimal(text).is_none(), "{text}");
        }
    }

    #[test]
    fn admissibility() {
        assert!(Exact::parse_decimal("0").unwrap().is_admissible());
        assert!(!Exact::parse_decimal("-0.5").unwrap().is_admissible());
        assert!(!f64::NAN.is_admissible());
        assert!(!f64::INFINITY.is_admissible());
        assert!(2.5f32.is_admissible());
        assert_eq!(f64::parse_decimal("2.5"), Some(2.5));
        assert_eq!(24.0f64.to_decimal(), "24");
    }
}
