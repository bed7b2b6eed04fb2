//! Exact arithmetic: arbitrary-precision rationals and their extension by
//! `-inf` / `+inf` sentinels.
//!
//! Everything downstream (slopes, table entries, chain comparisons) works on
//! these types; no floating point appears anywhere in the crate.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// `BigRational` maintains both invariants on construction, and its total
/// order agrees with the real-number order.
pub type Rational = BigRational;

/// Convenience constructor from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for integer values.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty token")]
    Empty,
    #[error("bad integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `a` or `a/b` with optional signs; the result is reduced.
pub fn parse_rational(token: &str) -> Result<Rational, ParseRationalError> {
    if token.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(s.to_owned()))
    };
    match token.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(token)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(token.to_owned()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Renders `r` with exactly `digits` fractional digits, truncated toward zero.
///
/// Used wherever the crate prints decimal approximations; the exact value is
/// always the `Rational` itself.
pub fn decimal_string(r: &Rational, digits: u32) -> String {
    let neg = r.is_negative();
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if neg { "-" } else { "" };
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part,
        width = digits as usize
    )
}

/// A rational extended with `-inf` and `+inf`.
///
/// The extension-table entries live here: the sentinels mark "no chain of
/// that length exists" and participate in comparisons and word sorting like
/// ordinary values (`NegInf < Finite(_) < PosInf`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedValue {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtendedValue {
    pub fn finite(r: Rational) -> Self {
        ExtendedValue::Finite(r)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedValue::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedValue::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rational> for ExtendedValue {
    fn from(r: Rational) -> Self {
        ExtendedValue::Finite(r)
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::NegInf => write!(f, "-inf"),
            ExtendedValue::PosInf => write!(f, "+inf"),
            ExtendedValue::Finite(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_integer_and_fraction() {
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("x"),
            Err(ParseRationalError::BadInteger(_))
        ));
        assert!(matches!(parse_rational(""), Err(ParseRationalError::Empty)));
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = parse_rational("-10/-4").unwrap();
        assert_eq!(r.numer(), &BigInt::from(5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn extended_order() {
        use ExtendedValue::*;
        assert!(NegInf < Finite(rat_int(-1_000_000)));
        assert!(Finite(rat_int(1_000_000)) < PosInf);
        assert!(NegInf < PosInf);
        assert_eq!(Finite(rat(2, 4)), Finite(rat(1, 2)));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(31, 35), 10), "0.8857142857");
        assert_eq!(decimal_string(&rat(111, 126), 10), "0.8809523809");
        assert_eq!(decimal_string(&rat(-1, 2), 4), "-0.5000");
        assert_eq!(decimal_string(&rat_int(3), 2), "3.00");
    }

    /// Independent oracle: unreduced big-integer fraction arithmetic.
    /// Equality is tested by cross-multiplication, never by reduction, so
    /// this path shares nothing with `BigRational`'s normalization.
    #[derive(Clone, Debug)]
    struct RawFrac {
        num: BigInt,
        den: BigInt,
    }

    impl RawFrac {
        fn new(n: i64, d: i64) -> Self {
            RawFrac {
                num: BigInt::from(n),
                den: BigInt::from(d),
            }
        }
        fn add(&self, o: &Self) -> Self {
            RawFrac {
                num: &self.num * &o.den + &o.num * &self.den,
                den: &self.den * &o.den,
            }
        }
        fn mul(&self, o: &Self) -> Self {
            RawFrac {
                num: &self.num * &o.num,
                den: &self.den * &o.den,
            }
        }
        fn cmp(&self, o: &Self) -> Ordering {
            // normalize sign onto the numerator before cross-multiplying
            let (a, b) = if self.den.is_negative() {
                (-&self.num, -&self.den)
            } else {
                (self.num.clone(), self.den.clone())
            };
            let (c, d) = if o.den.is_negative() {
                (-&o.num, -&o.den)
            } else {
                (o.num.clone(), o.den.clone())
            };
            (a * d).cmp(&(c * b))
        }
        fn eq_rational(&self, r: &Rational) -> bool {
            let lhs = &self.num * r.denom();
            let rhs = r.numer() * &self.den;
            lhs == rhs
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn arithmetic_matches_big_integer_cross_check(
            an in -1000i64..1000, ad in 1i64..1000,
            bn in -1000i64..1000, bd in 1i64..1000,
        ) {
            let x = rat(an, ad);
            let y = rat(bn, bd);
            let rx = RawFrac::new(an, ad);
            let ry = RawFrac::new(bn, bd);

            prop_assert!(rx.add(&ry).eq_rational(&(&x + &y)));
            prop_assert!(rx.mul(&ry).eq_rational(&(&x * &y)));
            prop_assert_eq!(rx.cmp(&ry), x.cmp(&y));
        }
    }
}
