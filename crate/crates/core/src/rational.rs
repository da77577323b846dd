//! Exact rational scalars, the coefficient field for every symbolic construction.
//!
//! Values are arbitrary-precision fractions kept in lowest terms with a
//! positive denominator (zero is `0/1`). The text form is `"num/den"`, with
//! the `/den` part omitted when the denominator is one.

use std::str::FromStr;

use num::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational number.
///
/// `num::BigRational` already maintains the invariants we need: reduced
/// fraction, positive denominator, structural equality.
pub type Rat = num::BigRational;

/// Error parsing a rational from its `"num/den"` text form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}")]
pub struct ParseRatError {
    pub literal: String,
}

/// Shorthand constructor for small rationals.
///
/// # Panics
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand constructor for small integers.
pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses the `"num/den"` (or plain `"num"`) text form.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    Rat::from_str(text.trim()).map_err(|_| ParseRatError {
        literal: text.to_owned(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(0, 7), int(0));
    }

    #[test]
    fn text_round_trip() {
        for r in [rat(3, 4), rat(-1, 2), int(5), int(0), int(-12)] {
            assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn integer_omits_denominator() {
        assert_eq!(int(7).to_string(), "7");
        assert_eq!(rat(7, 2).to_string(), "7/2");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("").is_err());
    }
}
