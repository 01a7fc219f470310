use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational numbers: arbitrary-precision numerator, positive
/// denominator, always reduced. `num_rational::BigRational` maintains exactly
/// those invariants.
pub type Rational = BigRational;

/// Parses `"3"`, `"-3"`, `"2/5"` or `"-2/5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator `{s}`")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational denominator `{s}`")))?,
        None => BigInt::from(1),
    };
    if d == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical rendering: `p/q` with positive `q`, or just `p` when `q = 1`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        let r = parse_rational("4/-6").unwrap();
        assert_eq!(rational_to_string(&r), "-2/3");
        assert_eq!(rational_to_string(&parse_rational("7").unwrap()), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }
}
