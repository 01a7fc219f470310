use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::var::{VarFamily, VarId};
use crate::error::{Error, Result};

/// Parses polynomial expressions in the notation used by the paper tables and
/// the test suite: `t_0^2 t_1 - 2t_0`, `x0 x1 - 1`, `u0^-1`, `3/`-free integer
/// coefficients, juxtaposition or `*` for products.
///
/// A bare `-` always separates terms, so a negative variable index must be
/// written in braces (`x{-1}`).
pub fn parse_poly(input: &str) -> Result<LaurentPoly> {
    Parser {
        chars: input.chars().collect(),
        pos: 0,
        input,
    }
    .parse()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.fail("empty expression"));
        }
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.parse_term(sign)?;
            out = &out + &term;
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => return Err(self.fail(&format!("unexpected `{c}`"))),
            }
        }
    }

    fn parse_term(&mut self, sign: i32) -> Result<LaurentPoly> {
        let mut coeff = BigInt::from(sign);
        let mut mono = Monomial::one();
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    continue;
                }
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.parse_uint()?;
                    saw_factor = true;
                }
                Some(c) if VarFamily::from_letter(c).is_some() => {
                    let (v, e) = self.parse_var_power()?;
                    mono = mono.mul(&Monomial::var_pow(v, e));
                    saw_factor = true;
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(self.fail("expected a term"));
        }
        Ok(LaurentPoly::monomial(mono, coeff))
    }

    fn parse_var_power(&mut self) -> Result<(VarId, i32)> {
        let family = VarFamily::from_letter(self.peek().expect("caller checked")).unwrap();
        self.pos += 1;
        if self.peek() == Some('_') {
            self.pos += 1;
        }
        let index = if self.peek() == Some('{') {
            self.pos += 1;
            let neg = self.peek() == Some('-');
            if neg {
                self.pos += 1;
            }
            let n = self.parse_uint_i32()?;
            if self.peek() != Some('}') {
                return Err(self.fail("expected `}`"));
            }
            self.pos += 1;
            if neg {
                -n
            } else {
                n
            }
        } else {
            self.parse_uint_i32()?
        };
        let mut exp = 1i32;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = self.peek() == Some('-');
            if neg {
                self.pos += 1;
            }
            let n = self.parse_uint_i32()?;
            exp = if neg { -n } else { n };
        }
        Ok((VarId::new(family, index), exp))
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse::<BigInt>().expect("digits"))
    }

    fn parse_uint_i32(&mut self) -> Result<i32> {
        let n = self.parse_uint()?;
        i32::try_from(&n).map_err(|_| self.fail("index or exponent out of range"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn fail(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.input))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_style_juxtaposition() {
        let p = parse_poly("t_0t_1-1").unwrap();
        let q = parse_poly("t0 * t1 - 1").unwrap();
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "t0*t1 - 1");
    }

    #[test]
    fn coefficients_and_powers() {
        let p = parse_poly("t_0^2  t_1^2  - 3 t_0 t_1 + 1").unwrap();
        assert_eq!(p.to_string(), "t0^2*t1^2 - 3*t0*t1 + 1");
        let q = parse_poly("2t0").unwrap();
        assert_eq!(q.to_string(), "2*t0");
    }

    #[test]
    fn negative_exponents_and_braced_indices() {
        let p = parse_poly("u0^-1 + x{-2}^3").unwrap();
        assert_eq!(p.degree_in(VarId::x(-2)), 3);
        assert_eq!(p.degree_in(VarId::u(0)), -1);
    }

    #[test]
    fn malformed_table_entry_still_parses_as_juxtaposition() {
        // the published P_{5,1} cell: "t_0^5- 4t_0^33t_0" reads as t0^5 - 4*t0^33*t0
        let p = parse_poly("t_0^5- 4t_0^33t_0").unwrap();
        assert_eq!(p.to_string(), "-4*t0^34 + t0^5");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("t0 + ").is_err());
        assert!(parse_poly("y0").is_err());
        assert!(parse_poly("t0 ^^ 2").is_err());
    }
}
