//! Recursive-descent parser for cyclotomic literals.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*
//! term  := coeff ('*' root)? | root
//! coeff := int ('/' posint)?
//! root  := 'E(' posint ')' ('^' int)?
//! ```
//!
//! Whitespace is insignificant. Integers may carry a leading `-`.

use num_bigint::BigInt;

use super::{Cyclo, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn int(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let v = self.digits()?;
        Ok(if neg { -v } else { v })
    }

    fn small(&mut self, v: BigInt, at: usize, what: &str) -> Result<i64> {
        i64::try_from(v).map_err(|_| Error::parse(at, format!("{what} out of range")))
    }

    fn root(&mut self) -> Result<Cyclo> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let at = self.pos;
        let n = self.digits()?;
        let n = self.small(n, at, "order")?;
        if n == 0 || n > u32::MAX as i64 {
            return Err(Error::parse(at, "root order must be a positive 32-bit integer"));
        }
        self.expect(b')')?;
        let mut k = 1;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.int()?;
            k = self.small(e, at, "exponent")?;
        }
        Ok(Cyclo::zeta(n as u32, k))
    }

    fn term(&mut self, negate: bool) -> Result<Cyclo> {
        let value = if self.peek() == Some(b'E') {
            self.root()?
        } else {
            let num = self.int()?;
            let mut den = BigInt::from(1);
            if self.eat(b'/') {
                let at = self.pos;
                den = self.digits()?;
                if den == BigInt::from(0) {
                    return Err(Error::parse(at, "zero denominator"));
                }
            }
            let c = Cyclo::from_rational(Rational::from_bigints(num, den));
            if self.eat(b'*') {
                &c * &self.root()?
            } else {
                c
            }
        };
        Ok(if negate { -value } else { value })
    }

    fn expr(&mut self) -> Result<Cyclo> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            // A leading minus directly before a root negates the term; before
            // digits it is part of the integer.
            let save = self.pos;
            self.pos += 1;
            if self.peek() == Some(b'E') {
                negate = true;
            } else {
                self.pos = save;
            }
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term(negate)?;
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term(false)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc + &self.term(true)?;
                }
                Some(c) => return Err(self.error(format!("unexpected `{}`", c as char))),
            }
        }
    }
}

pub(crate) fn parse(text: &str) -> Result<Cyclo> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return Err(p.error("empty literal"));
    }
    p.expr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_grammar() {
        assert_eq!(parse("E(5)^3").unwrap(), Cyclo::zeta(5, 3));
        assert_eq!(parse(" -E(4) ").unwrap(), -Cyclo::i());
        assert_eq!(parse("E(8)^-1").unwrap(), Cyclo::zeta(8, 7));
        assert_eq!(parse("1 - 1").unwrap(), Cyclo::zero());
        assert_eq!(parse("-3/6").unwrap(), Cyclo::from_rational(Rational::new(-1, 2)));
        let x = parse("-1/2*E(3)^2 + E(7)").unwrap();
        let y = &Cyclo::zeta(3, 2).mul_rational(&Rational::new(-1, 2)) + &Cyclo::zeta(7, 1);
        assert_eq!(x, y);
        assert_eq!(parse("2 - -1").unwrap(), Cyclo::from_int(3));
    }

    #[test]
    fn reports_offsets() {
        match parse("E(4") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        match parse("1 + x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("E(0)").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("1/-2").is_err());
        assert!(parse("E(3) E(3)").is_err());
    }
}
