use num_bigint::BigInt;

use super::{LaurentPoly, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Parses an expression over Q(q).
///
/// Accepts the canonical output (`2*q^3-q^-1`, `(q^2+1)/(q^4+1)`) and the
/// pretty forms: `Q`, q-integers `[k]`, bracket products `[2.3.4]`, implicit
/// multiplication (`3q^2[2.4]`) and parentheses.
pub fn parse_expr(src: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses an exact rational literal `a` or `a/b`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let s = src.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("not a rational literal: {s:?}"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

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

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = &acc * &d.recip()?;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, b'q' | b'Q' | b'[' | b'(') => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?;
            if neg && base.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RationalFunction::q_pow(1))
            }
            Some(b'Q') => {
                self.pos += 1;
                Ok(RationalFunction::big_q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut acc = LaurentPoly::one();
                loop {
                    let neg = self.eat(b'-');
                    let k = self.integer()? as i32;
                    acc = &acc * &LaurentPoly::qint(if neg { -k } else { k });
                    if !self.eat(b'.') {
                        break;
                    }
                }
                if !self.eat(b']') {
                    return Err(self.err("expected ']'"));
                }
                Ok(RationalFunction::from_poly(acc))
            }
            Some(c) if c.is_ascii_digit() => {
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                Ok(RationalFunction::from_rational(Rational::from_integer(n)))
            }
            _ => Err(self.err("expected a number, q, Q, [k] or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RationalFunction {
        parse_expr(s).unwrap()
    }

    #[test]
    fn canonical_round_trip() {
        for s in [
            "0",
            "1",
            "q^2+q^-2",
            "2*q+3/2-q^-1",
            "q-q^-1",
            "-q^-1",
            "(q^2+1)/(q^4+1)",
            "1/3*q/(q^2+1)",
        ] {
            assert_eq!(p(s).to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(p("[4]/[2]"), p("q^2+q^-2"));
        assert_eq!(p("Q"), p("q-q^-1"));
        assert_eq!(p("2Q"), p("2*Q"));
        assert_eq!(p("q^6[2.3]"), p("q^6*[2]*[3]"));
        assert_eq!(p("3q^2[2.4]"), &p("3*q^2") * &p("[2][4]"));
        assert_eq!(p("qQ"), p("q^2-1"));
        assert_eq!(p("-Q^2"), -p("Q^2"));
    }

    #[test]
    fn errors() {
        assert!(parse_expr("q^").is_err());
        assert!(parse_expr("(q").is_err());
        assert!(parse_expr("1/0").is_err());
        assert!(parse_expr("x").is_err());
        assert_eq!(
            parse_rational("-3/6").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
    }
}
