//! Parser for the canonical rational-function string form. Accepts integer
//! coefficients, `^` powers, explicit `*`, and parenthesized factored
//! denominators, e.g. `(1+2*q)/(3*(1-q)*(1-q^2))`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{MultiPoly, Var};
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

pub fn parse_rational_function(input: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        src: input,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at position {} in `{}`",
            self.pos, self.src
        ))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        self.skip_ws();
        let mut neg = false;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                }
                '-' => {
                    neg = !neg;
                    self.bump();
                }
                _ => break,
            }
            self.skip_ws();
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some('/') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.div(&f)?;
                }
                // Implicit multiplication for adjacent parenthesized factors.
                Some('(') => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction> {
        self.skip_ws();
        let mut neg = false;
        while matches!(self.peek(), Some('-') | Some('+')) {
            if self.bump() == Some('-') {
                neg = !neg;
            }
            self.skip_ws();
        }
        let mut base = self.base()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let mut negexp = false;
            if self.peek() == Some('-') {
                self.bump();
                negexp = true;
            }
            let e = self.integer()?;
            let e: i32 = e
                .to_string()
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            base = base.pow(if negexp { -e } else { e })?;
        }
        Ok(if neg { base.neg() } else { base })
    }

    fn base(&mut self) -> Result<RationalFunction> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::from_rat(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.bump();
                let v = Var::from_name(&c.to_string())
                    .ok_or_else(|| self.err("unknown variable (expected q, p, z or u)"))?;
                Ok(RationalFunction::from_poly(MultiPoly::var(v)))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reprint_canonical() {
        let r = parse_rational_function("(1+2*q)/(3-3*q-3*q^2+3*q^3)").unwrap();
        assert_eq!(r.to_string(), "(1+2*q)/(3-3*q-3*q^2+3*q^3)");
    }

    #[test]
    fn parse_factored_denominator() {
        let a = parse_rational_function("(1+2*q)/(3*(1-q)*(1-q^2))").unwrap();
        let b = parse_rational_function("(1+2*q)/(3-3*q-3*q^2+3*q^3)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_implicit_products_and_signs() {
        let a = parse_rational_function("(1-q)(1+q)").unwrap();
        let b = parse_rational_function("1 - q^2").unwrap();
        assert_eq!(a, b);
        let c = parse_rational_function("-q/(1-q)").unwrap();
        assert_eq!(c, parse_rational_function("q/(q-1)").unwrap());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational_function("1 +").is_err());
        assert!(parse_rational_function("x").is_err());
        assert!(parse_rational_function("(1").is_err());
        assert!(parse_rational_function("1/0").is_err());
    }

    #[test]
    fn parse_negative_exponent() {
        let a = parse_rational_function("(1-q)^-2").unwrap();
        let b = parse_rational_function("1/((1-q)*(1-q))").unwrap();
        assert_eq!(a, b);
    }
}
