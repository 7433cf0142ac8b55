//! Parser for the textual form of [`RingElem`]: integers, `q`, `p`, `+ - * /`,
//! `^` with integer (possibly negative) exponents, and parentheses.

use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;

use super::ratfunc::RingElem;
use crate::error::{Error, Result};

pub(crate) fn parse_ring_elem(s: &str) -> Result<RingElem> {
    let mut p = Parser { it: s.chars().peekable(), src: s };
    let v = p.expr()?;
    p.skip_ws();
    if p.it.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    it: Peekable<Chars<'a>>,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.it.peek().is_some_and(|c| c.is_whitespace()) {
            self.it.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.it.peek().copied()
    }

    fn expr(&mut self) -> Result<RingElem> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.it.next();
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.it.next();
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RingElem> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.it.next();
                    acc = acc * self.factor()?;
                }
                '/' => {
                    self.it.next();
                    let d = self.factor()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RingElem> {
        if self.peek() == Some('-') {
            self.it.next();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.it.next();
            let neg = if self.peek() == Some('-') {
                self.it.next();
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = i64::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RingElem> {
        match self.peek() {
            Some('q') => {
                self.it.next();
                Ok(RingElem::q())
            }
            Some('p') => {
                self.it.next();
                Ok(RingElem::p())
            }
            Some('(') => {
                self.it.next();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.it.next();
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RingElem::from_int(self.integer()?)),
            _ => Err(self.err("unexpected token")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(c) = self.it.peek().copied() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.it.next();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.err("expected integer"));
        }
        digits.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }
}
