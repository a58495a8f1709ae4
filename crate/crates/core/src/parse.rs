//! A small recursive-descent parser for polynomial-like expressions.
//!
//! Grammar (whitespace is insignificant except between two symbols, where
//! it means multiplication):
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' exp)?
//! atom   := integer | symbol | '(' expr ')' | '{' expr '}'
//! symbol := letter ('_' (digits | '{' digits '}'))?
//! exp    := digits | '{' digits '}'
//! ```
//!
//! The same grammar reads polynomials (`t_1 t_14 + s`), cells of the printed
//! order matrices (`{-t^{3} a_{8}}`) and algebra relations (`w_3w_1 - t_2w_2`).
//! What a symbol means is decided by an [`Interp`].

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Gives meaning to the leaves of a parsed expression.  Multiplication is
/// applied left to right, so noncommutative targets are handled correctly.
pub trait Interp {
    type Value: Clone;
    fn int(&self, c: BigInt) -> Self::Value;
    fn symbol(&self, name: &str, index: Option<u32>) -> std::result::Result<Self::Value, String>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
}

pub fn parse_expr<I: Interp>(src: &str, interp: &I) -> Result<I::Value> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, interp };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a, I> {
    src: &'a [u8],
    pos: usize,
    interp: &'a I,
}

impl<I: Interp> Parser<'_, I> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<I::Value> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.interp.neg(acc);
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.interp.add(acc, t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.interp.add(acc, self.interp.neg(t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_alphanumeric() || c == b'(' || c == b'{'
    }

    fn term(&mut self) -> Result<I::Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.interp.mul(acc, f);
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.factor()?;
                    acc = self.interp.mul(acc, f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<I::Value> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.braced_digits()?;
            if e == 0 {
                return Ok(self.interp.int(BigInt::from(1)));
            }
            let mut acc = base.clone();
            for _ in 1..e {
                acc = self.interp.mul(acc, base.clone());
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn braced_digits(&mut self) -> Result<u32> {
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let d = self.digits()?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        d.parse().map_err(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<I::Value> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let v: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(self.interp.int(v))
            }
            Some(open @ (b'(' | b'{')) => {
                self.pos += 1;
                let v = self.expr()?;
                let close = if open == b'(' { b')' } else { b'}' };
                if self.peek() != Some(close) {
                    return Err(self.err("unbalanced bracket"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                let mut index = None;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    index = Some(self.braced_digits()?);
                }
                let at = self.pos;
                self.interp.symbol(&name, index).map_err(|msg| Error::Parse { pos: at, msg })
            }
            _ => Err(self.err("expected a number, symbol or bracket")),
        }
    }
}
