//! Polynomial strings: integer (or `p/q`) coefficients, named variables,
//! `+`, `-`, `*`, `^` with nonnegative integer exponents, and parentheses.
//!
//! ```text
//! "x^2+x+w"   "-2*u*w + 3/2*u^2"   "(u+w)^2"
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial with rational coefficients, keyed by exponent vector.
pub type Terms = BTreeMap<Vec<u32>, BigRational>;

/// Parses `input` over the given variables.
pub fn parse_polynomial(input: &str, vars: &[&str]) -> Result<Terms> {
    let mut parser = Parser { chars: input.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, vars };
    let terms = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(terms)
}

/// Parses a univariate polynomial in `var` into dense coefficients (index = degree).
pub fn parse_univariate(input: &str, var: &str) -> Result<Vec<BigRational>> {
    let terms = parse_polynomial(input, &[var])?;
    let degree = terms.keys().map(|e| e[0] as usize).max().unwrap_or(0);
    let mut dense = vec![BigRational::zero(); degree + 1];
    for (e, c) in terms {
        dense[e[0] as usize] = c;
    }
    Ok(dense)
}

/// Parses a rational number `a` or `a/b`.
pub fn parse_rational(input: &str) -> Result<BigRational> {
    let dense = parse_univariate(input, "_")?;
    if dense.len() > 1 {
        return Err(Error::Parse(format!("`{input}` is not a number")));
    }
    Ok(dense.into_iter().next().unwrap_or_else(BigRational::zero))
}

/// Splits `(n)/(d)` at its top-level slash.
pub fn split_fraction(text: &str) -> Option<(&str, &str)> {
    let text = text.trim();
    let mut depth = 0i32;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 && text[i + 1..].trim_start().starts_with('(') => {
                return Some((&text[..i], &text[i + 1..]));
            }
            _ => {}
        }
    }
    None
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at position {} in `{text}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn constant(&self, c: BigRational) -> Terms {
        let mut t = Terms::new();
        if !c.is_zero() {
            t.insert(vec![0; self.vars.len()], c);
        }
        t
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut acc = Terms::new();
        let mut sign = BigRational::one();
        if let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            if c == '-' {
                sign = -sign;
            }
        }
        loop {
            let term = self.term()?;
            add_into(&mut acc, &term, &sign);
            match self.peek() {
                Some('+') => sign = BigRational::one(),
                Some('-') => sign = -BigRational::one(),
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Terms> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.integer()?;
        let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
        let mut acc = self.constant(BigRational::one());
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Terms> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some('/') && self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(self.constant(value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                let mut e = vec![0; self.vars.len()];
                e[idx] = 1;
                Ok(Terms::from([(e, BigRational::one())]))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

fn add_into(acc: &mut Terms, rhs: &Terms, scale: &BigRational) {
    for (e, c) in rhs {
        let entry = acc.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c * scale;
        if entry.is_zero() {
            acc.remove(e);
        }
    }
}

fn mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, &Terms::from([(e, ca * cb)]), &BigRational::one());
        }
    }
    out
}
