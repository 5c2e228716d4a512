//! Dense univariate polynomials over a [`Ring`].

use crate::arith::ring::{format_term, join_terms, Field, Ring};
use crate::error::{Error, Result};

/// Coefficients `c_0, …, c_n` (index = degree), trimmed so that the last
/// coefficient is nonzero. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// The polynomial ring `R[X]` over a base ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<R: Ring> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base, var: "X".into() }
    }

    pub fn with_var(base: R, var: impl Into<String>) -> Self {
        PolyRing { base, var: var.into() }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, degree: usize) -> Poly<R::Elem> {
        let mut coeffs = vec![self.base.zero(); degree];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    /// Coefficient `i`, or zero beyond the degree.
    pub fn coeff(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_monic(&self, p: &Poly<R::Elem>) -> bool {
        p.leading().is_some_and(|c| self.base.is_one(c))
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Horner evaluation in the base ring.
    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        p.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    /// Horner evaluation in another ring, after mapping each coefficient.
    pub fn eval_in<S: Ring>(
        &self,
        p: &Poly<R::Elem>,
        target: &S,
        x: &S::Elem,
        embed: impl Fn(&R::Elem) -> S::Elem,
    ) -> S::Elem {
        p.coeffs
            .iter()
            .rev()
            .fold(target.zero(), |acc, c| target.add(&target.mul(&acc, x), &embed(c)))
    }

    pub fn map<S: Ring>(
        &self,
        p: &Poly<R::Elem>,
        target: &PolyRing<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(c, &self.base.from_int(i as i64)))
                .collect(),
        )
    }

    /// `p(q(X))`.
    pub fn compose(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Poly<R::Elem> {
        p.coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, q), &self.constant(c.clone())))
    }

    /// Division with remainder by a monic polynomial; works over any ring.
    pub fn div_rem_monic(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        if !self.is_monic(b) {
            return Err(Error::NotMonic);
        }
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((self.zero(), a.clone()));
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = rem[i].clone();
            if self.base.is_zero(&c) {
                continue;
            }
            quot[i - db] = c.clone();
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&c, bj);
                rem[i - db + j] = self.base.sub(&rem[i - db + j], &t);
            }
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem_monic(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        self.div_rem_monic(a, b).map(|(_, r)| r)
    }

    /// `X^k` factored out of `p`: returns `(k, p / X^k)` with nonzero constant
    /// term. Errors on the zero polynomial.
    pub fn split_power(&self, p: &Poly<R::Elem>) -> Result<(usize, Poly<R::Elem>)> {
        let k = p
            .coeffs
            .iter()
            .position(|c| !self.base.is_zero(c))
            .ok_or(Error::ZeroPolynomial)?;
        Ok((k, self.from_coeffs(p.coeffs[k..].to_vec())))
    }
}

impl<F: Field> PolyRing<F> {
    pub fn div_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let lc = b.leading().ok_or(Error::DivisionByZero)?;
        let inv = self.base.inv(lc).ok_or(Error::DivisionByZero)?;
        let monic = self.scale(b, &inv);
        let (q, r) = self.div_rem_monic(a, &monic)?;
        Ok((self.scale(&q, &inv), r))
    }

    pub fn make_monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.leading().and_then(|c| self.base.inv(c)) {
            Some(inv) => self.scale(p, &inv),
            None => p.clone(),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return self.one();
        }
        let (mut a, mut b) = (self.make_monic(a), self.make_monic(b));
        while !b.is_zero() {
            let (_, r) = self.div_rem_monic(&a, &b).expect("monic divisor");
            a = b;
            b = self.make_monic(&r);
        }
        a
    }

    /// Exact quotient `a / b`; errors if the division leaves a remainder.
    pub fn exact_div(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (q, r) = self.div_rem(a, b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistent("inexact polynomial division".into()))
        }
    }

    /// `Res_X(f, g) = lc(f)^deg(g) · ∏_{f(ρ)=0} g(ρ)`, by the Euclidean
    /// recurrence `Res(f, g) = lc(f)^(deg g - deg r) · Res(f, r)` with
    /// `r = g mod f`.
    pub fn resultant(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> F::Elem {
        let k = &self.base;
        let (mut f, mut g) = (f.clone(), g.clone());
        let mut acc = k.one();
        loop {
            let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
                // One side is zero.
                return k.zero();
            };
            if df == 0 {
                return k.mul(&acc, &k.pow(&f.coeffs[0], dg as u32));
            }
            if dg == 0 {
                return k.mul(&acc, &k.pow(&g.coeffs[0], df as u32));
            }
            if dg >= df {
                let (_, r) = self.div_rem(&g, &f).expect("nonzero divisor");
                let Some(dr) = r.degree() else {
                    return k.zero();
                };
                let lc = f.leading().expect("nonzero").clone();
                acc = k.mul(&acc, &k.pow(&lc, (dg - dr) as u32));
                g = r;
            } else {
                // Res(f, g) = (-1)^(df·dg) Res(g, f)
                if (df * dg) % 2 == 1 {
                    acc = k.neg(&acc);
                }
                std::mem::swap(&mut f, &mut g);
            }
        }
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.from_coeffs(a.coeffs.iter().map(|c| self.base.neg(c)).collect())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.base.add(&coeffs[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(coeffs)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|c| self.base.is_zero(c))
    }

    fn display(&self, a: &Self::Elem) -> String {
        let terms = a.coeffs.iter().enumerate().rev().filter(|(_, c)| !self.base.is_zero(c)).map(
            |(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => self.var.clone(),
                    _ => format!("{}^{}", self.var, i),
                };
                let text = self.base.display(c);
                if mono.is_empty() || !needs_parens(&text) {
                    format_term(&text, &mono)
                } else {
                    (false, format!("({text})*{mono}"))
                }
            },
        );
        join_terms(terms)
    }
}

/// Whether a coefficient text must be bracketed before `*X^i`.
fn needs_parens(text: &str) -> bool {
    if is_plain_number(text) {
        return false;
    }
    let body = text.strip_prefix('-').unwrap_or(text);
    body.contains(['+', '-', '/', '('])
}

/// True for coefficient texts such as `12`, `-3` or `3/4` that need no parentheses.
pub(crate) fn is_plain_number(text: &str) -> bool {
    let body = text.strip_prefix('-').unwrap_or(text);
    !body.is_empty() && body.split('/').count() <= 2 && body.split('/').all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{Integers, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn zpoly(c: &[i64]) -> Poly<BigInt> {
        PolyRing::new(Integers).from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn qpoly(c: &[i64]) -> Poly<BigRational> {
        PolyRing::new(Rationals).from_coeffs(c.iter().map(|&x| Rationals.from_int(x)).collect())
    }

    #[test]
    fn trims_and_reports_degree() {
        let p = zpoly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(zpoly(&[0, 0]).is_zero());
    }

    #[test]
    fn monic_division_over_integers() {
        let zx = PolyRing::new(Integers);
        let a = zpoly(&[5, 0, 1, 1]);
        let b = zpoly(&[5, 1, 1]);
        let (q, r) = zx.div_rem_monic(&a, &b).unwrap();
        assert_eq!(zx.add(&zx.mul(&q, &b), &r), a);
        assert!(r.degree() < b.degree());
        assert_eq!(zx.div_rem_monic(&a, &zpoly(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn resultant_examples() {
        let qx = PolyRing::new(Rationals);
        // Res(X^2+X+5, X) = 5
        assert_eq!(qx.resultant(&qpoly(&[5, 1, 1]), &qpoly(&[0, 1])), Rationals.from_int(5));
        // Res(X - c, g) = g(c)
        let g = qpoly(&[3, -2, 1, 4]);
        assert_eq!(qx.resultant(&qpoly(&[-7, 1]), &g), qx.eval(&g, &Rationals.from_int(7)));
        // shared factor
        let f = qx.mul(&qpoly(&[1, 1]), &qpoly(&[2, 0, 1]));
        let h = qx.mul(&qpoly(&[1, 1]), &qpoly(&[-3, 1]));
        assert_eq!(qx.resultant(&f, &h), Rationals.zero());
    }

    #[test]
    fn gcd_and_split_power() {
        let qx = PolyRing::new(Rationals);
        let f = qx.mul(&qpoly(&[1, 1]), &qpoly(&[2, 0, 1]));
        let h = qx.mul(&qpoly(&[2, 2]), &qpoly(&[-3, 1]));
        assert_eq!(qx.gcd(&f, &h), qpoly(&[1, 1]));
        assert_eq!(qx.split_power(&qpoly(&[0, 0, 1])).unwrap(), (2, qpoly(&[1])));
        assert_eq!(qx.split_power(&qpoly(&[5, -1, 1])).unwrap(), (0, qpoly(&[5, -1, 1])));
        assert_eq!(qx.split_power(&qx.zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_form() {
        let zx = PolyRing::new(Integers);
        assert_eq!(zx.display(&zpoly(&[5, -1, 1])), "X^2-X+5");
        assert_eq!(zx.display(&zpoly(&[])), "0");
    }
}
