//! Rational functions `k(t)` over a coefficient field, with the `t`-adic
//! valuation, and truncated power series `k[[t]] / t^N`.

use num_rational::BigRational;

use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ring::{CoefficientField, Field, Ring};
use crate::arith::valued::{Truncated, ValuedField};
use crate::arith::value::Value;
use crate::error::{Error, Result};
use crate::parse::{parse_univariate, split_fraction};

/// A reduced fraction `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E> RatFunc<E> {
    pub fn numerator(&self) -> &Poly<E> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<E> {
        &self.den
    }
}

/// `k(t)` with the `t`-adic valuation; residue field `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tadic<C: CoefficientField> {
    coeffs: C,
    polys: PolyRing<C>,
}

impl<C: CoefficientField> Tadic<C> {
    pub fn new(coeffs: C) -> Self {
        let polys = PolyRing::with_var(coeffs.clone(), "t");
        Tadic { coeffs, polys }
    }

    pub fn coefficients(&self) -> &C {
        &self.coeffs
    }

    pub fn polys(&self) -> &PolyRing<C> {
        &self.polys
    }

    /// The reduced fraction `num / den`; `None` if `den` is zero.
    pub fn fraction(&self, num: Poly<C::Elem>, den: Poly<C::Elem>) -> Option<RatFunc<C::Elem>> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(self.zero());
        }
        let g = self.polys.gcd(&num, &den);
        let num = self.polys.exact_div(&num, &g).expect("gcd divides");
        let den = self.polys.exact_div(&den, &g).expect("gcd divides");
        Some(self.normalised(num, den))
    }

    /// `num / den` for coprime inputs, scaled so that `den` is monic.
    fn normalised(&self, num: Poly<C::Elem>, den: Poly<C::Elem>) -> RatFunc<C::Elem> {
        let lc = self.coeffs.inv(den.leading().expect("nonzero")).expect("nonzero");
        if self.coeffs.is_one(&lc) {
            return RatFunc { num, den };
        }
        RatFunc { num: self.polys.scale(&num, &lc), den: self.polys.scale(&den, &lc) }
    }

    /// Parses `p` or `(p)/(q)` with `p, q` polynomials in `t`.
    pub fn parse(&self, text: &str) -> Result<RatFunc<C::Elem>> {
        let poly = |s: &str| -> Result<Poly<C::Elem>> {
            let dense = parse_univariate(s, "t")?;
            let coeffs = dense
                .iter()
                .map(|c| {
                    self.coeffs
                        .from_rational(c)
                        .ok_or_else(|| Error::Parse(format!("coefficient {c} is undefined over {}", self.coeffs.name())))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(self.polys.from_coeffs(coeffs))
        };
        match split_fraction(text) {
            Some((n, d)) => self.fraction(poly(n)?, poly(d)?).ok_or(Error::DivisionByZero),
            None => Ok(self.from_poly(poly(text)?)),
        }
    }

    pub fn from_poly(&self, p: Poly<C::Elem>) -> RatFunc<C::Elem> {
        RatFunc { num: p, den: self.polys.one() }
    }

    pub fn from_coeff(&self, c: C::Elem) -> RatFunc<C::Elem> {
        self.from_poly(self.polys.constant(c))
    }

    /// `t`-adic order of a nonzero polynomial.
    fn order(&self, p: &Poly<C::Elem>) -> Option<usize> {
        p.coeffs().iter().position(|c| !self.coeffs.is_zero(c))
    }

    pub fn series(&self, coeffs: Vec<C::Elem>) -> Series<C> {
        Series { field: self.coeffs.clone(), coeffs }
    }
}

impl<C: CoefficientField> Ring for Tadic<C> {
    type Elem = RatFunc<C::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc { num: self.polys.zero(), den: self.polys.one() }
    }

    fn one(&self) -> Self::Elem {
        self.from_poly(self.polys.one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_poly(self.polys.from_int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let pr = &self.polys;
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        // with g = gcd(den_a, den_b), only g can share factors with the sum
        let g = pr.gcd(&a.den, &b.den);
        let a_rest = pr.exact_div(&a.den, &g).expect("gcd divides");
        let b_rest = pr.exact_div(&b.den, &g).expect("gcd divides");
        let num = pr.add(&pr.mul(&a.num, &b_rest), &pr.mul(&b.num, &a_rest));
        if num.is_zero() {
            return self.zero();
        }
        let h = pr.gcd(&num, &g);
        let num = pr.exact_div(&num, &h).expect("gcd divides");
        let den = pr.mul(&a_rest, &pr.exact_div(&b.den, &h).expect("gcd divides"));
        self.normalised(num, den)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc { num: self.polys.neg(&a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let pr = &self.polys;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        let g1 = pr.gcd(&a.num, &b.den);
        let g2 = pr.gcd(&b.num, &a.den);
        let div = |p: &Poly<C::Elem>, g: &Poly<C::Elem>| pr.exact_div(p, g).expect("gcd divides");
        let num = pr.mul(&div(&a.num, &g1), &div(&b.num, &g2));
        let den = pr.mul(&div(&a.den, &g2), &div(&b.den, &g1));
        self.normalised(num, den)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let pr = &self.polys;
        RatFunc { num: pr.pow(&a.num, e), den: pr.pow(&a.den, e) }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn display(&self, a: &Self::Elem) -> String {
        let num = self.polys.display(&a.num);
        if self.polys.is_one(&a.den) {
            return num;
        }
        let den = self.polys.display(&a.den);
        let wrap = |s: String| if s.len() > 1 && !crate::arith::poly::is_plain_number(&s) { format!("({s})") } else { s };
        format!("{}/{}", wrap(num), wrap(den))
    }
}

impl<C: CoefficientField> Field for Tadic<C> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.fraction(a.den.clone(), a.num.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem> {
        self.coeffs.from_rational(q).map(|c| self.from_coeff(c))
    }
}

impl<C: CoefficientField> ValuedField for Tadic<C> {
    type Trunc = Series<C>;

    fn valuation(&self, a: &Self::Elem) -> Value {
        match (self.order(&a.num), self.order(&a.den)) {
            (Some(n), Some(d)) => Value::Finite(n as i64 - d as i64),
            _ => Value::Infinity,
        }
    }

    fn uniformiser(&self) -> Self::Elem {
        self.from_poly(self.polys.x())
    }

    fn truncate(&self, a: &Self::Elem, precision: u32) -> Result<Series<C>> {
        let n = precision as usize;
        let Some(on) = self.order(&a.num) else {
            return Ok(self.series(vec![self.coeffs.zero(); n]));
        };
        let od = self.order(&a.den).expect("denominator is nonzero");
        if on < od {
            return Err(Error::OutsideValuationRing(self.display(a)));
        }
        let shift = on - od;
        let pad = |p: &Poly<C::Elem>, from: usize| -> Vec<C::Elem> {
            (0..n).map(|i| self.polys.coeff(p, from + i)).collect()
        };
        let num = self.series(pad(&a.num, on));
        let den = self.series(pad(&a.den, od));
        let unit = num.mul(&den.inv().expect("unit denominator"));
        let mut coeffs = vec![self.coeffs.zero(); shift.min(n)];
        coeffs.extend(unit.coeffs.into_iter().take(n.saturating_sub(shift)));
        Ok(self.series(coeffs))
    }

    fn lift(&self, t: &Series<C>) -> Self::Elem {
        self.from_poly(self.polys.from_coeffs(t.coeffs.clone()))
    }

    fn residue_representatives(&self) -> Option<Vec<Self::Elem>> {
        self.coeffs.elements().map(|els| els.into_iter().map(|c| self.from_coeff(c)).collect())
    }

    fn describe(&self) -> String {
        format!("{}(t)", self.coeffs.name())
    }

    fn display_truncated(&self, t: &Series<C>) -> String {
        let p = self.polys.from_coeffs(t.coeffs.clone());
        format!("{} mod t^{}", self.polys.display(&p), t.precision())
    }
}

/// A power series known modulo `t^N`, `N = coeffs.len()`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C: CoefficientField> {
    field: C,
    coeffs: Vec<C::Elem>,
}

impl<C: CoefficientField> Series<C> {
    pub fn coeffs(&self) -> &[C::Elem] {
        &self.coeffs
    }

    fn make(&self, coeffs: Vec<C::Elem>) -> Self {
        Series { field: self.field.clone(), coeffs }
    }
}

impl<C: CoefficientField> Truncated for Series<C> {
    fn precision(&self) -> u32 {
        self.coeffs.len() as u32
    }

    fn add(&self, other: &Self) -> Self {
        let k = &self.field;
        self.make(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| k.add(a, b)).collect())
    }

    fn neg(&self) -> Self {
        self.make(self.coeffs.iter().map(|a| self.field.neg(a)).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![k.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        self.make(out)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    fn valuation(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c)).map(|i| i as u32)
    }

    fn inv(&self) -> Result<Self> {
        let k = &self.field;
        let Some(c0) = self.coeffs.first() else {
            return Ok(self.clone());
        };
        let inv0 = k.inv(c0).ok_or(Error::DivisionByNonUnit)?;
        let n = self.coeffs.len();
        let mut out: Vec<C::Elem> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for j in 1..n {
            let s = (1..=j).fold(k.zero(), |acc, i| k.add(&acc, &k.mul(&self.coeffs[i], &out[j - i])));
            out.push(k.neg(&k.mul(&s, &inv0)));
        }
        Ok(self.make(out))
    }

    fn with_precision(&self, precision: u32) -> Self {
        self.make(self.coeffs.iter().take(precision as usize).cloned().collect())
    }

    fn shift_down(&self, s: u32) -> Result<Self> {
        if self.valuation().is_some_and(|v| v < s) {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(self.make(self.coeffs.iter().skip(s as usize).cloned().collect()))
    }

    fn from_int_like(&self, n: i64) -> Self {
        let k = &self.field;
        let mut coeffs = vec![k.zero(); self.coeffs.len()];
        if let Some(c) = coeffs.first_mut() {
            *c = k.from_int(n);
        }
        self.make(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{PrimeField, Rationals};

    fn qt() -> Tadic<Rationals> {
        Tadic::new(Rationals)
    }

    fn poly(k: &Tadic<Rationals>, c: &[i64]) -> RatFunc<BigRational> {
        k.from_poly(k.polys().from_coeffs(c.iter().map(|&x| Rationals.from_int(x)).collect()))
    }

    #[test]
    fn canonical_fractions() {
        let k = qt();
        // (t^2 - 1) / (2t - 2) = (t + 1) / 2
        let a = k.div(&poly(&k, &[-1, 0, 1]), &poly(&k, &[-2, 2])).unwrap();
        let b = k.mul(&poly(&k, &[1, 1]), &k.from_rational(&BigRational::new(1.into(), 2.into())).unwrap());
        assert_eq!(a, b);
        assert_eq!(k.display(&a), "1/2*t+1/2");
    }

    #[test]
    fn tadic_valuation_and_truncation() {
        let k = qt();
        let t = k.uniformiser();
        let a = k.div(&k.mul(&t, &t), &poly(&k, &[1, -1])).unwrap(); // t^2 / (1 - t)
        assert_eq!(k.valuation(&a), Value::Finite(2));
        let s = k.truncate(&a, 5).unwrap();
        let one = Rationals.from_int(1);
        assert_eq!(s.coeffs(), &[Rationals.zero(), Rationals.zero(), one.clone(), one.clone(), one]);
        assert!(k.truncate(&k.inv(&t).unwrap(), 3).is_err());
    }

    #[test]
    fn series_inverse_over_prime_field() {
        let f3 = PrimeField::new(3).unwrap();
        let k = Tadic::new(f3);
        let s = k.series(vec![1, 1, 0, 0]);
        let inv = s.inv().unwrap();
        assert_eq!(inv.coeffs(), &[1, 2, 1, 2]);
        assert!(k.series(vec![0, 1]).inv().is_err());
    }
}
