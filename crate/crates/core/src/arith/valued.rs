//! Valuated discrete fields and their truncated completions.
//!
//! Two kinds of field are provided: the rationals with a `p`-adic valuation
//! ([`Padic`]) and rational functions over `Q` or `F_p` with the `t`-adic
//! valuation ([`crate::arith::ratfunc::Tadic`]). Henselian zeros live in the
//! completion, which is handled at finite precision through [`Truncated`]
//! elements: residues modulo `π^N` of elements of the valuation ring.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::ring::{big_pow, is_prime, Field, Rationals, Ring};
use crate::arith::value::Value;
use crate::error::{Error, Result};

/// An element of `V / π^N V` for a valuation ring `V` with uniformiser `π`.
///
/// Binary operations on operands of different precision return the smaller
/// precision.
pub trait Truncated: Clone + Debug + PartialEq {
    fn precision(&self) -> u32;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;

    /// Valuation of the held residue, `None` if it is zero at this precision.
    fn valuation(&self) -> Option<u32>;

    /// Inverse of a unit; elements of positive valuation are rejected.
    fn inv(&self) -> Result<Self>;

    /// Reduction to a lower precision.
    fn with_precision(&self, precision: u32) -> Self;

    /// Exact division by `π^s`; needs valuation at least `s` and loses `s`
    /// digits of precision.
    fn shift_down(&self, s: u32) -> Result<Self>;

    /// The integer `n` at the precision of `self`.
    fn from_int_like(&self, n: i64) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self / other` where `other` may have positive valuation `s`; the
    /// quotient is known to `precision - s` digits.
    fn div_with_loss(&self, other: &Self) -> Result<Self> {
        let s = other.valuation().ok_or(Error::DivisionByZero)?;
        if self.valuation().is_some_and(|v| v < s) {
            return Err(Error::DivisionByNonUnit);
        }
        let num = if self.is_zero() {
            self.with_precision(self.precision().saturating_sub(s))
        } else {
            self.shift_down(s)?
        };
        num.div(&other.shift_down(s)?)
    }

    fn zero_like(&self) -> Self {
        self.from_int_like(0)
    }

    fn one_like(&self) -> Self {
        self.from_int_like(1)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            base = base.mul(&base);
        }
        acc
    }
}

/// A discrete field `K` with a discrete valuation whose valuation ring `V`
/// is residually discrete.
pub trait ValuedField: Field {
    type Trunc: Truncated;

    fn valuation(&self, a: &Self::Elem) -> Value;

    /// An element of valuation 1.
    fn uniformiser(&self) -> Self::Elem;

    /// Image of `a` in `V / π^N`; errors when `v(a) < 0`.
    fn truncate(&self, a: &Self::Elem, precision: u32) -> Result<Self::Trunc>;

    /// The canonical representative in `K` of a truncated element.
    fn lift(&self, t: &Self::Trunc) -> Self::Elem;

    /// Representatives of the residue field, when it is finite.
    fn residue_representatives(&self) -> Option<Vec<Self::Elem>>;

    fn describe(&self) -> String;

    fn display_truncated(&self, t: &Self::Trunc) -> String;

    /// `π^e` for any integer `e`.
    fn uniformiser_power(&self, e: i64) -> Self::Elem {
        let p = self.pow(&self.uniformiser(), e.unsigned_abs() as u32);
        if e >= 0 {
            p
        } else {
            self.inv(&p).expect("uniformiser is nonzero")
        }
    }

    fn in_valuation_ring(&self, a: &Self::Elem) -> bool {
        self.valuation(a) >= Value::ZERO
    }

    /// The residue of `a ∈ V`, lifted back to `K`.
    fn residue(&self, a: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.lift(&self.truncate(a, 1)?))
    }
}

/// `Q` with the `p`-adic valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Padic {
    p: u64,
    prime: BigInt,
}

impl Padic {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Padic { p, prime: BigInt::from(p) })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `v_p(n)` for a nonzero integer.
    fn int_valuation(&self, n: &BigInt) -> (u32, BigInt) {
        let mut n = n.clone();
        let mut k = 0;
        loop {
            let (q, r) = n.div_rem(&self.prime);
            if !r.is_zero() {
                return (k, n);
            }
            n = q;
            k += 1;
        }
    }

    pub fn truncated(&self, value: BigInt, precision: u32) -> PadicTrunc {
        PadicTrunc::new(self.p, value, precision)
    }
}

impl Ring for Padic {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        Rationals.zero()
    }
    fn one(&self) -> BigRational {
        Rationals.one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        Rationals.from_int(n)
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn display(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl Field for Padic {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        Rationals.inv(a)
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
}

impl ValuedField for Padic {
    type Trunc = PadicTrunc;

    fn valuation(&self, a: &BigRational) -> Value {
        if a.is_zero() {
            return Value::Infinity;
        }
        let (vn, _) = self.int_valuation(a.numer());
        let (vd, _) = self.int_valuation(a.denom());
        Value::Finite(vn as i64 - vd as i64)
    }

    fn uniformiser(&self) -> BigRational {
        BigRational::from_integer(self.prime.clone())
    }

    fn truncate(&self, a: &BigRational, precision: u32) -> Result<PadicTrunc> {
        if a.is_zero() {
            return Ok(self.truncated(BigInt::zero(), precision));
        }
        let (vn, n0) = self.int_valuation(a.numer());
        let (vd, d0) = self.int_valuation(a.denom());
        if vn < vd {
            return Err(Error::OutsideValuationRing(a.to_string()));
        }
        let modulus = big_pow(&self.prime, precision);
        let shift = big_pow(&self.prime, vn - vd);
        let inv = mod_inverse(&d0, &modulus).expect("denominator prime to p");
        Ok(self.truncated((shift * n0 * inv).mod_floor(&modulus), precision))
    }

    fn lift(&self, t: &PadicTrunc) -> BigRational {
        BigRational::from_integer(t.value.clone())
    }

    fn residue_representatives(&self) -> Option<Vec<BigRational>> {
        Some((0..self.p as i64).map(|i| Rationals.from_int(i)).collect())
    }

    fn describe(&self) -> String {
        format!("Q_{}", self.p)
    }

    fn display_truncated(&self, t: &PadicTrunc) -> String {
        format!("{} mod {}", t.value, t.modulus())
    }
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// An element of `Z / p^N`, stored as its representative in `[0, p^N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicTrunc {
    p: u64,
    precision: u32,
    value: BigInt,
}

impl PadicTrunc {
    pub fn new(p: u64, value: BigInt, precision: u32) -> Self {
        let modulus = big_pow(&BigInt::from(p), precision);
        PadicTrunc { p, precision, value: value.mod_floor(&modulus) }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> BigInt {
        big_pow(&BigInt::from(self.p), self.precision)
    }

    fn with_value(&self, value: BigInt, precision: u32) -> Self {
        PadicTrunc::new(self.p, value, precision)
    }
}

impl Truncated for PadicTrunc {
    fn precision(&self) -> u32 {
        self.precision
    }

    fn add(&self, other: &Self) -> Self {
        self.with_value(&self.value + &other.value, self.precision.min(other.precision))
    }

    fn neg(&self) -> Self {
        self.with_value(-&self.value, self.precision)
    }

    fn mul(&self, other: &Self) -> Self {
        self.with_value(&self.value * &other.value, self.precision.min(other.precision))
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn valuation(&self) -> Option<u32> {
        if self.value.is_zero() {
            return None;
        }
        let p = BigInt::from(self.p);
        let mut n = self.value.clone();
        let mut k = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        Some(k)
    }

    fn inv(&self) -> Result<Self> {
        if self.precision > 0 && self.valuation() != Some(0) {
            return Err(Error::DivisionByNonUnit);
        }
        let inv = mod_inverse(&self.value, &self.modulus()).ok_or(Error::DivisionByNonUnit)?;
        Ok(self.with_value(inv, self.precision))
    }

    fn with_precision(&self, precision: u32) -> Self {
        self.with_value(self.value.clone(), precision.min(self.precision))
    }

    fn shift_down(&self, s: u32) -> Result<Self> {
        if self.valuation().is_some_and(|v| v < s) {
            return Err(Error::DivisionByNonUnit);
        }
        let shifted = &self.value / big_pow(&BigInt::from(self.p), s);
        Ok(self.with_value(shifted, self.precision.saturating_sub(s)))
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.with_value(BigInt::from(n), self.precision)
    }
}

/// Convenience: `p`-adic digits of a truncated element, least significant first.
pub fn padic_digits(t: &PadicTrunc) -> Vec<u64> {
    let p = BigInt::from(t.p);
    let mut n = t.value.clone();
    (0..t.precision)
        .map(|_| {
            let (q, r) = n.div_rem(&p);
            n = q;
            r.abs().to_u64().expect("digit fits")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn padic_valuation_examples() {
        let q5 = Padic::new(5).unwrap();
        assert_eq!(q5.valuation(&q(0, 1)), Value::Infinity);
        assert_eq!(q5.valuation(&q(1, 1)), Value::ZERO);
        assert_eq!(q5.valuation(&q(50, 1)), Value::Finite(2));
        assert_eq!(q5.valuation(&q(3, 125)), Value::Finite(-3));
        assert!(Padic::new(6).is_err());
    }

    #[test]
    fn truncation_of_geometric_series() {
        // 1/(1-5) = 1 + 5 + 25 + ... ≡ 31 mod 125
        let q5 = Padic::new(5).unwrap();
        let t = q5.truncate(&q(1, -4), 3).unwrap();
        assert_eq!(t.value(), &BigInt::from(31));
        assert_eq!(padic_digits(&t), vec![1, 1, 1]);
        let one = q5.truncate(&q(1, 1), 3).unwrap();
        assert_eq!(one.mul(&one), one);
        assert!(q5.truncate(&q(1, 5), 3).is_err());
    }

    #[test]
    fn division_rules() {
        let q5 = Padic::new(5).unwrap();
        let five = q5.truncated(5.into(), 4);
        let fifty = q5.truncated(50.into(), 4);
        assert_eq!(fifty.div(&five), Err(Error::DivisionByNonUnit));
        let ten = fifty.div_with_loss(&five).unwrap();
        assert_eq!(ten, q5.truncated(10.into(), 3));
        assert_eq!(q5.display_truncated(&q5.truncated(20.into(), 2)), "20 mod 25");
    }
}
