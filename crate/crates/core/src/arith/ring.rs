//! Ring and field structures.
//!
//! Elements carry no context; every operation goes through the structure
//! value (`ring.add(&a, &b)`), the way prime fields with a runtime modulus
//! need it.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A commutative ring with unit.
///
/// `PartialEq` on elements is syntactic. [`Ring::is_zero`] and
/// [`Ring::equal`] are the semantic tests, which matters for quotient rings
/// whose elements have many representatives.
pub trait Ring: Clone + Debug {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Human-readable form, parseable back by [`crate::parse`] where the
    /// ring has a string grammar.
    fn display(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.equal(a, &self.one())
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }
}

/// A discrete field: zero-testing is decidable and nonzero elements invert.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of a rational number; `None` when the denominator vanishes
    /// (characteristic p dividing it).
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// The coefficient fields of the catalogue: `Q` and prime fields `F_p`.
pub trait CoefficientField: Field + PartialEq {
    /// `"Q"` or `"F<p>"`.
    fn name(&self) -> String;

    /// All elements, when the field is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// A random element; for `Q`, an integer of absolute value at most `height`.
    fn random<R: rand::Rng>(&self, rng: &mut R, height: i64) -> Self::Elem;
}

/// The integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn display(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// The rationals, as reduced fractions with positive denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
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

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
}

impl CoefficientField for Rationals {
    fn name(&self) -> String {
        "Q".into()
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn random<R: rand::Rng>(&self, rng: &mut R, height: i64) -> BigRational {
        self.from_int(rng.gen_range(-height..=height))
    }
}

/// The prime field `F_p`, elements kept in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `None` unless `p` is a prime below 2^31.
    pub fn new(p: u64) -> Option<Self> {
        (p < (1 << 31) && is_prime(p)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn display(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, (self.p - 2) as u32))
    }

    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let num = self.reduce(q.numer());
        let den = self.reduce(q.denom());
        self.div(&num, &den)
    }
}

impl CoefficientField for PrimeField {
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn random<R: rand::Rng>(&self, rng: &mut R, _height: i64) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// Formats `c·m` for a term with monomial text `m` (empty for constants),
/// returning the sign separately so callers can join terms with `+`/`-`.
pub(crate) fn format_term(coeff: &str, monomial: &str) -> (bool, String) {
    let (negative, magnitude) = match coeff.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, coeff.to_string()),
    };
    let body = if monomial.is_empty() {
        magnitude
    } else if magnitude == "1" {
        monomial.to_string()
    } else {
        format!("{magnitude}*{monomial}")
    };
    (negative, body)
}

/// Joins signed terms into `a + b - c` form (no spaces), `"0"` when empty.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in terms {
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push('-'),
            (false, false) => out.push('+'),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `|n|` as a `u64` exponent helper for `BigInt` powers.
pub(crate) fn big_pow(base: &BigInt, e: u32) -> BigInt {
    num_traits::pow(base.clone(), e as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.from_int(-1), 6);
        assert_eq!(f.from_rational(&BigRational::new(1.into(), 2.into())), Some(4));
        assert_eq!(f.from_rational(&BigRational::new(1.into(), 7.into())), None);
        assert!(PrimeField::new(9).is_none());
    }

    #[test]
    fn term_formatting() {
        let terms = vec![format_term("-1", "u"), format_term("3/2", "w^2"), format_term("-5", "")];
        assert_eq!(join_terms(terms), "-u+3/2*w^2-5");
        assert_eq!(join_terms(Vec::new()), "0");
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Integers.pow(&BigInt::from(3), 5), BigInt::from(243));
        assert_eq!(Integers.pow(&BigInt::from(3), 0), BigInt::from(1));
    }
}
