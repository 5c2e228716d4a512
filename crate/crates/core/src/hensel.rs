//! One henselisation step on the valuation side.
//!
//! A root of `g` attached to an isolated slope of its Newton polygon is
//! written `α = B·(1+μ)` with `B = -b_k/b_{k+1}` and `μ` the henselian zero
//! of a Nagata polynomial `f`. When `μ ≠ 0` it is also `c/β` for the special
//! zero `β` of a special polynomial `t`, which yields a Möbius form
//! `α = (aβ+b)/(cβ+d)`.
//!
//! Zeros are computed in the truncated completion by Newton iteration. The
//! extension `K[α]` of a Nagata polynomial carries the valuation
//! `Q ↦ v(Q(α))`, decided exactly through resultant bounds.

use std::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ring::Ring;
use crate::arith::valued::{Truncated, ValuedField};
use crate::arith::value::Value;
use crate::error::{Error, Result};
use crate::newton::compute_polygon;

/// Newton steps allowed before giving up; quadratic convergence needs about
/// `log2 N` of them.
const MAX_NEWTON_STEPS: usize = 64;

fn poly_ring<K: ValuedField>(field: &K) -> PolyRing<K> {
    PolyRing::with_var(field.clone(), "X")
}

fn check_integral<K: ValuedField>(f: &Poly<K::Elem>, field: &K) -> Result<()> {
    match f.coeffs().iter().find(|c| !field.in_valuation_ring(c)) {
        Some(c) => Err(Error::OutsideValuationRing(field.display(c))),
        None => Ok(()),
    }
}

/// Monic, integral, `v(a_1) = 0` and `v(a_0) > 0`.
pub fn is_nagata<K: ValuedField>(f: &Poly<K::Elem>, field: &K) -> Result<bool> {
    check_integral(f, field)?;
    let ring = poly_ring(field);
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !ring.is_monic(f) {
        return Err(Error::NotMonic);
    }
    Ok(has_nagata_shape(f, field))
}

fn has_nagata_shape<K: ValuedField>(f: &Poly<K::Elem>, field: &K) -> bool {
    let ring = poly_ring(field);
    field.valuation(&ring.coeff(f, 1)) == Value::ZERO && field.valuation(&ring.coeff(f, 0)).is_positive()
}

/// `X^n - X^{n-1} + t_{n-2}X^{n-2} + … + t_0` with every `t_i` in `m`.
pub fn is_special<K: ValuedField>(t: &Poly<K::Elem>, field: &K) -> bool {
    let ring = poly_ring(field);
    let Some(n) = t.degree() else {
        return false;
    };
    n >= 1
        && ring.is_monic(t)
        && field.equal(&ring.coeff(t, n - 1), &field.from_int(-1))
        && t.coeffs()[..n - 1].iter().all(|c| field.valuation(c).is_positive())
}

/// The polynomial `h` with `b_k^{k+1} h(Y) = b_{k+1}^k g(-b_k Y / b_{k+1})`.
///
/// Its coefficients are `h_i = b_i (-b_k)^i b_{k+1}^{k-i} / b_k^{k+1}`, all
/// integral, with `h_k = (-1)^k` and `h_{k+1} = (-1)^{k+1}`.
pub fn segment_to_h<K: ValuedField>(g: &Poly<K::Elem>, k: usize, field: &K) -> Result<Poly<K::Elem>> {
    let polygon = compute_polygon(g, field)?;
    if !polygon.isolated_slopes().iter().any(|&(j, _)| j == k) {
        return Err(Error::NotIsolated(k));
    }
    let ring = poly_ring(field);
    let bk = ring.coeff(g, k);
    let bk1 = ring.coeff(g, k + 1);
    let neg_bk = field.neg(&bk);
    let denom = field.inv(&field.pow(&bk, k as u32 + 1)).ok_or(Error::DivisionByZero)?;
    let bk1_inv = field.inv(&bk1).ok_or(Error::DivisionByZero)?;
    let coeffs = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, bi)| {
            let shift = if i <= k {
                field.pow(&bk1, (k - i) as u32)
            } else {
                field.pow(&bk1_inv, (i - k) as u32)
            };
            field.product([bi, &field.pow(&neg_bk, i as u32), &shift, &denom])
        })
        .collect();
    Ok(ring.from_coeffs(coeffs))
}

/// `f(X) = h(1+X)`. The result has `v(a_0) > 0` and `v(a_1) = 0` but is in
/// general not monic.
pub fn h_to_nagata<K: ValuedField>(h: &Poly<K::Elem>, field: &K) -> Poly<K::Elem> {
    let ring = poly_ring(field);
    let shift = ring.from_coeffs(vec![field.one(), field.one()]);
    ring.compose(h, &shift)
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpecialOutcome<E> {
    /// `a_0 = 0`: the henselian zero is `μ = 0`.
    TrivialZero,
    Special(Poly<E>),
}

/// The polynomial `t` with `a_0 t(X) = X^n f(-a_0/(a_1 X))`, whose special
/// zero `β` gives `μ = -a_0/(a_1 β)`.
pub fn nagata_to_special<K: ValuedField>(f: &Poly<K::Elem>, field: &K) -> Result<SpecialOutcome<K::Elem>> {
    check_integral(f, field)?;
    if !has_nagata_shape(f, field) {
        return Err(Error::NotNagata(poly_ring(field).display(f)));
    }
    let ring = poly_ring(field);
    let a0 = ring.coeff(f, 0);
    if field.is_zero(&a0) {
        return Ok(SpecialOutcome::TrivialZero);
    }
    let c = nagata_ratio(f, field)?;
    let n = f.degree().expect("nonzero");
    let a0_inv = field.inv(&a0).expect("nonzero");
    let mut coeffs = vec![field.zero(); n + 1];
    for (i, ai) in f.coeffs().iter().enumerate() {
        coeffs[n - i] = field.product([ai, &field.pow(&c, i as u32), &a0_inv]);
    }
    Ok(SpecialOutcome::Special(ring.from_coeffs(coeffs)))
}

/// `-a_0/a_1`.
fn nagata_ratio<K: ValuedField>(f: &Poly<K::Elem>, field: &K) -> Result<K::Elem> {
    let ring = poly_ring(field);
    let a1 = ring.coeff(f, 1);
    field.div(&field.neg(&ring.coeff(f, 0)), &a1).ok_or(Error::DivisionByZero)
}

fn truncate_poly<K: ValuedField>(field: &K, p: &Poly<K::Elem>, precision: u32) -> Result<Vec<K::Trunc>> {
    p.coeffs().iter().map(|c| field.truncate(c, precision)).collect()
}

fn horner<T: Truncated>(coeffs: &[T], x: &T) -> T {
    coeffs.iter().rev().fold(x.zero_like(), |acc, c| acc.mul(x).add(c))
}

/// Evaluates an integral polynomial at a truncated point.
pub fn eval_truncated<K: ValuedField>(field: &K, p: &Poly<K::Elem>, x: &K::Trunc) -> Result<K::Trunc> {
    Ok(horner(&truncate_poly(field, p, x.precision())?, x))
}

/// Newton iteration at full precision from an integer seed whose image under
/// `f'` is a unit.
fn newton_root<K: ValuedField>(f: &Poly<K::Elem>, field: &K, seed: i64, precision: u32) -> Result<K::Trunc> {
    if precision == 0 {
        return Err(Error::Inconsistent("precision must be positive".into()));
    }
    let ring = poly_ring(field);
    let coeffs = truncate_poly(field, f, precision)?;
    let deriv = truncate_poly(field, &ring.derivative(f), precision)?;
    let mut x = field.truncate(&field.from_int(seed), precision)?;
    for _ in 0..MAX_NEWTON_STEPS {
        let fx = horner(&coeffs, &x);
        if fx.is_zero() {
            return Ok(x);
        }
        x = x.sub(&fx.div(&horner(&deriv, &x))?);
    }
    Err(Error::Inconsistent("Newton iteration did not converge".into()))
}

/// The henselian zero `α ≡ 0` of `f` modulo `π^N`.
///
/// Accepts any integral `f` with `v(a_0) > 0` and `v(a_1) = 0`, monic or not,
/// so that the output of [`h_to_nagata`] can be lifted directly.
pub fn hensel_lift<K: ValuedField>(f: &Poly<K::Elem>, field: &K, precision: u32) -> Result<K::Trunc> {
    check_integral(f, field)?;
    if !has_nagata_shape(f, field) {
        return Err(Error::NotNagata(poly_ring(field).display(f)));
    }
    newton_root(f, field, 0, precision)
}

/// The special zero `β ≡ 1` of a special polynomial modulo `π^N`.
pub fn special_zero<K: ValuedField>(t: &Poly<K::Elem>, field: &K, precision: u32) -> Result<K::Trunc> {
    if !is_special(t, field) {
        return Err(Error::NotSpecial(poly_ring(field).display(t)));
    }
    newton_root(t, field, 1, precision)
}

/// `α = (aβ+b)/(cβ+d)` with `a, b, c, d ∈ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusDescription<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

/// Every stage of the reduction from an isolated slope of `g` to a special
/// polynomial.
#[derive(Clone, Debug)]
pub struct TransformationChain<K: ValuedField> {
    field: K,
    pub k: usize,
    pub g: Poly<K::Elem>,
    pub h: Poly<K::Elem>,
    pub f: Poly<K::Elem>,
    pub special: SpecialOutcome<K::Elem>,
    /// `-b_k/b_{k+1}`.
    pub scale: K::Elem,
    pub root_valuation: Value,
    pub moebius: Option<MoebiusDescription<K::Elem>>,
}

pub fn transformation_chain<K: ValuedField>(
    g: &Poly<K::Elem>,
    k: usize,
    field: &K,
) -> Result<TransformationChain<K>> {
    let root_valuation = compute_polygon(g, field)?.root_valuation(k)?;
    let ring = poly_ring(field);
    let (bk, bk1) = (ring.coeff(g, k), ring.coeff(g, k + 1));
    let h = segment_to_h(g, k, field)?;
    let f = h_to_nagata(&h, field);
    let special = nagata_to_special(&f, field)?;
    let scale = field.div(&field.neg(&bk), &bk1).ok_or(Error::DivisionByZero)?;
    let moebius = match special {
        SpecialOutcome::TrivialZero => None,
        SpecialOutcome::Special(_) => {
            let cf = nagata_ratio(&f, field)?;
            let raw = [field.neg(&bk), field.neg(&field.mul(&bk, &cf)), bk1.clone(), field.zero()];
            let least = raw
                .iter()
                .filter_map(|e| field.valuation(e).finite())
                .min()
                .expect("c is nonzero");
            let unit = field.uniformiser_power(-least);
            let [a, b, c, d] = raw.map(|e| field.mul(&e, &unit));
            Some(MoebiusDescription { a, b, c, d })
        }
    };
    Ok(TransformationChain { field: field.clone(), k, g: g.clone(), h, f, special, scale, root_valuation, moebius })
}

impl<K: ValuedField> TransformationChain<K> {
    /// `μ` modulo `π^N`.
    pub fn mu(&self, precision: u32) -> Result<K::Trunc> {
        hensel_lift(&self.f, &self.field, precision)
    }

    /// `β` modulo `π^N`, absent for a trivial zero.
    pub fn beta(&self, precision: u32) -> Result<Option<K::Trunc>> {
        match &self.special {
            SpecialOutcome::TrivialZero => Ok(None),
            SpecialOutcome::Special(t) => special_zero(t, &self.field, precision).map(Some),
        }
    }

    /// `α = B(1+μ)` modulo `π^N`; needs `v(α) ≥ 0`.
    pub fn alpha(&self, precision: u32) -> Result<K::Trunc> {
        let b = self.field.truncate(&self.scale, precision)?;
        let mu = self.mu(precision)?;
        Ok(b.mul(&mu.add(&mu.one_like())))
    }

    /// Checks `(cβ+d)·α ≡ aβ+b` modulo `π^N`.
    pub fn check_moebius(&self, precision: u32) -> Result<bool> {
        let (Some(m), Some(beta)) = (&self.moebius, self.beta(precision)?) else {
            return Ok(true);
        };
        let alpha = self.alpha(precision)?;
        let tr = |e: &K::Elem| self.field.truncate(e, precision);
        let lhs = tr(&m.c)?.mul(&beta).add(&tr(&m.d)?).mul(&alpha);
        let rhs = tr(&m.a)?.mul(&beta).add(&tr(&m.b)?);
        Ok(lhs == rhs)
    }
}

/// Initial precision, growth factor and ceiling for lazy refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrecisionPolicy {
    pub initial: u32,
    pub growth: u32,
    pub max: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { initial: 8, growth: 2, max: 512 }
    }
}

impl PrecisionPolicy {
    /// The first precision in the policy's schedule that is at least
    /// `required`.
    pub fn reach(&self, required: u64) -> Result<u32> {
        let mut p = self.initial.max(1) as u64;
        while p < required {
            p = p.saturating_mul(self.growth.max(2) as u64);
        }
        if p > self.max as u64 {
            if required <= self.max as u64 {
                return Ok(self.max);
            }
            return Err(Error::PrecisionExhausted { required, max: self.max });
        }
        Ok(p as u32)
    }
}

/// Outcome of a zero test in `K[α]`, with the precision that settled it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroTest {
    pub is_zero: bool,
    pub precision: u32,
    /// Upper bound for `v(Q(α))` when nonzero, in terms of the scaled `Q`.
    pub bound: i64,
}

/// `(K[α], V_α)` for the henselian zero `α` of a Nagata polynomial.
///
/// `α` is cached at the highest precision requested so far; the cache makes
/// an extension unsuitable for sharing between threads.
#[derive(Debug)]
pub struct Extension<K: ValuedField> {
    field: K,
    ring: PolyRing<K>,
    f: Poly<K::Elem>,
    policy: PrecisionPolicy,
    alpha: RefCell<Option<K::Trunc>>,
}

impl<K: ValuedField> Extension<K> {
    pub fn new(field: K, f: Poly<K::Elem>, policy: PrecisionPolicy) -> Result<Self> {
        if !is_nagata(&f, &field)? {
            return Err(Error::NotNagata(poly_ring(&field).display(&f)));
        }
        let ring = poly_ring(&field);
        Ok(Extension { field, ring, f, policy, alpha: RefCell::new(None) })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn poly_ring(&self) -> &PolyRing<K> {
        &self.ring
    }

    pub fn f(&self) -> &Poly<K::Elem> {
        &self.f
    }

    pub fn policy(&self) -> PrecisionPolicy {
        self.policy
    }

    /// `α` modulo `π^N`.
    pub fn alpha(&self, precision: u32) -> Result<K::Trunc> {
        if precision > self.policy.max {
            return Err(Error::PrecisionExhausted { required: precision as u64, max: self.policy.max });
        }
        if let Some(a) = self.alpha.borrow().as_ref() {
            if a.precision() >= precision {
                return Ok(a.with_precision(precision));
            }
        }
        let a = hensel_lift(&self.f, &self.field, precision)?;
        *self.alpha.borrow_mut() = Some(a.clone());
        Ok(a)
    }

    /// Precision of the cached approximation of `α`.
    pub fn held_precision(&self) -> u32 {
        self.alpha.borrow().as_ref().map_or(0, |a| a.precision())
    }

    /// `Q(α)` modulo `π^N` for integral `Q`.
    pub fn eval(&self, q: &Poly<K::Elem>, precision: u32) -> Result<K::Trunc> {
        eval_truncated(&self.field, q, &self.alpha(precision)?)
    }

    /// `Q mod f`, scaled by a power of `π` so that its coefficients are
    /// integral with one of them a unit. Returns the scaled polynomial and
    /// the exponent `m` with `Q = π^m · scaled`.
    fn normalise(&self, q: &Poly<K::Elem>) -> Result<(Poly<K::Elem>, i64)> {
        let r = self.ring.rem_monic(q, &self.f)?;
        let Some(m) = r.coeffs().iter().filter_map(|c| self.field.valuation(c).finite()).min() else {
            return Ok((r, 0));
        };
        Ok((self.ring.scale(&r, &self.field.uniformiser_power(-m)), m))
    }

    /// Decides `Q(α) = 0`.
    pub fn is_zero_in_extension(&self, q: &Poly<K::Elem>) -> Result<ZeroTest> {
        let (q, _) = self.normalise(q)?;
        self.zero_test_normalised(&q)
    }

    fn zero_test_normalised(&self, q: &Poly<K::Elem>) -> Result<ZeroTest> {
        if q.is_zero() {
            return Ok(ZeroTest { is_zero: true, precision: 0, bound: 0 });
        }
        let d = self.ring.gcd(&self.f, q);
        if d.degree() == Some(0) {
            let bound = self.resultant_bound(&self.f, q)?;
            let precision = self.policy.reach(bound as u64 + 1)?;
            let value = self.eval(q, precision)?;
            if value.is_zero() {
                return Err(Error::Inconsistent("nonzero resultant but Q(α) vanishes".into()));
            }
            return Ok(ZeroTest { is_zero: false, precision, bound });
        }
        // `α` is a simple root of `f = d·e`, so it is a root of exactly one of
        // the two factors, and stays so once their common factors are removed.
        let mut d1 = d.clone();
        let mut e1 = self.ring.exact_div(&self.f, &d)?;
        loop {
            let s = self.ring.gcd(&d1, &e1);
            if s.degree() == Some(0) {
                break;
            }
            d1 = self.ring.exact_div(&d1, &s)?;
            e1 = self.ring.exact_div(&e1, &s)?;
        }
        if e1.degree() == Some(0) {
            return Ok(ZeroTest { is_zero: true, precision: 0, bound: 0 });
        }
        if d1.degree() == Some(0) {
            return Err(Error::Inconsistent("gcd factor lost all roots".into()));
        }
        let bound = self.resultant_bound(&e1, &d1)?;
        let precision = self.policy.reach(bound as u64 + 1)?;
        let is_zero = self.eval(&d1, precision)?.is_zero();
        Ok(ZeroTest { is_zero, precision, bound })
    }

    /// `v(Res(a, b))` for monic integral `a`: an upper bound for `v(b(r))` at
    /// any root `r` of `a` where `b` does not vanish.
    fn resultant_bound(&self, a: &Poly<K::Elem>, b: &Poly<K::Elem>) -> Result<i64> {
        let res = self.ring.resultant(a, b);
        self.field
            .valuation(&res)
            .finite()
            .ok_or_else(|| Error::Inconsistent("vanishing resultant of coprime polynomials".into()))
    }

    /// `v(Q(α))`, together with the precision at which it was read off.
    pub fn value_with_precision(&self, q: &Poly<K::Elem>) -> Result<(Value, u32)> {
        let (scaled, m) = self.normalise(q)?;
        let test = self.zero_test_normalised(&scaled)?;
        if test.is_zero {
            return Ok((Value::Infinity, test.precision));
        }
        let mut precision = test.precision.max(self.policy.initial.max(1));
        loop {
            let value = self.eval(&scaled, precision)?;
            if let Some(v) = value.valuation() {
                return Ok((Value::Finite(v as i64 + m), precision));
            }
            precision = self.policy.reach(precision as u64 + 1)?;
        }
    }

    pub fn value_in_extension(&self, q: &Poly<K::Elem>) -> Result<Value> {
        self.value_with_precision(q).map(|(v, _)| v)
    }

    /// For `Q(α)` a unit: a constant `c` of the base field with
    /// `v(Q(α) - c) > 0`.
    pub fn residue_in_extension(&self, q: &Poly<K::Elem>) -> Result<K::Elem> {
        if self.value_in_extension(q)? != Value::ZERO {
            return Err(Error::DivisionByNonUnit);
        }
        // Q(α) = π^m·scaled(α) with m ≤ 0, so scaled(α) is needed mod π^(1-m)
        let (scaled, m) = self.normalise(q)?;
        let approx = self.field.lift(&self.eval(&scaled, (1 - m) as u32)?);
        self.field.residue(&self.field.mul(&approx, &self.field.uniformiser_power(m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratfunc::Tadic;
    use crate::arith::ring::Rationals;
    use crate::arith::valued::Padic;

    fn q5() -> Padic {
        Padic::new(5).unwrap()
    }

    fn ipoly<K: ValuedField>(field: &K, c: &[i64]) -> Poly<K::Elem> {
        poly_ring(field).from_coeffs(c.iter().map(|&n| field.from_int(n)).collect())
    }

    #[test]
    fn nagata_and_special_recognition() {
        let k = q5();
        assert_eq!(is_nagata(&ipoly(&k, &[5, 1, 1]), &k), Ok(true));
        assert_eq!(is_nagata(&ipoly(&k, &[1, 1, 1]), &k), Ok(false));
        assert_eq!(is_nagata(&ipoly(&k, &[5, 5, 1]), &k), Ok(false));
        assert_eq!(is_nagata(&ipoly(&k, &[5, 1, 2]), &k), Err(Error::NotMonic));
        assert!(is_special(&ipoly(&k, &[0, -1, 1]), &k));
        assert!(is_special(&ipoly(&k, &[25, 5, -1, 1]), &k));
        assert!(!is_special(&ipoly(&k, &[1, -1, 1]), &k));
    }

    #[test]
    fn lifts_over_q5() {
        let k = q5();
        let f = ipoly(&k, &[5, 1, 1]);
        let a = hensel_lift(&f, &k, 2).unwrap();
        assert_eq!(k.display_truncated(&a), "20 mod 25");
        let a6 = hensel_lift(&f, &k, 6).unwrap();
        assert_eq!(a6.with_precision(2), a);
        let zero = hensel_lift(&ipoly(&k, &[0, 1, 1]), &k, 5).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn lifts_over_q_t() {
        let k = Tadic::new(Rationals);
        let t = k.uniformiser();
        let f = poly_ring(&k).from_coeffs(vec![t, k.one(), k.one()]);
        let a = hensel_lift(&f, &k, 3).unwrap();
        assert_eq!(k.display_truncated(&a), "-t^2-t mod t^3");
    }

    #[test]
    fn special_zero_of_quadratic() {
        let k = q5();
        let b = special_zero(&ipoly(&k, &[5, -1, 1]), &k, 2).unwrap();
        assert_eq!(k.display_truncated(&b), "21 mod 25");
        let one = special_zero(&ipoly(&k, &[0, -1, 1]), &k, 4).unwrap();
        assert_eq!(one, one.one_like());
    }

    #[test]
    fn chain_of_x2_x_5() {
        let k = q5();
        let f = ipoly(&k, &[5, 1, 1]);
        assert_eq!(nagata_to_special(&f, &k), Ok(SpecialOutcome::Special(ipoly(&k, &[5, -1, 1]))));
        let chain = transformation_chain(&f, 0, &k).unwrap();
        assert_eq!(chain.root_valuation, Value::Finite(1));
        // h_0 = 1, h_1 = -1, h_2 = b_2 b_0^2 / (b_1^1 b_0) = 5
        assert_eq!(chain.h, ipoly(&k, &[1, -1, 5]));
        assert_eq!(chain.f, ipoly(&k, &[5, 9, 5]));
        let alpha = chain.alpha(6).unwrap();
        assert_eq!(alpha, hensel_lift(&f, &k, 6).unwrap());
        assert!(chain.check_moebius(12).unwrap());
        let linear = transformation_chain(&ipoly(&k, &[3, 7]), 0, &k).unwrap();
        assert_eq!(linear.special, SpecialOutcome::TrivialZero);
        assert_eq!(linear.f, ipoly(&k, &[0, -1]));
    }

    #[test]
    fn extension_values() {
        let k = q5();
        let ext = Extension::new(k.clone(), ipoly(&k, &[5, 1, 1]), PrecisionPolicy::default()).unwrap();
        assert_eq!(ext.value_in_extension(&ipoly(&k, &[0, 1])), Ok(Value::Finite(1)));
        assert_eq!(ext.value_in_extension(&ipoly(&k, &[50])), Ok(Value::Finite(2)));
        assert_eq!(ext.value_in_extension(&ipoly(&k, &[5, 1, 1])), Ok(Value::Infinity));
        assert!(!ext.is_zero_in_extension(&ipoly(&k, &[0, 1])).unwrap().is_zero);
        assert!(ext.is_zero_in_extension(&ipoly(&k, &[])).unwrap().is_zero);
        assert_eq!(ext.residue_in_extension(&ipoly(&k, &[3, 1])), Ok(k.from_int(3)));
    }

    #[test]
    fn zero_test_through_a_factor() {
        // f = (X + 5)(X^2 + X + 1) is Nagata with α = -5.
        let k = q5();
        let f = ipoly(&k, &[5, 6, 6, 1]);
        let ext = Extension::new(k.clone(), f, PrecisionPolicy::default()).unwrap();
        let t = ext.is_zero_in_extension(&ipoly(&k, &[10, 2])).unwrap();
        assert!(t.is_zero);
        let other = ext.is_zero_in_extension(&ipoly(&k, &[1, 1, 1])).unwrap();
        assert!(!other.is_zero);
        assert_eq!(ext.value_in_extension(&ipoly(&k, &[1, 1, 1, 0])), Ok(Value::ZERO));
        assert_eq!(ext.value_in_extension(&ipoly(&k, &[7, 2, 0, 0, 0, 1])), Ok(Value::ZERO));
    }

    #[test]
    fn residue_of_a_non_integral_presentation() {
        // α ≡ -5 mod 25 for X^2+X+5, so X/5 + 2 is ≡ 1 at α
        let k = q5();
        let ext = Extension::new(k.clone(), ipoly(&k, &[5, 1, 1]), PrecisionPolicy::default()).unwrap();
        let ring = poly_ring(&k);
        let q = ring.from_coeffs(vec![k.from_int(2), k.uniformiser_power(-1)]);
        assert_eq!(ext.value_in_extension(&q), Ok(Value::ZERO));
        assert_eq!(ext.residue_in_extension(&q), Ok(k.one()));
    }

    #[test]
    fn precision_policy_schedule() {
        let p = PrecisionPolicy::default();
        assert_eq!(p.reach(1), Ok(8));
        assert_eq!(p.reach(9), Ok(16));
        assert_eq!(p.reach(300), Ok(512));
        assert_eq!(p.reach(513), Err(Error::PrecisionExhausted { required: 513, max: 512 }));
    }
}
