//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

use hensel_core::{CoefficientField, Poly, PolyRing, Rationals, Ring, Tadic, Value, ValuedField};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

/// Lower-hull vertices found by trying every subset of the finite points
/// and keeping those whose consecutive pairs satisfy the three slope
/// conditions. Returns every admissible subset; a correct hull is the only one.
pub fn brute_force_hulls(values: &[Value]) -> Vec<Vec<(usize, i64)>> {
    let points: Vec<(usize, i64)> = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.finite().map(|v| (i, v)))
        .collect();
    if points.len() <= 1 {
        return vec![points];
    }
    // slope(a,b) < slope(c,d), both with increasing indices
    let less = |a: (usize, i64), b: (usize, i64), c: (usize, i64), d: (usize, i64)| {
        let lhs = (b.1 - a.1) as i128 * (d.0 - c.0) as i128;
        let rhs = (d.1 - c.1) as i128 * (b.0 - a.0) as i128;
        lhs < rhs
    };
    let admissible = |k: (usize, i64), l: (usize, i64)| {
        points.iter().all(|&i| {
            if i.0 < k.0 {
                less(i, k, k, l)
            } else if i.0 > k.0 && i.0 < l.0 {
                !less(k, i, k, l)
            } else if i.0 > l.0 {
                less(k, l, l, i)
            } else {
                true
            }
        })
    };
    let inner = points.len() - 2;
    let mut found = Vec::new();
    for mask in 0u32..(1 << inner) {
        let mut subset = vec![points[0]];
        for (j, &p) in points[1..points.len() - 1].iter().enumerate() {
            if mask & (1 << j) != 0 {
                subset.push(p);
            }
        }
        subset.push(points[points.len() - 1]);
        if subset.windows(2).all(|w| admissible(w[0], w[1])) {
            found.push(subset);
        }
    }
    found
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A rational of exact `p`-adic valuation `v`, or zero for `None`.
pub fn padic_with_value<G: Rng>(p: u64, v: Option<i64>, rng: &mut G) -> BigRational {
    let Some(v) = v else { return rat(0, 1) };
    let unit = |rng: &mut G| loop {
        let n: i64 = rng.gen_range(1..=40);
        if n % p as i64 != 0 {
            return n;
        }
    };
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let den = if rng.gen_bool(0.3) { unit(rng) } else { 1 };
    let x = rat(sign * unit(rng), den);
    let pp = BigRational::from_integer(BigInt::from(p).pow(v.unsigned_abs() as u32));
    if v >= 0 {
        x * pp
    } else {
        x / pp
    }
}

/// A polynomial in `t` with nonzero constant term and small coefficients.
pub fn tadic_unit_poly<C: CoefficientField, G: Rng>(k: &Tadic<C>, rng: &mut G) -> Poly<C::Elem> {
    let c = k.coefficients();
    let deg = rng.gen_range(0..=2);
    loop {
        let coeffs: Vec<C::Elem> = (0..=deg).map(|_| c.random(rng, 5)).collect();
        if !c.is_zero(&coeffs[0]) {
            return k.polys().from_coeffs(coeffs);
        }
    }
}

/// A rational function of exact `t`-adic valuation `v`, or zero for `None`.
pub fn tadic_with_value<C: CoefficientField, G: Rng>(
    k: &Tadic<C>,
    v: Option<i64>,
    rng: &mut G,
) -> <Tadic<C> as Ring>::Elem {
    let Some(v) = v else { return k.zero() };
    let num = tadic_unit_poly(k, rng);
    let den = if rng.gen_bool(0.3) { tadic_unit_poly(k, rng) } else { k.polys().one() };
    let unit = k.fraction(num, den).expect("nonzero denominator");
    k.mul(&unit, &k.uniformiser_power(v))
}

/// Random element of `Q_p` or `k(t)` with prescribed valuation.
pub trait Sampler: ValuedField {
    fn with_value<G: Rng>(&self, v: Option<i64>, rng: &mut G) -> Self::Elem;
}

impl Sampler for hensel_core::Padic {
    fn with_value<G: Rng>(&self, v: Option<i64>, rng: &mut G) -> BigRational {
        padic_with_value(self.prime(), v, rng)
    }
}

impl<C: CoefficientField> Sampler for Tadic<C> {
    fn with_value<G: Rng>(&self, v: Option<i64>, rng: &mut G) -> Self::Elem {
        tadic_with_value(self, v, rng)
    }
}

/// A monic Nagata polynomial of degree `n`: integral coefficients, unit
/// linear coefficient (for `n ≥ 2`) and constant in the maximal ideal.
pub fn random_nagata<K: Sampler, G: Rng>(field: &K, n: usize, rng: &mut G) -> Poly<K::Elem> {
    let mut coeffs = Vec::with_capacity(n + 1);
    let a0 = if rng.gen_bool(0.1) { None } else { Some(rng.gen_range(1..=3)) };
    coeffs.push(field.with_value(a0, rng));
    for i in 1..n {
        let v = if i == 1 {
            Some(0)
        } else if rng.gen_bool(0.2) {
            None
        } else {
            Some(rng.gen_range(0..=2))
        };
        coeffs.push(field.with_value(v, rng));
    }
    coeffs.push(field.one());
    PolyRing::new(field.clone()).from_coeffs(coeffs)
}

/// Every class `x mod π^N` with `x ≡ 0 mod π` and `f(x) ≡ 0 mod π^N`,
/// found digit by digit through the residue representatives, with exact
/// evaluation in the field.
pub fn zero_classes_finite<K: ValuedField>(field: &K, f: &Poly<K::Elem>, n: u32) -> Vec<K::Elem> {
    let ring = PolyRing::new(field.clone());
    let reps = field.residue_representatives().expect("finite residue field");
    let mut level = if field.valuation(&ring.eval(f, &field.zero())) >= Value::Finite(1) {
        vec![field.zero()]
    } else {
        Vec::new()
    };
    for j in 1..n {
        let step = field.uniformiser_power(j as i64);
        let mut next = Vec::new();
        for x in &level {
            for r in &reps {
                let y = field.add(x, &field.mul(r, &step));
                if field.valuation(&ring.eval(f, &y)) >= Value::Finite(j as i64 + 1) {
                    next.push(y);
                }
            }
        }
        level = next;
    }
    level
}

/// The same enumeration over `Q(t)`: each digit solves a linear equation over
/// `Q`, and a vanishing linear term would mean infinitely many lifts.
pub fn zero_classes_qt(
    field: &Tadic<Rationals>,
    f: &Poly<<Tadic<Rationals> as Ring>::Elem>,
    n: u32,
) -> Option<Vec<<Tadic<Rationals> as Ring>::Elem>> {
    let ring = PolyRing::new(field.clone());
    let df = ring.derivative(f);
    let x0 = field.zero();
    if field.valuation(&ring.eval(f, &x0)) < Value::Finite(1) {
        return Some(Vec::new());
    }
    let mut x = x0;
    for j in 1..n {
        let fx = ring.eval(f, &x);
        let want = Value::Finite(j as i64 + 1);
        let digit = series_coeff(field, &fx, j);
        let slope = series_coeff(field, &ring.eval(&df, &x), 0);
        if slope == rat(0, 1) {
            return if digit == rat(0, 1) { None } else { Some(Vec::new()) };
        }
        let c = -digit / slope;
        let y = field.add(&x, &field.mul(&field.from_coeff(c), &field.uniformiser_power(j as i64)));
        if field.valuation(&ring.eval(f, &y)) < want {
            return Some(Vec::new());
        }
        x = y;
    }
    Some(vec![x])
}

/// Coefficient of `t^j` in the expansion of an integral rational function.
pub fn series_coeff(field: &Tadic<Rationals>, a: &<Tadic<Rationals> as Ring>::Elem, j: u32) -> BigRational {
    let s = field.truncate(a, j + 1).expect("integral");
    s.coeffs().get(j as usize).cloned().unwrap_or_else(|| rat(0, 1))
}
