//! Shipped setups and a generator of random test inputs.
//!
//! | name  | ring                | θ                 | prime, witness   |
//! |-------|---------------------|-------------------|------------------|
//! | `domain` | `Q[w]`           | `w ↦ t`           | none             |
//! | `uw`  | `Q[u,w]/(uw)`       | `u ↦ 0, w ↦ t`    | `u`, `(w, 1)`    |
//! | `u2`  | `Q[u]/(u²)`         | `u ↦ 0`           | `u`, `(1, 2)`    |
//! | `u2w` | `Q[u,w]/(u²)`       | `u ↦ 0, w ↦ t`    | `u`, `(1, 2)`    |
//!
//! Each comes with three Nagata polynomials over the ring.

use std::collections::BTreeMap;

use rand::Rng;

use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ring::{CoefficientField, Rationals, Ring};
use crate::error::{Error, Result};
use crate::json::{RingDescriptor, SetupDescriptor, ThetaImage, WitnessDescriptor};
use crate::kernel::MinimalValuationSetup;
use crate::local::{MPolyRing, RingElement};

pub const NAMES: [&str; 4] = ["domain", "uw", "u2", "u2w"];

struct Entry {
    vars: &'static [&'static str],
    ideal: &'static [&'static str],
    theta: &'static [(&'static str, &'static str)],
    witnesses: &'static [(&'static str, &'static str, u32)],
    nagata: [&'static str; 3],
}

fn entry(name: &str) -> Option<Entry> {
    Some(match name {
        "domain" => Entry {
            vars: &["w"],
            ideal: &[],
            theta: &[("w", "t")],
            witnesses: &[],
            nagata: ["X^2+X+w", "X^3+2*X^2+X+w", "X^2+(1+w)*X+3*w"],
        },
        "uw" => Entry {
            vars: &["u", "w"],
            ideal: &["u*w"],
            theta: &[("u", "0"), ("w", "t")],
            witnesses: &[("u", "w", 1)],
            nagata: ["X^2+X+w", "X^3+X+w+u", "X^2+(1+u)*X+w"],
        },
        "u2" => Entry {
            vars: &["u"],
            ideal: &["u^2"],
            theta: &[("u", "0")],
            witnesses: &[("u", "1", 2)],
            nagata: ["X^2+X+u", "X^3+X+u", "X^2+(1+u)*X+2*u"],
        },
        "u2w" => Entry {
            vars: &["u", "w"],
            ideal: &["u^2"],
            theta: &[("u", "0"), ("w", "t")],
            witnesses: &[("u", "1", 2)],
            nagata: ["X^2+X+w", "X^2+X+u+w", "X^3+(1+u)*X+w"],
        },
        _ => return None,
    })
}

fn unknown(name: &str) -> Error {
    Error::Parse(format!("unknown catalogue setup `{name}`; expected one of {}", NAMES.join(", ")))
}

pub fn descriptor(name: &str) -> Result<SetupDescriptor> {
    let e = entry(name).ok_or_else(|| unknown(name))?;
    Ok(SetupDescriptor {
        ring: RingDescriptor {
            field: "Q".into(),
            vars: e.vars.iter().map(|s| s.to_string()).collect(),
            ideal: e.ideal.iter().map(|s| s.to_string()).collect(),
        },
        theta: e
            .theta
            .iter()
            .map(|(v, img)| (v.to_string(), ThetaImage::Text(img.to_string())))
            .collect::<BTreeMap<_, _>>(),
        prime_generators: e.witnesses.iter().map(|(p, _, _)| p.to_string()).collect(),
        witnesses: e.witnesses.iter().map(|(_, b, n)| WitnessDescriptor { b: b.to_string(), n: *n }).collect(),
    })
}

/// The three Nagata polynomials shipped with a setup, as strings in `X`.
pub fn nagata_polys(name: &str) -> Result<[&'static str; 3]> {
    entry(name).map(|e| e.nagata).ok_or_else(|| unknown(name))
}

pub fn setup(name: &str) -> Result<MinimalValuationSetup<Rationals>> {
    descriptor(name)?.build(Rationals)
}

/// A random `q` of degree below `degree`: each coefficient is an integer
/// polynomial of degree at most 2 in the ring's variables with coefficients
/// of absolute value at most `height`. About a third of the samples have
/// all coefficients multiplied by prime generators. Never zero when the
/// setup has no prime generators.
pub fn random_q<C: CoefficientField, G: Rng>(
    setup: &MinimalValuationSetup<C>,
    degree: usize,
    height: i64,
    rng: &mut G,
) -> Poly<RingElement<C::Elem>> {
    let r = setup.ring();
    let ops: &MPolyRing<C> = r.mpolys();
    let n = r.vars().len();
    let monomials: Vec<Vec<u32>> = (0..=2u32)
        .flat_map(|d| exponent_vectors(n, d))
        .collect();
    let rx = PolyRing::with_var(r.clone(), "X");
    loop {
        let in_prime = !setup.prime_generators().is_empty() && rng.gen_ratio(1, 3);
        let coeffs: Vec<_> = (0..degree)
            .map(|_| {
                let mut terms = Vec::new();
                for m in &monomials {
                    if rng.gen_bool(0.5) {
                        terms.push((m.clone(), ops.field().from_int(rng.gen_range(-height..=height))));
                    }
                }
                let c = r.from_poly(ops.from_terms(terms));
                if in_prime {
                    let p = &setup.prime_generators()[rng.gen_range(0..setup.prime_generators().len())];
                    r.mul(&c, p)
                } else {
                    c
                }
            })
            .collect();
        let q = rx.from_coeffs(coeffs);
        if !q.is_zero() || !setup.prime_generators().is_empty() {
            return q;
        }
    }
}

/// All exponent vectors of length `n` and total degree `d`.
fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            exponent_vectors(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_setup_validates() {
        for name in NAMES {
            let s = setup(name).unwrap();
            s.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
            for f in nagata_polys(name).unwrap() {
                let f = s.ring().parse_poly(f, "X").unwrap();
                crate::local::build_rf(s.ring(), &f).unwrap();
            }
        }
    }

    #[test]
    fn exponent_vectors_count() {
        assert_eq!(exponent_vectors(2, 2).len(), 3);
        assert_eq!(exponent_vectors(3, 1).len(), 3);
        assert_eq!(exponent_vectors(1, 0), vec![vec![0]]);
    }
}
