//! JSON descriptors for fields, elements, rings and setups.
//!
//! Field elements are `{"num": …, "den": …}` with decimal integers for the
//! `p`-adic rationals and polynomial strings in `t` for rational functions.
//! Polynomials over a field are arrays of elements indexed by degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ratfunc::{RatFunc, Tadic};
use crate::arith::ring::{CoefficientField, Field, PrimeField, Ring};
use crate::arith::valued::{Padic, ValuedField};
use crate::error::{Error, Result};
use crate::kernel::{MinimalValuationSetup, Witness};
use crate::local::FPLocalRing;
use crate::parse::{parse_polynomial, parse_univariate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldElementJson {
    pub num: String,
    #[serde(default = "one_text")]
    pub den: String,
}

fn one_text() -> String {
    "1".into()
}

/// `{"kind": "padic", "prime": 5}` or `{"kind": "tadic", "coefficients": "Q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDescriptor {
    Padic { prime: u64 },
    Tadic { coefficients: String },
}

/// `Q` or `Fq(p)` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Rationals,
    Prime(u64),
}

impl Coefficients {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "Q" {
            return Ok(Coefficients::Rationals);
        }
        let inner = text
            .strip_prefix("Fq(")
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| text.strip_prefix("F"))
            .ok_or_else(|| Error::InvalidField(format!("unknown coefficient field `{text}`")))?;
        let p: u64 = inner.parse().map_err(|_| Error::InvalidField(format!("bad modulus in `{text}`")))?;
        PrimeField::new(p).ok_or_else(|| Error::InvalidField(format!("{p} is not a prime; only prime fields are supported")))?;
        Ok(Coefficients::Prime(p))
    }
}

/// Conversion of field elements to and from their JSON form.
pub trait JsonField: ValuedField {
    fn elem_from_json(&self, j: &FieldElementJson) -> Result<Self::Elem>;
    fn elem_to_json(&self, e: &Self::Elem) -> FieldElementJson;

    fn poly_from_json(&self, coeffs: &[FieldElementJson]) -> Result<Poly<Self::Elem>> {
        let coeffs = coeffs.iter().map(|c| self.elem_from_json(c)).collect::<Result<Vec<_>>>()?;
        Ok(PolyRing::with_var(self.clone(), "X").from_coeffs(coeffs))
    }

    fn poly_to_json(&self, p: &Poly<Self::Elem>) -> Vec<FieldElementJson> {
        p.coeffs().iter().map(|c| self.elem_to_json(c)).collect()
    }

    /// A polynomial string in `X`, with `t` allowed in coefficients over
    /// `k(t)`.
    fn poly_from_text(&self, text: &str) -> Result<Poly<Self::Elem>>;

    fn poly_from_input(&self, input: &PolyInput) -> Result<Poly<Self::Elem>> {
        match input {
            PolyInput::Text(text) => self.poly_from_text(text),
            PolyInput::Coefficients(coeffs) => self.poly_from_json(coeffs),
        }
    }
}

/// A polynomial over a field: a string such as `"X^2+X+5"` or an array of
/// elements indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Text(String),
    Coefficients(Vec<FieldElementJson>),
}

impl JsonField for Padic {
    fn elem_from_json(&self, j: &FieldElementJson) -> Result<BigRational> {
        let parse = |s: &str| -> Result<BigInt> {
            s.trim().parse().map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
        };
        let den = parse(&j.den)?;
        if den == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(parse(&j.num)?, den))
    }

    fn elem_to_json(&self, e: &BigRational) -> FieldElementJson {
        FieldElementJson { num: e.numer().to_string(), den: e.denom().to_string() }
    }

    fn poly_from_text(&self, text: &str) -> Result<Poly<BigRational>> {
        Ok(PolyRing::with_var(self.clone(), "X").from_coeffs(parse_univariate(text, "X")?))
    }
}

impl<C: CoefficientField> JsonField for Tadic<C> {
    fn elem_from_json(&self, j: &FieldElementJson) -> Result<RatFunc<C::Elem>> {
        let num = self.parse(&j.num)?;
        let den = self.parse(&j.den)?;
        self.div(&num, &den).ok_or(Error::DivisionByZero)
    }

    fn elem_to_json(&self, e: &RatFunc<C::Elem>) -> FieldElementJson {
        FieldElementJson {
            num: self.polys().display(e.numerator()),
            den: self.polys().display(e.denominator()),
        }
    }

    fn poly_from_text(&self, text: &str) -> Result<Poly<RatFunc<C::Elem>>> {
        let terms = parse_polynomial(text, &["X", "t"])?;
        let degree = terms.keys().map(|e| e[0] as usize).max().unwrap_or(0);
        let mut coeffs = vec![self.zero(); degree + 1];
        for (e, c) in terms {
            let c = self
                .from_rational(&c)
                .ok_or_else(|| Error::Parse(format!("coefficient {c} is undefined over {}", self.coefficients().name())))?;
            let term = self.mul(&c, &self.uniformiser_power(e[1] as i64));
            coeffs[e[0] as usize] = self.add(&coeffs[e[0] as usize], &term);
        }
        Ok(PolyRing::with_var(self.clone(), "X").from_coeffs(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDescriptor {
    pub field: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
}

impl RingDescriptor {
    pub fn build<C: CoefficientField>(&self, field: C) -> Result<FPLocalRing<C>> {
        FPLocalRing::new(field, self.vars.clone(), &self.ideal)
    }
}

/// An image under `θ`: a string `p` or `(p)/(q)` in `t`, or an element
/// object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ThetaImage {
    Text(String),
    Element(FieldElementJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDescriptor {
    pub b: String,
    pub n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetupDescriptor {
    pub ring: RingDescriptor,
    pub theta: BTreeMap<String, ThetaImage>,
    #[serde(default)]
    pub prime_generators: Vec<String>,
    #[serde(default)]
    pub witnesses: Vec<WitnessDescriptor>,
}

impl SetupDescriptor {
    pub fn coefficients(&self) -> Result<Coefficients> {
        Coefficients::parse(&self.ring.field)
    }

    pub fn build<C: CoefficientField>(&self, field: C) -> Result<MinimalValuationSetup<C>> {
        let ring = self.ring.build(field.clone())?;
        let target = Tadic::new(field);
        if let Some(extra) = self.theta.keys().find(|k| !ring.vars().contains(k)) {
            return Err(Error::Parse(format!("theta names unknown variable `{extra}`")));
        }
        let theta = ring
            .vars()
            .iter()
            .map(|v| match self.theta.get(v) {
                None => Err(Error::Parse(format!("theta has no image for `{v}`"))),
                Some(ThetaImage::Text(s)) => target.parse(s),
                Some(ThetaImage::Element(e)) => target.elem_from_json(e),
            })
            .collect::<Result<Vec<_>>>()?;
        let primes = self.prime_generators.iter().map(|p| ring.parse(p)).collect::<Result<Vec<_>>>()?;
        let witnesses = self
            .witnesses
            .iter()
            .map(|w| Ok(Witness { b: ring.parse(&w.b)?, n: w.n }))
            .collect::<Result<Vec<_>>>()?;
        MinimalValuationSetup::new(ring, theta, primes, witnesses)
    }
}

/// Runs `$body` with `$field` bound to the concrete coefficient field named
/// by a [`Coefficients`] value.
#[macro_export]
macro_rules! with_coefficients {
    ($coeffs:expr, $field:ident => $body:expr) => {
        match $coeffs {
            $crate::json::Coefficients::Rationals => {
                let $field = $crate::arith::ring::Rationals;
                $body
            }
            $crate::json::Coefficients::Prime(p) => {
                let $field = $crate::arith::ring::PrimeField::new(p).expect("checked prime");
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::Rationals;

    #[test]
    fn coefficient_names() {
        assert_eq!(Coefficients::parse("Q"), Ok(Coefficients::Rationals));
        assert_eq!(Coefficients::parse("Fq(7)"), Ok(Coefficients::Prime(7)));
        assert!(Coefficients::parse("Fq(9)").is_err());
        assert!(Coefficients::parse("R").is_err());
    }

    #[test]
    fn element_round_trips() {
        let k = Tadic::new(Rationals);
        let j = FieldElementJson { num: "t^2+t".into(), den: "2*t".into() };
        let e = k.elem_from_json(&j).unwrap();
        assert_eq!(k.elem_to_json(&e), FieldElementJson { num: "1/2*t+1/2".into(), den: "1".into() });
        let p = Padic::new(5).unwrap();
        let e = p.elem_from_json(&FieldElementJson { num: "10".into(), den: "-4".into() }).unwrap();
        assert_eq!(p.elem_to_json(&e), FieldElementJson { num: "-5".into(), den: "2".into() });
    }

    #[test]
    fn polynomials_from_text_or_arrays() {
        let k = Tadic::new(Rationals);
        let from_text = k.poly_from_input(&serde_json::from_str(r#""X^2+(1+t)*X+1/2*t""#).unwrap()).unwrap();
        let arr = r#"[{"num": "t", "den": "2"}, {"num": "1+t"}, {"num": "1"}]"#;
        let from_array = k.poly_from_input(&serde_json::from_str(arr).unwrap()).unwrap();
        assert_eq!(from_text, from_array);
        let p = Padic::new(5).unwrap();
        let f = p.poly_from_input(&PolyInput::Text("X^2+X+5".into())).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert!(p.poly_from_input(&PolyInput::Text("X+t".into())).is_err());
    }

    #[test]
    fn rejects_unknown_fields() {
        let bad = r#"{"ring":{"field":"Q","vars":["w"]},"theta":{"w":"t"},"extra":1}"#;
        assert!(serde_json::from_str::<SetupDescriptor>(bad).is_err());
        let good = r#"{"ring":{"field":"Q","vars":["w"]},"theta":{"w":"t"}}"#;
        let d: SetupDescriptor = serde_json::from_str(good).unwrap();
        assert!(d.build(Rationals).unwrap().validate().is_ok());
    }
}
