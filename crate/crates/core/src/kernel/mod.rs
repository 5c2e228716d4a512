//! The commuting square between `R_f` and `K[α]`, and the certified
//! decision procedure for the kernel of `θ_f`.
//!
//! A [`MinimalValuationSetup`] is a local ring `R`, a morphism `θ` from `R`
//! into `K = k(t)` whose induced valuation is local, and for each generator
//! `a` of `p = ker θ` a witness `(b, N)` with `θ(b) ≠ 0` and `(ba)^N = 0`.
//! For a Nagata polynomial `f` over `R` and `γ = q(x) ∈ R_f`,
//! [`kernel_decide`] certifies either `θ_f(γ) ≠ 0` or produces `ζ` with
//! `θ_f(ζ) ≠ 0` and `(ζγ)^M = 0`.

pub mod catalogue;

use serde::{Deserialize, Serialize};

use crate::arith::charpoly::char_poly;
use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ratfunc::{RatFunc, Series, Tadic};
use crate::arith::ring::{CoefficientField, Ring};
use crate::arith::valued::{Truncated, ValuedField};
use crate::arith::value::Value;
use crate::error::{Error, Result};
use crate::hensel::{Extension, PrecisionPolicy};
use crate::local::{build_rf, FPLocalRing, MPoly, RfPresentation, RingElement};

#[derive(Clone, Debug, PartialEq)]
pub struct Witness<E> {
    pub b: RingElement<E>,
    pub n: u32,
}

#[derive(Clone, Debug)]
pub struct MinimalValuationSetup<C: CoefficientField> {
    ring: FPLocalRing<C>,
    field: Tadic<C>,
    theta: Vec<RatFunc<C::Elem>>,
    prime_generators: Vec<RingElement<C::Elem>>,
    witnesses: Vec<Witness<C::Elem>>,
}

/// One verified axiom and the number of instances checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub checked: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub axioms: Vec<AxiomCheck>,
    pub sample_size: usize,
}

impl<C: CoefficientField> MinimalValuationSetup<C> {
    /// `theta[i]` is the image of variable `i`; `witnesses[i]` belongs to
    /// `prime_generators[i]`.
    pub fn new(
        ring: FPLocalRing<C>,
        theta: Vec<RatFunc<C::Elem>>,
        prime_generators: Vec<RingElement<C::Elem>>,
        witnesses: Vec<Witness<C::Elem>>,
    ) -> Result<Self> {
        if theta.len() != ring.vars().len() {
            return Err(Error::InvalidSetup {
                axiom: "theta".into(),
                element: format!("{} images for {} variables", theta.len(), ring.vars().len()),
            });
        }
        if witnesses.len() != prime_generators.len() {
            return Err(Error::InvalidSetup {
                axiom: "witnesses".into(),
                element: format!("{} witnesses for {} prime generators", witnesses.len(), prime_generators.len()),
            });
        }
        let field = Tadic::new(ring.field().clone());
        Ok(MinimalValuationSetup { ring, field, theta, prime_generators, witnesses })
    }

    pub fn ring(&self) -> &FPLocalRing<C> {
        &self.ring
    }

    pub fn field(&self) -> &Tadic<C> {
        &self.field
    }

    pub fn theta_images(&self) -> &[RatFunc<C::Elem>] {
        &self.theta
    }

    pub fn prime_generators(&self) -> &[RingElement<C::Elem>] {
        &self.prime_generators
    }

    pub fn witnesses(&self) -> &[Witness<C::Elem>] {
        &self.witnesses
    }

    pub fn theta(&self, e: &RingElement<C::Elem>) -> Result<RatFunc<C::Elem>> {
        self.ring.map_into(e, &self.field, &self.theta, |c| self.field.from_coeff(c.clone()))
    }

    /// `v(θ(e))`.
    pub fn value(&self, e: &RingElement<C::Elem>) -> Result<Value> {
        Ok(self.field.valuation(&self.theta(e)?))
    }

    /// `θ[X]`, coefficientwise.
    pub fn theta_poly(&self, p: &Poly<RingElement<C::Elem>>, var: &str) -> Result<Poly<RatFunc<C::Elem>>> {
        let coeffs = p.coeffs().iter().map(|c| self.theta(c)).collect::<Result<Vec<_>>>()?;
        Ok(PolyRing::with_var(self.field.clone(), var).from_coeffs(coeffs))
    }

    fn fail(&self, axiom: &str, e: &RingElement<C::Elem>) -> Error {
        Error::InvalidSetup { axiom: axiom.into(), element: self.ring.display(e) }
    }

    /// Checks relations, locality, the witnesses, and the valuation axioms
    /// on a deterministic sample of elements.
    pub fn validate(&self) -> Result<ValidationReport> {
        let r = &self.ring;
        let mut axioms = Vec::new();
        let mut record = |axiom: &str, checked: usize| {
            axioms.push(AxiomCheck { axiom: axiom.into(), checked, passed: true });
        };

        for g in r.generators() {
            let image = r.mpolys().eval(g, &self.field, &self.theta, |c| self.field.from_coeff(c.clone()));
            if !self.field.is_zero(&image) {
                return Err(Error::InvalidSetup { axiom: "relations".into(), element: r.display_poly(g) });
            }
        }
        record("relations", r.generators().len());

        for i in 0..r.vars().len() {
            let x = r.var(i);
            if !self.value(&x)?.is_positive() {
                return Err(self.fail("locality", &x));
            }
        }
        record("locality", r.vars().len());

        for p in &self.prime_generators {
            if !self.field.is_zero(&self.theta(p)?) {
                return Err(self.fail("prime-generators", p));
            }
        }
        record("prime-generators", self.prime_generators.len());

        for (p, w) in self.prime_generators.iter().zip(&self.witnesses) {
            if self.field.is_zero(&self.theta(&w.b)?) {
                return Err(self.fail("witnesses", &w.b));
            }
            let ba = r.mul(&w.b, p);
            if w.n == 0 || !r.is_zero(&r.pow(&ba, w.n)) {
                return Err(self.fail("witnesses", &ba));
            }
        }
        record("witnesses", self.witnesses.len());

        let sample = self.sample();
        let values = sample.iter().map(|e| self.value(e)).collect::<Result<Vec<_>>>()?;
        for (e, v) in sample.iter().zip(&values) {
            if *v < Value::ZERO {
                return Err(self.fail("nonnegativity", e));
            }
            if (*v == Value::ZERO) != r.is_unit(e) {
                return Err(self.fail("units", e));
            }
            if v.is_positive() == r.is_unit(e) {
                return Err(self.fail("maximal-ideal", e));
            }
        }
        record("nonnegativity", sample.len());
        record("units", sample.len());
        record("maximal-ideal", sample.len());

        let mut pairs = 0;
        for (i, a) in sample.iter().enumerate() {
            for (j, b) in sample.iter().enumerate().skip(i) {
                pairs += 1;
                let ab = r.mul(a, b);
                if self.value(&ab)? != values[i] + values[j] {
                    return Err(self.fail("multiplicativity", &ab));
                }
                let s = r.add(a, b);
                if self.value(&s)? < values[i].min(values[j]) {
                    return Err(self.fail("ultrametric", &s));
                }
            }
        }
        record("multiplicativity", pairs);
        record("ultrametric", pairs);

        let mut infinite = 0;
        for (e, v) in sample.iter().zip(&values) {
            if v.is_infinite() {
                infinite += 1;
                if self.minimality_witness(e).is_err() {
                    return Err(self.fail("minimality", e));
                }
            }
        }
        record("minimality", infinite);

        Ok(ValidationReport { axioms, sample_size: sample.len() })
    }

    /// Constants, variables, `1 + x_i`, `x_i + x_j`, prime generators,
    /// witnesses, and all pairwise products of those.
    fn sample(&self) -> Vec<RingElement<C::Elem>> {
        let r = &self.ring;
        let n = r.vars().len();
        let mut base = vec![r.one(), r.from_int(2)];
        for i in 0..n {
            base.push(r.var(i));
            base.push(r.add(&r.one(), &r.var(i)));
            for j in i + 1..n {
                base.push(r.add(&r.var(i), &r.var(j)));
            }
        }
        base.extend(self.prime_generators.iter().cloned());
        base.extend(self.witnesses.iter().map(|w| w.b.clone()));
        let mut sample = base.clone();
        for (i, a) in base.iter().enumerate() {
            for b in &base[i..] {
                sample.push(r.mul(a, b));
            }
        }
        sample
    }

    /// For `a ∈ p`: `(b, N)` with `θ(b) ≠ 0` and `(b·a)^N = 0`, where `b` is
    /// the product of the stored witnesses and `N` the least exponent found
    /// below the sum of the stored exponents.
    pub fn minimality_witness(&self, a: &RingElement<C::Elem>) -> Result<(RingElement<C::Elem>, u32)> {
        let r = &self.ring;
        if !self.field.is_zero(&self.theta(a)?) {
            return Err(Error::NotInPrime(r.display(a)));
        }
        if r.is_zero(a) {
            return Ok((r.one(), 1));
        }
        let b = r.product(self.witnesses.iter().map(|w| &w.b));
        let bound: u32 = self.witnesses.iter().map(|w| w.n).sum();
        let ba = r.mul(&b, a);
        let mut acc = ba.clone();
        for n in 1..=bound {
            if r.is_zero(&acc) {
                return Ok((b, n));
            }
            acc = r.mul(&acc, &ba);
        }
        Err(Error::NotInPrime(r.display(a)))
    }
}

/// `θ_f ∘ π_f = π_α ∘ θ[x]` for one Nagata polynomial `f` over `R`.
#[derive(Debug)]
pub struct CommutingSquare<C: CoefficientField> {
    setup: MinimalValuationSetup<C>,
    f: Poly<RingElement<C::Elem>>,
    rf: RfPresentation<C>,
    f1: Poly<RatFunc<C::Elem>>,
    ext: Extension<Tadic<C>>,
}

impl<C: CoefficientField> CommutingSquare<C> {
    pub fn new(setup: MinimalValuationSetup<C>, f: Poly<RingElement<C::Elem>>, policy: PrecisionPolicy) -> Result<Self> {
        let rf = build_rf(setup.ring(), &f)?;
        let f1 = setup.theta_poly(&f, "X")?;
        let ext = Extension::new(setup.field().clone(), f1.clone(), policy)?;
        Ok(CommutingSquare { setup, f, rf, f1, ext })
    }

    pub fn setup(&self) -> &MinimalValuationSetup<C> {
        &self.setup
    }

    pub fn f(&self) -> &Poly<RingElement<C::Elem>> {
        &self.f
    }

    pub fn f1(&self) -> &Poly<RatFunc<C::Elem>> {
        &self.f1
    }

    pub fn rf(&self) -> &RfPresentation<C> {
        &self.rf
    }

    pub fn extension(&self) -> &Extension<Tadic<C>> {
        &self.ext
    }

    /// `R[X]` with `X` as variable.
    pub fn poly_ring(&self) -> PolyRing<FPLocalRing<C>> {
        PolyRing::with_var(self.setup.ring().clone(), "X")
    }

    /// `γ = π_f(q(x))`, from `q` reduced modulo `f`.
    pub fn gamma(&self, q: &Poly<RingElement<C::Elem>>) -> Result<RingElement<C::Elem>> {
        Ok(self.rf.eval(&self.poly_ring().rem_monic(q, &self.f)?))
    }

    /// `θ_f(e) mod t^N` by substituting `θ` for the variables of `R` and
    /// `α` for `x`.
    pub fn theta_f(&self, e: &RingElement<C::Elem>, precision: u32) -> Result<Series<C>> {
        let field = self.setup.field();
        let mut images = self
            .setup
            .theta_images()
            .iter()
            .map(|t| field.truncate(t, precision))
            .collect::<Result<Vec<_>>>()?;
        images.push(self.ext.alpha(precision)?);
        let eval = |p: &MPoly<C::Elem>| -> Result<Series<C>> {
            let mut acc = images[0].zero_like();
            for (m, c) in p.terms() {
                let mut t = field.truncate(&field.from_coeff(c.clone()), precision)?;
                for (img, &k) in images.iter().zip(m) {
                    if k > 0 {
                        t = t.mul(&img.pow(k));
                    }
                }
                acc = acc.add(&t);
            }
            Ok(acc)
        };
        eval(e.numerator())?.div(&eval(e.denominator())?)
    }

    /// `π_α(θ[x](p)) mod t^N`: reduce `θ[X](p)` modulo `f_1`, then evaluate
    /// at `α`.
    pub fn pi_alpha(&self, p: &Poly<RingElement<C::Elem>>, precision: u32) -> Result<Series<C>> {
        let p1 = self.setup.theta_poly(p, "X")?;
        let r = self.ext.poly_ring().rem_monic(&p1, &self.f1)?;
        self.ext.eval(&r, precision)
    }

    /// Both paths around the square agree on `p(x)` modulo `t^N`.
    pub fn commutes_on(&self, p: &Poly<RingElement<C::Elem>>, precision: u32) -> Result<bool> {
        Ok(self.theta_f(&self.rf.eval(p), precision)? == self.pi_alpha(p, precision)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum KernelDecision {
    /// `θ_f(γ) ≠ 0`: its truncation at `precision = bound + 1` is nonzero
    /// with the stated valuation.
    InSf { gamma: String, branch: String, precision: u32, valuation: i64, bound: i64 },
    /// `θ_f(ζ) ≠ 0` (nonzero at `precision`, with the stated valuation) and
    /// `(ζγ)^exponent = 0` in `R_f`.
    NilpotentWitness { gamma: String, branch: String, zeta: String, exponent: u32, precision: u32, valuation: i64 },
}

pub const BRANCH_G1: &str = "g_1(0)≠0";
pub const BRANCH_H1: &str = "h_1(δ)=0";
pub const BRANCH_DELTA: &str = "δ=0";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceStep {
    pub step: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionOutcome {
    pub decision: KernelDecision,
    pub trace: Vec<TraceStep>,
}

fn finite(v: Value, what: &str) -> Result<i64> {
    v.finite().ok_or_else(|| Error::Inconsistent(format!("{what} vanishes")))
}

fn certified_precision(policy: PrecisionPolicy, bound: i64) -> Result<u32> {
    let required = bound.max(0) as u64 + 1;
    if required > policy.max as u64 {
        return Err(Error::PrecisionExhausted { required, max: policy.max });
    }
    Ok(required as u32)
}

/// Decides whether `γ = π_f(q(x))` lies outside `ker θ_f` or is killed by
/// an element outside it, following the case analysis on the
/// characteristic polynomial of `q(x)`.
pub fn kernel_decide<C: CoefficientField>(
    sq: &CommutingSquare<C>,
    q: &Poly<RingElement<C::Elem>>,
) -> Result<DecisionOutcome> {
    let setup = sq.setup();
    let r = setup.ring();
    let k_field = setup.field();
    let rx = sq.poly_ring();
    let rt = PolyRing::with_var(r.clone(), "T");
    let kt = PolyRing::with_var(k_field.clone(), "T");
    let rf = sq.rf().ring();
    let policy = sq.extension().policy();
    let mut trace = Vec::new();
    let mut note = |step: &str, detail: String| trace.push(TraceStep { step: step.into(), detail });

    let q = rx.rem_monic(q, sq.f())?;
    let gamma = sq.rf().eval(&q);
    let gamma_text = rf.display(&gamma);
    note("gamma", format!("γ = {gamma_text}, q = {} mod f = {}", rx.display(&q), rx.display(sq.f())));

    let g = char_poly(&rx, &q, sq.f())?;
    note("char_poly", format!("g(T) = {}", rt.display(&g)));
    let g1 = setup.theta_poly(&g, "T")?;
    note("theta", format!("g_1(T) = {}", kt.display(&g1)));

    let g1_0 = kt.coeff(&g1, 0);
    if !k_field.is_zero(&g1_0) {
        let bound = finite(k_field.valuation(&g1_0), "g_1(0)")?;
        let precision = certified_precision(policy, bound)?;
        let delta = sq.theta_f(&gamma, precision)?;
        let valuation = delta
            .valuation()
            .ok_or_else(|| Error::Inconsistent("θ_f(γ) vanishes below its bound".into()))?;
        note("branch", BRANCH_G1.into());
        note("certificate", format!("v(θ_f(γ)) = {valuation} ≤ v(g_1(0)) = {bound}, read at precision {precision}"));
        return Ok(DecisionOutcome {
            decision: KernelDecision::InSf {
                gamma: gamma_text,
                branch: BRANCH_G1.into(),
                precision,
                valuation: valuation as i64,
                bound,
            },
            trace,
        });
    }

    let (k, h1) = kt.split_power(&g1)?;
    note("split", format!("g_1(T) = T^{k}·h_1(T), h_1(T) = {}", kt.display(&h1)));
    let q1 = setup.theta_poly(&q, "X")?;
    let test = sq.extension().is_zero_in_extension(&q1)?;
    note(
        "zero_test",
        format!(
            "δ = θ_f(γ) {} (resultant bound {}, precision {})",
            if test.is_zero { "= 0" } else { "≠ 0" },
            test.bound,
            test.precision
        ),
    );
    let h1_0 = finite(k_field.valuation(&kt.coeff(&h1, 0)), "h_1(0)")?;

    if !test.is_zero {
        let precision = certified_precision(policy, h1_0)?;
        let delta = sq.theta_f(&gamma, precision)?;
        let valuation = delta
            .valuation()
            .ok_or_else(|| Error::Inconsistent("θ_f(γ) vanishes below its bound".into()))?;
        note("branch", BRANCH_H1.into());
        note("certificate", format!("v(θ_f(γ)) = {valuation} ≤ v(h_1(0)) = {h1_0}, read at precision {precision}"));
        return Ok(DecisionOutcome {
            decision: KernelDecision::InSf {
                gamma: gamma_text,
                branch: BRANCH_H1.into(),
                precision,
                valuation: valuation as i64,
                bound: h1_0,
            },
            trace,
        });
    }

    note("branch", BRANCH_DELTA.into());
    let h = rt.from_coeffs(g.coeffs()[k..].to_vec());
    let a = rt.from_coeffs(g.coeffs()[..k].to_vec());
    note("lift", format!("g(T) = T^{k}·h(T) + a(T), h(T) = {}, a(T) = {}", rt.display(&h), rt.display(&a)));

    let mut b = r.one();
    let mut bound = 0u32;
    for aj in a.coeffs() {
        let (bj, nj) = setup.minimality_witness(aj)?;
        b = r.mul(&b, &bj);
        bound += nj;
    }
    let ba = rt.scale(&a, &b);
    let mut n = 0;
    let mut power = rt.one();
    for e in 1..=bound.max(1) {
        power = rt.mul(&power, &ba);
        if power.is_zero() {
            n = e;
            break;
        }
    }
    if n == 0 {
        return Err(Error::Inconsistent("b·a(T) is not nilpotent within the witness bound".into()));
    }
    note("witness", format!("b = {}, (b·a(T))^{n} = 0", r.display(&b)));

    let epsilon = sq.rf().eval(&h);
    let zeta = rf.mul(&sq.rf().embed(&b), &epsilon);
    note("zeta", format!("ε = h(γ) = {}, ζ = b·ε = {}", rf.display(&epsilon), rf.display(&zeta)));

    let zg = rf.mul(&zeta, &gamma);
    let limit = k as u32 * n;
    let exponent = rf
        .is_nilpotent(&zg, limit)
        .ok_or_else(|| Error::Inconsistent("ζγ is not nilpotent within k·N".into()))?;
    note("exponent", format!("(ζγ)^{exponent} = 0, least exponent, k·N = {limit}"));

    let expected = finite(setup.value(&b)?, "θ(b)")? + h1_0;
    let precision = certified_precision(policy, expected)?;
    let image = sq.theta_f(&zeta, precision)?;
    let valuation = image
        .valuation()
        .ok_or_else(|| Error::Inconsistent("θ_f(ζ) vanishes below its bound".into()))?;
    note("certificate", format!("v(θ_f(ζ)) = {valuation} = v(θ(b)) + v(h_1(0)), read at precision {precision}"));

    Ok(DecisionOutcome {
        decision: KernelDecision::NilpotentWitness {
            gamma: gamma_text,
            branch: BRANCH_DELTA.into(),
            zeta: rf.display(&zeta),
            exponent,
            precision,
            valuation: valuation as i64,
        },
        trace,
    })
}

/// Replays a certificate: recomputes `θ_f` at the stored precision and, for
/// a nilpotency witness, the vanishing of `(ζγ)^exponent`.
pub fn verify_decision<C: CoefficientField>(d: &KernelDecision, sq: &CommutingSquare<C>) -> bool {
    replay(d, sq).unwrap_or(false)
}

fn replay<C: CoefficientField>(d: &KernelDecision, sq: &CommutingSquare<C>) -> Result<bool> {
    let rf = sq.rf().ring();
    let nonzero_with = |e: &RingElement<C::Elem>, precision: u32, valuation: i64| -> Result<bool> {
        if precision == 0 || precision > sq.extension().policy().max {
            return Ok(false);
        }
        let image = sq.theta_f(e, precision)?;
        Ok(image.valuation().map(|v| v as i64) == Some(valuation))
    };
    match d {
        KernelDecision::InSf { gamma, branch, precision, valuation, bound } => {
            let gamma = rf.parse(gamma)?;
            Ok((branch == BRANCH_G1 || branch == BRANCH_H1)
                && valuation <= bound
                && nonzero_with(&gamma, *precision, *valuation)?)
        }
        KernelDecision::NilpotentWitness { gamma, branch, zeta, exponent, precision, valuation } => {
            let gamma = rf.parse(gamma)?;
            let zeta = rf.parse(zeta)?;
            Ok(branch == BRANCH_DELTA
                && *exponent >= 1
                && nonzero_with(&zeta, *precision, *valuation)?
                && rf.is_zero(&rf.pow(&rf.mul(&zeta, &gamma), *exponent)))
        }
    }
}

impl KernelDecision {
    pub fn gamma(&self) -> &str {
        match self {
            KernelDecision::InSf { gamma, .. } | KernelDecision::NilpotentWitness { gamma, .. } => gamma,
        }
    }

    pub fn branch(&self) -> &str {
        match self {
            KernelDecision::InSf { branch, .. } | KernelDecision::NilpotentWitness { branch, .. } => branch,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::catalogue;
    use super::*;
    use crate::arith::ring::Rationals;

    fn square(name: &str, f: &str) -> CommutingSquare<Rationals> {
        let setup = catalogue::setup(name).unwrap();
        let f = setup.ring().parse_poly(f, "X").unwrap();
        CommutingSquare::new(setup, f, PrecisionPolicy::default()).unwrap()
    }

    fn decide(sq: &CommutingSquare<Rationals>, q: &str) -> KernelDecision {
        let q = sq.setup().ring().parse_poly(q, "X").unwrap();
        kernel_decide(sq, &q).unwrap().decision
    }

    #[test]
    fn domain_x_is_in_sf() {
        let sq = square("domain", "X^2+X+w");
        let d = decide(&sq, "X");
        assert_eq!(d.branch(), BRANCH_G1);
        assert!(matches!(d, KernelDecision::InSf { valuation: 1, bound: 1, precision: 2, .. }));
        assert!(verify_decision(&d, &sq));
    }

    #[test]
    fn reduced_u_is_killed_by_w_squared() {
        let sq = square("uw", "X^2+X+w");
        let d = decide(&sq, "u");
        match &d {
            KernelDecision::NilpotentWitness { zeta, exponent, .. } => {
                assert_eq!(zeta, "w^2");
                assert_eq!(*exponent, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_decision(&d, &sq));
        let KernelDecision::NilpotentWitness { gamma, branch, exponent, precision, valuation, .. } = d.clone() else {
            unreachable!()
        };
        let tampered = KernelDecision::NilpotentWitness { gamma, branch, zeta: "u".into(), exponent, precision, valuation };
        assert!(!verify_decision(&tampered, &sq));
    }

    #[test]
    fn nilpotent_u_needs_exponent_two() {
        let sq = square("u2", "X^2+X+u");
        let d = decide(&sq, "u");
        let KernelDecision::NilpotentWitness { gamma, branch, zeta, exponent, precision, valuation } = d.clone() else {
            panic!("unexpected {d:?}")
        };
        assert_eq!((zeta.as_str(), exponent), ("1", 2));
        assert!(verify_decision(&d, &sq));
        let tampered = KernelDecision::NilpotentWitness { gamma, branch, zeta, exponent: 1, precision, valuation };
        assert!(!verify_decision(&tampered, &sq));
    }

    #[test]
    fn illegal_theta_is_rejected() {
        let mut d = catalogue::descriptor("uw").unwrap();
        d.theta.insert("u".into(), crate::json::ThetaImage::Text("t".into()));
        d.prime_generators.clear();
        d.witnesses.clear();
        let err = d.build(Rationals).unwrap().validate().unwrap_err();
        assert_eq!(err, Error::InvalidSetup { axiom: "relations".into(), element: "u*w".into() });
    }

    #[test]
    fn minimality_witnesses() {
        let s = catalogue::setup("uw").unwrap();
        let r = s.ring();
        let show = |(b, n): (RingElement<_>, u32)| (r.display(&b), n);
        assert_eq!(show(s.minimality_witness(&r.parse("u").unwrap()).unwrap()), ("w".into(), 1));
        assert_eq!(show(s.minimality_witness(&r.parse("3*u").unwrap()).unwrap()), ("w".into(), 1));
        assert!(matches!(s.minimality_witness(&r.parse("w").unwrap()), Err(Error::NotInPrime(_))));
        let s2 = catalogue::setup("u2").unwrap();
        let r2 = s2.ring();
        let (b, n) = s2.minimality_witness(&r2.parse("u^2").unwrap()).unwrap();
        assert_eq!((r2.display(&b), n), ("1".into(), 1));
    }

    #[test]
    fn square_commutes_on_generators() {
        for name in catalogue::NAMES {
            for f in catalogue::nagata_polys(name).unwrap() {
                let sq = square(name, f);
                let r = sq.setup().ring();
                let mut probes: Vec<String> = r.vars().to_vec();
                probes.push("X".into());
                probes.push("X^2+3".into());
                for p in probes {
                    let p = r.parse_poly(&p, "X").unwrap();
                    assert!(sq.commutes_on(&p, 10).unwrap(), "{name} {f}");
                }
            }
        }
    }
}
