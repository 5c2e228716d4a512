use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ring::{CoefficientField, Ring};
use crate::error::{Error, Result};

use super::{FPLocalRing, RingElement};

/// `R_f = R[X]/⟨f⟩` localised at `S = { g(x) : g(0) a unit }`, presented as
/// `k[vars, x]_(vars, x) / (I + ⟨D·f(x)⟩)` with `D` a unit clearing the
/// denominators of `f`.
#[derive(Clone, Debug)]
pub struct RfPresentation<C: CoefficientField> {
    base: FPLocalRing<C>,
    ring: FPLocalRing<C>,
    f: Poly<RingElement<C::Elem>>,
    x_name: String,
}

/// Checks that `f` is a Nagata polynomial over `R`: monic, `a_1` a unit and
/// `a_0` in the maximal ideal.
pub fn check_nagata_over<C: CoefficientField>(base: &FPLocalRing<C>, f: &Poly<RingElement<C::Elem>>) -> Result<()> {
    let px = PolyRing::with_var(base.clone(), "X");
    let text = || px.display(f);
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::NotNagata(text()));
    }
    if !base.is_one(f.leading().expect("nonzero")) {
        return Err(Error::NotMonic);
    }
    if !base.is_unit(&px.coeff(f, 1)) || base.is_unit(&px.coeff(f, 0)) {
        return Err(Error::NotNagata(text()));
    }
    Ok(())
}

pub fn build_rf<C: CoefficientField>(
    base: &FPLocalRing<C>,
    f: &Poly<RingElement<C::Elem>>,
) -> Result<RfPresentation<C>> {
    check_nagata_over(base, f)?;
    let mut x_name = "x".to_string();
    let mut suffix = 1;
    while base.vars().contains(&x_name) {
        x_name = if suffix == 1 { "x_f".into() } else { format!("x_f{suffix}") };
        suffix += 1;
    }
    let ops = base.mpolys();
    let n = base.vars().len();
    let mut wide = Vec::new();
    for (i, a) in f.coeffs().iter().enumerate() {
        let others = f
            .coeffs()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(ops.one(), |acc, (_, b)| ops.mul(&acc, b.denominator()));
        let term = ops.extend(&ops.mul(a.numerator(), &others), 1);
        wide.extend(term.terms().iter().cloned().map(|(mut m, c)| {
            m[n] = i as u32;
            (m, c)
        }));
    }
    let mut vars = base.vars().to_vec();
    vars.push(x_name.clone());
    let target = super::MPolyRing::new(base.field().clone(), n + 1);
    let relation = target.from_terms(wide);
    let mut generators: Vec<_> = base.generators().iter().map(|g| ops.extend(g, 1)).collect();
    generators.push(relation);
    let ring = FPLocalRing::from_generators(base.field().clone(), vars, generators)?;
    Ok(RfPresentation { base: base.clone(), ring, f: f.clone(), x_name })
}

impl<C: CoefficientField> RfPresentation<C> {
    pub fn base(&self) -> &FPLocalRing<C> {
        &self.base
    }

    /// `R_f` itself.
    pub fn ring(&self) -> &FPLocalRing<C> {
        &self.ring
    }

    pub fn f(&self) -> &Poly<RingElement<C::Elem>> {
        &self.f
    }

    pub fn x_name(&self) -> &str {
        &self.x_name
    }

    /// The class of `X`.
    pub fn x(&self) -> RingElement<C::Elem> {
        self.ring.var(self.base.vars().len())
    }

    /// `π_f: R → R_f`.
    pub fn embed(&self, e: &RingElement<C::Elem>) -> RingElement<C::Elem> {
        let ops = self.base.mpolys();
        self.ring
            .fraction(ops.extend(e.numerator(), 1), ops.extend(e.denominator(), 1))
            .expect("units stay units")
    }

    /// `g(x)` for `g` over `R`.
    pub fn eval(&self, g: &Poly<RingElement<C::Elem>>) -> RingElement<C::Elem> {
        let x = self.x();
        g.coeffs()
            .iter()
            .rev()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&self.ring.mul(&acc, &x), &self.embed(c)))
    }

    /// Membership of `g(x)` in `S`: `g(0)` is a unit of `R`.
    pub fn in_s(&self, g: &Poly<RingElement<C::Elem>>) -> bool {
        g.coeffs().first().is_some_and(|c| self.base.is_unit(c))
    }
}
