//! Finitely presented local rings `k[x_1..x_m]_(x_1..x_m) / I` and the
//! one-step extension `R_f`.
//!
//! Elements are fractions `num/den` of polynomials with `den(0) ≠ 0`.
//! Arithmetic keeps numerators unreduced, so results stay readable; zero
//! testing goes through the weak normal form against a local standard basis
//! of `I`. A global Gröbner basis would not do: in the localisation an
//! element such as `u·X` may vanish because `u·X·(1+X)` lies in `I`.

mod mpoly;
mod rf;

use std::fmt;
use std::sync::Arc;

pub use mpoly::{degree, local_cmp, monomial_text, MPoly, MPolyRing, Monomial, StandardBasis};
pub use rf::{build_rf, RfPresentation};

use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ring::{CoefficientField, Field, Ring};
use crate::error::{Error, Result};
use crate::parse::{parse_polynomial, split_fraction};

const TAIL_ROUNDS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement<E> {
    num: MPoly<E>,
    den: MPoly<E>,
}

impl<E> RingElement<E> {
    pub fn numerator(&self) -> &MPoly<E> {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly<E> {
        &self.den
    }
}

struct Inner<C: CoefficientField> {
    field: C,
    vars: Vec<String>,
    generators: Vec<MPoly<C::Elem>>,
    basis: StandardBasis<C>,
}

/// `k[vars]` localised at the origin, modulo an ideal contained in the
/// maximal ideal. Cheap to clone.
#[derive(Clone)]
pub struct FPLocalRing<C: CoefficientField> {
    inner: Arc<Inner<C>>,
}

impl<C: CoefficientField> fmt::Debug for FPLocalRing<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl<C: CoefficientField> PartialEq for FPLocalRing<C> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.generators == other.inner.generators)
    }
}

fn check_var_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_');
    if !ok {
        return Err(Error::InvalidRing(format!("`{name}` is not a variable name")));
    }
    if name == "X" || name == "T" || name == "t" {
        return Err(Error::InvalidRing(format!("`{name}` is reserved")));
    }
    Ok(())
}

impl<C: CoefficientField> FPLocalRing<C> {
    /// Parses the ideal generators over `vars`.
    pub fn new(field: C, vars: Vec<String>, ideal: &[String]) -> Result<Self> {
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        let mpolys = MPolyRing::new(field.clone(), vars.len());
        let generators = ideal
            .iter()
            .map(|g| mpolys.from_parsed(&parse_polynomial(g, &names)?))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(field, vars, generators)
    }

    pub fn from_generators(field: C, vars: Vec<String>, generators: Vec<MPoly<C::Elem>>) -> Result<Self> {
        for v in &vars {
            check_var_name(v)?;
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
        }
        let mpolys = MPolyRing::new(field.clone(), vars.len());
        if let Some(g) = generators.iter().find(|g| !field.is_zero(&mpolys.constant_term(g))) {
            return Err(Error::InvalidRing(format!(
                "generator {} has a nonzero constant term",
                mpolys.display(g, &vars)
            )));
        }
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let basis = StandardBasis::new(mpolys, &generators);
        Ok(FPLocalRing { inner: Arc::new(Inner { field, vars, generators, basis }) })
    }

    pub fn field(&self) -> &C {
        &self.inner.field
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn generators(&self) -> &[MPoly<C::Elem>] {
        &self.inner.generators
    }

    pub fn basis(&self) -> &StandardBasis<C> {
        &self.inner.basis
    }

    pub fn mpolys(&self) -> &MPolyRing<C> {
        self.inner.basis.ring()
    }

    /// `Q[u,w]_(u,w)/(u*w)`.
    pub fn describe(&self) -> String {
        let vars = self.vars().join(",");
        let gens: Vec<String> = self.generators().iter().map(|g| self.mpolys().display(g, self.vars())).collect();
        let base = format!("{}[{vars}]_({vars})", self.field().name());
        if gens.is_empty() {
            base
        } else {
            format!("{base}/({})", gens.join(","))
        }
    }

    pub fn var(&self, i: usize) -> RingElement<C::Elem> {
        self.from_poly(self.mpolys().var(i))
    }

    pub fn var_named(&self, name: &str) -> Result<RingElement<C::Elem>> {
        let i = self
            .vars()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        Ok(self.var(i))
    }

    pub fn from_coeff(&self, c: C::Elem) -> RingElement<C::Elem> {
        self.from_poly(self.mpolys().constant(c))
    }

    pub fn from_poly(&self, p: MPoly<C::Elem>) -> RingElement<C::Elem> {
        self.make(p, self.mpolys().one())
    }

    /// `num/den`; `den` must be a unit.
    pub fn fraction(&self, num: MPoly<C::Elem>, den: MPoly<C::Elem>) -> Result<RingElement<C::Elem>> {
        if self.field().is_zero(&self.mpolys().constant_term(&den)) {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(self.make(num, den))
    }

    /// Normalises the denominator to constant term 1 (to 1 when constant)
    /// and collapses members of the ideal to zero.
    fn make(&self, num: MPoly<C::Elem>, den: MPoly<C::Elem>) -> RingElement<C::Elem> {
        let ring = self.mpolys();
        if num.is_zero() || self.basis().contains(&num) {
            return RingElement { num: ring.zero(), den: ring.one() };
        }
        let c = self.field().inv(&ring.constant_term(&den)).expect("unit denominator");
        let num = ring.scale(&num, &c);
        let den = if ring.is_constant(&den) { ring.one() } else { ring.scale(&den, &c) };
        RingElement { num, den }
    }

    fn parse_poly_text(&self, text: &str) -> Result<MPoly<C::Elem>> {
        let names: Vec<&str> = self.vars().iter().map(String::as_str).collect();
        self.mpolys().from_parsed(&parse_polynomial(text, &names)?)
    }

    /// Parses `p` or `(p)/(q)`.
    pub fn parse(&self, text: &str) -> Result<RingElement<C::Elem>> {
        match split_fraction(text) {
            Some((n, d)) => self.fraction(self.parse_poly_text(n)?, self.parse_poly_text(d)?),
            None => Ok(self.from_poly(self.parse_poly_text(text)?)),
        }
    }

    /// Parses a polynomial over this ring in the extra variable `var`.
    pub fn parse_poly(&self, text: &str, var: &str) -> Result<Poly<RingElement<C::Elem>>> {
        let mut names: Vec<&str> = self.vars().iter().map(String::as_str).collect();
        names.push(var);
        let terms = parse_polynomial(text, &names)?;
        let n = self.vars().len();
        let deg = terms.keys().map(|m| m[n] as usize).max().unwrap_or(0);
        let mut buckets = vec![Vec::new(); deg + 1];
        for (m, c) in &terms {
            let e = self
                .field()
                .from_rational(c)
                .ok_or_else(|| Error::Parse(format!("coefficient {c} is undefined over {}", self.field().name())))?;
            buckets[m[n] as usize].push((m[..n].to_vec(), e));
        }
        let coeffs = buckets.into_iter().map(|b| self.from_poly(self.mpolys().from_terms(b))).collect();
        Ok(PolyRing::with_var(self.clone(), var).from_coeffs(coeffs))
    }

    /// The value of `e` in the residue field.
    pub fn residue(&self, e: &RingElement<C::Elem>) -> C::Elem {
        let ring = self.mpolys();
        self.field()
            .div(&ring.constant_term(&e.num), &ring.constant_term(&e.den))
            .expect("unit denominator")
    }

    pub fn is_unit(&self, e: &RingElement<C::Elem>) -> bool {
        !self.field().is_zero(&self.mpolys().constant_term(&e.num))
    }

    pub fn inv(&self, e: &RingElement<C::Elem>) -> Result<RingElement<C::Elem>> {
        if !self.is_unit(e) {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(self.make(e.den.clone(), e.num.clone()))
    }

    /// A representative with numerator in weak normal form and tail reduced
    /// until stable; the unit from the normal form moves into the
    /// denominator.
    pub fn normal_form(&self, e: &RingElement<C::Elem>) -> RingElement<C::Elem> {
        let ring = self.mpolys();
        let (h, u) = self.basis().weak_normal_form(&e.num);
        if h.is_zero() {
            return self.zero();
        }
        // Tail reduction can raise the degree, so repeat with the new degree
        // as cap until nothing changes. Presentations like (x - x^2*y) never
        // settle; those stop after a fixed number of rounds.
        let mut h = h;
        for _ in 0..TAIL_ROUNDS {
            let next = self.basis().reduce_tail(&h, h.total_degree());
            if next == h {
                break;
            }
            h = next;
        }
        self.make(h, ring.mul(&u, &e.den))
    }

    /// Least `N ≤ max_n` with `e^N = 0`.
    pub fn is_nilpotent(&self, e: &RingElement<C::Elem>, max_n: u32) -> Option<u32> {
        let mut acc = e.clone();
        for n in 1..=max_n {
            if self.is_zero(&acc) {
                return Some(n);
            }
            acc = self.mul(&acc, e);
        }
        None
    }

    /// Image under the morphism sending variable `i` to `images[i]`.
    pub fn map_into<F: Field>(
        &self,
        e: &RingElement<C::Elem>,
        target: &F,
        images: &[F::Elem],
        coeff: impl Fn(&C::Elem) -> F::Elem,
    ) -> Result<F::Elem> {
        let num = self.mpolys().eval(&e.num, target, images, &coeff);
        let den = self.mpolys().eval(&e.den, target, images, &coeff);
        target.div(&num, &den).ok_or(Error::DivisionByZero)
    }

    pub fn display_poly(&self, p: &MPoly<C::Elem>) -> String {
        self.mpolys().display(p, self.vars())
    }
}

impl<C: CoefficientField> Ring for FPLocalRing<C> {
    type Elem = RingElement<C::Elem>;

    fn zero(&self) -> Self::Elem {
        RingElement { num: self.mpolys().zero(), den: self.mpolys().one() }
    }

    fn one(&self) -> Self::Elem {
        self.from_poly(self.mpolys().one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_coeff(self.field().from_int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ring = self.mpolys();
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            return self.make(ring.add(&a.num, &b.num), a.den.clone());
        }
        let num = ring.add(&ring.mul(&a.num, &b.den), &ring.mul(&b.num, &a.den));
        self.make(num, ring.mul(&a.den, &b.den))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RingElement { num: self.mpolys().neg(&a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ring = self.mpolys();
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        self.make(ring.mul(&a.num, &b.num), ring.mul(&a.den, &b.den))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero() || self.basis().contains(&a.num)
    }

    fn display(&self, a: &Self::Elem) -> String {
        let num = self.display_poly(&a.num);
        if self.mpolys().is_constant(&a.den) {
            num
        } else {
            format!("({num})/({})", self.display_poly(&a.den))
        }
    }
}
