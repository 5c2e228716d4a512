//! Sparse multivariate polynomials ordered by a local degree ordering.
//!
//! Monomials compare first by total degree, *lower* degree being larger,
//! then lexicographically with variables in declaration order. The leading
//! monomial of a polynomial is therefore one of its lowest-degree terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::arith::ring::{format_term, join_terms, CoefficientField};
use crate::error::{Error, Result};
use crate::parse::Terms;

pub type Monomial = Vec<u32>;

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// The local degree ordering; `Greater` means `a` leads `b`.
pub fn local_cmp(a: &[u32], b: &[u32]) -> Ordering {
    degree(b).cmp(&degree(a)).then_with(|| a.cmp(b))
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Terms sorted by decreasing local order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> MPoly<E> {
    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| degree(m)).max().unwrap_or(0)
    }

    /// `max deg - deg LM`.
    pub fn ecart(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| self.total_degree() - degree(m))
    }
}

/// Arithmetic on [`MPoly`] over a coefficient field in a fixed number of
/// variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MPolyRing<C: CoefficientField> {
    field: C,
    nvars: usize,
}

impl<C: CoefficientField> MPolyRing<C> {
    pub fn new(field: C, nvars: usize) -> Self {
        MPolyRing { field, nvars }
    }

    pub fn field(&self) -> &C {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn from_map(&self, map: BTreeMap<Monomial, C::Elem>) -> MPoly<C::Elem> {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        terms.sort_by(|a, b| local_cmp(&b.0, &a.0));
        MPoly { terms }
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, C::Elem)>) -> MPoly<C::Elem> {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), self.nvars);
            let entry = map.entry(m).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, &c);
        }
        self.from_map(map)
    }

    /// Converts parsed rational terms; fails when a denominator vanishes in
    /// the coefficient field.
    pub fn from_parsed(&self, terms: &Terms) -> Result<MPoly<C::Elem>> {
        let mut out = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c: &BigRational = c;
            let e = self
                .field
                .from_rational(c)
                .ok_or_else(|| Error::Parse(format!("coefficient {c} is undefined over {}", self.field.name())))?;
            out.push((m.clone(), e));
        }
        Ok(self.from_terms(out))
    }

    pub fn zero(&self) -> MPoly<C::Elem> {
        MPoly { terms: Vec::new() }
    }

    pub fn constant(&self, c: C::Elem) -> MPoly<C::Elem> {
        self.from_terms([(vec![0; self.nvars], c)])
    }

    pub fn one(&self) -> MPoly<C::Elem> {
        self.constant(self.field.one())
    }

    pub fn var(&self, i: usize) -> MPoly<C::Elem> {
        let mut m = vec![0; self.nvars];
        m[i] = 1;
        self.from_terms([(m, self.field.one())])
    }

    pub fn constant_term(&self, p: &MPoly<C::Elem>) -> C::Elem {
        p.terms
            .iter()
            .find(|(m, _)| degree(m) == 0)
            .map_or_else(|| self.field.zero(), |(_, c)| c.clone())
    }

    /// True when `p` is a nonzero constant.
    pub fn is_constant(&self, p: &MPoly<C::Elem>) -> bool {
        p.terms.len() == 1 && degree(&p.terms[0].0) == 0
    }

    pub fn add(&self, a: &MPoly<C::Elem>, b: &MPoly<C::Elem>) -> MPoly<C::Elem> {
        self.from_terms(a.terms.iter().chain(&b.terms).cloned())
    }

    pub fn neg(&self, a: &MPoly<C::Elem>) -> MPoly<C::Elem> {
        MPoly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn sub(&self, a: &MPoly<C::Elem>, b: &MPoly<C::Elem>) -> MPoly<C::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &MPoly<C::Elem>, c: &C::Elem) -> MPoly<C::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        MPoly { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    /// `c · m · a`.
    pub fn mul_term(&self, a: &MPoly<C::Elem>, c: &C::Elem, m: &[u32]) -> MPoly<C::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(m).map(|(p, q)| p + q).collect(), self.field.mul(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &MPoly<C::Elem>, b: &MPoly<C::Elem>) -> MPoly<C::Elem> {
        let mut map: BTreeMap<Monomial, C::Elem> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = map.entry(e).or_insert_with(|| self.field.zero());
                *entry = self.field.add(entry, &self.field.mul(ca, cb));
            }
        }
        self.from_map(map)
    }

    pub fn pow(&self, a: &MPoly<C::Elem>, e: u32) -> MPoly<C::Elem> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn make_monic(&self, a: &MPoly<C::Elem>) -> MPoly<C::Elem> {
        match a.leading() {
            Some((_, c)) => self.scale(a, &self.field.inv(c).expect("nonzero leading coefficient")),
            None => a.clone(),
        }
    }

    /// `p` with every monomial padded by `extra` trailing zero exponents.
    pub fn extend(&self, p: &MPoly<C::Elem>, extra: usize) -> MPoly<C::Elem> {
        let target = MPolyRing::new(self.field.clone(), self.nvars + extra);
        target.from_terms(p.terms.iter().map(|(m, c)| {
            let mut m = m.clone();
            m.extend(std::iter::repeat_n(0, extra));
            (m, c.clone())
        }))
    }

    /// `a` with its leading term cancelled against `g`'s, i.e.
    /// `a - (LT(a)/LT(g))·g`, together with the multiplier used.
    fn reduce_leading(&self, a: &MPoly<C::Elem>, g: &MPoly<C::Elem>) -> (MPoly<C::Elem>, C::Elem, Monomial) {
        let (ma, ca) = a.leading().expect("nonzero");
        let (mg, cg) = g.leading().expect("nonzero");
        let c = self.field.div(ca, cg).expect("nonzero");
        let m = quotient(ma, mg);
        (self.sub(a, &self.mul_term(g, &c, &m)), c, m)
    }

    /// The S-polynomial of two nonzero polynomials.
    pub fn s_poly(&self, a: &MPoly<C::Elem>, b: &MPoly<C::Elem>) -> MPoly<C::Elem> {
        let (ma, ca) = a.leading().expect("nonzero");
        let (mb, cb) = b.leading().expect("nonzero");
        let l = lcm(ma, mb);
        let left = self.mul_term(a, &self.field.inv(ca).expect("nonzero"), &quotient(&l, ma));
        let right = self.mul_term(b, &self.field.inv(cb).expect("nonzero"), &quotient(&l, mb));
        self.sub(&left, &right)
    }

    /// Evaluates `p` in another ring.
    pub fn eval<S, F>(&self, p: &MPoly<C::Elem>, target: &S, images: &[S::Elem], coeff: F) -> S::Elem
    where
        S: crate::arith::ring::Ring,
        F: Fn(&C::Elem) -> S::Elem,
    {
        let mut acc = target.zero();
        for (m, c) in &p.terms {
            let mut t = coeff(c);
            for (img, &e) in images.iter().zip(m) {
                if e > 0 {
                    t = target.mul(&t, &target.pow(img, e));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    pub fn display(&self, p: &MPoly<C::Elem>, vars: &[String]) -> String {
        join_terms(p.terms.iter().map(|(m, c)| format_term(&self.field.display(c), &monomial_text(m, vars))))
    }
}

pub fn monomial_text(m: &[u32], vars: &[String]) -> String {
    m.iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// A standard basis of an ideal of `k[x]_(x)` with respect to the local
/// degree ordering, computed with Mora's tangent-cone normal form.
#[derive(Clone, Debug)]
pub struct StandardBasis<C: CoefficientField> {
    ring: MPolyRing<C>,
    elements: Vec<MPoly<C::Elem>>,
}

impl<C: CoefficientField> StandardBasis<C> {
    pub fn new(ring: MPolyRing<C>, generators: &[MPoly<C::Elem>]) -> Self {
        let mut basis = StandardBasis { ring, elements: Vec::new() };
        for g in generators.iter().filter(|g| !g.is_zero()) {
            basis.elements.push(basis.ring.make_monic(g));
        }
        let mut pairs: Vec<(usize, usize)> =
            (0..basis.elements.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            let s = basis.ring.s_poly(&basis.elements[i], &basis.elements[j]);
            let (h, _) = basis.weak_normal_form(&s);
            if !h.is_zero() {
                let n = basis.elements.len();
                basis.elements.push(basis.ring.make_monic(&h));
                pairs.extend((0..n).map(|i| (i, n)));
            }
        }
        basis
    }

    pub fn elements(&self) -> &[MPoly<C::Elem>] {
        &self.elements
    }

    pub fn ring(&self) -> &MPolyRing<C> {
        &self.ring
    }

    /// Mora's weak normal form: `(h, u)` with `u` a unit (nonzero constant
    /// term) and `u·f ≡ h` modulo the ideal. `h = 0` iff `f` lies in the
    /// ideal of the localisation.
    pub fn weak_normal_form(&self, f: &MPoly<C::Elem>) -> (MPoly<C::Elem>, MPoly<C::Elem>) {
        let ring = &self.ring;
        let mut h = f.clone();
        let mut u = ring.one();
        // Reducers: basis elements (no unit) followed by earlier remainders.
        let mut extra: Vec<(MPoly<C::Elem>, MPoly<C::Elem>)> = Vec::new();
        while let Some((lm, _)) = h.leading() {
            let from_basis = self
                .elements
                .iter()
                .filter(|g| divides(&g.leading().expect("nonzero").0, lm))
                .min_by_key(|g| g.ecart());
            let from_extra = extra
                .iter()
                .filter(|(g, _)| divides(&g.leading().expect("nonzero").0, lm))
                .min_by_key(|(g, _)| g.ecart());
            let (g, gu) = match (from_basis, from_extra) {
                (Some(b), Some((e, eu))) if e.ecart() < b.ecart() => (e.clone(), Some(eu.clone())),
                (Some(b), _) => (b.clone(), None),
                (None, Some((e, eu))) => (e.clone(), Some(eu.clone())),
                (None, None) => break,
            };
            if g.ecart() > h.ecart() {
                extra.push((h.clone(), u.clone()));
            }
            let (next, c, m) = ring.reduce_leading(&h, &g);
            if let Some(gu) = gu {
                u = ring.sub(&u, &ring.mul_term(&gu, &c, &m));
            }
            h = next;
        }
        (h, u)
    }

    pub fn contains(&self, f: &MPoly<C::Elem>) -> bool {
        self.weak_normal_form(f).0.is_zero()
    }

    /// Reduces terms after the leading one by basis elements, up to total
    /// degree `cap`. Deterministic but only canonical below the cap.
    pub fn reduce_tail(&self, f: &MPoly<C::Elem>, cap: u32) -> MPoly<C::Elem> {
        let ring = &self.ring;
        let mut h = f.clone();
        'outer: loop {
            for (m, c) in h.terms.iter().skip(1) {
                if degree(m) > cap {
                    continue;
                }
                if let Some(g) = self.elements.iter().find(|g| divides(&g.leading().expect("nonzero").0, m)) {
                    let (mg, cg) = g.leading().expect("nonzero");
                    let k = ring.field.div(c, cg).expect("nonzero");
                    let shift = quotient(m, mg);
                    h = ring.sub(&h, &ring.mul_term(g, &k, &shift));
                    continue 'outer;
                }
            }
            return h;
        }
    }
}
