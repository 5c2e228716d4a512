use hensel_core::local::build_rf;
use hensel_core::local::MPoly;
use hensel_core::{FPLocalRing, PolyRing, Rationals, Ring, RingElement};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Elem = RingElement<BigRational>;

fn ring(vars: &[&str], ideal: &[&str]) -> FPLocalRing<Rationals> {
    let vars = vars.iter().map(|s| s.to_string()).collect();
    let ideal: Vec<String> = ideal.iter().map(|s| s.to_string()).collect();
    FPLocalRing::new(Rationals, vars, &ideal).unwrap()
}

fn presentations() -> Vec<FPLocalRing<Rationals>> {
    vec![
        ring(&["w"], &[]),
        ring(&["u", "w"], &["u*w"]),
        ring(&["u"], &["u^2"]),
        ring(&["u", "w"], &["u^2"]),
        ring(&["w", "x"], &["w+x+x^2"]),
        ring(&["x", "y"], &["x^2-y^3", "x*y"]),
    ]
}

fn random_mpoly(r: &FPLocalRing<Rationals>, rng: &mut ChaCha8Rng, constant: bool) -> MPoly<BigRational> {
    let ops = r.mpolys();
    let n = r.vars().len();
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(0..=4) {
        let m: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        if constant && m.iter().all(|&e| e == 0) {
            continue;
        }
        terms.push((m, ops.field().from_int(rng.gen_range(-4..=4))));
    }
    if constant {
        terms.push((vec![0; n], ops.field().from_int(rng.gen_range(1..=3))));
    }
    ops.from_terms(terms)
}

fn random_elem(r: &FPLocalRing<Rationals>, rng: &mut ChaCha8Rng) -> Elem {
    let constant = rng.gen_bool(0.5);
    let num = random_mpoly(r, rng, constant);
    if rng.gen_bool(0.3) {
        let den = random_mpoly(r, rng, true);
        r.fraction(num, den).unwrap()
    } else {
        r.from_poly(num)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_compatible(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in presentations() {
            let a = random_elem(&r, &mut rng);
            let b = random_elem(&r, &mut rng);
            let (na, nb) = (r.normal_form(&a), r.normal_form(&b));
            prop_assert!(r.equal(&na, &a));
            prop_assert_eq!(r.normal_form(&na), na.clone());
            prop_assert!(r.equal(&r.normal_form(&r.add(&a, &b)), &r.normal_form(&r.add(&na, &nb))));
            prop_assert!(r.equal(&r.normal_form(&r.mul(&a, &b)), &r.normal_form(&r.mul(&na, &nb))));
            prop_assert!(r.is_zero(&r.sub(&a, &a)));
        }
    }

    #[test]
    fn units_are_the_elements_with_nonzero_residue(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in presentations() {
            let a = random_elem(&r, &mut rng);
            let unit = r.residue(&a) != r.field().zero();
            prop_assert_eq!(r.is_unit(&a), unit);
            if unit {
                prop_assert!(r.equal(&r.mul(&a, &r.inv(&a).unwrap()), &r.one()));
            } else {
                prop_assert!(r.inv(&a).is_err());
            }
        }
    }

    #[test]
    fn s_is_multiplicatively_closed(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = ring(&["u", "w"], &["u*w"]);
        let f = base.parse_poly("X^2+X+w", "X").unwrap();
        let rf = build_rf(&base, &f).unwrap();
        let rx = PolyRing::with_var(base.clone(), "X");
        prop_assert!(rf.in_s(&rx.one()));
        let sample = |rng: &mut ChaCha8Rng| {
            rx.from_coeffs((0..3).map(|i| {
                let c = random_elem(&base, rng);
                if i == 0 { base.add(&c, &base.one()) } else { c }
            }).collect())
        };
        let (g, h) = (sample(&mut rng), sample(&mut rng));
        if rf.in_s(&g) && rf.in_s(&h) {
            prop_assert!(rf.in_s(&rx.mul(&g, &h)));
        }
        prop_assert!(!rf.in_s(&rx.from_coeffs(vec![base.zero(), base.one()])));
    }

    #[test]
    fn reduced_presentation_stays_reduced(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = ring(&["u", "w"], &["u*w"]);
        let f = base.parse_poly("X^2+X+w", "X").unwrap();
        let rf = build_rf(&base, &f).unwrap();
        let r = rf.ring();
        let e = random_elem(r, &mut rng);
        if !r.is_zero(&e) {
            for n in 2..=4 {
                prop_assert!(!r.is_zero(&r.pow(&e, n)), "({})^{} = 0", r.display(&e), n);
            }
        }
    }
}

#[test]
fn residue_map_of_r_f() {
    for r in presentations() {
        let f = r.parse_poly(&format!("X^2+X+{}", r.vars()[0]), "X").unwrap();
        let Ok(rf) = build_rf(&r, &f) else { continue };
        let ring = rf.ring();
        for i in 0..ring.vars().len() {
            assert_eq!(ring.residue(&ring.var(i)), ring.field().zero());
        }
        assert_eq!(ring.residue(&rf.x()), ring.field().zero());
        for c in [-3, 1, 7] {
            let k = ring.field().from_int(c);
            assert_eq!(ring.residue(&ring.from_coeff(k.clone())), k);
        }
    }
}

#[test]
fn known_relations() {
    let r = ring(&["u", "w"], &["u*w"]);
    let u = r.var_named("u").unwrap();
    let w = r.var_named("w").unwrap();
    assert!(r.is_zero(&r.mul(&u, &w)));
    assert!(!r.is_zero(&r.add(&u, &w)));
    assert_eq!(r.is_nilpotent(&u, 8), None);
    let s = ring(&["u"], &["u^2"]);
    assert_eq!(s.is_nilpotent(&s.var(0), 8), Some(2));
    // in k[x]_(x)/(x - x^2) the unit 1 - x kills x
    let t = ring(&["x"], &["x-x^2"]);
    assert!(t.is_zero(&t.var(0)));
}
