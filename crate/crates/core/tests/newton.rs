mod common;

use hensel_core::newton::Slope;
use hensel_core::{compute_polygon, NewtonPolygon, Padic, PolyRing, Rationals, Ring, Tadic, Value, ValuedField};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn values() -> impl Strategy<Value = Vec<Value>> {
    let entry = prop_oneof![1 => Just(Value::Infinity), 4 => (-5i64..=5).prop_map(Value::Finite)];
    (proptest::collection::vec(entry, 0..8), -5i64..=5).prop_map(|(mut v, lead)| {
        v.push(Value::Finite(lead));
        v
    })
}

fn segment_multiset(p: &NewtonPolygon) -> Vec<(Slope, usize)> {
    let mut out: Vec<(Slope, usize)> = Vec::new();
    for s in p.segments() {
        match out.iter_mut().find(|(slope, _)| *slope == s.slope) {
            Some(entry) => entry.1 += s.length,
            None => out.push((s.slope, s.length)),
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn agrees_with_brute_force(values in values()) {
        let polygon = NewtonPolygon::from_values(&values).unwrap();
        let got: Vec<(usize, i64)> = polygon.vertices().iter().map(|p| (p.index, p.value)).collect();
        prop_assert_eq!(brute_force_hulls(&values), vec![got]);
    }

    #[test]
    fn lengths_cover_the_finite_range(values in values()) {
        let polygon = NewtonPolygon::from_values(&values).unwrap();
        let first = values.iter().position(|v| !v.is_infinite()).unwrap();
        let total: usize = polygon.segments().iter().map(|s| s.length).sum();
        prop_assert_eq!(total, polygon.degree() - first);
    }

    #[test]
    fn polygon_of_product_merges_segments(
        a in values(),
        b in values(),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = Padic::new(5).unwrap();
        let kx = PolyRing::new(k.clone());
        let make = |v: &[Value], rng: &mut ChaCha8Rng| {
            kx.from_coeffs(v.iter().map(|x| k.with_value(x.finite(), rng)).collect())
        };
        let (g1, g2) = (make(&a, &mut rng), make(&b, &mut rng));
        let p1 = compute_polygon(&g1, &k).unwrap();
        let p2 = compute_polygon(&g2, &k).unwrap();
        let p12 = compute_polygon(&kx.mul(&g1, &g2), &k).unwrap();
        let mut merged = segment_multiset(&p1);
        for (slope, len) in segment_multiset(&p2) {
            match merged.iter_mut().find(|(s, _)| *s == slope) {
                Some(entry) => entry.1 += len,
                None => merged.push((slope, len)),
            }
        }
        merged.sort();
        prop_assert_eq!(segment_multiset(&p12), merged);
    }

    #[test]
    fn isolated_slopes_give_root_valuations(values in values()) {
        let polygon = NewtonPolygon::from_values(&values).unwrap();
        for (k, slope) in polygon.isolated_slopes() {
            let rv = polygon.root_valuation(k).unwrap();
            prop_assert_eq!(rv, Value::Finite(-slope.to_integer()));
            prop_assert_eq!(rv, Value::Finite(values[k].finite().unwrap() - values[k + 1].finite().unwrap()));
        }
    }
}

#[test]
fn polygon_over_rational_functions() {
    let k = Tadic::new(Rationals);
    let kx = PolyRing::new(k.clone());
    // t^3 + X/t + X^2
    let g = kx.from_coeffs(vec![k.uniformiser_power(3), k.uniformiser_power(-1), k.one()]);
    let p = compute_polygon(&g, &k).unwrap();
    let got: Vec<(usize, i64)> = p.vertices().iter().map(|v| (v.index, v.value)).collect();
    assert_eq!(got, [(0, 3), (1, -1), (2, 0)]);
    assert_eq!(p.root_valuation(0), Ok(Value::Finite(4)));
    assert_eq!(p.root_valuation(1), Ok(Value::Finite(-1)));
    assert!(compute_polygon(&kx.zero(), &k).is_err());
}
