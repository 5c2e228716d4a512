//! Newton polygons of polynomials over a valuated field.
//!
//! The polygon of `g = b_0 + b_1 X + … + b_n X^n` is the lower convex hull
//! of the points `(i, v(b_i))`. Zero coefficients have value `∞` and are
//! never vertices. Points lying in the interior of a segment are not
//! vertices either. A segment of horizontal length one is an *isolated
//! slope*: it accounts for exactly one root, whose valuation is the negated
//! slope.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::arith::poly::Poly;
use crate::arith::valued::ValuedField;
use crate::arith::value::Value;
use crate::error::{Error, Result};

pub type Slope = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonPoint {
    pub index: usize,
    pub value: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: PolygonPoint,
    pub end: PolygonPoint,
    #[serde(serialize_with = "serialize_slope")]
    pub slope: Slope,
    pub length: usize,
}

fn serialize_slope<S: Serializer>(slope: &Slope, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&slope.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    degree: usize,
    vertices: Vec<PolygonPoint>,
    segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// Polygon of the coefficient values `v(b_0), …, v(b_n)`. Trailing `∞`
    /// entries (vanishing leading coefficients) are dropped.
    pub fn from_values(values: &[Value]) -> Result<Self> {
        let points: Vec<PolygonPoint> = values
            .iter()
            .enumerate()
            .filter_map(|(index, v)| v.finite().map(|value| PolygonPoint { index, value }))
            .collect();
        let degree = points.last().ok_or(Error::ZeroPolynomial)?.index;

        let mut hull: Vec<PolygonPoint> = Vec::with_capacity(points.len());
        for p in points {
            while hull.len() >= 2 && !turns_up(hull[hull.len() - 2], hull[hull.len() - 1], p) {
                hull.pop();
            }
            hull.push(p);
        }
        let segments = hull
            .windows(2)
            .map(|w| {
                let length = w[1].index - w[0].index;
                Segment {
                    start: w[0],
                    end: w[1],
                    slope: Slope::new(w[1].value - w[0].value, length as i64),
                    length,
                }
            })
            .collect();
        Ok(NewtonPolygon { degree, vertices: hull, segments })
    }

    pub fn vertices(&self) -> &[PolygonPoint] {
        &self.vertices
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Segments of horizontal length one, as `(k, slope)` where the segment
    /// joins `(k, v(b_k))` and `(k+1, v(b_{k+1}))`.
    pub fn isolated_slopes(&self) -> Vec<(usize, Slope)> {
        self.segments.iter().filter(|s| s.length == 1).map(|s| (s.start.index, s.slope)).collect()
    }

    /// `v(b_k) - v(b_{k+1})`: the valuation of the unique root attached to
    /// the isolated slope starting at `k`.
    pub fn root_valuation(&self, k: usize) -> Result<Value> {
        self.segments
            .iter()
            .find(|s| s.length == 1 && s.start.index == k)
            .map(|s| Value::Finite(s.start.value - s.end.value))
            .ok_or(Error::NotIsolated(k))
    }

    /// Plain-text `index value` lines of the vertices, for external plotting.
    pub fn coordinate_dump(&self) -> String {
        self.vertices.iter().map(|p| format!("{} {}\n", p.index, p.value)).collect()
    }
}

/// True when `b` lies strictly below the segment from `a` to `c`.
fn turns_up(a: PolygonPoint, b: PolygonPoint, c: PolygonPoint) -> bool {
    let (ax, ay) = (a.index as i128, a.value as i128);
    let (bx, by) = (b.index as i128, b.value as i128);
    let (cx, cy) = (c.index as i128, c.value as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0
}

/// Newton polygon of a nonzero polynomial over a valuated field.
pub fn compute_polygon<K: ValuedField>(g: &Poly<K::Elem>, field: &K) -> Result<NewtonPolygon> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let values: Vec<Value> = g.coeffs().iter().map(|c| field.valuation(c)).collect();
    NewtonPolygon::from_values(&values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::PolyRing;
    use crate::arith::ring::Ring;
    use crate::arith::valued::Padic;

    fn fin(v: &[i64]) -> Vec<Value> {
        v.iter().map(|&x| Value::Finite(x)).collect()
    }

    fn pt(index: usize, value: i64) -> PolygonPoint {
        PolygonPoint { index, value }
    }

    #[test]
    fn six_point_polygon() {
        let p = NewtonPolygon::from_values(&fin(&[5, 3, -2, -3, 1, 0])).unwrap();
        assert_eq!(p.vertices(), &[pt(0, 5), pt(2, -2), pt(3, -3), pt(5, 0)]);
        assert_eq!(p.isolated_slopes(), vec![(2, Slope::from_integer(-1))]);
        assert_eq!(p.root_valuation(2), Ok(Value::Finite(1)));
        assert_eq!(p.root_valuation(0), Err(Error::NotIsolated(0)));
    }

    #[test]
    fn lone_leading_coefficient() {
        let mut values = vec![Value::Infinity; 4];
        values.push(Value::ZERO);
        let p = NewtonPolygon::from_values(&values).unwrap();
        assert_eq!(p.vertices(), &[pt(4, 0)]);
        assert!(p.segments().is_empty());
        assert!(p.isolated_slopes().is_empty());
    }

    #[test]
    fn collinear_points_are_not_vertices() {
        let p = NewtonPolygon::from_values(&fin(&[2, 1, 0])).unwrap();
        assert_eq!(p.vertices(), &[pt(0, 2), pt(2, 0)]);
        assert!(p.isolated_slopes().is_empty());
    }

    #[test]
    fn quadratic_over_q5() {
        let q5 = Padic::new(5).unwrap();
        let qx = PolyRing::new(q5.clone());
        let g = qx.from_coeffs(vec![q5.from_int(5), q5.from_int(1), q5.from_int(1)]);
        let p = compute_polygon(&g, &q5).unwrap();
        assert_eq!(p.vertices(), &[pt(0, 1), pt(1, 0), pt(2, 0)]);
        assert_eq!(
            p.isolated_slopes(),
            vec![(0, Slope::from_integer(-1)), (1, Slope::from_integer(0))]
        );
        assert_eq!(p.root_valuation(0), Ok(Value::Finite(1)));
        assert_eq!(p.root_valuation(1), Ok(Value::ZERO));
        assert_eq!(compute_polygon(&qx.zero(), &q5), Err(Error::ZeroPolynomial));
    }
}
