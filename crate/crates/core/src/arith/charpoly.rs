//! Characteristic polynomials of elements of `R[X]/⟨f⟩`.
//!
//! The determinant `det(T·I - M)` is computed with Berkowitz's
//! division-free algorithm, so it is valid over rings with zero divisors
//! and nilpotents.

use crate::arith::poly::{Poly, PolyRing};
use crate::arith::ring::Ring;
use crate::error::{Error, Result};

/// Matrix of multiplication by `q` on the basis `1, x, …, x^(n-1)` of
/// `R[X]/⟨f⟩`; column `j` holds the coordinates of `x^j · q`.
pub fn multiplication_matrix<R: Ring>(
    ring: &PolyRing<R>,
    q: &Poly<R::Elem>,
    f: &Poly<R::Elem>,
) -> Result<Vec<Vec<R::Elem>>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let base = ring.base();
    let mut column = ring.rem_monic(q, f)?;
    let mut m = vec![vec![base.zero(); n]; n];
    for j in 0..n {
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = ring.coeff(&column, i);
        }
        column = ring.rem_monic(&ring.mul(&column, &ring.x()), f)?;
    }
    Ok(m)
}

/// Coefficients of `det(T·I - A)`, highest degree first.
pub fn berkowitz<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> Vec<R::Elem> {
    let n = a.len();
    let mut p = vec![ring.one()];
    for k in 0..n {
        // A_{k+1} = [[A_k, c], [r, akk]]
        let akk = &a[k][k];
        let c: Vec<R::Elem> = (0..k).map(|i| a[i][k].clone()).collect();
        let r: Vec<R::Elem> = (0..k).map(|j| a[k][j].clone()).collect();
        let dot = |u: &[R::Elem], v: &[R::Elem]| {
            u.iter().zip(v).fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
        };
        // Toeplitz column: 1, -akk, -r·c, -r·A·c, …, -r·A^(k-1)·c
        let mut col = Vec::with_capacity(k + 2);
        col.push(ring.one());
        col.push(ring.neg(akk));
        let mut v = c;
        for _ in 0..k {
            col.push(ring.neg(&dot(&r, &v)));
            v = (0..k).map(|i| dot(&a[i][..k], &v)).collect();
        }
        let next: Vec<R::Elem> = (0..k + 2)
            .map(|i| {
                (0..=k.min(i)).fold(ring.zero(), |acc, j| {
                    if i - j < col.len() && j < p.len() {
                        ring.add(&acc, &ring.mul(&col[i - j], &p[j]))
                    } else {
                        acc
                    }
                })
            })
            .collect();
        p = next;
    }
    p
}

/// Characteristic polynomial of `q(x)` in `R[X]/⟨f⟩` for monic `f` of
/// degree `n`: monic of degree `n`, and `g(q(x)) = 0` in the quotient.
/// `q` is reduced modulo `f` first.
pub fn char_poly<R: Ring>(
    ring: &PolyRing<R>,
    q: &Poly<R::Elem>,
    f: &Poly<R::Elem>,
) -> Result<Poly<R::Elem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !ring.is_monic(f) {
        return Err(Error::NotMonic);
    }
    let m = multiplication_matrix(ring, q, f)?;
    let mut coeffs = berkowitz(ring.base(), &m);
    coeffs.reverse();
    Ok(ring.from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{Integers, PrimeField};
    use num_bigint::BigInt;

    fn zpoly(c: &[i64]) -> Poly<BigInt> {
        PolyRing::new(Integers).from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn char_poly_of_x_is_f() {
        let zx = PolyRing::new(Integers);
        let f = zpoly(&[7, -3, 0, 2, 1]);
        assert_eq!(char_poly(&zx, &zpoly(&[0, 1]), &f).unwrap(), f);
    }

    #[test]
    fn char_poly_of_constant_is_power() {
        let zx = PolyRing::new(Integers);
        let f = zpoly(&[5, 1, 1]);
        let expected = zx.pow(&zpoly(&[-3, 1]), 2);
        assert_eq!(char_poly(&zx, &zpoly(&[3]), &f).unwrap(), expected);
    }

    #[test]
    fn char_poly_of_x_plus_one() {
        // q = X + 1, f = X^2 + X + 5: det [[T-1, 5], [-1, T]] = T^2 - T + 5
        let zx = PolyRing::new(Integers);
        let f = zpoly(&[5, 1, 1]);
        let g = char_poly(&zx, &zpoly(&[1, 1]), &f).unwrap();
        assert_eq!(g, zpoly(&[5, -1, 1]));
        let image = zx.compose(&g, &zpoly(&[1, 1]));
        assert!(zx.rem_monic(&image, &f).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_monic_modulus() {
        let zx = PolyRing::new(Integers);
        assert_eq!(char_poly(&zx, &zpoly(&[0, 1]), &zpoly(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn works_in_positive_characteristic() {
        let f5 = PrimeField::new(5).unwrap();
        let fx = PolyRing::new(f5);
        let f = fx.from_coeffs(vec![1, 0, 3, 1]);
        let q = fx.from_coeffs(vec![2, 4, 1]);
        let g = char_poly(&fx, &q, &f).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert!(fx.rem_monic(&fx.compose(&g, &q), &f).unwrap().is_zero());
    }
}
