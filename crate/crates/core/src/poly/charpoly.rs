//! Exact characteristic polynomials and determinants of integer matrices.

use num::{BigInt, BigRational, One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::graph::IntMatrix;

fn require_square(m: &IntMatrix) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence over the integers.
///
/// `M_k = M·M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(M·M_k) / k`; every division
/// is exact. `M` is kept as sparse rows since graph matrices are sparse.
pub fn char_poly_exact(m: &IntMatrix) -> Result<Polynomial> {
    let n = require_square(m)?;
    let sparse: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .collect()
        })
        .collect();
    // c[k] is the coefficient of x^k.
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = vec![BigInt::zero(); n * n];
    let mut prod = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = prod_{k-1} + c_{n-k+1} I where prod_{k-1} = M·M_{k-1}.
        if k == 1 {
            mk.iter_mut().for_each(|v| v.set_zero());
        } else {
            std::mem::swap(&mut mk, &mut prod);
        }
        for i in 0..n {
            mk[i * n + i] += &c[n - k + 1];
        }
        // prod = M·M_k
        for (i, row) in sparse.iter().enumerate() {
            let out = &mut prod[i * n..(i + 1) * n];
            out.iter_mut().for_each(|v| v.set_zero());
            for &(j, a) in row {
                let src = &mk[j * n..(j + 1) * n];
                for (o, s) in out.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *o += s * a;
                    }
                }
            }
        }
        let tr: BigInt = (0..n).map(|i| &prod[i * n + i]).sum();
        c[n - k] = -(tr / BigInt::from(k));
    }
    Ok(Polynomial::from_ints(c))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt> {
    let n = require_square(m)?;
    let a: Vec<BigInt> = m.as_slice().iter().map(|&v| BigInt::from(v)).collect();
    Ok(bareiss(a, n))
}

fn bareiss(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// `det(tI - M)` at an exact rational point, computed by Bareiss on the
/// scaled integer matrix `q·t·I - q·M` for `t = p/q`.
pub fn char_poly_at(m: &IntMatrix, t: &BigRational) -> Result<BigRational> {
    let n = require_square(m)?;
    let (p, q) = (t.numer().clone(), t.denom().clone());
    let mut a: Vec<BigInt> = m.as_slice().iter().map(|&v| -(&q * v)).collect();
    for i in 0..n {
        a[i * n + i] += &p;
    }
    let det = bareiss(a, n);
    Ok(BigRational::new(det, num::pow(q, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::poly::rat;

    #[test]
    fn small_examples() {
        let k2 = named::complete(2).adjacency_matrix();
        assert_eq!(char_poly_exact(&k2).unwrap(), Polynomial::from_ints([-1, 0, 1]));
        let l4 = named::complete(4).laplacian_matrix();
        let want = Polynomial::x() * Polynomial::x_minus(4).pow(3);
        assert_eq!(char_poly_exact(&l4).unwrap(), want);
        let k33 = named::complete_bipartite(3, 3).adjacency_matrix();
        assert_eq!(
            char_poly_exact(&k33).unwrap(),
            Polynomial::from_ints([0, 0, 0, 0, -9, 0, 1])
        );
    }

    #[test]
    fn agrees_with_bareiss_at_integer_points() {
        let g = named::petersen();
        let a = g.signless_laplacian_matrix();
        let f = char_poly_exact(&a).unwrap();
        for k in -10..10 {
            assert_eq!(f.eval(&rat(k)), char_poly_at(&a, &rat(k)).unwrap());
        }
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_rows(&[vec![0, 2, 1], vec![1, 0, 3], vec![4, 5, 0]]).unwrap();
        // 0(0-15) - 2(0-12) + 1(5-0) = 29
        assert_eq!(det_bareiss(&m).unwrap(), BigInt::from(29));
        let z = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(det_bareiss(&z).unwrap().is_zero());
        let r = IntMatrix::from_rows(&[vec![1, 2, 3]]).unwrap();
        assert!(matches!(char_poly_exact(&r), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn rational_point() {
        let a = named::complete(2).adjacency_matrix();
        // det(tI - A) = t^2 - 1 at t = 1/2 is -3/4.
        let t = BigRational::new(1.into(), 2.into());
        assert_eq!(char_poly_at(&a, &t).unwrap(), BigRational::new((-3).into(), 4.into()));
    }
}
