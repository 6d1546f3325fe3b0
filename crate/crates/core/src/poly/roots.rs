//! Real roots of polynomials whose roots are known to be real.

use nalgebra::DMatrix;
use num::BigRational;
use serde::{Deserialize, Serialize};

use super::{to_f64, Polynomial};
use crate::error::{Error, Result};

const IMAG_TOL: f64 = 1e-6;
const NEWTON_STEPS: usize = 60;

/// Root tolerance: `CORONA_TOL` from the environment when set and valid,
/// otherwise `1e-10`.
pub fn default_tolerance() -> f64 {
    std::env::var("CORONA_TOL")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|t| t.is_finite() && *t > 0.0)
        .unwrap_or(1e-10)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    /// Distinct roots, ascending, with multiplicities.
    pub roots: Vec<(f64, usize)>,
    /// Largest `|s(r)| / ‖s‖∞` over roots `r` of the square-free parts `s`,
    /// evaluated exactly at the returned floating-point root.
    pub residual: f64,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.1).sum()
    }

    /// Roots repeated by multiplicity, ascending.
    pub fn flatten(&self) -> Vec<f64> {
        self.roots
            .iter()
            .flat_map(|&(r, m)| std::iter::repeat_n(r, m))
            .collect()
    }
}

/// Finds every root of `p`, all of which must be real.
pub fn real_roots(p: &Polynomial, tol: f64) -> Result<RootSet> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::Precondition(
            "real_roots needs a polynomial of degree at least 1".into(),
        ));
    }
    let mut roots = Vec::new();
    let mut residual: f64 = 0.0;
    for (s, mult) in p.square_free() {
        let scale = s.norm_inf();
        for r in simple_roots(&s)? {
            let res = exact_abs_eval(&s, r) / scale;
            if res > tol {
                return Err(Error::NoConvergence(format!(
                    "root {r} of {s} has relative residual {res:e} > {tol:e}"
                )));
            }
            residual = residual.max(res);
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(RootSet { roots, residual })
}

fn exact_abs_eval(s: &Polynomial, x: f64) -> f64 {
    match BigRational::from_float(x) {
        Some(q) => to_f64(&s.eval(&q)).abs(),
        None => f64::INFINITY,
    }
}

/// Roots of a square-free polynomial.
fn simple_roots(s: &Polynomial) -> Result<Vec<f64>> {
    let s = s.monic();
    let d = s.degree();
    let mut out = Vec::with_capacity(d);
    // Exact rational (in practice integer) roots first; they need no refinement.
    let mut rest = s.clone();
    for r in s.integer_roots() {
        out.push(r as f64);
        rest = rest
            .div_exact(&Polynomial::x_minus(r))
            .expect("integer root divides");
    }
    if rest.degree() == 0 {
        return Ok(out);
    }
    let estimates = companion_estimates(&rest)?;
    let ds = rest.derivative();
    for z in estimates {
        out.push(polish(&rest, &ds, z));
    }
    out.sort_by(f64::total_cmp);
    for w in out.windows(2) {
        if (w[1] - w[0]).abs() <= 1e-12 * w[0].abs().max(1.0) {
            return Err(Error::NoConvergence(format!(
                "distinct roots of {s} collapsed near {}",
                w[0]
            )));
        }
    }
    Ok(out)
}

fn companion_estimates(s: &Polynomial) -> Result<Vec<f64>> {
    let c = s.monic().to_f64_coeffs();
    let d = c.len() - 1;
    if d == 1 {
        return Ok(vec![-c[0]]);
    }
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i];
    }
    balance(&mut m);
    let eig = m.complex_eigenvalues();
    let worst = eig
        .iter()
        .map(|z| z.im.abs() / z.re.abs().max(1.0))
        .fold(0.0, f64::max);
    if worst > IMAG_TOL {
        return Err(Error::ComplexRoots(worst));
    }
    Ok(eig.iter().map(|z| z.re).collect())
}

/// Parlett–Reinsch diagonal balancing with power-of-two scaling.
fn balance(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    let radix = 2.0f64;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += m[(j, i)].abs();
                    r += m[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut cs = c;
            while cs < r / radix {
                cs *= radix * radix;
                f *= radix;
            }
            while cs > r * radix {
                cs /= radix * radix;
                f /= radix;
            }
            if (c * f + r / f) < 0.95 * s {
                done = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
    }
}

/// Newton in f64, then a few steps with the exact polynomial value so that
/// cancellation in Horner evaluation cannot stall convergence.
fn polish(s: &Polynomial, ds: &Polynomial, mut x: f64) -> f64 {
    for _ in 0..NEWTON_STEPS {
        let step = s.eval_f64(x) / ds.eval_f64(x);
        if !step.is_finite() {
            break;
        }
        let nx = x - step;
        if (nx - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            x = nx;
            break;
        }
        x = nx;
    }
    for _ in 0..3 {
        let Some(q) = BigRational::from_float(x) else { break };
        let v = s.eval(&q);
        let dv = ds.eval(&q);
        if dv == num::Zero::zero() {
            break;
        }
        let step = to_f64(&(v / dv));
        if !step.is_finite() || step == 0.0 {
            break;
        }
        x -= step;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c.iter().copied())
    }

    #[test]
    fn cubic_with_double_root() {
        let rs = real_roots(&p(&[0, 0, -3, 1]), 1e-10).unwrap();
        assert_eq!(rs.roots, vec![(0.0, 2), (3.0, 1)]);
    }

    #[test]
    fn quadratic() {
        let rs = real_roots(&p(&[-2, -1, 1]), 1e-10).unwrap();
        assert_eq!(rs.roots, vec![(-1.0, 1), (2.0, 1)]);
    }

    #[test]
    fn irrational_cubic() {
        let f = p(&[3, -6, 0, 1]);
        let rs = real_roots(&f, 1e-10).unwrap();
        assert_eq!(rs.total_multiplicity(), 3);
        for (r, _) in &rs.roots {
            assert!(f.eval_f64(*r).abs() < 1e-12);
        }
        // Vieta: sum of roots is 0, product is -3.
        let v = rs.flatten();
        assert!(v.iter().sum::<f64>().abs() < 1e-12);
        assert!((v.iter().product::<f64>() + 3.0).abs() < 1e-12);
    }

    #[test]
    fn complex_roots_rejected() {
        assert!(matches!(real_roots(&p(&[1, 0, 1]), 1e-10), Err(Error::ComplexRoots(_))));
        assert!(real_roots(&p(&[5]), 1e-10).is_err());
    }

    #[test]
    fn close_roots() {
        // x^4 - 4x^2 + 2 has roots ±sqrt(2±sqrt(2)).
        let f = p(&[2, 0, -4, 0, 1]);
        let rs = real_roots(&f, 1e-10).unwrap();
        let want = [
            -(2.0 + 2f64.sqrt()).sqrt(),
            -(2.0 - 2f64.sqrt()).sqrt(),
            (2.0 - 2f64.sqrt()).sqrt(),
            (2.0 + 2f64.sqrt()).sqrt(),
        ];
        for (got, w) in rs.flatten().iter().zip(want) {
            assert!((got - w).abs() < 1e-13);
        }
    }
}
