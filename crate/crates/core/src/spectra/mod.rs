//! Coronals, Hoffman polynomials and closed-form composite spectra.

mod factorization;
pub mod printed;

use nalgebra::{DMatrix, DVector};
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix, MatrixKind};
use crate::oracle;
use crate::poly::{char_poly_exact, rat, Polynomial, RationalFunction};

pub(crate) use factorization::group_product;
pub use factorization::{
    spectrum, spectrum_cec, spectrum_cenc, spectrum_cvc, spectrum_kpq_variants, RawTerm,
    SpectralFactorization, TermRole,
};

/// Eigenvalues with multiplicities, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub matrix_kind: MatrixKind,
    pub values: Vec<(f64, usize)>,
}

impl Spectrum {
    /// Clusters raw eigenvalues at [`oracle::CLUSTER_TOL`].
    pub fn from_values(matrix_kind: MatrixKind, mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum {
            matrix_kind,
            values: oracle::cluster(&values, oracle::CLUSTER_TOL),
        }
    }

    /// Numeric spectrum of `g` from the Jacobi oracle.
    pub fn of_graph(g: &Graph, kind: MatrixKind) -> Result<Self> {
        let e = oracle::symmetric_eigenvalues(&g.matrix(kind))?;
        Ok(Self::from_values(kind, e.values))
    }

    pub fn order(&self) -> usize {
        self.values.iter().map(|v| v.1).sum()
    }

    pub fn flatten(&self) -> Vec<f64> {
        self.values
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }
}

/// Which closed form produced a coronal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoronalSource {
    /// `n/(x-r)`, `n/x` or `n/(x-2r)`.
    Regular,
    /// `((p+q)x + 2pq)/(x² - pq)`.
    CompleteBipartite,
    /// From exact characteristic polynomials of `M` and `M - J`.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coronal {
    pub rf: RationalFunction,
    pub source: CoronalSource,
}

/// Coronal of an `r`-regular graph on `n` vertices.
pub fn coronal_regular(n: usize, r: usize, kind: MatrixKind) -> Coronal {
    let pole = match kind {
        MatrixKind::A => r as i64,
        MatrixKind::L => 0,
        MatrixKind::Q => 2 * r as i64,
    };
    let rf = RationalFunction::new(
        Polynomial::constant(rat(n as i64)),
        Polynomial::x_minus(pole),
    )
    .expect("x - pole is nonzero");
    Coronal {
        rf,
        source: CoronalSource::Regular,
    }
}

/// Adjacency coronal of `K_{p,q}`.
pub fn coronal_kpq(p: usize, q: usize) -> Coronal {
    let (p, q) = (p as i64, q as i64);
    let rf = RationalFunction::new(
        Polynomial::from_ints([2 * p * q, p + q]),
        Polynomial::from_ints([-p * q, 0, 1]),
    )
    .expect("x² - pq is nonzero");
    Coronal {
        rf,
        source: CoronalSource::CompleteBipartite,
    }
}

/// Exact coronal of any integer matrix by the determinant lemma:
/// `det(xI - M + J) = f(M, x) (1 + χ(x))`.
pub fn coronal_exact(m: &IntMatrix) -> Result<Coronal> {
    let f = char_poly_exact(m)?;
    let g = char_poly_exact(&m.sub_constant(1))?;
    let rf = RationalFunction::new(&g - &f, f)?;
    Ok(Coronal {
        rf,
        source: CoronalSource::Exact,
    })
}

/// Sum of the entries of `(xI - M)^{-1}` by an LU solve.
pub fn coronal_numeric(m: &IntMatrix, x: f64) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let a = DMatrix::from_fn(n, n, |i, j| {
        let v = -(m[(i, j)] as f64);
        if i == j {
            v + x
        } else {
            v
        }
    });
    let lu = a.lu();
    let u = lu.u();
    let scale = u.iter().fold(0.0f64, |s, v| s.max(v.abs())).max(1.0);
    if (0..n).any(|i| u[(i, i)].abs() <= 1e-13 * scale) {
        return Err(Error::Singular);
    }
    let y = lu
        .solve(&DVector::from_element(n, 1.0))
        .ok_or(Error::Singular)?;
    Ok(y.sum())
}

/// Regular factor graph `G1` described by `(n, m, r)` and the exact
/// characteristic polynomial of its adjacency matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularProfile {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub charpoly: Polynomial,
}

impl RegularProfile {
    pub fn new(n: usize, r: usize, charpoly: Polynomial) -> Result<Self> {
        if charpoly.degree() != n || !charpoly.is_monic() {
            return Err(Error::Precondition(format!(
                "adjacency characteristic polynomial must be monic of degree {n}"
            )));
        }
        if !(n * r).is_multiple_of(2) {
            return Err(Error::NotRegular(format!("n r = {} is odd", n * r)));
        }
        if charpoly.root_multiplicity(&rat(r as i64)) == 0 {
            return Err(Error::Precondition(format!("{r} is not an eigenvalue")));
        }
        Ok(RegularProfile {
            n,
            m: n * r / 2,
            r,
            charpoly,
        })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        let r = g.regularity().r.ok_or_else(|| {
            let d = g.degrees();
            let (lo, hi) = (d.iter().min(), d.iter().max());
            Error::NotRegular(format!("degrees range over {lo:?}..={hi:?}"))
        })?;
        Self::new(g.order(), r, char_poly_exact(&g.adjacency_matrix())?)
    }
}

/// Hoffman polynomial `P` with `P(A) = J`: `P(r) = n` and `P(λ) = 0` at every
/// other distinct eigenvalue. Built exactly from the square-free part of the
/// characteristic polynomial, so irrational eigenvalues need no numerics.
pub fn hoffman_poly(profile: &RegularProfile) -> Result<Polynomial> {
    let r = rat(profile.r as i64);
    let radical = profile
        .charpoly
        .square_free()
        .into_iter()
        .fold(Polynomial::one(), |acc, (s, _)| &acc * &s);
    let (q, rem) = radical.divrem(&Polynomial::linear(r.clone()))?;
    if !rem.is_zero() {
        return Err(Error::Precondition(format!("{r} is not an eigenvalue")));
    }
    let qr = q.eval(&r);
    if qr.is_zero() {
        return Err(Error::Precondition("degenerate distinct-eigenvalue set".into()));
    }
    Ok(q.scale(&(rat(profile.n as i64) / qr)))
}

/// Data about the copied graph `G2` that the closed forms consume.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct G2Data {
    pub kind: MatrixKind,
    pub n: usize,
    /// Characteristic polynomial of the kind matrix of `G2`.
    pub charpoly: Polynomial,
    pub coronal: Coronal,
}

impl G2Data {
    pub fn new(kind: MatrixKind, charpoly: Polynomial, coronal: Coronal) -> Result<Self> {
        let n = charpoly.degree();
        // f·χ must be a polynomial: χ's denominator divides f.
        charpoly.div_exact(coronal.rf.denominator())?;
        Ok(G2Data {
            kind,
            n,
            charpoly,
            coronal,
        })
    }

    /// Picks the closed-form coronal when one applies (regular, or `K_{p,q}`
    /// for the adjacency kind) and falls back to the exact computation.
    pub fn from_graph(g: &Graph, kind: MatrixKind) -> Result<Self> {
        let m = g.matrix(kind);
        let charpoly = char_poly_exact(&m)?;
        let coronal = if g.order() == 0 {
            Coronal {
                rf: RationalFunction::from_poly(Polynomial::zero()),
                source: CoronalSource::Regular,
            }
        } else if let Some(r) = g.regularity().r {
            coronal_regular(g.order(), r, kind)
        } else if let (MatrixKind::A, Some((p, q))) = (kind, bipartition_sizes(g)) {
            coronal_kpq(p, q)
        } else {
            coronal_exact(&m)?
        };
        Self::new(kind, charpoly, coronal)
    }

    /// `f(M2)/D` where `χ = N/D`: its roots are the eigenvalues whose
    /// eigenvectors are orthogonal to the all-ones vector.
    pub fn residual(&self) -> Polynomial {
        self.charpoly
            .div_exact(self.coronal.rf.denominator())
            .expect("checked at construction")
    }
}

/// `(p, q)` when `g` is a complete bipartite graph `K_{p,q}` with `p <= q`.
pub fn bipartition_sizes(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return None;
    }
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if side[v] == usize::MAX {
                side[v] = 1 - side[u];
                stack.push(v);
            } else if side[v] == side[u] {
                return None;
            }
        }
    }
    let p = side.iter().filter(|&&s| s == 0).count();
    let q = n - p;
    (g.size() == p * q).then_some((p.min(q), p.max(q)))
}
