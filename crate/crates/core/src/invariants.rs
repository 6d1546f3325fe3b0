//! Spanning-tree counts and Kirchhoff indices.
//!
//! The oracle side uses the matrix-tree theorem (an exact fraction-free
//! determinant) and a Jacobi eigen-decomposition. The closed side reads both
//! invariants off the characteristic polynomial of the Laplacian factorization:
//! with `f(x) = x·g(x)`, `t = |g(0)|/N` and `Kf = -N·g'(0)/g(0)`.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::corona::Operation;
use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix, MatrixKind};
use crate::oracle::symmetric_eigenvalues;
use crate::poly::{det_bareiss, rat, Polynomial};
use crate::spectra::printed::PrintedParams;
use crate::spectra::{group_product, spectrum, G2Data, RegularProfile};

/// Eigenvalues below this magnitude count as zero for the Kirchhoff sum.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantOperation {
    Plain,
    Cvc,
    Cec,
    Cenc,
}

impl From<Operation> for InvariantOperation {
    fn from(op: Operation) -> Self {
        match op {
            Operation::Cvc => InvariantOperation::Cvc,
            Operation::Cec => InvariantOperation::Cec,
            Operation::Cenc => InvariantOperation::Cenc,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Decimal string: counts overflow machine integers quickly.
    #[serde(with = "bigint_string")]
    pub spanning_trees: BigInt,
    /// `None` for disconnected graphs.
    pub kirchhoff: Option<f64>,
    pub method: Method,
    pub operation: InvariantOperation,
}

/// Both methods side by side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantComparison {
    pub closed_form: InvariantReport,
    pub oracle: InvariantReport,
    pub spanning_trees_equal: bool,
    pub kirchhoff_relative_deviation: f64,
}

mod bigint_string {
    use num::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Matrix-tree count: the determinant of the Laplacian with one row and
/// column removed. Returns `(0, false)` for a disconnected graph.
pub fn spanning_trees_oracle(g: &Graph) -> Result<(BigInt, bool)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    if !g.is_connected() {
        return Ok((BigInt::zero(), false));
    }
    Ok((det_bareiss(&reduced_laplacian(g))?, true))
}

/// `n · Σ 1/μ` over the nonzero Laplacian eigenvalues.
pub fn kirchhoff_oracle(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let e = symmetric_eigenvalues(&g.laplacian_matrix())?;
    let near_zero = e.values.iter().filter(|v| v.abs() < ZERO_EIGENVALUE_TOL).count();
    if near_zero != 1 {
        return Err(Error::Reconciliation(format!(
            "connected graph shows {near_zero} Laplacian eigenvalues below {ZERO_EIGENVALUE_TOL:e}"
        )));
    }
    // Ascending and positive semidefinite: the smallest is the zero.
    Ok(n as f64 * e.values[1..].iter().map(|m| 1.0 / m).sum::<f64>())
}

/// `t(G) = μ2⋯μn / n` in floating point, used only as a cross-check.
pub fn spanning_trees_eigen_product(g: &Graph) -> Result<f64> {
    let e = symmetric_eigenvalues(&g.laplacian_matrix())?;
    Ok(e.values[1..].iter().product::<f64>() / g.order() as f64)
}

pub fn oracle_report(g: &Graph, operation: InvariantOperation) -> Result<InvariantReport> {
    let (t, connected) = spanning_trees_oracle(g)?;
    Ok(InvariantReport {
        spanning_trees: t,
        kirchhoff: if connected { Some(kirchhoff_oracle(g)?) } else { None },
        method: Method::Oracle,
        operation,
    })
}

/// Coefficients `(f1, f2)` of the Laplacian characteristic polynomial of the
/// composite and its order, after checking it has a simple zero.
fn laplacian_tail(op: Operation, g1: &RegularProfile, g2: &G2Data) -> Result<(BigRational, BigRational, usize)> {
    if g2.kind != MatrixKind::L {
        return Err(Error::Precondition("invariants need the Laplacian data of G2".into()));
    }
    let f = spectrum(op, g1, g2)?;
    let p = f.characteristic_polynomial();
    if !p.coeff(0).is_zero() {
        return Err(Error::Reconciliation("Laplacian polynomial has no zero root".into()));
    }
    let f1 = p.coeff(1);
    if f1.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok((f1, p.coeff(2), f.order))
}

/// Exact spanning-tree count from the template factorization.
pub fn spanning_trees_closed(op: Operation, g1: &RegularProfile, g2: &G2Data) -> Result<BigInt> {
    let (f1, _, n) = laplacian_tail(op, g1, g2)?;
    let t = f1.abs() / rat(n as i64);
    if !t.is_integer() {
        return Err(Error::Reconciliation(format!("tree count {t} is not an integer")));
    }
    Ok(t.to_integer())
}

/// Exact Kirchhoff index from the template factorization.
pub fn kirchhoff_closed_exact(op: Operation, g1: &RegularProfile, g2: &G2Data) -> Result<BigRational> {
    let (f1, f2, n) = laplacian_tail(op, g1, g2)?;
    Ok(-(rat(n as i64) * f2 / f1))
}

pub fn kirchhoff_closed(op: Operation, g1: &RegularProfile, g2: &G2Data) -> Result<f64> {
    Ok(to_f64(&kirchhoff_closed_exact(op, g1, g2)?))
}

pub fn closed_report(op: Operation, g1: &RegularProfile, g2: &G2Data) -> Result<InvariantReport> {
    Ok(InvariantReport {
        spanning_trees: spanning_trees_closed(op, g1, g2)?,
        kirchhoff: Some(kirchhoff_closed(op, g1, g2)?),
        method: Method::ClosedForm,
        operation: op.into(),
    })
}

pub fn compare(closed_form: InvariantReport, oracle: InvariantReport) -> InvariantComparison {
    let kirchhoff_relative_deviation = match (closed_form.kirchhoff, oracle.kirchhoff) {
        (Some(a), Some(b)) => (a - b).abs() / b.abs().max(f64::MIN_POSITIVE),
        _ => f64::INFINITY,
    };
    InvariantComparison {
        spanning_trees_equal: closed_form.spanning_trees == oracle.spanning_trees,
        closed_form,
        oracle,
        kirchhoff_relative_deviation,
    }
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    crate::poly::to_f64(q)
}

/// `∏ (a + b·θ)` over the roots `θ` of the monic `s`.
fn product_over(s: &Polynomial, a: &BigRational, b: &BigRational) -> BigRational {
    group_product(s, &Polynomial::constant(a.clone()), &Polynomial::constant(b.clone())).coeff(0)
}

/// `Σ (u0 + u1·θ)/(v0 + v1·θ)` over the roots `θ` of the monic `s`.
fn sum_over(s: &Polynomial, u: (i64, i64), v: (i64, i64)) -> Result<BigRational> {
    let d = s.degree() as i64;
    if d == 0 {
        return Ok(BigRational::zero());
    }
    let (u0, u1, v0, v1) = (rat(u.0), rat(u.1), rat(v.0), rat(v.1));
    let root_sum = -s.coeff(s.degree() - 1) / s.leading();
    if v1.is_zero() {
        if v0.is_zero() {
            return Err(Error::Singular);
        }
        return Ok((rat(d) * u0 + u1 * root_sum) / v0);
    }
    // u/v = u1/v1 + c/(v0 + v1 θ) with c = u0 - u1 v0 / v1.
    let c = &u0 - &u1 * &v0 / &v1;
    let y = -&v0 / &v1;
    let sy = s.eval(&y);
    if sy.is_zero() {
        return Err(Error::Singular);
    }
    // Σ 1/(θ - y) = -s'(y)/s(y)
    let recip = -s.derivative().eval(&y) / sy;
    Ok(rat(d) * &u1 / &v1 + c / v1 * recip)
}

fn pow2(e: i64) -> BigRational {
    let two = rat(2);
    if e >= 0 {
        num::pow(two, e as usize)
    } else {
        BigRational::one() / num::pow(two, (-e) as usize)
    }
}

/// The printed spanning-tree corollary for `op`, evaluated exactly.
/// `params` must carry the Laplacian polynomial of `G2`.
pub fn spanning_trees_printed(op: Operation, q: &PrintedParams) -> Result<BigRational> {
    let (n1, m1, r1, n2) = (q.n1, q.m1, q.r1, q.n2);
    let g = q.g1_charpoly.div_exact(&Polynomial::x_minus(r1))?;
    let h = q.g2_charpoly.div_exact(&Polynomial::x())?;
    let one = BigRational::one();
    let (order, perron, g2_part, g1_part) = match op {
        Operation::Cvc => (
            n1 + m1 + n1 * n2,
            r1 + 2 * n2 + 2,
            num::pow(product_over(&h, &one, &one), n1 as usize),
            product_over(&g, &rat(2 * n1 - r1), &one),
        ),
        Operation::Cec => (
            n1 + m1 + m1 * n2,
            3 * r1 + n2 * r1 + 2,
            num::pow(product_over(&h, &one, &one), m1 as usize),
            product_over(&g, &rat(2 * n1 - r1), &one),
        ),
        Operation::Cenc => (
            n1 + m1 + m1 * n2,
            n2 * r1 + r1 + 2,
            num::pow(product_over(&q.g2_charpoly, &one, &one), m1 as usize),
            product_over(&g, &rat(2 * n1 + n2 * r1 - r1), &rat(1 - n2)),
        ),
    };
    Ok(pow2(m1 - n1) * rat(perron) * g2_part * g1_part / rat(order))
}

/// The printed Kirchhoff corollary for `op`, evaluated exactly.
pub fn kirchhoff_printed(op: Operation, q: &PrintedParams) -> Result<BigRational> {
    let (n1, m1, r1, n2) = (q.n1, q.m1, q.r1, q.n2);
    let g = q.g1_charpoly.div_exact(&Polynomial::x_minus(r1))?;
    let h = q.g2_charpoly.div_exact(&Polynomial::x())?;
    let recip_g2 = sum_over(&h, (1, 0), (1, 1))?;
    let frac = |a: i64, b: i64| rat(a) / rat(b);
    let (order, bracket) = match op {
        Operation::Cvc => (
            n1 + m1 + n1 * n2,
            frac(m1 - n1, 2)
                + frac(n2 + r1 + 3, r1 + 2 * n2 + 2)
                + rat(n1) * &recip_g2
                + sum_over(&g, (2 * n2 + 3 * n1 + 2 - r1, 2), (2 * n1 - r1, 1))?,
        ),
        Operation::Cec => (
            n1 + m1 + m1 * n2,
            frac((m1 - n1) * (n2 + 3), 2)
                + frac(n2 + r1 + 3, 3 * r1 + n2 * r1 + 2)
                + rat(m1) * &recip_g2
                + sum_over(&g, (2 * n1 - r1, 1), (2 + n1 * n2 + 3 * n1 - r1, n2 + 4))?,
        ),
        Operation::Cenc => (
            n1 + m1 + m1 * n2,
            frac(m1 - n1, 2)
                + frac(1, n2 * r1 + r1 + 2)
                + rat(m1) * &recip_g2
                + sum_over(&g, (2 + n1 + n2 * r1, 1), (2 * n1 + n2 * r1 - r1, 1 - n2))?,
        ),
    };
    Ok(rat(order) * bracket)
}

/// Exact Kirchhoff index of any connected graph from its Laplacian
/// characteristic polynomial; slow, for tests and small graphs.
pub fn kirchhoff_exact(g: &Graph) -> Result<BigRational> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = crate::poly::char_poly_exact(&g.laplacian_matrix())?;
    Ok(-(rat(g.order() as i64) * p.coeff(2) / p.coeff(1)))
}

/// Laplacian with the first row and column removed.
pub fn reduced_laplacian(g: &Graph) -> IntMatrix {
    let n = g.order();
    g.laplacian_matrix().block(1..n, 1..n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::composite;
    use crate::named;

    fn profile(g: &Graph) -> RegularProfile {
        RegularProfile::from_graph(g).unwrap()
    }

    fn l2(g: &Graph) -> G2Data {
        G2Data::from_graph(g, MatrixKind::L).unwrap()
    }

    #[test]
    fn anchors() {
        assert_eq!(spanning_trees_oracle(&named::complete(4)).unwrap(), (BigInt::from(16), true));
        assert_eq!(spanning_trees_oracle(&named::cycle(5)).unwrap(), (BigInt::from(5), true));
        assert!((kirchhoff_oracle(&named::complete(4)).unwrap() - 3.0).abs() < 1e-12);
        assert!((kirchhoff_oracle(&named::complete(2)).unwrap() - 1.0).abs() < 1e-12);
        assert!((kirchhoff_oracle(&named::cycle(4)).unwrap() - 5.0).abs() < 1e-12);
        assert_eq!(kirchhoff_exact(&named::cycle(4)).unwrap(), rat(5));
    }

    #[test]
    fn disconnected_flags() {
        let g = Graph::empty(3);
        assert_eq!(spanning_trees_oracle(&g).unwrap(), (BigInt::zero(), false));
        assert_eq!(kirchhoff_oracle(&g), Err(Error::Disconnected));
    }

    #[test]
    fn closed_matches_oracle() {
        let cases = [
            (Operation::Cvc, named::complete(2), named::complete(1)),
            (Operation::Cvc, named::cycle(4), named::complete(2)),
            (Operation::Cec, named::complete_bipartite(3, 3), named::complete(2)),
            (Operation::Cenc, named::complete(4), named::complete(1)),
            (Operation::Cenc, named::cycle(5), named::path(3)),
        ];
        for (op, g1, g2) in cases {
            let (comp, _) = composite(op, &g1, &g2).unwrap();
            let c = compare(
                closed_report(op, &profile(&g1), &l2(&g2)).unwrap(),
                oracle_report(&comp, op.into()).unwrap(),
            );
            assert!(c.spanning_trees_equal, "{op}: {c:?}");
            assert!(c.kirchhoff_relative_deviation < 1e-9, "{op}: {c:?}");
            assert_eq!(
                kirchhoff_closed_exact(op, &profile(&g1), &l2(&g2)).unwrap(),
                kirchhoff_exact(&comp).unwrap()
            );
        }
    }

    #[test]
    fn eigen_product_rounds_to_tree_count() {
        let (comp, _) = composite(Operation::Cvc, &named::cycle(4), &named::complete(2)).unwrap();
        let (t, _) = spanning_trees_oracle(&comp).unwrap();
        let approx = spanning_trees_eigen_product(&comp).unwrap();
        assert!((approx - to_f64(&BigRational::from(t.clone()))).abs() <= 1e-6 * approx);
    }

    #[test]
    fn root_sums() {
        // roots 1, 2: Σ 1/(1+θ) = 1/2 + 1/3.
        let s = Polynomial::from_ints([2, -3, 1]);
        assert_eq!(sum_over(&s, (1, 0), (1, 1)).unwrap(), rat(5) / rat(6));
        // Σ θ/2 = 3/2
        assert_eq!(sum_over(&s, (0, 1), (2, 0)).unwrap(), rat(3) / rat(2));
        assert_eq!(product_over(&s, &rat(1), &rat(1)), rat(6));
        assert!(sum_over(&s, (1, 0), (-1, 1)).is_err());
    }

    #[test]
    fn printed_vertex_corona_counts_hold() {
        // The vertex-corona tree count uses the corrected cubic already.
        let (g1, g2) = (named::cycle(4), named::complete(2));
        let q = PrintedParams::new(&profile(&g1), &g2, MatrixKind::L).unwrap();
        let t = spanning_trees_printed(Operation::Cvc, &q).unwrap();
        let closed = spanning_trees_closed(Operation::Cvc, &profile(&g1), &l2(&g2)).unwrap();
        assert_eq!(t, BigRational::from(closed));
        let kf = kirchhoff_printed(Operation::Cvc, &q).unwrap();
        assert_eq!(kf, kirchhoff_closed_exact(Operation::Cvc, &profile(&g1), &l2(&g2)).unwrap());
    }

    #[test]
    fn serializes_counts_as_strings() {
        let r = oracle_report(&named::complete(4), InvariantOperation::Plain).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["spanning_trees"], "16");
        assert_eq!(v["method"], "oracle");
    }
}
