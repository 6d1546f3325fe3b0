//! Closed-form characteristic polynomials of the three coronas.
//!
//! Each copy of `G2` contributes `M2 + cI` on the diagonal and a rank-one
//! coupling to its anchor(s). Eliminating the copies by a Schur complement
//! turns the coupling into `χ(x - c)`, the coronal of `M2` shifted by `c`.
//! What remains lives on `V(G1) ∪ Ṽ(G1)` and, because `G1` is regular, it
//! diagonalises on the eigenvectors of `A(G1)`: an eigenvalue `λ` whose
//! eigenvector has all-ones component `h` (the Hoffman value, `n1` for the
//! Perron vector and 0 otherwise) contributes one polynomial
//! `P(λ, h) = P0 + λ·P1 + h·P2`.
//!
//! Non-Perron eigenvalues are grouped by the square-free factors `s` of
//! `f(A1)/(x - r1)`, so irrational eigenvalues never need numerics: the
//! product of `P0 + λ·P1` over the roots of a monic `s` of degree `d` is
//! `Σ_j s_j · P0^j · (-P1)^(d-j)`.

use std::collections::BTreeMap;

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use super::{hoffman_poly, coronal_kpq, G2Data, RegularProfile};
use crate::corona::Operation;
use crate::error::{Error, Result};
use crate::graph::MatrixKind;
use crate::poly::{coprime_basis, rat, real_roots, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermRole {
    /// Eigenvalues of the copies orthogonal to the all-ones vector.
    CopySpectrum,
    /// The signed-exponent factor `Φ^(m1 - n1)`.
    Prefactor,
    /// The factor belonging to the Perron eigenvalue `r1`.
    Perron,
    /// The factor belonging to a group of non-Perron eigenvalues of `G1`.
    Generic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawTerm {
    pub role: TermRole,
    pub polynomial: Polynomial,
    /// Negative for the prefactor when `m1 < n1`.
    pub multiplicity: i64,
}

/// `f(M(G1 op G2), x)` as explicit integer eigenvalues times square-free
/// factors free of integer roots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralFactorization {
    pub operation: Operation,
    pub matrix_kind: MatrixKind,
    pub order: usize,
    /// Ascending.
    pub explicit_eigenvalues: Vec<(i64, usize)>,
    pub factors: Vec<(Polynomial, usize)>,
    /// The template terms before cancellation and canonicalisation.
    pub raw: Vec<RawTerm>,
    pub provenance: String,
}

impl SpectralFactorization {
    pub fn total_degree(&self) -> usize {
        self.explicit_eigenvalues.iter().map(|e| e.1).sum::<usize>()
            + self
                .factors
                .iter()
                .map(|(p, m)| p.degree() * m)
                .sum::<usize>()
    }

    pub fn characteristic_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::one();
        for &(v, m) in &self.explicit_eigenvalues {
            out = out * Polynomial::x_minus(v).pow(m);
        }
        for (p, m) in &self.factors {
            out = out * p.pow(*m);
        }
        out
    }

    /// All eigenvalues with multiplicity, ascending.
    pub fn roots(&self, tol: f64) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(self.order);
        for &(v, m) in &self.explicit_eigenvalues {
            out.extend(std::iter::repeat_n(v as f64, m));
        }
        for (p, m) in &self.factors {
            let rs = real_roots(p, tol)?;
            for r in rs.flatten() {
                out.extend(std::iter::repeat_n(r, *m));
            }
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }

    /// Exact sum of all eigenvalues.
    pub fn trace(&self) -> BigRational {
        let mut t = BigRational::zero();
        for &(v, m) in &self.explicit_eigenvalues {
            t += rat(v * m as i64);
        }
        for (p, m) in &self.factors {
            let d = p.degree();
            t -= p.coeff(d - 1) / p.leading() * rat(*m as i64);
        }
        t
    }
}

/// Per-operation constants: copy count, diagonal degrees of original and
/// subdivision vertices, and the diagonal shift of each copy block.
struct Shape {
    copies: i64,
    d_v: i64,
    d_e: i64,
    c: i64,
}

fn shape(op: Operation, kind: MatrixKind, n1: i64, m1: i64, r1: i64, n2: i64) -> Shape {
    let copies = match op {
        Operation::Cvc => n1,
        Operation::Cec | Operation::Cenc => m1,
    };
    if kind == MatrixKind::A {
        return Shape {
            copies,
            d_v: 0,
            d_e: 0,
            c: 0,
        };
    }
    let (d_v, d_e, c) = match op {
        Operation::Cvc => (n1 - 1 + n2, 2, 1),
        Operation::Cec => (n1 - 1, 2 + n2, 1),
        Operation::Cenc => (n1 - 1 + r1 * n2, 2, 2),
    };
    Shape { copies, d_v, d_e, c }
}

fn cst(v: i64) -> Polynomial {
    Polynomial::constant(rat(v))
}

/// Closed-form spectrum of `G1 op G2` for the matrix kind carried by `g2`.
pub fn spectrum(op: Operation, g1: &RegularProfile, g2: &G2Data) -> Result<SpectralFactorization> {
    if g1.n == 0 {
        return Err(Error::Precondition("G1 must have at least one vertex".into()));
    }
    if op != Operation::Cvc && g1.m == 0 {
        return Err(Error::NoEdges { op: op.name() });
    }
    let kind = g2.kind;
    let (n1, m1, r1, n2) = (g1.n as i64, g1.m as i64, g1.r as i64, g2.n as i64);
    let sigma = if kind == MatrixKind::L { -1 } else { 1 };
    let Shape { copies, d_v, d_e, c } = shape(op, kind, n1, m1, r1, n2);

    let x = Polynomial::x();
    let ny = g2.coronal.rf.numerator().shift(c);
    let dy = g2.coronal.rf.denominator().shift(c);
    let copy_part = g2.residual().shift(c);
    let e = &x - &cst(d_e);
    // x - dV + σ: the λ- and h-free part of the (V, V) diagonal.
    let base0 = &x - &cst(d_v - sigma);
    let sig = cst(sigma);

    let (p0, p1, p2, phi) = match op {
        Operation::Cvc => {
            let dye = &dy * &e;
            let p0 = &base0 * &dye - &ny * &e - dy.scale(&rat(r1));
            let p1 = &sig * &dye - dy.clone();
            let p2 = -(&sig * &dye);
            (p0, p1, p2, e.clone())
        }
        Operation::Cec => {
            let en = &e * &dy - ny.clone();
            let p0 = &base0 * &en - dy.scale(&rat(r1));
            let p1 = &sig * &en - dy.clone();
            let p2 = -(&sig * &en);
            (p0, p1, p2, en)
        }
        Operation::Cenc => {
            let dye = &dy * &e;
            let w = &ny * &e + dy.clone();
            let p0 = &base0 * &dye - w.scale(&rat(r1));
            let p1 = &sig * &dye - w;
            let p2 = -(&sig * &dye);
            (p0, p1, p2, dye)
        }
    };

    let hoffman = hoffman_poly(g1)?;
    let r1q = rat(r1);
    let h_perron = hoffman.eval(&r1q);
    let perron = &p0 + &p1.scale(&r1q) + p2.scale(&h_perron);

    let mut raw = vec![
        RawTerm {
            role: TermRole::CopySpectrum,
            polynomial: copy_part,
            multiplicity: copies,
        },
        RawTerm {
            role: TermRole::Prefactor,
            polynomial: phi,
            multiplicity: m1 - n1,
        },
        RawTerm {
            role: TermRole::Perron,
            polynomial: perron,
            multiplicity: 1,
        },
    ];
    let rest = g1.charpoly.div_exact(&Polynomial::linear(r1q))?;
    for (s, k) in rest.square_free() {
        raw.push(RawTerm {
            role: TermRole::Generic,
            polynomial: group_product(&s, &p0, &p1),
            multiplicity: k as i64,
        });
    }

    let order = op.order(g1.n, g1.m, g2.n);
    let raw_degree: i64 = raw
        .iter()
        .map(|t| t.polynomial.degree() as i64 * t.multiplicity)
        .sum();
    if raw_degree != order as i64 {
        return Err(Error::DegreeAccounting {
            expected: order,
            actual: raw_degree.max(0) as usize,
        });
    }

    let (explicit_eigenvalues, factors) = canonicalise(&raw)?;
    let out = SpectralFactorization {
        operation: op,
        matrix_kind: kind,
        order,
        explicit_eigenvalues,
        factors,
        raw,
        provenance: format!(
            "schur-complement template: {op}, kind {kind}, coronal {:?}",
            g2.coronal.source
        ),
    };
    let total = out.total_degree();
    if total != order {
        return Err(Error::DegreeAccounting {
            expected: order,
            actual: total,
        });
    }
    Ok(out)
}

/// `∏ (p0 + λ·p1)` over the roots `λ` of the monic polynomial `s`.
pub(crate) fn group_product(s: &Polynomial, p0: &Polynomial, p1: &Polynomial) -> Polynomial {
    let d = s.degree();
    let neg_p1 = -p1;
    let mut group = Polynomial::zero();
    for (j, sj) in s.coeffs().iter().enumerate() {
        if !sj.is_zero() {
            group = group + (p0.pow(j) * neg_p1.pow(d - j)).scale(sj);
        }
    }
    group
}

type Canonical = (Vec<(i64, usize)>, Vec<(Polynomial, usize)>);

fn canonicalise(raw: &[RawTerm]) -> Result<Canonical> {
    let basis = coprime_basis(
        raw.iter()
            .map(|t| (t.polynomial.clone(), t.multiplicity))
            .collect(),
    );
    let mut explicit: BTreeMap<i64, usize> = BTreeMap::new();
    let mut factors = Vec::new();
    for (p, m) in basis {
        if m < 0 {
            return Err(Error::Reconciliation(format!(
                "factor {p} left with multiplicity {m} after cancellation"
            )));
        }
        let m = m as usize;
        let mut rest = p.clone();
        for r in p.integer_roots() {
            *explicit.entry(r).or_default() += m;
            rest = rest.div_exact(&Polynomial::x_minus(r))?;
        }
        if rest.degree() > 0 {
            factors.push((rest, m));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| b.1.cmp(&a.1))
            .then_with(|| a.0.to_exact_strings().cmp(&b.0.to_exact_strings()))
    });
    Ok((explicit.into_iter().collect(), factors))
}

pub fn spectrum_cvc(g1: &RegularProfile, g2: &G2Data) -> Result<SpectralFactorization> {
    spectrum(Operation::Cvc, g1, g2)
}

pub fn spectrum_cec(g1: &RegularProfile, g2: &G2Data) -> Result<SpectralFactorization> {
    spectrum(Operation::Cec, g1, g2)
}

pub fn spectrum_cenc(g1: &RegularProfile, g2: &G2Data) -> Result<SpectralFactorization> {
    spectrum(Operation::Cenc, g1, g2)
}

/// Adjacency spectrum of `G1 op K_{p,q}` from the bipartite coronal alone.
pub fn spectrum_kpq_variants(
    g1: &RegularProfile,
    p: usize,
    q: usize,
    op: Operation,
) -> Result<SpectralFactorization> {
    if p == 0 || q == 0 {
        return Err(Error::Precondition("K_{p,q} needs p, q >= 1".into()));
    }
    // f(A(K_{p,q})) = x^(p+q-2) (x² - pq)
    let charpoly = Polynomial::x().pow(p + q - 2) * Polynomial::from_ints([-((p * q) as i64), 0, 1]);
    let g2 = G2Data::new(MatrixKind::A, charpoly, coronal_kpq(p, q))?;
    spectrum(op, g1, &g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::composite;
    use crate::graph::Graph;
    use crate::named;
    use crate::oracle::{multiset_equal, symmetric_eigenvalues};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c.iter().copied())
    }

    fn closed(op: Operation, g1: &Graph, g2: &Graph, kind: MatrixKind) -> SpectralFactorization {
        let prof = RegularProfile::from_graph(g1).unwrap();
        spectrum(op, &prof, &G2Data::from_graph(g2, kind).unwrap()).unwrap()
    }

    fn check_oracle(op: Operation, g1: &Graph, g2: &Graph, kind: MatrixKind) {
        let f = closed(op, g1, g2, kind);
        let (comp, _) = composite(op, g1, g2).unwrap();
        let oracle = symmetric_eigenvalues(&comp.matrix(kind)).unwrap().values;
        let cmp = multiset_equal(&f.roots(1e-10).unwrap(), &oracle, 1e-8).unwrap();
        assert!(cmp.equal, "{op} {kind}: deviation {}", cmp.max_deviation);
    }

    #[test]
    fn vertex_corona_k33_k2_adjacency() {
        let f = closed(
            Operation::Cvc,
            &named::complete_bipartite(3, 3),
            &named::complete(2),
            MatrixKind::A,
        );
        assert_eq!(f.order, 27);
        // x^3 - 3x^2 contributes a double zero and an eigenvalue 3.
        assert_eq!(f.explicit_eigenvalues, vec![(-1, 6), (0, 5), (3, 1)]);
        assert_eq!(
            f.factors,
            vec![(p(&[3, -6, 0, 1]), 4), (p(&[6, -6, -3, 1]), 1)]
        );
    }

    #[test]
    fn edge_corona_k33_k2_adjacency() {
        let f = closed(
            Operation::Cec,
            &named::complete_bipartite(3, 3),
            &named::complete(2),
            MatrixKind::A,
        );
        assert_eq!(f.order, 33);
        let want = Polynomial::x_minus(-1).pow(9)
            * p(&[-2, -1, 1]).pow(3)
            * p(&[10, -6, -3, 1])
            * p(&[4, 0, -3, 1])
            * p(&[1, -6, 0, 1]).pow(4);
        assert_eq!(f.characteristic_polynomial(), want);
    }

    #[test]
    fn neighborhood_corona_k33_k2_adjacency() {
        let f = closed(
            Operation::Cenc,
            &named::complete_bipartite(3, 3),
            &named::complete(2),
            MatrixKind::A,
        );
        assert_eq!(f.order, 33);
        let want = Polynomial::x().pow(3)
            * Polynomial::x_minus(1).pow(3)
            * Polynomial::x_minus(-1).pow(9)
            * p(&[6, -16, -3, 1])
            * p(&[0, 2, -3, 1])
            * p(&[3, -10, 0, 1]).pow(4);
        assert_eq!(f.characteristic_polynomial(), want);
    }

    #[test]
    fn matches_exact_characteristic_polynomial() {
        let g1 = named::cycle(5);
        for g2 in [named::complete(1), named::path(3), named::complete_bipartite(1, 2)] {
            for kind in MatrixKind::ALL {
                for op in Operation::ALL {
                    let f = closed(op, &g1, &g2, kind);
                    let (comp, _) = composite(op, &g1, &g2).unwrap();
                    let exact = crate::poly::char_poly_exact(&comp.matrix(kind)).unwrap();
                    assert_eq!(f.characteristic_polynomial(), exact, "{op} {kind}");
                }
            }
        }
    }

    #[test]
    fn oracle_small_cases() {
        check_oracle(Operation::Cvc, &named::cycle(4), &named::complete(2), MatrixKind::L);
        check_oracle(Operation::Cenc, &named::cycle(6), &named::complete(3), MatrixKind::L);
        check_oracle(Operation::Cec, &named::petersen(), &named::cycle(4), MatrixKind::Q);
    }

    #[test]
    fn negative_prefactor_cancels() {
        // K2 has m1 - n1 = -1.
        for kind in MatrixKind::ALL {
            for op in Operation::ALL {
                check_oracle(op, &named::complete(2), &named::complete(1), kind);
                check_oracle(op, &named::complete(2), &named::path(3), kind);
            }
            check_oracle(Operation::Cvc, &named::complete(1), &named::cycle(4), kind);
        }
    }

    #[test]
    fn bipartite_variants() {
        let c4 = RegularProfile::from_graph(&named::cycle(4)).unwrap();
        let f = spectrum_kpq_variants(&c4, 1, 2, Operation::Cec).unwrap();
        assert_eq!(f.order, 20);
        let g = closed(Operation::Cec, &named::cycle(4), &named::complete_bipartite(1, 2), MatrixKind::A);
        assert_eq!(f.characteristic_polynomial(), g.characteristic_polynomial());
        let k4 = RegularProfile::from_graph(&named::complete(4)).unwrap();
        let f = spectrum_kpq_variants(&k4, 1, 2, Operation::Cvc).unwrap();
        let zeros = f.explicit_eigenvalues.iter().find(|e| e.0 == 0).map(|e| e.1);
        assert_eq!(zeros, Some(6));
        let k2 = G2Data::from_graph(&named::complete(2), MatrixKind::A).unwrap();
        let same = spectrum_cvc(&k4, &k2).unwrap();
        let f11 = spectrum_kpq_variants(&k4, 1, 1, Operation::Cvc).unwrap();
        assert_eq!(same.characteristic_polynomial(), f11.characteristic_polynomial());
    }

    #[test]
    fn traces() {
        let g1 = named::complete(4);
        let g2 = named::path(3);
        for op in Operation::ALL {
            let (comp, _) = composite(op, &g1, &g2).unwrap();
            for kind in MatrixKind::ALL {
                let f = closed(op, &g1, &g2, kind);
                let want = match kind {
                    MatrixKind::A => 0,
                    _ => 2 * comp.size() as i64,
                };
                assert_eq!(f.trace(), rat(want), "{op} {kind}");
            }
        }
    }

    #[test]
    fn preconditions() {
        let prof = RegularProfile::from_graph(&Graph::empty(3)).unwrap();
        let k2 = G2Data::from_graph(&named::complete(2), MatrixKind::A).unwrap();
        assert!(matches!(spectrum_cec(&prof, &k2), Err(Error::NoEdges { .. })));
        assert!(spectrum_cvc(&prof, &k2).is_ok());
        assert!(RegularProfile::from_graph(&named::path(4)).is_err());
    }
}
