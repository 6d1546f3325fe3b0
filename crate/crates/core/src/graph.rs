//! Simple undirected graphs and their standard integer matrices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as sorted `(min, max)` pairs in lexicographic order, which
/// is also the column order of [`Graph::incidence_matrix`]. Labels are
/// annotations only and never take part in equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
        }
        Ok(Self::from_sorted_set(n, set))
    }

    /// Builds a graph from an edge collection, silently merging duplicates.
    pub(crate) fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        Self::from_sorted_set(n, edges)
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let edges: Vec<_> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
            labels: None,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_set(n, BTreeSet::new())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in incidence order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in incidence order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m[(u, v)] = 1;
            m[(v, u)] = 1;
        }
        m
    }

    pub fn degree_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for v in 0..self.n {
            m[(v, v)] = self.degree(v) as i64;
        }
        m
    }

    /// `D - A`.
    pub fn laplacian_matrix(&self) -> IntMatrix {
        let mut m = self.degree_matrix();
        for &(u, v) in &self.edges {
            m[(u, v)] = -1;
            m[(v, u)] = -1;
        }
        m
    }

    /// `D + A`.
    pub fn signless_laplacian_matrix(&self) -> IntMatrix {
        let mut m = self.degree_matrix();
        for &(u, v) in &self.edges {
            m[(u, v)] = 1;
            m[(v, u)] = 1;
        }
        m
    }

    /// Vertex-edge incidence matrix, `n x m`, columns in incidence order.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            m[(u, j)] = 1;
            m[(v, j)] = 1;
        }
        m
    }

    pub fn matrix(&self, kind: MatrixKind) -> IntMatrix {
        match kind {
            MatrixKind::A => self.adjacency_matrix(),
            MatrixKind::L => self.laplacian_matrix(),
            MatrixKind::Q => self.signless_laplacian_matrix(),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut set = BTreeSet::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    set.insert((u, v));
                }
            }
        }
        Graph::from_edge_set(self.n, set)
    }

    pub fn regularity(&self) -> RegularityProfile {
        let mut degrees = self.neighbors.iter().map(Vec::len);
        match degrees.next() {
            None => RegularityProfile {
                is_regular: true,
                r: Some(0),
            },
            Some(first) => {
                if degrees.all(|d| d == first) {
                    RegularityProfile {
                        is_regular: true,
                        r: Some(first),
                    }
                } else {
                    RegularityProfile {
                        is_regular: false,
                        r: None,
                    }
                }
            }
        }
    }

    /// Single connected component (breadth-first traversal). The empty graph
    /// on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union, `other` shifted after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let set = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Graph::from_edge_set(self.n + other.n, set)
    }
}

/// Which graph matrix a spectrum refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Adjacency.
    A,
    /// Laplacian `D - A`.
    L,
    /// Signless Laplacian `D + A`.
    Q,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" | "adjacency" => Ok(MatrixKind::A),
            "L" | "l" | "laplacian" => Ok(MatrixKind::L),
            "Q" | "q" | "signless" => Ok(MatrixKind::Q),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown matrix kind {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityProfile {
    pub is_regular: bool,
    /// Common degree, present iff `is_regular`.
    pub r: Option<usize>,
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidGraph("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Subtracts `value` from every entry (used for `M - J`).
    pub fn sub_constant(&self, value: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a - value).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self[(r, c)] != self[(c, r)] {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    /// Rows and columns reordered so that new index `i` is old index `order[i]`.
    pub fn reorder(&self, order: &[usize]) -> IntMatrix {
        assert!(self.is_square() && order.len() == self.rows);
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for (i, &oi) in order.iter().enumerate() {
            for (j, &oj) in order.iter().enumerate() {
                out[(i, j)] = self[(oi, oj)];
            }
        }
        out
    }

    /// Copy of the block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r: std::ops::Range<usize>, c: std::ops::Range<usize>) -> IntMatrix {
        let mut out = IntMatrix::zeros(r.len(), c.len());
        for (i, ri) in r.clone().enumerate() {
            for (j, cj) in c.clone().enumerate() {
                out[(i, j)] = self[(ri, cj)];
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn to_real(&self) -> RealMatrix {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a as f64).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Dense row-major `f64` matrix; only produced for the numeric oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, a| m.max(a.abs()))
    }
}

impl std::ops::Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_small_cases() {
        let k2 = named::complete(2);
        assert_eq!(k2.adjacency_matrix(), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert_eq!(Graph::empty(3).adjacency_matrix(), IntMatrix::zeros(3, 3));
        let a = p3().adjacency_matrix();
        assert_eq!((a[(0, 1)], a[(1, 2)], a[(0, 2)]), (1, 1, 0));
    }

    #[test]
    fn laplacian_small_cases() {
        let l = named::complete(2).laplacian_matrix();
        assert_eq!(l, IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap());
        let l4 = named::complete(4).laplacian_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(l4[(i, j)], if i == j { 3 } else { -1 });
            }
        }
        let c4 = named::cycle(4).laplacian_matrix();
        assert_eq!(c4.row(0), &[2, -1, 0, -1]);
        for r in 0..4 {
            assert_eq!(c4.row(r).iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn signless_small_cases() {
        assert_eq!(
            named::complete(2).signless_laplacian_matrix(),
            IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap()
        );
        let q = named::cycle(3).signless_laplacian_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q[(i, j)], if i == j { 2 } else { 1 });
            }
        }
        // K_{1,2} with the centre at 0.
        let star = named::complete_bipartite(1, 2);
        let q = star.signless_laplacian_matrix();
        assert_eq!(q.row(0), &[2, 1, 1]);
        assert_eq!(q.row(1), &[1, 1, 0]);
        assert_eq!(q.row(2), &[1, 0, 1]);
    }

    #[test]
    fn incidence_identity() {
        let k2 = named::complete(2);
        assert_eq!(k2.incidence_matrix(), IntMatrix::from_rows(&[vec![1], vec![1]]).unwrap());
        let inc = p3().incidence_matrix();
        assert_eq!((inc.rows(), inc.cols()), (3, 2));
        for g in [p3(), named::petersen(), named::complete_bipartite(2, 3)] {
            let inc = g.incidence_matrix();
            for j in 0..inc.cols() {
                assert_eq!((0..inc.rows()).map(|i| inc[(i, j)]).sum::<i64>(), 2);
            }
            let lhs = inc.mul(&inc.transpose());
            assert_eq!(lhs, g.adjacency_matrix().add(&g.degree_matrix()));
        }
    }

    #[test]
    fn complement_cases() {
        assert_eq!(named::complete(4).complement(), Graph::empty(4));
        let p4 = named::path(4);
        assert_eq!(p4.complement().complement(), p4);
        let c5c = named::cycle(5).complement();
        assert_eq!(c5c.regularity().r, Some(2));
        assert!(c5c.is_connected());
        assert_eq!(c5c.size(), 5);
    }

    #[test]
    fn regularity_cases() {
        assert_eq!(
            named::complete_bipartite(3, 3).regularity(),
            RegularityProfile { is_regular: true, r: Some(3) }
        );
        assert!(!named::complete_bipartite(1, 2).regularity().is_regular);
        assert_eq!(named::cycle(6).regularity().r, Some(2));
    }

    #[test]
    fn connectivity_cases() {
        assert!(named::complete(2).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }
}
