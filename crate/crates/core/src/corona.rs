//! The central graph and the three corona composites built on it.
//!
//! Every composite is laid out as `[V(G1) | subdivision vertices | copy 0 | copy 1 | ...]`,
//! so its adjacency matrix is literally the 3x3 block matrix
//!
//! ```text
//! [ A(complement G1)  I(G1)   X  ]
//! [ I(G1)^T           0       Y  ]
//! [ X^T               Y^T     I ⊗ A(G2) ]
//! ```
//!
//! with `X = I_n1 ⊗ 1ᵀ`, `Y = 0` (vertex corona), `X = 0`, `Y = I_m1 ⊗ 1ᵀ`
//! (edge corona) or `X = I(G1) ⊗ 1ᵀ`, `Y = 0` (edge neighborhood corona).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    /// Central vertex corona: copy `i` joined to original vertex `i`.
    Cvc,
    /// Central edge corona: copy `k` joined to subdivision vertex `k`.
    Cec,
    /// Central edge neighborhood corona: copy `k` joined to both ends of edge `k`.
    Cenc,
}

impl Operation {
    pub const ALL: [Operation; 3] = [Operation::Cvc, Operation::Cec, Operation::Cenc];

    pub fn name(self) -> &'static str {
        match self {
            Operation::Cvc => "cvc",
            Operation::Cec => "cec",
            Operation::Cenc => "cenc",
        }
    }

    /// Number of copies of G2 for a G1 with `n1` vertices and `m1` edges.
    pub fn copies(self, n1: usize, m1: usize) -> usize {
        match self {
            Operation::Cvc => n1,
            Operation::Cec | Operation::Cenc => m1,
        }
    }

    /// Closed-form order `n1 + m1 + copies * n2`.
    pub fn order(self, n1: usize, m1: usize, n2: usize) -> usize {
        n1 + m1 + self.copies(n1, m1) * n2
    }

    /// Closed-form edge count.
    pub fn size(self, n1: usize, m1: usize, n2: usize, m2: usize) -> usize {
        let central = m1 + n1 * n1.saturating_sub(1) / 2;
        match self {
            Operation::Cvc => central + n1 * m2 + n1 * n2,
            Operation::Cec => central + m1 * m2 + m1 * n2,
            Operation::Cenc => central + m1 * m2 + 2 * m1 * n2,
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Operation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cvc" => Ok(Operation::Cvc),
            "cec" => Ok(Operation::Cec),
            "cenc" => Ok(Operation::Cenc),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown operation {other:?} (expected cvc, cec or cenc)"),
            }),
        }
    }
}

/// Index ranges of the vertex classes inside a composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeLayout {
    pub g1_vertices: Range<usize>,
    /// One per edge of G1, in incidence order.
    pub subdivision_vertices: Range<usize>,
    pub copy_blocks: Vec<Range<usize>>,
}

impl CompositeLayout {
    pub fn order(&self) -> usize {
        self.copy_blocks
            .last()
            .map_or(self.subdivision_vertices.end, |r| r.end)
    }

    /// Vertex class labels: `v<i>`, `s<k>`, `c<copy>.<j>`.
    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self.g1_vertices.clone().map(|i| format!("v{i}")).collect();
        out.extend(
            self.subdivision_vertices
                .clone()
                .map(|v| format!("s{}", v - self.subdivision_vertices.start)),
        );
        for (c, block) in self.copy_blocks.iter().enumerate() {
            out.extend(block.clone().map(|v| format!("c{c}.{}", v - block.start)));
        }
        out
    }
}

/// Subdivides every edge once and joins originally non-adjacent vertices.
pub fn central_graph(g: &Graph) -> (Graph, CompositeLayout) {
    let (set, layout) = central_edges(g, 0, 0);
    let graph = Graph::from_edge_set(layout.order(), set);
    let graph = graph
        .with_labels(layout.labels())
        .expect("label count matches order");
    (graph, layout)
}

fn central_edges(g: &Graph, copies: usize, n2: usize) -> (BTreeSet<(usize, usize)>, CompositeLayout) {
    let n1 = g.order();
    let m1 = g.size();
    let mut set = BTreeSet::new();
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        set.insert((u, n1 + k));
        set.insert((v, n1 + k));
    }
    for u in 0..n1 {
        for v in (u + 1)..n1 {
            if !g.has_edge(u, v) {
                set.insert((u, v));
            }
        }
    }
    let base = n1 + m1;
    let layout = CompositeLayout {
        g1_vertices: 0..n1,
        subdivision_vertices: n1..base,
        copy_blocks: (0..copies)
            .map(|c| base + c * n2..base + (c + 1) * n2)
            .collect(),
    };
    (set, layout)
}

/// Builds `G1 op G2`.
pub fn composite(op: Operation, g1: &Graph, g2: &Graph) -> Result<(Graph, CompositeLayout)> {
    match op {
        Operation::Cvc => {
            if g1.order() == 0 {
                return Err(Error::Precondition("G1 must have at least one vertex".into()));
            }
        }
        Operation::Cec | Operation::Cenc => {
            if g1.size() == 0 {
                return Err(Error::NoEdges { op: op.name() });
            }
        }
    }
    let n1 = g1.order();
    let n2 = g2.order();
    let copies = op.copies(n1, g1.size());
    let (mut set, layout) = central_edges(g1, copies, n2);
    for (c, block) in layout.copy_blocks.iter().enumerate() {
        let off = block.start;
        for &(a, b) in g2.edges() {
            set.insert((off + a, off + b));
        }
        let anchors: Vec<usize> = match op {
            Operation::Cvc => vec![c],
            Operation::Cec => vec![layout.subdivision_vertices.start + c],
            Operation::Cenc => {
                let (u, v) = g1.edges()[c];
                vec![u, v]
            }
        };
        for a in anchors {
            for w in block.clone() {
                set.insert((a.min(w), a.max(w)));
            }
        }
    }
    let graph = Graph::from_edge_set(layout.order(), set)
        .with_labels(layout.labels())
        .expect("label count matches order");
    Ok((graph, layout))
}

pub fn central_vertex_corona(g1: &Graph, g2: &Graph) -> Result<(Graph, CompositeLayout)> {
    composite(Operation::Cvc, g1, g2)
}

pub fn central_edge_corona(g1: &Graph, g2: &Graph) -> Result<(Graph, CompositeLayout)> {
    composite(Operation::Cec, g1, g2)
}

pub fn central_edge_neighborhood_corona(g1: &Graph, g2: &Graph) -> Result<(Graph, CompositeLayout)> {
    composite(Operation::Cenc, g1, g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::IntMatrix;
    use crate::named;

    fn ones_row(n: usize) -> IntMatrix {
        IntMatrix::from_rows(&[vec![1; n]]).unwrap()
    }

    #[test]
    fn central_graph_counts() {
        let (c, _) = central_graph(&named::complete(2));
        assert_eq!(c, named::path(3).permuted(&[0, 2, 1]).unwrap());
        let (c, _) = central_graph(&named::path(3));
        assert_eq!((c.order(), c.size()), (5, 5));
        let (c, _) = central_graph(&named::complete_bipartite(3, 3));
        assert_eq!((c.order(), c.size()), (15, 24));
        // K_n: no non-adjacent pairs, so the result is the pure subdivision.
        let (c, _) = central_graph(&named::complete(4));
        assert_eq!((c.order(), c.size()), (10, 12));
    }

    #[test]
    fn corona_counts_from_figures() {
        let p3 = named::path(3);
        let p2 = named::path(2);
        let (g, _) = central_vertex_corona(&p3, &p2).unwrap();
        assert_eq!((g.order(), g.size()), (11, 14));
        let (g, _) = central_edge_corona(&p3, &p2).unwrap();
        assert_eq!(g.order(), 9);
        let (g, _) = central_edge_neighborhood_corona(&p3, &p2).unwrap();
        assert_eq!((g.order(), g.size()), (9, 15));
    }

    #[test]
    fn corona_counts_small() {
        let k1 = named::complete(1);
        let k2 = named::complete(2);
        assert_eq!(central_vertex_corona(&k2, &k1).unwrap().0.order(), 5);
        let (g, _) = central_edge_corona(&k2, &k1).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        let (g, _) = central_edge_corona(&named::complete_bipartite(3, 3), &k2).unwrap();
        assert_eq!(g.order(), 33);
        let (g, l) = central_edge_neighborhood_corona(&k2, &k1).unwrap();
        let copy = l.copy_blocks[0].start;
        assert!(g.has_edge(0, copy) && g.has_edge(1, copy));
        assert_eq!(g.degree(copy), 2);
    }

    #[test]
    fn edge_coronas_need_an_edge() {
        let e3 = Graph::empty(3);
        let k2 = named::complete(2);
        assert!(matches!(central_edge_corona(&e3, &k2), Err(Error::NoEdges { .. })));
        assert!(matches!(
            central_edge_neighborhood_corona(&e3, &k2),
            Err(Error::NoEdges { .. })
        ));
        assert!(central_vertex_corona(&e3, &k2).is_ok());
        assert!(central_vertex_corona(&Graph::empty(0), &k2).is_err());
    }

    #[test]
    fn edgeless_g2_gives_stars() {
        let g1 = named::cycle(4);
        let (g, l) = central_vertex_corona(&g1, &Graph::empty(3)).unwrap();
        for (i, block) in l.copy_blocks.iter().enumerate() {
            for w in block.clone() {
                assert_eq!(g.neighbors(w), &[i]);
            }
        }
        let (c, _) = central_graph(&g1);
        assert_eq!(g.size(), c.size() + 4 * 3);
    }

    #[test]
    fn block_structure_matches_definitions() {
        let g1 = named::cycle(5);
        let g2 = named::path(3);
        let (n1, m1, n2) = (5, 5, 3);
        let abar = g1.complement().adjacency_matrix();
        let inc = g1.incidence_matrix();
        let a2 = g2.adjacency_matrix();
        for op in Operation::ALL {
            let (g, l) = composite(op, &g1, &g2).unwrap();
            let a = g.adjacency_matrix();
            let copies = op.copies(n1, m1);
            let nv = l.g1_vertices.clone();
            let ns = l.subdivision_vertices.clone();
            let nc = ns.end..l.order();
            assert_eq!(a.block(nv.clone(), nv.clone()), abar);
            assert_eq!(a.block(nv.clone(), ns.clone()), inc);
            assert_eq!(a.block(ns.clone(), ns.clone()), IntMatrix::zeros(m1, m1));
            assert_eq!(a.block(nc.clone(), nc.clone()), IntMatrix::identity(copies).kron(&a2));
            let (x, y) = match op {
                Operation::Cvc => (
                    IntMatrix::identity(n1).kron(&ones_row(n2)),
                    IntMatrix::zeros(m1, copies * n2),
                ),
                Operation::Cec => (
                    IntMatrix::zeros(n1, copies * n2),
                    IntMatrix::identity(m1).kron(&ones_row(n2)),
                ),
                Operation::Cenc => (inc.kron(&ones_row(n2)), IntMatrix::zeros(m1, copies * n2)),
            };
            assert_eq!(a.block(nv.clone(), nc.clone()), x, "{op}");
            assert_eq!(a.block(ns.clone(), nc.clone()), y, "{op}");
        }
    }

    #[test]
    fn neighborhood_corona_degrees() {
        // Original vertices of an r1-regular G1 have degree n1 - 1 + r1 * n2.
        let g1 = named::petersen();
        let g2 = named::cycle(4);
        let (g, l) = central_edge_neighborhood_corona(&g1, &g2).unwrap();
        for v in l.g1_vertices.clone() {
            assert_eq!(g.degree(v), 10 - 1 + 3 * 4);
        }
    }

    #[test]
    fn layout_covers_all_vertices() {
        let (g, l) = central_edge_corona(&named::complete(4), &named::complete(3)).unwrap();
        let mut covered = vec![0u8; g.order()];
        for r in std::iter::once(&l.g1_vertices)
            .chain(std::iter::once(&l.subdivision_vertices))
            .chain(&l.copy_blocks)
        {
            for v in r.clone() {
                covered[v] += 1;
            }
        }
        assert!(covered.iter().all(|&c| c == 1));
        assert_eq!(l.copy_blocks.len(), 6);
        assert_eq!(g.labels().unwrap()[4], "s0");
    }
}
