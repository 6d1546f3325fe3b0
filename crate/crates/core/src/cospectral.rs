//! Cospectral pairs: exact checks, small-graph isomorphism, exhaustive
//! enumeration of regular graphs and transfer through the coronas.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::corona::{composite, Operation};
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::io::write_graph6;
use crate::par;
use crate::poly::{char_poly_exact, Polynomial};
use crate::spectra::{spectrum, G2Data, RegularProfile};

/// Largest order the backtracking isomorphism test accepts.
pub const ISO_CAP: usize = 12;

/// Exact equality of characteristic polynomials; different orders are never
/// cospectral.
pub fn is_cospectral(a: &Graph, b: &Graph, kind: MatrixKind) -> bool {
    if a.order() != b.order() {
        return false;
    }
    match (char_poly_exact(&a.matrix(kind)), char_poly_exact(&b.matrix(kind))) {
        (Ok(p), Ok(q)) => p == q,
        _ => false,
    }
}

/// Stable colour refinement of the disjoint union `a ∪ b`; colours are
/// canonical so they can be compared across the two halves.
fn joint_colours(a: &Graph, b: &Graph) -> (Vec<u32>, Vec<u32>) {
    let u = a.disjoint_union(b);
    let n = u.order();
    let mut colour: Vec<u32> = (0..n).map(|v| u.degree(v) as u32).collect();
    let mut classes = count_classes(&colour);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = u.neighbors(v).iter().map(|&w| colour[w]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colour = sigs
            .iter()
            .map(|s| uniq.binary_search(s).expect("present") as u32)
            .collect();
        let next = count_classes(&colour);
        if next == classes {
            break;
        }
        classes = next;
    }
    let split = a.order();
    (colour[..split].to_vec(), colour[split..].to_vec())
}

fn count_classes(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn histogram(c: &[u32]) -> Vec<u32> {
    let mut v = c.to_vec();
    v.sort_unstable();
    v
}

/// Why two graphs are known not to be isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonIsoWitness {
    pub description: String,
    /// True when the claim rests on structure rather than a complete check.
    pub heuristic: bool,
}

/// Cheap sound witnesses first, then exhaustive search up to [`ISO_CAP`].
/// `Ok(None)` means the graphs are isomorphic.
pub fn non_isomorphism_witness(a: &Graph, b: &Graph) -> Result<Option<NonIsoWitness>> {
    let sound = |d: String| Ok(Some(NonIsoWitness { description: d, heuristic: false }));
    if a.order() != b.order() || a.size() != b.size() {
        return sound(format!(
            "order/size differ: ({}, {}) vs ({}, {})",
            a.order(),
            a.size(),
            b.order(),
            b.size()
        ));
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return sound("degree sequences differ".into());
    }
    let (ca, cb) = joint_colours(a, b);
    if histogram(&ca) != histogram(&cb) {
        return sound("colour-refinement histograms differ".into());
    }
    if a.order() > ISO_CAP {
        return Err(Error::SizeCap { n: a.order(), cap: ISO_CAP });
    }
    if isomorphism(a, b, &ca, &cb).is_some() {
        Ok(None)
    } else {
        sound("exhaustive backtracking found no isomorphism".into())
    }
}

/// Exact isomorphism decision for graphs of order at most [`ISO_CAP`].
pub fn is_isomorphic_small(a: &Graph, b: &Graph) -> Result<bool> {
    let n = a.order().max(b.order());
    if n > ISO_CAP {
        return Err(Error::SizeCap { n, cap: ISO_CAP });
    }
    Ok(non_isomorphism_witness(a, b)?.is_none())
}

/// A vertex map `a → b` respecting the refined colours, if one exists.
fn isomorphism(a: &Graph, b: &Graph, ca: &[u32], cb: &[u32]) -> Option<Vec<usize>> {
    let n = a.order();
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in ca {
        *class_size.entry(c).or_default() += 1;
    }
    // Small classes first; ties broken towards vertices adjacent to earlier ones.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&ca[v]], ca[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        ca: &[u32],
        cb: &[u32],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(k) else { return true };
        for w in 0..b.order() {
            if used[w] || cb[w] != ca[u] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&p| a.has_edge(u, p) == b.has_edge(w, map[p]));
            if !consistent {
                continue;
            }
            map[u] = w;
            used[w] = true;
            if go(k + 1, order, a, b, ca, cb, map, used) {
                return true;
            }
            used[w] = false;
            map[u] = usize::MAX;
        }
        false
    }
    go(0, &order, a, b, ca, cb, &mut map, &mut used).then_some(map)
}

/// Every `r`-regular graph on `n` vertices up to isomorphism, connected or
/// not. Degrees above `(n-1)/2` go through complements.
pub fn all_regular_graphs(n: usize, r: usize) -> Result<Vec<Graph>> {
    if n > ISO_CAP {
        return Err(Error::SizeCap { n, cap: ISO_CAP });
    }
    if r >= n.max(1) || (n * r) % 2 == 1 {
        return Ok(if n == 0 && r == 0 { vec![Graph::empty(0)] } else { Vec::new() });
    }
    if 2 * r > n - 1 {
        return Ok(all_regular_graphs(n, n - 1 - r)?
            .into_iter()
            .map(|g| g.complement())
            .collect());
    }
    let mut labelled = Vec::new();
    let mut adj = vec![0u32; n];
    extend(0, n, r, &mut adj, &mut labelled);
    let mut buckets: HashMap<Vec<String>, Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for g in labelled {
        let key = char_poly_exact(&g.adjacency_matrix())?.to_exact_strings();
        let reps = buckets.entry(key).or_default();
        let mut fresh = true;
        for h in reps.iter() {
            if is_isomorphic_small(&g, h)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(g.clone());
            out.push(g);
        }
    }
    out.sort_by_key(write_graph6);
    Ok(out)
}

/// Connected `r`-regular graphs on `n` vertices up to isomorphism.
pub fn regular_graphs(n: usize, r: usize) -> Result<Vec<Graph>> {
    Ok(all_regular_graphs(n, r)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Row-by-row completion. Vertex `v` picks its neighbours above `v`; vertices
/// above `v` with identical adjacency to `0..v` are interchangeable, so within
/// each such class only prefixes are chosen.
fn extend(v: usize, n: usize, r: usize, adj: &mut [u32], out: &mut Vec<Graph>) {
    if v == n {
        let edges = (0..n).flat_map(|u| {
            let row = adj[u];
            ((u + 1)..n).filter(move |&w| row >> w & 1 == 1).map(move |w| (u, w))
        });
        out.push(Graph::new(n, edges).expect("valid by construction"));
        return;
    }
    let need = r - adj[v].count_ones() as usize;
    let below = (1u32 << v) - 1;
    let mut classes: Vec<(u32, Vec<usize>)> = Vec::new();
    for (w, &row) in adj.iter().enumerate().take(n).skip(v + 1) {
        if row.count_ones() as usize >= r {
            continue;
        }
        let key = row & below;
        match classes.iter_mut().find(|c| c.0 == key) {
            Some(c) => c.1.push(w),
            None => classes.push((key, vec![w])),
        }
    }
    let available: usize = classes.iter().map(|c| c.1.len()).sum();
    if available < need {
        return;
    }
    let mut counts = vec![0usize; classes.len()];
    choose(0, need, &classes, &mut counts, &mut |counts| {
        let picked: Vec<usize> = classes
            .iter()
            .zip(counts)
            .flat_map(|(c, &k)| c.1[..k].iter().copied())
            .collect();
        for &w in &picked {
            adj[v] |= 1 << w;
            adj[w] |= 1 << v;
        }
        if feasible(v, n, r, adj) {
            extend(v + 1, n, r, adj, out);
        }
        for &w in &picked {
            adj[v] &= !(1 << w);
            adj[w] &= !(1 << v);
        }
    });
}

fn choose(
    i: usize,
    left: usize,
    classes: &[(u32, Vec<usize>)],
    counts: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if i == classes.len() {
        if left == 0 {
            f(counts);
        }
        return;
    }
    for k in 0..=left.min(classes[i].1.len()) {
        counts[i] = k;
        choose(i + 1, left - k, classes, counts, f);
    }
    counts[i] = 0;
}

/// Every unfinished vertex above `v` can still reach degree `r`.
fn feasible(v: usize, n: usize, r: usize, adj: &[u32]) -> bool {
    let open: Vec<usize> = ((v + 1)..n)
        .filter(|&w| (adj[w].count_ones() as usize) < r)
        .collect();
    open.iter()
        .all(|&w| r - (adj[w].count_ones() as usize) < open.len())
}

/// Exact evidence that two graphs share a spectrum and are not isomorphic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CospectralCertificate {
    pub kind: MatrixKind,
    pub shared_char_poly: Polynomial,
    pub noniso_witness: NonIsoWitness,
    /// graph6 strings.
    pub pair: [String; 2],
    pub provenance: String,
}

impl CospectralCertificate {
    /// Recomputes both characteristic polynomials from scratch.
    pub fn recheck(&self) -> Result<bool> {
        let a = crate::io::parse_graph6(&self.pair[0])?;
        let b = crate::io::parse_graph6(&self.pair[1])?;
        Ok(char_poly_exact(&a.matrix(self.kind))? == self.shared_char_poly
            && char_poly_exact(&b.matrix(self.kind))? == self.shared_char_poly)
    }
}

fn witness_any_size(a: &Graph, b: &Graph, fallback: &str) -> Result<Option<NonIsoWitness>> {
    match non_isomorphism_witness(a, b) {
        Err(Error::SizeCap { .. }) => Ok(Some(NonIsoWitness {
            description: fallback.into(),
            heuristic: true,
        })),
        other => other,
    }
}

/// Certifies that `a` and `b` are cospectral and non-isomorphic.
pub fn certify_pair(a: &Graph, b: &Graph, kind: MatrixKind) -> Result<CospectralCertificate> {
    let p = char_poly_exact(&a.matrix(kind))?;
    if a.order() != b.order() || char_poly_exact(&b.matrix(kind))? != p {
        return Err(Error::Precondition(format!("graphs are not {kind}-cospectral")));
    }
    let witness = witness_any_size(a, b, "no sound witness within the isomorphism size cap")?
        .ok_or_else(|| Error::Precondition("graphs are isomorphic".into()))?;
    Ok(CospectralCertificate {
        kind,
        shared_char_poly: p,
        noniso_witness: witness,
        pair: [write_graph6(a), write_graph6(b)],
        provenance: "direct check".into(),
    })
}

/// Which factor of the corona the cospectral pair fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `H op Gi`: the pair supplies the copies.
    Left,
    /// `Gi op H`: the pair is the central factor.
    Right,
}

/// Builds `H op Gi` (or `Gi op H`) for both members of a cospectral regular
/// pair and certifies the composites.
pub fn transfer_pair(
    h: &Graph,
    g1: &Graph,
    g2: &Graph,
    op: Operation,
    kind: MatrixKind,
    side: Side,
) -> Result<CospectralCertificate> {
    let (r1, r2) = (g1.regularity().r, g2.regularity().r);
    if r1.is_none() || r1 != r2 || g1.order() != g2.order() {
        return Err(Error::Precondition("pair must be regular with equal order and degree".into()));
    }
    if !is_cospectral(g1, g2, kind) {
        return Err(Error::Precondition(format!("pair is not {kind}-cospectral")));
    }
    if witness_any_size(g1, g2, "")?.is_none() {
        return Err(Error::Precondition("pair must be non-isomorphic to certify".into()));
    }
    if side == Side::Left && h.regularity().r.is_none() {
        return Err(Error::NotRegular("H must be regular when it is the central factor".into()));
    }
    let build = |g: &Graph| match side {
        Side::Left => composite(op, h, g).map(|c| c.0),
        Side::Right => composite(op, g, h).map(|c| c.0),
    };
    let (a, b) = (build(g1)?, build(g2)?);
    let mut cert = certify_pair(&a, &b, kind).map_err(|e| match e {
        Error::Precondition(m) => Error::Reconciliation(format!("transfer failed: {m}")),
        other => other,
    })?;
    if cert.noniso_witness.heuristic {
        cert.noniso_witness.description =
            "factor non-isomorphism + layout argument (composites exceed the isomorphism cap)".into();
    }
    cert.provenance = format!("transfer: {op}, kind {kind}, side {side:?}");
    Ok(cert)
}

/// The transfer law as a factorization identity: the template output is the
/// same for both members of the pair.
pub fn transfer_identity(h: &Graph, g1: &Graph, g2: &Graph, op: Operation, kind: MatrixKind, side: Side) -> Result<bool> {
    let f = |g: &Graph| -> Result<_> {
        match side {
            Side::Left => spectrum(op, &RegularProfile::from_graph(h)?, &G2Data::from_graph(g, kind)?),
            Side::Right => spectrum(op, &RegularProfile::from_graph(g)?, &G2Data::from_graph(h, kind)?),
        }
    };
    let (a, b) = (f(g1)?, f(g2)?);
    Ok(a.explicit_eigenvalues == b.explicit_eigenvalues && a.factors == b.factors)
}

/// Non-isomorphic connected regular cospectral pairs for every order up to
/// `max_n`. Each `(n, r)` class is searched independently.
pub fn enumerate_cospectral_regular(max_n: usize, kind: MatrixKind) -> Result<Vec<CospectralCertificate>> {
    let jobs: Vec<(usize, usize)> = (1..=max_n)
        .flat_map(|n| (2..n.saturating_sub(2)).map(move |r| (n, r)))
        .filter(|&(n, r)| (n * r).is_multiple_of(2))
        .collect();
    let found = par::map(&jobs, |&(n, r)| -> Result<Vec<CospectralCertificate>> {
        let graphs = regular_graphs(n, r)?;
        let mut buckets: Vec<(Polynomial, Vec<&Graph>)> = Vec::new();
        for g in &graphs {
            let p = char_poly_exact(&g.matrix(kind))?;
            match buckets.iter_mut().find(|b| b.0 == p) {
                Some(b) => b.1.push(g),
                None => buckets.push((p, vec![g])),
            }
        }
        let mut certs = Vec::new();
        for (_, members) in buckets {
            for i in 0..members.len() {
                for j in (i + 1)..members.len() {
                    let mut c = certify_pair(members[i], members[j], kind)?;
                    c.provenance = format!("exhaustive enumeration: n = {n}, r = {r}");
                    certs.push(c);
                }
            }
        }
        Ok(certs)
    });
    let mut out = Vec::new();
    for f in found {
        out.extend(f?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn cospectral_basics() {
        let g = named::petersen();
        assert!(is_cospectral(&g, &g, MatrixKind::A));
        assert!(!is_cospectral(&named::complete(4), &named::cycle(5), MatrixKind::A));
        // K_{1,4} and C4 ∪ K1 are the classic small A-cospectral pair.
        let star = named::complete_bipartite(1, 4);
        let c4k1 = named::cycle(4).disjoint_union(&named::complete(1));
        assert!(is_cospectral(&star, &c4k1, MatrixKind::A));
        let cert = certify_pair(&star, &c4k1, MatrixKind::A).unwrap();
        assert!(!cert.noniso_witness.heuristic);
        assert!(cert.recheck().unwrap());
    }

    #[test]
    fn isomorphism_small() {
        let p3 = named::path(3);
        assert!(is_isomorphic_small(&p3, &p3.permuted(&[2, 0, 1]).unwrap()).unwrap());
        let k13 = named::complete_bipartite(1, 3);
        let k3k1 = named::complete(3).disjoint_union(&named::complete(1));
        assert!(!is_isomorphic_small(&k13, &k3k1).unwrap());
        let pet = named::petersen();
        let shuffled = pet.permuted(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]).unwrap();
        assert!(is_isomorphic_small(&pet, &shuffled).unwrap());
        assert!(matches!(
            is_isomorphic_small(&named::cycle(13), &named::cycle(13)),
            Err(Error::SizeCap { .. })
        ));
        // Same degree sequence and colours: C6 vs two triangles.
        let two_k3 = named::complete(3).disjoint_union(&named::complete(3));
        assert!(!is_isomorphic_small(&named::cycle(6), &two_k3).unwrap());
    }

    #[test]
    fn regular_counts() {
        // Known counts of connected regular graphs.
        assert_eq!(regular_graphs(6, 3).unwrap().len(), 2);
        assert_eq!(regular_graphs(8, 3).unwrap().len(), 5);
        assert_eq!(regular_graphs(10, 3).unwrap().len(), 19);
        assert_eq!(regular_graphs(7, 4).unwrap().len(), 2);
        assert_eq!(regular_graphs(8, 4).unwrap().len(), 6);
        assert_eq!(all_regular_graphs(6, 2).unwrap().len(), 2);
    }

    #[test]
    fn rejects_isomorphic_pair() {
        let g = named::cycle(5);
        let h = g.permuted(&[1, 2, 3, 4, 0]).unwrap();
        assert!(certify_pair(&g, &h, MatrixKind::A).is_err());
        assert!(transfer_pair(&named::complete(3), &g, &h, Operation::Cvc, MatrixKind::A, Side::Left).is_err());
    }
}
