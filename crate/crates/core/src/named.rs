//! Built-in graph families and the short names the CLI accepts for them.
//!
//! Grammar (case-sensitive):
//!
//! | name            | graph                                           |
//! |-----------------|-------------------------------------------------|
//! | `K<n>` (1 digit)| complete graph                                  |
//! | `K<p><q>`       | complete bipartite `K_{p,q}` when both digits are nonzero, e.g. `K33` |
//! | `K<p>,<q>`, `K<p>_<q>` | complete bipartite                       |
//! | `K(<n>)`, `K<n>` with a zero digit | complete graph, e.g. `K(12)`, `K10` |
//! | `C<n>`          | cycle, `n >= 3`                                 |
//! | `P<n>`          | path on `n` vertices                            |
//! | `E<n>`          | edgeless graph                                  |
//! | `Q<d>`          | hypercube of dimension `d`                      |
//! | `Petersen`      | Petersen graph                                  |

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let set = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_set(n, set)
}

/// Cycle `0-1-...-(n-1)-0`. For `n < 3` this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let mut set: BTreeSet<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        set.insert((0, n - 1));
    }
    Graph::from_edge_set(n, set)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edge_set(n, (1..n).map(|v| (v - 1, v)).collect())
}

/// `K_{p,q}` with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let set = (0..p)
        .flat_map(|u| (p..p + q).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_set(p + q, set)
}

pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let set = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edge_set(n, set)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let set = (0..5)
        .flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)])
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edge_set(10, set)
}

/// Parses one of the built-in names. Returns `None` when `name` is not in the
/// grammar, so callers can fall back to other graph sources.
pub fn parse(name: &str) -> Option<Result<Graph>> {
    let name = name.trim();
    if name.eq_ignore_ascii_case("petersen") {
        return Some(Ok(petersen()));
    }
    let mut chars = name.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    if rest.is_empty() {
        return None;
    }
    let num = |s: &str| -> Option<usize> {
        if s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() {
            s.parse().ok()
        } else {
            None
        }
    };
    let bad = |msg: String| Some(Err(Error::Parse { offset: 0, message: msg }));
    match head {
        'K' => {
            if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                return num(inner).map(|n| Ok(complete(n)));
            }
            if let Some((p, q)) = rest.split_once([',', '_']) {
                return match (num(p), num(q)) {
                    (Some(p), Some(q)) if p > 0 && q > 0 => Some(Ok(complete_bipartite(p, q))),
                    (Some(_), Some(_)) => bad(format!("K_{{p,q}} needs p, q >= 1 in {name:?}")),
                    _ => None,
                };
            }
            let digits: Vec<u32> = rest.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
            match digits.as_slice() {
                [p, q] if *p > 0 && *q > 0 => {
                    Some(Ok(complete_bipartite(*p as usize, *q as usize)))
                }
                _ => num(rest).map(|n| Ok(complete(n))),
            }
        }
        'C' => match num(rest)? {
            n if n >= 3 => Some(Ok(cycle(n))),
            n => bad(format!("cycle C{n} needs at least 3 vertices")),
        },
        'P' => num(rest).map(|n| Ok(path(n))),
        'E' => num(rest).map(|n| Ok(Graph::empty(n))),
        'Q' => match num(rest)? {
            d if d <= 16 => Some(Ok(hypercube(d as u32))),
            d => bad(format!("hypercube Q{d} is too large")),
        },
        _ => None,
    }
}
