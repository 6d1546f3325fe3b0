//! Graph sources: built-in names, graph6 or edge-list files, and inline graph6.

use std::path::Path;

use corona_core::io::{parse_edge_list, parse_graph6};
use corona_core::{named, Error, Graph};

use crate::Failure;

/// Edge lists open with an `n <count>` header; everything else is graph6.
fn parse_file_text(text: &str) -> corona_core::Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("n ") || first == "n" {
        return parse_edge_list(text);
    }
    let body = first.strip_prefix(">>graph6<<").unwrap_or(first);
    parse_graph6(body)
}

pub fn load_graph(src: &str) -> Result<Graph, Failure> {
    if let Some(g) = named::parse(src) {
        return Ok(g?);
    }
    let path = Path::new(src);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{src}: {e}")))?;
        return parse_file_text(&text).map_err(|e| Failure::Input(format!("{src}: {e}")));
    }
    parse_graph6(src).map_err(|e| match e {
        Error::Parse { .. } => {
            Failure::Input(format!("{src:?} is not a built-in name or a file; as graph6: {e}"))
        }
        other => other.into(),
    })
}
