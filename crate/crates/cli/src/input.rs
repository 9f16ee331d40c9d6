//! Graph argument resolution: family spec, file of graph6 lines, or a
//! graph6 literal, in that order.

use anyhow::{anyhow, bail, Context as _};
use ctrord_core::antichains::{make, FamilySpec};
use ctrord_core::graph::{Graph, RootedGraph};
use ctrord_core::graph6::{parse_graph6, write_graph6};
use std::path::Path;

use crate::report::GraphDoc;

pub fn resolve_graph(arg: &str) -> anyhow::Result<(Graph, GraphDoc)> {
    let graph = if let Ok(spec) = arg.parse::<FamilySpec>() {
        make(spec)?.graph
    } else if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| anyhow!("{arg}: no graph6 line found"))?;
        parse_graph6(line).map_err(|e| anyhow!("{arg}: {e}"))?
    } else {
        parse_graph6(arg.trim()).map_err(|e| {
            anyhow!("{arg:?} is not a family spec, an existing file, or a graph6 string ({e})")
        })?
    };
    let doc = GraphDoc {
        input: arg.to_string(),
        graph6: write_graph6(&graph).map_err(|e| anyhow!("{e}"))?,
        n: graph.n(),
        m: graph.edge_count(),
    };
    Ok((graph, doc))
}

/// `GRAPH@ROOT` arguments for the rooted check.
pub fn resolve_rooted(arg: &str) -> anyhow::Result<(RootedGraph, GraphDoc)> {
    let (graph_part, root_part) = arg
        .rsplit_once('@')
        .ok_or_else(|| anyhow!("{arg:?}: rooted graphs are written GRAPH@ROOT, e.g. Ch@0"))?;
    let root: usize = root_part.parse().with_context(|| format!("root index in {arg:?}"))?;
    let (graph, doc) = resolve_graph(graph_part)?;
    if root >= graph.n() {
        bail!("{arg:?}: root {root} out of range for {} vertices", graph.n());
    }
    Ok((RootedGraph::new(graph, root), doc))
}

/// All graphs from a graph6 file, one per non-empty line.
pub fn read_graph6_file(path: &Path) -> anyhow::Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| anyhow!("{}:{}: {e}", path.display(), lineno + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Inclusive integer ranges: "3..5" or a single "4".
pub fn parse_range(s: &str) -> anyhow::Result<Vec<usize>> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim_start_matches('=').trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().with_context(|| format!("range {s:?}"))?;
    let hi: usize = hi.parse().with_context(|| format!("range {s:?}"))?;
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo..=hi).collect())
}
