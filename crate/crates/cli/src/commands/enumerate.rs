use anyhow::anyhow;
use ctrord_core::enumerate::enumerate_connected;
use ctrord_core::graph6::write_graph6;
use ctrord_core::structure::{excludes_diamond, is_clique_cactus};
use serde::Serialize;

use crate::report::{Report, EXIT_VERIFIED};
use crate::CorpusFilter;

#[derive(Serialize)]
struct EnumerateReport {
    command: &'static str,
    n: usize,
    filter: Option<&'static str>,
    count: usize,
    graphs: Vec<String>,
}

/// Prints one graph6 line per representative to stdout (so the output
/// pipes straight into `matrix`); the JSON report goes to `--json`.
pub fn run(n: usize, filter: Option<CorpusFilter>) -> anyhow::Result<Report> {
    let graphs = enumerate_connected(n).map_err(|e| anyhow!("{e}"))?;
    let kept: Vec<String> = graphs
        .iter()
        .filter(|g| match filter {
            None => true,
            Some(CorpusFilter::CliqueCactus) => is_clique_cactus(g),
            Some(CorpusFilter::DiamondFree) => excludes_diamond(g).expect("corpus is connected"),
        })
        .map(|g| write_graph6(g).map_err(|e| anyhow!("{e}")))
        .collect::<Result<_, _>>()?;
    let rep = EnumerateReport {
        command: "enumerate",
        n,
        filter: filter.map(|f| match f {
            CorpusFilter::CliqueCactus => "clique-cactus",
            CorpusFilter::DiamondFree => "diamond-free",
        }),
        count: kept.len(),
        graphs: kept.clone(),
    };
    let mut report = Report::new(&rep, EXIT_VERIFIED)?;
    report.stdout_override = Some(kept.join("\n") + if kept.is_empty() { "" } else { "\n" });
    Ok(report)
}
