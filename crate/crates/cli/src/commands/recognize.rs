use ctrord_core::blocks::BlockKind;
use ctrord_core::graph::bits;
use ctrord_core::structure::clique_cactus_report;
use serde::Serialize;

use crate::input::resolve_graph;
use crate::report::{GraphDoc, Report, EXIT_REFUTED, EXIT_VERIFIED};

#[derive(Serialize)]
struct BlockDoc {
    vertices: Vec<usize>,
    kind: &'static str,
}

#[derive(Serialize)]
struct RecognizeReport {
    command: &'static str,
    g: GraphDoc,
    clique_cactus: bool,
    /// Equals `clique_cactus` for connected graphs; null when the input is
    /// disconnected (the diamond-exclusion question is posed on connected
    /// graphs only).
    excludes_diamond: Option<bool>,
    cutvertices: Vec<usize>,
    blocks: Vec<BlockDoc>,
    offending_blocks: Vec<usize>,
}

fn kind_name(kind: BlockKind) -> &'static str {
    match kind {
        BlockKind::Clique => "clique",
        BlockKind::Cycle => "cycle",
        BlockKind::Edge => "edge",
        BlockKind::Other => "other",
    }
}

pub fn run(g_arg: &str) -> anyhow::Result<Report> {
    let (g, doc) = resolve_graph(g_arg)?;
    let report = clique_cactus_report(&g);
    let clique_cactus = report.is_clique_cactus();
    let rep = RecognizeReport {
        command: "recognize",
        g: doc,
        clique_cactus,
        excludes_diamond: g.is_connected().then_some(clique_cactus),
        cutvertices: bits(report.decomposition.cutvertices).collect(),
        blocks: report
            .decomposition
            .blocks
            .iter()
            .map(|b| BlockDoc { vertices: b.vertex_list(), kind: kind_name(b.kind) })
            .collect(),
        offending_blocks: report.offending.clone(),
    };
    Report::new(&rep, if clique_cactus { EXIT_VERIFIED } else { EXIT_REFUTED })
}
