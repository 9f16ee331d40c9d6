use anyhow::bail;
use serde::Serialize;
use std::path::Path;

use crate::commands::antichain::{comparability_name, matrix_sharded};
use crate::commands::Context;
use crate::input::read_graph6_file;
use crate::report::{Report, EXIT_EXHAUSTED, EXIT_VERIFIED};

#[derive(Serialize)]
struct MatrixReport {
    command: &'static str,
    file: String,
    graphs: Vec<String>,
    matrix: Vec<Vec<&'static str>>,
    exhausted_entries: usize,
}

/// Comparability matrix of a graph6 file. Entry (i, j) reads "row i is
/// below / above / equal to / incomparable with column j".
pub fn run(ctx: &Context, file: &Path) -> anyhow::Result<Report> {
    let graphs = read_graph6_file(file)?;
    if graphs.is_empty() {
        bail!("{}: no graphs", file.display());
    }
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_connected() {
            bail!("{}: graph {} is disconnected", file.display(), i + 1);
        }
    }
    let (entries, exhausted) = matrix_sharded(&graphs, ctx)?;
    let rep = MatrixReport {
        command: "matrix",
        file: file.display().to_string(),
        graphs: graphs
            .iter()
            .map(|g| ctrord_core::graph6::write_graph6(g).expect("parsed graphs re-encode"))
            .collect(),
        matrix: entries.iter().map(|row| row.iter().map(|&e| comparability_name(e)).collect()).collect(),
        exhausted_entries: exhausted,
    };
    Report::new(&rep, if exhausted > 0 { EXIT_EXHAUSTED } else { EXIT_VERIFIED })
}
