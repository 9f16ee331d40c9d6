use anyhow::anyhow;
use ctrord_core::search::{find_model_with, find_rooted_model_with, SearchOutcome};
use serde::Serialize;

use crate::commands::Context;
use crate::input::{resolve_graph, resolve_rooted};
use crate::report::{GraphDoc, Report, EXIT_EXHAUSTED, EXIT_REFUTED, EXIT_VERIFIED};

#[derive(Serialize)]
struct CheckReport {
    command: &'static str,
    h: GraphDoc,
    g: GraphDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_root: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_root: Option<usize>,
    budget: Option<u64>,
    outcome: &'static str,
    contraction: Option<bool>,
    model: Option<Vec<Vec<usize>>>,
    nodes: u64,
}

fn finish(
    command: &'static str,
    h: GraphDoc,
    g: GraphDoc,
    roots: Option<(usize, usize)>,
    budget: Option<u64>,
    outcome: SearchOutcome,
    nodes: u64,
) -> anyhow::Result<Report> {
    let (name, contraction, model, exit) = match outcome {
        SearchOutcome::Found(m) => ("contraction", Some(true), Some(m.part_lists()), EXIT_VERIFIED),
        SearchOutcome::Absent => ("not-a-contraction", Some(false), None, EXIT_REFUTED),
        SearchOutcome::Exhausted => ("exhausted", None, None, EXIT_EXHAUSTED),
    };
    let rep = CheckReport {
        command,
        h,
        g,
        h_root: roots.map(|r| r.0),
        g_root: roots.map(|r| r.1),
        budget,
        outcome: name,
        contraction,
        model,
        nodes,
    };
    Report::new(&rep, exit)
}

pub fn run(ctx: &Context, h_arg: &str, g_arg: &str) -> anyhow::Result<Report> {
    let (h, hdoc) = resolve_graph(h_arg)?;
    let (g, gdoc) = resolve_graph(g_arg)?;
    let run = find_model_with(&h, &g, &ctx.search).map_err(|e| anyhow!("{e}"))?;
    finish("check", hdoc, gdoc, None, ctx.search.budget, run.outcome, run.nodes)
}

pub fn run_rooted(ctx: &Context, h_arg: &str, g_arg: &str) -> anyhow::Result<Report> {
    let (h, hdoc) = resolve_rooted(h_arg)?;
    let (g, gdoc) = resolve_rooted(g_arg)?;
    let run = find_rooted_model_with(&h, &g, &ctx.search).map_err(|e| anyhow!("{e}"))?;
    finish(
        "check-rooted",
        hdoc,
        gdoc,
        Some((h.root, g.root)),
        ctx.search.budget,
        run.outcome,
        run.nodes,
    )
}
