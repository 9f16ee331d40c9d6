use anyhow::{anyhow, bail};
use ctrord_core::antichains::{
    check_ding_premises, compare_pair, make, Comparability, DingConfig, FamilySpec, Relation,
};
use ctrord_core::graph::Graph;
use ctrord_core::graph6::write_graph6;
use serde::Serialize;

use crate::commands::Context;
use crate::input::parse_range;
use crate::pool::parallel_map;
use crate::report::{Report, EXIT_EXHAUSTED, EXIT_REFUTED, EXIT_VERIFIED};

pub fn comparability_name(c: Comparability) -> &'static str {
    match c {
        Comparability::Equal => "equal",
        Comparability::Below => "below",
        Comparability::Above => "above",
        Comparability::Incomparable => "incomparable",
        Comparability::Exhausted => "exhausted",
    }
}

/// Pairwise comparability of a graph list, pairs sharded across workers.
pub fn matrix_sharded(
    gs: &[Graph],
    ctx: &Context,
) -> anyhow::Result<(Vec<Vec<Comparability>>, usize)> {
    let k = gs.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((i, j));
        }
    }
    let computed = parallel_map(&pairs, ctx.workers, |&(i, j)| {
        compare_pair(&gs[i], &gs[j], &ctx.search)
    });
    let mut entries = vec![vec![Comparability::Equal; k]; k];
    let mut exhausted = 0usize;
    for (&(i, j), entry) in pairs.iter().zip(computed) {
        let entry = entry.map_err(|e| anyhow!("graphs {i} and {j}: {e}"))?;
        if entry == Comparability::Exhausted {
            exhausted += 1;
        }
        entries[i][j] = entry;
        entries[j][i] = match entry {
            Comparability::Below => Comparability::Above,
            Comparability::Above => Comparability::Below,
            other => other,
        };
    }
    Ok((entries, exhausted))
}

fn family_members(family: &str, values: &[usize]) -> anyhow::Result<Vec<FamilySpec>> {
    let specs: Vec<FamilySpec> = match family.to_ascii_uppercase().as_str() {
        "K2R" => values.iter().map(|&r| FamilySpec::K2r { r }).collect(),
        "DR" => values.iter().map(|&r| FamilySpec::Dr { r }).collect(),
        "STAR" => values.iter().map(|&r| FamilySpec::Star { r }).collect(),
        "ANTIHOLE" => values.iter().map(|&i| FamilySpec::Antihole { i }).collect(),
        "W" => {
            let mut out = Vec::new();
            for &p in values {
                for &q in values {
                    out.push(FamilySpec::W { p, q });
                }
            }
            out
        }
        "I0" => {
            let mut out = Vec::new();
            for &i in values {
                for &q in values {
                    out.push(FamilySpec::I0 { i, q });
                }
            }
            out
        }
        "I1" => {
            let mut out = Vec::new();
            for &i in values {
                for &q in values {
                    out.push(FamilySpec::I1 { i, q });
                }
            }
            out
        }
        other => bail!("unknown family {other:?} (expected K2R, DR, STAR, ANTIHOLE, W, I0 or I1)"),
    };
    for spec in &specs {
        spec.validate().map_err(|e| anyhow!("{e}"))?;
    }
    Ok(specs)
}

#[derive(Serialize)]
struct MemberDoc {
    spec: String,
    graph6: String,
    n: usize,
}

#[derive(Serialize)]
struct ComparablePairDoc {
    a: String,
    b: String,
    comparability: &'static str,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    family: String,
    range: Vec<usize>,
    members: Vec<MemberDoc>,
    matrix: Vec<Vec<&'static str>>,
    comparable_pairs: Vec<ComparablePairDoc>,
    exhausted_entries: usize,
    antichain: Option<bool>,
}

/// `antichain verify FAMILY RANGE`: builds the members and verifies
/// pairwise incomparability by search in both directions.
pub fn verify(ctx: &Context, family: &str, range: &str) -> anyhow::Result<Report> {
    let values = parse_range(range)?;
    let specs = family_members(family, &values)?;
    let graphs: Vec<Graph> =
        specs.iter().map(|&s| Ok(make(s)?.graph)).collect::<Result<_, anyhow::Error>>()?;
    let (entries, exhausted) = matrix_sharded(&graphs, ctx)?;

    let mut comparable = Vec::new();
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            let e = entries[i][j];
            if !matches!(e, Comparability::Incomparable | Comparability::Exhausted) {
                comparable.push(ComparablePairDoc {
                    a: specs[i].to_string(),
                    b: specs[j].to_string(),
                    comparability: comparability_name(e),
                });
            }
        }
    }
    let antichain = if exhausted == 0 { Some(comparable.is_empty()) } else { None };
    let exit = if !comparable.is_empty() {
        EXIT_REFUTED
    } else if exhausted > 0 {
        EXIT_EXHAUSTED
    } else {
        EXIT_VERIFIED
    };
    let rep = VerifyReport {
        command: "antichain-verify",
        family: family.to_ascii_uppercase(),
        range: values,
        members: specs
            .iter()
            .zip(&graphs)
            .map(|(s, g)| {
                Ok(MemberDoc {
                    spec: s.to_string(),
                    graph6: write_graph6(g).map_err(|e| anyhow!("{e}"))?,
                    n: g.n(),
                })
            })
            .collect::<Result<_, anyhow::Error>>()?,
        matrix: entries.iter().map(|row| row.iter().map(|&e| comparability_name(e)).collect()).collect(),
        comparable_pairs: comparable,
        exhausted_entries: exhausted,
        antichain,
    };
    Report::new(&rep, exit)
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::AContractionOfB => "a-contraction-of-b",
        Relation::BContractionOfA => "b-contraction-of-a",
        Relation::Equal => "equal",
        Relation::Incomparable => "incomparable",
        Relation::Unknown => "unknown",
    }
}

#[derive(Serialize)]
struct DingPairDoc {
    a: String,
    b: String,
    expected: &'static str,
    computed: &'static str,
    ok: bool,
}

#[derive(Serialize)]
struct DingDownsetDoc {
    member: String,
    steps: usize,
    downset_size: usize,
    all_gem_free: bool,
}

#[derive(Serialize)]
struct DingClosureDoc {
    spec: String,
    reachable: usize,
    all_classified: bool,
}

#[derive(Serialize)]
struct DingReportDoc {
    command: &'static str,
    i_values: Vec<usize>,
    q_values: Vec<usize>,
    pairs: Vec<DingPairDoc>,
    exhausted_pairs: usize,
    premise_iii_ok: bool,
    downset_checks: Vec<DingDownsetDoc>,
    inner_closure_checks: Vec<DingClosureDoc>,
    ok: bool,
}

/// `ding-premises`: the desk-scale premise verification, serialized.
pub fn ding(
    ctx: &Context,
    i_range: &str,
    q_range: &str,
    downset_steps: Option<usize>,
) -> anyhow::Result<Report> {
    let i_values = parse_range(i_range)?;
    let q_values = parse_range(q_range)?;
    for &i in &i_values {
        if i < 3 {
            bail!("i values must be at least 3, got {i}");
        }
    }
    for &q in &q_values {
        if q < 3 {
            bail!("q values must be at least 3, got {q}");
        }
    }
    let cfg = DingConfig { search: ctx.search.clone(), downset_steps };
    let report = check_ding_premises(&i_values, &q_values, &cfg).map_err(|e| anyhow!("{e}"))?;
    let doc = DingReportDoc {
        command: "ding-premises",
        i_values: report.i_values.clone(),
        q_values: report.q_values.clone(),
        pairs: report
            .pairs
            .iter()
            .map(|p| DingPairDoc {
                a: p.a.to_string(),
                b: p.b.to_string(),
                expected: relation_name(p.expected),
                computed: comparability_name(p.computed),
                ok: p.ok,
            })
            .collect(),
        exhausted_pairs: report.exhausted_pairs,
        premise_iii_ok: report.premise_iii_ok,
        downset_checks: report
            .downset_checks
            .iter()
            .map(|c| DingDownsetDoc {
                member: c.member.to_string(),
                steps: c.steps,
                downset_size: c.downset_size,
                all_gem_free: c.all_gem_free,
            })
            .collect(),
        inner_closure_checks: report
            .inner_closure_checks
            .iter()
            .map(|c| DingClosureDoc {
                spec: c.spec.to_string(),
                reachable: c.reachable,
                all_classified: c.all_classified,
            })
            .collect(),
        ok: report.ok,
    };
    let exit = if report.ok {
        EXIT_VERIFIED
    } else if report.exhausted_pairs > 0 && report.premise_iii_ok {
        EXIT_EXHAUSTED
    } else {
        EXIT_REFUTED
    };
    Report::new(&doc, exit)
}
