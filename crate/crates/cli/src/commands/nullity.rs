use std::io::Write;

use anyhow::{bail, Context as _};
use num_bigint::BigInt;
use serde::Serialize;
use skewband_core::arith::parse_decimal;
use skewband_core::band::{build_integer_matrix, DEFAULT_MATERIALIZATION_CAP};
use skewband_core::rank::{nullity_mod_p, smallest_admissible_prime};
use skewband_core::{nullity_by_cycles, BandMatrixSpec};

use super::{line_graph, CLOSED_FORM_MAX_K};
use crate::output::{sink, write_csv, write_json, SCHEMA_VERSION};
use crate::{Context, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Graph,
    Rank,
    Closed,
    All,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Matrix dimension as a decimal integer of any size (may be negative
    /// for graph and closed).
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    #[arg(long)]
    k: u64,
    #[arg(long, value_enum, default_value_t = MethodChoice::Graph)]
    method: MethodChoice,
}

#[derive(Debug, Serialize)]
struct Row {
    method: &'static str,
    nullity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    method: &'a str,
    nullity: Option<u64>,
    note: &'a str,
}

#[derive(Serialize)]
struct Doc<'a> {
    schema_version: u32,
    n: String,
    k: u64,
    results: &'a [Row],
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<&'static str>,
}

fn rank_nullity(n: &BigInt, k: u64) -> anyhow::Result<u64> {
    let dim: u64 = n
        .try_into()
        .ok()
        .filter(|&d: &u64| (1..=DEFAULT_MATERIALIZATION_CAP as u64).contains(&d))
        .with_context(|| format!("rank method needs 1 <= n <= {DEFAULT_MATERIALIZATION_CAP}"))?;
    let m = build_integer_matrix(BandMatrixSpec::new(dim, k)?)?;
    let field = smallest_admissible_prime(k)?;
    Ok(nullity_mod_p(&m, &field).nullity as u64)
}

pub fn run(ctx: &Context, args: Args) -> anyhow::Result<Outcome> {
    let format = ctx.format.tabular("nullity")?;
    let n = parse_decimal(&args.n)?;
    let k = args.k;
    if k == 0 {
        bail!("k must be at least 1");
    }

    let rows: Vec<Row> = match args.method {
        MethodChoice::Graph => vec![Row {
            method: "graph",
            nullity: Some(nullity_by_cycles(&n, k)?.nullity),
            note: None,
        }],
        MethodChoice::Closed => vec![Row {
            method: "closed",
            nullity: Some(line_graph(&ctx.cache_dir, k)?.nullity(&n)),
            note: None,
        }],
        MethodChoice::Rank => vec![Row {
            method: "rank",
            nullity: Some(rank_nullity(&n, k)?),
            note: None,
        }],
        MethodChoice::All => {
            let graph = nullity_by_cycles(&n, k)?.nullity;
            let rank = rank_nullity(&n, k);
            let closed = if k <= CLOSED_FORM_MAX_K {
                Ok(line_graph(&ctx.cache_dir, k)?.nullity(&n))
            } else {
                Err(anyhow::anyhow!("k > {CLOSED_FORM_MAX_K}"))
            };
            let row = |method, r: anyhow::Result<u64>| match r {
                Ok(v) => Row {
                    method,
                    nullity: Some(v),
                    note: None,
                },
                Err(e) => Row {
                    method,
                    nullity: None,
                    note: Some(format!("skipped: {e}")),
                },
            };
            vec![
                row("graph", Ok(graph)),
                row("rank", rank),
                row("closed", closed),
            ]
        }
    };

    let status = (args.method == MethodChoice::All).then(|| {
        let mut values = rows.iter().filter_map(|r| r.nullity);
        let first = values.next();
        if values.all(|v| Some(v) == first) {
            "MATCH"
        } else {
            "MISMATCH"
        }
    });

    let mut out = sink(ctx)?;
    match format {
        crate::output::Format::Json => write_json(
            &mut *out,
            &Doc {
                schema_version: SCHEMA_VERSION,
                n: n.to_string(),
                k,
                results: &rows,
                status,
            },
        )?,
        crate::output::Format::Csv => write_csv(
            &mut *out,
            rows.iter().map(|r| CsvRow {
                method: r.method,
                nullity: r.nullity,
                note: r.note.as_deref().unwrap_or(""),
            }),
        )?,
        _ => {
            for r in &rows {
                match (r.nullity, &r.note) {
                    (Some(v), _) => writeln!(out, "{}: {v}", r.method)?,
                    (None, Some(note)) => writeln!(out, "{}: {note}", r.method)?,
                    (None, None) => unreachable!(),
                }
            }
            if let Some(s) = status {
                writeln!(out, "{s}")?;
            }
        }
    }
    out.flush()?;
    Ok(match status {
        Some("MISMATCH") => Outcome::Mismatch,
        _ => Outcome::Ok,
    })
}
