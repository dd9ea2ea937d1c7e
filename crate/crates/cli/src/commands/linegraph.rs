use std::io::Write;

use anyhow::bail;
use rayon::prelude::*;
use serde::Serialize;
use skewband_core::graph::{cycle_count, period, GraphSpec};

use crate::output::{sink, write_csv, write_json, Format, SCHEMA_VERSION};
use crate::svg::{render, Plot};
use crate::{Context, Outcome};

/// More points than this is almost certainly a mistake.
const MAX_POINTS: u64 = 20_000_000;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    k: u64,
    /// First n (default 0).
    #[arg(long, allow_hyphen_values = true)]
    from: Option<i64>,
    /// Last n, inclusive (default k^2 + k).
    #[arg(long, allow_hyphen_values = true)]
    to: Option<i64>,
    /// Pixels per unit for svg output.
    #[arg(long, default_value_t = 10.0)]
    scale: f64,
}

#[derive(Serialize)]
struct Row {
    n: i64,
    nullity: u64,
}

#[derive(Serialize)]
struct Doc<'a> {
    schema_version: u32,
    k: u64,
    from: i64,
    to: i64,
    points: &'a [Row],
}

pub fn run(ctx: &Context, args: Args) -> anyhow::Result<Outcome> {
    let k = args.k;
    if k == 0 {
        bail!("k must be at least 1");
    }
    let from = args.from.unwrap_or(0);
    let to = match args.to {
        Some(t) => t,
        None => i64::try_from(period(k))?,
    };
    if from > to {
        bail!("invalid range: --from {from} is after --to {to}");
    }
    if (to - from) as u64 >= MAX_POINTS {
        bail!("range has more than {MAX_POINTS} points");
    }
    if !(args.scale.is_finite() && args.scale > 0.0) {
        bail!("--scale must be positive");
    }

    let rows: Vec<Row> = (from..=to)
        .into_par_iter()
        .map(|n| -> anyhow::Result<Row> {
            Ok(Row {
                n,
                nullity: cycle_count(&GraphSpec::from_i64(n, k)?),
            })
        })
        .collect::<anyhow::Result<_>>()?;

    let mut out = sink(ctx)?;
    match ctx.format {
        Format::Csv => write_csv(&mut *out, &rows)?,
        Format::Json => write_json(
            &mut *out,
            &Doc {
                schema_version: SCHEMA_VERSION,
                k,
                from,
                to,
                points: &rows,
            },
        )?,
        Format::Svg => {
            let pts: Vec<(i64, u64)> = rows.iter().map(|r| (r.n, r.nullity)).collect();
            out.write_all(
                render(&Plot {
                    k,
                    points: &pts,
                    scale: args.scale,
                })
                .as_bytes(),
            )?;
        }
        Format::Plain => {
            for r in &rows {
                writeln!(
                    out,
                    "{:>8} {:>4} {}",
                    r.n,
                    r.nullity,
                    "#".repeat(r.nullity as usize)
                )?;
            }
        }
    }
    out.flush()?;
    Ok(Outcome::Ok)
}
