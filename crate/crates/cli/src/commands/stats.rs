use std::io::Write;

use anyhow::bail;
use rayon::prelude::*;
use serde::Serialize;
use skewband_core::graph::{cycle_count, period, GraphSpec};
use skewband_core::stats::stats_report;
use skewband_core::StatsReport;

use crate::output::{fixed, sink, write_csv, write_json, SCHEMA_VERSION};
use crate::{Context, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    k: u64,
    /// Largest nullity value to report (clamped to k).
    #[arg(long, default_value_t = 2)]
    z_max: u64,
    /// Also count nullities over a full period with the graph method and
    /// compare.
    #[arg(long)]
    check: bool,
}

#[derive(Serialize)]
struct CsvRow {
    z: u64,
    count: u64,
    percent: String,
    asymptotic: String,
}

#[derive(Serialize)]
struct Doc<'a> {
    schema_version: u32,
    #[serde(flatten)]
    report: &'a StatsReport,
    histogram: Option<&'a [u64]>,
    agrees: Option<bool>,
}

/// Histogram of the graph-method nullity over one period, in parallel.
fn brute_histogram(k: u64) -> Vec<u64> {
    let chunk = 4096u64;
    let p = period(k);
    (0..p.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut h = vec![0u64; k as usize + 1];
            for n in c * chunk..((c + 1) * chunk).min(p) {
                let spec = GraphSpec::from_i64(n as i64, k).expect("k >= 1");
                h[cycle_count(&spec) as usize] += 1;
            }
            h
        })
        .reduce(
            || vec![0u64; k as usize + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

pub fn run(ctx: &Context, args: Args) -> anyhow::Result<Outcome> {
    let format = ctx.format.tabular("stats")?;
    if args.k == 0 {
        bail!("k must be at least 1");
    }
    let report = stats_report(args.k, args.z_max)?;
    let histogram = args.check.then(|| brute_histogram(args.k));
    let agrees = histogram
        .as_ref()
        .map(|h| report.rows.iter().all(|r| h[r.z as usize] == r.count));

    let mut out = sink(ctx)?;
    match format {
        crate::output::Format::Csv => write_csv(
            &mut *out,
            report.rows.iter().map(|r| CsvRow {
                z: r.z,
                count: r.count,
                percent: fixed(r.percent),
                asymptotic: fixed(r.asymptotic),
            }),
        )?,
        crate::output::Format::Json => write_json(
            &mut *out,
            &Doc {
                schema_version: SCHEMA_VERSION,
                report: &report,
                histogram: histogram.as_deref(),
                agrees,
            },
        )?,
        _ => {
            writeln!(out, "k = {}, period = {}", report.k, report.period)?;
            writeln!(
                out,
                "{:>4} {:>12} {:>10} {:>14}",
                "z", "count", "percent", "asymptotic"
            )?;
            for r in &report.rows {
                writeln!(
                    out,
                    "{:>4} {:>12} {:>10.4} {:>14.1}",
                    r.z, r.count, r.percent, r.asymptotic
                )?;
            }
            if let Some(h) = &histogram {
                for r in &report.rows {
                    writeln!(out, "z = {}: histogram {}", r.z, h[r.z as usize])?;
                }
            }
        }
    }
    match agrees {
        Some(true) => eprintln!("histogram check: MATCH"),
        Some(false) => eprintln!("histogram check: MISMATCH"),
        None => {}
    }
    out.flush()?;
    Ok(if agrees == Some(false) {
        Outcome::Mismatch
    } else {
        Outcome::Ok
    })
}
