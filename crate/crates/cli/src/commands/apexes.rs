use std::io::Write;

use anyhow::{bail, Context as _};
use serde::Serialize;
use skewband_core::build_line_graph;
use skewband_core::cache::{self, ApexRow, ApexTable};

use super::CLOSED_FORM_MAX_K;
use crate::output::{sink, write_csv, write_json, SCHEMA_VERSION};
use crate::{Context, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    k: u64,
    /// Do not write the table to the cache directory.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Serialize)]
struct Doc<'a> {
    schema_version: u32,
    k: u64,
    count: usize,
    apexes: &'a [ApexRow],
}

pub fn run(ctx: &Context, args: Args) -> anyhow::Result<Outcome> {
    let format = ctx.format.tabular("apexes")?;
    let k = args.k;
    if k == 0 {
        bail!("k must be at least 1");
    }
    if k > CLOSED_FORM_MAX_K {
        bail!("apex tables are limited to k <= {CLOSED_FORM_MAX_K}");
    }
    let lg = build_line_graph(k)?;
    if !args.no_cache {
        let path = cache::write_table(&ctx.cache_dir, &lg)
            .with_context(|| format!("writing cache in {}", ctx.cache_dir.display()))?;
        eprintln!("wrote {}", path.display());
    }
    let table = ApexTable::from_line_graph(&lg);

    let mut out = sink(ctx)?;
    match format {
        crate::output::Format::Csv => write_csv(&mut *out, &table.apexes)?,
        crate::output::Format::Json => write_json(
            &mut *out,
            &Doc {
                schema_version: SCHEMA_VERSION,
                k,
                count: table.apexes.len(),
                apexes: &table.apexes,
            },
        )?,
        _ => {
            writeln!(out, "{:>6} {:>6} {:>10} {:>6}", "q", "j", "eta", "f")?;
            for r in &table.apexes {
                writeln!(out, "{:>6} {:>6} {:>10} {:>6}", r.q, r.j, r.eta, r.f)?;
            }
            writeln!(out, "{} apexes", table.apexes.len())?;
        }
    }
    out.flush()?;
    Ok(Outcome::Ok)
}
