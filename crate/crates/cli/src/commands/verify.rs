use std::io::Write;

use anyhow::bail;
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use skewband_core::verify::{check_lemmas, check_methods, check_special_cases, MethodsOptions};

use crate::output::{sink, write_csv, write_json, SCHEMA_VERSION};
use crate::{Context, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Graph, closed form, and both rank routes over each full period.
    Methods,
    /// Closed-form families of n against the graph method.
    SpecialCases,
    /// Step, symmetry, translate, tail and edge properties, apex cycles and
    /// the residue counting identities.
    Lemmas,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    k_max: u64,
    #[arg(long, default_value_t = 1)]
    k_min: u64,
    #[arg(long, value_enum)]
    mode: Mode,
}

#[derive(Serialize)]
struct Row {
    k: u64,
    failures: usize,
}

#[derive(Serialize)]
struct Doc<'a> {
    schema_version: u32,
    mode: Mode,
    k_min: u64,
    k_max: u64,
    passed: bool,
    per_k: &'a [Row],
    failures: Vec<&'a str>,
}

pub fn run(ctx: &Context, args: Args) -> anyhow::Result<Outcome> {
    let format = ctx.format.tabular("verify")?;
    if args.k_min == 0 || args.k_min > args.k_max {
        bail!("need 1 <= k-min <= k-max");
    }
    let per_k: Vec<(u64, Vec<String>)> = (args.k_min..=args.k_max)
        .into_par_iter()
        .map(|k| {
            let f = match args.mode {
                Mode::Methods => check_methods(k, MethodsOptions::default()),
                Mode::SpecialCases => check_special_cases(k),
                Mode::Lemmas => check_lemmas(k),
            };
            (k, f)
        })
        .collect();
    let passed = per_k.iter().all(|(_, f)| f.is_empty());
    let rows: Vec<Row> = per_k
        .iter()
        .map(|(k, f)| Row {
            k: *k,
            failures: f.len(),
        })
        .collect();
    let all_failures: Vec<&str> = per_k
        .iter()
        .flat_map(|(_, f)| f.iter().map(String::as_str))
        .collect();

    let mut out = sink(ctx)?;
    match format {
        crate::output::Format::Csv => write_csv(&mut *out, &rows)?,
        crate::output::Format::Json => write_json(
            &mut *out,
            &Doc {
                schema_version: SCHEMA_VERSION,
                mode: args.mode,
                k_min: args.k_min,
                k_max: args.k_max,
                passed,
                per_k: &rows,
                failures: all_failures.clone(),
            },
        )?,
        _ => {
            for f in &all_failures {
                writeln!(out, "  {f}")?;
            }
            writeln!(
                out,
                "{} {} for k = {}..={}",
                if passed { "PASS" } else { "FAIL" },
                args.mode
                    .to_possible_value()
                    .expect("no skipped variants")
                    .get_name(),
                args.k_min,
                args.k_max
            )?;
        }
    }
    out.flush()?;
    Ok(if passed {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}
