use std::io::Write;

use anyhow::bail;
use rayon::prelude::*;
use serde::Serialize;
use skewband_core::det::{check_conjecture_via, DetRoute};
use skewband_core::ConjectureVerdict;

use crate::output::{sink, write_csv, write_json, SCHEMA_VERSION};
use crate::{Context, Outcome};

/// Default ceiling on `n`; `--extended` raises it.
pub const DEFAULT_N_CAP: u64 = 60;
pub const EXTENDED_N_CAP: u64 = 150;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    /// Integer determinants at n+1 points and rational interpolation.
    Exact,
    /// Multi-modular pencil determinant; much faster for large n.
    Modular,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Largest even n to check.
    #[arg(long, default_value_t = DEFAULT_N_CAP)]
    n_max: u64,
    /// Smallest even n to check.
    #[arg(long, default_value_t = 2)]
    n_min: u64,
    /// Allow n-max up to 150.
    #[arg(long)]
    extended: bool,
    #[arg(long, value_enum, default_value_t = Route::Exact)]
    route: Route,
}

#[derive(Serialize)]
struct Doc<'a> {
    schema_version: u32,
    n_min: u64,
    n_max: u64,
    checked: usize,
    disagreements: usize,
    verdicts: &'a [ConjectureVerdict],
}

pub fn run(ctx: &Context, args: Args) -> anyhow::Result<Outcome> {
    let format = ctx.format.tabular("conjecture")?;
    let cap = if args.extended {
        EXTENDED_N_CAP
    } else {
        DEFAULT_N_CAP
    };
    if args.n_max > cap {
        bail!(
            "n-max {} exceeds the cap {cap}{}",
            args.n_max,
            if args.extended {
                ""
            } else {
                " (pass --extended for up to 150)"
            }
        );
    }
    if args.n_min > args.n_max {
        bail!("n-min is larger than n-max");
    }
    let route = match args.route {
        Route::Exact => DetRoute::Exact,
        Route::Modular => DetRoute::Modular,
    };
    let first = args.n_min.max(2).next_multiple_of(2);
    let pairs: Vec<(u64, u64)> = (first..=args.n_max)
        .step_by(2)
        .flat_map(|n| (1..n).map(move |k| (n, k)))
        .collect();
    // largest matrices first so the slowest jobs do not trail at the end
    let mut verdicts: Vec<ConjectureVerdict> = pairs
        .par_iter()
        .rev()
        .map(|&(n, k)| check_conjecture_via(n, k, route))
        .collect::<Result<_, _>>()?;
    verdicts.reverse();
    let disagreements = verdicts.iter().filter(|v| !v.agrees).count();
    let summary = format!(
        "{} pairs with even n in {first}..={}: {}",
        verdicts.len(),
        args.n_max,
        if disagreements == 0 {
            "all agree".to_string()
        } else {
            format!("{disagreements} disagree")
        }
    );

    let mut out = sink(ctx)?;
    match format {
        crate::output::Format::Csv => {
            write_csv(&mut *out, &verdicts)?;
            eprintln!("{summary}");
        }
        crate::output::Format::Json => write_json(
            &mut *out,
            &Doc {
                schema_version: SCHEMA_VERSION,
                n_min: first,
                n_max: args.n_max,
                checked: verdicts.len(),
                disagreements,
                verdicts: &verdicts,
            },
        )?,
        _ => {
            for v in &verdicts {
                writeln!(
                    out,
                    "n={:<4} k={:<4} multiplicity={:<3} nullity={:<3} {}",
                    v.n,
                    v.k,
                    v.multiplicity,
                    v.nullity,
                    if v.agrees { "agrees" } else { "DISAGREES" }
                )?;
            }
            writeln!(out, "{summary}")?;
        }
    }
    out.flush()?;
    Ok(if disagreements == 0 {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}
