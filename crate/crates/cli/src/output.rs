use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{bail, Context as _};
use serde::Serialize;

use crate::Context;

/// Bumped whenever a JSON document changes shape.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
    Plain,
}

impl Format {
    /// Rejects `svg` for commands other than `linegraph`.
    pub fn tabular(self, command: &str) -> anyhow::Result<Self> {
        if self == Format::Svg {
            bail!("--format svg is only supported by `linegraph`, not `{command}`");
        }
        Ok(self)
    }
}

pub fn sink(ctx: &Context) -> anyhow::Result<Box<dyn Write>> {
    Ok(match &ctx.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// CSV with a header row, LF line endings and no quoting of numbers.
pub fn write_csv<R: Serialize>(
    out: &mut dyn Write,
    rows: impl IntoIterator<Item = R>,
) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, doc: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

/// Fixed six decimals so output never depends on float formatting quirks.
pub fn fixed(x: f64) -> String {
    format!("{x:.6}")
}
