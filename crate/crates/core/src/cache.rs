//! On-disk apex tables, one JSON file per `k`.
//!
//! ```json
//! {"schema": "skewband/apex-table/v1", "k": 6,
//!  "apexes": [{"q": 6, "j": 1, "eta": "1", "f": 1}, ...]}
//! ```
//!
//! `eta` is a decimal string. Rows are sorted by `eta`. Tables are fully
//! revalidated when loaded.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::apex::{build_line_graph, eta_of, LineGraph};
use crate::error::{Error, Result};

pub const APEX_TABLE_SCHEMA: &str = "skewband/apex-table/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexRow {
    pub q: u64,
    pub j: u64,
    pub eta: String,
    pub f: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexTable {
    pub schema: String,
    pub k: u64,
    pub apexes: Vec<ApexRow>,
}

impl ApexTable {
    pub fn from_line_graph(lg: &LineGraph) -> Self {
        ApexTable {
            schema: APEX_TABLE_SCHEMA.to_string(),
            k: lg.k(),
            apexes: lg
                .apexes()
                .iter()
                .map(|a| ApexRow {
                    q: a.params.q,
                    j: a.params.j,
                    eta: a.eta.to_string(),
                    f: a.height,
                })
                .collect(),
        }
    }

    /// Rebuilds the line graph, checking every row against its formula and
    /// the table as a whole for distinctness and tiling.
    pub fn into_line_graph(self) -> Result<LineGraph> {
        if self.schema != APEX_TABLE_SCHEMA {
            return Err(Error::Cache(format!("unknown schema {:?}", self.schema)));
        }
        let k = self.k;
        let mut apexes = Vec::with_capacity(self.apexes.len());
        for row in &self.apexes {
            let eta: u64 = row
                .eta
                .parse()
                .map_err(|_| Error::Cache(format!("bad eta {:?}", row.eta)))?;
            let apex = eta_of(row.q, row.j, k)?;
            if apex.eta != eta || apex.height != row.f {
                return Err(Error::Cache(format!(
                    "row (q={}, j={}) disagrees with its formula",
                    row.q, row.j
                )));
            }
            apexes.push(apex);
        }
        if apexes.windows(2).any(|w| w[0].eta >= w[1].eta) {
            return Err(Error::Cache("rows are not strictly sorted by eta".into()));
        }
        LineGraph::from_apexes(k, apexes)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn table_path(dir: &Path, k: u64) -> PathBuf {
    dir.join(format!("apexes-k{k}.json"))
}

pub fn write_table(dir: &Path, lg: &LineGraph) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = table_path(dir, lg.k());
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, ApexTable::from_line_graph(lg).to_json()?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn read_table(dir: &Path, k: u64) -> Result<LineGraph> {
    let text = fs::read_to_string(table_path(dir, k))?;
    let table = ApexTable::from_json(&text)?;
    if table.k != k {
        return Err(Error::Cache(format!("file for k={k} holds k={}", table.k)));
    }
    table.into_line_graph()
}

/// Loads the cached table for `k`, rebuilding (and rewriting) it when the
/// file is missing or fails validation.
pub fn load_or_build(dir: &Path, k: u64) -> Result<LineGraph> {
    match read_table(dir, k) {
        Ok(lg) => Ok(lg),
        Err(_) => {
            let lg = build_line_graph(k)?;
            write_table(dir, &lg)?;
            Ok(lg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn write_then_read() {
        let dir = tempfile::tempdir().unwrap();
        let lg = build_line_graph(9).unwrap();
        let path = write_table(dir.path(), &lg).unwrap();
        assert!(path.ends_with("apexes-k9.json"));
        assert_eq!(read_table(dir.path(), 9).unwrap(), lg);
    }

    #[test]
    fn json_shape() {
        let table = ApexTable::from_line_graph(&build_line_graph(1).unwrap());
        let v: serde_json::Value = serde_json::from_str(&table.to_json().unwrap()).unwrap();
        assert_eq!(v["schema"], APEX_TABLE_SCHEMA);
        assert_eq!(
            v["apexes"][0],
            serde_json::json!({"q": 1, "j": 1, "eta": "1", "f": 1})
        );
    }

    #[test]
    fn tampered_tables_are_rejected() {
        let lg = build_line_graph(6).unwrap();
        let good = ApexTable::from_line_graph(&lg);

        let mut t = good.clone();
        t.apexes[3].eta = "999".into();
        assert!(t.into_line_graph().is_err());

        let mut t = good.clone();
        t.apexes.remove(0);
        assert!(t.into_line_graph().is_err());

        let mut t = good.clone();
        t.apexes.swap(1, 2);
        assert!(t.into_line_graph().is_err());

        let mut t = good;
        t.schema = "other".into();
        assert!(t.into_line_graph().is_err());
    }

    #[test]
    fn load_or_build_repairs_corrupt_files() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(table_path(dir.path(), 4), "not json").unwrap();
        let lg = load_or_build(dir.path(), 4).unwrap();
        assert_eq!(lg, build_line_graph(4).unwrap());
        assert_eq!(read_table(dir.path(), 4).unwrap(), lg);
    }
}
