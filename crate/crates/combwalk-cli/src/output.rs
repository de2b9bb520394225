//! Output plumbing: CSV and JSON renderings of the same records, plus the
//! run manifest written next to every output file.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One output record: field names paired with values. CSV and JSON are
/// rendered from the same pairs, so the two formats always carry
/// identical fields.
pub type Record = Vec<(&'static str, Value)>;

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    UInt(u64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Value {
    fn csv_field(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::UInt(v) => v.to_string(),
            Value::Float(v) => float15(*v),
            Value::Text(s) => csv_escape(s),
            Value::Bool(b) => b.to_string(),
        }
    }
}

/// 15 significant digits, plain notation where reasonable.
pub fn float15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{x:.14e}");
    // keep scientific notation only for extreme magnitudes
    let exp = x.abs().log10().floor() as i32;
    if (-4..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let t = format!("{x:.decimals$}");
        t.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(records: &[Record]) -> String {
    let mut out = String::new();
    if let Some(first) = records.first() {
        let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for record in records {
        let fields: Vec<String> = record.iter().map(|(_, v)| v.csv_field()).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn render_json(records: &[Record]) -> Result<String> {
    let objects: Vec<serde_json::Map<String, serde_json::Value>> = records
        .iter()
        .map(|record| {
            record
                .iter()
                .map(|(k, v)| Ok(((*k).to_string(), serde_json::to_value(v)?)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(serde_json::to_string_pretty(&objects)? + "\n")
}

#[derive(Debug, Serialize)]
struct RunManifest<'a> {
    command: &'a str,
    args: Vec<String>,
    seed: Option<u64>,
    version: &'a str,
    duration_seconds: f64,
}

/// Where and how a command's records leave the process.
pub struct Emitter {
    format: Format,
    out: Option<PathBuf>,
    command: String,
    seed: Option<u64>,
    started: Instant,
}

impl Emitter {
    pub fn new(format: Format, out: Option<PathBuf>, command: &str, seed: Option<u64>) -> Self {
        Self {
            format,
            out,
            command: command.to_string(),
            seed,
            started: Instant::now(),
        }
    }

    /// Render the records and write them to the chosen sink. With --out,
    /// a manifest lands next to the output file so the run can be
    /// reproduced exactly.
    pub fn emit(&self, records: &[Record]) -> Result<()> {
        let body = match self.format {
            Format::Csv => render_csv(records),
            Format::Json => render_json(records)?,
        };
        match &self.out {
            None => {
                std::io::stdout()
                    .write_all(body.as_bytes())
                    .context("writing to standard output")?;
            }
            Some(path) => {
                std::fs::write(path, body)
                    .with_context(|| format!("writing {}", path.display()))?;
                self.write_manifest(path)?;
            }
        }
        Ok(())
    }

    fn write_manifest(&self, out_path: &Path) -> Result<()> {
        let manifest = RunManifest {
            command: &self.command,
            args: std::env::args().skip(1).collect(),
            seed: self.seed,
            version: env!("CARGO_PKG_VERSION"),
            duration_seconds: self.started.elapsed().as_secs_f64(),
        };
        let mut path = out_path.as_os_str().to_owned();
        path.push(".manifest.json");
        let body = serde_json::to_string_pretty(&manifest)? + "\n";
        std::fs::write(&path, body)
            .with_context(|| format!("writing manifest {}", PathBuf::from(&path).display()))?;
        Ok(())
    }
}
