//! Tables, reports and their CSV/JSON rendering.
//!
//! A [`Report`] holds the parameters of a run, scalar summary values and one
//! or more tables. JSON output is a single document:
//!
//! ```text
//! { "command": ..., "parameters": {...}, "summary": {...}, "<table>": [ {row}, ... ] }
//! ```
//!
//! CSV output carries the first table. When writing to a file, the summary
//! goes to `<stem>.summary.csv` (`key,value`) and further tables to
//! `<stem>.<table>.csv`; on standard output the sections follow each other,
//! separated by blank lines.
//!
//! Floats are written with 17 significant digits in CSV and in shortest
//! round-trip form in JSON. Centered indices always appear as an explicit
//! signed `n` column.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "HALFSHIFT_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Null => Value::Null,
        }
    }
}

/// 17 significant digits, so the value survives a round trip.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

macro_rules! int_cell {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(v: $t) -> Self {
                Cell::Int(v as i64)
            }
        }
    )*};
}
int_cell!(i32, i64, isize, u32, usize);

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        i64::try_from(v).map(Cell::Int).unwrap_or(Cell::Text(v.to_string()))
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table {
            name,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    /// # Panics
    /// If the row length differs from the column count.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width for table {}", self.name);
        self.rows.push(row);
    }

    fn json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| ((*k).to_owned(), v.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn to_csv(&self) -> String {
        render_csv(
            &self.columns,
            self.rows.iter().map(|r| r.iter().map(Cell::csv).collect()),
        )
    }
}

fn render_csv(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("CSV output is UTF-8")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, Cell)>,
    pub summary: Vec<(&'static str, Cell)>,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            parameters: Vec::new(),
            summary: Vec::new(),
            tables: Vec::new(),
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Into<Cell>) -> Self {
        self.parameters.push((key, value.into()));
        self
    }

    pub fn summary(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.summary.push((key, value.into()));
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn summary_value(&self, key: &str) -> Option<&Cell> {
        self.summary.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        let pairs = |items: &[(&'static str, Cell)]| -> Value {
            Value::Object(items.iter().map(|(k, v)| ((*k).to_owned(), v.json())).collect())
        };
        let mut doc = Map::new();
        doc.insert("command".into(), Value::from(self.command));
        doc.insert("parameters".into(), pairs(&self.parameters));
        doc.insert("summary".into(), pairs(&self.summary));
        for t in &self.tables {
            doc.insert(t.name.into(), t.json());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values are serializable");
        s.push('\n');
        s
    }

    fn summary_csv(&self) -> Option<String> {
        (!self.summary.is_empty()).then(|| {
            render_csv(
                &["key", "value"],
                self.summary.iter().map(|(k, v)| vec![(*k).to_owned(), v.csv()]),
            )
        })
    }
}

/// Where a report goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

impl Destination {
    /// `--out` if given, else `$HALFSHIFT_OUT_DIR/<command>.<ext>`, else stdout.
    pub fn resolve(out: Option<&Path>, command: &str, format: Format) -> Self {
        match out {
            Some(p) => Destination::File(p.to_path_buf()),
            None => match std::env::var_os(OUT_DIR_ENV) {
                Some(dir) if !dir.is_empty() => {
                    Destination::File(Path::new(&dir).join(format!("{command}.{}", format.extension())))
                }
                _ => Destination::Stdout,
            },
        }
    }
}

/// Write `report` and return the files written.
pub fn emit(report: &Report, format: Format, dest: &Destination) -> CliResult<Vec<PathBuf>> {
    let sections: Vec<(Option<String>, String)> = match format {
        Format::Json => vec![(None, report.to_json())],
        Format::Csv => {
            let mut out = Vec::new();
            if let Some(first) = report.tables.first() {
                out.push((None, first.to_csv()));
            }
            if let Some(summary) = report.summary_csv() {
                let key = if out.is_empty() {
                    None
                } else {
                    Some("summary".to_owned())
                };
                out.push((key, summary));
            }
            for t in report.tables.iter().skip(1) {
                out.push((Some(t.name.to_owned()), t.to_csv()));
            }
            out
        }
    };
    match dest {
        Destination::Stdout => {
            let text = sections.into_iter().map(|(_, s)| s).collect::<Vec<_>>().join("\n");
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .context("writing to standard output")
                .map_err(CliError::io)?;
            Ok(Vec::new())
        }
        Destination::File(path) => {
            let mut written = Vec::new();
            for (suffix, text) in sections {
                let target = match suffix {
                    None => path.clone(),
                    Some(s) => sibling(path, &s),
                };
                write_file(&target, &text)?;
                written.push(target);
            }
            Ok(written)
        }
    }
}

fn sibling(path: &Path, section: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.{section}.csv"))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)
            .with_context(|| format!("creating directory {}", parent.display()))
            .map_err(CliError::io)?;
    }
    fs::write(path, text)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(CliError::io)
}
