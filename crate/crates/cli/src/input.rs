//! Reading sequences from CSV or JSON files.
//!
//! CSV files need a header with `n` and `re` columns and may add `im`
//! (missing means zero). JSON files hold either an array of `{n, re, im}`
//! objects or a report object whose `rows` member is such an array, so the
//! output of `halfshift random --format json` reads back unchanged.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use halfshift::{Complex64, Sequence};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Read a sequence, choosing the parser from the file extension
/// (`.json` for JSON, anything else for CSV).
pub fn read_sequence(path: &Path) -> CliResult<Sequence> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::io)?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let pairs = if is_json { parse_json(&text) } else { parse_csv(&text) }
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(CliError::io)?;
    Sequence::from_indexed(pairs)
        .map_err(|e| CliError::io(anyhow!(e).context(format!("sequence in {}", path.display()))))
}

/// Parse `n,re[,im]` rows. Errors name the 1-based line.
pub fn parse_csv(text: &str) -> anyhow::Result<Vec<(i64, Complex64)>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader.headers().context("line 1: missing header")?.clone();
    let column = |name: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let n_col = column("n").ok_or_else(|| anyhow!("line 1: header needs an `n` column"))?;
    let re_col = column("re").ok_or_else(|| anyhow!("line 1: header needs an `re` column"))?;
    let im_col = column("im");

    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| match e.position() {
            Some(p) => anyhow!("line {}: {}", p.line(), e),
            None => anyhow!(e),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |col: usize, name: &str| -> anyhow::Result<&str> {
            record
                .get(col)
                .filter(|s| !s.is_empty())
                .ok_or_else(|| anyhow!("line {line}: missing value in column `{name}`"))
        };
        let n: i64 = field(n_col, "n")?.parse().map_err(|_| {
            anyhow!(
                "line {line}: `n` must be an integer, got `{}`",
                field(n_col, "n").unwrap_or("")
            )
        })?;
        let re = parse_float(field(re_col, "re")?, line, "re")?;
        let im = match im_col {
            Some(c) => parse_float(field(c, "im")?, line, "im")?,
            None => 0.0,
        };
        out.push((n, Complex64::new(re, im)));
    }
    if out.is_empty() {
        bail!("no data rows");
    }
    Ok(out)
}

fn parse_float(s: &str, line: u64, name: &str) -> anyhow::Result<f64> {
    let v: f64 = s
        .parse()
        .map_err(|_| anyhow!("line {line}: `{name}` must be a number, got `{s}`"))?;
    if !v.is_finite() {
        bail!("line {line}: `{name}` is not finite");
    }
    Ok(v)
}

#[derive(Deserialize)]
struct JsonSample {
    n: i64,
    re: f64,
    #[serde(default)]
    im: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonSequence {
    Rows(Vec<JsonSample>),
    Report { rows: Vec<JsonSample> },
}

pub fn parse_json(text: &str) -> anyhow::Result<Vec<(i64, Complex64)>> {
    let doc: JsonSequence = serde_json::from_str(text)
        .context("expected an array of {n, re, im} objects or an object with a `rows` array")?;
    let rows = match doc {
        JsonSequence::Rows(r) | JsonSequence::Report { rows: r } => r,
    };
    if rows.is_empty() {
        bail!("no samples");
    }
    Ok(rows.into_iter().map(|s| (s.n, Complex64::new(s.re, s.im))).collect())
}
