//! Output assembly: every command produces a `Report` carrying the same
//! data as JSON, a plain-text layout, and CSV records.

use std::io::{self, Write};

use nilcone::ic_tables::EvaluatedTable;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "nilcone/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Paper,
    Json,
    Csv,
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub header: Vec<String>,
    pub records: Vec<Vec<String>>,
    /// Set when an audit turned up discrepancies.
    pub findings: bool,
}

impl Report {
    pub fn new(json: Value, text: String) -> Report {
        Report { json, text, header: Vec::new(), records: Vec::new(), findings: false }
    }

    pub fn csv<S: ToString>(mut self, header: &[S], records: Vec<Vec<String>>) -> Report {
        self.header = header.iter().map(ToString::to_string).collect();
        self.records = records;
        self
    }

    pub fn with_findings(mut self, findings: bool) -> Report {
        self.findings = findings;
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Paper => out.write_all(self.text.as_bytes()),
            Format::Json => {
                let mut v = self.json.clone();
                if let Value::Object(map) = &mut v {
                    map.insert("schema".into(), json!(SCHEMA));
                }
                serde_json::to_writer_pretty(&mut *out, &v)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.records {
                    w.write_record(r)?;
                }
                w.flush()
            }
        }
    }
}

pub fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

pub fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "?".to_string(), ToString::to_string)
}

/// Left-aligned text grid with a rule under the header row.
pub fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .chain(std::iter::once(&header[j]))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", parts.join("  ").trim_end())
    };
    let mut s = line(header);
    s.push_str(&line(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for r in rows {
        s.push_str(&line(r));
    }
    s
}

fn join_symbols<T: ToString>(symbols: &[T]) -> String {
    symbols.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
}

/// Graded cohomology table: one column per grading, rows `H^i` from the
/// top degree down, with a dimension line under each row when known.
pub fn table_report(t: &EvaluatedTable) -> Report {
    let mut gradings: Vec<i64> = t.entries.iter().map(|e| e.m).collect();
    gradings.sort_unstable();
    gradings.dedup();
    let mut rows_present: Vec<u8> = t.entries.iter().map(|e| e.i).collect();
    rows_present.extend(t.tail.map(|tl| tl.degree));
    rows_present.sort_unstable();
    rows_present.dedup();

    let mut header = vec!["i \\ m".to_string()];
    header.extend(gradings.iter().map(i64::to_string));
    let mut rows = Vec::new();
    for &i in rows_present.iter().rev() {
        let mut syms = vec![format!("H^{i}")];
        let mut dims = vec![String::new()];
        for &m in &gradings {
            match t.entry(i, m) {
                Some(e) => {
                    syms.push(join_symbols(&e.symbols));
                    dims.push(format!("dim {}", opt(&e.evaluated.dim)));
                }
                None => {
                    syms.push(String::new());
                    dims.push(String::new());
                }
            }
        }
        rows.push(syms);
        rows.push(dims);
    }
    let mut text = format!("{}  on {}  char {}\n", t.object, t.support, t.characteristic);
    text.push_str(&grid(&header, &rows));
    match t.tail {
        Some(tl) => text.push_str(&format!(
            "row {} continues past m = {}: H^0(({}) + r(1,0,-1)) at m = {} + 2r\n",
            tl.degree, t.max_grading, tl.base, tl.start
        )),
        None => text.push_str(&format!("materialized through m = {}\n", t.max_grading)),
    }

    let records = t
        .entries
        .iter()
        .map(|e| {
            vec![
                e.i.to_string(),
                e.m.to_string(),
                e.symbols.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + "),
                opt(&e.evaluated.dim),
                e.evaluated
                    .constituents
                    .as_ref()
                    .map_or_else(|| "?".into(), |c| c.iter().map(|w| format!("({w})")).collect::<Vec<_>>().join(" ")),
            ]
        })
        .collect();
    Report::new(to_json(t), text).csv(&["i", "m", "symbols", "dim", "constituents"], records)
}
