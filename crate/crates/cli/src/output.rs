use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::Result;
use serde::Serialize;

use wahlrank_core::GaussReport;

use crate::args::Format;

/// Bad flags, unreadable or malformed input. Maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// A record with a fixed column layout for CSV and table output.
pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

fn opt(v: Option<u64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

impl Row for GaussReport {
    const HEADER: &'static [&'static str] = &[
        "d",
        "k",
        "genus",
        "domain_dim",
        "rank",
        "codomain_dim",
        "corank",
        "predicted_rank",
        "predicted_corank",
        "in_theorem_range",
        "match",
    ];

    fn fields(&self) -> Vec<String> {
        vec![
            self.d.to_string(),
            self.k.to_string(),
            self.genus.to_string(),
            self.domain_dim.to_string(),
            self.rank.to_string(),
            self.codomain_dim.to_string(),
            self.corank.to_string(),
            opt(self.predicted_rank),
            opt(self.predicted_corank),
            self.in_theorem_range.to_string(),
            self.matches.to_string(),
        ]
    }
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn table<R: Row>(rows: &[R], out: &mut dyn Write) -> io::Result<()> {
    let cells: Vec<Vec<String>> = rows.iter().map(Row::fields).collect();
    let widths: Vec<usize> = R::HEADER
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |out: &mut dyn Write, items: Vec<&str>| -> io::Result<()> {
        let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        writeln!(out, "{}", padded.join("  ").trim_end())
    };
    line(out, R::HEADER.to_vec())?;
    for r in &cells {
        line(out, r.iter().map(String::as_str).collect())?;
    }
    Ok(())
}

/// Writes `rows` as JSON lines, CSV, or an aligned table.
pub fn emit<R: Row>(rows: &[R], format: Format, path: Option<&Path>) -> Result<()> {
    let mut out = sink(path)?;
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(R::HEADER)?;
            for r in rows {
                w.write_record(r.fields())?;
            }
            w.flush()?;
        }
        Format::Table => table(rows, &mut out)?,
    }
    out.flush()?;
    Ok(())
}
