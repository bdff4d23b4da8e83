//! Deterministic CSV/JSON emission and atomic output-file handling.
//!
//! Result files are byte-reproducible: numbers go through the shared
//! 9-significant-digit formatter, CSV uses LF endings and a `.` decimal
//! separator regardless of locale, and files are written through a
//! temporary in the destination directory so a failing run never leaves a
//! partial output behind.

use std::io::Write;
use std::path::{Path, PathBuf};

use thzlink_core::io::format_sig9;
use thzlink_core::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One cell of a result table: a number, an absent value, or text.
#[derive(Debug, Clone)]
pub enum Cell {
    Number(f64),
    Empty,
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Number(v) => format_sig9(*v),
            Cell::Empty => String::new(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Number(v) => format_sig9(*v),
            Cell::Empty => "null".to_string(),
            Cell::Text(s) => json_string(s),
        }
    }
}

/// Column-named rows, rendered to CSV (header + rows) or a JSON array of
/// objects.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n  {");
            for (j, (name, cell)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&json_string(name));
                out.push_str(": ");
                out.push_str(&cell.json());
            }
            out.push('}');
        }
        if !self.rows.is_empty() {
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }

    /// Renders per the requested format; scalar-free tables have no plain
    /// form, so a missing format means CSV.
    pub fn render(&self, format: Option<Format>) -> String {
        match format.unwrap_or(Format::Csv) {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Renders a single named value: bare number without a format, one-column
/// CSV, or a one-field JSON object.
pub fn render_scalar(name: &str, value: f64, format: Option<Format>) -> String {
    match format {
        None => format!("{}\n", format_sig9(value)),
        Some(Format::Csv) => format!("{name}\n{}\n", format_sig9(value)),
        Some(Format::Json) => format!("{{{}: {}}}\n", json_string(name), format_sig9(value)),
    }
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Writes to stdout, or atomically to `path` (temporary file in the
/// destination directory, persisted only on success).
pub fn emit(path: Option<&PathBuf>, content: &str) -> Result<()> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let dir = path
                .parent()
                .filter(|p| !p.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(content.as_bytes())?;
            tmp.persist(path).map_err(|e| Error::Io(e.error))?;
            Ok(())
        }
    }
}
