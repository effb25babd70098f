//! Output directory handling: JSON and CSV files plus run metadata.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use minkflow_core::closed_form::format_float;
use serde::Serialize;

use crate::{usage, Status};

pub struct OutDir {
    root: PathBuf,
}

impl OutDir {
    pub fn create(path: &Path) -> Result<Self> {
        fs::create_dir_all(path)
            .map_err(|e| usage(format!("cannot create output directory {}: {e}", path.display())))?;
        Ok(OutDir { root: path.to_path_buf() })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    pub fn write_text(&self, name: &str, text: &str) -> Result<()> {
        let path = self.path(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
    }

    pub fn write_json<T: Serialize>(&self, name: &str, value: &T) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write_text(name, &text)
    }

    /// Writes a CSV with the given header; `None` cells are left empty.
    pub fn write_csv(&self, name: &str, header: &[&str], rows: &[Vec<Cell>]) -> Result<()> {
        let path = self.path(name);
        let mut w = csv::Writer::from_path(&path).with_context(|| format!("creating {}", path.display()))?;
        w.write_record(header)?;
        for row in rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    /// Run information kept apart from the data files, which stay
    /// byte-identical across runs.
    pub fn write_metadata(&self, command: &str, elapsed: Duration, status: Status) -> Result<()> {
        #[derive(Serialize)]
        struct Metadata<'a> {
            tool: &'a str,
            version: &'a str,
            command: &'a str,
            arguments: Vec<String>,
            threads: usize,
            exit_code: u8,
            elapsed_seconds: f64,
            finished_unix_seconds: u64,
        }
        let finished = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        self.write_json(
            "metadata.json",
            &Metadata {
                tool: "minkflow",
                version: env!("CARGO_PKG_VERSION"),
                command,
                arguments: std::env::args().skip(1).collect(),
                threads: rayon::current_num_threads(),
                exit_code: status.code(),
                elapsed_seconds: elapsed.as_secs_f64(),
                finished_unix_seconds: finished,
            },
        )
    }
}

/// One CSV field.
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => format_float(*x),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}
