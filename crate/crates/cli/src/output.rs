use std::io::Write;

use clap::ValueEnum;
use levelk_core::{Precision, Real};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Result of one subcommand: the JSON payload plus a flat table for the
/// text formats.
pub struct Output {
    pub json: Map<String, Value>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// `key: value` lines shown above the table.
    pub notes: Vec<(String, String)>,
}

impl Output {
    /// Payload with the fields every response carries.
    pub fn new(group: Option<String>, level: Option<u32>, altitude: Option<u32>, prec: Precision) -> Self {
        let mut json = Map::new();
        json.insert("group".into(), json!(group));
        json.insert("level".into(), json!(level));
        json.insert("altitude".into(), json!(altitude));
        json.insert("precision".into(), json!(prec.decimal_digits()));
        let mut notes = Vec::new();
        if let Some(g) = group {
            notes.push(("group".into(), g));
        }
        if let Some(k) = level {
            notes.push(("level".into(), k.to_string()));
        }
        if let Some(a) = altitude {
            notes.push(("altitude".into(), a.to_string()));
        }
        Output {
            json,
            header: Vec::new(),
            rows: Vec::new(),
            notes,
        }
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }

    /// A scalar shown both in JSON and as a note.
    pub fn scalar(&mut self, key: &str, value: String) {
        self.json.insert(key.into(), json!(value));
        self.notes.push((key.into(), value));
    }

    pub fn table(&mut self, header: &[&str], rows: Vec<Vec<String>>) {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
    }

    pub fn render(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                if self.header.is_empty() {
                    w.write_record(["key", "value"])?;
                    for (k, v) in &self.notes {
                        w.write_record([k, v])?;
                    }
                } else {
                    w.write_record(&self.header)?;
                    for r in &self.rows {
                        w.write_record(r)?;
                    }
                }
                w.flush()
            }
            Format::Table => {
                for (k, v) in &self.notes {
                    writeln!(out, "{k}: {v}")?;
                }
                if self.header.is_empty() {
                    return Ok(());
                }
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.header[i].chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                if !self.notes.is_empty() {
                    writeln!(out)?;
                }
                writeln!(out, "{}", line(&self.header))?;
                for r in &self.rows {
                    writeln!(out, "{}", line(r))?;
                }
                Ok(())
            }
        }
    }
}

/// Full-precision decimal string.
pub fn dec(x: &Real, prec: Precision) -> String {
    x.to_decimal(prec.decimal_digits() as usize)
}
