//! Plain-text and CSV rendering of command output.

use std::fmt::Write as _;

use clap::ValueEnum;
use frcode::rate::{to_decimal, to_fraction};
use frcode::Rate;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

enum Section {
    Fields(Vec<(String, String)>),
    Table { title: String, header: Vec<String>, rows: Vec<Vec<String>> },
}

/// An ordered list of key/value blocks and tables.
#[derive(Default)]
pub struct Report {
    sections: Vec<Section>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Appends a field, extending the current key/value block.
    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        let entry = (key.into(), value.to_string());
        match self.sections.last_mut() {
            Some(Section::Fields(fields)) => fields.push(entry),
            _ => self.sections.push(Section::Fields(vec![entry])),
        }
        self
    }

    /// Starts a new key/value block even if the previous section was one.
    pub fn break_fields(&mut self) -> &mut Self {
        self.sections.push(Section::Fields(Vec::new()));
        self
    }

    pub fn table(&mut self, title: impl Into<String>, header: &[&str], rows: Vec<Vec<String>>) -> &mut Self {
        self.sections.push(Section::Table {
            title: title.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn render(&self, format: Format) -> String {
        let blocks: Vec<String> = self
            .sections
            .iter()
            .filter(|s| !matches!(s, Section::Fields(f) if f.is_empty()))
            .map(|s| match format {
                Format::Text => render_text(s),
                Format::Csv => render_csv(s),
            })
            .collect();
        blocks.join("\n")
    }
}

fn render_text(section: &Section) -> String {
    let mut out = String::new();
    match section {
        Section::Fields(fields) => {
            for (k, v) in fields {
                let _ = writeln!(out, "{k} = {v}");
            }
        }
        Section::Table { title, header, rows } => {
            let _ = writeln!(out, "{title}");
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("  {}", padded.join("  ").trim_end())
            };
            let _ = writeln!(out, "{}", line(header));
            for row in rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
    }
    out
}

fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn csv_line(cells: &[String]) -> String {
    cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",")
}

fn render_csv(section: &Section) -> String {
    let mut out = String::new();
    match section {
        Section::Fields(fields) => {
            let _ = writeln!(out, "key,value");
            for (k, v) in fields {
                let _ = writeln!(out, "{}", csv_line(&[k.clone(), v.clone()]));
            }
        }
        Section::Table { title, header, rows } => {
            let _ = writeln!(out, "# {title}");
            let _ = writeln!(out, "{}", csv_line(header));
            for row in rows {
                let _ = writeln!(out, "{}", csv_line(row));
            }
        }
    }
    out
}

/// `{U1, U2, U3}`
pub fn node_set(nodes: &[usize]) -> String {
    let names: Vec<String> = nodes.iter().map(|i| format!("U{i}")).collect();
    format!("{{{}}}", names.join(", "))
}

/// `{1, 2, 3}`
pub fn packet_set(packets: &[usize]) -> String {
    let names: Vec<String> = packets.iter().map(usize::to_string).collect();
    format!("{{{}}}", names.join(", "))
}

pub fn list(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn decimal(value: &Rate) -> String {
    to_decimal(value, 3)
}

pub fn fraction(value: &Rate) -> String {
    to_fraction(value)
}

/// `value` written over `den` when that denominator is exact, reduced otherwise.
pub fn fraction_over(value: &Rate, den: usize) -> String {
    let den = den as i64;
    if den % value.denom() == 0 {
        format!("{}/{}", value.numer() * (den / value.denom()), den)
    } else {
        to_fraction(value)
    }
}

pub fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}
