//! CSV and Markdown rendering of sweep tables.
//!
//! Optimal values are rounded to two decimals and degrees to four. `precise`
//! switches to the shortest round-trip representation instead.

use crate::analysis::{SatisfactionRecord, SweepTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableLayout {
    /// One row per setting: coefficients, `f`, `mu`, then one column per lambda.
    #[default]
    Records,
    /// One row per lambda, one `mu~` column per setting.
    LambdaMajor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: TableFormat,
    pub layout: TableLayout,
    pub precise: bool,
}

impl RenderOptions {
    pub fn new(format: TableFormat) -> Self {
        Self {
            format,
            layout: TableLayout::Records,
            precise: false,
        }
    }
}

const MISSING: &str = "NA";

fn value(v: Option<f64>, decimals: usize, precise: bool) -> String {
    match v {
        Some(v) if precise => format!("{v}"),
        Some(v) => format!("{v:.decimals$}"),
        None => MISSING.to_string(),
    }
}

fn record_cells(r: &SatisfactionRecord, lambdas: &[f64], precise: bool, with_note: bool) -> Vec<String> {
    let mut cells = vec![
        r.setting.alpha.to_string(),
        r.setting.beta.to_string(),
        r.setting.gamma.to_string(),
        value(r.f, 2, precise),
        value(r.mu, 4, precise),
    ];
    cells.extend(lambdas.iter().map(|&l| value(r.mu_tilde_at(l), 4, precise)));
    if with_note {
        cells.push(r.flag.clone().unwrap_or_default());
    }
    cells
}

fn grid(t: &SweepTable, opts: &RenderOptions) -> (Vec<String>, Vec<Vec<String>>) {
    match opts.layout {
        TableLayout::Records => {
            let with_note = t.rows.iter().any(|r| r.flag.is_some());
            let mut header = t.axis_labels.clone();
            header.push("f".into());
            header.push("mu".into());
            header.extend(t.lambdas.iter().map(|l| format!("mu_tilde[lambda={l}]")));
            if with_note {
                header.push("note".into());
            }
            let rows = t
                .rows
                .iter()
                .map(|r| record_cells(r, &t.lambdas, opts.precise, with_note))
                .collect();
            (header, rows)
        }
        TableLayout::LambdaMajor => {
            let mut header = vec!["lambda".to_string()];
            header.extend(t.rows.iter().map(|r| format!("mu_tilde{}", r.setting)));
            if t.rows.is_empty() {
                return (header, Vec::new());
            }
            let rows = t
                .lambdas
                .iter()
                .map(|&l| {
                    let mut cells = vec![l.to_string()];
                    cells.extend(t.rows.iter().map(|r| value(r.mu_tilde_at(l), 4, opts.precise)));
                    cells
                })
                .collect();
            (header, rows)
        }
    }
}

fn to_csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    // Writing into a Vec cannot fail.
    w.write_record(header).expect("in-memory csv write");
    for row in rows {
        w.write_record(row).expect("in-memory csv write");
    }
    let bytes = w.into_inner().expect("in-memory csv flush");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn to_markdown(header: &[String], rows: &[Vec<String>]) -> String {
    let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
    let mut out = line(header);
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

/// Renders a sweep table; identical tables always give identical bytes.
pub fn render_table(t: &SweepTable, opts: &RenderOptions) -> String {
    let (header, rows) = grid(t, opts);
    match opts.format {
        TableFormat::Csv => to_csv(&header, &rows),
        TableFormat::Markdown => to_markdown(&header, &rows),
    }
}
