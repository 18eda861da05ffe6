//! Output formatting shared by every subcommand. All floating-point fields
//! go through [`fmt_f`], which prints 17 significant digits so the printed
//! value parses back to the identical bits. Output is a pure function of the
//! inputs (no timestamps, no counters), which keeps seeded runs byte-stable.

use clap::ValueEnum;
use hyp2f1::ComplexScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

pub fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders in the same `re+imi` shape the argument parser accepts.
pub fn fmt_c(z: ComplexScalar) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", fmt_f(z.re), fmt_f(-z.im))
    } else {
        format!("{}+{}i", fmt_f(z.re), fmt_f(z.im))
    }
}

pub fn json_c(z: ComplexScalar) -> serde_json::Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

/// `key = value` lines for table mode.
pub fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$} = {v}\n"));
    }
    out
}

pub fn csv_line(fields: &[String]) -> String {
    let mut out = fields.join(",");
    out.push('\n');
    out
}
