use std::io::Write;

use clap::ValueEnum;
use pslb_core::audit::ClaimReport;
use pslb_core::tables::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

pub fn write_table(
    t: &Table,
    format: Format,
    precision: Option<usize>,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let t = t.with_precision(precision);
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(&t.headers)?;
            for row in &t.rows {
                w.write_record(row.iter().map(|c| c.render(None)))?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &t)?;
            writeln!(out)
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.render(None)).collect())
                .collect();
            let widths: Vec<usize> = t
                .headers
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([h.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            writeln!(out, "{}", t.title)?;
            let line = |fields: &[String]| {
                fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&t.headers))?;
            for r in &cells {
                writeln!(out, "{}", line(r))?;
            }
            Ok(())
        }
    }
}

pub fn write_reports(
    reports: &[ClaimReport],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(["Claim", "Status", "Violations", "Partial", "Scope", "Note"])?;
            for r in reports {
                w.write_record([
                    r.claim_id.as_str(),
                    &r.status.to_string(),
                    &r.violations.to_string(),
                    &r.partial.to_string(),
                    &r.scope,
                    &r.note,
                ])?;
            }
            w.flush()
        }
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{:<5} {:<16} {}",
                    r.claim_id.as_str(),
                    r.status.to_string(),
                    r.scope
                )?;
                if !r.note.is_empty() {
                    writeln!(out, "      note: {}", r.note)?;
                }
                for w in &r.witnesses {
                    writeln!(out, "      witness: {w}")?;
                }
                for c in &r.counterexamples {
                    writeln!(out, "      counterexample: {c}")?;
                }
            }
            Ok(())
        }
    }
}
