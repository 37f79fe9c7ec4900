//! Report and table writers. The JSON record schema is stable:
//! {check_id, params, status, lhs, rhs, elapsed_ms}; CSV flattens the same
//! fields, with params packed as "name=value" pairs.

use std::io::{self, Write};

use clap::ValueEnum;

use qcong::special::k_gf;
use qcong::verify::{CheckReport, ExtractedConstant, RunOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn write_reports(w: &mut dyn Write, format: Format, outcomes: &[RunOutcome]) -> io::Result<()> {
    match format {
        Format::Text => {
            for o in outcomes {
                writeln!(w, "{}", o.report)?;
                if let Some(constant) = &o.constant {
                    writeln!(w, "  {constant}")?;
                }
            }
            let pass = outcomes.iter().filter(|o| o.report.passed()).count();
            writeln!(w, "{pass}/{} passed", outcomes.len())
        }
        Format::Json => {
            let reports: Vec<&CheckReport> = outcomes.iter().map(|o| &o.report).collect();
            serde_json::to_writer_pretty(&mut *w, &reports)
                .map_err(io::Error::other)?;
            writeln!(w)
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(["check_id", "params", "status", "lhs", "rhs", "elapsed_ms"])?;
            for o in outcomes {
                let r = &o.report;
                csv.write_record([
                    r.check_id.as_str(),
                    &flatten_params(r),
                    &r.status.to_string(),
                    r.lhs.as_str(),
                    r.rhs.as_str(),
                    &format!("{:.3}", r.elapsed.as_secs_f64() * 1e3),
                ])?;
            }
            csv.flush()
        }
    }
}

fn flatten_params(report: &CheckReport) -> String {
    report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn write_kn_table(w: &mut dyn Write, format: Format, rows: &[(u32, u32)]) -> io::Result<()> {
    match format {
        Format::Text => {
            for &(n, p) in rows {
                writeln!(w, "K_{n}({p}) = {}", k_gf(n, p))?;
            }
            Ok(())
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|&(n, p)| {
                    serde_json::json!({ "n": n, "p": p, "value": k_gf(n, p).to_string() })
                })
                .collect();
            serde_json::to_writer_pretty(&mut *w, &objects)
                .map_err(io::Error::other)?;
            writeln!(w)
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(["n", "p", "value"])?;
            for &(n, p) in rows {
                csv.write_record([n.to_string(), p.to_string(), k_gf(n, p).to_string()])?;
            }
            csv.flush()
        }
    }
}

pub fn write_n_table(
    w: &mut dyn Write,
    format: Format,
    constants: &[ExtractedConstant],
) -> io::Result<()> {
    match format {
        Format::Text => {
            for c in constants {
                writeln!(w, "{c}")?;
            }
            Ok(())
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = constants
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "p": c.p,
                        "r": c.r,
                        "t": c.t,
                        "d": c.d,
                        "value": c.value.to_string(),
                    })
                })
                .collect();
            serde_json::to_writer_pretty(&mut *w, &objects)
                .map_err(io::Error::other)?;
            writeln!(w)
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(["p", "r", "t", "d", "value"])?;
            for c in constants {
                let d = c
                    .d
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                csv.write_record([
                    c.p.to_string(),
                    c.r.to_string(),
                    c.t.to_string(),
                    d,
                    c.value.to_string(),
                ])?;
            }
            csv.flush()
        }
    }
}
