//! Output formatting: JSON (default), CSV, and LaTeX table rows. All output
//! is byte-deterministic for fixed inputs: ordering comes from sorted maps
//! and declared struct fields.

use clap::ValueEnum;
use serde::Serialize;

use hurwitz_core::published::QuantumTableCell;
use hurwitz_core::verify::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(fields: &[&str]) -> String {
    fields
        .iter()
        .map(|f| csv_quote(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn latex_row(fields: &[&str]) -> String {
    format!("{} \\\\", fields.join(" & "))
}

pub fn print_single<T: Serialize>(report: &T, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("serialize")
            );
        }
        Format::Csv | Format::Latex => {
            // Flatten the JSON object into a single row.
            let v = serde_json::to_value(report).expect("serialize");
            let obj = v.as_object().expect("object report");
            let mut fields = Vec::new();
            for (_, val) in obj {
                fields.push(scalar_to_string(val));
            }
            let refs: Vec<&str> = fields.iter().map(|s| s.as_str()).collect();
            if format == Format::Csv {
                println!("{}", csv_row(&refs));
            } else {
                println!("{}", latex_row(&refs));
            }
        }
    }
}

fn scalar_to_string(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn print_multi<T: Serialize>(report: &T, format: Format) {
    print_single(report, format)
}

#[derive(Serialize)]
pub struct PathReport {
    pub query: serde_json::Value,
    pub counts: Vec<SignatureCount>,
    pub total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weighted_sum: Option<String>,
}

#[derive(Serialize)]
pub struct SignatureCount {
    pub signature: String,
    pub count: u64,
}

pub fn print_paths(report: &PathReport, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("serialize")
        ),
        Format::Csv => {
            println!("signature,count");
            for c in &report.counts {
                println!("{}", csv_row(&[&c.signature, &c.count.to_string()]));
            }
        }
        Format::Latex => {
            for c in &report.counts {
                println!("{}", latex_row(&[&c.signature, &c.count.to_string()]));
            }
        }
    }
}

pub fn print_characters(n: u32, order: &[String], values: &[Vec<i64>], format: Format) {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct TableReport<'a> {
                n: u32,
                order: &'a [String],
                values: &'a [Vec<i64>],
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&TableReport { n, order, values })
                    .expect("serialize")
            );
        }
        Format::Csv => {
            let mut header = vec!["lambda\\mu".to_string()];
            header.extend(order.iter().cloned());
            let refs: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
            println!("{}", csv_row(&refs));
            for (lam, row) in order.iter().zip(values) {
                let mut fields = vec![lam.clone()];
                fields.extend(row.iter().map(|v| v.to_string()));
                let refs: Vec<&str> = fields.iter().map(|s| s.as_str()).collect();
                println!("{}", csv_row(&refs));
            }
        }
        Format::Latex => {
            for (lam, row) in order.iter().zip(values) {
                let mut fields = vec![format!("({lam})")];
                fields.extend(row.iter().map(|v| v.to_string()));
                let refs: Vec<&str> = fields.iter().map(|s| s.as_str()).collect();
                println!("{}", latex_row(&refs));
            }
        }
    }
}

pub fn print_quantum_table(cells: &[QuantumTableCell], format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(cells).expect("serialize")
        ),
        Format::Csv => {
            println!(
                "n,generator,computed,published,matches_published,pipelines_agree,classical_limit_ok"
            );
            for c in cells {
                println!(
                    "{}",
                    csv_row(&[
                        &c.n.to_string(),
                        &c.generator,
                        &c.computed,
                        &c.published,
                        &c.matches_published.to_string(),
                        &c.pipelines_agree.to_string(),
                        &c.classical_limit_ok.to_string(),
                    ])
                );
            }
        }
        Format::Latex => {
            for c in cells {
                println!(
                    "{}",
                    latex_row(&[
                        &c.n.to_string(),
                        &c.generator,
                        &c.computed,
                        &c.matches_published.to_string(),
                    ])
                );
            }
        }
    }
}

pub fn print_verify(reports: &[CheckReport], format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("serialize")
        ),
        Format::Csv => {
            println!("suite,checks,failures");
            for r in reports {
                println!(
                    "{}",
                    csv_row(&[&r.name, &r.checks.to_string(), &r.failures.to_string()])
                );
            }
        }
        Format::Latex => {
            for r in reports {
                println!(
                    "{}",
                    latex_row(&[&r.name, &r.checks.to_string(), &r.failures.to_string()])
                );
            }
        }
    }
}
