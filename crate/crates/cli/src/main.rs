//! Command-line interface for exact weighted double Hurwitz number
//! computations: single values, path counts, character tables, the quantum
//! table reproduction, tau-function coefficients, and verification suites.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hurwitz_core::characters::character_table;
use hurwitz_core::exact::{series_expand, Var};
use hurwitz_core::hurwitz::{
    hurwitz_number, monotone_path_counts, weighted_hurwitz, Pipeline,
};
use hurwitz_core::published::quantum_table;
use hurwitz_core::partitions::Partition;
use hurwitz_core::tauseries::tau_coefficient;
use hurwitz_core::verify::run_suite;
use hurwitz_core::weights::parse_generator;

use output::Format;

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact classical and quantum weighted double Hurwitz numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOut {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Plain Hurwitz number from a list of ramification profiles
    Hurwitz {
        /// Profiles as |-separated comma lists, e.g. "2,1|2,1|3"
        #[arg(long)]
        profiles: String,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Weighted double Hurwitz number H^d_G(mu, nu)
    Weighted {
        /// Generator spec: exp, E, E^3, H, E(q), E'(q), H(q), H'(q), Q(q,p), c:[...]
        #[arg(long = "G")]
        generator: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// geometric | central | brute | all
        #[arg(long, default_value = "geometric")]
        pipeline: String,
        /// Also print the value as a q-series to this degree
        #[arg(long)]
        q_cutoff: Option<usize>,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Signature-resolved monotone path counts in the Cayley graph
    Paths {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Optional generator for the weighted combinatorial sum
        #[arg(long = "G")]
        generator: Option<String>,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Character table of the symmetric group
    Characters {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Recompute the quantum Hurwitz table and compare with the published one
    QuantumTable {
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Hypergeometric tau-function coefficient of p_mu p_nu z^d
    TauCoeff {
        #[arg(long = "G")]
        generator: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Also print the value as a q-series to this degree
        #[arg(long)]
        q_cutoff: Option<usize>,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        /// Worker threads for table sweeps (default: rayon's choice)
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: CommonOut,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_profiles(s: &str) -> Result<Vec<Partition>, String> {
    s.split('|').map(parse_partition).collect()
}

#[derive(Serialize)]
struct ValueReport {
    query: serde_json::Value,
    value: String,
    pipeline: String,
    agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    series: Option<String>,
}

#[derive(Serialize)]
struct MultiValueReport {
    query: serde_json::Value,
    results: Vec<PipelineValue>,
    agreement: bool,
}

#[derive(Serialize)]
struct PipelineValue {
    pipeline: String,
    value: String,
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Hurwitz { profiles, out } => {
            let parts = parse_profiles(&profiles)?;
            let value = hurwitz_number(&parts).map_err(|e| e.to_string())?;
            let report = ValueReport {
                query: serde_json::json!({ "profiles": profiles }),
                value: value.to_string(),
                pipeline: "frobenius-schur".into(),
                agreement: true,
                series: None,
            };
            output::print_single(&report, out.format);
            Ok(0)
        }
        Command::Weighted {
            generator,
            d,
            mu,
            nu,
            pipeline,
            q_cutoff,
            out,
        } => {
            let g = parse_generator(&generator).map_err(|e| e.to_string())?;
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let query = serde_json::json!({
                "G": generator, "d": d, "mu": mu.to_string(), "nu": nu.to_string(),
            });
            if pipeline == "all" {
                let mut results = Vec::new();
                for p in [Pipeline::Geometric, Pipeline::Central, Pipeline::Brute] {
                    let r = weighted_hurwitz(&g, d, &mu, &nu, p).map_err(|e| e.to_string())?;
                    results.push(PipelineValue {
                        pipeline: p.name().into(),
                        value: r.value.to_string(),
                    });
                }
                let agreement = results.windows(2).all(|w| w[0].value == w[1].value);
                let report = MultiValueReport {
                    query,
                    results,
                    agreement,
                };
                output::print_multi(&report, out.format);
                Ok(if agreement { 0 } else { 1 })
            } else {
                let p = Pipeline::parse(&pipeline)
                    .ok_or_else(|| format!("unknown pipeline `{pipeline}`"))?;
                let r = weighted_hurwitz(&g, d, &mu, &nu, p).map_err(|e| e.to_string())?;
                let series = match q_cutoff {
                    Some(cut) => Some(
                        series_expand(&r.value, Var::Q, cut)
                            .map_err(|e| e.to_string())?
                            .to_string(),
                    ),
                    None => None,
                };
                let report = ValueReport {
                    query,
                    value: r.value.to_string(),
                    pipeline: p.name().into(),
                    agreement: true,
                    series,
                };
                output::print_single(&report, out.format);
                Ok(0)
            }
        }
        Command::Paths {
            n,
            d,
            mu,
            nu,
            generator,
            out,
        } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            if mu.weight() != n || nu.weight() != n {
                return Err(format!("mu and nu must be partitions of {n}"));
            }
            let counts = monotone_path_counts(n, d, &mu, &nu).map_err(|e| e.to_string())?;
            let weighted_sum = match &generator {
                Some(spec) => {
                    let g = parse_generator(spec).map_err(|e| e.to_string())?;
                    let v = hurwitz_core::hurwitz::weighted_hurwitz_brute(&g, d, &mu, &nu)
                        .map_err(|e| e.to_string())?;
                    Some(v.to_string())
                }
                None => None,
            };
            let report = output::PathReport {
                query: serde_json::json!({
                    "n": n, "d": d, "mu": mu.to_string(), "nu": nu.to_string(),
                    "G": generator,
                }),
                total: counts.values().sum(),
                counts: counts
                    .iter()
                    .map(|(sig, c)| output::SignatureCount {
                        signature: sig.to_string(),
                        count: *c,
                    })
                    .collect(),
                weighted_sum,
            };
            output::print_paths(&report, out.format);
            Ok(0)
        }
        Command::Characters { n, out } => {
            let t = character_table(n).map_err(|e| e.to_string())?;
            let order: Vec<String> = t.order.iter().map(|p| p.to_string()).collect();
            let values: Vec<Vec<i64>> = t
                .values
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            i64::try_from(v).map_err(|_| {
                                format!("character value {v} exceeds the integer output range")
                            })
                        })
                        .collect::<Result<Vec<i64>, String>>()
                })
                .collect::<Result<_, _>>()?;
            output::print_characters(n, &order, &values, out.format);
            Ok(0)
        }
        Command::QuantumTable { n_max, out } => {
            if !(2..=5).contains(&n_max) {
                return Err("quantum table supports n_max in 2..=5".into());
            }
            let cells = quantum_table(n_max).map_err(|e| e.to_string())?;
            output::print_quantum_table(&cells, out.format);
            Ok(0)
        }
        Command::TauCoeff {
            generator,
            d,
            mu,
            nu,
            q_cutoff,
            out,
        } => {
            let g = parse_generator(&generator).map_err(|e| e.to_string())?;
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let value = tau_coefficient(&g, d, &mu, &nu).map_err(|e| e.to_string())?;
            let series = match q_cutoff {
                Some(cut) => Some(
                    series_expand(&value, Var::Q, cut)
                        .map_err(|e| e.to_string())?
                        .to_string(),
                ),
                None => None,
            };
            let report = ValueReport {
                query: serde_json::json!({
                    "G": generator, "d": d, "mu": mu.to_string(), "nu": nu.to_string(),
                }),
                value: value.to_string(),
                pipeline: "tau-expansion".into(),
                agreement: true,
                series,
            };
            output::print_single(&report, out.format);
            Ok(0)
        }
        Command::Verify {
            suite,
            n_max,
            d_max,
            jobs,
            out,
        } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build_global()
                    .map_err(|e| e.to_string())?;
            }
            let reports = run_suite(&suite, n_max, d_max).map_err(|e| e.to_string())?;
            let all_ok = reports.iter().all(|r| r.passed());
            output::print_verify(&reports, out.format);
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::from(0),
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
