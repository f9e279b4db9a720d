//! Command-line front end for the varietal hypercube toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (with a
//! witness on standard output), 2 for usage and resource errors.

pub mod config;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;
use vqnet::analysis::{self, MetricsMode};
use vqnet::automorphism::{self, VerifyLimits, VerifyMode};
use vqnet::topology::{self, EdgeKind, Graph, VertexLabel};

pub use config::{CliConfig, Overrides};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] vqnet::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "vqnet",
    version,
    about = "Varietal hypercube topology and symmetry toolkit"
)]
pub struct Cli {
    /// TOML file with size_cap, exhaustive_cap, cycle_length_cap, sample_count, seed.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file for the graph or the JSON report.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for sampled verification.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest n materialized as an explicit graph.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Vq,
    Q,
    Circulant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyModeArg {
    Full,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricsModeArg {
    SingleSource,
    AllSources,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph as an edge list or DOT file.
    Generate {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Dimension, or vertex count for circulants.
        n: u32,
        /// Same as --format.
        #[arg(value_enum, value_name = "FORMAT")]
        positional_format: Option<Format>,
        /// Connection set of a circulant, e.g. 1,4,7.
        #[arg(long, value_delimiter = ',')]
        connection: Vec<u32>,
    },
    /// List the neighbor of a label across every dimension.
    Neighbors { label: String },
    /// Classify a pair of labels as a normal edge, crossing edge or non-edge.
    Adjacent { x: String, y: String },
    /// Build and verify an automorphism carrying X onto Y.
    Transport { n: u32, x: String, y: String },
    /// Check the transport construction over all targets or random pairs.
    Verify {
        n: u32,
        #[arg(long, value_enum, default_value = "full")]
        mode: VerifyModeArg,
        /// Pairs drawn in sampled mode (overrides the config).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Diameter, average distance and eccentricity profile.
    Metrics {
        #[arg(value_enum)]
        family: FamilyArg,
        n: u32,
        #[arg(long, value_enum, default_value = "single-source")]
        mode: MetricsModeArg,
        #[arg(long, value_delimiter = ',')]
        connection: Vec<u32>,
    },
    /// Search for two edges with different cycle counts.
    RefuteEdgeTransitivity {
        #[arg(default_value_t = 4)]
        n: u32,
    },
    /// Match VQ3 against the circulant C(Z8, {1, 4, 7}).
    CayleyCheck,
}

/// Result of a successful command run: the exit code and captured stdout.
struct Outcome {
    code: i32,
    text: String,
    note: String,
}

impl Outcome {
    fn pass(text: String) -> Self {
        Self {
            code: 0,
            text,
            note: String::new(),
        }
    }

    fn check(passed: bool, text: String) -> Self {
        Self {
            code: if passed { 0 } else { 1 },
            text,
            note: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing human-readable output to `stdout` and errors to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.text.as_bytes());
            let _ = stderr.write_all(outcome.note.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn parse_label(text: &str, n: Option<u32>) -> Result<VertexLabel, CliError> {
    let label: VertexLabel = text
        .parse()
        .map_err(|_| CliError::Usage(format!("'{text}' is not a binary label")))?;
    if let Some(n) = n {
        if label.dim() != n {
            return Err(CliError::Usage(format!(
                "label '{text}' has width {}, expected {n}",
                label.dim()
            )));
        }
    }
    if label.dim() == 0 {
        return Err(CliError::Usage("labels must be non-empty".into()));
    }
    Ok(label)
}

fn build_family(
    family: FamilyArg,
    n: u32,
    connection: &[u32],
    config: &CliConfig,
) -> Result<Graph, CliError> {
    Ok(match family {
        FamilyArg::Vq => topology::build_recursive_capped(n, config.size_cap)?,
        FamilyArg::Q => topology::build_hypercube_capped(n, config.size_cap)?,
        FamilyArg::Circulant => {
            if connection.is_empty() {
                return Err(CliError::Usage("circulant needs --connection".into()));
            }
            if u64::from(n) > 1u64 << config.size_cap {
                return Err(CliError::Usage(format!(
                    "circulant with {n} vertices exceeds 2^{} vertices",
                    config.size_cap
                )));
            }
            topology::build_circulant(n, connection)?
        }
    })
}

fn graph_name(g: &Graph) -> String {
    match g.family() {
        topology::Family::Varietal => format!("VQ{}", g.n()),
        topology::Family::Hypercube => format!("Q{}", g.n()),
        topology::Family::Circulant => format!("C{}", g.n()),
        topology::Family::Generic => "G".into(),
    }
}

fn write_report(path: Option<&Path>, value: &serde_json::Value) -> Result<(), CliError> {
    if let Some(p) = path {
        let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
        text.push('\n');
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn report_format(cli: &Cli) -> Result<(), CliError> {
    match cli.format {
        None | Some(Format::Json) => Ok(()),
        Some(f) => Err(CliError::Usage(format!(
            "--format {f:?} applies to generate only"
        ))),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let config = CliConfig::load(
        cli.config.as_deref(),
        Overrides {
            size_cap: cli.cap,
            seed: cli.seed,
        },
    )?;
    let out = cli.out.as_deref();
    let mut text = String::new();

    match &cli.command {
        Command::Generate {
            family,
            n,
            positional_format,
            connection,
        } => {
            let format = positional_format;
            if let (Some(a), Some(b)) = (format, cli.format) {
                if *a != b {
                    return Err(CliError::Usage("conflicting formats".into()));
                }
            }
            let g = build_family(*family, *n, connection, &config)?;
            let body = match format.or(cli.format).unwrap_or(Format::Edgelist) {
                Format::Edgelist => topology::to_edge_list(&g),
                Format::Dot => topology::to_dot(&g),
                Format::Json => {
                    return Err(CliError::Usage("generate writes edgelist or dot".into()))
                }
            };
            let summary = format!(
                "{}: {} vertices, {} edges",
                graph_name(&g),
                g.vertex_count(),
                g.edge_count()
            );
            match out {
                Some(p) => {
                    std::fs::write(p, body)?;
                    let _ = writeln!(text, "{summary}");
                    let _ = writeln!(text, "wrote {}", p.display());
                }
                None => {
                    text.push_str(&body);
                    let mut outcome = Outcome::pass(text);
                    outcome.note = format!("{summary}\n");
                    return Ok(outcome);
                }
            }
            Ok(Outcome::pass(text))
        }

        Command::Neighbors { label } => {
            let x = parse_label(label, None)?;
            for (d, y) in (1..).zip(topology::neighbors(x)) {
                let class = topology::classify_edge(x, y)?.expect("neighbors are adjacent");
                let kind = match class.kind {
                    EdgeKind::Normal => "normal",
                    EdgeKind::Crossing => "crossing",
                };
                let _ = writeln!(text, "{d} {y} {kind}");
            }
            Ok(Outcome::pass(text))
        }

        Command::Adjacent { x, y } => {
            let x = parse_label(x, None)?;
            let y = parse_label(y, Some(x.dim()))?;
            match topology::classify_edge(x, y)? {
                Some(c) => {
                    let kind = match c.kind {
                        EdgeKind::Normal => "normal",
                        EdgeKind::Crossing => "crossing",
                    };
                    let _ = writeln!(text, "{x} {y}: adjacent, dimension {}, {kind}", c.dimension);
                    Ok(Outcome::pass(text))
                }
                None => {
                    let _ = writeln!(text, "{x} {y}: not adjacent");
                    Ok(Outcome::check(false, text))
                }
            }
        }

        Command::Transport { n, x, y } => {
            report_format(cli)?;
            let x = parse_label(x, Some(*n))?;
            let y = parse_label(y, Some(*n))?;
            let sigma = automorphism::transport(x, y)?;
            let image = sigma.apply(x)?;
            let image_ok = image == y;
            // The notation repeats shared subterms, so its length grows
            // exponentially with n; above the cap only the image is shown.
            let printable = *n <= config.size_cap;
            if printable {
                let _ = writeln!(text, "automorphism: {sigma}");
            } else {
                let _ = writeln!(
                    text,
                    "automorphism: not printed, n = {n} exceeds size cap {}",
                    config.size_cap
                );
            }
            let _ = writeln!(
                text,
                "image: {x} -> {image} {}",
                if image_ok { "ok" } else { "MISMATCH" }
            );
            let mut report = json!({
                "n": n,
                "source": x.to_string(),
                "target": y.to_string(),
                "image": image.to_string(),
            });
            if printable {
                report["automorphism"] = json!(sigma.to_string());
            }
            let verified = if *n > config.size_cap {
                let _ = writeln!(
                    text,
                    "verification skipped: n = {n} exceeds size cap {}",
                    config.size_cap
                );
                report["verdict"] = json!("skipped");
                true
            } else {
                let check = automorphism::is_automorphism_capped(&sigma, config.size_cap)?;
                if check.is_ok() {
                    let _ = writeln!(
                        text,
                        "verified: automorphism of VQ{n}, edges checked: {}",
                        check.edges_checked
                    );
                    report["verdict"] = json!("verified");
                } else {
                    let _ = writeln!(
                        text,
                        "FAILED: {} violations, first {:?}",
                        check.violations,
                        check.witness()
                    );
                    report["verdict"] = json!("failed");
                    report["witnesses"] =
                        serde_json::to_value(&check.witnesses).expect("serializable");
                }
                check.is_ok()
            };
            write_report(out, &report)?;
            Ok(Outcome::check(image_ok && verified, text))
        }

        Command::Verify { n, mode, samples } => {
            report_format(cli)?;
            let mode = match mode {
                VerifyModeArg::Full => VerifyMode::Full,
                VerifyModeArg::Sampled => VerifyMode::Sampled {
                    samples: samples.unwrap_or(config.sample_count),
                    seed: config.seed,
                },
            };
            let limits = VerifyLimits {
                size_cap: config.size_cap,
                exhaustive_cap: config.exhaustive_cap,
            };
            let report = automorphism::verify_vertex_transitivity(*n, mode, limits)?;
            let what = match mode {
                VerifyMode::Full => "targets",
                VerifyMode::Sampled { .. } => "pairs",
            };
            let _ = writeln!(
                text,
                "VQ{n}: {}/{} {what} verified",
                report.verified, report.checked
            );
            for f in &report.failures {
                let _ = writeln!(text, "failure: {} -> {}: {}", f.source, f.target, f.reason);
            }
            write_report(out, &serde_json::to_value(&report).expect("serializable"))?;
            Ok(Outcome::check(report.passed(), text))
        }

        Command::Metrics {
            family,
            n,
            mode,
            connection,
        } => {
            report_format(cli)?;
            let g = build_family(*family, *n, connection, &config)?;
            let mode = match mode {
                MetricsModeArg::SingleSource => MetricsMode::SingleSourceViaTransitivity,
                MetricsModeArg::AllSources => MetricsMode::AllSources,
            };
            let report = analysis::metrics(&g, mode)?;
            let uniform = report.eccentricity_profile.len() == 1;
            let _ = writeln!(
                text,
                "{}: diameter {}, average distance {}/{} ({}), mode {}",
                graph_name(&g),
                report.diameter,
                report.average_distance.numer(),
                report.average_distance.denom(),
                report.average_distance_decimal(),
                report.mode.as_str()
            );
            for (ecc, count) in &report.eccentricity_profile {
                let _ = writeln!(text, "eccentricity {ecc}: {count} vertices");
            }
            if !uniform {
                let _ = writeln!(
                    text,
                    "FAILED: eccentricities differ in a vertex-transitive family"
                );
            }
            write_report(out, &report.to_json_value())?;
            Ok(Outcome::check(uniform, text))
        }

        Command::RefuteEdgeTransitivity { n } => {
            report_format(cli)?;
            let report = analysis::refute_edge_transitivity(*n, config.cycle_length_cap)?;
            for p in &report.profiles {
                let counts: Vec<String> =
                    p.counts.iter().map(|(l, c)| format!("{l}:{c}")).collect();
                let _ = writeln!(
                    text,
                    "edge {}-{} cycles {}",
                    p.edge.0,
                    p.edge.1,
                    counts.join(" ")
                );
            }
            match &report.witness {
                Some(w) => {
                    let _ = writeln!(
                        text,
                        "witness: edge {}-{} lies on {} cycles of length {}, edge {}-{} on {}",
                        w.first_edge.0,
                        w.first_edge.1,
                        w.first_count,
                        w.cycle_length,
                        w.second_edge.0,
                        w.second_edge.1,
                        w.second_count
                    );
                    let _ = writeln!(text, "VQ{n} is not edge-transitive");
                }
                None => {
                    let _ = writeln!(
                        text,
                        "no witness found up to cycle length {}",
                        report.cycle_bound
                    );
                }
            }
            write_report(out, &serde_json::to_value(&report).expect("serializable"))?;
            Ok(Outcome::check(report.witness.is_some(), text))
        }

        Command::CayleyCheck => {
            report_format(cli)?;
            let check = analysis::cayley_check()?;
            match &check.mapping {
                Some(map) => {
                    let _ = writeln!(text, "VQ3 ≅ C(Z8,{{1,4,7}}): mapping found");
                    for (x, r) in map.iter().enumerate() {
                        let _ = writeln!(text, "{} -> {r}", VertexLabel::new(x as u64, 3)?);
                    }
                }
                None => {
                    let _ = writeln!(text, "VQ3 ≇ C(Z8,{{1,4,7}}): no mapping");
                }
            }
            write_report(out, &serde_json::to_value(&check).expect("serializable"))?;
            Ok(Outcome::check(check.mapping.is_some(), text))
        }
    }
}
