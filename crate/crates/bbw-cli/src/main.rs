//! Command-line surface for the engine: catalog inspection, weight
//! censuses, table regeneration, the odd-dot combinatorics report, and the
//! verification suite.
//!
//! Exit codes: 0 on success, 1 when a gating verification check fails,
//! 2 on usage or input errors.

mod catfile;
mod jsonio;
mod render;
mod workers;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use bbw_core::oddweyl::{verify_phiw_proposition, OddDotContext};
use bbw_core::superalg::{default_catalog, lookup_name, Superalgebra};
use bbw_core::verify::{count_failures, run_all, Status};

use render::Format;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Md,
    Tex,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Md => Format::Markdown,
            FormatArg::Tex => Format::Latex,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "bbw",
    version,
    about = "Exact computations with the distinguished parabolic subalgebras of classical \
             simple Lie superalgebras: odd-root partitions, sheaf-cohomology weight censuses, \
             reflection-group Poincare polynomials, and a verification suite for the \
             identities relating them."
)]
struct Cli {
    /// Truncation order for all power-series identities (minimum 8).
    #[arg(long, global = true, env = "BBW_TRUNCATE", default_value_t = 24)]
    truncate: usize,
    /// Worker threads for the census (default: available parallelism).
    #[arg(long, global = true, env = "BBW_WORKERS")]
    workers: Option<usize>,
    #[arg(long, global = true, env = "BBW_FORMAT", value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Emit the full per-subset contribution ledger.
    #[arg(long, global = true, env = "BBW_LEDGER", default_value_t = false)]
    ledger: bool,
    /// Extra catalog file whose entries join the built-in registry.
    #[arg(long, global = true, env = "BBW_CATALOG")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show the odd-root partition and hyperplane data of one algebra.
    Roots { algebra: String },
    /// Run the weight census and print the Poincare polynomial.
    Poincare { algebra: String },
    /// Regenerate the reference tables from the registry.
    Tables {
        /// One of: detecting, hyperplanes, parabolic, cohomology, all.
        #[arg(long, default_value = "all")]
        which: String,
    },
    /// Run the verification suite; exits 1 if any gating check fails.
    Verify {
        /// Restrict to entries whose name starts with this prefix.
        #[arg(long)]
        family: Option<String>,
        /// Restrict to entries with both parameters at most this rank.
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Tabulate the odd dot action: (w, l(w), Phi(w), w.0) per element.
    PhiW { algebra: String },
    /// Re-export a catalog entry as a catalog file.
    Export { algebra: String },
}

fn effective_workers(cli: &Cli) -> usize {
    cli.workers
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1)
}

fn load_registry(cli: &Cli) -> Result<Vec<Superalgebra>> {
    let mut registry = default_catalog();
    if let Some(path) = &cli.catalog {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading catalog file {}", path.display()))?;
        let mut user = catfile::load_catalog(&text)?;
        for spec in &mut user {
            spec.name = format!("user:{}", spec.name);
        }
        registry.extend(user);
    }
    Ok(registry)
}

fn find_entry(cli: &Cli, name: &str) -> Result<Superalgebra> {
    if let Some(stripped) = name.strip_prefix("user:") {
        let registry = load_registry(cli)?;
        return registry
            .into_iter()
            .find(|s| s.name == format!("user:{stripped}"))
            .ok_or_else(|| anyhow!("no user catalog entry named `{stripped}`"));
    }
    lookup_name(name).map_err(|e| anyhow!("{e}"))
}

fn run(cli: &Cli) -> Result<i32> {
    if cli.truncate < 8 {
        bail!("--truncate must be at least 8");
    }
    let format: Format = cli.format.into();
    match &cli.command {
        Command::Roots { algebra } => {
            let spec = find_entry(cli, algebra)?;
            if format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&jsonio::roots_json(&spec))?);
            } else {
                print!("{}", render::emit_roots(&spec, format));
            }
            Ok(0)
        }
        Command::Poincare { algebra } => {
            let spec = find_entry(cli, algebra)?;
            let res = workers::census_parallel(&spec, &spec.pos_roots, effective_workers(cli))
                .map_err(|e| anyhow!("{e}"))?;
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&jsonio::census_json(&spec, &res, cli.ledger))?
                );
            } else {
                print!("{}", render::emit_census_text(&spec, &res, cli.ledger));
            }
            Ok(0)
        }
        Command::Tables { which } => {
            let registry = load_registry(cli)?;
            let tables: Vec<render::WhichTable> = match which.as_str() {
                "detecting" => vec![render::WhichTable::DetectingRoots],
                "hyperplanes" => vec![render::WhichTable::Hyperplanes],
                "parabolic" => vec![render::WhichTable::ParabolicRoots],
                "cohomology" => vec![render::WhichTable::Cohomology],
                "all" => vec![
                    render::WhichTable::DetectingRoots,
                    render::WhichTable::Hyperplanes,
                    render::WhichTable::ParabolicRoots,
                    render::WhichTable::Cohomology,
                ],
                other => bail!("unknown table `{other}`"),
            };
            for t in tables {
                println!("{}", render::emit_table(&registry, t, format));
            }
            Ok(0)
        }
        Command::Verify { family, max_rank } => {
            let mut registry = load_registry(cli)?;
            if let Some(prefix) = family {
                registry.retain(|s| s.name.starts_with(prefix.as_str()));
            }
            if let Some(k) = max_rank {
                registry.retain(|s| s.m <= *k && s.n <= *k);
            }
            let reports = run_all(&registry, cli.truncate);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&jsonio::reports_json(&reports))?
                ),
                Format::Markdown => print!("{}", render::emit_reports_markdown(&reports)),
                _ => print!("{}", render::emit_reports_text(&reports)),
            }
            let failures = count_failures(&reports);
            let flagged = reports.iter().filter(|r| r.status == Status::Flagged).count();
            eprintln!(
                "{} checks: {} failing, {} flagged, {} fixture-only",
                reports.len(),
                failures,
                flagged,
                reports
                    .iter()
                    .filter(|r| r.status == Status::FixtureOnly)
                    .count()
            );
            Ok(if failures > 0 { 1 } else { 0 })
        }
        Command::PhiW { algebra } => {
            let spec = find_entry(cli, algebra)?;
            let ctx = OddDotContext::new(spec).map_err(|e| anyhow!("{e}"))?;
            println!("| w (word) | l(w) | Phi(w) | w.0 |");
            println!("|---|---|---|---|");
            let zero = bbw_core::weight::Weight::zero_like(&ctx.spec.factors);
            for w in &ctx.elements {
                let word = if w.word.is_empty() {
                    "id".to_string()
                } else {
                    w.word
                        .iter()
                        .map(|j| format!("s{}", j + 1))
                        .collect::<Vec<_>>()
                        .join("")
                };
                let phi = ctx.phi_of_w(w);
                println!(
                    "| {word} | {} | {} | {} |",
                    w.length(),
                    render::weight_list(&ctx.spec, &phi),
                    render::weight_symbolic(&ctx.spec, &ctx.odd_dot(w, &zero)),
                );
            }
            if ctx.beta.is_empty() {
                println!(
                    "\nno distinguished root pairs in this family; the four-part \
                     statement applies to the two-factor families"
                );
                return Ok(0);
            }
            match verify_phiw_proposition(&ctx) {
                Ok(rep) => {
                    println!(
                        "\nall four parts verified for {} group elements",
                        rep.group_order
                    );
                    Ok(0)
                }
                Err(e) => {
                    println!("\nproposition check failed: {e}");
                    Ok(1)
                }
            }
        }
        Command::Export { algebra } => {
            let spec = find_entry(cli, algebra)?;
            println!("{}", catfile::serialize_catalog(std::slice::from_ref(&spec)));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
