use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use preproj::cache::{read_cache, to_cache, write_cache};
use preproj::config::{FieldSpec, InstanceConfig, Resolved};
use preproj::dot::{sttilt_dot, weak_order_dot};
use preproj::inspect::{inspect_json, inspect_text};
use preproj::instance::{Instance, InstanceDescriptor};
use preproj::verify::{run_suite, Sample, Suite};
use preproj_core::algebra::build_from_presentation;
use preproj_core::cartan::{classify, CartanTag};
use preproj_core::field::{Field, FieldDescriptor, PrimeField, Rationals};
use preproj_core::quiver::{quiver_presentation, PresentationMode};
use preproj_core::tilting::sttilt_lattice;
use serde_json::json;

/// Generalized preprojective algebras of Dynkin type: construction, Weyl
/// group ideals, support tau-tilting lattices and verification suites.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
#[derive(Debug, Parser)]
#[command(name = "preproj", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Instance configuration (JSON).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Algebra cache; overrides the config's `cache` entry.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Where to write the JSON report or lattice description.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Where to write a Graphviz diagram.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// `rational` or `p:PRIME`; overrides the config's field.
    #[arg(long, global = true, value_name = "FIELD")]
    field: Option<String>,
    /// Degree bound for the rewriting completion.
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<usize>,
    /// Check a seeded random subset of K group elements.
    #[arg(long, global = true, value_name = "SEED:K")]
    sample: Option<Sample>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print classification, valued graph and quiver presentation.
    Inspect {
        #[arg(long)]
        json: bool,
    },
    /// Construct the algebra and write the cache.
    Build,
    /// Weyl group summary; `--hasse` writes the weak-order Hasse quiver.
    Weyl {
        #[arg(long, value_name = "PATH")]
        hasse: Option<PathBuf>,
    },
    /// Support tau-tilting lattice as JSON (stdout or `--report`) and DOT (`--dot`).
    Sttilt,
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    TheoremA,
    TheoremB,
    Homological,
    Annihilators,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::TheoremA => Suite::TheoremA,
            SuiteArg::TheoremB => Suite::TheoremB,
            SuiteArg::Homological => Suite::Homological,
            SuiteArg::Annihilators => Suite::Annihilators,
            SuiteArg::All => Suite::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("configuring worker threads")?;
    }
    let path = cli.global.config.clone().context("--config PATH is required")?;
    let config = InstanceConfig::load(&path)?;
    let mut resolved = config.resolve()?;
    if let Some(flag) = &cli.global.field {
        resolved.field = FieldSpec::from_flag(flag)?.descriptor()?;
    }
    if cli.global.max_degree.is_some() {
        resolved.max_degree = cli.global.max_degree;
    }
    if let Some(note) = &resolved.note {
        eprintln!("note: {note}");
    }
    if let Command::Inspect { json } = cli.command {
        if json {
            println!("{}", serde_json::to_string_pretty(&inspect_json(&resolved.cartan))?);
        } else {
            print!("{}", inspect_text(&resolved.cartan));
        }
        return Ok(ExitCode::SUCCESS);
    }
    match resolved.field {
        FieldDescriptor::Rational => dispatch(Rationals, &cli, &resolved),
        FieldDescriptor::Prime(p) => {
            dispatch(PrimeField::new(p).context("field modulus is not prime")?, &cli, &resolved)
        }
    }
}

fn dispatch<K: Field>(k: K, cli: &Cli, resolved: &Resolved) -> Result<ExitCode> {
    let cache = cli.global.cache.clone().or_else(|| resolved.cache.clone());
    if classify(&resolved.cartan).tag != CartanTag::Dynkin {
        bail!("input is not of Dynkin type; the algebra would be infinite-dimensional and is not constructed");
    }
    let inst = load_instance(&k, resolved, cache.as_deref(), matches!(cli.command, Command::Build))?;
    match &cli.command {
        Command::Inspect { .. } => unreachable!("handled before field dispatch"),
        Command::Build => {
            let path = cache.context("build needs --cache PATH or a `cache` entry in the config")?;
            write_cache(&path, &to_cache(&inst.descriptor, &inst.alg))?;
            println!("dim {} written to {} (instance {})", inst.alg.dim(), path.display(), inst.descriptor.hash());
        }
        Command::Weyl { hasse } => {
            let weyl = &inst.weyl;
            println!("order {}", weyl.len());
            println!(
                "longest element {} (length {})",
                weyl.label(weyl.longest_element()),
                weyl.length(weyl.longest_element())
            );
            println!("positive roots {}", weyl.positive_root_count());
            println!("hasse edges {}", weyl.weak_order().hasse.len());
            if let Some(p) = hasse.as_ref().or(cli.global.dot.as_ref()) {
                write_file(p, &weak_order_dot(weyl))?;
            }
        }
        Command::Sttilt => {
            let lattice = match sttilt_lattice(&inst.family, &inst.weyl) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("verification failure: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            let labels: Vec<String> = lattice.nodes.iter().map(|n| n.label.clone()).collect();
            let nodes: Vec<_> = lattice
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "w": inst.weyl.label(n.w),
                        "label": n.label,
                        "summand_dims": n.summands.iter().map(|s| s.as_ref().map(|m| m.dims().to_vec())).collect::<Vec<_>>(),
                        "projective_part": n.support.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let edges: Vec<_> = lattice
                .edges
                .iter()
                .map(|&(a, b, i)| json!({ "from": labels[a], "to": labels[b], "mutation": format!("I{}", i + 1) }))
                .collect();
            let doc = json!({ "instance": inst.descriptor, "instance_hash": inst.descriptor.hash(), "nodes": nodes, "edges": edges });
            let text = serde_json::to_string_pretty(&doc)?;
            match &cli.global.report {
                Some(p) => write_file(p, &text)?,
                None => println!("{text}"),
            }
            if let Some(p) = &cli.global.dot {
                write_file(p, &sttilt_dot(&inst.weyl, &labels))?;
            }
        }
        Command::Verify { suite } => {
            let report = run_suite(&inst, (*suite).into(), cli.global.sample);
            print!("{}", report.summary_table());
            if let Some(p) = &cli.global.report {
                write_file(p, &report.to_json())?;
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Reads the cache when present (any integrity problem is an input error),
/// otherwise constructs the algebra.
fn load_instance<K: Field>(k: &K, resolved: &Resolved, cache: Option<&Path>, rebuild: bool) -> Result<Instance<K>> {
    let cd = &resolved.cartan;
    let presentation = quiver_presentation(cd, PresentationMode::Pi);
    let alg = match cache {
        Some(path) if path.exists() && !rebuild => {
            let expected = InstanceDescriptor::new(resolved.name.clone(), cd, k.descriptor());
            read_cache(path, k, &expected, &presentation)?
        }
        _ => build_from_presentation(k, cd, &presentation, resolved.max_degree)?,
    };
    Ok(Instance::from_algebra(resolved.name.clone(), cd, presentation, alg)?)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
