mod config;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use skewcode::classify::{canonicalize, enumerate_ideals, ideal_lattice, monic_right_divisors};
use skewcode::duality::{brute_dual, dual_ideal, is_self_dual_li1};
use skewcode::parse::parse_poly;
use skewcode::{CanonicalIdeal, ChainRing, CodeContext, InnerProductKind};

use config::{ContextArgs, Format, RunConfig};

#[derive(Parser, Debug)]
#[command(
    name = "skewcode",
    version,
    about = "Skew constacyclic codes over F_q + uF_q"
)]
struct Cli {
    #[command(flatten)]
    ctx: ContextArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe the ring, its automorphisms and the selected context.
    RingInfo,
    /// List monic right divisors of x^n - lambda.
    Divisors {
        /// Only divisors up to this degree.
        #[arg(long)]
        max_deg: Option<usize>,
        /// Restrict to coefficients in the residue field.
        #[arg(long)]
        residue: bool,
    },
    /// Enumerate all left ideals and their inclusion lattice.
    Ideals,
    /// Dual of the left ideal generated by --gen.
    Dual {
        #[command(flatten)]
        duality: DualityFlags,
        /// Generator polynomial; repeat for several.
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// List the ideals equal to their own dual.
    SelfdualSearch {
        #[command(flatten)]
        duality: DualityFlags,
    },
    /// Re-derive the pinned reference results and report each check.
    VerifyPaper,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct DualityFlags {
    #[arg(long)]
    euclidean: bool,
    #[arg(long)]
    hermitian: bool,
    /// Also compute the orthogonal complement exhaustively and compare.
    #[arg(long)]
    verify: bool,
}

impl DualityFlags {
    /// Euclidean unless only --hermitian was given.
    fn kinds(&self) -> Vec<InnerProductKind> {
        let mut out = Vec::new();
        if self.euclidean || !self.hermitian {
            out.push(InnerProductKind::Euclidean);
        }
        if self.hermitian {
            out.push(InnerProductKind::Hermitian);
        }
        out
    }
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn with_schema(mut v: Value, ctx: &CodeContext) -> Value {
    v["schema"] = json!(1);
    v["context"] = ctx.to_json();
    v
}

fn ring_info(cfg: &RunConfig) -> Result<bool> {
    let ctx = cfg.context()?;
    let ring = ctx.ring();
    let field = ctx.field();
    let autos: Vec<Value> = ring
        .enumerate_automorphisms()
        .iter()
        .map(|t| {
            json!({
                "theta_exp": t.s,
                "beta": field.format(t.beta),
                "order": ring.auto_order(t),
            })
        })
        .collect();
    let central = ctx.skew().is_central(ctx.modulus());
    match cfg.format {
        Format::Json => print_json(&with_schema(
            json!({
                "ring_size": ring.size(),
                "units": ring.unit_count(),
                "automorphisms": autos,
                "modulus_central": central,
            }),
            &ctx,
        )),
        _ => {
            println!("context: {ctx}");
            println!(
                "field modulus (constant term first): {:?}",
                field.params().modulus()
            );
            println!("|R| = {}, units = {}", ring.size(), ring.unit_count());
            println!("automorphisms:");
            for a in &autos {
                println!(
                    "  s={} beta={} order={}",
                    a["theta_exp"],
                    a["beta"].as_str().unwrap_or(""),
                    a["order"]
                );
            }
            println!(
                "x^{} - {} is central: {central}",
                ctx.n(),
                ring.format_elem(ctx.lambda())
            );
        }
    }
    Ok(true)
}

fn divisors(cfg: &RunConfig, max_deg: Option<usize>, residue: bool) -> Result<bool> {
    let ctx = cfg.context()?;
    let target = if residue {
        ctx.residue_modulus()
    } else {
        ctx.modulus().clone()
    };
    let found = monic_right_divisors(&ctx, &target, max_deg.unwrap_or(ctx.n()), residue)?;
    let printed: Vec<String> = found.iter().map(|g| ctx.skew().format(g)).collect();
    match cfg.format {
        Format::Json => print_json(&with_schema(
            json!({ "target": ctx.skew().format(&target), "divisors": printed }),
            &ctx,
        )),
        _ => {
            for line in &printed {
                println!("{line}");
            }
        }
    }
    Ok(true)
}

fn ideals(cfg: &RunConfig) -> Result<bool> {
    let ctx = cfg.context()?;
    let list = enumerate_ideals(&ctx)?;
    let lattice = ideal_lattice(&ctx, &list)?;
    match cfg.format {
        Format::Json => print_json(&lattice.to_json(&ctx)),
        Format::Dot => print!("{}", lattice.to_dot(&ctx)),
        Format::Text => {
            println!("{} left ideals in {ctx}", list.len());
            for (i, ideal) in list.iter().enumerate() {
                println!(
                    "{i:>3}  {}  {}  |C| = {}",
                    ideal.kind(),
                    ideal.label(&ctx),
                    ideal.cardinality(&ctx)
                );
            }
            println!("covers (larger -> smaller):");
            for (i, j) in &lattice.edges {
                println!("  {i} -> {j}");
            }
        }
    }
    Ok(true)
}

fn dual(cfg: &RunConfig, flags: DualityFlags, gens: &[String]) -> Result<bool> {
    let ctx = cfg.context()?;
    let polys = gens
        .iter()
        .map(|g| parse_poly(&ctx, g).map_err(|e| anyhow::anyhow!("--gen {g:?}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    let span = ctx.span(&polys)?;
    let ideal = canonicalize(&ctx, &span)?;
    let mut ok = true;
    let mut results = Vec::new();
    for kind in flags.kinds() {
        let d = dual_ideal(&ctx, &ideal, kind)?;
        let agrees = if flags.verify {
            let oracle = brute_dual(&ctx, &span, kind)?;
            let same = d.span(&ctx)? == oracle;
            ok &= same;
            Some(same)
        } else {
            None
        };
        results.push((kind, d, agrees));
    }
    match cfg.format {
        Format::Json => {
            let duals: Vec<Value> = results
                .iter()
                .map(|(kind, d, agrees)| {
                    let mut v = json!({ "kind": kind.to_string(), "dual": d.to_json(&ctx) });
                    if let Some(a) = agrees {
                        v["oracle_agrees"] = json!(a);
                    }
                    v
                })
                .collect();
            print_json(&with_schema(
                json!({ "ideal": ideal.to_json(&ctx), "duals": duals }),
                &ctx,
            ));
        }
        _ => {
            println!("C = {} ({})", ideal.label(&ctx), ideal.kind());
            for (kind, d, agrees) in &results {
                print!("{kind} dual: {} ({})", d.label(&ctx), d.kind());
                match agrees {
                    Some(a) => println!(", oracle agrees: {a}"),
                    None => println!(),
                }
            }
        }
    }
    Ok(ok)
}

fn selfdual_search(cfg: &RunConfig, flags: DualityFlags) -> Result<bool> {
    let ctx = cfg.context()?;
    let list = enumerate_ideals(&ctx)?;
    let mut ok = true;
    let mut found: Vec<Value> = Vec::new();
    for kind in flags.kinds() {
        for ideal in &list {
            if dual_ideal(&ctx, ideal, kind)? != *ideal {
                continue;
            }
            let mut entry = json!({ "kind": kind.to_string(), "ideal": ideal.to_json(&ctx) });
            if let CanonicalIdeal::Principal { g } = ideal {
                if 2 * g.deg_i64() == ctx.n() as i64 {
                    entry["product_criterion"] = json!(is_self_dual_li1(&ctx, g, kind)?);
                }
            }
            if flags.verify {
                let span = ideal.span(&ctx)?;
                let same = brute_dual(&ctx, &span, kind)? == span;
                ok &= same;
                entry["oracle_agrees"] = json!(same);
            }
            found.push(entry);
        }
    }
    match cfg.format {
        Format::Json => print_json(&with_schema(json!({ "self_dual": found }), &ctx)),
        _ => {
            if found.is_empty() {
                println!("no self-dual ideals in {ctx}");
            }
            for e in &found {
                let gens: Vec<&str> = e["ideal"]["generators"]
                    .as_array()
                    .map(|a| a.iter().filter_map(Value::as_str).collect())
                    .unwrap_or_default();
                print!(
                    "{}: <{}> ({})",
                    e["kind"].as_str().unwrap_or(""),
                    gens.join(", "),
                    e["ideal"]["type"].as_str().unwrap_or("")
                );
                if let Some(a) = e.get("oracle_agrees") {
                    print!(", oracle agrees: {a}");
                }
                println!();
            }
        }
    }
    Ok(ok)
}

fn verify_paper(cfg: &RunConfig) -> Result<bool> {
    let report = skewcode::reference::run(&cfg.modulus_table());
    match cfg.format {
        Format::Json => print_json(&serde_json::to_value(&report)?),
        _ => {
            for c in &report.checks {
                if c.passed {
                    println!("PASS {}", c.name);
                } else {
                    println!("FAIL {}: {}", c.name, c.detail);
                }
            }
        }
    }
    Ok(report.passed)
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = RunConfig::resolve(&cli.ctx)?;
    if cfg.format == Format::Dot && !matches!(cli.command, Command::Ideals) {
        bail!("--format dot is only available for `ideals`");
    }
    match &cli.command {
        Command::RingInfo => ring_info(&cfg),
        Command::Divisors { max_deg, residue } => divisors(&cfg, *max_deg, *residue),
        Command::Ideals => ideals(&cfg),
        Command::Dual { duality, gens } => dual(&cfg, *duality, gens),
        Command::SelfdualSearch { duality } => selfdual_search(&cfg, *duality),
        Command::VerifyPaper => verify_paper(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
