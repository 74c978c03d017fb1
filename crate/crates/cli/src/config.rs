//! Resolution of command-line flags and an optional TOML file into a
//! validated code context.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::Deserialize;
use skewcode::parse::{parse_element, parse_field_element};
use skewcode::{CodeContext, DualNumberRing, GaloisField, ModulusTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Context flags shared by every subcommand. Unset flags fall back to the
/// config file, then to `p=3, m=1, s=0, beta=-1, n=2, lambda=1`.
#[derive(Args, Debug, Clone, Default)]
pub struct ContextArgs {
    /// Characteristic of the residue field.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Extension degree of the residue field.
    #[arg(long, global = true)]
    pub m: Option<u32>,
    /// Field modulus, coefficients from the constant term up, e.g. "1,0,1".
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Frobenius exponent s of the automorphism.
    #[arg(long = "theta-exp", global = true)]
    pub theta_exp: Option<u32>,
    /// Image factor beta in Theta(u) = beta u (a nonzero field element).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Code length.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// The constant lambda in x^n - lambda.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Largest |R|^n any exhaustive search may touch.
    #[arg(long = "max-bruteforce", global = true)]
    pub max_bruteforce: Option<u128>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML file with [field], [automorphism] and [code] tables.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(default)]
    field: FieldSection,
    #[serde(default)]
    automorphism: AutoSection,
    #[serde(default)]
    code: CodeSection,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    p: Option<u32>,
    m: Option<u32>,
    modulus: Option<Vec<u32>>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct AutoSection {
    theta_exp: Option<u32>,
    beta: Option<String>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct CodeSection {
    n: Option<usize>,
    lambda: Option<String>,
    max_bruteforce: Option<u128>,
}

/// Flags merged with the config file.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: u32,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
    pub theta_exp: u32,
    pub beta: String,
    pub n: usize,
    pub lambda: String,
    pub max_bruteforce: u128,
    pub format: Format,
}

fn parse_modulus(s: &str) -> Result<Vec<u32>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .with_context(|| format!("bad modulus coefficient {c:?}"))
        })
        .collect()
}

fn load_file(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("invalid config {}", path.display()))
}

impl RunConfig {
    pub fn resolve(args: &ContextArgs) -> Result<Self> {
        let file = match &args.config {
            Some(path) => load_file(path)?,
            None => FileConfig::default(),
        };
        let modulus = match &args.modulus {
            Some(s) => Some(parse_modulus(s)?),
            None => file.field.modulus,
        };
        let format = match (args.json, args.format) {
            (true, Some(f)) if f != Format::Json => bail!("--json conflicts with --format"),
            (true, _) => Format::Json,
            (false, f) => f.unwrap_or(Format::Text),
        };
        Ok(Self {
            p: args.p.or(file.field.p).unwrap_or(3),
            m: args.m.or(file.field.m).unwrap_or(1),
            modulus,
            theta_exp: args.theta_exp.or(file.automorphism.theta_exp).unwrap_or(0),
            beta: args
                .beta
                .clone()
                .or(file.automorphism.beta)
                .unwrap_or_else(|| "-1".into()),
            n: args.n.or(file.code.n).unwrap_or(2),
            lambda: args
                .lambda
                .clone()
                .or(file.code.lambda)
                .unwrap_or_else(|| "1".into()),
            max_bruteforce: args
                .max_bruteforce
                .or(file.code.max_bruteforce)
                .unwrap_or(skewcode::quotcode::DEFAULT_BRUTEFORCE_CAP),
            format,
        })
    }

    /// The built-in modulus table with this run's override applied.
    pub fn modulus_table(&self) -> ModulusTable {
        let mut table = ModulusTable::default();
        if let Some(md) = &self.modulus {
            table.set(self.p, self.m, md.clone());
        }
        table
    }

    pub fn context(&self) -> Result<CodeContext> {
        let params = self.modulus_table().params(self.p, self.m)?;
        let ring = DualNumberRing::new(GaloisField::new(params));
        // constants parse the same under any automorphism
        let scratch = CodeContext::new(
            ring.clone(),
            ring.automorphism(0, ring.field().one())?,
            1,
            ring.from_int(1),
        )?;
        let beta = parse_field_element(&scratch, &self.beta).context("--beta")?;
        let lambda = parse_element(&scratch, &self.lambda).context("--lambda")?;
        let theta = ring.automorphism(self.theta_exp, beta)?;
        let ctx = CodeContext::new(ring, theta, self.n, lambda)?;
        Ok(ctx.with_bruteforce_cap(self.max_bruteforce))
    }
}
