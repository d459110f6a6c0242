//! Command-line front end.
//!
//! Weights are read as JSON and taken to be ρ-shifted unless `--unshifted`
//! is given. Exit codes: 0 on success, 2 when the library rejects the input
//! on mathematical grounds, 1 when the input itself is malformed.

use crate::blocks::{block_chain, is_singular_at, list_blocks, BlockKeyMode};
use crate::characters::{integrable_quotient_character, irreducible_character, verma_character};
use crate::ds_functor::ds_invariant;
use crate::error::Error;
use crate::highest_weights::{classify, hw_set, SimpleModule};
use crate::quiver::{block_quiver, ext_dim, QuiverVariant};
use crate::rational::{format_q, q};
use crate::root_system::{norm, rho_of, SimpleRootSet, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;

/// Environment variable capping the character depth.
pub const MAX_DEPTH_VAR: &str = "SUPERBLOCKS_MAX_DEPTH";
pub const DEFAULT_MAX_DEPTH: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "superblocks", version, about = "Weight combinatorics of integrable sl(1|n)^(1)-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Typicality and regularity of L(λ).
    Classify(WeightArgs),
    /// ρ-shifted highest weights of L(λ) along the string of simple root sets.
    HwSet(WeightArgs),
    /// Block keys and block windows.
    Blocks {
        #[command(subcommand)]
        command: BlocksCommand,
    },
    /// Truncated formal character as CSV.
    Character {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Kind::Irreducible)]
        kind: Kind,
    },
    /// Duflo–Serganova invariant: marks of the sl(n−1)^(1) highest weight.
    Ds(WeightArgs),
    /// Ext quiver of a block window in DOT.
    Quiver {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long, value_enum, default_value_t = Variant::F)]
        variant: Variant,
        /// Also write the relations as JSON to this file.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum BlocksCommand {
    /// Keys of all atypical blocks at level k.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = KeyMode::Marks)]
        key_mode: KeyMode,
    },
    /// The window of members around the singular base, with adjacency edges.
    Chain(BlockArgs),
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: i64,
    /// Weight JSON: {"n", "eps", "delta", "lambda0"}.
    #[arg(long)]
    weight: String,
    /// Position of Σ in the string; 0 is the base set.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    chain_index: i64,
    /// The weight is λ rather than λ + ρ_Σ.
    #[arg(long)]
    unshifted: bool,
}

#[derive(Args, Debug)]
struct BlockArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: i64,
    /// A block key as printed by `blocks list`.
    #[arg(long)]
    key: String,
    #[arg(long, default_value_t = 3)]
    width: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Verma,
    Quotient,
    Irreducible,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Variant {
    #[value(name = "F")]
    F,
    #[value(name = "F1")]
    F1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KeyMode {
    #[value(name = "marks")]
    Marks,
    #[value(name = "marks+casimir")]
    MarksCasimir,
}

/// Output format of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

/// Settings shared by the subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub k: i64,
    pub depth: usize,
    pub width: usize,
    pub output: OutputFormat,
    pub block_key_mode: BlockKeyMode,
}

impl RunConfig {
    fn new(n: usize, k: i64, output: OutputFormat) -> Self {
        RunConfig { n, k, depth: 6, width: 3, output, block_key_mode: BlockKeyMode::Marks }
    }

    fn check(&self, needs_positive_level: bool) -> Result<(), CliError> {
        if self.n < 2 {
            return Err(Error::RankTooSmall(self.n).into());
        }
        if needs_positive_level && self.k < 1 {
            return Err(Error::NonPositiveLevel.into());
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Domain(#[from] Error),
    #[error("{0}")]
    Input(String),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `argv` (including the program name).
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(CliError::Domain(e)) => Outcome { code: 2, stdout: String::new(), stderr: format!("{e}\n") },
        Err(CliError::Input(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("{e}\n") },
    }
}

fn max_depth() -> Result<usize, CliError> {
    match std::env::var(MAX_DEPTH_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_DEPTH_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DEPTH),
    }
}

fn parse_weight(text: &str, n: usize) -> Result<Weight, CliError> {
    let w: Weight = serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad weight JSON: {e}")))?;
    if w.rank() != n {
        return Err(CliError::Input(format!("weight has n = {}, expected {n}", w.rank())));
    }
    Ok(w)
}

/// (Σ, ρ-shifted weight) from the weight flags, checking the level.
fn read_weight(a: &WeightArgs) -> Result<(SimpleRootSet, Weight), CliError> {
    RunConfig::new(a.n, a.k, OutputFormat::Json).check(false)?;
    let sigma = SimpleRootSet::at(a.n, a.chain_index)?;
    let mut w = parse_weight(&a.weight, a.n)?;
    if a.unshifted {
        w = &w + &rho_of(&sigma);
    }
    let expected = q(a.k + a.n as i64 - 1);
    if w.level() != &expected {
        return Err(Error::LevelMismatch(format_q(w.level()), format_q(&expected)).into());
    }
    Ok((sigma, w))
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn base_module(b: &BlockArgs) -> Result<(SimpleRootSet, SimpleModule), CliError> {
    let cfg = RunConfig { width: b.width, ..RunConfig::new(b.n, b.k, OutputFormat::Json) };
    cfg.check(true)?;
    let sigma = SimpleRootSet::at(b.n, 0)?;
    let key = parse_weight(&b.key, b.n)?;
    let expected = q(b.k + b.n as i64 - 1);
    if key.level() != &expected {
        return Err(Error::LevelMismatch(format_q(key.level()), format_q(&expected)).into());
    }
    Ok((sigma.clone(), SimpleModule::new(sigma, key)?))
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Classify(a) => {
            let (sigma, w) = read_weight(&a)?;
            let (t, r) = classify(&w, &sigma)?;
            Ok(to_json(&json!({ "typicality": t, "regularity": r })))
        }
        Command::HwSet(a) => {
            let (sigma, w) = read_weight(&a)?;
            let m = SimpleModule::new(sigma, w)?;
            let hw: Vec<_> = hw_set(&m)?
                .into_iter()
                .map(|(j, w)| json!({ "chain_index": j, "weight": w }))
                .collect();
            Ok(to_json(&json!({ "typicality": m.typicality, "regularity": m.regularity, "hw": hw })))
        }
        Command::Blocks { command: BlocksCommand::List { n, k, key_mode } } => {
            let mut cfg = RunConfig::new(n, k, OutputFormat::Json);
            cfg.block_key_mode = match key_mode {
                KeyMode::Marks => BlockKeyMode::Marks,
                KeyMode::MarksCasimir => BlockKeyMode::MarksAndCasimir,
            };
            cfg.check(true)?;
            let keys = list_blocks(n, k)?;
            Ok(match cfg.block_key_mode {
                BlockKeyMode::Marks => to_json(&keys),
                BlockKeyMode::MarksAndCasimir => {
                    let v: Vec<_> = keys
                        .iter()
                        .map(|w| json!({ "key": w, "casimir": format_q(&norm(w)) }))
                        .collect();
                    to_json(&v)
                }
            })
        }
        Command::Blocks { command: BlocksCommand::Chain(b) } => {
            let (sigma, base) = base_module(&b)?;
            let chain = block_chain(&base, &sigma, b.width)?;
            let mut members = Vec::new();
            let mut edges = Vec::new();
            for i in chain.indices() {
                let m = chain.get(i).expect("in window");
                members.push(json!({
                    "index": i,
                    "weight": m.at(0)?.rho_wt,
                    "singular_at_base": is_singular_at(m, &sigma)?,
                }));
                if let Some(next) = chain.get(i + 1) {
                    if ext_dim(m, next)? == 1 {
                        edges.push([i, i + 1]);
                    }
                }
            }
            Ok(to_json(&json!({ "members": members, "edges": edges })))
        }
        Command::Character { weight, depth, kind } => {
            let cfg = RunConfig { depth, ..RunConfig::new(weight.n, weight.k, OutputFormat::Csv) };
            cfg.check(kind != Kind::Verma)?;
            let cap = max_depth()?;
            if cfg.depth > cap {
                return Err(Error::DepthTooLarge(cfg.depth, cap).into());
            }
            let (sigma, w) = read_weight(&weight)?;
            let ch = match kind {
                Kind::Verma => verma_character(&w, &sigma, depth)?,
                Kind::Quotient => integrable_quotient_character(&w, &sigma, depth)?,
                Kind::Irreducible => irreducible_character(&SimpleModule::new(sigma, w)?, depth)?,
            };
            Ok(ch.to_csv())
        }
        Command::Ds(a) => {
            if a.n < 3 {
                return Err(Error::DsRankTooSmall.into());
            }
            let (sigma, w) = read_weight(&a)?;
            let m = SimpleModule::new(sigma, w)?;
            if m.is_typical() {
                return Ok("0\n".to_string());
            }
            let marks = ds_invariant(&m)?;
            let v: Vec<String> = marks.values.iter().map(format_q).collect();
            Ok(to_json(&v))
        }
        Command::Quiver { block, variant, sidecar } => {
            let (sigma, base) = base_module(&block)?;
            let chain = block_chain(&base, &sigma, block.width)?;
            let v = match variant {
                Variant::F => QuiverVariant::F,
                Variant::F1 => QuiverVariant::F1,
            };
            let g = block_quiver(&chain, v)?;
            if let Some(path) = sidecar {
                let text = serde_json::to_string_pretty(&g.relations_json()).expect("serializable");
                std::fs::write(&path, text + "\n")
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(g.to_dot())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_command(std::iter::once("superblocks").chain(args.iter().copied()))
    }

    const VACUUM: &str = r#"{"n":3,"eps":["1/2","-1/2","-3/2"],"delta":"0","lambda0":"3"}"#;

    #[test]
    fn vacuum_json_is_b_210() {
        let w: Weight = serde_json::from_str(VACUUM).unwrap();
        assert_eq!(w.eps_pairings(), vec![q(2), q(1), q(0)]);
    }

    #[test]
    fn classify_vacuum() {
        let o = run(&["classify", "--n", "3", "--k", "1", "--weight", VACUUM]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "{\"regularity\":\"singular\",\"typicality\":\"atypical\"}\n");
    }

    #[test]
    fn blocks_list_counts() {
        let o = run(&["blocks", "list", "--n", "3", "--k", "1"]);
        assert_eq!(o.code, 0);
        let v: Vec<Weight> = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn ds_rank_two() {
        let w = r#"{"n":2,"eps":["1","-1"],"delta":"0","lambda0":"2"}"#;
        let o = run(&["ds", "--n", "2", "--k", "1", "--weight", w]);
        assert_eq!(o.code, 2);
        assert_eq!(o.stderr.trim(), "DS target degenerates below rank 2");
    }

    #[test]
    fn malformed_input_exits_one() {
        assert_eq!(run(&["frobnicate"]).code, 1);
        assert_eq!(run(&["classify", "--n", "3", "--k", "1", "--weight", "{"]).code, 1);
        assert_eq!(run(&["classify", "--n", "3"]).code, 1);
    }

    #[test]
    fn level_mismatch_is_domain_error() {
        let o = run(&["classify", "--n", "3", "--k", "2", "--weight", VACUUM]);
        assert_eq!(o.code, 2);
    }
}
