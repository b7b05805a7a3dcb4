// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bfc_core::MAX_DIMENSION;

#[derive(Debug, Parser)]
#[command(
    name = "bfc",
    version,
    about = "Complexity measures of Boolean functions"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Worker threads [env: BFC_THREADS]
    #[arg(long, global = true, env = "BFC_THREADS", hide_env = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest n accepted for transform-based commands.
    #[arg(long, global = true, default_value_t = MAX_DIMENSION as u64,
          value_parser = clap::value_parser!(u64).range(1..=MAX_DIMENSION as u64))]
    pub max_n: u64,
    /// Largest n for which certificate complexity is computed
    /// [default: 10, or 8 for sampled verification].
    #[arg(long, global = true,
          value_parser = clap::value_parser!(u64).range(1..=MAX_DIMENSION as u64))]
    pub certificate_cap: Option<u64>,
    /// Largest n for which decision-tree depth is computed
    /// [default: 12, or 8 for sampled verification].
    #[arg(long, global = true,
          value_parser = clap::value_parser!(u64).range(1..=MAX_DIMENSION as u64))]
    pub decision_tree_cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Truth table (`.bft`) or support list; `-` or absent reads stdin.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Walsh-Hadamard coefficients at scale 2^n.
    Spectrum {
        #[command(flatten)]
        input: InputArg,
        /// Only print non-zero coefficients.
        #[arg(long)]
        nonzero: bool,
    },
    /// Algebraic normal form over GF(2).
    Anf {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        degree_only: bool,
    },
    /// VC-dimension of the support.
    Vc {
        #[command(flatten)]
        input: InputArg,
        /// Also print a shattered set and its realizers.
        #[arg(long)]
        witness: bool,
    },
    /// Whether the support is a null d-design over GF(2).
    DesignCheck {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = ConditionArg::I)]
        condition: ConditionArg,
    },
    /// A shattered (d+1)-set of a null d-design support.
    ExtractShattered {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        d: usize,
    },
    /// Query and degree measures with the inequalities relating them.
    Measures {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated subset of vc,deg,degf2,s,c,d.
        #[arg(long, value_delimiter = ',', default_value = "vc,deg,degf2,s,c,d")]
        set: Vec<String>,
    },
    /// Write a named function as `.bft`.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Count functions meeting each degree bound with equality.
    Census {
        #[arg(long)]
        n: usize,
        /// Also list the truth tables of both equality classes.
        #[arg(long)]
        list: bool,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Functions per family in sampled mode.
        #[arg(long, default_value_t = 500)]
        trials: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructCmd {
    Subcube {
        #[arg(long)]
        n: usize,
        /// Fixed coordinates as `j=v,...`; empty for the whole cube.
        #[arg(long, default_value = "")]
        fix: String,
        #[command(flatten)]
        output: OutputArg,
    },
    #[command(name = "example-n4")]
    ExampleN4 {
        #[command(flatten)]
        output: OutputArg,
    },
    #[command(name = "counterexample15")]
    Counterexample15 {
        #[command(flatten)]
        output: OutputArg,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Random function with F2-degree at most `d`.
    RandomLowDegree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        output: OutputArg,
    },
}

impl ConstructCmd {
    pub fn output(&self) -> &OutputArg {
        match self {
            ConstructCmd::Subcube { output, .. }
            | ConstructCmd::ExampleN4 { output }
            | ConstructCmd::Counterexample15 { output }
            | ConstructCmd::Random { output, .. }
            | ConstructCmd::RandomLowDegree { output, .. } => output,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConditionArg {
    /// Containment counts.
    I,
    /// Trace counts.
    Ii,
    /// Empty-intersection counts.
    Disjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}
