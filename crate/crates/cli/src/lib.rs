// SPDX-License-Identifier: Apache-2.0

//! The `bfc` command line.
//!
//! [`run`] parses arguments, dispatches a subcommand and returns the exit
//! code: 0 on success, 1 when a verification finds a failure (the failing
//! case is printed), 2 on usage or input errors.

mod args;
pub mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::Parser;
use thiserror::Error;

use bfc_core::census::{
    equality_census, equality_lists, standard_checks, verify_exhaustive_with, verify_sampled_with,
    ProfileOptions,
};
use bfc_core::constructions::{
    counterexample_n15, example_n4, random_function, random_low_f2_degree, subcube, SubcubeSpec,
};
use bfc_core::format::{parse_function, to_bft};
use bfc_core::measures::{measure_report, InequalityKind, Measure, MeasureCaps};
use bfc_core::vc::{extract_shattered_from_design, null_design_check, DesignCondition};
use bfc_core::{anf, vc_dimension, wht, BooleanFunction, MAX_DIMENSION};

use args::{Cli, Command, ConditionArg, ConstructCmd, GlobalArgs, ModeArg};
use report::{AnfReport, CensusReport, Coefficient, ExtractReport, SpectrumReport, VcReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest accepted input dimension.
    pub max_n: usize,
    /// `None` uses the command's default.
    pub certificate_cap: Option<usize>,
    pub decision_tree_cap: Option<usize>,
    /// `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
    pub output: OutputMode,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_n: MAX_DIMENSION,
            certificate_cap: None,
            decision_tree_cap: None,
            threads: None,
            output: OutputMode::Text,
            seed: 0,
        }
    }
}

impl From<&GlobalArgs> for Config {
    fn from(g: &GlobalArgs) -> Self {
        Self {
            max_n: g.max_n as usize,
            certificate_cap: g.certificate_cap.map(|c| c as usize),
            decision_tree_cap: g.decision_tree_cap.map(|c| c as usize),
            threads: g.threads.map(|t| t as usize),
            output: if g.json {
                OutputMode::Json
            } else {
                OutputMode::Text
            },
            seed: g.seed,
        }
    }
}

impl Config {
    fn measure_caps(&self) -> MeasureCaps {
        let d = MeasureCaps::default();
        MeasureCaps {
            certificate: self.certificate_cap.unwrap_or(d.certificate),
            decision_tree: self.decision_tree_cap.unwrap_or(d.decision_tree),
        }
    }

    fn profile_options(&self, base: ProfileOptions) -> ProfileOptions {
        ProfileOptions {
            certificate_cap: self.certificate_cap.unwrap_or(base.certificate_cap),
            decision_tree_cap: self.decision_tree_cap.unwrap_or(base.decision_tree_cap),
            ..base
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{origin}: {err}")]
    Input {
        origin: String,
        err: bfc_core::Error,
    },
    #[error("{0}: {1}")]
    Io(String, io::Error),
    #[error(transparent)]
    Core(#[from] bfc_core::Error),
}

type CliResult<T> = Result<T, CliError>;

/// Text of the command's input, read before any worker thread starts.
struct Input {
    origin: String,
    text: String,
}

#[derive(Default)]
struct Output {
    text: String,
}

impl Output {
    fn emit(&mut self, text: &str) -> CliResult<()> {
        self.text.push_str(text);
        Ok(())
    }

    fn json<T: serde::Serialize>(&mut self, value: &T) -> CliResult<()> {
        let s = serde_json::to_string_pretty(value).expect("reports serialize");
        self.text.push_str(&s);
        self.text.push('\n');
        Ok(())
    }
}

/// Runs `bfc` with `argv` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let config = Config::from(&cli.global);
    let result = read_input(&cli.command, stdin).and_then(|input| {
        let mut output = Output::default();
        let code = match config.threads {
            Some(threads) => rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))?
                .install(|| dispatch(&cli.command, &config, input.as_ref(), &mut output)),
            None => dispatch(&cli.command, &config, input.as_ref(), &mut output),
        };
        // Partial output is still shown when a command fails midway.
        out.write_all(output.text.as_bytes())
            .and_then(|()| out.flush())
            .map_err(|e| CliError::Io("stdout".into(), e))?;
        code
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_input(cmd: &Command, stdin: &mut dyn Read) -> CliResult<Option<Input>> {
    let arg = match cmd {
        Command::Spectrum { input, .. }
        | Command::Anf { input, .. }
        | Command::Vc { input, .. }
        | Command::DesignCheck { input, .. }
        | Command::ExtractShattered { input, .. }
        | Command::Measures { input, .. } => input,
        Command::Construct(_) | Command::Census { .. } | Command::Verify { .. } => return Ok(None),
    };
    let input = match arg.input.as_deref() {
        Some(p) if p != Path::new("-") => {
            let origin = p.display().to_string();
            let text = fs::read_to_string(p).map_err(|e| CliError::Io(origin.clone(), e))?;
            Input { origin, text }
        }
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io("stdin".into(), e))?;
            Input {
                origin: "stdin".into(),
                text,
            }
        }
    };
    Ok(Some(input))
}

fn load(input: Option<&Input>, config: &Config) -> CliResult<BooleanFunction> {
    let input = input.expect("input read for this command");
    let f = parse_function(&input.text).map_err(|err| CliError::Input {
        origin: input.origin.clone(),
        err,
    })?;
    if f.n() > config.max_n {
        return Err(CliError::Usage(format!(
            "{}: n = {} exceeds --max-n {}",
            input.origin,
            f.n(),
            config.max_n
        )));
    }
    Ok(f)
}

fn dispatch(
    cmd: &Command,
    config: &Config,
    input: Option<&Input>,
    io: &mut Output,
) -> CliResult<i32> {
    let json = config.output == OutputMode::Json;
    match cmd {
        Command::Spectrum { nonzero, .. } => {
            let f = load(input, config)?;
            let spec = wht(&f);
            let report = SpectrumReport {
                n: f.n(),
                scale: spec.scale(),
                coefficients: spec
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !nonzero || c != 0)
                    .map(|(mask, &coeff)| Coefficient {
                        mask: mask as u32,
                        coeff,
                    })
                    .collect(),
            };
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report.to_text())?;
            }
        }
        Command::Anf { degree_only, .. } => {
            let f = load(input, config)?;
            let p = anf(&f);
            let report = AnfReport {
                n: f.n(),
                degree: p.degree().ok(),
                monomials: p.monomials(),
            };
            if *degree_only {
                let degree = p.degree()?;
                if json {
                    io.json(&serde_json::json!({ "n": f.n(), "degree": degree }))?;
                } else {
                    io.emit(&format!("{degree}\n"))?;
                }
            } else if json {
                io.json(&report)?;
            } else {
                io.emit(&report.to_text())?;
            }
        }
        Command::Vc { witness, .. } => {
            let f = load(input, config)?;
            let (vc, w) = vc_dimension(&f.support())?;
            let report = VcReport {
                n: f.n(),
                vc,
                witness: witness.then_some(w),
            };
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report.to_text())?;
            }
        }
        Command::DesignCheck { d, condition, .. } => {
            let f = load(input, config)?;
            let condition = match condition {
                ConditionArg::I => DesignCondition::Containment,
                ConditionArg::Ii => DesignCondition::Trace,
                ConditionArg::Disjoint => DesignCondition::Disjoint,
            };
            let report = null_design_check(&f.support(), *d, condition);
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report::design_text(&report))?;
            }
            if !report.holds() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::ExtractShattered { d, .. } => {
            let f = load(input, config)?;
            let witness = match extract_shattered_from_design(&f, *d) {
                Ok(w) => w,
                Err(e @ bfc_core::Error::WitnessNotFound(_)) => {
                    io.emit(&format!("extraction failed: {e}\n"))?;
                    return Ok(EXIT_FAILURE);
                }
                Err(e) => return Err(e.into()),
            };
            let report = ExtractReport {
                n: f.n(),
                d: *d,
                witness,
            };
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report.to_text())?;
            }
        }
        Command::Measures { set, .. } => {
            let f = load(input, config)?;
            let selection = set
                .iter()
                .map(|s| s.parse::<Measure>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let report = measure_report(&f, &selection, config.measure_caps())?;
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report::measures_text(&report))?;
            }
            let theorem_failed = report
                .inequalities
                .iter()
                .any(|i| i.kind == InequalityKind::Theorem && !i.holds);
            if theorem_failed {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Construct(c) => {
            let f = construct(c, config)?;
            let text = to_bft(&f);
            match &c.output().output {
                Some(path) => write_file(path, &text)?,
                None => io.emit(&text)?,
            }
        }
        Command::Census { n, list } => {
            let row = equality_census(*n)?;
            let lists = if *list {
                Some(equality_lists(*n)?)
            } else {
                None
            };
            let report = CensusReport::new(row, lists);
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report.to_text())?;
            }
        }
        Command::Verify { n, mode, trials } => {
            let checks = standard_checks();
            let report = match mode {
                ModeArg::Exhaustive => {
                    let opts = config.profile_options(ProfileOptions::exhaustive());
                    verify_exhaustive_with(*n, &checks, &opts)?
                }
                ModeArg::Sampled => {
                    if *n > config.max_n {
                        return Err(CliError::Usage(format!(
                            "n = {n} exceeds --max-n {}",
                            config.max_n
                        )));
                    }
                    let opts = config.profile_options(ProfileOptions::sampled());
                    verify_sampled_with(*n, *trials, config.seed, &checks, &opts)?
                }
            };
            if json {
                io.json(&report)?;
            } else {
                io.emit(&report::suite_text(&report))?;
            }
            if !report.all_passed() {
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn construct(c: &ConstructCmd, config: &Config) -> CliResult<BooleanFunction> {
    let f = match c {
        ConstructCmd::Subcube { n, fix, .. } => subcube(&SubcubeSpec::parse(*n, fix)?)?,
        ConstructCmd::ExampleN4 { .. } => example_n4(),
        ConstructCmd::Counterexample15 { .. } => counterexample_n15(),
        ConstructCmd::Random { n, p, .. } => random_function(*n, *p, config.seed)?,
        ConstructCmd::RandomLowDegree { n, d, .. } => random_low_f2_degree(*n, *d, config.seed)?,
    };
    if f.n() > config.max_n {
        return Err(CliError::Usage(format!(
            "n = {} exceeds --max-n {}",
            f.n(),
            config.max_n
        )));
    }
    Ok(f)
}

fn write_file(path: &PathBuf, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}
