// SPDX-License-Identifier: Apache-2.0

//! Exhaustive and sampled verification over many functions.
//!
//! Work is split into contiguous index ranges that run on the current
//! rayon pool; partial results merge by addition (and by smallest index
//! for the first failure), so every report is independent of the thread
//! count.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebraic::anf;
use crate::constructions::{random_function, random_low_f2_degree};
use crate::error::{Error, Result};
use crate::format::to_hex;
use crate::function::BooleanFunction;
use crate::measures::{certificate_complexity, decision_tree_depth, sensitivity};
use crate::spectral::wht;
use crate::vc::{
    binomial, null_design_check_containment, null_design_check_disjoint, null_design_check_trace,
    vc_dimension,
};

/// Largest `n` for exhaustive runs: `2^(2^5)` functions is out of reach.
pub const EXHAUSTIVE_MAX_N: usize = 4;

fn check_exhaustive_n(n: usize) -> Result<()> {
    if (1..=EXHAUSTIVE_MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionCap {
            n,
            cap: EXHAUSTIVE_MAX_N,
        })
    }
}

fn split(range: Range<u64>) -> Vec<Range<u64>> {
    let pieces = (rayon::current_num_threads() * 8) as u64;
    let len = range.end - range.start;
    let step = len.div_ceil(pieces).max(1);
    (range.start..range.end)
        .step_by(step as usize)
        .map(|s| s..(s + step).min(range.end))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub total_functions: u64,
    /// Non-zero `f` with `deg(f) + VC(f) = n`.
    pub deg_equality_count: u64,
    /// Non-zero `f` with `deg_F2(f) + VC(f) = n`.
    pub f2_equality_count: u64,
}

/// Truth tables (bit `i` = `f(i)`) of the equality cases.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityLists {
    pub deg: Vec<u64>,
    pub f2: Vec<u64>,
}

fn equality_flags(n: usize, table: u64) -> Result<(bool, bool)> {
    let f = BooleanFunction::from_u64(n, table)?;
    let (vc, _) = vc_dimension(&f.support())?;
    let deg = wht(&f).degree()?;
    let deg_f2 = anf(&f).degree()?;
    Ok((vc + deg == n, vc + deg_f2 == n))
}

fn all_tables(n: usize) -> Range<u64> {
    1..1u64 << (1 << n)
}

/// Counts the equality cases of both degree bounds over all `2^(2^n)`
/// functions, `1 <= n <= 4`. The zero function is excluded.
pub fn equality_census(n: usize) -> Result<CensusRow> {
    check_exhaustive_n(n)?;
    let (deg, f2) = split(all_tables(n))
        .into_par_iter()
        .map(|r| {
            r.map(|t| equality_flags(n, t))
                .try_fold((0u64, 0u64), |acc, flags| {
                    let (d, e) = flags?;
                    Ok::<_, Error>((acc.0 + u64::from(d), acc.1 + u64::from(e)))
                })
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(CensusRow {
        n,
        total_functions: 1 << (1 << n),
        deg_equality_count: deg,
        f2_equality_count: f2,
    })
}

/// The functions counted by [`equality_census`], in increasing table order.
pub fn equality_lists(n: usize) -> Result<EqualityLists> {
    check_exhaustive_n(n)?;
    split(all_tables(n))
        .into_par_iter()
        .map(|r| {
            let mut lists = EqualityLists::default();
            for t in r {
                let (d, e) = equality_flags(n, t)?;
                if d {
                    lists.deg.push(t);
                }
                if e {
                    lists.f2.push(t);
                }
            }
            Ok(lists)
        })
        .collect::<Result<Vec<_>>>()
        .map(|parts| {
            parts
                .into_iter()
                .fold(EqualityLists::default(), |mut acc, p| {
                    acc.deg.extend(p.deg);
                    acc.f2.extend(p.f2);
                    acc
                })
        })
}

/// Per-measure limits for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileOptions {
    pub certificate_cap: usize,
    pub decision_tree_cap: usize,
    /// Largest `n` at which the three design conditions are compared.
    pub design_cap: usize,
}

impl ProfileOptions {
    pub fn exhaustive() -> Self {
        Self {
            certificate_cap: crate::measures::DEFAULT_CERTIFICATE_CAP,
            decision_tree_cap: crate::measures::DEFAULT_DECISION_TREE_CAP,
            design_cap: crate::MAX_DIMENSION,
        }
    }

    /// Tighter caps: a sampled run evaluates `2 * trials` functions.
    pub fn sampled() -> Self {
        Self {
            certificate_cap: 8,
            decision_tree_cap: 8,
            design_cap: 8,
        }
    }
}

/// Every quantity the standard checks read, for one non-zero function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionProfile {
    pub n: usize,
    pub support_size: u64,
    pub vc: usize,
    pub deg: usize,
    pub deg_f2: usize,
    pub spectral_support_size: u64,
    pub sensitivity: usize,
    pub certificate: Option<usize>,
    pub decision_tree: Option<usize>,
    /// Whether the three design conditions agree for every `d <= n - 1`.
    pub design_equivalence: Option<bool>,
}

fn design_conditions_agree(f: &BooleanFunction) -> bool {
    let family = f.support();
    (0..f.n()).all(|d| {
        let i = null_design_check_containment(&family, d).holds();
        let ii = null_design_check_trace(&family, d).holds();
        let disjoint = null_design_check_disjoint(&family, d).holds();
        i == ii && ii == disjoint
    })
}

pub fn profile(f: &BooleanFunction, opts: &ProfileOptions) -> Result<FunctionProfile> {
    f.require_nonzero()?;
    let n = f.n();
    let spectrum = wht(f);
    let (vc, _) = vc_dimension(&f.support())?;
    Ok(FunctionProfile {
        n,
        support_size: f.weight(),
        vc,
        deg: spectrum.degree()?,
        deg_f2: anf(f).degree()?,
        spectral_support_size: spectrum.support_size(),
        sensitivity: sensitivity(f),
        certificate: certificate_complexity(f, opts.certificate_cap).ok(),
        decision_tree: decision_tree_depth(f, opts.decision_tree_cap).ok(),
        design_equivalence: (n <= opts.design_cap).then(|| design_conditions_agree(f)),
    })
}

/// A named predicate over a profile; `None` means not evaluated.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub eval: fn(&FunctionProfile) -> Option<bool>,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Check").field(&self.name).finish()
    }
}

/// The inequalities checked by [`verify_exhaustive`] and
/// [`verify_sampled`].
pub fn standard_checks() -> Vec<Check> {
    vec![
        Check {
            name: "vc+deg>=n",
            eval: |p| Some(p.vc + p.deg >= p.n),
        },
        Check {
            name: "vc+degf2>=n",
            eval: |p| Some(p.vc + p.deg_f2 >= p.n),
        },
        Check {
            name: "uncertainty",
            eval: |p| {
                Some(u128::from(p.support_size) * u128::from(p.spectral_support_size) >= 1 << p.n)
            },
        },
        Check {
            name: "sauer-shelah",
            eval: |p| Some(p.support_size <= (0..=p.vc).map(|i| binomial(p.n, i)).sum()),
        },
        Check {
            name: "schwartz-zippel",
            eval: |p| Some(p.support_size >= 1 << (p.n - p.deg)),
        },
        Check {
            name: "deg>=degf2",
            eval: |p| Some(p.deg >= p.deg_f2),
        },
        Check {
            name: "degf2<=log2|supp(fhat)|",
            eval: |p| Some(1u64 << p.deg_f2 <= p.spectral_support_size),
        },
        Check {
            name: "s^2>=deg",
            eval: |p| Some(p.sensitivity * p.sensitivity >= p.deg),
        },
        Check {
            name: "vc+d>=n",
            eval: |p| p.decision_tree.map(|d| p.vc + d >= p.n),
        },
        Check {
            name: "vc+c>=n",
            eval: |p| p.certificate.map(|c| p.vc + c >= p.n),
        },
        Check {
            name: "2vc+s>=n",
            eval: |p| Some(2 * p.vc + p.sensitivity >= p.n),
        },
        Check {
            name: "design-equivalence",
            eval: |p| p.design_equivalence,
        },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

/// The first failing function in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDescriptor {
    pub check: String,
    pub index: u64,
    pub n: usize,
    /// Decode with [`crate::format::parse_hex`].
    pub table_hex: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub n: usize,
    pub mode: SuiteMode,
    /// Functions evaluated.
    pub trials: u64,
    pub checks: Vec<CheckTally>,
    pub first_failure: Option<FailureDescriptor>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn tally(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone)]
struct Partial {
    counts: Vec<[u64; 3]>,
    zero: u64,
    first: Option<(u64, usize, BooleanFunction)>,
}

impl Partial {
    fn new(checks: usize) -> Self {
        Self {
            counts: vec![[0; 3]; checks],
            zero: 0,
            first: None,
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            for k in 0..3 {
                a[k] += b[k];
            }
        }
        self.zero += other.zero;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Runs `checks` on `gen(i)` for `i` in `0..count`. Zero functions are
/// skipped and noted.
pub fn run_checks<G>(
    n: usize,
    mode: SuiteMode,
    count: u64,
    gen: G,
    checks: &[Check],
    opts: &ProfileOptions,
) -> Result<SuiteReport>
where
    G: Fn(u64) -> Result<BooleanFunction> + Sync,
{
    let partial = split(0..count)
        .into_par_iter()
        .map(|range| {
            let mut part = Partial::new(checks.len());
            for i in range {
                let f = gen(i)?;
                if f.is_zero() {
                    part.zero += 1;
                    continue;
                }
                let p = profile(&f, opts)?;
                for (ci, check) in checks.iter().enumerate() {
                    match (check.eval)(&p) {
                        Some(true) => part.counts[ci][0] += 1,
                        Some(false) => {
                            part.counts[ci][1] += 1;
                            if part.first.is_none() {
                                part.first = Some((i, ci, f.clone()));
                            }
                        }
                        None => part.counts[ci][2] += 1,
                    }
                }
            }
            Ok(part)
        })
        .try_reduce(|| Partial::new(checks.len()), |a, b| Ok(a.merge(b)))?;

    let mut notes = Vec::new();
    if partial.zero > 0 {
        notes.push(format!("{} zero function(s) skipped", partial.zero));
    }
    if n > opts.certificate_cap {
        notes.push(format!(
            "certificate complexity skipped: n = {n} exceeds cap {}",
            opts.certificate_cap
        ));
    }
    if n > opts.decision_tree_cap {
        notes.push(format!(
            "decision-tree depth skipped: n = {n} exceeds cap {}",
            opts.decision_tree_cap
        ));
    }
    if n > opts.design_cap {
        notes.push(format!(
            "design-condition equivalence skipped: n = {n} exceeds cap {}",
            opts.design_cap
        ));
    }
    Ok(SuiteReport {
        n,
        mode,
        trials: count - partial.zero,
        checks: checks
            .iter()
            .zip(partial.counts)
            .map(|(c, [passed, failed, skipped])| CheckTally {
                name: c.name.to_owned(),
                passed,
                failed,
                skipped,
            })
            .collect(),
        first_failure: partial.first.map(|(index, ci, f)| FailureDescriptor {
            check: checks[ci].name.to_owned(),
            index,
            n,
            table_hex: to_hex(&f),
        }),
        notes,
    })
}

/// Every non-zero function at `1 <= n <= 4` against `checks`. Function
/// `i` has truth table `i + 1`.
pub fn verify_exhaustive_with(
    n: usize,
    checks: &[Check],
    opts: &ProfileOptions,
) -> Result<SuiteReport> {
    check_exhaustive_n(n)?;
    let count = (1u64 << (1 << n)) - 1;
    run_checks(
        n,
        SuiteMode::Exhaustive,
        count,
        |i| BooleanFunction::from_u64(n, i + 1),
        checks,
        opts,
    )
}

pub fn verify_exhaustive(n: usize) -> Result<SuiteReport> {
    verify_exhaustive_with(n, &standard_checks(), &ProfileOptions::exhaustive())
}

/// The `2 * trials` functions of a sampled run: first `trials` uniform
/// random tables, then `trials` random functions of F2-degree at most a
/// random `d <= n / 2`. Each draws its own seed from `seed`.
pub fn sampled_functions(n: usize, trials: u64, seed: u64) -> Vec<SampleSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = (0..trials)
        .map(|_| SampleSpec::Uniform { seed: rng.gen() })
        .collect::<Vec<_>>();
    specs.extend((0..trials).map(|_| SampleSpec::LowF2Degree {
        d: rng.gen_range(0..=n / 2),
        seed: rng.gen(),
    }));
    specs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SampleSpec {
    Uniform { seed: u64 },
    LowF2Degree { d: usize, seed: u64 },
}

impl SampleSpec {
    pub fn build(&self, n: usize) -> Result<BooleanFunction> {
        match *self {
            SampleSpec::Uniform { seed } => random_function(n, 0.5, seed),
            SampleSpec::LowF2Degree { d, seed } => random_low_f2_degree(n, d, seed),
        }
    }
}

pub fn verify_sampled_with(
    n: usize,
    trials: u64,
    seed: u64,
    checks: &[Check],
    opts: &ProfileOptions,
) -> Result<SuiteReport> {
    let specs = sampled_functions(n, trials, seed);
    run_checks(
        n,
        SuiteMode::Sampled,
        specs.len() as u64,
        |i| specs[i as usize].build(n),
        checks,
        opts,
    )
}

pub fn verify_sampled(n: usize, trials: u64, seed: u64) -> Result<SuiteReport> {
    verify_sampled_with(
        n,
        trials,
        seed,
        &standard_checks(),
        &ProfileOptions::sampled(),
    )
}
