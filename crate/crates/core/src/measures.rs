// SPDX-License-Identifier: Apache-2.0

//! Query-complexity measures and hypercube-graph statistics, plus the
//! report that checks each VC trade-off inequality against them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebraic::anf;
use crate::bits::{expand, full_mask, masks_of_popcount, popcount, submasks, Mask};
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, SetFamily};
use crate::spectral::wht;
use crate::vc::vc_dimension;

pub const DEFAULT_CERTIFICATE_CAP: usize = 10;
pub const DEFAULT_DECISION_TREE_CAP: usize = 12;

/// Dimensions from which point-wise scans go parallel.
const PARALLEL_DIM: usize = 12;

/// Sensitive coordinates of `x`, as a mask.
pub fn sensitive_coordinates(f: &BooleanFunction, x: Mask) -> Mask {
    let fx = f.get(x);
    (0..f.n())
        .filter(|&i| f.get(x ^ (1 << i)) != fx)
        .fold(0, |m, i| m | (1 << i))
}

/// `s(f, x)`.
pub fn sensitivity_at(f: &BooleanFunction, x: Mask) -> usize {
    popcount(sensitive_coordinates(f, x))
}

/// `s(f) = max_x s(f, x)`.
pub fn sensitivity(f: &BooleanFunction) -> usize {
    let points = 0..=full_mask(f.n());
    if f.n() >= PARALLEL_DIM {
        points.into_par_iter().map(|x| sensitivity_at(f, x)).max()
    } else {
        points.map(|x| sensitivity_at(f, x)).max()
    }
    .unwrap_or(0)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::DimensionCap { n, cap })
    } else {
        Ok(())
    }
}

/// Whether fixing the coordinates in `p` to their values in `x` forces `f`
/// to the constant `f(x)`.
fn is_certificate(f: &BooleanFunction, x: Mask, p: Mask) -> bool {
    let fx = f.get(x);
    let base = x & p;
    let free = full_mask(f.n()) ^ p;
    submasks(free).all(|y| f.get(base | y) == fx)
}

/// `C(f, x)`: the size of a smallest certificate for `x`.
///
/// Every certificate contains all sensitive coordinates of `x`, so the
/// search enumerates their supersets by increasing size and stops at the
/// first hit; supersets of certificates are certificates, so the first
/// size that succeeds is the minimum.
pub fn certificate_at(f: &BooleanFunction, x: Mask) -> usize {
    let n = f.n();
    let forced = sensitive_coordinates(f, x);
    let optional = full_mask(n) ^ forced;
    let m = popcount(optional);
    for k in 0..=m {
        if masks_of_popcount(m, k).any(|q| is_certificate(f, x, forced | expand(q, optional))) {
            return popcount(forced) + k;
        }
    }
    unreachable!("fixing every coordinate is always a certificate")
}

/// `C(f) = max_x C(f, x)`; refuses `n > cap`.
pub fn certificate_complexity(f: &BooleanFunction, cap: usize) -> Result<usize> {
    let n = f.n();
    check_cap(n, cap)?;
    let points = 0..=full_mask(n);
    let c = if n >= 9 {
        points.into_par_iter().map(|x| certificate_at(f, x)).max()
    } else {
        points.map(|x| certificate_at(f, x)).max()
    };
    Ok(c.unwrap_or(0))
}

const NOT_CONSTANT: u8 = 2;

/// `D(f)`, the depth of an optimal decision tree; refuses `n > cap`.
///
/// A restriction is a (fixed-mask, values-mask) pair with values ⊆ fixed,
/// stored at the ternary index `Σ_i t_i 3^i` where `t_i` is 0 for a free
/// coordinate and `1 + value` for a fixed one. Fixing a free coordinate
/// only increases the index, so one descending sweep fills the memo:
///
/// `D(ρ) = 0` if `f` is constant on `ρ`, otherwise
/// `1 + min_i max(D(ρ, x_i = 0), D(ρ, x_i = 1))` over free `i`.
pub fn decision_tree_depth(f: &BooleanFunction, cap: usize) -> Result<usize> {
    let n = f.n();
    check_cap(n, cap)?;
    let pow3 = (0..n)
        .scan(1usize, |p, _| {
            let cur = *p;
            *p *= 3;
            Some(cur)
        })
        .collect::<Vec<_>>();
    let size = 3usize.pow(n as u32);
    // status: 0 / 1 = constant with that value, NOT_CONSTANT otherwise.
    let mut status = vec![0u8; size];
    let mut depth = vec![0u8; size];
    let mut digits = vec![0u8; n];
    for idx in (0..size).rev() {
        let mut rest = idx;
        for d in digits.iter_mut() {
            *d = (rest % 3) as u8;
            rest /= 3;
        }
        let Some(first_free) = digits.iter().position(|&d| d == 0) else {
            let point = digits
                .iter()
                .enumerate()
                .filter(|(_, &d)| d == 2)
                .fold(0, |m, (i, _)| m | (1 << i));
            status[idx] = u8::from(f.get(point));
            continue;
        };
        let (s0, s1) = (
            status[idx + pow3[first_free]],
            status[idx + 2 * pow3[first_free]],
        );
        if s0 == s1 && s0 != NOT_CONSTANT {
            status[idx] = s0;
            continue;
        }
        status[idx] = NOT_CONSTANT;
        depth[idx] = 1 + digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(i, _)| depth[idx + pow3[i]].max(depth[idx + 2 * pow3[i]]))
            .min()
            .expect("a non-constant restriction has a free coordinate");
    }
    Ok(usize::from(depth[0]))
}

/// An exact non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub numer: u64,
    pub denom: u64,
}

impl Ratio {
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = numer.gcd(&denom);
        Self {
            numer: numer / g,
            denom: denom / g,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Statistics of the subgraph of the hypercube induced by a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub min_degree: usize,
    /// `edge_count / vertex_count`.
    pub density: Ratio,
}

pub fn one_inclusion_stats(family: &SetFamily) -> Result<GraphStats> {
    family.require_nonempty()?;
    let n = family.n();
    let lookup = family.indicator();
    let degree = |&m: &Mask| (0..n).filter(|&i| lookup.get(m ^ (1 << i))).count();
    let (degree_sum, min_degree) = if family.len() >= 1 << PARALLEL_DIM {
        family
            .members()
            .par_iter()
            .map(|m| {
                let d = degree(m);
                (d, d)
            })
            .reduce(|| (0, usize::MAX), |a, b| (a.0 + b.0, a.1.min(b.1)))
    } else {
        family
            .members()
            .iter()
            .map(degree)
            .fold((0, usize::MAX), |a, d| (a.0 + d, a.1.min(d)))
    };
    let vertex_count = family.len() as u64;
    let edge_count = degree_sum as u64 / 2;
    Ok(GraphStats {
        vertex_count,
        edge_count,
        min_degree,
        density: Ratio::new(edge_count, vertex_count),
    })
}

/// The measures a report can include.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Measure {
    Vc,
    Deg,
    DegF2,
    Sensitivity,
    Certificate,
    DecisionTree,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Vc,
        Measure::Deg,
        Measure::DegF2,
        Measure::Sensitivity,
        Measure::Certificate,
        Measure::DecisionTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Vc => "vc",
            Measure::Deg => "deg",
            Measure::DegF2 => "degf2",
            Measure::Sensitivity => "s",
            Measure::Certificate => "c",
            Measure::DecisionTree => "d",
        }
    }

    /// Measures only defined for non-zero functions.
    fn needs_nonzero(self) -> bool {
        matches!(self, Measure::Vc | Measure::Deg | Measure::DegF2)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown measure {s:?}; expected one of vc,deg,degf2,s,c,d"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureCaps {
    pub certificate: usize,
    pub decision_tree: usize,
}

impl Default for MeasureCaps {
    fn default() -> Self {
        Self {
            certificate: DEFAULT_CERTIFICATE_CAP,
            decision_tree: DEFAULT_DECISION_TREE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InequalityKind {
    /// A proven bound; a failure is a bug.
    Theorem,
    /// `VC + s >= n`, which is false in general; reported for information.
    RefutedConjecture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub kind: InequalityKind,
}

impl Inequality {
    fn at_least(name: &str, lhs: i64, rhs: i64, kind: InequalityKind) -> Self {
        Self {
            name: name.to_owned(),
            lhs,
            rhs,
            holds: lhs >= rhs,
            kind,
        }
    }

    pub fn slack(&self) -> i64 {
        self.lhs - self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub measure: String,
    pub reason: String,
}

/// Selected measures of one function and every inequality among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub n: usize,
    pub measures: BTreeMap<String, u64>,
    pub inequalities: Vec<Inequality>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
}

impl MeasureReport {
    pub fn get(&self, m: Measure) -> Option<usize> {
        self.measures.get(m.name()).map(|&v| v as usize)
    }

    pub fn inequality(&self, name: &str) -> Option<&Inequality> {
        self.inequalities.iter().find(|i| i.name == name)
    }

    /// Whether every proven inequality that could be evaluated holds.
    pub fn theorems_hold(&self) -> bool {
        self.inequalities
            .iter()
            .filter(|i| i.kind == InequalityKind::Theorem)
            .all(|i| i.holds)
    }
}

/// Computes `selection` for `f`. Measures over their cap are listed in
/// `skipped` and the inequalities that need them are left out.
pub fn measure_report(
    f: &BooleanFunction,
    selection: &[Measure],
    caps: MeasureCaps,
) -> Result<MeasureReport> {
    if selection.iter().any(|m| m.needs_nonzero()) {
        f.require_nonzero()?;
    }
    let n = f.n();
    let mut values = BTreeMap::new();
    let mut skipped = Vec::new();
    let mut selection = selection.to_vec();
    selection.sort_unstable();
    selection.dedup();
    for m in selection {
        let value = match m {
            Measure::Vc => vc_dimension(&f.support()).map(|(d, _)| d),
            Measure::Deg => wht(f).degree(),
            Measure::DegF2 => anf(f).degree(),
            Measure::Sensitivity => Ok(sensitivity(f)),
            Measure::Certificate => certificate_complexity(f, caps.certificate),
            Measure::DecisionTree => decision_tree_depth(f, caps.decision_tree),
        };
        match value {
            Ok(v) => {
                values.insert(m, v as i64);
            }
            Err(e @ Error::DimensionCap { .. }) => skipped.push(Skipped {
                measure: m.name().to_owned(),
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }

    let n_i = n as i64;
    let get = |m: Measure| values.get(&m).copied();
    let mut inequalities = Vec::new();
    let mut push = |name: &str, lhs: Option<i64>, rhs: Option<i64>, kind| {
        if let (Some(l), Some(r)) = (lhs, rhs) {
            inequalities.push(Inequality::at_least(name, l, r, kind));
        }
    };
    use InequalityKind::*;
    let vc = get(Measure::Vc);
    let sum = |a: Option<i64>, b: Option<i64>| a.zip(b).map(|(a, b)| a + b);
    push("vc+deg>=n", sum(vc, get(Measure::Deg)), Some(n_i), Theorem);
    push(
        "vc+degf2>=n",
        sum(vc, get(Measure::DegF2)),
        Some(n_i),
        Theorem,
    );
    push(
        "vc+d>=n",
        sum(vc, get(Measure::DecisionTree)),
        Some(n_i),
        Theorem,
    );
    push(
        "vc+c>=n",
        sum(vc, get(Measure::Certificate)),
        Some(n_i),
        Theorem,
    );
    push(
        "2vc+s>=n",
        sum(vc.map(|v| 2 * v), get(Measure::Sensitivity)),
        Some(n_i),
        Theorem,
    );
    push(
        "s^2>=deg",
        get(Measure::Sensitivity).map(|s| s * s),
        get(Measure::Deg),
        Theorem,
    );
    push(
        "vc+s>=n",
        sum(vc, get(Measure::Sensitivity)),
        Some(n_i),
        RefutedConjecture,
    );

    Ok(MeasureReport {
        n,
        measures: values
            .into_iter()
            .map(|(m, v)| (m.name().to_owned(), v as u64))
            .collect(),
        inequalities,
        skipped,
    })
}

/// Every measure and every inequality for a non-zero `f`.
pub fn tradeoff_report(f: &BooleanFunction, caps: MeasureCaps) -> Result<MeasureReport> {
    f.require_nonzero()?;
    measure_report(f, &Measure::ALL, caps)
}
