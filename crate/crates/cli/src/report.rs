// SPDX-License-Identifier: Apache-2.0

//! Report types behind `--json`, and their text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use bfc_core::census::{CensusRow, EqualityLists, SuiteReport};
use bfc_core::measures::{InequalityKind, Measure, MeasureReport};
use bfc_core::vc::{DesignCheckReport, DesignViolation};
use bfc_core::ShatterWitness;

/// `{1,3}` for mask 5; `{}` for the empty set.
pub fn fmt_set(mask: u32) -> String {
    let elems = (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>();
    format!("{{{}}}", elems.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub mask: u32,
    pub coeff: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub scale: u64,
    pub coefficients: Vec<Coefficient>,
}

impl SpectrumReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("n {} scale {}\n", self.n, self.scale);
        for c in &self.coefficients {
            let _ = writeln!(s, "{} {}", c.mask, c.coeff);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnfReport {
    pub n: usize,
    /// Absent for the zero polynomial.
    pub degree: Option<usize>,
    pub monomials: Vec<u32>,
}

impl AnfReport {
    pub fn to_text(&self) -> String {
        self.monomials.iter().map(|m| format!("{m}\n")).collect()
    }
}

fn witness_text(s: &mut String, w: &ShatterWitness) {
    let _ = writeln!(s, "shattered {} mask {}", fmt_set(w.t_mask()), w.t_mask());
    for r in w.realizers() {
        let _ = writeln!(s, "trace {} member {}", r.trace, r.member);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcReport {
    pub n: usize,
    pub vc: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ShatterWitness>,
}

impl VcReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("vc {}\n", self.vc);
        if let Some(w) = &self.witness {
            witness_text(&mut s, w);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractReport {
    pub n: usize,
    pub d: usize,
    pub witness: ShatterWitness,
}

impl ExtractReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        witness_text(&mut s, &self.witness);
        s
    }
}

pub fn design_text(r: &DesignCheckReport) -> String {
    match r.violation() {
        None => format!("holds d {}\n", r.d()),
        Some(v) => {
            let why = match v {
                DesignViolation::Containment { a } => {
                    format!("odd number of members contain {}", fmt_set(a))
                }
                DesignViolation::Trace { s, t } => {
                    format!(
                        "odd number of members meet {} in {}",
                        fmt_set(s),
                        fmt_set(t)
                    )
                }
                DesignViolation::Disjoint { s } => {
                    format!("odd number of members miss {}", fmt_set(s))
                }
            };
            format!("violated d {}: {why}\n", r.d())
        }
    }
}

pub fn measures_text(r: &MeasureReport) -> String {
    let mut s = format!("n {}\n", r.n);
    for m in Measure::ALL {
        if let Some(value) = r.measures.get(m.name()) {
            let _ = writeln!(s, "{m} {value}");
        }
    }
    for k in &r.skipped {
        let _ = writeln!(s, "skipped {}: {}", k.measure, k.reason);
    }
    for i in &r.inequalities {
        let verdict = if i.holds { "holds" } else { "fails" };
        let tag = match i.kind {
            InequalityKind::Theorem => "",
            InequalityKind::RefutedConjecture => " (refuted conjecture)",
        };
        let _ = writeln!(s, "{} {} {} {verdict}{tag}", i.name, i.lhs, i.rhs);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub total_functions: u64,
    pub deg_equality_count: u64,
    pub f2_equality_count: u64,
    /// Truth tables as integers, bit `i` being `f(i)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lists: Option<EqualityLists>,
}

impl CensusReport {
    pub fn new(row: CensusRow, lists: Option<EqualityLists>) -> Self {
        Self {
            n: row.n,
            total_functions: row.total_functions,
            deg_equality_count: row.deg_equality_count,
            f2_equality_count: row.f2_equality_count,
            lists,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("n functions deg-equality f2-equality\n");
        let _ = writeln!(
            s,
            "{} {} {} {}",
            self.n, self.total_functions, self.deg_equality_count, self.f2_equality_count
        );
        if let Some(lists) = &self.lists {
            let digits = ((1usize << self.n) / 4).max(1);
            for (label, tables) in [("deg", &lists.deg), ("f2", &lists.f2)] {
                for t in tables {
                    let _ = writeln!(s, "{label} {t:0digits$x}");
                }
            }
        }
        s
    }
}

pub fn suite_text(r: &SuiteReport) -> String {
    let mode = match r.mode {
        bfc_core::census::SuiteMode::Exhaustive => "exhaustive",
        bfc_core::census::SuiteMode::Sampled => "sampled",
    };
    let mut s = format!("n {} mode {mode} functions {}\n", r.n, r.trials);
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let _ = writeln!(
            s,
            "{:width$} passed {} failed {} skipped {}",
            c.name, c.passed, c.failed, c.skipped
        );
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    match &r.first_failure {
        None => s.push_str("result: pass\n"),
        Some(f) => {
            let _ = writeln!(
                s,
                "counterexample: check {} function {} n {} table {}",
                f.check, f.index, f.n, f.table_hex
            );
            let _ = writeln!(s, "result: fail ({} failures)", r.failures());
        }
    }
    s
}
