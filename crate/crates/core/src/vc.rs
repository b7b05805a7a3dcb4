// SPDX-License-Identifier: Apache-2.0

//! Shattering and VC-dimension of set families, null-design parity
//! conditions over GF(2), and the constructive shattered-set extractor.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{
    canonical_cmp, compress, expand, popcount, sets_up_to_size, submasks, submasks_canonical,
    zeta_superset_f2, Mask,
};
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, SetFamily};

/// Candidate-set checks per level are spread over rayon once
/// `candidates * members` reaches this.
const PARALLEL_WORK: usize = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realizer {
    /// `U ⊆ T`.
    pub trace: Mask,
    /// A family member `F` with `F ∩ T = U`.
    pub member: Mask,
}

/// A shattered set `T` with one realizing member for every `U ⊆ T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShatterWitness {
    t_mask: Mask,
    /// Sorted by `trace`.
    realizers: Vec<Realizer>,
}

impl ShatterWitness {
    pub fn t_mask(&self) -> Mask {
        self.t_mask
    }

    /// `|T|`.
    pub fn size(&self) -> usize {
        popcount(self.t_mask)
    }

    pub fn realizers(&self) -> &[Realizer] {
        &self.realizers
    }

    pub fn realizer(&self, trace: Mask) -> Option<Mask> {
        self.realizers
            .binary_search_by_key(&trace, |r| r.trace)
            .ok()
            .map(|i| self.realizers[i].member)
    }

    /// Checks every invariant against `family`: one realizer per submask
    /// of `T`, each a member whose trace on `T` is its key.
    pub fn validate(&self, family: &SetFamily) -> bool {
        self.realizers.len() == 1 << self.size()
            && self
                .realizers
                .iter()
                .zip(submasks(self.t_mask))
                .all(|(r, u)| {
                    r.trace == u && r.member & self.t_mask == u && family.contains(r.member)
                })
    }
}

fn shatters(members: &[Mask], t: Mask) -> bool {
    let k = popcount(t);
    let need = 1usize << k;
    if members.len() < need {
        return false;
    }
    let mut seen = vec![0u64; need.div_ceil(64)];
    let mut count = 0;
    for &f in members {
        let idx = compress(f, t) as usize;
        let bit = 1u64 << (idx & 63);
        if seen[idx >> 6] & bit == 0 {
            seen[idx >> 6] |= bit;
            count += 1;
            if count == need {
                return true;
            }
        }
    }
    false
}

/// Returns a witness iff `family` shatters `t_mask`. The realizer of each
/// trace is the smallest member producing it.
pub fn is_shattered(family: &SetFamily, t_mask: Mask) -> Option<ShatterWitness> {
    let k = popcount(t_mask);
    if family.len() < 1 << k {
        return None;
    }
    let mut slots = vec![None; 1 << k];
    let mut filled = 0;
    for &f in family.members() {
        let slot = &mut slots[compress(f, t_mask) as usize];
        if slot.is_none() {
            *slot = Some(f);
            filled += 1;
            if filled == slots.len() {
                break;
            }
        }
    }
    if filled < slots.len() {
        return None;
    }
    let realizers = slots
        .into_iter()
        .enumerate()
        .map(|(idx, m)| Realizer {
            trace: expand(idx as u32, t_mask),
            member: m.expect("all slots filled"),
        })
        .collect();
    Some(ShatterWitness { t_mask, realizers })
}

/// VC-dimension with the lexicographically smallest shattered set of
/// maximum size.
///
/// Level `k` only tests `k`-sets whose `(k-1)`-subsets were all shattered
/// at level `k - 1`; each candidate extends a shattered set by a larger
/// element, which keeps every level in lexicographic order.
pub fn vc_dimension(family: &SetFamily) -> Result<(usize, ShatterWitness)> {
    family.require_nonempty()?;
    let n = family.n();
    let members = family.members();
    let mut level: Vec<Mask> = vec![0];
    let mut d = 0;
    while d < n && members.len() >= 1 << (d + 1) {
        let shattered_below = level.iter().copied().collect::<HashSet<_>>();
        let mut candidates = Vec::new();
        for &s in &level {
            let start = (Mask::BITS - s.leading_zeros()) as usize;
            for e in start..n {
                let c = s | 1 << e;
                let closed = submasks_of_codim_one(c)
                    .filter(|&sub| sub != s)
                    .all(|sub| shattered_below.contains(&sub));
                if closed {
                    candidates.push(c);
                }
            }
        }
        let next = if candidates.len() * members.len() >= PARALLEL_WORK {
            candidates
                .into_par_iter()
                .filter(|&c| shatters(members, c))
                .collect::<Vec<_>>()
        } else {
            candidates
                .into_iter()
                .filter(|&c| shatters(members, c))
                .collect()
        };
        if next.is_empty() {
            break;
        }
        level = next;
        d += 1;
    }
    let witness = is_shattered(family, level[0]).ok_or_else(|| {
        Error::WitnessNotFound(format!("set {} failed its shattering recheck", level[0]))
    })?;
    Ok((d, witness))
}

/// `VC(supp(f))`; errors on the zero function.
pub fn vc_of_function(f: &BooleanFunction) -> Result<usize> {
    f.require_nonzero()?;
    vc_dimension(&f.support()).map(|(d, _)| d)
}

fn submasks_of_codim_one(c: Mask) -> impl Iterator<Item = Mask> {
    let mut rest = c;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let low = rest & rest.wrapping_neg();
        rest ^= low;
        Some(c ^ low)
    })
}

/// The three equivalent parity conditions on a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DesignCondition {
    /// `#{F : A ⊆ F}` even for all `|A| <= d` (null d-design over GF(2)).
    Containment,
    /// `#{F : F ∩ S = T}` even for all `|S| <= d`, `T ⊆ S`.
    Trace,
    /// `#{F : F ∩ S = ∅}` even for all `|S| <= d`.
    Disjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "condition")]
pub enum DesignViolation {
    Containment { a: Mask },
    Trace { s: Mask, t: Mask },
    Disjoint { s: Mask },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignCheckReport {
    d: usize,
    condition: DesignCondition,
    holds: bool,
    violation: Option<DesignViolation>,
}

impl DesignCheckReport {
    fn new(d: usize, condition: DesignCondition, violation: Option<DesignViolation>) -> Self {
        Self {
            d,
            condition,
            holds: violation.is_none(),
            violation,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn condition(&self) -> DesignCondition {
        self.condition
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    /// The first violation in canonical set order, if any.
    pub fn violation(&self) -> Option<DesignViolation> {
        self.violation
    }
}

/// Condition (i): containment counts, via one superset-parity transform.
pub fn null_design_check_containment(family: &SetFamily, d: usize) -> DesignCheckReport {
    let parity = zeta_superset_f2(family.indicator().table());
    let violation = sets_up_to_size(family.n(), d)
        .find(|&a| parity.get(a))
        .map(|a| DesignViolation::Containment { a });
    DesignCheckReport::new(d, DesignCondition::Containment, violation)
}

/// Condition (ii): every trace count on every small `S` is even.
pub fn null_design_check_trace(family: &SetFamily, d: usize) -> DesignCheckReport {
    let violation = sets_up_to_size(family.n(), d).find_map(|s| {
        let mut counts = vec![0u32; 1 << popcount(s)];
        for &f in family.members() {
            counts[compress(f, s) as usize] += 1;
        }
        submasks_canonical(s)
            .into_iter()
            .find(|&t| counts[compress(t, s) as usize] % 2 == 1)
            .map(|t| DesignViolation::Trace { s, t })
    });
    DesignCheckReport::new(d, DesignCondition::Trace, violation)
}

/// The empty-intersection condition: `#{F : F ∩ S = ∅}` even.
pub fn null_design_check_disjoint(family: &SetFamily, d: usize) -> DesignCheckReport {
    let violation = sets_up_to_size(family.n(), d)
        .find(|&s| family.members().iter().filter(|&&f| f & s == 0).count() % 2 == 1)
        .map(|s| DesignViolation::Disjoint { s });
    DesignCheckReport::new(d, DesignCondition::Disjoint, violation)
}

pub fn null_design_check(
    family: &SetFamily,
    d: usize,
    condition: DesignCondition,
) -> DesignCheckReport {
    match condition {
        DesignCondition::Containment => null_design_check_containment(family, d),
        DesignCondition::Trace => null_design_check_trace(family, d),
        DesignCondition::Disjoint => null_design_check_disjoint(family, d),
    }
}

/// Builds a shattered `(d+1)`-set from a support that is a null d-design
/// over GF(2).
///
/// Let `S` be the canonically smallest set with an odd containment count;
/// `|S| = s + 1` where `s >= d` is the largest order the design has. Every
/// trace on `S` then has an odd (so non-zero) count. `T` is the lowest
/// `d + 1` elements of `S`, and `U ⊆ T` is realized by a member `F` with
/// `F ∩ S = U ∪ (S \ T)`, so `F ∩ T = U`.
pub fn extract_shattered_from_design(f: &BooleanFunction, d: usize) -> Result<ShatterWitness> {
    f.require_nonzero()?;
    let n = f.n();
    let parity = zeta_superset_f2(f.table());
    if let Some(a) = sets_up_to_size(n, d).find(|&a| parity.get(a)) {
        return Err(Error::PreconditionViolated(format!(
            "support is not a null {d}-design: set {a} has an odd containment count"
        )));
    }
    let s = parity
        .iter_ones()
        .min_by(|&a, &b| canonical_cmp(a, b))
        .ok_or_else(|| Error::WitnessNotFound("no odd containment count".into()))?;
    if popcount(s) <= d {
        return Err(Error::WitnessNotFound(format!(
            "odd containment count at {s}, below order {d}"
        )));
    }
    let mut t = 0;
    let mut rest = s;
    for _ in 0..=d {
        let low = rest & rest.wrapping_neg();
        t |= low;
        rest ^= low;
    }

    let family = f.support();
    let mut first_by_trace = HashMap::new();
    for &m in family.members() {
        first_by_trace.entry(m & s).or_insert(m);
    }
    let realizers = submasks(t)
        .map(|u| {
            first_by_trace
                .get(&(u | rest))
                .map(|&member| Realizer { trace: u, member })
                .ok_or_else(|| {
                    Error::WitnessNotFound(format!("no member with trace {} on {s}", u | rest))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = ShatterWitness {
        t_mask: t,
        realizers,
    };
    if !witness.validate(&family) || is_shattered(&family, t).is_none() {
        return Err(Error::WitnessNotFound(format!(
            "extracted set {t} is not shattered"
        )));
    }
    Ok(witness)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SauerReport {
    pub family_size: u64,
    pub vc: usize,
    /// `Σ_{i <= vc} C(n, i)`.
    pub bound: u64,
    pub holds: bool,
}

/// Checks `|F| <= Σ_{i <= VC(F)} C(n, i)`.
pub fn sauer_check(family: &SetFamily) -> Result<SauerReport> {
    let (vc, _) = vc_dimension(family)?;
    Ok(sauer_from_parts(family.n(), family.len() as u64, vc))
}

pub(crate) fn sauer_from_parts(n: usize, family_size: u64, vc: usize) -> SauerReport {
    let bound = (0..=vc).map(|i| binomial(n, i)).sum();
    SauerReport {
        family_size,
        vc,
        bound,
        holds: family_size <= bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::full_mask;

    fn fam(n: usize, members: &[u64]) -> SetFamily {
        SetFamily::new(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn empty_set_is_shattered_by_nonempty_family() {
        let w = is_shattered(&fam(3, &[5]), 0).unwrap();
        assert_eq!(w.size(), 0);
        assert_eq!(w.realizer(0), Some(5));
    }

    #[test]
    fn singleton_shattered() {
        let f = fam(1, &[0, 1]);
        let w = is_shattered(&f, 1).unwrap();
        assert!(w.validate(&f));
        assert_eq!(w.realizer(0), Some(0));
        assert_eq!(w.realizer(1), Some(1));
        assert!(is_shattered(&fam(2, &[0, 2]), 1).is_none());
    }

    #[test]
    fn realizers_are_smallest_members() {
        assert!(is_shattered(&fam(3, &[1, 2, 3, 5, 6]), 0b011).is_none());
        let f = fam(3, &[1, 2, 3, 4, 5, 6, 7]);
        let w = is_shattered(&f, 0b011).unwrap();
        assert_eq!(
            w.realizers()
                .iter()
                .map(|r| (r.trace, r.member))
                .collect::<Vec<_>>(),
            vec![(0, 4), (1, 1), (2, 2), (3, 3)]
        );
    }

    #[test]
    fn vc_examples() {
        let full = SetFamily::power_set(5).unwrap();
        let (d, w) = vc_dimension(&full).unwrap();
        assert_eq!(d, 5);
        assert_eq!(w.t_mask(), 31);
        let (d, w) = vc_dimension(&fam(4, &[9])).unwrap();
        assert_eq!((d, w.t_mask()), (0, 0));
        assert_eq!(vc_dimension(&fam(4, &[])), Err(Error::EmptyFamily));
    }

    #[test]
    fn vc_picks_lexicographic_witness() {
        // Shatters {2,3} and {1,4} (masks 6 and 9) but no 3-set; {1,4} is
        // lexicographically first even though 6 < 9 numerically.
        let members = [0b0000, 0b0110, 0b0010, 0b0100, 0b1001, 0b0001, 0b1000];
        let f = fam(4, &members);
        assert!(is_shattered(&f, 6).is_some());
        assert!(is_shattered(&f, 9).is_some());
        let (d, w) = vc_dimension(&f).unwrap();
        assert_eq!((d, w.t_mask()), (2, 9));
    }

    #[test]
    fn design_examples() {
        let n = 4;
        let full = SetFamily::power_set(n).unwrap();
        let only_empty = fam(n, &[0]);
        for cond in [
            DesignCondition::Containment,
            DesignCondition::Trace,
            DesignCondition::Disjoint,
        ] {
            assert!(null_design_check(&full, n - 1, cond).holds(), "{cond:?}");
            let r = null_design_check(&only_empty, 0, cond);
            assert!(!r.holds());
            assert_eq!(r.d(), 0);
        }
        assert_eq!(
            null_design_check_containment(&only_empty, 0).violation(),
            Some(DesignViolation::Containment { a: 0 })
        );
        assert_eq!(
            null_design_check_trace(&only_empty, 0).violation(),
            Some(DesignViolation::Trace { s: 0, t: 0 })
        );
        assert_eq!(
            null_design_check_disjoint(&only_empty, 0).violation(),
            Some(DesignViolation::Disjoint { s: 0 })
        );
        assert!(!null_design_check_containment(&full, n).holds());
    }

    #[test]
    fn extractor_on_full_family() {
        let n = 5;
        let f = BooleanFunction::one(n).unwrap();
        let w = extract_shattered_from_design(&f, n - 1).unwrap();
        assert_eq!(w.t_mask(), full_mask(n));
    }

    #[test]
    fn extractor_on_odd_weight_family() {
        let f = BooleanFunction::from_fn(4, |x| x.count_ones() % 2 == 1).unwrap();
        let fam = f.support();
        assert!(null_design_check_containment(&fam, 2).holds());
        let w = extract_shattered_from_design(&f, 2).unwrap();
        assert_eq!(w.size(), 3);
        assert!(w.validate(&fam));
    }

    #[test]
    fn extractor_rejects_non_design() {
        let f = BooleanFunction::from_support(3, &[0]).unwrap();
        assert!(matches!(
            extract_shattered_from_design(&f, 0),
            Err(Error::PreconditionViolated(_))
        ));
        let z = BooleanFunction::zero(3).unwrap();
        assert_eq!(
            extract_shattered_from_design(&z, 0),
            Err(Error::ZeroFunction)
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!((0..=20).map(|k| binomial(20, k)).sum::<u64>(), 1 << 20);
    }

    #[test]
    fn sauer_examples() {
        let full = SetFamily::power_set(6).unwrap();
        let r = sauer_check(&full).unwrap();
        assert_eq!((r.family_size, r.bound, r.holds), (64, 64, true));
        let r = sauer_check(&fam(6, &[17])).unwrap();
        assert_eq!((r.family_size, r.bound, r.holds), (1, 1, true));
        assert_eq!(sauer_check(&fam(6, &[])), Err(Error::EmptyFamily));
    }

    #[test]
    fn sauer_holds_for_every_family_at_n3() {
        for bits in 1u64..256 {
            let f = BooleanFunction::from_u64(3, bits).unwrap();
            assert!(
                sauer_check(&f.support()).unwrap().holds,
                "table {bits:#010b}"
            );
        }
    }
}
