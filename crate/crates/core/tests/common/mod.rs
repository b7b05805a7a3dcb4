// SPDX-License-Identifier: Apache-2.0

//! Definitional oracles over plain `Vec<bool>` truth tables. Nothing here
//! calls into the transforms or search routines under test.

#![allow(dead_code)]

use std::collections::HashSet;

use bfc_core::BooleanFunction;

pub fn table(f: &BooleanFunction) -> Vec<bool> {
    (0..1u32 << f.n()).map(|x| f.get(x)).collect()
}

fn n_of(t: &[bool]) -> usize {
    t.len().trailing_zeros() as usize
}

/// `Σ_x f(x) (-1)^{|S ∩ x|}` by direct summation.
pub fn wht(t: &[bool]) -> Vec<i64> {
    (0..t.len())
        .map(|s| {
            (0..t.len())
                .filter(|&x| t[x])
                .map(|x| if (s & x).count_ones() % 2 == 0 { 1 } else { -1 })
                .sum()
        })
        .collect()
}

/// `c_S = Σ_{T ⊆ S} f(1_T) mod 2` by direct subset sums.
pub fn anf(t: &[bool]) -> Vec<bool> {
    (0..t.len())
        .map(|s| {
            (0..t.len())
                .filter(|&u| u & s == u)
                .filter(|&u| t[u])
                .count()
                % 2
                == 1
        })
        .collect()
}

pub fn fourier_degree(t: &[bool]) -> Option<usize> {
    wht(t)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(s, _)| s.count_ones() as usize)
        .max()
}

pub fn f2_degree(t: &[bool]) -> Option<usize> {
    anf(t)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(s, _)| s.count_ones() as usize)
        .max()
}

pub fn support(t: &[bool]) -> Vec<usize> {
    (0..t.len()).filter(|&x| t[x]).collect()
}

pub fn shatters(family: &[usize], set: usize) -> bool {
    let traces = family.iter().map(|&f| f & set).collect::<HashSet<_>>();
    traces.len() == 1 << set.count_ones()
}

/// VC-dimension by trying every subset of `[n]`.
pub fn vc(t: &[bool]) -> Option<usize> {
    let fam = support(t);
    if fam.is_empty() {
        return None;
    }
    (0..t.len())
        .filter(|&s| shatters(&fam, s))
        .map(|s| s.count_ones() as usize)
        .max()
}

pub fn sensitivity(t: &[bool]) -> usize {
    let n = n_of(t);
    (0..t.len())
        .map(|x| (0..n).filter(|&i| t[x] != t[x ^ (1 << i)]).count())
        .max()
        .unwrap_or(0)
}

/// `C(f)` scanning every variable set `P` for every input, no pruning.
pub fn certificate(t: &[bool]) -> usize {
    let n = n_of(t);
    (0..t.len())
        .map(|x| {
            (0..t.len())
                .filter(|&p| (0..t.len()).all(|y| (y & p) != (x & p) || t[y] == t[x]))
                .map(|p| p.count_ones() as usize)
                .min()
                .unwrap_or(n)
        })
        .max()
        .unwrap_or(0)
}

/// `D(f)` by plain recursion over restrictions, no memo.
pub fn decision_tree(t: &[bool]) -> usize {
    fn go(t: &[bool], n: usize, fixed: usize, values: usize) -> usize {
        let pts = (0..t.len()).filter(|&y| y & fixed == values).map(|y| t[y]);
        let vals = pts.collect::<HashSet<_>>();
        if vals.len() <= 1 {
            return 0;
        }
        (0..n)
            .filter(|&i| fixed >> i & 1 == 0)
            .map(|i| {
                let b = 1 << i;
                1 + go(t, n, fixed | b, values).max(go(t, n, fixed | b, values | b))
            })
            .min()
            .unwrap()
    }
    go(t, n_of(t), 0, 0)
}

/// Census counts by direct definitions: (deg-equalities, F2-equalities).
pub fn census(n: usize) -> (u64, u64) {
    let size = 1usize << n;
    let mut counts = (0, 0);
    for bits in 1u64..1 << size {
        let t = (0..size).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>();
        let v = vc(&t).unwrap();
        counts.0 += u64::from(v + fourier_degree(&t).unwrap() == n);
        counts.1 += u64::from(v + f2_degree(&t).unwrap() == n);
    }
    counts
}

/// Small deterministic generator for oracle-side sampling (splitmix64).
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn function(&mut self, n: usize) -> BooleanFunction {
        let words = (0..(1usize << n).div_ceil(64))
            .map(|_| self.next())
            .collect::<Vec<_>>();
        BooleanFunction::from_fn(n, |x| words[x as usize / 64] >> (x % 64) & 1 == 1).unwrap()
    }
}
