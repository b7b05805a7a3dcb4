// SPDX-License-Identifier: Apache-2.0

//! Packed bit tables indexed by subsets of `[n]`, set-order helpers, and the
//! GF(2) zeta transforms on the subset lattice.
//!
//! A subset `S` of `[n]` is a [`Mask`] with bit `j - 1` set iff `j` is in
//! `S`. "Lexicographic" order on sets of equal size compares their
//! increasing element lists, so `{1,4}` comes before `{2,3}`. The canonical
//! order used for every deterministic choice in this crate is by size
//! first, then lexicographic (see [`canonical_cmp`]).

use std::cmp::Ordering;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A subset of `[n]`, `n <= 32`, as a bitmask.
pub type Mask = u32;

/// Bits of a 64-bit word whose in-word index has bit `j` clear.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// A sequence of `2^n` bits stored in 64-bit words.
///
/// Bits past `2^n` in the final word (only present for `n < 6`) are always
/// zero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitTable {
    n: usize,
    words: Vec<u64>,
}

impl BitTable {
    pub fn zeros(n: usize) -> Self {
        let words = vec![0; word_count(n)];
        Self { n, words }
    }

    pub fn ones(n: usize) -> Self {
        let mut t = Self {
            n,
            words: vec![u64::MAX; word_count(n)],
        };
        t.clear_tail();
        t
    }

    /// Builds a table from its low `2^n` bits, `n <= 6`.
    pub fn from_u64(n: usize, bits: u64) -> Self {
        assert!(n <= 6, "from_u64 needs n <= 6");
        let mut t = Self {
            n,
            words: vec![bits],
        };
        t.clear_tail();
        t
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Mask) -> bool) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..t.len() {
            if f(i as Mask) {
                t.words[i >> 6] |= 1 << (i & 63);
            }
        }
        t
    }

    /// Builds a table from raw words; extra high bits are cleared.
    pub fn from_words(n: usize, words: Vec<u64>) -> Option<Self> {
        if words.len() != word_count(n) {
            return None;
        }
        let mut t = Self { n, words };
        t.clear_tail();
        Some(t)
    }

    fn clear_tail(&mut self) {
        if self.n < 6 {
            self.words[0] &= (1u64 << (1 << self.n)) - 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of bits, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: Mask) -> bool {
        let i = i as usize;
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: Mask, value: bool) {
        let i = i as usize;
        let bit = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= bit;
        } else {
            self.words[i >> 6] &= !bit;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = Mask> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = (wi << 6) as Mask;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len() as Mask).map(move |i| self.get(i))
    }

    pub fn not(&self) -> Self {
        let mut t = Self {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        t.clear_tail();
        t
    }

    /// In place: bit `S` becomes the XOR of bits `T` over all `T ⊆ S`.
    ///
    /// Runs the `n` butterfly layers of the subset-sum transform over GF(2);
    /// layers below 6 act inside a word, the rest XOR whole words.
    pub fn zeta_subset_in_place(&mut self) {
        for (j, &low) in LOW_HALF.iter().enumerate().take(self.n) {
            let shift = 1u32 << j;
            for w in &mut self.words {
                *w ^= (*w & low) << shift;
            }
        }
        for j in 6..self.n {
            let block = 1usize << (j - 6);
            for chunk in self.words.chunks_exact_mut(2 * block) {
                let (lo, hi) = chunk.split_at_mut(block);
                for (h, l) in hi.iter_mut().zip(lo.iter()) {
                    *h ^= *l;
                }
            }
        }
    }

    /// In place: bit `A` becomes the XOR of bits `F` over all `F ⊇ A`.
    pub fn zeta_superset_in_place(&mut self) {
        for (j, &low) in LOW_HALF.iter().enumerate().take(self.n) {
            let shift = 1u32 << j;
            for w in &mut self.words {
                *w ^= (*w >> shift) & low;
            }
        }
        for j in 6..self.n {
            let block = 1usize << (j - 6);
            for chunk in self.words.chunks_exact_mut(2 * block) {
                let (lo, hi) = chunk.split_at_mut(block);
                for (l, h) in lo.iter_mut().zip(hi.iter()) {
                    *l ^= *h;
                }
            }
        }
    }
}

impl std::fmt::Debug for BitTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitTable(n={}, ", self.n)?;
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = Mask;

    #[inline]
    fn next(&mut self) -> Option<Mask> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Subset-sum transform over GF(2): `out[S] = XOR_{T ⊆ S} bits[T]`.
///
/// The mod-2 Möbius function is identically one, so this map is its own
/// inverse.
pub fn zeta_subset_f2(bits: &BitTable) -> BitTable {
    let mut out = bits.clone();
    out.zeta_subset_in_place();
    out
}

/// Superset-sum transform over GF(2): `out[A] = XOR_{F ⊇ A} bits[F]`.
pub fn zeta_superset_f2(bits: &BitTable) -> BitTable {
    let mut out = bits.clone();
    out.zeta_superset_in_place();
    out
}

#[inline]
pub fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

/// The full set `[n]`.
#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Elements of `m` as 1-based coordinates, increasing.
pub fn elements(m: Mask) -> impl Iterator<Item = usize> {
    BitIter(u64::from(m)).map(|b| b as usize + 1)
}

/// Lexicographic comparison of the increasing element lists of two sets.
pub fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    // Both lists agree below `low`. The owner of `low` is smaller unless the
    // other list has already ended there (a proper prefix sorts first).
    let low = diff & diff.wrapping_neg();
    let above = !(low | (low - 1));
    let (owner_is_a, other) = if a & low != 0 { (true, b) } else { (false, a) };
    let owner_smaller = other & above != 0;
    if owner_is_a == owner_smaller {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Canonical set order: by size, then lexicographic.
pub fn canonical_cmp(a: Mask, b: Mask) -> Ordering {
    popcount(a).cmp(&popcount(b)).then_with(|| lex_cmp(a, b))
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn sets_of_size(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    (0..n)
        .combinations(k)
        .map(|c| c.into_iter().fold(0, |m, i| m | (1 << i)))
}

/// All `k`-subsets of `[n]` in increasing numeric order (Gosper's hack).
pub fn masks_of_popcount(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit = 1u64 << n;
    let mut next = (k <= n).then_some((1u64 << k) - 1);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < limit).then_some(succ)
        };
        Some(cur as Mask)
    })
}

/// All subsets of `[n]` of size at most `k`, in canonical order.
pub fn sets_up_to_size(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    (0..=k.min(n)).flat_map(move |s| sets_of_size(n, s))
}

/// All submasks of `t`, in canonical order.
pub fn submasks_canonical(t: Mask) -> Vec<Mask> {
    let mut subs = submasks(t).collect::<Vec<_>>();
    subs.sort_by(|&a, &b| canonical_cmp(a, b));
    subs
}

/// All submasks of `t` in increasing numeric order.
pub fn submasks(t: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == t {
            None
        } else {
            Some((cur.wrapping_sub(t)) & t)
        };
        Some(cur)
    })
}

/// Packs the bits of `x` selected by `t` into the low `|t|` bits.
#[inline]
pub fn compress(x: Mask, t: Mask) -> u32 {
    let mut out = 0;
    let mut bit = 0;
    let mut m = t;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if x & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        m &= m - 1;
    }
    out
}

/// Inverse of [`compress`]: spreads the low `|t|` bits of `idx` onto `t`.
#[inline]
pub fn expand(idx: u32, t: Mask) -> Mask {
    let mut out = 0;
    let mut bit = 0;
    let mut m = t;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if idx >> bit & 1 == 1 {
            out |= low;
        }
        bit += 1;
        m &= m - 1;
    }
    out
}
