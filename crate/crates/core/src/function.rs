// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::bits::{full_mask, BitTable, Mask};
use crate::error::{Error, Result};

/// Largest supported dimension. Transforms allocate `2^n` words.
pub const MAX_DIMENSION: usize = 24;

pub(crate) fn check_dimension(n: usize) -> Result<()> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionCap {
            n,
            cap: MAX_DIMENSION,
        })
    }
}

fn check_mask(n: usize, mask: u64) -> Result<Mask> {
    if mask < (1u64 << n) {
        Ok(mask as Mask)
    } else {
        Err(Error::MaskOutOfRange { mask, n })
    }
}

/// A point `1_S` of the hypercube, identified with the set `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointAssignment {
    n: usize,
    mask: Mask,
}

impl PointAssignment {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self {
            n,
            mask: check_mask(n, mask)?,
        })
    }

    /// Builds a point from its coordinates `(x_1, ..., x_n)`, each 0 or 1.
    pub fn from_coordinates(coords: &[u8]) -> Result<Self> {
        check_dimension(coords.len())?;
        let mut mask = 0;
        for (j, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => mask |= 1 << j,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "coordinate {} has value {c}, expected 0 or 1",
                        j + 1
                    )))
                }
            }
        }
        Ok(Self {
            n: coords.len(),
            mask,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> Mask {
        self.mask
    }

    /// Coordinate `j` (1-based).
    pub fn coordinate(&self, j: usize) -> u8 {
        ((self.mask >> (j - 1)) & 1) as u8
    }
}

/// A truth table `f: {0,1}^n -> {0,1}` with `1 <= n <= MAX_DIMENSION`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BooleanFunction {
    table: BitTable,
}

impl BooleanFunction {
    pub fn from_table(table: BitTable) -> Result<Self> {
        check_dimension(table.n())?;
        Ok(Self { table })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_table(BitTable::zeros(n))
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::from_table(BitTable::ones(n))
    }

    pub fn from_fn(n: usize, f: impl FnMut(Mask) -> bool) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self {
            table: BitTable::from_fn(n, f),
        })
    }

    /// The function whose table is the low `2^n` bits of `bits`, `n <= 6`.
    pub fn from_u64(n: usize, bits: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::DimensionCap { n, cap: 6 });
        }
        check_dimension(n)?;
        Ok(Self {
            table: BitTable::from_u64(n, bits),
        })
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        let n = bits.len().trailing_zeros() as usize;
        if !bits.len().is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "table length {} is not a power of two",
                bits.len()
            )));
        }
        Self::from_fn(n, |i| bits[i as usize])
    }

    /// Indicator function of `members`. Duplicates are allowed.
    pub fn from_support(n: usize, members: &[u64]) -> Result<Self> {
        check_dimension(n)?;
        let mut table = BitTable::zeros(n);
        for &m in members {
            table.set(check_mask(n, m)?, true);
        }
        Ok(Self { table })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn table(&self) -> &BitTable {
        &self.table
    }

    #[inline]
    pub fn get(&self, x: Mask) -> bool {
        self.table.get(x)
    }

    pub fn eval(&self, x: PointAssignment) -> bool {
        debug_assert_eq!(x.n(), self.n());
        self.table.get(x.mask())
    }

    /// `|supp(f)|`.
    pub fn weight(&self) -> u64 {
        self.table.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.table.len() as u64
    }

    pub fn complement(&self) -> Self {
        Self {
            table: self.table.not(),
        }
    }

    pub fn support(&self) -> SetFamily {
        SetFamily {
            n: self.n(),
            members: self.table.iter_ones().collect(),
        }
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroFunction)
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BooleanFunction(n={}, ", self.n())?;
        for b in self.table.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// A family of subsets of `[n]`, members strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetFamily {
    n: usize,
    members: Vec<Mask>,
}

impl SetFamily {
    /// Sorts and deduplicates `members`.
    pub fn new(n: usize, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_dimension(n)?;
        let mut members = members
            .into_iter()
            .map(|m| check_mask(n, m))
            .collect::<Result<Vec<_>>>()?;
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, members })
    }

    /// Every subset of `[n]`.
    pub fn power_set(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self {
            n,
            members: (0..=full_mask(n)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn indicator(&self) -> BooleanFunction {
        let mut table = BitTable::zeros(self.n);
        for &m in &self.members {
            table.set(m, true);
        }
        BooleanFunction { table }
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyFamily)
        } else {
            Ok(())
        }
    }
}

/// Parity of `#{F in family : A ⊆ F}`.
pub fn zeta_superset_parity(family: &SetFamily, a: Mask) -> bool {
    family.members().iter().filter(|&&f| f & a == a).count() % 2 == 1
}
