// SPDX-License-Identifier: Apache-2.0

//! Named functions and seeded random generators.
//!
//! Random functions come from `ChaCha8Rng::seed_from_u64(seed)`, drawing
//! one value per table index (or per monomial) in increasing index order,
//! so a `(parameters, seed)` pair names the same function on every
//! platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebraic::F2Polynomial;
use crate::bits::{full_mask, popcount, BitTable, Mask};
use crate::error::{Error, Result};
use crate::function::{check_dimension, BooleanFunction, PointAssignment};

/// A subcube `{x : x_j = v for every fix (j, v)}`, coordinates 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcubeSpec {
    n: usize,
    fixes: Vec<(usize, bool)>,
}

impl SubcubeSpec {
    pub fn new(n: usize, mut fixes: Vec<(usize, bool)>) -> Result<Self> {
        check_dimension(n).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        fixes.sort_unstable();
        for w in fixes.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidSpec(format!(
                    "coordinate {} fixed twice",
                    w[0].0
                )));
            }
        }
        if let Some(&(j, _)) = fixes.iter().find(|(j, _)| !(1..=n).contains(j)) {
            return Err(Error::InvalidSpec(format!(
                "coordinate {j} is outside 1..={n}"
            )));
        }
        Ok(Self { n, fixes })
    }

    /// Parses `"j=v,j=v,..."`; the empty string is the whole cube.
    pub fn parse(n: usize, fixes: &str) -> Result<Self> {
        let parsed = fixes
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|item| {
                let (j, v) = item
                    .split_once('=')
                    .ok_or_else(|| Error::InvalidSpec(format!("expected j=v, got {item:?}")))?;
                let j = j
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad coordinate in {item:?}")))?;
                let v = match v.trim() {
                    "0" => false,
                    "1" => true,
                    _ => return Err(Error::InvalidSpec(format!("bad value in {item:?}"))),
                };
                Ok((j, v))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, parsed)
    }

    /// Builds a subcube from its fixed-coordinate mask and their values.
    pub fn from_masks(n: usize, fixed: Mask, values: Mask) -> Result<Self> {
        let fixes = (0..n)
            .filter(|&i| fixed >> i & 1 == 1)
            .map(|i| (i + 1, values >> i & 1 == 1))
            .collect();
        Self::new(n, fixes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fixes(&self) -> &[(usize, bool)] {
        &self.fixes
    }

    /// Co-dimension `k`.
    pub fn codimension(&self) -> usize {
        self.fixes.len()
    }

    pub fn fixed_mask(&self) -> Mask {
        self.fixes.iter().fold(0, |m, &(j, _)| m | 1 << (j - 1))
    }

    pub fn values_mask(&self) -> Mask {
        self.fixes
            .iter()
            .filter(|(_, v)| *v)
            .fold(0, |m, &(j, _)| m | 1 << (j - 1))
    }
}

impl fmt::Display for SubcubeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .fixes
            .iter()
            .map(|&(j, v)| format!("{j}={}", u8::from(v)))
            .collect::<Vec<_>>();
        f.write_str(&parts.join(","))
    }
}

/// Indicator of a subcube.
pub fn subcube(spec: &SubcubeSpec) -> Result<BooleanFunction> {
    let fixed = spec.fixed_mask();
    let values = spec.values_mask();
    BooleanFunction::from_fn(spec.n, |x| x & fixed == values)
}

/// Returns the subcube `supp(f)` equals, if it is one.
pub fn as_subcube(f: &BooleanFunction) -> Option<SubcubeSpec> {
    let mut members = f.table().iter_ones();
    let first = members.next()?;
    let (all, any) = members.fold((first, first), |(a, o), m| (a & m, o | m));
    let fixed = full_mask(f.n()) & !(all ^ any);
    let expected = 1u64 << (f.n() - popcount(fixed));
    (f.weight() == expected)
        .then(|| SubcubeSpec::from_masks(f.n(), fixed, all).expect("masks come from f"))
}

/// Support of the four-variable equality example, as `(x_1, ..., x_4)`.
pub const EXAMPLE_N4_SUPPORT: [[u8; 4]; 8] = [
    [0, 0, 1, 1],
    [0, 1, 0, 0],
    [0, 1, 0, 1],
    [0, 1, 1, 1],
    [1, 0, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 1, 1],
    [1, 1, 0, 0],
];

/// The real polynomial `x1 + x2 + x3 x4 - x1 x2 - x1 x4 - x2 x3`.
pub fn example_n4_polynomial(x: PointAssignment) -> i64 {
    let c = |j| i64::from(x.coordinate(j));
    c(1) + c(2) + c(3) * c(4) - c(1) * c(2) - c(1) * c(4) - c(2) * c(3)
}

/// A non-subcube function with `deg = VC = 2` at `n = 4`.
///
/// Built from the listed support; panics if the polynomial disagrees with
/// it at any of the 16 points.
pub fn example_n4() -> BooleanFunction {
    let members = EXAMPLE_N4_SUPPORT
        .iter()
        .map(|p| {
            u64::from(
                PointAssignment::from_coordinates(p)
                    .expect("valid point")
                    .mask(),
            )
        })
        .collect::<Vec<_>>();
    let f = BooleanFunction::from_support(4, &members).expect("valid support");
    for x in 0..16 {
        let p = PointAssignment::new(4, x).expect("valid point");
        let value = example_n4_polynomial(p);
        assert!(
            value == i64::from(f.eval(p)),
            "polynomial gives {value} at {x}, support says {}",
            f.eval(p)
        );
    }
    f
}

/// The 15-variable function with `s(f) = VC(f) = 7`, so `VC + s < n`.
///
/// In `{0,1}^9` remove the three disjoint 3-dimensional subcubes
/// `{0,1}^3 × 0^6`, `0^3 × {0,1}^3 × 1^3` and `1^6 × {0,1}^3`; then pad
/// coordinates 10..=15 with zeros.
pub fn counterexample_n15() -> BooleanFunction {
    let cubes = [
        SubcubeSpec::parse(9, "4=0,5=0,6=0,7=0,8=0,9=0"),
        SubcubeSpec::parse(9, "1=0,2=0,3=0,7=1,8=1,9=1"),
        SubcubeSpec::parse(9, "1=1,2=1,3=1,4=1,5=1,6=1"),
    ]
    .map(|s| s.expect("static spec"));
    let removed = |x: Mask| cubes.iter().any(|c| x & c.fixed_mask() == c.values_mask());
    BooleanFunction::from_fn(15, |x| x < 1 << 9 && !removed(x)).expect("n = 15 is valid")
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "density {p} is outside [0, 1]"
        )))
    }
}

/// Each table bit set independently with probability `p`.
pub fn random_function(n: usize, p: f64, seed: u64) -> Result<BooleanFunction> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BooleanFunction::from_fn(n, |_| rng.gen_bool(p))
}

/// A non-zero function with `deg_F2 <= d`: every monomial of size at most
/// `d` gets a fair coin for its coefficient, redrawing if all are zero.
pub fn random_low_f2_degree(n: usize, d: usize, seed: u64) -> Result<BooleanFunction> {
    check_dimension(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let coeffs = BitTable::from_fn(n, |s| popcount(s) <= d && rng.gen::<bool>());
        if !coeffs.is_zero() {
            return F2Polynomial::from_coefficients(coeffs).evaluate();
        }
    }
}

/// A named construction, as selected on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum Construction {
    Subcube(SubcubeSpec),
    ExampleN4,
    CounterexampleN15,
    Random { n: usize, p: f64, seed: u64 },
    RandomLowF2Degree { n: usize, d: usize, seed: u64 },
}

impl Construction {
    pub fn build(&self) -> Result<BooleanFunction> {
        match self {
            Construction::Subcube(spec) => subcube(spec),
            Construction::ExampleN4 => Ok(example_n4()),
            Construction::CounterexampleN15 => Ok(counterexample_n15()),
            Construction::Random { n, p, seed } => random_function(*n, *p, *seed),
            Construction::RandomLowF2Degree { n, d, seed } => random_low_f2_degree(*n, *d, *seed),
        }
    }
}

impl FromStr for SubcubeSpec {
    type Err = Error;

    /// `"n:j=v,..."`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, fixes) = s.split_once(':').unwrap_or((s, ""));
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad dimension in {s:?}")))?;
        Self::parse(n, fixes)
    }
}
