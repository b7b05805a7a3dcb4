// SPDX-License-Identifier: Apache-2.0

//! Exact Walsh-Hadamard analysis of 0/1-valued functions.

use serde::{Deserialize, Serialize};

use crate::bits::{popcount, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Unnormalized Fourier coefficients: `coeffs[S] = 2^n * f̂(S)
/// = Σ_x f(x) (-1)^{|S ∩ x|}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierSpectrum {
    n: usize,
    coeffs: Vec<i32>,
}

impl FourierSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The common denominator `2^n` of the true coefficients.
    pub fn scale(&self) -> u64 {
        1 << self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn coeff(&self, s: Mask) -> i32 {
        self.coeffs[s as usize]
    }

    /// Sets `S` with a non-zero coefficient, increasing.
    pub fn support(&self) -> impl Iterator<Item = Mask> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, _)| s as Mask)
    }

    /// `|supp(f̂)|`.
    pub fn support_size(&self) -> u64 {
        self.coeffs.iter().filter(|&&c| c != 0).count() as u64
    }

    /// `deg(f)`: the largest `|S|` with a non-zero coefficient.
    pub fn degree(&self) -> Result<usize> {
        self.support()
            .map(popcount)
            .max()
            .ok_or(Error::ZeroFunction)
    }

    /// Inverts the transform, requiring every value to be exactly `0` or `2^n`.
    pub fn inverse(&self) -> Result<BooleanFunction> {
        let mut values = self
            .coeffs
            .iter()
            .map(|&c| i64::from(c))
            .collect::<Vec<_>>();
        butterfly(&mut values);
        let scale = 1i64 << self.n;
        let mut bad = None;
        let f = BooleanFunction::from_fn(self.n, |x| match values[x as usize] {
            0 => false,
            v if v == scale => true,
            v => {
                bad.get_or_insert((x, v));
                false
            }
        })?;
        match bad {
            None => Ok(f),
            Some((x, v)) => Err(Error::PreconditionViolated(format!(
                "spectrum is not Boolean: 2^n * f({x}) = {v}"
            ))),
        }
    }
}

fn butterfly<T>(values: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let mut half = 1;
    while half < values.len() {
        for chunk in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// Fast Walsh-Hadamard transform in exact integers.
pub fn wht(f: &BooleanFunction) -> FourierSpectrum {
    let mut coeffs = f.table().iter().map(i32::from).collect::<Vec<_>>();
    butterfly(&mut coeffs);
    FourierSpectrum { n: f.n(), coeffs }
}

/// `deg(f)`; errors on the zero function.
pub fn fourier_degree(spec: &FourierSpectrum) -> Result<usize> {
    spec.degree()
}

pub fn spectral_support_size(spec: &FourierSpectrum) -> u64 {
    spec.support_size()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyReport {
    pub support_size: u64,
    pub spectral_support_size: u64,
    /// `log2 |supp f| + log2 |supp f̂|`, for display only.
    pub lhs_bits: f64,
    /// Decided exactly as `|supp f| * |supp f̂| >= 2^n`.
    pub holds: bool,
    pub equality: bool,
}

/// Checks `log2 |supp f| + log2 |supp f̂| >= n` for non-zero `f`.
pub fn check_uncertainty(f: &BooleanFunction) -> Result<UncertaintyReport> {
    f.require_nonzero()?;
    let spec = wht(f);
    Ok(uncertainty_from_parts(
        f.n(),
        f.weight(),
        spec.support_size(),
    ))
}

pub(crate) fn uncertainty_from_parts(n: usize, support: u64, spectral: u64) -> UncertaintyReport {
    let product = u128::from(support) * u128::from(spectral);
    let bound = 1u128 << n;
    UncertaintyReport {
        support_size: support,
        spectral_support_size: spectral,
        lhs_bits: (support as f64).log2() + (spectral as f64).log2(),
        holds: product >= bound,
        equality: product == bound,
    }
}
