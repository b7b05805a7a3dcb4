// SPDX-License-Identifier: Apache-2.0

//! Algebraic normal form over GF(2).

use serde::{Deserialize, Serialize};

use crate::bits::{full_mask, popcount, sets_up_to_size, BitTable, Mask};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// `f(x) = Σ_S c_S x^S (mod 2)` with `x^S = Π_{i ∈ S} x_i`; bit `S` of
/// the table is `c_S`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2Polynomial {
    coeffs: BitTable,
}

impl F2Polynomial {
    pub fn from_coefficients(coeffs: BitTable) -> Self {
        Self { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    pub fn coefficients(&self) -> &BitTable {
        &self.coeffs
    }

    pub fn coefficient(&self, s: Mask) -> bool {
        self.coeffs.get(s)
    }

    /// Monomials with coefficient 1, as increasing masks.
    pub fn monomials(&self) -> Vec<Mask> {
        self.coeffs.iter_ones().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// `deg_F2`; errors on the zero polynomial.
    pub fn degree(&self) -> Result<usize> {
        self.coeffs
            .iter_ones()
            .map(popcount)
            .max()
            .ok_or(Error::ZeroFunction)
    }

    /// The function this polynomial computes. The mod-2 subset transform is
    /// an involution, so this is the same transform as [`anf`].
    pub fn evaluate(&self) -> Result<BooleanFunction> {
        let mut t = self.coeffs.clone();
        t.zeta_subset_in_place();
        BooleanFunction::from_table(t)
    }
}

impl std::fmt::Debug for F2Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("F2Polynomial")
            .field("n", &self.n())
            .field("monomials", &self.monomials())
            .finish()
    }
}

/// ANF coefficients `c_S = Σ_{T ⊆ S} f(1_T) mod 2`.
pub fn anf(f: &BooleanFunction) -> F2Polynomial {
    let mut coeffs = f.table().clone();
    coeffs.zeta_subset_in_place();
    F2Polynomial { coeffs }
}

pub fn f2_degree(p: &F2Polynomial) -> Result<usize> {
    p.degree()
}

/// A set `S` with `|S| <= vc` whose complement monomial `x^{[n] \ S}` has
/// coefficient 1, certifying `deg_F2(f) >= n - vc`.
///
/// Candidates are tried by size, then lexicographically. `vc` should be
/// the VC-dimension of `supp(f)`; for such `vc` a witness always exists,
/// and [`Error::WitnessNotFound`] means an internal bug or a wrong `vc`.
pub fn monomial_witness(f: &BooleanFunction, vc: usize) -> Result<Mask> {
    f.require_nonzero()?;
    let n = f.n();
    let p = anf(f);
    let full = full_mask(n);
    sets_up_to_size(n, vc)
        .find(|&s| p.coefficient(full ^ s))
        .ok_or_else(|| {
            Error::WitnessNotFound(format!("no S with |S| <= {vc} has c_(S^c) = 1 (n = {n})"))
        })
}

/// For `f` supported on sets of size at most `r`, checks
/// `deg_F2(f) >= n - r`.
pub fn weight_bounded_degree_check(f: &BooleanFunction, r: usize) -> Result<bool> {
    f.require_nonzero()?;
    if let Some(m) = f.table().iter_ones().find(|&m| popcount(m) > r) {
        return Err(Error::PreconditionViolated(format!(
            "support member {m} has weight {} > {r}",
            popcount(m)
        )));
    }
    let deg = anf(f).degree()?;
    Ok(deg + r >= f.n())
}
