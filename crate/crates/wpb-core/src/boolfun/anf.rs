//! Algebraic normal form via the Möbius transform.

use super::BooleanFunction;
use crate::bits::Bits;

/// Fast Möbius transform: `out[I] = XOR of v[x] over all x with
/// supp(x) ⊆ I`. The transform is an involution.
pub fn mobius_transform(v: &Bits) -> Bits {
    let len = v.len();
    debug_assert!(len.is_power_of_two());
    let mut data = v.clone();
    let mut half = 1;
    while half < len {
        let step = half * 2;
        for block in (0..len).step_by(step) {
            for i in block..block + half {
                if data.get(i) {
                    data.flip(i + half);
                }
            }
        }
        half = step;
    }
    data
}

/// The multilinear polynomial over GF(2) representing a Boolean function.
/// Coefficient index `I` is read as a subset of variables in the same
/// encoding as truth-table input indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnfPolynomial {
    n: usize,
    coefficients: Bits,
}

impl AnfPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, monomial: usize) -> bool {
        self.coefficients.get(monomial)
    }

    pub fn coefficients(&self) -> &Bits {
        &self.coefficients
    }

    /// Number of monomials with a nonzero coefficient.
    pub fn monomial_count(&self) -> usize {
        self.coefficients.count_ones()
    }

    /// Size of the largest monomial; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coefficients
            .ones()
            .map(|monomial| monomial.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

impl BooleanFunction {
    /// ANF coefficients recovered from the truth table by Möbius inversion.
    pub fn anf(&self) -> AnfPolynomial {
        AnfPolynomial {
            n: self.n(),
            coefficients: mobius_transform(self.table()),
        }
    }

    pub fn algebraic_degree(&self) -> usize {
        self.anf().degree()
    }
}
