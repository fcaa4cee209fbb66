//! Restricted Walsh-Hadamard transform over a weight class and the derived
//! measures: restricted nonlinearity, restricted weight, unbalancedness and
//! the weightwise perfect balance predicate.
//!
//! There is no divide-and-conquer transform here: a weight class has
//! `binomial(n, k)` members, which is not a power of two in general, so the
//! coefficients are summed term by term. The packed sign matrix in
//! [`SignTable`] recovers throughput by turning each coefficient into one
//! XOR + popcount.

use super::{binomial, dot, BooleanFunction, SignTable, WeightClassIndex};
use crate::error::Result;

/// Walsh-Hadamard coefficients of `f` restricted to `E_{n,k}`, indexed by
/// all `2^n` coefficient vectors `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedSpectrum {
    n: usize,
    k: usize,
    coefficients: Vec<i64>,
}

impl RestrictedSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coefficient(&self, a: usize) -> i64 {
        self.coefficients[a]
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn max_abs(&self) -> i64 {
        self.coefficients.iter().map(|w| w.abs()).max().unwrap()
    }

    /// Sum of squared coefficients; the restricted analogue of Parseval
    /// fixes it at `2^n · binomial(n, k)`.
    pub fn energy(&self) -> u128 {
        self.coefficients
            .iter()
            .map(|&w| (w as i128 * w as i128) as u128)
            .sum()
    }
}

impl BooleanFunction {
    /// Restricted spectrum computed naively over the class members.
    pub fn restricted_spectrum(
        &self,
        k: usize,
        idx: &WeightClassIndex,
    ) -> Result<RestrictedSpectrum> {
        idx.check_k(k)?;
        let class = idx.class(k);
        let coefficients = (0..self.len())
            .map(|a| {
                class
                    .iter()
                    .map(|&x| {
                        if self.get(x as usize) ^ dot(a, x as usize) {
                            -1
                        } else {
                            1
                        }
                    })
                    .sum()
            })
            .collect();
        Ok(RestrictedSpectrum {
            n: self.n(),
            k,
            coefficients,
        })
    }

    /// Bit-parallel restricted spectrum; identical values to
    /// [`BooleanFunction::restricted_spectrum`].
    pub fn restricted_spectrum_fast(
        &self,
        idx: &WeightClassIndex,
        signs: &SignTable,
    ) -> RestrictedSpectrum {
        let restriction = idx.restriction(self, signs.k());
        let size = signs.class_size() as i64;
        let coefficients = (0..self.len())
            .map(|a| size - 2 * restriction.xor_count_ones(signs.row(a)) as i64)
            .collect();
        RestrictedSpectrum {
            n: self.n(),
            k: signs.k(),
            coefficients,
        }
    }

    /// Restricted nonlinearity `(binomial(n,k) - max_a |W_{f(k)}(a)|) / 2`:
    /// the distance from the restriction of `f` to `E_{n,k}` to the nearest
    /// n-variable affine function, measured over the class.
    pub fn restricted_nonlinearity(&self, k: usize, idx: &WeightClassIndex) -> Result<u32> {
        let spectrum = self.restricted_spectrum(k, idx)?;
        Ok(((idx.class_size(k) as i64 - spectrum.max_abs()) / 2) as u32)
    }

    /// Hamming weight of the restriction, recovered from the null-vector
    /// coefficient as `(#E_{n,k} - W_{f(k)}(0)) / 2`.
    pub fn restricted_weight(&self, k: usize, idx: &WeightClassIndex) -> Result<u32> {
        idx.check_k(k)?;
        let w0: i64 = idx
            .class(k)
            .iter()
            .map(|&x| if self.get(x as usize) { -1 } else { 1 })
            .sum();
        Ok(((idx.class_size(k) as i64 - w0) / 2) as u32)
    }

    /// Deviation of the k-restriction from balance,
    /// `|#E_{n,k}/2 - w_H(f_(k))|`.
    pub fn unbalancedness(&self, k: usize, idx: &WeightClassIndex) -> Result<u32> {
        idx.check_k(k)?;
        let half = idx.class_size(k) as i64 / 2;
        let weight = self.table().and_count_ones(idx.mask(k)) as i64;
        Ok((half - weight).unsigned_abs() as u32)
    }

    /// Sum of the unbalancedness of every class `1 <= k <= n-1`.
    pub fn penalty(&self, idx: &WeightClassIndex) -> u32 {
        (1..self.n())
            .map(|k| self.unbalancedness(k, idx).unwrap())
            .sum()
    }

    /// Weightwise perfectly balanced: every restriction of weight
    /// `1..n-1` is balanced, `f(0...0) = 0` and `f(1...1) = 1`.
    pub fn is_wpb(&self, idx: &WeightClassIndex) -> bool {
        !self.get(0) && self.get(self.len() - 1) && self.penalty(idx) == 0
    }
}

/// Restricted covering-radius bound,
/// `floor(binomial(n,k)/2 - sqrt(binomial(n,k))/2)`, evaluated in exact
/// integer arithmetic.
pub fn restricted_bound(n: usize, k: usize) -> Result<u32> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(crate::error::Error::WeightClassOutOfRange { n, k });
    }
    let c = binomial(n, k) as u64;
    // largest m with 2m <= c - sqrt(c), i.e. (c - 2m)^2 >= c
    let mut m = 0u64;
    while c >= 2 * (m + 1) && (c - 2 * (m + 1)).pow(2) as u128 >= c as u128 {
        m += 1;
    }
    Ok(m as u32)
}
