//! Walsh-Hadamard transform and nonlinearity.

use super::{dot, BooleanFunction};

/// The full Walsh-Hadamard spectrum of a function: `coefficients[a]`
/// measures the correlation between `f` and the linear function `a·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    coefficients: Vec<i64>,
}

impl WalshSpectrum {
    pub fn n(&self) -> usize {
        self.n
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

    /// Sum of squared coefficients; Parseval fixes it at `2^(2n)`.
    pub fn energy(&self) -> u128 {
        self.coefficients
            .iter()
            .map(|&w| (w as i128 * w as i128) as u128)
            .sum()
    }
}

impl BooleanFunction {
    /// Walsh-Hadamard spectrum via the in-place butterfly, `n·2^n` steps.
    pub fn walsh_spectrum(&self) -> WalshSpectrum {
        let len = self.len();
        let mut data: Vec<i64> = (0..len).map(|x| 1 - 2 * self.get(x) as i64).collect();
        let mut half = 1;
        while half < len {
            let step = half * 2;
            for block in (0..len).step_by(step) {
                for i in block..block + half {
                    let (u, v) = (data[i], data[i + half]);
                    data[i] = u + v;
                    data[i + half] = u - v;
                }
            }
            half = step;
        }
        WalshSpectrum {
            n: self.n(),
            coefficients: data,
        }
    }

    /// Reference double-loop transform, kept for cross-checking the butterfly.
    pub fn walsh_spectrum_naive(&self) -> WalshSpectrum {
        let len = self.len();
        let coefficients = (0..len)
            .map(|a| {
                (0..len)
                    .map(|x| if self.get(x) ^ dot(a, x) { -1 } else { 1 })
                    .sum()
            })
            .collect();
        WalshSpectrum {
            n: self.n(),
            coefficients,
        }
    }

    /// Minimum Hamming distance to the `2^(n+1)` affine functions,
    /// `2^(n-1) - max|W_f| / 2`.
    pub fn nonlinearity(&self) -> u32 {
        let spectrum = self.walsh_spectrum();
        ((self.len() as i64 - spectrum.max_abs()) / 2) as u32
    }
}
