//! Weightwise balanced encoding: one balanced bit string per weight class.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::Bits;
use crate::boolfun::{binomial, BooleanFunction, WeightClassIndex};
use crate::error::{Error, Result};

/// A chromosome of `n-1` bit strings, one per weight class `1..n-1`, each of
/// length `binomial(n, k)` and weight exactly half its length. Decoding
/// always yields a WPB function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightwiseGenotype {
    n: usize,
    slices: Vec<Bits>,
}

impl WeightwiseGenotype {
    pub fn new(n: usize, slices: Vec<Bits>) -> Result<Self> {
        if !n.is_power_of_two() || n < 2 {
            return Err(Error::InfeasibleVariableCount(n));
        }
        if slices.len() != n - 1 {
            return Err(Error::InvalidConfig(format!(
                "expected {} slices, got {}",
                n - 1,
                slices.len()
            )));
        }
        for (i, slice) in slices.iter().enumerate() {
            let k = i + 1;
            let expected = binomial(n, k);
            if slice.len() != expected {
                return Err(Error::SliceLength {
                    k,
                    expected,
                    got: slice.len(),
                });
            }
            if slice.count_ones() != expected / 2 {
                return Err(Error::SliceWeight {
                    k,
                    expected: expected / 2,
                    got: slice.count_ones(),
                });
            }
        }
        Ok(WeightwiseGenotype { n, slices })
    }

    /// Uniformly random genotype: each slice is a shuffle of half ones.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        assert!(n.is_power_of_two() && n >= 2);
        let slices = (1..n)
            .map(|k| {
                let len = binomial(n, k);
                let mut raw: Vec<bool> = (0..len).map(|i| i < len / 2).collect();
                raw.shuffle(rng);
                Bits::from_bools(&raw)
            })
            .collect();
        WeightwiseGenotype { n, slices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The balanced bit string for weight class `k`, `1 <= k <= n-1`.
    pub fn slice(&self, k: usize) -> &Bits {
        &self.slices[k - 1]
    }

    pub fn slices(&self) -> &[Bits] {
        &self.slices
    }

    pub(crate) fn slices_mut(&mut self) -> &mut [Bits] {
        &mut self.slices
    }

    /// Phenotype: `f(0...0) = 0`, `f(1...1) = 1`, and within each weight
    /// class the slice bits in lexicographic class order.
    pub fn decode(&self, idx: &WeightClassIndex) -> BooleanFunction {
        assert_eq!(self.n, idx.n());
        let mut f = BooleanFunction::zero(self.n);
        for k in 1..self.n {
            let slice = self.slice(k);
            for (i, &x) in idx.class(k).iter().enumerate() {
                f.set(x as usize, slice.get(i));
            }
        }
        f.set((1 << self.n) - 1, true);
        f
    }

    /// Inverse of [`WeightwiseGenotype::decode`]; fails when some
    /// restriction of `f` is not balanced.
    pub fn encode(f: &BooleanFunction, idx: &WeightClassIndex) -> Result<Self> {
        let slices = (1..f.n()).map(|k| idx.restriction(f, k)).collect();
        WeightwiseGenotype::new(f.n(), slices)
    }

    /// Comma-separated binary slices, e.g. `1001,101010,1001`.
    pub fn to_string_repr(&self) -> String {
        self.slices
            .iter()
            .map(|s| s.to_binary_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let slices = s
            .split(',')
            .map(Bits::parse_binary)
            .collect::<Result<Vec<_>>>()?;
        WeightwiseGenotype::new(n, slices)
    }
}
