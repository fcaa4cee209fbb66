//! Direct truth-table encoding.

use rand::Rng;

use crate::bits::Bits;
use crate::boolfun::BooleanFunction;
use crate::error::{Error, Result};

/// A candidate solution encoded as its full `2^n`-bit truth table, kept
/// normalized with `f(0...0) = 0` and `f(1...1) = 1` so the phenotype is
/// globally balanced whenever it is weightwise balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTableGenotype {
    n: usize,
    bits: Bits,
}

impl TruthTableGenotype {
    pub fn new(n: usize, bits: Bits) -> Result<Self> {
        if n == 0 || bits.len() != 1 << n {
            return Err(Error::TableLength { n, got: bits.len() });
        }
        let mut genotype = TruthTableGenotype { n, bits };
        genotype.normalize();
        Ok(genotype)
    }

    /// Uniformly random table with the endpoints forced afterwards.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let bits = Bits::from_fn(1 << n, |_| rng.random::<bool>());
        TruthTableGenotype::new(n, bits).unwrap()
    }

    /// Forces the endpoint values back in place.
    pub fn normalize(&mut self) {
        self.bits.set(0, false);
        let last = self.bits.len() - 1;
        self.bits.set(last, true);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub(crate) fn bits_mut(&mut self) -> &mut Bits {
        &mut self.bits
    }

    pub fn decode(&self) -> BooleanFunction {
        BooleanFunction::new(self.n, self.bits.clone()).unwrap()
    }
}
