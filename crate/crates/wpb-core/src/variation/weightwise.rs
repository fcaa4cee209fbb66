//! Balanced crossover and swap mutation for the weightwise encoding. Every
//! operator preserves the half-ones weight of each slice, so offspring stay
//! inside the WPB space by construction.

use rand::Rng;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::genotypes::WeightwiseGenotype;

fn check_pair(a: &WeightwiseGenotype, b: &WeightwiseGenotype) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::VariableCountMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// Counter-based balanced crossover, applied independently per slice.
///
/// The slice is scanned left to right copying each bit from a uniformly
/// chosen parent while counting the ones and zeros emitted; as soon as one
/// symbol reaches its quota (half the slice), the remaining positions are
/// forced to the other symbol.
pub fn counter_based_crossover<R: Rng + ?Sized>(
    a: &WeightwiseGenotype,
    b: &WeightwiseGenotype,
    rng: &mut R,
) -> Result<WeightwiseGenotype> {
    check_pair(a, b)?;
    let mut child = a.clone();
    for k in 1..a.n() {
        let (sa, sb) = (a.slice(k), b.slice(k));
        let len = sa.len();
        let quota = len / 2;
        let out = &mut child.slices_mut()[k - 1];
        let (mut ones, mut zeros) = (0usize, 0usize);
        for i in 0..len {
            let bit = if ones == quota {
                false
            } else if zeros == quota {
                true
            } else if rng.random::<bool>() {
                sa.get(i)
            } else {
                sb.get(i)
            };
            out.set(i, bit);
            if bit {
                ones += 1;
            } else {
                zeros += 1;
            }
        }
    }
    Ok(child)
}

/// Map-of-ones balanced crossover, applied independently per slice.
///
/// Each parent slice is reduced to the list of its one-positions. For every
/// one-slot of the child, the position is taken from a uniformly chosen
/// parent's list at that slot; on a collision the other parent's entry for
/// the slot is tried, and only if both are already present does a uniformly
/// chosen still-zero position fill in.
pub fn map_of_ones_crossover<R: Rng + ?Sized>(
    a: &WeightwiseGenotype,
    b: &WeightwiseGenotype,
    rng: &mut R,
) -> Result<WeightwiseGenotype> {
    check_pair(a, b)?;
    let mut child = a.clone();
    for k in 1..a.n() {
        let ones_a: Vec<usize> = a.slice(k).ones().collect();
        let ones_b: Vec<usize> = b.slice(k).ones().collect();
        let len = a.slice(k).len();
        let out = &mut child.slices_mut()[k - 1];
        *out = Bits::zeros(len);
        for slot in 0..len / 2 {
            let mut position = if rng.random::<bool>() {
                ones_a[slot]
            } else {
                ones_b[slot]
            };
            if out.get(position) {
                position = if position == ones_a[slot] {
                    ones_b[slot]
                } else {
                    ones_a[slot]
                };
            }
            if out.get(position) {
                // rejection-sample a free position; at most half are taken
                position = loop {
                    let p = rng.random_range(0..len);
                    if !out.get(p) {
                        break p;
                    }
                };
            }
            out.set(position, true);
        }
    }
    Ok(child)
}

/// Trigger granularity of [`swap_mutation`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SwapMode {
    /// Every slice position independently triggers a swap with probability
    /// `p_mut`.
    #[default]
    PerPosition,
    /// Each slice triggers at most one swap, with probability `p_mut`.
    PerSlice,
    /// One value-exchanging swap at a genotype-wide uniform position; with
    /// probability 1/2 the mutation keeps swapping inside the same slice.
    /// This is the steady-state engine's operator: concentrating the
    /// perturbation on a single weight class walks fitness plateaus and
    /// occasionally crosses them with a compound move.
    SliceChain,
}

/// Swap-based mutation: exchanged positions stay inside their slice, so
/// every slice weight is preserved.
pub fn swap_mutation<R: Rng + ?Sized>(
    g: &WeightwiseGenotype,
    p_mut: f64,
    mode: SwapMode,
    rng: &mut R,
) -> WeightwiseGenotype {
    let mut child = g.clone();
    if mode == SwapMode::SliceChain {
        let total: usize = child.slices().iter().map(|s| s.len()).sum();
        let mut pick = rng.random_range(0..total);
        for slice in child.slices_mut() {
            if pick < slice.len() {
                let len = slice.len();
                loop {
                    let value = slice.get(pick);
                    let opposite: Vec<usize> =
                        (0..len).filter(|&j| slice.get(j) != value).collect();
                    let j = opposite[rng.random_range(0..opposite.len())];
                    slice.swap(pick, j);
                    if !rng.random_bool(0.5) {
                        break;
                    }
                    pick = rng.random_range(0..len);
                }
                break;
            }
            pick -= slice.len();
        }
        return child;
    }
    for slice in child.slices_mut() {
        let len = slice.len();
        match mode {
            SwapMode::PerPosition => {
                for i in 0..len {
                    if rng.random_bool(p_mut) {
                        let j = rng.random_range(0..len);
                        slice.swap(i, j);
                    }
                }
            }
            SwapMode::PerSlice => {
                if rng.random_bool(p_mut) {
                    let i = rng.random_range(0..len);
                    let j = rng.random_range(0..len);
                    slice.swap(i, j);
                }
            }
            SwapMode::SliceChain => unreachable!(),
        }
    }
    child
}
