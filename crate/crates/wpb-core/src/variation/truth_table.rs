//! Classic operators for the truth-table encoding. Neither preserves the
//! Hamming weight; both re-normalize the endpoints afterwards.

use rand::Rng;

use crate::error::{Error, Result};
use crate::genotypes::TruthTableGenotype;

/// One-point crossover: the child copies `a` up to a uniformly chosen cut
/// in `[1, 2^n - 1]` and `b` from there on.
pub fn one_point_crossover<R: Rng + ?Sized>(
    a: &TruthTableGenotype,
    b: &TruthTableGenotype,
    rng: &mut R,
) -> Result<TruthTableGenotype> {
    if a.n() != b.n() {
        return Err(Error::VariableCountMismatch(a.n(), b.n()));
    }
    let len = a.bits().len();
    let cut = rng.random_range(1..len);
    let mut child = a.clone();
    {
        let bits = child.bits_mut();
        for i in cut..len {
            bits.set(i, b.bits().get(i));
        }
    }
    child.normalize();
    Ok(child)
}

/// With probability `p_mut`, flips one uniformly chosen position, then
/// restores the endpoints.
pub fn flip_mutation<R: Rng + ?Sized>(
    g: &TruthTableGenotype,
    p_mut: f64,
    rng: &mut R,
) -> TruthTableGenotype {
    let mut child = g.clone();
    if rng.random_bool(p_mut) {
        let i = rng.random_range(0..child.bits().len());
        child.bits_mut().flip(i);
        child.normalize();
    }
    child
}

/// Expected positions flipped by one [`scattered_flip_mutation`] trigger.
const SCATTER_RATE: f64 = 0.25;

/// With probability `p_mut`, flips each position independently at a rate of
/// `0.25 / 2^n`, then restores the endpoints.
///
/// The steady-state engine uses this instead of the single flip: once the
/// population is weightwise balanced, a lone flip always breaks a slice and
/// the resulting child never survives the tournament, so the search stops
/// moving. The occasional multi-bit flip can exchange a one and a zero
/// inside the same weight class, which keeps balance-preserving moves
/// reachable.
pub fn scattered_flip_mutation<R: Rng + ?Sized>(
    g: &TruthTableGenotype,
    p_mut: f64,
    rng: &mut R,
) -> TruthTableGenotype {
    let mut child = g.clone();
    if rng.random_bool(p_mut) {
        let len = child.bits().len();
        for i in 0..len {
            if rng.random_bool(SCATTER_RATE / len as f64) {
                child.bits_mut().flip(i);
            }
        }
        child.normalize();
    }
    child
}
