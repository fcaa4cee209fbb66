//! Independent brute-force ground truth for small instances.
//!
//! Nothing here goes through the spectral code paths: distances are counted
//! directly against every affine function, and the census enumerates
//! genotypes (per-slice balanced assignments) rather than truth tables, so
//! the n=4 space is exactly 720 candidates instead of 65536.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::bits::Bits;
use crate::boolfun::{dot, BooleanFunction, WeightClassIndex};
use crate::error::{Error, Result};
use crate::genotypes::WeightwiseGenotype;

/// Minimum Hamming distance from the k-restriction of `f` to all
/// `2^(n+1)` affine functions, counted term by term.
pub fn brute_force_restricted_nl(
    f: &BooleanFunction,
    k: usize,
    idx: &WeightClassIndex,
) -> Result<u32> {
    idx.check_k(k)?;
    let mut best = u32::MAX;
    for a in 0..f.len() {
        for b in [false, true] {
            let mut distance = 0u32;
            for &x in idx.class(k) {
                if f.get(x as usize) != (dot(a, x as usize) ^ b) {
                    distance += 1;
                }
            }
            best = best.min(distance);
        }
    }
    Ok(best)
}

/// Minimum Hamming distance from `f` to all affine functions over the
/// whole input space.
pub fn brute_force_nonlinearity(f: &BooleanFunction) -> u32 {
    let mut best = u32::MAX;
    for a in 0..f.len() {
        for b in [false, true] {
            let mut distance = 0u32;
            for x in 0..f.len() {
                if f.get(x) != (dot(a, x) ^ b) {
                    distance += 1;
                }
            }
            best = best.min(distance);
        }
    }
    best
}

/// One enumerated WPB function with its brute-forced nonlinearity profile
/// `nl_1..nl_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub table_hex: String,
    pub profile: Vec<u32>,
}

impl CensusEntry {
    /// Weightwise linear: every restriction coincides with an affine
    /// function, i.e. the whole profile is zero.
    pub fn is_linear(&self) -> bool {
        self.profile.iter().all(|&nl| nl == 0)
    }
}

/// The complete enumeration of the WPB functions of a small n.
#[derive(Clone, Debug)]
pub struct WpbCensus {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
}

impl WpbCensus {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn linear_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_linear()).count()
    }

    pub fn profile_histogram(&self) -> BTreeMap<Vec<u32>, usize> {
        let mut histogram = BTreeMap::new();
        for entry in &self.entries {
            *histogram.entry(entry.profile.clone()).or_insert(0) += 1;
        }
        histogram
    }

    /// CSV export: `truth_table_hex,is_linear,nl_1,...,nl_{n-1}`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("truth_table_hex,is_linear");
        for k in 1..self.n {
            out.push_str(&format!(",nl_{k}"));
        }
        out.push('\n');
        for entry in &self.entries {
            out.push_str(&entry.table_hex);
            out.push(',');
            out.push_str(if entry.is_linear() { "true" } else { "false" });
            for nl in &entry.profile {
                out.push_str(&format!(",{nl}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerates every WPB function of `n in {2, 4}` variables by walking all
/// balanced assignments of each weight class, and brute-forces the full
/// nonlinearity profile of each.
pub fn enumerate_wpb(n: usize) -> Result<WpbCensus> {
    if n != 2 && n != 4 {
        return Err(Error::CensusInfeasible(n));
    }
    let idx = WeightClassIndex::new(n);
    let per_class: Vec<Vec<Bits>> = (1..n)
        .map(|k| {
            let len = idx.class_size(k);
            (0..len)
                .combinations(len / 2)
                .map(|ones| {
                    let mut slice = Bits::zeros(len);
                    for i in ones {
                        slice.set(i, true);
                    }
                    slice
                })
                .collect()
        })
        .collect();

    let entries = per_class
        .iter()
        .map(|options| options.iter().cloned())
        .multi_cartesian_product()
        .map(|slices| {
            let f = WeightwiseGenotype::new(n, slices)
                .expect("enumerated slices are balanced")
                .decode(&idx);
            let profile = (1..n)
                .map(|k| brute_force_restricted_nl(&f, k, &idx).unwrap())
                .collect();
            CensusEntry {
                table_hex: f.to_hex_string(),
                profile,
            }
        })
        .collect();
    Ok(WpbCensus { n, entries })
}
