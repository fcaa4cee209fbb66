//! Search-space cardinalities in exact big-integer arithmetic.

use num_bigint::BigUint;

use super::binomial;
use crate::error::{Error, Result};

/// Weightwise perfectly balanced functions exist exactly when every
/// `binomial(n, k)` with `1 <= k <= n-1` is even, i.e. when `n` is a power
/// of two (Lucas).
pub fn wpb_feasible(n: usize) -> bool {
    n >= 1 && n.is_power_of_two()
}

/// `binomial(n, k)` as a big integer.
pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Exact sizes of the three nested search spaces for n variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceSizes {
    /// All functions: `2^(2^n)`.
    pub all: BigUint,
    /// Globally balanced functions: `binomial(2^n, 2^(n-1))`.
    pub balanced: BigUint,
    /// Weightwise perfectly balanced functions; `None` when infeasible.
    pub wpb: Option<BigUint>,
}

pub fn space_sizes(n: usize) -> SpaceSizes {
    assert!(n >= 1, "space sizes need n >= 1");
    let table = 1u64 << n;
    SpaceSizes {
        all: BigUint::from(1u32) << table,
        balanced: big_binomial(table, table / 2),
        wpb: wpb_count(n).ok(),
    }
}

/// Number of WPB functions: the product over `1 <= k <= n-1` of the ways to
/// balance each weight class,
/// `prod_k binomial(binomial(n,k), binomial(n,k)/2)`.
pub fn wpb_count(n: usize) -> Result<BigUint> {
    if !wpb_feasible(n) {
        return Err(Error::InfeasibleVariableCount(n));
    }
    let mut acc = BigUint::from(1u32);
    for k in 1..n {
        let size = binomial(n, k) as u64;
        acc *= big_binomial(size, size / 2);
    }
    Ok(acc)
}

/// Three-significant-digit scientific rendering, e.g. `5.18e70`. Values
/// under a million print exactly.
pub fn scientific(x: &BigUint) -> String {
    let s = x.to_string();
    if s.len() <= 6 {
        return s;
    }
    let mut exponent = s.len() - 1;
    let leading: u32 = s[..4].parse().unwrap();
    let mut mantissa = (leading + 5) / 10;
    if mantissa == 1000 {
        mantissa = 100;
        exponent += 1;
    }
    format!("{}.{:02}e{}", mantissa / 100, mantissa % 100, exponent)
}
