//! Boolean functions, their weight-class structure, and spectral measures.
//!
//! A function on n variables is stored as its full truth table: the bit at
//! index `i` is `f(x)` where `x` is the n-bit big-endian expansion of `i`
//! (variable `x1` in the most significant position). Index order therefore
//! coincides with lexicographic order on input vectors.

mod anf;
mod counting;
mod restricted;
mod walsh;

pub use anf::{mobius_transform, AnfPolynomial};
pub use counting::{big_binomial, scientific, space_sizes, wpb_count, wpb_feasible, SpaceSizes};
pub use restricted::{restricted_bound, RestrictedSpectrum};
pub use walsh::WalshSpectrum;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Number of ones in a bit string.
pub fn hamming_weight(v: &Bits) -> usize {
    v.count_ones()
}

/// Binomial coefficient in plain integers; callers keep `n` small.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// An n-variable Boolean function represented by its truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    table: Bits,
}

impl BooleanFunction {
    pub fn new(n: usize, table: Bits) -> Result<Self> {
        if n == 0 || table.len() != 1 << n {
            return Err(Error::TableLength {
                n,
                got: table.len(),
            });
        }
        Ok(BooleanFunction { n, table })
    }

    /// The constant-zero function.
    pub fn zero(n: usize) -> Self {
        BooleanFunction {
            n,
            table: Bits::zeros(1 << n),
        }
    }

    /// Parses a truth table written as `0`/`1` characters, first character =
    /// `f(0...0)`. The length must be a power of two.
    pub fn from_binary_str(s: &str) -> Result<Self> {
        let len = s.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::Parse(format!(
                "truth table length {len} is not a power of two"
            )));
        }
        let n = len.trailing_zeros() as usize;
        BooleanFunction::new(n, Bits::parse_binary(s)?)
    }

    /// Parses a hexadecimal truth table, 4 bits per digit in the same order
    /// as the binary form (first digit covers `f(0...0)..f(0..11)` with
    /// `f(0...0)` as the most significant bit of the digit).
    pub fn from_hex_str(s: &str, n: usize) -> Result<Self> {
        let len = 1usize << n;
        if s.len() * 4 != len {
            return Err(Error::Parse(format!(
                "hex truth table has {} digits, expected {} for n={n}",
                s.len(),
                len / 4
            )));
        }
        let mut table = Bits::zeros(len);
        for (d, c) in s.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?}")))?;
            for b in 0..4 {
                if (v >> (3 - b)) & 1 == 1 {
                    table.set(4 * d + b, true);
                }
            }
        }
        BooleanFunction::new(n, table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Table length, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value of `f` at the input whose index is `x`.
    #[inline]
    pub fn get(&self, x: usize) -> bool {
        self.table.get(x)
    }

    pub fn set(&mut self, x: usize, value: bool) {
        self.table.set(x, value);
    }

    pub fn table(&self) -> &Bits {
        &self.table
    }

    pub fn weight(&self) -> usize {
        self.table.count_ones()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() * 2 == self.len()
    }

    pub fn to_binary_string(&self) -> String {
        self.table.to_binary_string()
    }

    pub fn to_hex_string(&self) -> String {
        let mut s = String::with_capacity(self.len() / 4);
        for d in 0..self.len() / 4 {
            let mut v = 0u32;
            for b in 0..4 {
                v = (v << 1) | self.table.get(4 * d + b) as u32;
            }
            s.push(char::from_digit(v, 16).unwrap());
        }
        s
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self.to_hex_string())
    }
}

/// Parity of the dot product `a·x` in the shared index encoding.
#[inline]
pub fn dot(a: usize, x: usize) -> bool {
    ((a & x).count_ones() & 1) == 1
}

/// The weight classes `E_{n,k}` of all n-bit inputs, each listed in
/// lexicographic order, together with the inverse position map.
pub struct WeightClassIndex {
    n: usize,
    classes: Vec<Vec<u32>>,
    positions: Vec<(u8, u32)>,
    masks: Vec<Bits>,
}

impl WeightClassIndex {
    pub fn new(n: usize) -> Self {
        assert!((1..=24).contains(&n), "weight class index requires 1 <= n <= 24");
        let size = 1usize << n;
        let mut classes: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        let mut positions = vec![(0u8, 0u32); size];
        let mut masks = vec![Bits::zeros(size); n + 1];
        for (x, position) in positions.iter_mut().enumerate() {
            let k = x.count_ones() as usize;
            *position = (k as u8, classes[k].len() as u32);
            classes[k].push(x as u32);
            masks[k].set(x, true);
        }
        WeightClassIndex {
            n,
            classes,
            positions,
            masks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Input indices of `E_{n,k}`, in increasing (= lexicographic) order.
    pub fn class(&self, k: usize) -> &[u32] {
        &self.classes[k]
    }

    pub fn class_size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    /// `(k, offset)` of an input index within its weight class.
    pub fn position(&self, x: usize) -> (usize, usize) {
        let (k, i) = self.positions[x];
        (k as usize, i as usize)
    }

    /// Mask over the full table with ones exactly on `E_{n,k}`.
    pub fn mask(&self, k: usize) -> &Bits {
        &self.masks[k]
    }

    pub(crate) fn check_k(&self, k: usize) -> Result<()> {
        if k < 1 || k > self.n - 1 {
            return Err(Error::WeightClassOutOfRange { n: self.n, k });
        }
        Ok(())
    }

    /// The restriction of `f` to `E_{n,k}` as a bit string in class order.
    pub fn restriction(&self, f: &BooleanFunction, k: usize) -> Bits {
        let class = self.class(k);
        Bits::from_fn(class.len(), |i| f.get(class[i] as usize))
    }
}

/// Precomputed signs `a·x` for every coefficient index `a` and every
/// `x` in one weight class, packed so a restricted Walsh coefficient is a
/// single XOR + popcount against the restriction bits.
pub struct SignTable {
    n: usize,
    k: usize,
    rows: Vec<Bits>,
}

impl SignTable {
    pub fn new(idx: &WeightClassIndex, k: usize) -> Result<Self> {
        idx.check_k(k)?;
        let class = idx.class(k);
        let rows = (0..1usize << idx.n())
            .map(|a| Bits::from_fn(class.len(), |i| dot(a, class[i] as usize)))
            .collect();
        Ok(SignTable {
            n: idx.n(),
            k,
            rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Row for coefficient index `a`: bit `i` is `a·x_i` over the class.
    #[inline]
    pub fn row(&self, a: usize) -> &Bits {
        &self.rows[a]
    }

    pub fn class_size(&self) -> usize {
        self.rows[0].len()
    }
}
