//! Boolean-function representations and the exact combinatorial transforms
//! underneath everything else: Hamming weights, the bitwise subset order,
//! binomial parity, the simplified value vector (SVV) of a symmetric function
//! and its simplified ANF (SANF) counterpart, dense truth tables, and the
//! binary Mobius transform between truth tables and ANF coefficients.
//!
//! Conventions, shared by every module in this crate:
//! - an input point of an n-variable function is an integer mask with
//!   variable `x_i` at bit `i - 1`;
//! - SVV/SANF strings are '0'/'1' characters with index 0 leftmost.

use crate::error::Error;

/// Dense truth tables are capped at this many variables (2^24 bits = 2 MiB).
/// Larger instances go through the certificate path, which never materializes
/// a table.
pub const MAX_TT_VARS: usize = 24;

/// Hamming weight of an input mask.
#[inline]
pub fn weight(mask: u64) -> u32 {
    mask.count_ones()
}

/// Bitwise subset order: true iff every set bit of `a` is set in `b`.
#[inline]
pub fn subset_order(a: u64, b: u64) -> bool {
    a & b == a
}

/// Parity of the binomial coefficient C(m, r).
///
/// By Lucas' formula this is 1 exactly when `r` is a bitwise subset of `m`;
/// in particular it is 0 whenever `r > m`.
#[inline]
pub fn lucas_parity(m: u64, r: u64) -> bool {
    subset_order(r, m)
}

/// Exact binomial coefficient C(n, k) in u128 arithmetic.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Iterator over all n-bit masks of a fixed Hamming weight, in ascending
/// value order, via the Gosper successor. Never scans the full 2^n range.
pub fn masks_of_weight(n: usize, w: usize) -> WeightMasks {
    assert!(n <= 62, "mask enumeration supports at most 62 bits");
    WeightMasks {
        limit: 1u64 << n,
        next: if w > n {
            None
        } else if w == 0 {
            Some(0)
        } else {
            Some((1u64 << w) - 1)
        },
    }
}

#[derive(Debug, Clone)]
pub struct WeightMasks {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for WeightMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            // Gosper: next larger integer with the same popcount.
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some((((cur ^ ripple) >> 2) / low) | ripple)
        };
        Some(cur)
    }
}

fn parse_bits(s: &str) -> Result<Vec<bool>, Error> {
    s.chars()
        .enumerate()
        .map(|(pos, ch)| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::BadBitChar { ch, pos }),
        })
        .collect()
}

fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// The involution relating value vectors and ANF coefficient vectors of
/// symmetric functions: `out[i] = XOR of in[j] over all j that are bitwise
/// subsets of i`. The same computation maps SVV -> SANF and SANF -> SVV.
fn subset_fold(bits: &[bool]) -> Vec<bool> {
    (0..bits.len())
        .map(|i| {
            (0..=i)
                .filter(|&j| subset_order(j as u64, i as u64))
                .fold(false, |acc, j| acc ^ bits[j])
        })
        .collect()
}

/// A symmetric Boolean function on n variables, stored as its simplified
/// value vector: entry `i` is the function's value on every input of
/// Hamming weight `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricFunction {
    n: usize,
    svv: Vec<bool>,
}

impl SymmetricFunction {
    /// Builds a function from its value vector; `svv.len()` must be `n + 1`
    /// for some `n >= 1`.
    pub fn new(svv: Vec<bool>) -> Result<Self, Error> {
        if svv.len() < 2 {
            return Err(Error::VectorTooShort { len: svv.len() });
        }
        Ok(SymmetricFunction {
            n: svv.len() - 1,
            svv,
        })
    }

    /// Parses an SVV string of '0'/'1' characters, leftmost = value at weight 0.
    pub fn from_svv_str(s: &str) -> Result<Self, Error> {
        Self::new(parse_bits(s)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn svv(&self) -> &[bool] {
        &self.svv
    }

    #[inline]
    pub fn value_at_weight(&self, w: usize) -> bool {
        self.svv[w]
    }

    /// Evaluates the function at an input mask.
    #[inline]
    pub fn evaluate(&self, mask: u64) -> bool {
        self.svv[weight(mask) as usize]
    }

    pub fn svv_string(&self) -> String {
        bits_to_string(&self.svv)
    }

    /// The simplified ANF vector: coefficients of the elementary symmetric
    /// polynomials.
    pub fn to_sanf(&self) -> SanfVector {
        SanfVector {
            n: self.n,
            lambda: subset_fold(&self.svv),
        }
    }

    /// `f ^ 1`: flips every value.
    pub fn complement(&self) -> Self {
        SymmetricFunction {
            n: self.n,
            svv: self.svv.iter().map(|&b| !b).collect(),
        }
    }

    /// `x -> x ^ 1...1`: an input of weight w becomes one of weight n - w,
    /// so the value vector reverses.
    pub fn input_complement(&self) -> Self {
        let mut svv = self.svv.clone();
        svv.reverse();
        SymmetricFunction { n: self.n, svv }
    }

    /// Dense truth-table expansion. Errors for n above [`MAX_TT_VARS`].
    pub fn truth_table(&self) -> Result<TruthTable, Error> {
        if self.n > MAX_TT_VARS {
            return Err(Error::TooManyVariables {
                n: self.n,
                max: MAX_TT_VARS,
            });
        }
        let mut tt = TruthTable::zero(self.n)?;
        for mask in 0..(1u64 << self.n) {
            if self.svv[weight(mask) as usize] {
                tt.set(mask, true);
            }
        }
        Ok(tt)
    }
}

impl std::fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.svv_string())
    }
}

/// The simplified ANF coefficient vector of a symmetric function: entry `i`
/// is the coefficient of the elementary symmetric polynomial of degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SanfVector {
    n: usize,
    lambda: Vec<bool>,
}

impl SanfVector {
    pub fn new(lambda: Vec<bool>) -> Result<Self, Error> {
        if lambda.len() < 2 {
            return Err(Error::VectorTooShort { len: lambda.len() });
        }
        Ok(SanfVector {
            n: lambda.len() - 1,
            lambda,
        })
    }

    pub fn from_lambda_str(s: &str) -> Result<Self, Error> {
        Self::new(parse_bits(s)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[bool] {
        &self.lambda
    }

    pub fn lambda_string(&self) -> String {
        bits_to_string(&self.lambda)
    }

    /// Algebraic degree: the highest index with a set coefficient, 0 for the
    /// zero function.
    pub fn degree(&self) -> usize {
        self.lambda.iter().rposition(|&b| b).unwrap_or(0)
    }

    /// Inverse of [`SymmetricFunction::to_sanf`] (the transform is an
    /// involution).
    pub fn to_function(&self) -> SymmetricFunction {
        SymmetricFunction {
            n: self.n,
            svv: subset_fold(&self.lambda),
        }
    }
}

impl std::fmt::Display for SanfVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.lambda_string())
    }
}

fn word_count(n: usize) -> usize {
    if n >= 6 {
        1 << (n - 6)
    } else {
        1
    }
}

/// Mask clearing the unused tail of the last word when 2^n < 64.
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// In-place subset-XOR transform over all 2^n positions (the binary Mobius
/// transform and its own inverse). Low index bits are handled with in-word
/// shift/mask passes, high bits with whole-word XORs.
fn mobius_in_place(words: &mut [u64], n: usize) {
    const LOW: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0f0f_0f0f_0f0f_0f0f,
        0x00ff_00ff_00ff_00ff,
        0x0000_ffff_0000_ffff,
        0x0000_0000_ffff_ffff,
    ];
    for k in 0..n.min(6) {
        let shift = 1 << k;
        for w in words.iter_mut() {
            *w ^= (*w & LOW[k]) << shift;
        }
    }
    for k in 6..n {
        let stride = 1 << (k - 6);
        let mut base = 0;
        while base < words.len() {
            for j in base..base + stride {
                words[j + stride] ^= words[j];
            }
            base += 2 * stride;
        }
    }
    if n < 6 {
        words[0] &= tail_mask(n);
    }
}

fn set_bits_of(words: &[u64]) -> impl Iterator<Item = u64> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rem = w;
        std::iter::from_fn(move || {
            if rem == 0 {
                return None;
            }
            let b = rem.trailing_zeros() as u64;
            rem &= rem - 1;
            Some((wi as u64) * 64 + b)
        })
    })
}

/// Dense bit-packed truth table of an n-variable Boolean function; bit at
/// index `mask` is the value at that input point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl TruthTable {
    /// All-zero table. Errors above [`MAX_TT_VARS`].
    pub fn zero(n: usize) -> Result<Self, Error> {
        if n > MAX_TT_VARS {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_TT_VARS,
            });
        }
        Ok(TruthTable {
            n,
            words: vec![0; word_count(n)],
        })
    }

    /// Table filled from a predicate on input masks.
    pub fn from_fn(n: usize, mut f: impl FnMut(u64) -> bool) -> Result<Self, Error> {
        let mut tt = Self::zero(n)?;
        for mask in 0..(1u64 << n) {
            if f(mask) {
                tt.set(mask, true);
            }
        }
        Ok(tt)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_points(&self) -> u64 {
        1u64 << self.n
    }

    #[inline]
    pub fn get(&self, mask: u64) -> bool {
        debug_assert!(mask < self.num_points());
        self.words[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, mask: u64, value: bool) {
        debug_assert!(mask < self.num_points());
        let w = &mut self.words[(mask >> 6) as usize];
        if value {
            *w |= 1 << (mask & 63);
        } else {
            *w &= !(1 << (mask & 63));
        }
    }

    /// Number of inputs mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.num_points()
    }

    /// Ascending iterator over the support (inputs mapped to 1).
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        set_bits_of(&self.words)
    }

    /// `f ^ 1`.
    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        *words.last_mut().unwrap() &= tail_mask(self.n);
        TruthTable { n: self.n, words }
    }

    /// True iff the two functions share no support point, i.e. their
    /// pointwise product is the zero function.
    pub fn is_disjoint(&self, other: &TruthTable) -> bool {
        assert_eq!(
            self.n, other.n,
            "truth tables over different variable counts"
        );
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// ANF coefficients of the function (binary Mobius transform).
    pub fn mobius(&self) -> AnfVector {
        let mut words = self.words.clone();
        mobius_in_place(&mut words, self.n);
        AnfVector { n: self.n, words }
    }
}

/// ANF coefficient vector of an n-variable function: bit at index `mask` is
/// the coefficient of the monomial whose variables are the set bits of
/// `mask`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnfVector {
    n: usize,
    words: Vec<u64>,
}

impl AnfVector {
    pub fn zero(n: usize) -> Result<Self, Error> {
        if n > MAX_TT_VARS {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_TT_VARS,
            });
        }
        Ok(AnfVector {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, mask: u64) -> bool {
        self.words[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, mask: u64, value: bool) {
        let w = &mut self.words[(mask >> 6) as usize];
        if value {
            *w |= 1 << (mask & 63);
        } else {
            *w &= !(1 << (mask & 63));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Algebraic degree: largest monomial weight present, 0 for the zero
    /// function.
    pub fn degree(&self) -> usize {
        self.monomials()
            .map(|m| weight(m) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Ascending iterator over the masks of monomials with coefficient 1.
    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        set_bits_of(&self.words)
    }

    /// Truth table of the function (the same Mobius transform back).
    pub fn to_truth_table(&self) -> TruthTable {
        let mut words = self.words.clone();
        mobius_in_place(&mut words, self.n);
        TruthTable { n: self.n, words }
    }
}
