//! Construction of symmetric Boolean functions on 2k variables with
//! algebraic immunity at least d, for any d that is a binary suffix of k.
//!
//! The machinery: integers are partitioned into weight classes relative to
//! k (by the lowest bit where they differ from k), the value vector is
//! pinned on the extreme weight ranges `[0, d-1]` and `[n-d+1, n]` class by
//! class, and the middle range stays free. Every function built this way
//! passes the sufficient condition checked by
//! [`check_theorem_condition`], and the family has exactly
//! `2^(floor(log2 d) + 2(k-d+1))` members.

use crate::boolfun::SymmetricFunction;
use crate::error::Error;

fn floor_log2(x: usize) -> u32 {
    debug_assert!(x > 0);
    usize::BITS - 1 - x.leading_zeros()
}

/// True iff the binary digits of `a` equal the low-order digits of `b`.
///
/// For `a = 0` the one-bit reading applies: 0 is a suffix of `b` exactly
/// when `b` ends in a 0 bit.
pub fn suffix_of(a: usize, b: usize) -> bool {
    if a == 0 {
        b & 1 == 0
    } else {
        let len = floor_log2(a) + 1;
        b & ((1usize << len) - 1) == a
    }
}

/// Weight-class index of `x` relative to `k` (with `m` the index of k's
/// highest set bit): the lowest bit position where `x` and `k` differ, or
/// `m + 1` when `x` agrees with `k` on all of its bits, i.e.
/// `x = k (mod 2^(m+1))`. The classes `0..=m+1` partition the integers.
pub fn class_index(x: usize, k: usize) -> usize {
    assert!(k >= 1, "class decomposition requires k >= 1");
    let m = floor_log2(k);
    let diff = x ^ k;
    if diff & ((1usize << (m + 1)) - 1) == 0 {
        (m + 1) as usize
    } else {
        diff.trailing_zeros() as usize
    }
}

/// Checks that (k, d) is a usable construction pair: 2 <= d <= k and d a
/// binary suffix of k. Degrees 0 and 1 are rejected rather than
/// extrapolated.
pub fn validate_pair(k: usize, d: usize) -> Result<(), Error> {
    if d < 2 || d > k {
        return Err(Error::DOutOfRange { k, d });
    }
    if !suffix_of(d, k) {
        return Err(Error::DNotSuffixOfK { k, d });
    }
    Ok(())
}

/// Parameters fully determining one constructed function on n = 2k
/// variables: the class values `m_0 ... m_floor(log2 d)` and the free
/// values for weights in `[d, n-d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    k: usize,
    d: usize,
    m_bits: Vec<bool>,
    free_bits: Vec<bool>,
}

impl ConstructionParams {
    pub fn new(k: usize, d: usize, m_bits: Vec<bool>, free_bits: Vec<bool>) -> Result<Self, Error> {
        validate_pair(k, d)?;
        let m_len = floor_log2(d) as usize + 1;
        if m_bits.len() != m_len {
            return Err(Error::BadBitLength {
                what: "m bit sequence",
                expected: m_len,
                got: m_bits.len(),
            });
        }
        let free_len = 2 * k - 2 * d + 1;
        if free_bits.len() != free_len {
            return Err(Error::BadBitLength {
                what: "free bit sequence",
                expected: free_len,
                got: free_bits.len(),
            });
        }
        Ok(ConstructionParams {
            k,
            d,
            m_bits,
            free_bits,
        })
    }

    /// Builds parameters from counters: `m_index` counts the m-bit
    /// combinations with `m_0` as the most significant bit, `free_index` is
    /// a big-endian counter over the free positions `[d, n-d]`.
    pub fn from_indices(k: usize, d: usize, m_index: u64, free_index: u128) -> Result<Self, Error> {
        validate_pair(k, d)?;
        let m_len = floor_log2(d) as usize + 1;
        let free_len = 2 * k - 2 * d + 1;
        if m_index >> m_len != 0 {
            return Err(Error::BadBitLength {
                what: "m combination index",
                expected: m_len,
                got: 64 - m_index.leading_zeros() as usize,
            });
        }
        if free_len < 128 && free_index >> free_len != 0 {
            return Err(Error::BadBitLength {
                what: "free counter",
                expected: free_len,
                got: 128 - free_index.leading_zeros() as usize,
            });
        }
        let m_bits = (0..m_len)
            .map(|i| m_index >> (m_len - 1 - i) & 1 == 1)
            .collect();
        let free_bits = (0..free_len)
            .map(|j| free_index >> (free_len - 1 - j) & 1 == 1)
            .collect();
        Ok(ConstructionParams {
            k,
            d,
            m_bits,
            free_bits,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        2 * self.k
    }

    pub fn m_bits(&self) -> &[bool] {
        &self.m_bits
    }

    pub fn free_bits(&self) -> &[bool] {
        &self.free_bits
    }

    /// The m bits as a label string, `m_0` first (as printed in the family
    /// tables).
    pub fn m_string(&self) -> String {
        self.m_bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn free_string(&self) -> String {
        self.free_bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

/// Builds the value vector determined by `p`: weight `i` in class `t` gets
/// `m_t` on the low range `[0, d-1]` and `m_t ^ 1` on the high range
/// `[n-d+1, n]`; weights in `[d, n-d]` take the free bits in position
/// order.
pub fn construct_function(p: &ConstructionParams) -> SymmetricFunction {
    let (k, d, n) = (p.k, p.d, p.n());
    let top = floor_log2(d) as usize;
    let mut svv = vec![false; n + 1];
    for i in 0..d {
        let t = class_index(i, k);
        debug_assert!(
            t <= top,
            "low range must be covered by classes 0..=floor(log2 d)"
        );
        svv[i] = p.m_bits[t];
    }
    for i in (n - d + 1)..=n {
        let t = class_index(i, k);
        debug_assert!(t <= top);
        svv[i] = !p.m_bits[t];
    }
    for (j, i) in (d..=n - d).enumerate() {
        svv[i] = p.free_bits[j];
    }
    SymmetricFunction::new(svv).expect("constructed vector has n+1 >= 2 entries")
}

/// The sufficient condition for AI(f) >= d on f with 2k variables: for
/// every weight pair (i, j) with i in `[0, d-1]`, j in `[n-d+1, n]` and
/// both in the same class t <= floor(log2 d), the values must be
/// complementary: `v(i) = v(j) ^ 1`.
pub fn check_theorem_condition(f: &SymmetricFunction, k: usize, d: usize) -> bool {
    assert_eq!(f.n(), 2 * k, "function must have 2k variables");
    validate_pair(k, d).expect("(k, d) must be a valid construction pair");
    let n = 2 * k;
    let top = floor_log2(d) as usize;
    for t in 0..=top {
        let low: Vec<usize> = (0..d).filter(|&i| class_index(i, k) == t).collect();
        let high: Vec<usize> = ((n - d + 1)..=n)
            .filter(|&j| class_index(j, k) == t)
            .collect();
        for &i in &low {
            for &j in &high {
                if f.value_at_weight(i) == f.value_at_weight(j) {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of functions the construction yields: `2^(floor(log2 d) + 2(k-d+1))`.
pub fn count_formula(k: usize, d: usize) -> Result<u128, Error> {
    validate_pair(k, d)?;
    let exponent = floor_log2(d) + 2 * (k - d + 1) as u32;
    if exponent >= 128 {
        return Err(Error::CountOverflow { exponent });
    }
    Ok(1u128 << exponent)
}

/// Lazy stream over all parameter choices for a valid pair, in
/// lexicographic order of (m bits, free bits) counting up from zero.
pub fn enumerate_params(k: usize, d: usize) -> Result<ParamRange, Error> {
    let total = count_formula(k, d)?;
    Ok(ParamRange {
        k,
        d,
        free_len: 2 * k - 2 * d + 1,
        next: 0,
        total,
    })
}

/// Lazy stream over all constructed functions for a valid pair, in the
/// same canonical order as [`enumerate_params`].
pub fn enumerate_constructions(
    k: usize,
    d: usize,
) -> Result<impl Iterator<Item = SymmetricFunction>, Error> {
    Ok(enumerate_params(k, d)?.map(|p| construct_function(&p)))
}

#[derive(Debug, Clone)]
pub struct ParamRange {
    k: usize,
    d: usize,
    free_len: usize,
    next: u128,
    total: u128,
}

impl ParamRange {
    /// Family size; may exceed usize on 32-bit targets, hence u128.
    pub fn total(&self) -> u128 {
        self.total
    }
}

impl Iterator for ParamRange {
    type Item = ConstructionParams;

    fn next(&mut self) -> Option<ConstructionParams> {
        if self.next >= self.total {
            return None;
        }
        let c = self.next;
        self.next += 1;
        let m_index = (c >> self.free_len) as u64;
        let free_index = c & ((1u128 << self.free_len) - 1);
        Some(
            ConstructionParams::from_indices(self.k, self.d, m_index, free_index)
                .expect("indices generated in range"),
        )
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = self.total - self.next;
        if rem <= usize::MAX as u128 {
            (rem as usize, Some(rem as usize))
        } else {
            (usize::MAX, None)
        }
    }
}
