//! Bit-packed dense linear algebra over GF(2): streaming rank with early
//! exit and nullspace extraction.
//!
//! Rows are packed into machine words and every elimination step is a whole
//! word XOR loop; nothing here works bit by bit. Rank computation consumes
//! its rows in fixed-size batches: each batch is first reduced against the
//! frozen pivot set (in parallel when a thread pool is available), then
//! absorbed sequentially, so the result is identical to sequential
//! elimination regardless of thread count.
//!
//! The environment variable `AIFORGE_THREADS` caps internal parallelism:
//! `1` forces sequential execution, `0` or unset picks the default.

use std::cell::Cell;
use std::sync::OnceLock;

use rayon::prelude::*;

/// Rows per streaming batch. Fixed so that the set of rows consumed from a
/// stream does not depend on the thread count.
const BATCH_ROWS: usize = 512;

/// Minimum estimated word operations in a batch reduction before threads
/// are worth their overhead.
const PAR_THRESHOLD: usize = 1 << 21;

static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();

fn pool() -> Option<&'static rayon::ThreadPool> {
    POOL.get_or_init(|| {
        let threads = std::env::var("AIFORGE_THREADS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .unwrap_or(0);
        if threads == 1 {
            return None;
        }
        let mut builder = rayon::ThreadPoolBuilder::new();
        if threads > 0 {
            builder = builder.num_threads(threads);
        }
        builder.build().ok()
    })
    .as_ref()
}

/// A bit vector of `width` columns packed into u64 words, little-endian:
/// column `c` lives at bit `c % 64` of word `c / 64`. Bits at positions
/// `>= width` are kept zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    width: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zero(width: usize) -> Self {
        BitRow {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    /// Row with ones exactly at the given columns.
    pub fn from_cols(width: usize, cols: &[usize]) -> Self {
        let mut row = Self::zero(width);
        for &c in cols {
            row.set(c);
        }
        row
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, col: usize) -> bool {
        debug_assert!(col < self.width);
        self.words[col >> 6] >> (col & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, col: usize) {
        assert!(
            col < self.width,
            "column {col} out of range for width {}",
            self.width
        );
        self.words[col >> 6] |= 1 << (col & 63);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn lowest_set_bit(&self) -> Option<usize> {
        self.lowest_set_bit_from(0)
    }

    fn lowest_set_bit_from(&self, start: usize) -> Option<usize> {
        if start >= self.width {
            return None;
        }
        let first_word = start >> 6;
        let masked = self.words[first_word] & (u64::MAX << (start & 63));
        if masked != 0 {
            return Some((first_word << 6) + masked.trailing_zeros() as usize);
        }
        for (i, &w) in self.words.iter().enumerate().skip(first_word + 1) {
            if w != 0 {
                return Some((i << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &BitRow) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Ascending iterator over set columns.
    pub fn iter_set(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    return None;
                }
                let b = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                Some((wi << 6) + b)
            })
        })
    }
}

/// Incremental row-echelon basis. Stores one reduced row per pivot column;
/// the pivot of a stored row is its lowest set bit.
#[derive(Debug, Clone)]
pub struct RankAccumulator {
    width: usize,
    pivots: Vec<Option<BitRow>>,
    rank: usize,
}

impl RankAccumulator {
    pub fn new(width: usize) -> Self {
        RankAccumulator {
            width,
            pivots: vec![None; width],
            rank: 0,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `row` against the stored pivots in place. Afterwards no set
    /// bit of `row` sits on a pivot column.
    fn reduce(&self, row: &mut BitRow) {
        let mut from = 0;
        while let Some(c) = row.lowest_set_bit_from(from) {
            match &self.pivots[c] {
                Some(p) => {
                    // Clears bit c; only bits >= c change.
                    row.xor_assign(p);
                    from = c;
                }
                None => from = c + 1,
            }
        }
    }

    /// Reduces the row and, if a nonzero remainder survives, stores it as a
    /// new pivot. Returns whether the rank grew.
    pub fn absorb(&mut self, mut row: BitRow) -> bool {
        assert_eq!(row.width(), self.width, "row width mismatch");
        self.reduce(&mut row);
        match row.lowest_set_bit() {
            None => false,
            Some(p) => {
                self.pivots[p] = Some(row);
                self.rank += 1;
                true
            }
        }
    }
}

/// Reduce a batch of pending rows against a frozen pivot set, in parallel
/// when the work is large enough to pay for it.
fn pre_reduce(acc: &RankAccumulator, batch: &mut [BitRow]) {
    if acc.rank == 0 {
        return;
    }
    let words = acc.width.div_ceil(64);
    let estimated = acc.rank * words * batch.len();
    match pool() {
        Some(pool) if estimated >= PAR_THRESHOLD => {
            pool.install(|| batch.par_iter_mut().for_each(|row| acc.reduce(row)));
        }
        _ => batch.iter_mut().for_each(|row| acc.reduce(row)),
    }
}

/// Rank of a streamed set of rows.
///
/// Rows are pulled in batches of [`BATCH_ROWS`]; when `early_exit_at` is
/// reached the remaining stream is left unconsumed. Callers that order
/// their rows for fast rank saturation therefore touch only a prefix of
/// the stream.
pub fn rank_streaming<I>(rows: I, width: usize, early_exit_at: Option<usize>) -> usize
where
    I: IntoIterator<Item = BitRow>,
{
    let target = early_exit_at.map(|t| t.min(width));
    if target == Some(0) {
        return 0;
    }
    let mut acc = RankAccumulator::new(width);
    let mut it = rows.into_iter();
    loop {
        let mut batch: Vec<BitRow> = it.by_ref().take(BATCH_ROWS).collect();
        if batch.is_empty() {
            return acc.rank();
        }
        pre_reduce(&acc, &mut batch);
        for row in batch {
            acc.absorb(row);
            if let Some(t) = target {
                if acc.rank >= t {
                    return acc.rank();
                }
            }
        }
    }
}

/// Reduced row-echelon basis: like [`RankAccumulator`] but every stored row
/// is additionally cleared at the other pivot columns, so a kernel vector
/// can be read off directly.
struct RrefBasis {
    width: usize,
    pivots: Vec<Option<BitRow>>,
    rank: usize,
}

impl RrefBasis {
    fn new(width: usize) -> Self {
        RrefBasis {
            width,
            pivots: vec![None; width],
            rank: 0,
        }
    }

    fn reduce(&self, row: &mut BitRow) {
        let mut from = 0;
        while let Some(c) = row.lowest_set_bit_from(from) {
            match &self.pivots[c] {
                Some(p) => {
                    row.xor_assign(p);
                    from = c;
                }
                None => from = c + 1,
            }
        }
    }

    fn insert(&mut self, mut row: BitRow) -> bool {
        assert_eq!(row.width(), self.width, "row width mismatch");
        self.reduce(&mut row);
        let Some(p) = row.lowest_set_bit() else {
            return false;
        };
        for q in self.pivots.iter_mut().flatten() {
            if q.get(p) {
                q.xor_assign(&row);
            }
        }
        self.pivots[p] = Some(row);
        self.rank += 1;
        true
    }
}

/// Some nonzero vector orthogonal to every row, or `None` when the rows
/// have full column rank. The returned vector is checked against all rows
/// before it is handed out.
pub fn nullspace_vector(rows: &[BitRow], width: usize) -> Option<BitRow> {
    let mut basis = RrefBasis::new(width);
    'outer: for chunk in rows.chunks(BATCH_ROWS.max(1)) {
        let mut batch = chunk.to_vec();
        {
            let words = width.div_ceil(64);
            let estimated = basis.rank * words * batch.len();
            match pool() {
                Some(pool) if estimated >= PAR_THRESHOLD => {
                    let basis_ref = &basis;
                    pool.install(|| batch.par_iter_mut().for_each(|row| basis_ref.reduce(row)));
                }
                _ => batch.iter_mut().for_each(|row| basis.reduce(row)),
            }
        }
        for row in batch {
            basis.insert(row);
            if basis.rank == width {
                break 'outer;
            }
        }
    }
    if basis.rank == width {
        return None;
    }
    let free = (0..width).find(|&c| basis.pivots[c].is_none())?;
    let mut kernel = BitRow::zero(width);
    kernel.set(free);
    for (p, row) in basis.pivots.iter().enumerate() {
        if let Some(row) = row {
            if row.get(free) {
                kernel.set(p);
            }
        }
    }
    for row in rows {
        assert!(
            !row.dot(&kernel),
            "kernel candidate fails orthogonality check"
        );
    }
    Some(kernel)
}

/// Streaming rank plus a count of rows actually pulled from the stream.
/// Plumbing for certificate reports; the count is deterministic because
/// batch boundaries are fixed.
pub fn rank_streaming_counted<I>(
    rows: I,
    width: usize,
    early_exit_at: Option<usize>,
) -> (usize, usize)
where
    I: IntoIterator<Item = BitRow>,
{
    let counter = Cell::new(0usize);
    let rank = rank_streaming(
        rows.into_iter().inspect(|_| counter.set(counter.get() + 1)),
        width,
        early_exit_at,
    );
    (rank, counter.get())
}
