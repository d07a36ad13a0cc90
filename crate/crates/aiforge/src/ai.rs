//! Annihilator existence testing, exact algebraic-immunity computation with
//! witnesses, and the weight-restricted lower-bound certificate for
//! symmetric functions.
//!
//! An annihilator of f is a nonzero g with f*g = 0 pointwise; the algebraic
//! immunity AI(f) is the minimum degree over all annihilators of f or of
//! f^1. A degree-<=e annihilator of f exists exactly when the evaluation
//! rows of the weight-<=e monomials at the support points of f have a
//! nonzero common nullspace vector, which is what everything below reduces
//! to.

use crate::boolfun::{
    binomial, masks_of_weight, subset_order, AnfVector, SymmetricFunction, TruthTable,
};
use crate::gf2::{nullspace_vector, rank_streaming, rank_streaming_counted, BitRow};

/// Ordered index of all monomial masks of weight at most `bound` on `n`
/// variables: weight ascending, value ascending within a weight. Column `c`
/// of every evaluation row corresponds to `masks()[c]`.
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    n: usize,
    bound: usize,
    masks: Vec<u64>,
}

impl MonomialIndex {
    pub fn new(n: usize, bound: usize) -> Self {
        assert!(
            bound <= n,
            "degree bound {bound} exceeds variable count {n}"
        );
        let masks: Vec<u64> = (0..=bound).flat_map(|w| masks_of_weight(n, w)).collect();
        let expected: u128 = (0..=bound).map(|w| binomial(n, w)).sum();
        assert_eq!(masks.len() as u128, expected, "monomial count mismatch");
        MonomialIndex { n, bound, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Evaluation row of all indexed monomials at the input point `alpha`:
    /// column c is 1 iff the monomial mask is a bitwise subset of `alpha`.
    pub fn monomial_row(&self, alpha: u64) -> BitRow {
        let mut row = BitRow::zero(self.masks.len());
        for (col, &beta) in self.masks.iter().enumerate() {
            if subset_order(beta, alpha) {
                row.set(col);
            }
        }
        row
    }
}

/// Which of the two functions in the AI definition an annihilator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The function itself.
    Function,
    /// Its complement f ^ 1.
    Complement,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Function => f.write_str("f"),
            Side::Complement => f.write_str("f+1"),
        }
    }
}

/// Result of an exact AI computation: the immunity, a minimal-degree
/// witness annihilator, and the side it annihilates.
#[derive(Debug, Clone)]
pub struct AiReport {
    pub ai: usize,
    pub witness: Option<AnfVector>,
    pub side: Side,
}

/// Outcome of the weight-restricted rank certificate. `certified` means
/// both the function and its complement reached full column rank, which is
/// a sound proof of AI >= d; `false` is inconclusive, not a disproof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub d: usize,
    pub certified: bool,
    pub rank_f: usize,
    pub rank_fc: usize,
    pub rows_f: usize,
    pub rows_fc: usize,
}

/// Searches for a nonzero annihilator of `f` of degree at most `e`.
///
/// Returns a verified witness (nonzero, degree <= e, pointwise product with
/// `f` identically zero) or `None` when no such annihilator exists.
pub fn has_annihilator_of_degree_at_most(f: &TruthTable, e: usize) -> Option<AnfVector> {
    let n = f.n();
    assert!(e <= n, "degree bound {e} exceeds variable count {n}");
    let idx = MonomialIndex::new(n, e);
    let ncols = idx.len();

    // A kernel vector is forced whenever there are fewer constraints than
    // unknowns; only run the early-exit rank pass when it could reach full
    // column rank.
    if f.weight() as u128 >= ncols as u128 {
        let rank = rank_streaming(
            f.support().map(|alpha| idx.monomial_row(alpha)),
            ncols,
            Some(ncols),
        );
        if rank == ncols {
            return None;
        }
    }

    let rows: Vec<BitRow> = f.support().map(|alpha| idx.monomial_row(alpha)).collect();
    let kernel =
        nullspace_vector(&rows, ncols).expect("rank-deficient system must have a kernel vector");

    let mut g = AnfVector::zero(n).expect("annihilator within truth-table bound");
    for col in kernel.iter_set() {
        g.set(idx.masks()[col], true);
    }
    debug_assert!(!g.is_zero());
    debug_assert!(g.degree() <= e);
    assert!(
        f.is_disjoint(&g.to_truth_table()),
        "witness annihilator fails pointwise product check"
    );
    Some(g)
}

/// Exact algebraic immunity with a witness.
///
/// Searches e = 0, 1, 2, ... testing both `f` and `f ^ 1` at each level, so
/// the returned witness has minimal degree. Constants get AI 0: the constant
/// one function annihilates the zero function.
pub fn compute_ai_exact(f: &TruthTable) -> AiReport {
    let n = f.n();
    let max_e = n.div_ceil(2);
    let fc = f.complement();
    for e in 0..=max_e {
        for (tt, side) in [(f, Side::Function), (&fc, Side::Complement)] {
            if let Some(witness) = has_annihilator_of_degree_at_most(tt, e) {
                // A lower-degree witness would have been found at an earlier
                // level, so the minimal annihilator degree is exactly e.
                debug_assert_eq!(witness.degree(), e);
                #[cfg(debug_assertions)]
                if !f.is_constant() {
                    debug_assert!(e <= f.mobius().degree());
                }
                return AiReport {
                    ai: e,
                    witness: Some(witness),
                    side,
                };
            }
        }
    }
    unreachable!("every function has an annihilator of degree at most ceil(n/2)");
}

/// Support masks of a symmetric function restricted to the extreme weight
/// bands `[0, d-1]` and `[n-d+1, n]`: low weights ascending from 0, then
/// high weights descending from n. These slices carry the rank, so an
/// early-exit rank pass saturates after roughly `sum_{i<d} C(n,i)` rows.
fn band_support_masks<'a>(f: &'a SymmetricFunction, d: usize) -> impl Iterator<Item = u64> + 'a {
    let n = f.n();
    let low = (0..d).filter(move |&w| f.value_at_weight(w));
    let high = ((n - d + 1)..=n)
        .rev()
        .filter(move |&w| f.value_at_weight(w));
    low.chain(high).flat_map(move |w| masks_of_weight(n, w))
}

/// Weight-restricted lower-bound certificate: streams the monomial rows of
/// the band support points for `f` and for `f ^ 1` and checks both reach
/// full column rank `sum_{i<=d-1} C(n,i)`.
///
/// Full rank of this row subset forces full rank of the whole annihilator
/// system, so `certified == true` soundly proves AI(f) >= d without ever
/// materializing a truth table.
pub fn certify_ai_lower_bound(f: &SymmetricFunction, d: usize) -> CertificateReport {
    let n = f.n();
    assert!(
        d >= 1 && 2 * d <= n,
        "certificate degree d={d} out of range for n={n}"
    );
    let idx = MonomialIndex::new(n, d - 1);
    let ncols = idx.len();

    let run = |g: &SymmetricFunction| {
        rank_streaming_counted(
            band_support_masks(g, d).map(|alpha| idx.monomial_row(alpha)),
            ncols,
            Some(ncols),
        )
    };
    let (rank_f, rows_f) = run(f);
    let (rank_fc, rows_fc) = run(&f.complement());

    CertificateReport {
        d,
        certified: rank_f == ncols && rank_fc == ncols,
        rank_f,
        rank_fc,
        rows_f,
        rows_fc,
    }
}
