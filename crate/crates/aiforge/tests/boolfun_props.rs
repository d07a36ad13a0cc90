//! Property suites for the representation layer: transform round trips,
//! agreement between the weight-indexed transform and the mask-level Mobius
//! transform, and binomial parity against exact big-integer binomials.

mod common;

use aiforge::boolfun::{lucas_parity, weight, SanfVector, SymmetricFunction};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn lucas_parity_matches_exact_binomials() {
    let table = common::pascal(20);
    for m in 0..=20usize {
        for r in 0..=m {
            assert_eq!(
                lucas_parity(m as u64, r as u64),
                table[m][r] % 2 == 1,
                "C({m},{r})"
            );
        }
    }
}

#[test]
fn transform_round_trip_exhaustive_small_n() {
    for n in 1..=6usize {
        for code in 0u32..(1 << (n + 1)) {
            let svv: Vec<bool> = (0..=n).map(|i| code >> i & 1 == 1).collect();
            let f = SymmetricFunction::new(svv).unwrap();
            assert_eq!(f.to_sanf().to_function(), f);
            let g = SanfVector::new((0..=n).map(|i| code >> i & 1 == 1).collect()).unwrap();
            assert_eq!(g.to_function().to_sanf(), g);
        }
    }
}

#[test]
fn transform_round_trip_randomized() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for i in 0..1000 {
        let n = 1 + i % 24;
        let f = SymmetricFunction::new(common::random_bits(&mut rng, n + 1)).unwrap();
        assert_eq!(f.to_sanf().to_function(), f);
    }
}

#[test]
fn sanf_agrees_with_mask_level_mobius() {
    // For a symmetric function the general ANF has nonzero coefficients
    // only as dictated by weight, with the coefficient at beta equal to the
    // SANF entry at wt(beta).
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for i in 0..60 {
        let n = 1 + i % 10;
        let f = SymmetricFunction::new(common::random_bits(&mut rng, n + 1)).unwrap();
        let lambda = f.to_sanf();
        let anf = f.truth_table().unwrap().mobius();
        for beta in 0..(1u64 << n) {
            assert_eq!(
                anf.get(beta),
                lambda.lambda()[weight(beta) as usize],
                "n={n} beta={beta:b}"
            );
        }
    }
}

#[test]
fn sanf_degree_matches_anf_degree() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for i in 0..60 {
        let n = 1 + i % 10;
        let f = SymmetricFunction::new(common::random_bits(&mut rng, n + 1)).unwrap();
        let anf = f.truth_table().unwrap().mobius();
        assert_eq!(f.to_sanf().degree(), anf.degree());
    }
}

#[test]
fn complement_commutes_with_expansion() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for i in 0..40 {
        let n = 1 + i % 10;
        let f = SymmetricFunction::new(common::random_bits(&mut rng, n + 1)).unwrap();
        assert_eq!(
            f.complement().truth_table().unwrap(),
            f.truth_table().unwrap().complement()
        );
    }
}

#[test]
fn mobius_is_an_involution() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for i in 0..1000 {
        let n = 1 + i % 12;
        let bits = common::random_bits(&mut rng, 1 << n);
        let tt = common::tt_from_bools(n, &bits);
        assert_eq!(tt.mobius().to_truth_table(), tt);
    }
}

#[test]
fn mobius_matches_direct_subset_sum() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for i in 0..40 {
        let n = 1 + i % 8;
        let bits = common::random_bits(&mut rng, 1 << n);
        let tt = common::tt_from_bools(n, &bits);
        let anf = tt.mobius();
        for beta in 0..(1u64 << n) {
            let direct = (0..(1u64 << n))
                .filter(|&a| a & beta == a)
                .fold(false, |acc, a| acc ^ bits[a as usize]);
            assert_eq!(anf.get(beta), direct, "n={n} beta={beta:b}");
        }
    }
}

#[test]
fn evaluate_agrees_with_expansion() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for i in 0..40 {
        let n = 1 + i % 10;
        let f = SymmetricFunction::new(common::random_bits(&mut rng, n + 1)).unwrap();
        let tt = f.truth_table().unwrap();
        for mask in 0..tt.num_points() {
            assert_eq!(tt.get(mask), f.evaluate(mask));
        }
    }
}

#[test]
fn input_complement_permutes_truth_table() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for i in 0..40 {
        let n = 1 + i % 10;
        let f = SymmetricFunction::new(common::random_bits(&mut rng, n + 1)).unwrap();
        let tt = f.truth_table().unwrap();
        let tt_ic = f.input_complement().truth_table().unwrap();
        let full = (1u64 << n) - 1;
        for mask in 0..tt.num_points() {
            assert_eq!(tt_ic.get(mask), tt.get(mask ^ full));
        }
    }
}

#[test]
fn truth_table_weight_is_sum_of_slice_sizes() {
    let f = SymmetricFunction::from_svv_str("0011").unwrap();
    let tt = f.truth_table().unwrap();
    assert_eq!(tt.weight(), 4); // C(3,2) + C(3,3)
}
