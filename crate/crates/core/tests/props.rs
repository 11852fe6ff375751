//! Property tests for the structural invariants: canonical forms, duality,
//! partitions, orbits, and spinning.

use proptest::prelude::*;

use ntlab::code::{Code, LinearCode, UnrestrictedCode};
use ntlab::coset::{self, CosetTable};
use ntlab::design;
use ntlab::f2::{BitMatrix, BitVec};
use ntlab::perm::{PermGroup, Permutation};
use ntlab::submodule;

fn bitvec_strategy(len: usize) -> impl Strategy<Value = BitVec> {
    proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
        let mut v = BitVec::zeros(len);
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    })
}

fn matrix_strategy(max_rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    proptest::collection::vec(bitvec_strategy(cols), 1..=max_rows)
        .prop_map(move |rows| BitMatrix::from_rows(cols, rows).unwrap())
}

fn permutation_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in (1..degree).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation::new(images).unwrap()
    })
}

fn group_strategy(degree: usize) -> impl Strategy<Value = PermGroup> {
    proptest::collection::vec(permutation_strategy(degree), 1..=3)
        .prop_map(move |gens| PermGroup::new(degree, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(a in matrix_strategy(6, 9)) {
        let once = a.rref().matrix;
        prop_assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn dual_dimensions_complement(a in matrix_strategy(6, 9)) {
        let ech = a.rref();
        let dual = a.dual();
        prop_assert_eq!(ech.rank + dual.row_count(), 9);
        prop_assert!(dual.dual().same_space(&a).unwrap());
    }

    #[test]
    fn sum_contains_and_intersection_is_contained(
        a in matrix_strategy(5, 8),
        b in matrix_strategy(5, 8),
        probe in bitvec_strategy(8),
    ) {
        let sum = a.sum(&b).unwrap();
        let inter = a.intersection(&b).unwrap();
        for row in a.rows().iter().chain(b.rows()) {
            prop_assert!(sum.contains(row));
        }
        for row in inter.rows() {
            prop_assert!(a.contains(row) && b.contains(row));
        }
        // a random vector in both spaces lies in the intersection
        if a.contains(&probe) && b.contains(&probe) {
            prop_assert!(inter.contains(&probe));
        }
    }

    #[test]
    fn linear_min_distance_matches_word_set_oracle(gen in matrix_strategy(5, 10)) {
        let code = LinearCode::from_generator(gen);
        prop_assume!(code.dimension() >= 1);
        let words = code.all_words().unwrap();
        let oracle = UnrestrictedCode::new(10, words).unwrap();
        prop_assert_eq!(
            code.minimum_distance().unwrap(),
            oracle.minimum_distance().unwrap()
        );
    }

    #[test]
    fn puncture_and_extension_counts(gen in matrix_strategy(5, 9), entry in 0usize..9) {
        let code = LinearCode::from_generator(gen);
        prop_assume!(code.dimension() >= 1);
        let punctured = code.puncture(entry).unwrap();
        let drop = code.dimension() - punctured.dimension();
        prop_assert!(drop <= 1);
        prop_assert_eq!(drop == 1, code.contains(&BitVec::unit(9, entry)));

        let extended = code.extend_parity();
        prop_assert_eq!(extended.dimension(), code.dimension());
        let wd = extended.weight_distribution().unwrap();
        for w in wd.support() {
            prop_assert_eq!(w % 2, 0);
        }
    }

    #[test]
    fn self_orthogonal_codes_have_even_rows(gen in matrix_strategy(5, 10)) {
        let code = LinearCode::from_generator(gen);
        if code.is_self_orthogonal() {
            let rows = code.generator().rows();
            for (i, a) in rows.iter().enumerate() {
                prop_assert_eq!(a.weight() % 2, 0);
                for b in &rows[i + 1..] {
                    prop_assert_eq!(a.xor(b).weight() % 2, 0);
                }
            }
        }
    }

    #[test]
    fn coset_distance_is_constant_on_cosets(
        gen in matrix_strategy(4, 9),
        v in bitvec_strategy(9),
        coeffs in proptest::collection::vec(any::<bool>(), 4),
    ) {
        let code = LinearCode::from_generator(gen);
        prop_assume!(code.dimension() >= 1);
        let table = CosetTable::build(&code).unwrap();
        let mut translated = v.clone();
        for (i, c) in coeffs.iter().take(code.dimension()).enumerate() {
            if *c {
                translated.xor_assign(code.generator().row(i));
            }
        }
        prop_assert_eq!(table.distance_to_code(&v), table.distance_to_code(&translated));
    }

    #[test]
    fn distance_partition_sums_to_whole_space(gen in matrix_strategy(4, 9)) {
        let code = LinearCode::from_generator(gen);
        prop_assume!(code.dimension() >= 1);
        let partition = coset::distance_partition_linear(&code).unwrap();
        prop_assert_eq!(partition.total(), num_bigint::BigUint::from(1u32) << 9);
    }

    #[test]
    fn orbits_partition_the_points(g in group_strategy(9)) {
        let mut seen = vec![false; 9];
        let mut total = 0;
        for p in 0..9 {
            if !seen[p] {
                let orbit = g.orbit_point(p);
                total += orbit.len();
                for q in orbit {
                    prop_assert!(!seen[q]);
                    seen[q] = true;
                }
            }
        }
        prop_assert_eq!(total, 9);
    }

    #[test]
    fn group_order_ignores_generator_order(g in group_strategy(8)) {
        let mut reversed = g.generators().to_vec();
        reversed.reverse();
        let h = PermGroup::new(8, reversed).unwrap();
        prop_assert_eq!(g.order(), h.order());
    }

    #[test]
    fn pair_orbit_size_divides_group_order(g in group_strategy(8)) {
        // orbit-stabilizer: every orbit length divides the group order;
        // under a 2-homogeneous action the pair orbit is all 28 pairs
        let orbit = g.orbit_subset(&[0, 1]);
        prop_assert_eq!(g.order() % num_bigint::BigUint::from(orbit.len()), 0u32.into());
        if g.transitivity_profile().is_2_homogeneous {
            prop_assert_eq!(orbit.len(), 28);
        }
    }

    #[test]
    fn two_transitive_implies_two_homogeneous(g in group_strategy(7)) {
        let profile = g.transitivity_profile();
        prop_assert!(!profile.is_2_transitive || profile.is_2_homogeneous);
    }

    #[test]
    fn spin_contains_seed_and_is_invariant(g in group_strategy(8), seed in bitvec_strategy(8)) {
        prop_assume!(!seed.is_zero());
        let spun = submodule::spin(&g, &seed).unwrap();
        prop_assert!(spun.contains(&seed));
        prop_assert!(g.is_invariant_linear(&spun).unwrap());
        // monotone: spinning from inside an invariant space stays inside
        let even = LinearCode::even_weight(8);
        if even.contains(&seed) && g.is_invariant_linear(&even).unwrap() {
            for row in spun.generator().rows() {
                prop_assert!(even.contains(row));
            }
        }
    }

    #[test]
    fn design_double_count(gen in matrix_strategy(4, 8)) {
        let code = LinearCode::from_generator(gen);
        prop_assume!(code.dimension() >= 1);
        let wd = code.weight_distribution().unwrap();
        if let Some(w) = wd.support().into_iter().find(|&w| w > 0) {
            let layer = design::extract_layer(&code, w).unwrap();
            let total_weight: u64 = layer.blocks().iter().map(|b| b.weight() as u64).sum();
            prop_assert_eq!(total_weight, layer.block_count() * w as u64);
            if let Some(r) = layer.replication_number() {
                // bk = vr double count
                prop_assert_eq!(
                    layer.block_count() * w as u64,
                    8 * r
                );
            }
        }
    }
}

#[test]
fn perfect_code_agrees_with_sphere_packing() {
    // a linear code with delta = 3 and covering radius 1 must satisfy
    // 2^k (1 + m) = 2^m
    let code = match (ntlab::catalog::CodeFamily::Hamming { t: 3 }).construct().unwrap() {
        Code::Linear(c) => c,
        _ => unreachable!(),
    };
    let table = CosetTable::build(&code).unwrap();
    assert_eq!(code.minimum_distance().unwrap(), 3);
    assert_eq!(table.covering_radius(), 1);
    let m = code.length();
    assert_eq!((1u64 << code.dimension()) * (1 + m as u64), 1u64 << m);
}
