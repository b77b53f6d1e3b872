mod common;

use lensknot::connectsum::{connect_invariants, oracle_check, SummandInvariants};
use lensknot::dga::{find_augmentations, homology_polynomial, linearize};
use lensknot::families::{self, generate, FamilyKind, FamilySpec, Lens};
use lensknot::grading::Grading;
use lensknot::surgery::{transform_invariants, PushoffSign};
use lensknot::Rational64 as Q;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pushoff() -> impl Strategy<Value = PushoffSign> {
    prop_oneof![Just(PushoffSign::Positive), Just(PushoffSign::Negative)]
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn surgery_orders_are_minimal(seed in any::<u64>(), sign in pushoff()) {
        let p = common::random_presentation(&mut ChaCha8Rng::seed_from_u64(seed), sign);
        let r = transform_invariants(&p, sign).unwrap();
        prop_assert_eq!(r.order as i128, common::brute_force_order(&p));
        prop_assert_eq!(&r.sl_q, &(r.tb_q - (Q::int(sign.sign()) * r.rot_q)));
    }

    #[test]
    fn connected_sum_is_symmetric(seed in any::<u64>(), sign in pushoff()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p1 = common::random_presentation(&mut rng, sign);
        let p2 = common::random_presentation(&mut rng, sign);
        let ab = oracle_check(&p1, &p2, sign).unwrap();
        let ba = oracle_check(&p2, &p1, sign).unwrap();
        prop_assert!(ab.pass && ba.pass);
        prop_assert_eq!(&ab.surgery, &ba.surgery);
    }

    #[test]
    fn connected_sum_associates(seed in any::<u64>(), sign in pushoff()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s: Vec<SummandInvariants> = (0..3)
            .map(|_| transform_invariants(&common::random_presentation(&mut rng, sign), sign).unwrap().into())
            .collect();
        let left = connect_invariants(&connect_invariants(&s[0], &s[1]).unwrap(), &s[2]).unwrap();
        let right = connect_invariants(&s[0], &connect_invariants(&s[1], &s[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn family_homology_is_the_chain_part_plus_clasp(
        prime in any::<bool>(), n in 3u32..=15, l_seed in any::<u32>(), lens_ix in 0usize..4,
    ) {
        let kind = if prime { FamilyKind::PrimeTwist } else { FamilyKind::LsTwist };
        let (a, b) = [(3, 1), (5, 2), (7, 3), (8, 5)][lens_ix];
        let l = 1 + l_seed % (n - 1);
        let spec = FamilySpec::new(kind, n, l, Lens::new(a, b).unwrap()).unwrap();
        let inst = generate::<i64>(&spec, 0);
        let p = homology_polynomial(&inst.complex);
        let period = families::family_period::<i64>(kind);
        let clasp = families::clasp_gradings::<i64>(kind, n, l).to_vec();
        for d in [Grading::ints(1, 0, 0), Grading::ints(-2, 2, 0)] {
            let extra = clasp.iter().filter(|g| g.canonicalize(&period) == d.canonicalize(&period)).count() as u64;
            prop_assert_eq!(p.multiplicity(&d), 1 + extra);
        }
        prop_assert_eq!(p.total_dimension(), 6);
    }
}

#[test]
fn full_dga_pipeline_agrees_with_linear_complex() {
    for l in 1..=3 {
        let spec = FamilySpec::new(FamilyKind::PrimeTwist, 4, l, Lens::new(5, 2).unwrap()).unwrap();
        let inst = generate::<i64>(&spec, 0);
        let d = inst.dga.as_ref().unwrap();
        let augs = find_augmentations(d, 24).unwrap();
        assert_eq!(augs.len(), 1);
        assert_eq!(linearize(d, &augs[0]).unwrap(), inst.complex);
    }
}

#[test]
fn clasp_collisions_with_chain_degrees() {
    // Where a clasp grading equals 1 or 2μ−2 the corresponding homology is
    // two-dimensional. List them so the count is visible in test output.
    let mut hits = Vec::new();
    for kind in [FamilyKind::PrimeTwist, FamilyKind::LsTwist] {
        let period = families::family_period::<i64>(kind);
        for n in 3..=15u32 {
            for l in 1..n {
                let clasp = families::clasp_gradings::<i64>(kind, n, l).to_vec();
                if clasp.iter().any(|g| {
                    let c = g.canonicalize(&period);
                    c == Grading::ints(1, 0, 0) || c == Grading::ints(-2, 2, 0)
                }) {
                    hits.push(format!("{kind}({l},{})", n - l));
                }
            }
        }
    }
    println!(
        "instances with a clasp generator in degree 1 or 2μ−2: {}",
        hits.join(" ")
    );
    assert!(!hits.is_empty());
}
