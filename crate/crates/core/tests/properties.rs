use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

use ccalc::classes::{total_segre, VirtualBundle};
use ccalc::localization::{assemble, localize, localized_pushforward};
use ccalc::poly::EquivClass;
use ccalc::projective::{build_projective_model, Locus, ProjectiveModel};
use ccalc::random::{self, case_rng, CaseRng};
use ccalc::ring::{BaseClass, Ring};
use ccalc::sw::{connect_sum_sw, monopole_degree, MonopoleSideData};

const BOUND: i64 = 3;

fn setup(seed: u64, ring_index: usize) -> (CaseRng, String, Ring) {
    let rings = random::preset_rings();
    let (label, ring) = rings[ring_index % rings.len()].clone();
    (case_rng(seed, "properties", ring_index), label, ring)
}

fn any_class(rng: &mut CaseRng, ring: &Ring) -> BaseClass {
    let mut out = BaseClass::zero(ring);
    for d in 0..=ring.truncation() {
        out = out.checked_add(&random::homogeneous(rng, ring, d, BOUND)).unwrap();
    }
    out
}

fn model(rng: &mut CaseRng, ring: &Ring) -> ProjectiveModel {
    let a1 = rng.gen_range(0..=2);
    let a2 = rng.gen_range(u32::from(a1 == 0)..=2);
    let v1 = random::genuine_bundle(rng, ring, a1, BOUND);
    let v2 = random::genuine_bundle(rng, ring, a2, BOUND);
    build_projective_model(&v1, &v2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_is_associative_and_graded_commutative(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let (da, db) = (rng.gen_range(0..=ring.truncation()), rng.gen_range(0..=ring.truncation()));
        let a = random::homogeneous(&mut rng, &ring, da, BOUND);
        let b = random::homogeneous(&mut rng, &ring, db, BOUND);
        let c = any_class(&mut rng, &ring);
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
        let sign = if da * db % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(ab, b.checked_mul(&a).unwrap().scale(&BigInt::from(sign)));
    }

    #[test]
    fn segre_inverts_chern(seed: u64, r in 0usize..5, rank in -4i64..=4) {
        let (mut rng, _, ring) = setup(seed, r);
        let v = random::virtual_bundle(&mut rng, &ring, rank, BOUND);
        prop_assert!(v.total_chern().checked_mul(&total_segre(&v)).unwrap().is_one());
        prop_assert_eq!(total_segre(&v.negate()), v.total_chern().clone());
    }

    #[test]
    fn reduction_is_idempotent_and_multiplicative(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let m = model(&mut rng, &ring);
        let top = m.rank() + 2;
        let p = random::equiv_class(&mut rng, &ring, top, 2, BOUND).unwrap();
        let q = random::equiv_class(&mut rng, &ring, top, 2, BOUND).unwrap();
        let rp = m.reduce_poly(&p).unwrap();
        prop_assert_eq!(m.reduce_poly(&rp).unwrap(), rp.clone());
        let rq = m.reduce_poly(&q).unwrap();
        prop_assert_eq!(
            m.reduce_poly(&p.mul(&q).unwrap()).unwrap(),
            m.reduce_poly(&rp.mul(&rq).unwrap()).unwrap()
        );
        prop_assert!(m.reduce(m.relation()).unwrap().is_zero());
    }

    #[test]
    fn projection_formula(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let m = model(&mut rng, &ring);
        let b = any_class(&mut rng, &ring);
        let c = random::equiv_class(&mut rng, &ring, m.rank() + 2, 2, BOUND).unwrap();
        let lhs = m.gysin_pushforward_poly(&m.pullback(&b).mul(&c).unwrap()).unwrap();
        let rhs = EquivClass::constant(&b).mul(&m.gysin_pushforward_poly(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pushforward_kills_low_powers(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let m = model(&mut rng, &ring);
        for j in 0..m.rank().saturating_sub(1) {
            prop_assert!(m.gysin_pushforward_poly(&EquivClass::monomial(&ring, j, 0)).unwrap().is_zero());
        }
        let top = m.gysin_pushforward_poly(&EquivClass::monomial(&ring, m.rank() - 1, 0)).unwrap();
        prop_assert_eq!(top, EquivClass::one(&ring));
    }

    #[test]
    fn localization_round_trip(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let m = model(&mut rng, &ring);
        let c = random::equiv_class(&mut rng, &ring, m.rank() + 2, 2, BOUND).unwrap();
        let l = localize(&c, &m).unwrap();
        prop_assert_eq!(assemble(&l, &m).unwrap(), m.reduce(&c.to_laurent()).unwrap());
        prop_assert_eq!(
            localized_pushforward(&l, &m).unwrap(),
            m.gysin_pushforward(&c.to_laurent()).unwrap()
        );
    }

    #[test]
    fn relation_restricts_to_zero(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let m = model(&mut rng, &ring);
        for locus in Locus::BOTH {
            prop_assert!(m.restrict_to_fixed(m.relation(), locus).unwrap().is_zero());
        }
    }

    #[test]
    fn degree_bookkeeping(seed: u64, r in 0usize..5, n in 0u32..=3) {
        let (mut rng, _, ring) = setup(seed, r);
        let d = random::index_bundle(&mut rng, &ring, n, BOUND);
        let b = rng.gen_range(0..=ring.truncation());
        let h = random::real_bundle(&mut rng, &ring, b, BOUND);
        let side = MonopoleSideData::new(d, h).unwrap();
        let deg = monopole_degree(&side).unwrap();
        prop_assert!(deg.is_zero() || deg.is_homogeneous_of(i64::from(2 * n + b)));
        let window = n + 3;
        let shift = -2 * i64::from(rng.gen_range(0..=window));
        let f2 = random::sw_functional(&mut rng, &ring, shift, window, BOUND);
        for m in 0..=window - n {
            let sw = connect_sum_sw(&f2, &side, m).unwrap();
            let expected = 2 * i64::from(m) + shift + i64::from(b) + 2 * i64::from(n);
            prop_assert!(sw.is_zero() || sw.homogeneous_degree().map(i64::from) == Some(expected));
        }
    }

    #[test]
    fn trivial_index_bundle_is_identity(seed: u64, r in 0usize..5) {
        let (mut rng, _, ring) = setup(seed, r);
        let f2 = random::sw_functional(&mut rng, &ring, -2, 3, BOUND);
        let side = MonopoleSideData::new(
            VirtualBundle::trivial(&ring, 0),
            ccalc::classes::OrientedRealBundle::trivial(&ring, 0),
        ).unwrap();
        for m in 0..=3 {
            prop_assert_eq!(&connect_sum_sw(&f2, &side, m).unwrap(), &f2.values()[m as usize]);
        }
    }
}
