//! Randomized smooth conjugations of rigid rotations and reflections.

mod common;

use common::{conjugate, random_diffeo};
use ksk_core::circlemaps::{
    cyclic_conjugator, dihedral_conjugator, reflection_defect, rotation_number, semiconjugacy_check,
    translation_defect, CircleMapLift,
};
use ksk_core::zmod::gcd;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn conjugators_straighten_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..50 {
        let n = rng.random_range(2..=8u64);
        let phi = random_diffeo(&mut rng);
        let g = conjugate(&phi, &CircleMapLift::translation(1.0 / n as f64));
        if case % 2 == 0 {
            let h = cyclic_conjugator(&g, n).unwrap();
            let e = translation_defect(&h, &g, 1.0 / n as f64, 4096);
            assert!(e < 1e-6, "case {case}, n = {n}: {e:e}");
        } else {
            let s = conjugate(&phi, &CircleMapLift::reflection(rng.random_range(0.0..1.0)));
            let h = dihedral_conjugator(&g, &s, n).unwrap();
            let e = translation_defect(&h, &g, 1.0 / n as f64, 4096).max(reflection_defect(&h, &s, 4096));
            assert!(e < 1e-6, "case {case}, n = {n}: {e:e}");
        }
    }
}

#[test]
fn rotation_numbers_snap_to_a_over_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 1..=16u64 {
        for a in (0..n).filter(|&a| gcd(a, n) == 1) {
            let g = conjugate(&random_diffeo(&mut rng), &CircleMapLift::translation(a as f64 / n as f64));
            let r = rotation_number(&g, 64 * n).unwrap();
            assert_eq!(r.snap_to_order(n), Some(a as i64), "{a}/{n}: {}", r.value);
        }
    }
}

#[test]
fn semiconjugacy_relation_holds_on_random_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for case in 0..100 {
        let f = conjugate(&random_diffeo(&mut rng), &CircleMapLift::translation(rng.random_range(-1.0..1.0)));
        let mut h = random_diffeo(&mut rng);
        if case % 2 == 1 {
            h = h.compose(&CircleMapLift::reflection(0.0)).unwrap();
        }
        let g = conjugate(&h, &f);
        let rep = semiconjugacy_check(&f, &g, &h, 2000).unwrap();
        assert!(rep.holds, "case {case}: {rep:?}");
    }
}
