//! Round trips: build an invariant curve for a type, hide it behind a random
//! rotation and a relabelled generator, and detect the type again.

mod common;

use common::{hidden, witness};
use ksk_core::geometry::detect_type;
use ksk_core::typing::{admissible_types, SymmetryType};
use ksk_core::zmod::{gcd, GroupSpec};

const SAMPLES: usize = 1024;

#[test]
fn cyclic_types_round_trip() {
    let mut seed = 100;
    for n in 2..=8u64 {
        for t in admissible_types(GroupSpec::cyclic(n).unwrap()) {
            let (action, curve) = witness(t);
            assert_eq!(detect_type(&action, &curve, SAMPLES).unwrap().ty, t, "plain {t}");
            for k in (1..n as i64).filter(|&k| gcd(k as u64, n) == 1) {
                seed += 1;
                let (a, c) = hidden(&action, &curve, seed, k);
                let d = detect_type(&a, &c, SAMPLES).unwrap();
                assert_eq!(d.ty, t, "{t} hidden with power {k}");
                let back = detect_type(&a, &c.reversed(), SAMPLES).unwrap();
                assert_eq!(back.ty, t, "{t} reversed");
            }
        }
    }
}

#[test]
fn generator_power_is_reported() {
    let t: SymmetryType = "FPer(2,3)/C7".parse().unwrap();
    let (action, curve) = witness(t);
    for k in 1..7 {
        let d = detect_type(&action.with_generator_power(k).unwrap(), &curve, SAMPLES).unwrap();
        // (rho^k)^power is the original generator.
        assert_eq!((k as u64 * d.generator_power) % 7, 1, "k={k}");
    }
}
