use std::sync::Arc;

use fusionring::idealpres::{GeneratorSet, IdealContext, VerificationStatus};
use fusionring::{AlcoveData, CartanType, CharElement, Error, FusionRing, RootSystem, Weight};

fn ctx(ty: CartanType, n: usize, ell: u64) -> IdealContext {
    let rs = Arc::new(RootSystem::new(ty, n).unwrap());
    IdealContext::new(Arc::new(FusionRing::new(AlcoveData::new(rs, ell).unwrap())))
}

/// Dominant weights outside the alcove all of whose `lambda - omega_i`
/// (for `m_i > 0`) are inside, found in a box.
fn minimal_by_search(c: &IdealContext) -> Vec<Weight> {
    let a = c.alcove();
    let n = a.root_system().rank();
    let top = a.level() + 2;
    let mut out = Vec::new();
    let mut w = vec![0i64; n];
    'odometer: loop {
        let lam = Weight(w.clone());
        let below_inside = (0..n).filter(|&i| w[i] > 0).all(|i| {
            let mut v = lam.clone();
            v.0[i] -= 1;
            a.contains(&v)
        });
        if !a.contains(&lam) && below_inside {
            out.push(lam);
        }
        for x in w.iter_mut() {
            *x += 1;
            if *x <= top {
                continue 'odometer;
            }
            *x = 0;
        }
        break;
    }
    out.sort();
    out
}

#[test]
fn minimal_excluded_matches_search() {
    let list = [
        (CartanType::A, 2, 7),
        (CartanType::A, 3, 9),
        (CartanType::B, 2, 11),
        (CartanType::B, 3, 16),
        (CartanType::C, 2, 12),
        (CartanType::C, 3, 13),
        (CartanType::D, 4, 14),
        (CartanType::D, 4, 16),
        (CartanType::G2, 2, 21),
        (CartanType::G2, 2, 11),
    ];
    for (ty, n, ell) in list {
        let c = ctx(ty, n, ell);
        let mut got = c.minimal_excluded();
        got.sort();
        assert_eq!(got, minimal_by_search(&c), "{}", c.alcove());
    }
}

#[test]
fn presets_vanish_in_every_regime() {
    let list: [(CartanType, usize, u64, &str); 14] = [
        (CartanType::A, 2, 8, "A-I"),
        (CartanType::A, 3, 9, "A-J"),
        (CartanType::C, 2, 13, "C"),
        (CartanType::C, 2, 14, "C"),
        (CartanType::C, 3, 15, "C"),
        (CartanType::D, 4, 15, "D"),
        (CartanType::D, 4, 16, "D"),
        (CartanType::D, 4, 18, "D"),
        (CartanType::B, 2, 12, "B"),
        (CartanType::B, 2, 14, "B"),
        (CartanType::B, 3, 15, "B-odd-raw"),
        (CartanType::G2, 2, 27, "G2"),
        (CartanType::G2, 2, 30, "G2"),
        (CartanType::G2, 2, 13, "G2"),
    ];
    for (ty, n, ell, label) in list {
        let c = ctx(ty, n, ell);
        match c.preset(label) {
            Ok(g) => {
                let cert = c.image_zero_check(&g).unwrap();
                assert_eq!(cert.status, VerificationStatus::Verified, "{} {label}", c.alcove());
            }
            Err(Error::Unsupported(_)) => {}
            Err(e) => panic!("{} {label}: {e}", c.alcove()),
        }
    }
}

#[test]
fn presets_certify_beyond_the_acceptance_list() {
    for (ty, n, ell, label) in [
        (CartanType::C, 2, 13, "C"),
        (CartanType::C, 2, 14, "C"),
        (CartanType::D, 4, 16, "D"),
        (CartanType::B, 2, 12, "B"),
        (CartanType::G2, 2, 27, "G2"),
    ] {
        let c = ctx(ty, n, ell);
        let cert = c.certify_preset(label, c.default_bound()).unwrap();
        assert!(
            matches!(cert.status, VerificationStatus::Verified | VerificationStatus::Unsupported { .. }),
            "{} {label}: {}",
            c.alcove(),
            cert.status
        );
    }
}

#[test]
fn wrong_generators_are_refuted_or_incomplete() {
    let c = ctx(CartanType::A, 2, 7);
    // chi(omega_1) survives in the quotient
    let bad = GeneratorSet::new("bad", vec![CharElement::basis(Weight(vec![1, 0]))], "");
    assert!(matches!(
        c.certify(&bad, c.default_bound()).unwrap().status,
        VerificationStatus::Refuted { .. }
    ));
    // one generator short of a generating set
    let mut partial = c.preset("A-J").unwrap();
    partial.generators.pop();
    let cert = c.certify(&partial, 4).unwrap();
    assert_eq!(cert.status, VerificationStatus::Inconclusive { bound: 4 });
}

#[test]
fn regime_mismatch_is_reported() {
    let c = ctx(CartanType::C, 2, 11);
    assert!(matches!(c.preset("C-even"), Err(Error::PresetMismatch { .. })));
    let c = ctx(CartanType::B, 2, 11);
    assert!(matches!(c.preset("D"), Err(Error::PresetMismatch { .. })));
}

#[test]
fn recursions_hold_for_more_levels() {
    for ell in [27, 30, 33, 36] {
        let c = ctx(CartanType::G2, 2, ell);
        assert!(c.g2_recursion_check().unwrap().status.is_verified(), "ell={ell}");
    }
    assert!(ctx(CartanType::G2, 2, 22).g2_recursion_check().is_err());
}
