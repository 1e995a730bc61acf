use std::sync::Arc;

use fusionring::comb::{AlcoveVector, TypeAComb, TypeCComb};
use fusionring::oracle::pieri_subset_rule;
use fusionring::fusionring::DEFAULT_TABLE_CAP;
use fusionring::{AlcoveData, CartanType, FusionRing, GlFusionRing, GlWeight, RootSystem};

fn fusion(ty: CartanType, n: usize, ell: u64) -> FusionRing {
    FusionRing::new(AlcoveData::new(Arc::new(RootSystem::new(ty, n).unwrap()), ell).unwrap())
}

#[test]
fn ordered_products_follow_pieri() {
    for n in 2..=4 {
        for ell in (n as u64 + 1)..=9 {
            let Ok(comb) = TypeAComb::new(n, ell) else {
                continue;
            };
            for lam in comb.alcove().enumerate_transversal() {
                for j in 0..=n {
                    let got = comb.elementary(j, &AlcoveVector::basis(lam.clone())).unwrap();
                    assert_eq!(got, pieri_subset_rule(comb.alcove(), j, &lam), "gl_{n} ell={ell} e_{j}({lam})");
                }
            }
        }
    }
}

#[test]
fn type_a_tables_match_fusion() {
    for (n, ell) in [(2, 5), (2, 7), (3, 7), (3, 8), (4, 9)] {
        let comb = TypeAComb::new(n, ell).unwrap();
        let star = comb.sl_star_table().unwrap();
        let fus = fusion(CartanType::A, n - 1, ell).fusion_table(DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(star.first_difference(&fus), None, "sl_{n} ell={ell}");
    }
}

#[test]
fn gl2_products_match_lifted_fusion() {
    let comb = TypeAComb::new(2, 5).unwrap();
    let gl = GlFusionRing::new(2, 5).unwrap();
    let mut basis = comb.alcove().enumerate_transversal();
    basis.extend(basis.clone().into_iter().map(|w| w.shifted(1)));
    for a in &basis {
        for b in &basis {
            let star = comb.star(a, b).unwrap();
            let direct: AlcoveVector<GlWeight> = gl.fuse(a, b).unwrap().into_iter().collect();
            assert_eq!(star, direct, "{a} * {b}");
        }
    }
}

#[test]
fn sl_reduce_is_multiplicative() {
    let comb = TypeAComb::new(3, 7).unwrap();
    let basis = comb.alcove().enumerate_transversal();
    for a in &basis {
        for b in &basis {
            let shifted = comb.star(&a.shifted(2), &b.shifted(1)).unwrap();
            let plain = comb.star(a, b).unwrap();
            assert_eq!(TypeAComb::sl_reduce(&shifted), TypeAComb::sl_reduce(&plain));
        }
    }
}

#[test]
fn type_c_tables_match_fusion() {
    for (n, ell) in [(2, 11), (2, 12), (3, 14)] {
        let f = fusion(CartanType::C, n, ell);
        let comb = TypeCComb::new(f.alcove().clone()).unwrap();
        let star = comb.star_table().unwrap();
        let fus = f.fusion_table(DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(star.first_difference(&fus), None, "C_{n} ell={ell}");
    }
}

#[test]
fn type_a_elementary_operators_commute() {
    for (n, ell) in [(2, 5), (3, 7), (3, 8), (4, 9)] {
        let comb = TypeAComb::new(n, ell).unwrap();
        for lam in comb.alcove().enumerate_transversal() {
            let v = AlcoveVector::basis(lam.clone());
            for i in 0..=n {
                for j in (i + 1)..=n {
                    let a = comb.elementary(i, &comb.elementary(j, &v).unwrap()).unwrap();
                    let b = comb.elementary(j, &comb.elementary(i, &v).unwrap()).unwrap();
                    assert_eq!(a, b, "gl_{n} ell={ell} [e_{i}, e_{j}] on {lam}");
                }
            }
        }
    }
}

#[test]
fn star_is_commutative_and_associative() {
    let comb = TypeAComb::new(3, 7).unwrap();
    let basis = comb.alcove().enumerate_transversal();
    let times = |x: &AlcoveVector<GlWeight>, c: &GlWeight| {
        let mut out = AlcoveVector::zero();
        for (w, &k) in x.terms() {
            out.add_scaled(&comb.star(w, c).unwrap(), k);
        }
        out
    };
    for a in &basis {
        for b in &basis {
            let ab = comb.star(a, b).unwrap();
            assert_eq!(ab, comb.star(b, a).unwrap());
            for c in basis.iter().step_by(3) {
                let bc = comb.star(b, c).unwrap();
                assert_eq!(times(&ab, c), times(&bc, a), "({a} {b}) {c}");
            }
        }
    }
    let f = fusion(CartanType::C, 2, 12);
    let cc = TypeCComb::new(f.alcove().clone()).unwrap();
    for a in f.basis() {
        for b in f.basis() {
            assert_eq!(cc.star(a, b).unwrap(), cc.star(b, a).unwrap());
        }
    }
}
