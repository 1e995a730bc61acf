//! Brute-force reference computations used to cross-check the engines.
//! Nothing here shares code paths with Freudenthal's recursion or the
//! alcove projection.

use std::collections::{BTreeMap, HashMap};

use crate::alcove::GlAlcove;
use crate::comb::{subsets, AlcoveVector};
use crate::fusionring::{FusionElement, FusionTable};
use crate::rootsys::{GlWeight, RootSystem, Weight};

/// Closed-form sl_2 fusion rule at level `k`.
pub fn sl2_rule(k: i64, a: i64, b: i64, c: i64) -> i64 {
    let ok = (a - b).abs() <= c && c <= (a + b).min(2 * k - a - b) && (a + b + c) % 2 == 0;
    i64::from(ok)
}

/// The full sl_2 table at level `k` from [`sl2_rule`].
pub fn sl2_table(k: i64) -> FusionTable {
    let basis: Vec<Weight> = (0..=k).map(|a| Weight(vec![a])).collect();
    let mut products = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            products.push(
                (0..=k)
                    .map(|c| (Weight(vec![c]), sl2_rule(k, a, b, c)))
                    .collect::<FusionElement>(),
            );
        }
    }
    FusionTable::from_products(basis, products)
}

/// Number of ways to write `gamma` (simple-root coordinates) as a sum of
/// positive roots.
struct Partitions<'a> {
    roots: Vec<&'a [i64]>,
    memo: HashMap<(usize, Vec<i64>), u64>,
}

impl<'a> Partitions<'a> {
    fn count(&mut self, j: usize, gamma: &[i64]) -> u64 {
        if gamma.iter().any(|&x| x < 0) {
            return 0;
        }
        if gamma.iter().all(|&x| x == 0) {
            return 1;
        }
        if j == self.roots.len() {
            return 0;
        }
        let key = (j, gamma.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut rest = gamma.to_vec();
        while rest.iter().all(|&x| x >= 0) {
            total += self.count(j + 1, &rest);
            for (r, b) in rest.iter_mut().zip(self.roots[j]) {
                *r -= b;
            }
        }
        self.memo.insert(key, total);
        total
    }
}

/// Dominant weight multiplicities of `L(lambda)` from the alternating sum
/// `m(mu) = sum_w det(w) P(w(lambda + rho) - (mu + rho))`.
pub fn kostant_multiplicities(rs: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let n = rs.rank();
    let rho = rs.rho();
    let lowest = rs.dominant_conjugate(&lambda.scaled(-1)).scaled(-1);
    let span = rs
        .to_root_coords(&lambda.sub(&lowest))
        .expect("lambda - w0 lambda lies in the root lattice");
    let shifted = rs.signed_orbit(&lambda.add(&rho));
    let roots: Vec<&[i64]> = rs.positive_roots().iter().map(|b| b.simple.as_slice()).collect();
    let mut parts = Partitions { roots, memo: HashMap::new() };
    let mut out = BTreeMap::new();
    let mut depth = vec![0i64; n];
    loop {
        let mut mu = lambda.clone();
        for (i, &d) in depth.iter().enumerate() {
            mu = mu.add_scaled(rs.simple_root(i), -d);
        }
        if mu.is_dominant() {
            let target = mu.add(&rho);
            let mut m: i64 = 0;
            for (w, sign) in &shifted {
                if let Some(g) = rs.to_root_coords(&w.sub(&target)) {
                    m += sign * parts.count(0, &g) as i64;
                }
            }
            assert!(m >= 0, "negative multiplicity from the alternating sum");
            if m > 0 {
                out.insert(mu, m as u64);
            }
        }
        // odometer over 0 <= depth_i <= span_i
        let mut i = 0;
        while i < n {
            depth[i] += 1;
            if depth[i] <= span[i] {
                break;
            }
            depth[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

/// Weyl dimension `prod_{beta>0} <lambda+rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> u128 {
    let rho = rs.rho();
    let lr = lambda.add(&rho);
    let (mut num, mut den) = (1u128, 1u128);
    for b in rs.positive_roots() {
        num *= b.coroot.pair(&lr) as u128;
        den *= b.coroot.pair(&rho) as u128;
    }
    num / den
}

/// Dominant weights with Weyl dimension at most `max_dim`, sorted.
pub fn dominant_up_to_dimension(rs: &RootSystem, max_dim: u128) -> Vec<Weight> {
    // dimension grows in every coordinate, so each coordinate is cut off at
    // the first overflow
    fn rec(rs: &RootSystem, cur: &mut Weight, i: usize, max_dim: u128, out: &mut Vec<Weight>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        loop {
            if weyl_dimension(rs, cur) > max_dim {
                break;
            }
            rec(rs, cur, i + 1, max_dim, out);
            cur.0[i] += 1;
        }
        cur.0[i] = 0;
    }
    let mut out = Vec::new();
    rec(rs, &mut Weight::zero(rs.rank()), 0, max_dim, &mut out);
    out.sort();
    out
}

/// `sum_{|S| = j} (lambda + eps_S)` over subsets that keep the weight in the
/// gl_n alcove.
pub fn pieri_subset_rule(alcove: &GlAlcove, j: usize, lambda: &GlWeight) -> AlcoveVector<GlWeight> {
    let mut out = AlcoveVector::zero();
    for s in subsets(alcove.n(), j) {
        let mut mu = lambda.clone();
        for &i in &s {
            mu.0[i] += 1;
        }
        if alcove.contains(&mu) {
            out.add_term(mu, 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    #[test]
    fn sl3_adjoint() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let m = kostant_multiplicities(&rs, &Weight(vec![1, 1]));
        assert_eq!(m.get(&Weight(vec![0, 0])), Some(&2));
        assert_eq!(m.get(&Weight(vec![1, 1])), Some(&1));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn g2_seven() {
        let rs = RootSystem::new(CartanType::G2, 2).unwrap();
        let m = kostant_multiplicities(&rs, &Weight(vec![1, 0]));
        assert_eq!(m.get(&Weight(vec![0, 0])), Some(&1));
        assert_eq!(weyl_dimension(&rs, &Weight(vec![1, 0])), 7);
    }

    #[test]
    fn sl2_small() {
        assert_eq!(sl2_rule(3, 1, 1, 0), 1);
        assert_eq!(sl2_rule(3, 1, 1, 2), 1);
        assert_eq!(sl2_rule(3, 2, 2, 2), 1);
        assert_eq!(sl2_rule(3, 2, 2, 4), 0);
        assert_eq!(sl2_rule(3, 3, 3, 0), 1);
    }

    #[test]
    fn dimension_cutoff() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        assert_eq!(dominant_up_to_dimension(&rs, 5).len(), 5);
    }
}
