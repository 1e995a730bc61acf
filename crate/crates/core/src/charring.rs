//! Classical character ring `Z[X]^W`: weight multiplicities by Freudenthal's
//! recursion, Weyl dimensions, products of Weyl characters and tilting
//! characters in the first two alcoves.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use crate::alcove::AlcoveData;
use crate::cache::DiskCache;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, SignedWeight, Weight};

/// Weights of an irreducible module with their multiplicities. Keys are
/// dominant orbit representatives; the full support is expanded on demand.
#[derive(Debug)]
pub struct WeightMultiset {
    highest: Weight,
    dominant: BTreeMap<Weight, u64>,
    expanded: OnceLock<Vec<(Weight, u64)>>,
}

impl WeightMultiset {
    fn new(highest: Weight, dominant: BTreeMap<Weight, u64>) -> Self {
        WeightMultiset {
            highest,
            dominant,
            expanded: OnceLock::new(),
        }
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Multiplicities of the dominant weights.
    pub fn dominant(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    pub fn multiplicity(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        self.dominant
            .get(&rs.dominant_conjugate(mu))
            .copied()
            .unwrap_or(0)
    }

    /// Every weight with its multiplicity.
    pub fn all(&self, rs: &RootSystem) -> &[(Weight, u64)] {
        self.expanded.get_or_init(|| {
            let mut out = Vec::new();
            for (mu, &m) in &self.dominant {
                for w in rs.orbit(mu) {
                    out.push((w, m));
                }
            }
            out.sort();
            out
        })
    }

    pub fn total(&self, rs: &RootSystem) -> u128 {
        self.dominant
            .iter()
            .map(|(mu, &m)| m as u128 * rs.orbit(mu).len() as u128)
            .sum()
    }
}

/// Finitely supported integer combination of Weyl characters `chi(lambda)`,
/// `lambda` dominant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharElement(BTreeMap<Weight, i64>);

impl CharElement {
    pub fn zero() -> Self {
        CharElement(BTreeMap::new())
    }

    /// `chi(lambda)` for a dominant `lambda`.
    pub fn basis(lambda: Weight) -> Self {
        let mut m = BTreeMap::new();
        m.insert(lambda, 1);
        CharElement(m)
    }

    /// `chi(mu)` for an arbitrary integral weight, straightened through the
    /// dot action.
    pub fn of_weight(rs: &RootSystem, mu: &Weight) -> Result<Self> {
        let mut out = CharElement::zero();
        out.add_signed(rs.straighten_dominant(mu)?, 1);
        Ok(out)
    }

    pub fn add_term(&mut self, lambda: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.0.entry(lambda.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.0.remove(&lambda);
        }
    }

    pub fn add_signed(&mut self, sw: SignedWeight, coeff: i64) {
        if let SignedWeight::Nonzero { sign, weight } = sw {
            self.add_term(weight, sign * coeff);
        }
    }

    pub fn add(&self, other: &CharElement) -> CharElement {
        let mut out = self.clone();
        for (k, &v) in &other.0 {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &CharElement) -> CharElement {
        self.add(&other.scaled(-1))
    }

    pub fn scaled(&self, c: i64) -> CharElement {
        if c == 0 {
            return CharElement::zero();
        }
        CharElement(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn coeff(&self, lambda: &Weight) -> i64 {
        self.0.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.0.keys()
    }
}

impl fmt::Display for CharElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| match v {
                1 => format!("chi({k})"),
                -1 => format!("-chi({k})"),
                _ => format!("{v}*chi({k})"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Character-ring engine for one root system, with a shared multiplicity
/// cache (concurrent readers, exclusive insertion) and an optional disk cache.
#[derive(Debug)]
pub struct CharRing {
    rs: Arc<RootSystem>,
    cache: RwLock<HashMap<Weight, Arc<WeightMultiset>>>,
    disk: Option<DiskCache>,
}

impl CharRing {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        CharRing {
            rs,
            cache: RwLock::new(HashMap::new()),
            disk: DiskCache::from_env(),
        }
    }

    pub fn with_disk_cache(rs: Arc<RootSystem>, disk: Option<DiskCache>) -> Self {
        CharRing {
            rs,
            cache: RwLock::new(HashMap::new()),
            disk,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Weights of `L(lambda)` with multiplicities.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<Arc<WeightMultiset>> {
        self.rs.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if let Some(hit) = self.cache.read().expect("cache lock").get(lambda) {
            return Ok(hit.clone());
        }
        let ty = self.rs.cartan_type();
        let rank = self.rs.rank();
        let loaded = self.disk.as_ref().and_then(|d| d.load(ty, rank, lambda));
        let dominant = match loaded {
            Some(map) => map,
            None => {
                let map = freudenthal(&self.rs, lambda);
                if let Some(d) = &self.disk {
                    // a failed write only costs a recomputation next time
                    let _ = d.store(ty, rank, lambda, &map);
                }
                map
            }
        };
        let ms = Arc::new(WeightMultiset::new(lambda.clone(), dominant));
        let mut w = self.cache.write().expect("cache lock");
        Ok(w.entry(lambda.clone()).or_insert(ms).clone())
    }

    /// Product formula `prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128> {
        self.rs.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = lambda.add(&self.rs.rho());
        let rho = self.rs.rho();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for beta in self.rs.positive_roots() {
            num *= beta.coroot.pair(&shifted) as u128;
            den *= beta.coroot.pair(&rho) as u128;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        Ok(num / den)
    }

    /// Product of two characters, expanding the factor of smaller dimension
    /// into weights and straightening the shifted highest weights.
    pub fn char_product(&self, a: &CharElement, b: &CharElement) -> Result<CharElement> {
        let mut out = CharElement::zero();
        for (la, &x) in a.terms() {
            for (mu, &y) in b.terms() {
                let (small, big) = if self.weyl_dimension(la)? <= self.weyl_dimension(mu)? {
                    (la, mu)
                } else {
                    (mu, la)
                };
                let ms = self.weight_multiplicities(small)?;
                for (eta, m) in ms.all(&self.rs) {
                    let sw = self.rs.straighten_dominant(&big.add(eta))?;
                    out.add_signed(sw, x * y * (*m as i64));
                }
            }
        }
        Ok(out)
    }

    /// Dimension of a virtual character.
    pub fn dimension(&self, a: &CharElement) -> Result<i128> {
        a.terms().iter().try_fold(0i128, |acc, (k, &v)| {
            Ok(acc + v as i128 * self.weyl_dimension(k)? as i128)
        })
    }

    /// Character of the indecomposable tilting module `T(mu)` for `mu` in the
    /// upper closure of the fundamental alcove or in the closure of the
    /// second alcove across the affine wall.
    pub fn tilting_char_second_alcove(
        &self,
        mu: &Weight,
        alcove: &AlcoveData,
    ) -> Result<CharElement> {
        self.rs.check(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        if alcove.contains(mu) {
            return Err(Error::Precondition(format!(
                "{mu} lies in the fundamental alcove"
            )));
        }
        if alcove.shifted_pairing(mu) == alcove.wall() {
            return Ok(CharElement::basis(mu.clone()));
        }
        let reflected = alcove.affine_dot_reflect(mu);
        if !alcove.in_closed_domain(&reflected.add(&self.rs.rho())) {
            return Err(Error::Unsupported(format!(
                "tilting character of {mu} lies beyond the second alcove"
            )));
        }
        let mut out = CharElement::basis(mu.clone());
        out.add_signed(self.rs.straighten_dominant(&reflected)?, 1);
        Ok(out)
    }
}

/// Dominant weights below `lambda` with their multiplicities.
///
/// Every dominant weight of `L(lambda)` is reached from `lambda` through a
/// chain of dominant weights differing by positive roots, so a downward
/// search over positive roots finds the whole dominant support. The
/// recursion runs in integers: with `lambda - mu = sum k_i alpha_i`,
///
/// `(|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{beta>0} sum_{j>=1} (mu + j beta, beta) m(mu + j beta)`
///
/// and the left factor equals `sum k_i d_i (lambda_i + mu_i + 2)`.
fn freudenthal(rs: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let n = rs.rank();
    let sym = rs.symmetrizers();
    let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
    depth.insert(lambda.clone(), vec![0; n]);
    let mut frontier = vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        let k = depth[&mu].clone();
        for beta in rs.positive_roots() {
            let nu = mu.sub(&beta.omega);
            if nu.is_dominant() && !depth.contains_key(&nu) {
                let kk: Vec<i64> = k.iter().zip(&beta.simple).map(|(a, b)| a + b).collect();
                depth.insert(nu.clone(), kk);
                frontier.push(nu);
            }
        }
    }
    let mut order: Vec<(Weight, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by_key(|(w, k)| (k.iter().sum::<i64>(), w.clone()));

    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for (mu, k) in &order {
        if mu == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i128 = 0;
        for beta in rs.positive_roots() {
            let mut nu = mu.add(&beta.omega);
            while let Some(&m) = mult.get(&rs.dominant_conjugate(&nu)) {
                num += rs.form_root(beta, &nu) as i128 * m as i128;
                nu = nu.add(&beta.omega);
            }
        }
        num *= 2;
        let den: i128 = (0..n)
            .map(|i| k[i] as i128 * sym[i] as i128 * (lambda.0[i] + mu.0[i] + 2) as i128)
            .sum();
        assert!(den > 0, "Freudenthal denominator vanished at {mu}");
        assert_eq!(num % den, 0, "non-integral multiplicity at {mu} in L({lambda})");
        let m = num / den;
        assert!(m > 0, "dominant weight {mu} below {lambda} has multiplicity {m}");
        mult.insert(mu.clone(), m as u64);
    }
    mult.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn ring(ty: CartanType, n: usize) -> CharRing {
        CharRing::with_disk_cache(Arc::new(RootSystem::new(ty, n).unwrap()), None)
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn sl2_string() {
        let r = ring(CartanType::A, 1);
        let ms = r.weight_multiplicities(&w(&[3])).unwrap();
        let all: Vec<(Weight, u64)> = ms.all(r.root_system()).to_vec();
        assert_eq!(
            all,
            vec![(w(&[-3]), 1), (w(&[-1]), 1), (w(&[1]), 1), (w(&[3]), 1)]
        );
    }

    #[test]
    fn sl3_adjoint() {
        let r = ring(CartanType::A, 2);
        let ms = r.weight_multiplicities(&w(&[1, 1])).unwrap();
        assert_eq!(ms.multiplicity(r.root_system(), &w(&[0, 0])), 2);
        assert_eq!(ms.total(r.root_system()), 8);
    }

    #[test]
    fn sp4_omega2() {
        let r = ring(CartanType::C, 2);
        let ms = r.weight_multiplicities(&w(&[0, 1])).unwrap();
        assert_eq!(ms.total(r.root_system()), 5);
        assert_eq!(ms.multiplicity(r.root_system(), &w(&[0, 0])), 1);
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(ring(CartanType::A, 3).weyl_dimension(&w(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(ring(CartanType::C, 2).weyl_dimension(&w(&[1, 0])).unwrap(), 4);
        assert_eq!(ring(CartanType::G2, 2).weyl_dimension(&w(&[1, 0])).unwrap(), 7);
        assert_eq!(ring(CartanType::G2, 2).weyl_dimension(&w(&[0, 1])).unwrap(), 14);
        assert_eq!(ring(CartanType::D, 4).weyl_dimension(&w(&[0, 1, 0, 0])).unwrap(), 28);
        assert!(ring(CartanType::A, 1).weyl_dimension(&w(&[-1])).is_err());
    }

    #[test]
    fn products() {
        let r = ring(CartanType::A, 1);
        let p = r
            .char_product(&CharElement::basis(w(&[1])), &CharElement::basis(w(&[1])))
            .unwrap();
        assert_eq!(
            p,
            CharElement::basis(w(&[2])).add(&CharElement::basis(w(&[0])))
        );

        let c = ring(CartanType::C, 2);
        let p = c
            .char_product(&CharElement::basis(w(&[1, 0])), &CharElement::basis(w(&[1, 0])))
            .unwrap();
        let expect = CharElement::basis(w(&[2, 0]))
            .add(&CharElement::basis(w(&[0, 1])))
            .add(&CharElement::basis(w(&[0, 0])));
        assert_eq!(p, expect);

        let g = ring(CartanType::G2, 2);
        let x = CharElement::basis(w(&[1, 1]));
        assert_eq!(g.char_product(&CharElement::basis(w(&[0, 0])), &x).unwrap(), x);
    }

    #[test]
    fn add_term_cancels() {
        let mut e = CharElement::basis(w(&[1]));
        e.add_term(w(&[1]), -1);
        assert!(e.is_zero());
        assert_eq!(CharElement::of_weight(&RootSystem::new(CartanType::A, 1).unwrap(), &w(&[-3])).unwrap(),
            CharElement::basis(w(&[1])).scaled(-1));
    }

    #[test]
    fn disk_cache_is_used_and_repaired() {
        let dir = tempfile::tempdir().unwrap();
        let rs = Arc::new(RootSystem::new(CartanType::C, 2).unwrap());
        let disk = DiskCache::new(dir.path());
        let lam = w(&[1, 1]);
        let first = CharRing::with_disk_cache(rs.clone(), Some(disk.clone()));
        let a = first.weight_multiplicities(&lam).unwrap().dominant().clone();
        let path = disk.path_for(CartanType::C, 2, &lam);
        assert!(path.exists());
        std::fs::write(&path, "garbage\n").unwrap();
        let second = CharRing::with_disk_cache(rs, Some(disk.clone()));
        let b = second.weight_multiplicities(&lam).unwrap().dominant().clone();
        assert_eq!(a, b);
        assert_eq!(disk.load(CartanType::C, 2, &lam), Some(a));
    }
}
