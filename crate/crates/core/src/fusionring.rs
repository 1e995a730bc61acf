//! The fusion ring: products by projecting shifted weights onto the alcove,
//! an independent alternating-sum route, the quotient map from the character
//! ring, and full structure-constant tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::alcove::{AlcoveData, GlAlcove};
use crate::charring::{CharElement, CharRing};
use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::rootsys::{GlWeight, SignedWeight, Weight};

/// Default cap on `|alcove|^3` before a table is streamed instead of stored.
pub const DEFAULT_TABLE_CAP: u128 = 10_000_000;

/// Integer combination of alcove basis elements `[lambda]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionElement(BTreeMap<Weight, i64>);

impl FusionElement {
    pub fn zero() -> Self {
        FusionElement(BTreeMap::new())
    }

    pub fn basis(lambda: Weight) -> Self {
        let mut m = BTreeMap::new();
        m.insert(lambda, 1);
        FusionElement(m)
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

    pub fn coeff(&self, lambda: &Weight) -> i64 {
        self.0.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &FusionElement) -> FusionElement {
        let mut out = self.clone();
        for (k, &v) in &other.0 {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn scaled(&self, c: i64) -> FusionElement {
        let mut out = FusionElement::zero();
        for (k, &v) in &self.0 {
            out.add_term(k.clone(), v * c);
        }
        out
    }
}

impl FromIterator<(Weight, i64)> for FusionElement {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut out = FusionElement::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl fmt::Display for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| match v {
                1 => format!("[{k}]"),
                _ => format!("{v}*[{k}]"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug)]
pub struct FusionRing {
    alcove: Arc<AlcoveData>,
    chars: Arc<CharRing>,
    basis: Vec<Weight>,
    translations: IntLattice,
}

impl FusionRing {
    pub fn new(alcove: AlcoveData) -> Self {
        let chars = Arc::new(CharRing::new(alcove.root_system().clone()));
        FusionRing::with_chars(Arc::new(alcove), chars)
    }

    pub fn with_chars(alcove: Arc<AlcoveData>, chars: Arc<CharRing>) -> Self {
        let rs = alcove.root_system();
        let wall = alcove.wall();
        let gens = rs
            .orbit(&alcove.theta().omega)
            .into_iter()
            .map(|v| v.scaled(wall).0);
        let translations = IntLattice::span(rs.rank(), gens);
        let basis = alcove.enumerate();
        FusionRing {
            alcove,
            chars,
            basis,
            translations,
        }
    }

    pub fn alcove(&self) -> &Arc<AlcoveData> {
        &self.alcove
    }

    pub fn chars(&self) -> &Arc<CharRing> {
        &self.chars
    }

    /// Alcove weights in lexicographic order.
    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    fn require(&self, lambda: &Weight) -> Result<()> {
        self.alcove.root_system().check(lambda)?;
        if !self.alcove.contains(lambda) {
            return Err(Error::NotInAlcove(lambda.to_string()));
        }
        Ok(())
    }

    /// `[lambda] [mu] = sum_eta mult_lambda(eta) pi(mu + eta)`, expanding
    /// whichever factor has the smaller module.
    pub fn fuse(&self, lambda: &Weight, mu: &Weight) -> Result<FusionElement> {
        self.require(lambda)?;
        self.require(mu)?;
        let (small, big) =
            if self.chars.weyl_dimension(lambda)? <= self.chars.weyl_dimension(mu)? {
                (lambda, mu)
            } else {
                (mu, lambda)
            };
        let ms = self.chars.weight_multiplicities(small)?;
        let mut out = FusionElement::zero();
        for (eta, m) in ms.all(self.alcove.root_system()) {
            out.add_signed(self.alcove.project(&big.add(eta))?, *m as i64);
        }
        Ok(out)
    }

    pub fn structure_constant(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<i64> {
        self.require(nu)?;
        Ok(self.fuse(lambda, mu)?.coeff(nu))
    }

    /// Alternating-sum route to `N(lambda, mu, nu)`: for every weight `eta`
    /// of `L(lambda)` and every `w` in the finite Weyl group, count
    /// `det(w)` when `mu + eta + rho - w(nu + rho)` lies in the translation
    /// lattice `L * Z[W theta]` of the affine Weyl group.
    pub fn fuse_alt(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<i64> {
        let rs = self.alcove.root_system();
        for w in [lambda, mu] {
            rs.check(w)?;
            if !self.alcove.in_closed_domain(&w.add(&rs.rho())) || !w.is_dominant() {
                return Err(Error::Precondition(format!("{w} is outside the closed alcove")));
            }
        }
        self.require(nu)?;
        let rho = rs.rho();
        let orbit = rs.signed_orbit(&nu.add(&rho));
        let ms = self.chars.weight_multiplicities(lambda)?;
        let mut total = 0i64;
        for (eta, m) in ms.all(rs) {
            let shifted = mu.add(eta).add(&rho);
            for (x, s) in &orbit {
                if self.translations.contains(&shifted.sub(x).0) {
                    total += s * (*m as i64);
                }
            }
        }
        Ok(total)
    }

    /// `chi(lambda) -> pi(lambda)`, extended linearly.
    pub fn quotient_from_char(&self, a: &CharElement) -> Result<FusionElement> {
        let mut out = FusionElement::zero();
        for (k, &v) in a.terms() {
            out.add_signed(self.alcove.project(k)?, v);
        }
        Ok(out)
    }

    /// Product of two fusion elements.
    pub fn mul(&self, a: &FusionElement, b: &FusionElement) -> Result<FusionElement> {
        let mut out = FusionElement::zero();
        for (x, &cx) in a.terms() {
            for (y, &cy) in b.terms() {
                out = out.add(&self.fuse(x, y)?.scaled(cx * cy));
            }
        }
        Ok(out)
    }

    /// All products `[lambda][mu]`, computed in parallel.
    pub fn fusion_table(&self, cap: u128) -> Result<FusionTable> {
        let n = self.basis.len() as u128;
        if n * n * n > cap {
            return Err(Error::CapExceeded {
                what: "fusion table entries".into(),
                needed: n * n * n,
                cap,
            });
        }
        let pairs: Vec<(usize, usize)> = (0..self.basis.len())
            .flat_map(|i| (i..self.basis.len()).map(move |j| (i, j)))
            .collect();
        let computed: Vec<((usize, usize), FusionElement)> = pairs
            .par_iter()
            .map(|&(i, j)| Ok(((i, j), self.fuse(&self.basis[i], &self.basis[j])?)))
            .collect::<Result<_>>()?;
        let size = self.basis.len();
        let mut products = vec![FusionElement::zero(); size * size];
        for ((i, j), p) in computed {
            products[j * size + i] = p.clone();
            products[i * size + j] = p;
        }
        Ok(FusionTable {
            basis: self.basis.clone(),
            products,
        })
    }

    /// Visits every row `(lambda, mu, [lambda][mu])` in basis order without
    /// storing the table.
    pub fn stream_table<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(&Weight, &Weight, &FusionElement) -> Result<()>,
    {
        for lambda in &self.basis {
            let row: Vec<FusionElement> = self
                .basis
                .par_iter()
                .map(|mu| self.fuse(lambda, mu))
                .collect::<Result<_>>()?;
            for (mu, p) in self.basis.iter().zip(&row) {
                visit(lambda, mu, p)?;
            }
        }
        Ok(())
    }
}

/// Dense table of products over the alcove basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    basis: Vec<Weight>,
    products: Vec<FusionElement>,
}

impl FusionTable {
    pub fn from_products(basis: Vec<Weight>, products: Vec<FusionElement>) -> Self {
        assert_eq!(products.len(), basis.len() * basis.len());
        FusionTable { basis, products }
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn product(&self, i: usize, j: usize) -> &FusionElement {
        &self.products[i * self.basis.len() + j]
    }

    /// `N(basis[i], basis[j], basis[l])`.
    pub fn constant(&self, i: usize, j: usize, l: usize) -> i64 {
        self.product(i, j).coeff(&self.basis[l])
    }

    /// First `(i, j)` where the two tables differ.
    pub fn first_difference(&self, other: &FusionTable) -> Option<(Weight, Weight, FusionElement, FusionElement)> {
        if self.basis != other.basis {
            let w = Weight(Vec::new());
            return Some((w.clone(), w, FusionElement::zero(), FusionElement::zero()));
        }
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                if self.product(i, j) != other.product(i, j) {
                    return Some((
                        self.basis[i].clone(),
                        self.basis[j].clone(),
                        self.product(i, j).clone(),
                        other.product(i, j).clone(),
                    ));
                }
            }
        }
        None
    }
}

/// Fusion for `gl_n`: products through `sl_n`, lifted back with the total charge.
#[derive(Debug)]
pub struct GlFusionRing {
    alcove: GlAlcove,
    sl: FusionRing,
}

impl GlFusionRing {
    pub fn new(n: usize, ell: u64) -> Result<Self> {
        let alcove = GlAlcove::new(n, ell)?;
        let sl = FusionRing::new(alcove.sl().clone());
        Ok(GlFusionRing { alcove, sl })
    }

    pub fn alcove(&self) -> &GlAlcove {
        &self.alcove
    }

    pub fn sl(&self) -> &FusionRing {
        &self.sl
    }

    pub fn fuse(&self, lambda: &GlWeight, mu: &GlWeight) -> Result<BTreeMap<GlWeight, i64>> {
        for w in [lambda, mu] {
            if !self.alcove.contains(w) {
                return Err(Error::NotInAlcove(w.to_string()));
            }
        }
        let charge = lambda.charge() + mu.charge();
        let prod = self.sl.fuse(&lambda.to_sl(), &mu.to_sl())?;
        Ok(prod
            .terms()
            .iter()
            .map(|(nu, &c)| {
                let lift = GlWeight::from_sl_with_charge(nu, charge)
                    .expect("fusion products preserve the charge modulo n");
                (lift, c)
            })
            .collect())
    }
}
