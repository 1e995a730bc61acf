//! Hopping operators on the `gl_n` alcove.
//!
//! `a_i` adds `eps_{i+1}` to a weight and kills it when the result leaves
//! the alcove. `e_j` sums the ordered products `a_I` over `j`-subsets `I`
//! of `Z/n`: split `I` into maximal cyclic runs `s, s+1, ..., t` and apply
//! each run from `a_s` up to `a_t`, so a particle can push the next one.
//! The full subset acts as the shift by `eps = eps_1 + ... + eps_n`.

use std::sync::Arc;

use crate::alcove::GlAlcove;
use crate::error::{Error, Result};
use crate::fusionring::{FusionElement, FusionTable};
use crate::rootsys::{GlWeight, Weight};

use super::det::{det, Evaluator, Poly};
use super::{subsets, transpose_from_omega, AlcoveVector};

#[derive(Clone, Debug)]
pub struct TypeAComb {
    alcove: Arc<GlAlcove>,
}

impl TypeAComb {
    pub fn new(n: usize, ell: u64) -> Result<Self> {
        Ok(TypeAComb {
            alcove: Arc::new(GlAlcove::new(n, ell)?),
        })
    }

    pub fn alcove(&self) -> &GlAlcove {
        &self.alcove
    }

    pub fn n(&self) -> usize {
        self.alcove.n()
    }

    fn require(&self, lambda: &GlWeight) -> Result<()> {
        if !self.alcove.contains(lambda) {
            return Err(Error::NotInAlcove(lambda.to_string()));
        }
        Ok(())
    }

    /// `a_i(lambda)`, or `None` when `lambda + eps_{i+1}` leaves the alcove.
    pub fn hop(&self, i: usize, lambda: &GlWeight) -> Result<Option<GlWeight>> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, len: self.n() });
        }
        self.require(lambda)?;
        Ok(self.hop_unchecked(i, lambda))
    }

    fn hop_unchecked(&self, i: usize, lambda: &GlWeight) -> Option<GlWeight> {
        let mut next = lambda.clone();
        next.0[i] += 1;
        self.alcove.contains(&next).then_some(next)
    }

    /// `a_I(lambda)` for a set of indices in cyclic run order.
    pub fn ordered_product(&self, set: &[usize], lambda: &GlWeight) -> Option<GlWeight> {
        let n = self.n();
        if set.len() == n {
            return Some(lambda.shifted(1));
        }
        let mut member = vec![false; n];
        for &i in set {
            member[i] = true;
        }
        let mut cur = lambda.clone();
        for s in 0..n {
            if !member[s] || member[(s + n - 1) % n] {
                continue;
            }
            let mut i = s;
            while member[i] {
                cur = self.hop_unchecked(i, &cur)?;
                i = (i + 1) % n;
            }
        }
        Some(cur)
    }

    fn elementary_basis(&self, j: usize, lambda: &GlWeight) -> AlcoveVector<GlWeight> {
        let mut out = AlcoveVector::zero();
        for set in subsets(self.n(), j) {
            if let Some(mu) = self.ordered_product(&set, lambda) {
                out.add_term(mu, 1);
            }
        }
        out
    }

    /// `e_j` applied to a vector; `e_0` is the identity.
    pub fn elementary(&self, j: usize, v: &AlcoveVector<GlWeight>) -> Result<AlcoveVector<GlWeight>> {
        if j > self.n() {
            return Err(Error::IndexOutOfRange { index: j, len: self.n() + 1 });
        }
        let mut out = AlcoveVector::zero();
        for (lambda, &c) in v.terms() {
            self.require(lambda)?;
            out.add_scaled(&self.elementary_basis(j, lambda), c);
        }
        Ok(out)
    }

    /// `det(e_{lambda^t_i - i + j})` for the `sl_n` part of `lambda`.
    pub fn schur_poly(&self, lambda: &GlWeight) -> Poly {
        let n = self.n();
        let rows = transpose_from_omega(&lambda.to_sl().0);
        let r = rows.len();
        let m: Vec<Vec<Poly>> = (0..r)
            .map(|i| (0..r).map(|j| Poly::var(n, rows[i] - i as i64 + j as i64)).collect())
            .collect();
        det(&m, n)
    }

    fn evaluator(&self) -> Evaluator<GlWeight, impl Fn(usize, &GlWeight) -> AlcoveVector<GlWeight> + '_> {
        Evaluator::new(move |j, x| self.elementary_basis(j, x))
    }

    fn star_with<F>(
        &self,
        ev: &mut Evaluator<GlWeight, F>,
        lambda: &GlWeight,
        mu: &GlWeight,
    ) -> Result<AlcoveVector<GlWeight>>
    where
        F: Fn(usize, &GlWeight) -> AlcoveVector<GlWeight>,
    {
        self.require(lambda)?;
        self.require(mu)?;
        let out = ev.evaluate(&self.schur_poly(lambda), &AlcoveVector::basis(mu.clone()));
        let shift = lambda.0[self.n() - 1];
        Ok(out.map_keys(|w| w.shifted(shift)))
    }

    /// `lambda * mu = s_lambda(a) mu`.
    pub fn star(&self, lambda: &GlWeight, mu: &GlWeight) -> Result<AlcoveVector<GlWeight>> {
        let mut ev = self.evaluator();
        self.star_with(&mut ev, lambda, mu)
    }

    /// Representatives with `lambda_n = 0`.
    pub fn sl_reduce(v: &AlcoveVector<GlWeight>) -> AlcoveVector<GlWeight> {
        v.map_keys(|w| w.shifted(-w.0[w.n() - 1]))
    }

    /// The product on the `sl_n` alcove, through the transversal.
    pub fn sl_star(&self, lambda: &Weight, mu: &Weight) -> Result<AlcoveVector<Weight>> {
        let p = self.star(&GlWeight::from_sl(lambda), &GlWeight::from_sl(mu))?;
        Ok(p.map_keys(GlWeight::to_sl))
    }

    /// All products on the `sl_n` alcove, in the layout of a fusion table.
    pub fn sl_star_table(&self) -> Result<FusionTable> {
        let basis = self.alcove.sl().enumerate();
        let mut ev = self.evaluator();
        let mut products = Vec::with_capacity(basis.len() * basis.len());
        for lambda in &basis {
            for mu in &basis {
                let p = self.star_with(&mut ev, &GlWeight::from_sl(lambda), &GlWeight::from_sl(mu))?;
                products.push(to_fusion(&p.map_keys(GlWeight::to_sl)));
            }
        }
        Ok(FusionTable::from_products(basis, products))
    }
}

pub(crate) fn to_fusion(v: &AlcoveVector<Weight>) -> FusionElement {
    v.terms().iter().map(|(k, &c)| (k.clone(), c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: &[i64]) -> GlWeight {
        GlWeight(c.to_vec())
    }

    #[test]
    fn hops() {
        let a = TypeAComb::new(2, 5).unwrap();
        assert_eq!(a.alcove().level(), 3);
        assert_eq!(a.hop(0, &g(&[1, 1])).unwrap(), Some(g(&[2, 1])));
        assert_eq!(a.hop(1, &g(&[1, 1])).unwrap(), None);
        assert_eq!(a.hop(0, &g(&[3, 0])).unwrap(), None);
        assert!(a.hop(2, &g(&[0, 0])).is_err());
    }

    #[test]
    fn elementary_examples() {
        let a = TypeAComb::new(3, 5).unwrap();
        let v = AlcoveVector::basis(g(&[1, 0, 0]));
        let e1 = a.elementary(1, &v).unwrap();
        let expect: AlcoveVector<GlWeight> = [(g(&[2, 0, 0]), 1), (g(&[1, 1, 0]), 1)].into_iter().collect();
        assert_eq!(e1, expect);
        assert_eq!(a.elementary(3, &v).unwrap(), AlcoveVector::basis(g(&[2, 1, 1])));
        assert!(a.elementary(2, &AlcoveVector::zero()).unwrap().is_zero());
    }

    #[test]
    fn star_examples() {
        let a = TypeAComb::new(2, 5).unwrap();
        let p = a.star(&g(&[1, 0]), &g(&[1, 0])).unwrap();
        let expect: AlcoveVector<GlWeight> = [(g(&[2, 0]), 1), (g(&[1, 1]), 1)].into_iter().collect();
        assert_eq!(p, expect);
        assert_eq!(
            TypeAComb::sl_reduce(&AlcoveVector::basis(g(&[2, 1, 1]))),
            AlcoveVector::basis(g(&[1, 0, 0]))
        );
    }
}
