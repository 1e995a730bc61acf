//! Shift operators for type `C_n`.
//!
//! `a_j` shifts a weight by `eps_j`, with `eps_{n+i} = -eps_i`; the shifts
//! commute, and `e_m = sum_{|J| = m} pi(a_J)` projects onto the alcove.
//! Products use the symplectic Jacobi-Trudi determinant in
//! `E_m = e_m - e_{m-2}`: the first column is `E_{l_i - i + 1}` and column
//! `j >= 2` is `E_{l_i - i + j} + E_{l_i - i - j + 2}`, where `l` is the
//! transposed partition.

use std::sync::Arc;

use crate::alcove::AlcoveData;
use crate::error::{Error, Result};
use crate::fusionring::FusionTable;
use crate::rootsys::{CartanType, SignedWeight, Weight};

use super::det::{det, Evaluator, Poly};
use super::type_a::to_fusion;
use super::{subsets, transpose_from_omega, AlcoveVector};

#[derive(Clone, Debug)]
pub struct TypeCComb {
    alcove: Arc<AlcoveData>,
    /// `shifts[m]` lists `eps_J` for every `m`-subset `J` of `1..=2n`.
    shifts: Vec<Vec<Weight>>,
}

impl TypeCComb {
    pub fn new(alcove: Arc<AlcoveData>) -> Result<Self> {
        let rs = alcove.root_system().clone();
        if rs.cartan_type() != CartanType::C {
            return Err(Error::UnsupportedRootSystem {
                ty: format!("{} (shift operators need type C)", rs.cartan_type()),
                rank: rs.rank(),
            });
        }
        let n = rs.rank();
        let eps: Vec<Weight> = (1..=2 * n)
            .map(|j| {
                if j <= n {
                    rs.eps_basis_vector(j)
                } else {
                    rs.eps_basis_vector(j - n).scaled(-1)
                }
            })
            .collect();
        let shifts = (0..=2 * n)
            .map(|m| {
                subsets(2 * n, m)
                    .into_iter()
                    .map(|set| {
                        set.iter()
                            .fold(Weight::zero(n), |acc, &j| acc.add(&eps[j]))
                    })
                    .collect()
            })
            .collect();
        Ok(TypeCComb { alcove, shifts })
    }

    pub fn alcove(&self) -> &Arc<AlcoveData> {
        &self.alcove
    }

    fn vars(&self) -> usize {
        2 * self.alcove.root_system().rank()
    }

    fn require(&self, lambda: &Weight) -> Result<()> {
        self.alcove.root_system().check(lambda)?;
        if !self.alcove.contains(lambda) {
            return Err(Error::NotInAlcove(lambda.to_string()));
        }
        Ok(())
    }

    fn elementary_basis(&self, m: usize, lambda: &Weight) -> AlcoveVector<Weight> {
        let mut out = AlcoveVector::zero();
        for shift in &self.shifts[m] {
            let projected = self
                .alcove
                .project(&lambda.add(shift))
                .expect("projection of a shifted alcove weight terminates");
            if let SignedWeight::Nonzero { sign, weight } = projected {
                out.add_term(weight, sign);
            }
        }
        out
    }

    /// `e_m` applied to a vector, `0 <= m <= 2n`.
    pub fn elementary(&self, m: usize, v: &AlcoveVector<Weight>) -> Result<AlcoveVector<Weight>> {
        if m > self.vars() {
            return Err(Error::IndexOutOfRange { index: m, len: self.vars() + 1 });
        }
        let mut out = AlcoveVector::zero();
        for (lambda, &c) in v.terms() {
            self.require(lambda)?;
            out.add_scaled(&self.elementary_basis(m, lambda), c);
        }
        Ok(out)
    }

    fn e_prime(&self, m: i64) -> Poly {
        let v = self.vars();
        Poly::var(v, m).sub(&Poly::var(v, m - 2))
    }

    pub fn schur_poly(&self, lambda: &Weight) -> Poly {
        let rows = transpose_from_omega(&lambda.0);
        let r = rows.len();
        let m: Vec<Vec<Poly>> = (0..r)
            .map(|i| {
                let base = rows[i] - i as i64;
                (0..r)
                    .map(|j| {
                        let j = j as i64;
                        if j == 0 {
                            self.e_prime(base)
                        } else {
                            self.e_prime(base + j).add(&self.e_prime(base - j))
                        }
                    })
                    .collect()
            })
            .collect();
        det(&m, self.vars())
    }

    fn evaluator(&self) -> Evaluator<Weight, impl Fn(usize, &Weight) -> AlcoveVector<Weight> + '_> {
        Evaluator::new(move |j, x| self.elementary_basis(j, x))
    }

    pub fn star(&self, lambda: &Weight, mu: &Weight) -> Result<AlcoveVector<Weight>> {
        self.require(lambda)?;
        self.require(mu)?;
        let mut ev = self.evaluator();
        Ok(ev.evaluate(&self.schur_poly(lambda), &AlcoveVector::basis(mu.clone())))
    }

    pub fn star_table(&self) -> Result<FusionTable> {
        let basis = self.alcove.enumerate();
        let mut ev = self.evaluator();
        let mut products = Vec::with_capacity(basis.len() * basis.len());
        for lambda in &basis {
            let p = self.schur_poly(lambda);
            for mu in &basis {
                products.push(to_fusion(&ev.evaluate(&p, &AlcoveVector::basis(mu.clone()))));
            }
        }
        Ok(FusionTable::from_products(basis, products))
    }

    /// `e_i e_j v - e_j e_i v`.
    pub fn commutator(&self, i: usize, j: usize, v: &AlcoveVector<Weight>) -> Result<AlcoveVector<Weight>> {
        let a = self.elementary(i, &self.elementary(j, v)?)?;
        let b = self.elementary(j, &self.elementary(i, v)?)?;
        let mut d = a;
        d.add_scaled(&b, -1);
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn comb(n: usize, ell: u64) -> TypeCComb {
        let rs = Arc::new(RootSystem::new(CartanType::C, n).unwrap());
        TypeCComb::new(Arc::new(AlcoveData::new(rs, ell).unwrap())).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn e1_on_zero() {
        let c = comb(2, 12);
        let v = c.elementary(1, &AlcoveVector::basis(w(&[0, 0]))).unwrap();
        assert_eq!(v, AlcoveVector::basis(w(&[1, 0])));
    }

    #[test]
    fn small_products() {
        let c = comb(2, 12);
        let p = c.star(&w(&[1, 0]), &w(&[1, 0])).unwrap();
        let expect: AlcoveVector<Weight> =
            [(w(&[2, 0]), 1), (w(&[0, 1]), 1), (w(&[0, 0]), 1)].into_iter().collect();
        assert_eq!(p, expect);
        let p = c.star(&w(&[2, 0]), &w(&[0, 0])).unwrap();
        assert_eq!(p, AlcoveVector::basis(w(&[2, 0])));
        let p = c.star(&w(&[1, 1]), &w(&[0, 0])).unwrap();
        assert_eq!(p, AlcoveVector::basis(w(&[1, 1])));
    }

    #[test]
    fn rejects_other_types() {
        let rs = Arc::new(RootSystem::new(CartanType::B, 2).unwrap());
        assert!(TypeCComb::new(Arc::new(AlcoveData::new(rs, 13).unwrap())).is_err());
    }
}
