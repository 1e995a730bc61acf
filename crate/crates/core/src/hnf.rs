//! Exact lattice membership over the integers.
//!
//! Columns are sparse integer vectors indexed by an ordered row key. They
//! are kept in column echelon form: every pivot owns a distinct leading row
//! (its largest key). A new column is reduced against the pivots; when the
//! leading entries do not divide each other a unimodular 2x2 step built
//! from the extended gcd replaces the pivot. Membership of a target then
//! comes down to successive exact divisions, and every pivot carries its
//! expression in the original columns so that a solution is returned as a
//! certificate that can be checked by recomputation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseVec<K> = BTreeMap<K, BigInt>;

#[derive(Clone, Debug)]
struct Pivot<K> {
    vec: SparseVec<K>,
    combo: BTreeMap<usize, BigInt>,
}

#[derive(Clone, Debug)]
pub struct SparseLattice<K: Ord + Clone> {
    columns: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, Pivot<K>>,
}

impl<K: Ord + Clone> Default for SparseLattice<K> {
    fn default() -> Self {
        SparseLattice {
            columns: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &BigInt, x: &SparseVec<K>) {
    for (k, v) in x {
        let slot = y.entry(k.clone()).or_insert_with(BigInt::zero);
        *slot += a * v;
        if slot.is_zero() {
            y.remove(k);
        }
    }
}

fn scale<K: Ord + Clone>(x: &SparseVec<K>, a: &BigInt) -> SparseVec<K> {
    if a.is_zero() {
        return BTreeMap::new();
    }
    x.iter().map(|(k, v)| (k.clone(), v * a)).collect()
}

fn combine<K: Ord + Clone>(a: &BigInt, x: &SparseVec<K>, b: &BigInt, y: &SparseVec<K>) -> SparseVec<K> {
    let mut out = scale(x, a);
    axpy(&mut out, b, y);
    out
}

impl<K: Ord + Clone> SparseLattice<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of columns pushed so far.
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Distinct row keys touched by the columns.
    pub fn nrows(&self) -> usize {
        let mut keys: Vec<&K> = self.columns.iter().flat_map(|c| c.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<K> {
        &self.columns[j]
    }

    /// Adds a column and returns its index.
    pub fn push_column(&mut self, col: SparseVec<K>) -> usize {
        let j = self.columns.len();
        let mut vec: SparseVec<K> = col.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.clone(), v.clone())).collect();
        self.columns.push(vec.clone());
        let mut combo = BTreeMap::new();
        combo.insert(j, BigInt::one());
        loop {
            let Some((lead, b)) = vec.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) else {
                return j;
            };
            let Some(piv) = self.pivots.get_mut(&lead) else {
                if b.is_negative() {
                    vec = scale(&vec, &BigInt::from(-1));
                    combo = scale(&combo, &BigInt::from(-1));
                }
                self.pivots.insert(lead, Pivot { vec, combo });
                return j;
            };
            let a = piv.vec[&lead].clone();
            if b.is_multiple_of(&a) {
                let q = -(&b / &a);
                axpy(&mut vec, &q, &piv.vec);
                axpy(&mut combo, &q, &piv.combo);
                continue;
            }
            let egcd = a.extended_gcd(&b);
            let (g, s, t) = (egcd.gcd, egcd.x, egcd.y);
            let a1 = &a / &g;
            let b1 = &b / &g;
            let new_vec = combine(&s, &piv.vec, &t, &vec);
            let new_combo = combine(&s, &piv.combo, &t, &combo);
            let rest_vec = combine(&a1, &vec, &(-&b1), &piv.vec);
            let rest_combo = combine(&a1, &combo, &(-&b1), &piv.combo);
            piv.vec = new_vec;
            piv.combo = new_combo;
            if piv.vec[&lead].is_negative() {
                piv.vec = scale(&piv.vec, &BigInt::from(-1));
                piv.combo = scale(&piv.combo, &BigInt::from(-1));
            }
            vec = rest_vec;
            combo = rest_combo;
        }
    }

    /// Coefficients `x` with `sum_j x_j column_j = target`, if the target
    /// lies in the lattice.
    pub fn solve(&self, target: &SparseVec<K>) -> Option<BTreeMap<usize, BigInt>> {
        let mut rest: SparseVec<K> = target.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.clone(), v.clone())).collect();
        let mut x: BTreeMap<usize, BigInt> = BTreeMap::new();
        while let Some((lead, b)) = rest.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
            let piv = self.pivots.get(&lead)?;
            let a = &piv.vec[&lead];
            if !b.is_multiple_of(a) {
                return None;
            }
            let q = &b / a;
            axpy(&mut rest, &(-&q), &piv.vec);
            axpy(&mut x, &q, &piv.combo);
        }
        Some(x)
    }

    /// Recomputes `sum_j x_j column_j` and compares with the target.
    pub fn verify(&self, x: &BTreeMap<usize, BigInt>, target: &SparseVec<K>) -> bool {
        let mut acc: SparseVec<K> = BTreeMap::new();
        for (&j, c) in x {
            if j >= self.columns.len() {
                return false;
            }
            axpy(&mut acc, c, &self.columns[j]);
        }
        let want: SparseVec<K> = target.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.clone(), v.clone())).collect();
        acc == want
    }

    /// Reduces every pivot modulo the pivots below it, giving the Hermite
    /// normal form of the lattice basis. Pivot columns are listed by
    /// leading row, highest first.
    pub fn hermite_basis(&mut self) -> Vec<SparseVec<K>> {
        let leads: Vec<K> = self.pivots.keys().cloned().collect();
        for (idx, lead) in leads.iter().enumerate() {
            for lower in leads[..idx].iter().rev() {
                let c = self.pivots[lead].vec.get(lower).cloned().unwrap_or_default();
                let d = self.pivots[lower].vec[lower].clone();
                let q = c.div_floor(&d);
                if q.is_zero() {
                    continue;
                }
                let (lv, lc) = {
                    let p = &self.pivots[lower];
                    (p.vec.clone(), p.combo.clone())
                };
                let p = self.pivots.get_mut(lead).expect("pivot exists");
                axpy(&mut p.vec, &(-&q), &lv);
                axpy(&mut p.combo, &(-&q), &lc);
            }
        }
        self.pivots.values().rev().map(|p| p.vec.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(entries: &[i64]) -> SparseVec<usize> {
        entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, BigInt::from(x)))
            .collect()
    }

    #[test]
    fn gcd_step() {
        let mut l = SparseLattice::new();
        l.push_column(v(&[0, 4]));
        l.push_column(v(&[1, 6]));
        // a (0,4) + b (1,6) = (0,2) forces b = 0 and a = 1/2
        assert!(l.solve(&v(&[0, 2])).is_none());
        let x = l.solve(&v(&[2, 8])).unwrap();
        assert!(l.verify(&x, &v(&[2, 8])));
        l.push_column(v(&[0, 6]));
        let x = l.solve(&v(&[0, 2])).unwrap();
        assert!(l.verify(&x, &v(&[0, 2])));
    }

    #[test]
    fn hermite_normalizes() {
        let mut l = SparseLattice::new();
        l.push_column(v(&[3, 0]));
        l.push_column(v(&[5, 2]));
        let basis = l.hermite_basis();
        assert_eq!(basis, vec![v(&[5 % 3, 2]), v(&[3, 0])]);
        let x = l.solve(&v(&[8, 2])).unwrap();
        assert!(l.verify(&x, &v(&[8, 2])));
    }

    proptest! {
        #[test]
        fn solves_images(
            cols in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..6),
            x0 in prop::collection::vec(-5i64..=5, 6),
        ) {
            let mut l = SparseLattice::new();
            for c in &cols {
                l.push_column(v(c));
            }
            let mut b = vec![0i64; 4];
            for (c, x) in cols.iter().zip(&x0) {
                for i in 0..4 {
                    b[i] += c[i] * x;
                }
            }
            let x = l.solve(&v(&b));
            prop_assert!(x.is_some());
            prop_assert!(l.verify(&x.unwrap(), &v(&b)));
        }

        #[test]
        fn rejects_off_lattice(
            cols in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..6),
            x0 in prop::collection::vec(-5i64..=5, 6),
            d in 2i64..=5,
            row in 0usize..4,
        ) {
            // every column is a multiple of d, the target is not
            let mut l = SparseLattice::new();
            for c in &cols {
                l.push_column(v(&c.iter().map(|x| x * d).collect::<Vec<_>>()));
            }
            let mut b = vec![0i64; 4];
            for (c, x) in cols.iter().zip(&x0) {
                for i in 0..4 {
                    b[i] += c[i] * x * d;
                }
            }
            b[row] += 1;
            prop_assert!(l.solve(&v(&b)).is_none());
        }
    }
}
