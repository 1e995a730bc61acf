//! Polynomials in commuting operator symbols `e_1, e_2, ...`, determinants of
//! matrices with polynomial entries, and evaluation on sparse vectors.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::AlcoveVector;

/// Integer polynomial in `e_1..e_vars`; keys are exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: i64) -> Self {
        let mut p = Poly::zero(vars);
        p.add_monomial(vec![0; vars], c);
        p
    }

    /// `e_j`, with `e_0 = 1` and `e_j = 0` for `j` outside `0..=vars`.
    pub fn var(vars: usize, j: i64) -> Self {
        if j == 0 {
            return Poly::constant(vars, 1);
        }
        if j < 0 || j as usize > vars {
            return Poly::zero(vars);
        }
        let mut e = vec![0; vars];
        e[j as usize - 1] = 1;
        let mut p = Poly::zero(vars);
        p.add_monomial(e, 1);
        p
    }

    fn add_monomial(&mut self, exps: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_monomial(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scaled(-1))
    }

    pub fn scaled(&self, c: i64) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, &x) in &self.terms {
            out.add_monomial(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_monomial(e, x * y);
            }
        }
        out
    }
}

/// Leibniz expansion, skipping zero entries as soon as they appear.
pub fn det(m: &[Vec<Poly>], vars: usize) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(vars, 1);
    }
    let mut used = vec![false; n];
    let mut acc = Poly::zero(vars);
    fn rec(
        row: usize,
        m: &[Vec<Poly>],
        used: &mut [bool],
        partial: Poly,
        sign: i64,
        acc: &mut Poly,
    ) {
        let n = m.len();
        if row == n {
            *acc = acc.add(&partial.scaled(sign));
            return;
        }
        // the sign of a permutation built row by row: count the used
        // columns to the right of the chosen one
        for col in 0..n {
            if used[col] || m[row][col].is_zero() {
                continue;
            }
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            rec(row + 1, m, used, partial.mul(&m[row][col]), s, acc);
            used[col] = false;
        }
    }
    rec(0, m, &mut used, Poly::constant(vars, 1), 1, &mut acc);
    acc
}

/// Applies a polynomial in commuting operators to a vector. `apply(j, x)`
/// evaluates `e_j` on the basis element `x`; results are memoized.
pub struct Evaluator<K, F>
where
    K: Ord + Clone + Hash,
    F: Fn(usize, &K) -> AlcoveVector<K>,
{
    apply: F,
    memo: HashMap<(usize, K), AlcoveVector<K>>,
}

impl<K, F> Evaluator<K, F>
where
    K: Ord + Clone + Hash,
    F: Fn(usize, &K) -> AlcoveVector<K>,
{
    pub fn new(apply: F) -> Self {
        Evaluator {
            apply,
            memo: HashMap::new(),
        }
    }

    pub fn apply_var(&mut self, j: usize, v: &AlcoveVector<K>) -> AlcoveVector<K> {
        let mut out = AlcoveVector::zero();
        for (x, &c) in v.terms() {
            let key = (j, x.clone());
            if !self.memo.contains_key(&key) {
                let img = (self.apply)(j, x);
                self.memo.insert(key.clone(), img);
            }
            out.add_scaled(&self.memo[&key], c);
        }
        out
    }

    pub fn evaluate(&mut self, p: &Poly, v: &AlcoveVector<K>) -> AlcoveVector<K> {
        let mut out = AlcoveVector::zero();
        for (exps, &c) in p.terms() {
            let mut cur = v.clone();
            for (j, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    cur = self.apply_var(j + 1, &cur);
                }
            }
            out.add_scaled(&cur, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // det [[e1, e2], [1, e1]] = e1^2 - e2
        let m = vec![
            vec![Poly::var(2, 1), Poly::var(2, 2)],
            vec![Poly::var(2, 0), Poly::var(2, 1)],
        ];
        let d = det(&m, 2);
        let expect = Poly::var(2, 1).mul(&Poly::var(2, 1)).sub(&Poly::var(2, 2));
        assert_eq!(d, expect);
    }

    #[test]
    fn permutation_signs() {
        // anti-diagonal 3x3 of ones has determinant -1
        let one = Poly::constant(1, 1);
        let zero = Poly::zero(1);
        let m = vec![
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![one.clone(), zero.clone(), zero.clone()],
        ];
        assert_eq!(det(&m, 1), Poly::constant(1, -1));
        let m = vec![
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![one, zero.clone(), zero],
        ];
        assert_eq!(det(&m, 1), Poly::constant(1, 1));
    }
}
