//! Combinatorial models of the fusion rings in types A and C: hopping
//! operators, their elementary symmetric combinations and Schur-type
//! determinants acting on the free module over the alcove.

pub mod det;
pub mod type_a;
pub mod type_c;

use std::collections::BTreeMap;
use std::fmt;

pub use type_a::TypeAComb;
pub use type_c::TypeCComb;

/// Finitely supported integer vector over alcove weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlcoveVector<K: Ord>(BTreeMap<K, i64>);

impl<K: Ord + Clone> Default for AlcoveVector<K> {
    fn default() -> Self {
        AlcoveVector(BTreeMap::new())
    }
}

impl<K: Ord + Clone> AlcoveVector<K> {
    pub fn zero() -> Self {
        AlcoveVector(BTreeMap::new())
    }

    pub fn basis(k: K) -> Self {
        let mut m = BTreeMap::new();
        m.insert(k, 1);
        AlcoveVector(m)
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.0.entry(k.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, other: &AlcoveVector<K>, c: i64) {
        for (k, &v) in &other.0 {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<K, i64> {
        &self.0
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> AlcoveVector<J> {
        let mut out = AlcoveVector::zero();
        for (k, &v) in &self.0 {
            out.add_term(f(k), v);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for AlcoveVector<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = AlcoveVector::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<K: Ord + fmt::Display> fmt::Display for AlcoveVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| if *v == 1 { format!("[{k}]") } else { format!("{v}*[{k}]") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Rows of the transposed partition: `m_i` rows of length `i`, longest first.
pub fn transpose_from_omega(m: &[i64]) -> Vec<i64> {
    let mut rows = Vec::new();
    for i in (1..=m.len()).rev() {
        for _ in 0..m[i - 1] {
            rows.push(i as i64);
        }
    }
    rows
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose() {
        // omega_1 + omega_2 in rank 2 is the partition (2, 1), self-conjugate
        assert_eq!(transpose_from_omega(&[1, 1]), vec![2, 1]);
        assert_eq!(transpose_from_omega(&[2, 0]), vec![1, 1]);
        assert_eq!(transpose_from_omega(&[0, 0]), Vec::<i64>::new());
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(subsets(2, 3).is_empty());
    }
}
