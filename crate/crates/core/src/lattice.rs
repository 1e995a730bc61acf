//! Small integer lattices given by generators: row echelon form over the
//! integers and a membership test. Used for translation lattices of affine
//! Weyl groups, where the dimension is the rank.

#[derive(Clone, Debug)]
pub struct IntLattice {
    dim: usize,
    /// Echelon rows; row `r` has its leading entry in column `pivots[r]`.
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl IntLattice {
    pub fn span(dim: usize, gens: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut pool: Vec<Vec<i64>> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.len(), dim))
            .filter(|g| g.iter().any(|&x| x != 0))
            .collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` until a single row carries it
            loop {
                let mut live: Vec<usize> = (0..pool.len()).filter(|&r| pool[r][col] != 0).collect();
                if live.len() <= 1 {
                    if let Some(&r) = live.first() {
                        let mut row = pool.swap_remove(r);
                        if row[col] < 0 {
                            row.iter_mut().for_each(|x| *x = -*x);
                        }
                        rows.push(row);
                        pivots.push(col);
                    }
                    break;
                }
                live.sort_by_key(|&r| pool[r][col].abs());
                let p = live[0];
                let piv = pool[p].clone();
                for &r in &live[1..] {
                    let q = pool[r][col] / piv[col];
                    for c in 0..dim {
                        pool[r][c] -= q * piv[c];
                    }
                }
                pool.retain(|g| g.iter().any(|&x| x != 0));
            }
        }
        IntLattice { dim, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut d = v.to_vec();
        let mut next = 0;
        for col in 0..self.dim {
            if d[col] == 0 {
                continue;
            }
            while next < self.pivots.len() && self.pivots[next] < col {
                next += 1;
            }
            if next == self.pivots.len() || self.pivots[next] != col {
                return false;
            }
            let row = &self.rows[next];
            if d[col] % row[col] != 0 {
                return false;
            }
            let q = d[col] / row[col];
            for c in col..self.dim {
                d[c] -= q * row[c];
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_sublattice() {
        let l = IntLattice::span(2, vec![vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[1, 1]));
        assert!(l.contains(&[3, -1]));
        assert!(!l.contains(&[1, 0]));
        assert!(l.contains(&[0, 0]));
    }

    #[test]
    fn gcd_generators() {
        let l = IntLattice::span(1, vec![vec![6], vec![10]]);
        assert!(l.contains(&[2]));
        assert!(!l.contains(&[3]));
    }
}
