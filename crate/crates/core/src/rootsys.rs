//! Root data for the types A, B, C, D and G2, integral weights in the
//! fundamental-weight basis, and the finite Weyl group dot action.
//!
//! Conventions follow Bourbaki numbering. The Cartan matrix is stored as
//! `a[i][j] = <alpha_j, alpha_i^vee>`, so the simple root `alpha_j` has
//! omega-coordinates given by column `j`. The invariant form is scaled so
//! that short roots have squared length 2; `d_i = (alpha_i, alpha_i) / 2`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "G2" | "G" => Ok(CartanType::G2),
            _ => Err(Error::UnsupportedRootSystem {
                ty: s.to_string(),
                rank: 0,
            }),
        }
    }
}

/// An integral weight `sum m_i omega_i`, stored by its omega-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add_scaled(&self, other: &Weight, c: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::ParseWeight(s.to_string()))
    }
}

/// A `gl_n` weight in native epsilon-coordinates `(lambda_1, ..., lambda_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlWeight(pub Vec<i64>);

impl GlWeight {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Total degree `sum lambda_i`.
    pub fn charge(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Shift by a multiple of `epsilon = eps_1 + ... + eps_n`.
    pub fn shifted(&self, by: i64) -> GlWeight {
        GlWeight(self.0.iter().map(|x| x + by).collect())
    }

    /// `sl_n` omega-coordinates `m_i = lambda_i - lambda_{i+1}`.
    pub fn to_sl(&self) -> Weight {
        Weight(self.0.windows(2).map(|w| w[0] - w[1]).collect())
    }

    /// The representative with `lambda_n = 0` of an `sl_n` weight.
    pub fn from_sl(m: &Weight) -> GlWeight {
        let n = m.len() + 1;
        let mut lam = vec![0i64; n];
        for i in (0..n - 1).rev() {
            lam[i] = lam[i + 1] + m.0[i];
        }
        GlWeight(lam)
    }

    /// The lift of an `sl_n` weight with prescribed charge, if one exists.
    pub fn from_sl_with_charge(m: &Weight, charge: i64) -> Option<GlWeight> {
        let base = GlWeight::from_sl(m);
        let n = base.n() as i64;
        let diff = charge - base.charge();
        if diff.rem_euclid(n) != 0 {
            return None;
        }
        Some(base.shifted(diff / n))
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "eps:{}", parts.join(","))
    }
}

impl FromStr for GlWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("eps:")
            .ok_or_else(|| Error::ParseWeight(s.to_string()))?;
        Weight::from_str(body).map(|w| GlWeight(w.0))
    }
}

/// A coroot written in the basis of simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coroot(pub Vec<i64>);

impl Coroot {
    pub fn pair(&self, w: &Weight) -> i64 {
        self.0.iter().zip(&w.0).map(|(c, m)| c * m).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignedWeight {
    Zero,
    Nonzero { sign: i64, weight: Weight },
}

impl SignedWeight {
    pub fn is_zero(&self) -> bool {
        matches!(self, SignedWeight::Zero)
    }

    pub fn negated(self) -> SignedWeight {
        match self {
            SignedWeight::Zero => SignedWeight::Zero,
            SignedWeight::Nonzero { sign, weight } => SignedWeight::Nonzero {
                sign: -sign,
                weight,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct PositiveRoot {
    /// Coefficients in the basis of simple roots.
    pub simple: Vec<i64>,
    /// Omega-coordinates.
    pub omega: Weight,
    pub coroot: Coroot,
    /// `(beta, beta) / 2` under the normalized form.
    pub half_norm: i64,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    simple_omega: Vec<Weight>,
    positive: Vec<PositiveRoot>,
    highest_short: usize,
    highest_long: usize,
    weyl_order: u64,
}

fn cartan_matrix(ty: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    match ty {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 0..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if ty == CartanType::B {
                a[n - 1][n - 2] = -2;
            }
            if ty == CartanType::C {
                a[n - 2][n - 1] = -2;
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
        }
        CartanType::G2 => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

fn symmetrizers(ty: CartanType, n: usize) -> Vec<i64> {
    match ty {
        CartanType::A | CartanType::D => vec![1; n],
        CartanType::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        CartanType::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        CartanType::G2 => vec![1, 3],
    }
}

impl RootSystem {
    pub fn new(ty: CartanType, rank: usize) -> Result<Self> {
        let ok = match ty {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::G2 => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedRootSystem {
                ty: ty.to_string(),
                rank,
            });
        }
        let cartan = cartan_matrix(ty, rank);
        let sym = symmetrizers(ty, rank);
        let simple_omega: Vec<Weight> = (0..rank)
            .map(|j| Weight((0..rank).map(|i| cartan[i][j]).collect()))
            .collect();

        let mut rs = RootSystem {
            ty,
            rank,
            cartan,
            sym,
            simple_omega,
            positive: Vec::new(),
            highest_short: 0,
            highest_long: 0,
            weyl_order: 0,
        };
        rs.positive = rs.generate_positive_roots();
        let max_norm = rs.positive.iter().map(|r| r.half_norm).max().unwrap_or(1);
        let min_norm = rs.positive.iter().map(|r| r.half_norm).min().unwrap_or(1);
        // roots are sorted by height, so the last match is the highest one
        rs.highest_long = rs
            .positive
            .iter()
            .rposition(|r| r.half_norm == max_norm)
            .expect("root system has roots");
        rs.highest_short = rs
            .positive
            .iter()
            .rposition(|r| r.half_norm == min_norm)
            .expect("root system has roots");
        rs.weyl_order = rs.orbit(&rs.rho()).len() as u64;
        Ok(rs)
    }

    fn generate_positive_roots(&self) -> Vec<PositiveRoot> {
        let n = self.rank;
        let mut all: HashSet<Vec<i64>> = HashSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut ordered = Vec::new();
        while !layer.is_empty() {
            layer.sort();
            layer.dedup();
            for r in &layer {
                all.insert(r.clone());
            }
            ordered.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !all.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let pairing: i64 = (0..n).map(|j| self.cartan[i][j] * beta[j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.push(up);
                    }
                }
            }
            layer = next;
        }
        ordered
            .into_iter()
            .map(|simple| {
                let omega = Weight(
                    (0..n)
                        .map(|i| (0..n).map(|j| self.cartan[i][j] * simple[j]).sum())
                        .collect(),
                );
                let mut norm = 0i64;
                for i in 0..n {
                    for j in 0..n {
                        norm += simple[i] * simple[j] * self.sym[i] * self.cartan[i][j];
                    }
                }
                let half_norm = norm / 2;
                let coroot = Coroot(
                    (0..n)
                        .map(|j| {
                            let num = simple[j] * self.sym[j];
                            debug_assert_eq!(num % half_norm, 0);
                            num / half_norm
                        })
                        .collect(),
                );
                PositiveRoot {
                    simple,
                    omega,
                    coroot,
                    half_norm,
                }
            })
            .collect()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    /// `A2`, `C3`, `G2`, ...
    pub fn name(&self) -> String {
        match self.ty {
            CartanType::G2 => "G2".to_string(),
            ty => format!("{ty}{}", self.rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_omega[i]
    }

    pub fn simple_coroot(&self, i: usize) -> Coroot {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        Coroot(c)
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    /// Highest short root `alpha_0` (equal to the highest root when simply laced).
    pub fn highest_short_root(&self) -> &PositiveRoot {
        &self.positive[self.highest_short]
    }

    /// Highest root `beta_0`.
    pub fn highest_root(&self) -> &PositiveRoot {
        &self.positive[self.highest_long]
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn weyl_group_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::RankMismatch {
                weight: w.to_string(),
                got: w.len(),
                rank: self.rank,
            });
        }
        Ok(())
    }

    pub fn pairing(&self, w: &Weight, coroot: &Coroot) -> Result<i64> {
        self.check(w)?;
        if coroot.0.len() != self.rank {
            return Err(Error::RankMismatch {
                weight: format!("{:?}", coroot.0),
                got: coroot.0.len(),
                rank: self.rank,
            });
        }
        Ok(coroot.pair(w))
    }

    /// `(beta, nu)` for a positive root `beta` under the normalized form.
    pub fn form_root(&self, beta: &PositiveRoot, nu: &Weight) -> i64 {
        beta.simple
            .iter()
            .zip(&self.sym)
            .zip(&nu.0)
            .map(|((c, d), m)| c * d * m)
            .sum()
    }

    /// Simple reflection (linear action).
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        w.add_scaled(&self.simple_omega[i], -w.0[i])
    }

    /// Simple reflection under the dot action `s . w = s(w + rho) - rho`.
    pub fn dot_reflect(&self, w: &Weight, i: usize) -> Weight {
        w.add_scaled(&self.simple_omega[i], -(w.0[i] + 1))
    }

    fn straighten_guard(&self, shifted: &Weight) -> u64 {
        let spread: i64 = self
            .positive
            .iter()
            .map(|b| b.coroot.pair(shifted).abs())
            .sum();
        self.weyl_order * (1 + spread as u64)
    }

    /// Brings `mu` to the dominant chamber under the dot action, tracking
    /// the sign `(-1)^{l(w)}`; zero when `mu + rho` lies on a wall.
    pub fn straighten_dominant(&self, mu: &Weight) -> Result<SignedWeight> {
        self.check(mu)?;
        let mut v = mu.add(&self.rho());
        let bound = self.straighten_guard(&v);
        let mut sign = 1i64;
        let mut steps = 0u64;
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            v = self.reflect(&v, i);
            sign = -sign;
            steps += 1;
            if steps > bound {
                return Err(Error::IterationBound {
                    bound,
                    what: format!("straightening {mu}"),
                });
            }
        }
        if v.0.contains(&0) {
            return Ok(SignedWeight::Zero);
        }
        Ok(SignedWeight::Nonzero {
            sign,
            weight: v.sub(&self.rho()),
        })
    }

    /// Dominant conjugate under the linear action.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            v = self.reflect(&v, i);
        }
        v
    }

    /// Orbit of `w` under the linear Weyl group action.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v.0[i] != 0 {
                    let r = self.reflect(&v, i);
                    if seen.insert(r.clone()) {
                        queue.push_back(r);
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Orbit of a regular weight together with the sign `det(w)` of the
    /// element carrying `w` to each member.
    pub fn signed_orbit(&self, w: &Weight) -> Vec<(Weight, i64)> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back((w.clone(), 1i64));
        let mut out = Vec::new();
        while let Some((v, s)) = queue.pop_front() {
            for i in 0..self.rank {
                if v.0[i] != 0 {
                    let r = self.reflect(&v, i);
                    if seen.insert(r.clone()) {
                        queue.push_back((r, -s));
                    }
                }
            }
            out.push((v, s));
        }
        out
    }

    /// Coefficients of `w` in the basis of simple roots, if `w` lies in the
    /// root lattice.
    pub fn to_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let n = self.rank;
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> =
                    (0..n).map(|j| Rational64::from(self.cartan[i][j])).collect();
                row.push(Rational64::from(w.0[i]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in 0..=n {
                        let delta = f * m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        m.iter()
            .map(|row| {
                let x = row[n];
                if x.denom().is_one() {
                    Some(*x.numer())
                } else {
                    None
                }
            })
            .collect()
    }

    /// Epsilon-coordinates of `w` for the classical types.
    ///
    /// Type A of rank `n` is realized inside `gl_{n+1}` on the transversal
    /// `lambda_{n+1} = 0`.
    pub fn eps_coords(&self, w: &Weight) -> Result<Vec<Rational64>> {
        self.check(w)?;
        let n = self.rank;
        let m: Vec<Rational64> = w.0.iter().map(|&x| Rational64::from(x)).collect();
        let half = Rational64::new(1, 2);
        let tail = |from: usize, to: usize| -> Rational64 {
            m[from..to].iter().fold(Rational64::zero(), |a, b| a + b)
        };
        match self.ty {
            CartanType::A => {
                let mut lam: Vec<Rational64> = (0..n).map(|i| tail(i, n)).collect();
                lam.push(Rational64::zero());
                Ok(lam)
            }
            CartanType::C => Ok((0..n).map(|i| tail(i, n)).collect()),
            CartanType::B => Ok((0..n)
                .map(|i| tail(i, n - 1) + m[n - 1] * half)
                .collect()),
            CartanType::D => {
                let mut lam: Vec<Rational64> = (0..n - 1)
                    .map(|i| tail(i.min(n - 2), n - 2) + (m[n - 2] + m[n - 1]) * half)
                    .collect();
                lam.push((m[n - 1] - m[n - 2]) * half);
                Ok(lam)
            }
            CartanType::G2 => Err(Error::Unsupported(
                "G2 has no epsilon-coordinate view".into(),
            )),
        }
    }

    /// Inverse of [`RootSystem::eps_coords`]; fails off the weight lattice.
    pub fn from_eps(&self, lam: &[Rational64]) -> Result<Weight> {
        let n = self.rank;
        let expected = if self.ty == CartanType::A { n + 1 } else { n };
        if self.ty == CartanType::G2 || lam.len() != expected {
            return Err(Error::RankMismatch {
                weight: format!("{lam:?}"),
                got: lam.len(),
                rank: n,
            });
        }
        let mut m: Vec<Rational64> = (0..n.saturating_sub(1)).map(|i| lam[i] - lam[i + 1]).collect();
        match self.ty {
            CartanType::A => m.push(lam[n - 1] - lam[n]),
            CartanType::C => m.push(lam[n - 1]),
            CartanType::B => m.push(lam[n - 1] * Rational64::from(2)),
            CartanType::D => {
                m[n - 2] = lam[n - 2] - lam[n - 1];
                m.push(lam[n - 2] + lam[n - 1]);
            }
            CartanType::G2 => unreachable!(),
        }
        let coords = m
            .iter()
            .map(|x| {
                if x.denom().is_one() {
                    Ok(*x.numer())
                } else {
                    Err(Error::NotIntegral(format!("{lam:?}")))
                }
            })
            .collect::<Result<Vec<i64>>>()?;
        let w = Weight(coords);
        // the type A transversal and the B/D spin cosets need a round trip check
        if self.eps_coords(&w)? != lam && self.ty != CartanType::A {
            return Err(Error::NotIntegral(format!("{lam:?}")));
        }
        Ok(w)
    }

    /// Omega-coordinates of `eps_j` (1-based, `j <= rank`) for types A and C.
    pub fn eps_basis_vector(&self, j: usize) -> Weight {
        let mut w = vec![0; self.rank];
        if j <= self.rank {
            w[j - 1] += 1;
        }
        if j >= 2 {
            w[j - 2] -= 1;
        }
        Weight(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(ty: CartanType, n: usize) -> RootSystem {
        RootSystem::new(ty, n).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=5 {
            assert_eq!(rs(CartanType::A, n).positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 2..=4 {
            assert_eq!(rs(CartanType::B, n).positive_roots().len(), n * n);
            assert_eq!(rs(CartanType::C, n).positive_roots().len(), n * n);
        }
        for n in 4..=5 {
            assert_eq!(rs(CartanType::D, n).positive_roots().len(), n * (n - 1));
        }
        assert_eq!(rs(CartanType::G2, 2).positive_roots().len(), 6);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(rs(CartanType::A, 3).weyl_group_order(), 24);
        assert_eq!(rs(CartanType::B, 3).weyl_group_order(), 48);
        assert_eq!(rs(CartanType::C, 2).weyl_group_order(), 8);
        assert_eq!(rs(CartanType::D, 4).weyl_group_order(), 192);
        assert_eq!(rs(CartanType::G2, 2).weyl_group_order(), 12);
    }

    #[test]
    fn unsupported_pairs_rejected() {
        assert!(RootSystem::new(CartanType::D, 3).is_err());
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::new(CartanType::G2, 3).is_err());
        assert!(RootSystem::new(CartanType::A, 0).is_err());
    }

    #[test]
    fn type_c_highest_roots() {
        for n in 2..=4 {
            let r = rs(CartanType::C, n);
            let rho = r.rho();
            // alpha_0 = eps_1 + eps_2 = omega_2, beta_0 = 2 eps_1 = 2 omega_1
            assert_eq!(r.highest_short_root().omega, r.fundamental(1));
            assert_eq!(r.highest_root().omega, r.fundamental(0).scaled(2));
            assert_eq!(r.highest_short_root().coroot.pair(&rho), 2 * n as i64 - 1);
            assert_eq!(r.highest_root().coroot.pair(&rho), n as i64);
        }
        let c2 = rs(CartanType::C, 2);
        let w = Weight(vec![1, 1]);
        assert_eq!(c2.pairing(&w, &c2.highest_root().coroot).unwrap(), 2);
    }

    #[test]
    fn g2_root_data() {
        let g = rs(CartanType::G2, 2);
        let simple: Vec<Vec<i64>> = g.positive_roots().iter().map(|r| r.simple.clone()).collect();
        let mut expect = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        let mut got = simple.clone();
        got.sort();
        expect.sort();
        assert_eq!(got, expect);
        let a0 = g.highest_short_root();
        let b0 = g.highest_root();
        assert_eq!(a0.simple, vec![2, 1]);
        assert_eq!(a0.omega, Weight(vec![1, 0]));
        assert_eq!(a0.coroot, Coroot(vec![2, 3]));
        assert_eq!(b0.simple, vec![3, 2]);
        assert_eq!(b0.omega, Weight(vec![0, 1]));
        assert_eq!(b0.coroot, Coroot(vec![1, 2]));
        assert_eq!(b0.coroot.pair(&g.rho()), 3);
        assert_eq!(a0.coroot.pair(&g.rho()), 5);
        assert_eq!(g.pairing(&Weight(vec![1, 0]), &a0.coroot).unwrap(), 2);
    }

    #[test]
    fn rank_one_pairing() {
        let a1 = rs(CartanType::A, 1);
        let root = &a1.positive_roots()[0];
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(root.coroot.pair(&a1.fundamental(0)), 1);
        for i in 0..1 {
            assert_eq!(a1.simple_coroot(i).pair(&a1.rho()), 1);
        }
    }

    #[test]
    fn pairing_rejects_mismatch() {
        let c2 = rs(CartanType::C, 2);
        assert!(c2.pairing(&Weight(vec![1, 0, 0]), &c2.simple_coroot(0)).is_err());
    }

    #[test]
    fn straighten_sl2_examples() {
        let a1 = rs(CartanType::A, 1);
        assert_eq!(
            a1.straighten_dominant(&Weight(vec![3])).unwrap(),
            SignedWeight::Nonzero {
                sign: 1,
                weight: Weight(vec![3])
            }
        );
        assert_eq!(
            a1.straighten_dominant(&Weight(vec![-1])).unwrap(),
            SignedWeight::Zero
        );
        assert_eq!(
            a1.straighten_dominant(&Weight(vec![-3])).unwrap(),
            SignedWeight::Nonzero {
                sign: -1,
                weight: Weight(vec![1])
            }
        );
    }

    #[test]
    fn eps_view_matches_type_conventions() {
        let c3 = rs(CartanType::C, 3);
        let w = Weight(vec![1, 0, 2]);
        let lam = c3.eps_coords(&w).unwrap();
        assert_eq!(lam, vec![3.into(), 2.into(), 2.into()]);
        assert_eq!(c3.from_eps(&lam).unwrap(), w);

        let b2 = rs(CartanType::B, 2);
        let lam = b2.eps_coords(&Weight(vec![0, 1])).unwrap();
        assert_eq!(lam, vec![Rational64::new(1, 2), Rational64::new(1, 2)]);

        let d4 = rs(CartanType::D, 4);
        let lam = d4.eps_coords(&Weight(vec![0, 0, 1, 0])).unwrap();
        let h = Rational64::new(1, 2);
        assert_eq!(lam, vec![h, h, h, -h]);
        // a half-integral vector outside the spin coset
        assert!(d4.from_eps(&[h, h, h, Rational64::from(0)]).is_err());
    }

    #[test]
    fn root_coordinates() {
        let g = rs(CartanType::G2, 2);
        assert_eq!(g.to_root_coords(&Weight(vec![0, 1])), Some(vec![3, 2]));
        let a2 = rs(CartanType::A, 2);
        assert_eq!(a2.to_root_coords(&Weight(vec![1, 0])), None);
        assert_eq!(a2.to_root_coords(&Weight(vec![1, 1])), Some(vec![1, 1]));
    }

    #[test]
    fn gl_sl_round_trip() {
        let g = GlWeight(vec![3, 1, 1]);
        let m = g.to_sl();
        assert_eq!(m, Weight(vec![2, 0]));
        assert_eq!(GlWeight::from_sl(&m), GlWeight(vec![2, 0, 0]));
        assert_eq!(GlWeight::from_sl_with_charge(&m, 5), Some(g));
        assert_eq!(GlWeight::from_sl_with_charge(&m, 4), None);
        assert_eq!("eps:3,1,0".parse::<GlWeight>().unwrap(), GlWeight(vec![3, 1, 0]));
    }
}
