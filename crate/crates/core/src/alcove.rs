//! The fundamental alcove at a root of unity of order `ell`, its level, and
//! the signed projection onto it under the affine Weyl dot action.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Coroot, GlWeight, PositiveRoot, RootSystem, SignedWeight, Weight};

/// Which root bounds the alcove.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AffineWall {
    /// The highest short root `alpha_0`.
    ShortRoot,
    /// The highest root `beta_0`.
    LongRoot,
}

#[derive(Clone, Debug)]
pub struct AlcoveData {
    rs: Arc<RootSystem>,
    ell: u64,
    wall_root: AffineWall,
    theta: PositiveRoot,
    wall: i64,
    level: i64,
}

impl AlcoveData {
    /// Alcove for `rs` at order `ell`.
    ///
    /// With `base = ell` for odd `ell` and `ell / 2` for even `ell`, the wall
    /// is `<mu, theta^vee> = L` on `mu = lambda + rho`, where
    /// `(theta, L)` is `(alpha_0, base)` for odd `ell` and `(beta_0, base)`
    /// for even `ell`. G2 instead splits on divisibility by 3: `(beta_0, base / 3)`
    /// when `3 | ell`, `(alpha_0, base)` otherwise. The level
    /// is `k = L - <rho, theta^vee> - 1`.
    pub fn new(rs: Arc<RootSystem>, ell: u64) -> Result<Self> {
        if ell == 0 {
            return Err(Error::AlcoveEmpty {
                ty: rs.cartan_type().to_string(),
                ell,
            });
        }
        let base = if ell % 2 == 1 { ell } else { ell / 2 };
        let (wall_root, wall) = if rs.cartan_type() == CartanType::G2 {
            if ell.is_multiple_of(3) {
                (AffineWall::LongRoot, base / 3)
            } else {
                (AffineWall::ShortRoot, base)
            }
        } else if ell % 2 == 1 {
            (AffineWall::ShortRoot, base)
        } else {
            (AffineWall::LongRoot, base)
        };
        let theta = match wall_root {
            AffineWall::ShortRoot => rs.highest_short_root().clone(),
            AffineWall::LongRoot => rs.highest_root().clone(),
        };
        let wall = wall as i64;
        let level = wall - theta.coroot.pair(&rs.rho()) - 1;
        if level < 0 {
            return Err(Error::AlcoveEmpty {
                ty: rs.name(),
                ell,
            });
        }
        Ok(AlcoveData {
            rs,
            ell,
            wall_root,
            theta,
            wall,
            level,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// The level `k`: the alcove is `{lambda dominant : <lambda, theta^vee> <= k}`.
    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn wall_root(&self) -> AffineWall {
        self.wall_root
    }

    pub fn theta(&self) -> &PositiveRoot {
        &self.theta
    }

    pub fn theta_coroot(&self) -> &Coroot {
        &self.theta.coroot
    }

    /// The wall constant `L`.
    pub fn wall(&self) -> i64 {
        self.wall
    }

    /// `<lambda, theta^vee>`.
    pub fn affine_pairing(&self, lambda: &Weight) -> i64 {
        self.theta.coroot.pair(lambda)
    }

    /// `<lambda + rho, theta^vee>`.
    pub fn shifted_pairing(&self, lambda: &Weight) -> i64 {
        self.affine_pairing(lambda) + self.theta.coroot.0.iter().sum::<i64>()
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        lambda.len() == self.rs.rank()
            && lambda.is_dominant()
            && self.affine_pairing(lambda) <= self.level
    }

    /// Is the rho-shifted weight `mu` in the closed fundamental domain of
    /// the affine Weyl group?
    pub fn in_closed_domain(&self, mu: &Weight) -> bool {
        mu.is_dominant() && self.affine_pairing(mu) <= self.wall
    }

    /// Linear affine reflection `mu -> mu - (<mu, theta^vee> - L) theta`.
    pub fn affine_reflect(&self, mu: &Weight) -> Weight {
        mu.add_scaled(&self.theta.omega, -(self.affine_pairing(mu) - self.wall))
    }

    /// Dot action of the affine reflection.
    pub fn affine_dot_reflect(&self, lambda: &Weight) -> Weight {
        let rho = self.rs.rho();
        self.affine_reflect(&lambda.add(&rho)).sub(&rho)
    }

    /// Dot action of wall `0` (affine) or wall `i + 1` (simple `s_i`).
    pub fn dot_reflect_wall(&self, lambda: &Weight, wall: usize) -> Weight {
        if wall == 0 {
            self.affine_dot_reflect(lambda)
        } else {
            self.rs.dot_reflect(lambda, wall - 1)
        }
    }

    /// Number of walls of the fundamental alcove (affine wall first).
    pub fn wall_count(&self) -> usize {
        self.rs.rank() + 1
    }

    fn guard(&self, shifted: &Weight) -> u64 {
        let spread: i64 = self
            .rs
            .positive_roots()
            .iter()
            .map(|b| b.coroot.pair(shifted).abs())
            .sum();
        4 * self.rs.weyl_group_order() * (1 + (spread / self.wall) as u64)
    }

    /// The signed projection: zero when `lambda + rho` lies on a wall of the
    /// affine arrangement, otherwise the alcove representative of the dot
    /// orbit with sign `(-1)^{#reflections}`.
    pub fn project(&self, lambda: &Weight) -> Result<SignedWeight> {
        self.rs.check(lambda)?;
        let rho = self.rs.rho();
        let mut mu = lambda.add(&rho);
        let bound = self.guard(&mu);
        let mut sign = 1i64;
        let mut steps = 0u64;
        loop {
            if self.affine_pairing(&mu) > self.wall {
                mu = self.affine_reflect(&mu);
            } else if let Some(i) = mu.0.iter().position(|&c| c < 0) {
                mu = self.rs.reflect(&mu, i);
            } else {
                break;
            }
            sign = -sign;
            steps += 1;
            if steps > bound {
                return Err(Error::IterationBound {
                    bound,
                    what: format!("projecting {lambda} onto the alcove"),
                });
            }
        }
        if mu.0.contains(&0) || self.affine_pairing(&mu) == self.wall {
            return Ok(SignedWeight::Zero);
        }
        Ok(SignedWeight::Nonzero {
            sign,
            weight: mu.sub(&rho),
        })
    }

    /// Alcove weights in lexicographic order of omega-coordinates.
    pub fn enumerate(&self) -> Vec<Weight> {
        self.dominant_between(0, self.level)
    }

    /// Dominant weights with `lo <= <lambda, theta^vee> <= hi`, sorted.
    pub fn dominant_between(&self, lo: i64, hi: i64) -> Vec<Weight> {
        let c = &self.theta.coroot.0;
        let mut out = Vec::new();
        let mut cur = vec![0i64; c.len()];
        fn rec(i: usize, used: i64, lo: i64, hi: i64, c: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i == cur.len() {
                if used >= lo {
                    out.push(Weight(cur.clone()));
                }
                return;
            }
            let mut m = 0;
            while used + c[i] * m <= hi {
                cur[i] = m;
                rec(i + 1, used + c[i] * m, lo, hi, c, cur, out);
                m += 1;
            }
            cur[i] = 0;
        }
        if hi >= 0 {
            rec(0, 0, lo, hi, c, &mut cur, &mut out);
        }
        out
    }

    pub fn index_of(&self, basis: &[Weight], lambda: &Weight) -> Option<usize> {
        basis.binary_search(lambda).ok()
    }
}

impl fmt::Display for AlcoveData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wall = match self.wall_root {
            AffineWall::ShortRoot => "alpha_0",
            AffineWall::LongRoot => "beta_0",
        };
        write!(
            f,
            "{} ell={} k={} wall=<lambda+rho,{}^vee> < {}",
            self.rs.name(),
            self.ell,
            self.level,
            wall,
            self.wall
        )
    }
}

/// The `gl_n` alcove `{lambda_1 >= ... >= lambda_n, lambda_1 - lambda_n <= k}`,
/// invariant under shifts by `epsilon`. Projection goes through the `sl_n`
/// alcove and keeps the charge.
#[derive(Clone, Debug)]
pub struct GlAlcove {
    sl: AlcoveData,
    n: usize,
}

impl GlAlcove {
    pub fn new(n: usize, ell: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedRootSystem {
                ty: "gl".into(),
                rank: n,
            });
        }
        let rs = Arc::new(RootSystem::new(CartanType::A, n - 1)?);
        Ok(GlAlcove {
            sl: AlcoveData::new(rs, ell)?,
            n,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> i64 {
        self.sl.level()
    }

    pub fn sl(&self) -> &AlcoveData {
        &self.sl
    }

    pub fn contains(&self, lambda: &GlWeight) -> bool {
        lambda.n() == self.n
            && lambda.is_dominant()
            && lambda.0[0] - lambda.0[self.n - 1] <= self.level()
    }

    /// Signed projection of a `gl_n` weight.
    pub fn project(&self, lambda: &GlWeight) -> Result<Option<(i64, GlWeight)>> {
        if lambda.n() != self.n {
            return Err(Error::RankMismatch {
                weight: lambda.to_string(),
                got: lambda.n(),
                rank: self.n,
            });
        }
        Ok(match self.sl.project(&lambda.to_sl())? {
            SignedWeight::Zero => None,
            SignedWeight::Nonzero { sign, weight } => {
                let lift = GlWeight::from_sl_with_charge(&weight, lambda.charge())
                    .expect("affine dot action preserves the charge modulo n");
                Some((sign, lift))
            }
        })
    }

    /// The transversal `lambda_n = 0` of the alcove.
    pub fn enumerate_transversal(&self) -> Vec<GlWeight> {
        let mut out: Vec<GlWeight> = self.sl.enumerate().iter().map(GlWeight::from_sl).collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alcove(ty: CartanType, n: usize, ell: u64) -> AlcoveData {
        AlcoveData::new(Arc::new(RootSystem::new(ty, n).unwrap()), ell).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn levels() {
        let a = alcove(CartanType::A, 1, 5);
        assert_eq!(a.level(), 3);
        assert_eq!(a.enumerate(), vec![w(&[0]), w(&[1]), w(&[2]), w(&[3])]);

        let c = alcove(CartanType::C, 2, 12);
        assert_eq!((c.wall_root(), c.wall(), c.level()), (AffineWall::LongRoot, 6, 3));
        assert_eq!(c.enumerate().len(), 10);
        assert_eq!(alcove(CartanType::C, 2, 11).wall_root(), AffineWall::ShortRoot);
        assert_eq!(alcove(CartanType::C, 2, 11).level(), 11 - 4);

        let g = alcove(CartanType::G2, 2, 21);
        assert_eq!(g.level(), 3);
        assert_eq!(g.enumerate().len(), 6);
        assert_eq!(alcove(CartanType::G2, 2, 24).level(), 0);
        assert_eq!(alcove(CartanType::G2, 2, 11).level(), 5);
        assert_eq!(alcove(CartanType::G2, 2, 22).level(), 5);

        assert_eq!(alcove(CartanType::D, 4, 13).level(), 13 - 6);
        assert_eq!(alcove(CartanType::D, 4, 28).level(), 14 - 6);
        assert_eq!(alcove(CartanType::B, 3, 13).level(), 13 - 6);
        assert_eq!(alcove(CartanType::B, 3, 26).level(), 13 - 6 + 1);
        assert_eq!(alcove(CartanType::A, 2, 8).level(), 4 - 3);
    }

    #[test]
    fn empty_alcoves_rejected() {
        let rs = Arc::new(RootSystem::new(CartanType::A, 2).unwrap());
        assert!(matches!(
            AlcoveData::new(rs.clone(), 2),
            Err(Error::AlcoveEmpty { .. })
        ));
        assert!(AlcoveData::new(rs, 3).is_ok());
    }

    #[test]
    fn projection_examples() {
        let a = alcove(CartanType::A, 1, 5);
        assert_eq!(a.project(&w(&[4])).unwrap(), SignedWeight::Zero);
        assert_eq!(
            a.project(&w(&[5])).unwrap(),
            SignedWeight::Nonzero { sign: -1, weight: w(&[3]) }
        );
        for l in a.enumerate() {
            assert_eq!(
                a.project(&l).unwrap(),
                SignedWeight::Nonzero { sign: 1, weight: l.clone() }
            );
        }
        assert_eq!(a.project(&w(&[-1])).unwrap(), SignedWeight::Zero);
        assert_eq!(
            a.project(&w(&[-3])).unwrap(),
            SignedWeight::Nonzero { sign: -1, weight: w(&[1]) }
        );
    }

    #[test]
    fn gl_projection_keeps_charge() {
        let g = GlAlcove::new(2, 5).unwrap();
        let lam = GlWeight(vec![5, 0]);
        let (sign, p) = g.project(&lam).unwrap().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(p.charge(), 5);
        assert!(g.contains(&p));
        assert_eq!(p, GlWeight(vec![4, 1]));
    }
}
