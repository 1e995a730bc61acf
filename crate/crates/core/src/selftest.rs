//! The acceptance suite: ten exact checks over a fixed list of desk-scale
//! instances, each with a wall-clock budget.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alcove::AlcoveData;
use crate::cache::DiskCache;
use crate::charring::CharRing;
use crate::comb::{AlcoveVector, TypeAComb, TypeCComb};
use crate::error::Result;
use crate::fusionring::{FusionElement, FusionRing, FusionTable, GlFusionRing, DEFAULT_TABLE_CAP};
use crate::idealpres::{GeneratorSet, IdealContext};
use crate::oracle;
use crate::rootsys::{CartanType, RootSystem, Weight};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Smaller sample sizes and only the cheaper criteria.
    pub quick: bool,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: DEFAULT_SEED,
            quick: false,
            cache_dir: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub detail: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Option<Duration>,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2}: {verdict}  {}  [{:.2?}", self.id, self.title, self.elapsed)?;
        if let Some(l) = self.limit {
            write!(f, " / limit {l:?}")?;
        }
        f.write_str("]")
    }
}

pub const CRITERIA: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];
pub const QUICK_CRITERIA: [u8; 7] = [1, 2, 3, 5, 8, 9, 10];

const TITLES: [&str; 10] = [
    "sl_2 closed form at ell = 5",
    "fuse agrees with the alternating-sum route",
    "type A operator tables equal fusion tables",
    "type C operator tables equal fusion tables",
    "type C elementary operators commute",
    "ring axioms on every instance",
    "fusion-ideal presentations certified",
    "G2 character recursions",
    "Freudenthal agrees with the alternating-sum oracle",
    "projection is invariant under affine reflections",
];

const LIMITS: [Option<u64>; 10] = [
    Some(1),
    Some(30),
    Some(60),
    Some(120),
    None,
    None,
    Some(600),
    None,
    None,
    None,
];

/// Instances of the table criteria.
const TABLE_INSTANCES: [(CartanType, usize, u64); 9] = [
    (CartanType::A, 1, 5),
    (CartanType::A, 1, 7),
    (CartanType::A, 2, 7),
    (CartanType::A, 2, 8),
    (CartanType::A, 3, 9),
    (CartanType::C, 2, 11),
    (CartanType::C, 2, 12),
    (CartanType::C, 3, 14),
    (CartanType::G2, 2, 21),
];

/// Builds rings once and shares weight multiplicities per root system.
pub struct Suite {
    cfg: SelftestConfig,
    chars: HashMap<(CartanType, usize), Arc<CharRing>>,
}

impl Suite {
    pub fn new(cfg: SelftestConfig) -> Self {
        Suite {
            cfg,
            chars: HashMap::new(),
        }
    }

    fn chars(&mut self, ty: CartanType, n: usize) -> Result<Arc<CharRing>> {
        if let Some(c) = self.chars.get(&(ty, n)) {
            return Ok(c.clone());
        }
        let rs = Arc::new(RootSystem::new(ty, n)?);
        let disk = self.cfg.cache_dir.clone().map(DiskCache::new);
        let c = Arc::new(CharRing::with_disk_cache(rs, disk));
        self.chars.insert((ty, n), c.clone());
        Ok(c)
    }

    fn ring(&mut self, ty: CartanType, n: usize, ell: u64) -> Result<FusionRing> {
        let chars = self.chars(ty, n)?;
        let alcove = AlcoveData::new(chars.root_system().clone(), ell)?;
        Ok(FusionRing::with_chars(Arc::new(alcove), chars))
    }

    pub fn run_all(&mut self) -> Vec<CriterionReport> {
        let ids: &[u8] = if self.cfg.quick { &QUICK_CRITERIA } else { &CRITERIA };
        ids.iter().map(|&id| self.run(id)).collect()
    }

    pub fn run(&mut self, id: u8) -> CriterionReport {
        let start = Instant::now();
        let outcome = match id {
            1 => self.sl2_closed_form(),
            2 => self.alt_route(),
            3 => self.type_a_tables(),
            4 => self.type_c_tables(),
            5 => self.type_c_commutators(),
            6 => self.ring_axioms(),
            7 => self.presentations(),
            8 => self.g2_recursions(),
            9 => self.freudenthal_oracle(),
            10 => self.projection_invariance(),
            _ => Ok((false, vec![format!("no criterion {id}")])),
        };
        let elapsed = start.elapsed();
        let idx = usize::from(id.clamp(1, 10)) - 1;
        let limit = LIMITS[idx].map(Duration::from_secs);
        let (mut passed, mut detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        if let Some(l) = limit {
            if elapsed > l {
                passed = false;
                detail.push(format!("took {elapsed:.2?}, over the {l:?} budget"));
            }
        }
        CriterionReport {
            id,
            title: TITLES[idx].to_string(),
            passed,
            detail,
            elapsed,
            limit,
        }
    }

    fn sl2_closed_form(&mut self) -> Result<(bool, Vec<String>)> {
        let ring = self.ring(CartanType::A, 1, 5)?;
        let table = ring.fusion_table(DEFAULT_TABLE_CAP)?;
        let k = ring.alcove().level();
        Ok(match table.first_difference(&oracle::sl2_table(k)) {
            None => (true, vec![format!("k = {k}, {} basis weights", table.basis().len())]),
            Some(d) => (false, vec![describe(d)]),
        })
    }

    fn alt_route(&mut self) -> Result<(bool, Vec<String>)> {
        let list = [
            (CartanType::A, 1, 5),
            (CartanType::A, 1, 7),
            (CartanType::A, 2, 7),
            (CartanType::C, 2, 11),
            (CartanType::C, 2, 12),
            (CartanType::G2, 2, 21),
        ];
        let mut detail = Vec::new();
        let mut ok = true;
        for (ty, n, ell) in list {
            let ring = self.ring(ty, n, ell)?;
            let nm = ring.alcove().root_system().name();
            let table = ring.fusion_table(DEFAULT_TABLE_CAP)?;
            let basis = ring.basis();
            let triples: Vec<(usize, usize, usize)> = (0..basis.len())
                .flat_map(|i| (0..basis.len()).flat_map(move |j| (0..basis.len()).map(move |l| (i, j, l))))
                .collect();
            let bad = triples
                .par_iter()
                .map(|&(i, j, l)| {
                    let alt = ring.fuse_alt(&basis[i], &basis[j], &basis[l])?;
                    Ok((alt != table.constant(i, j, l)).then_some((i, j, l, alt)))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .next();
            match bad {
                None => detail.push(format!("{nm} ell={ell}: {} triples agree", triples.len())),
                Some((i, j, l, alt)) => {
                    ok = false;
                    detail.push(format!(
                        "{nm} ell={ell}: N({}, {}, {}) = {} but alternating sum gives {alt}",
                        basis[i],
                        basis[j],
                        basis[l],
                        table.constant(i, j, l)
                    ));
                }
            }
        }
        Ok((ok, detail))
    }

    fn type_a_tables(&mut self) -> Result<(bool, Vec<String>)> {
        let mut detail = Vec::new();
        let mut ok = true;
        for (n, ell) in [(2usize, 5u64), (3, 7), (3, 8), (4, 9)] {
            let comb = TypeAComb::new(n, ell)?;
            let fusion = self.ring(CartanType::A, n - 1, ell)?.fusion_table(DEFAULT_TABLE_CAP)?;
            match comb.sl_star_table()?.first_difference(&fusion) {
                None => detail.push(format!("sl_{n} ell={ell}: tables equal")),
                Some(d) => {
                    ok = false;
                    detail.push(format!("sl_{n} ell={ell}: {}", describe(d)));
                }
            }
        }
        // gl_2 on two charges of the transversal
        let comb = TypeAComb::new(2, 5)?;
        let gl = GlFusionRing::new(2, 5)?;
        let mut basis = comb.alcove().enumerate_transversal();
        basis.extend(basis.clone().into_iter().map(|w| w.shifted(1)));
        let mut gl_ok = true;
        for a in &basis {
            for b in &basis {
                let direct: AlcoveVector<_> = gl.fuse(a, b)?.into_iter().collect();
                if comb.star(a, b)? != direct {
                    gl_ok = false;
                    detail.push(format!("gl_2 ell=5: {a} * {b} differs"));
                }
            }
        }
        if gl_ok {
            detail.push(format!("gl_2 ell=5: {} products equal", basis.len() * basis.len()));
        }
        Ok((ok && gl_ok, detail))
    }

    fn type_c_instances(&mut self) -> Result<Vec<(FusionRing, TypeCComb)>> {
        [(2, 11), (2, 12), (3, 14)]
            .into_iter()
            .map(|(n, ell)| {
                let ring = self.ring(CartanType::C, n, ell)?;
                let comb = TypeCComb::new(ring.alcove().clone())?;
                Ok((ring, comb))
            })
            .collect()
    }

    fn type_c_tables(&mut self) -> Result<(bool, Vec<String>)> {
        let mut detail = Vec::new();
        let mut ok = true;
        for (ring, comb) in self.type_c_instances()? {
            let name = format!("C{} ell={}", ring.alcove().root_system().rank(), ring.alcove().ell());
            match comb.star_table()?.first_difference(&ring.fusion_table(DEFAULT_TABLE_CAP)?) {
                None => detail.push(format!("{name}: tables equal")),
                Some(d) => {
                    ok = false;
                    detail.push(format!("{name}: {}", describe(d)));
                }
            }
        }
        Ok((ok, detail))
    }

    fn type_c_commutators(&mut self) -> Result<(bool, Vec<String>)> {
        let mut detail = Vec::new();
        let mut ok = true;
        for (ring, comb) in self.type_c_instances()? {
            let top = 2 * ring.alcove().root_system().rank();
            let name = format!("C{} ell={}", ring.alcove().root_system().rank(), ring.alcove().ell());
            let mut checked = 0;
            let mut bad = None;
            'outer: for lam in ring.basis() {
                let v = AlcoveVector::basis(lam.clone());
                for i in 0..=top {
                    for j in (i + 1)..=top {
                        checked += 1;
                        let c = comb.commutator(i, j, &v)?;
                        if !c.is_zero() {
                            bad = Some(format!("{name}: [e_{i}, e_{j}] on {lam} = {c}"));
                            break 'outer;
                        }
                    }
                }
            }
            match bad {
                None => detail.push(format!("{name}: {checked} commutators vanish")),
                Some(b) => {
                    ok = false;
                    detail.push(b);
                }
            }
        }
        Ok((ok, detail))
    }

    fn ring_axioms(&mut self) -> Result<(bool, Vec<String>)> {
        let mut detail = Vec::new();
        let mut ok = true;
        let samples = if self.cfg.quick { 100 } else { 500 };
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        for (ty, n, ell) in TABLE_INSTANCES {
            let ring = self.ring(ty, n, ell)?;
            let nm = ring.alcove().root_system().name();
            let table = ring.fusion_table(DEFAULT_TABLE_CAP)?;
            let name = format!("{nm} ell={ell}");
            match check_axioms(&table, samples, &mut rng) {
                Ok(msg) => detail.push(format!("{name}: {msg}")),
                Err(msg) => {
                    ok = false;
                    detail.push(format!("{name}: {msg}"));
                }
            }
        }
        Ok((ok, detail))
    }

    fn presentations(&mut self) -> Result<(bool, Vec<String>)> {
        let mut detail = Vec::new();
        let mut ok = true;
        let mut record = |name: String, cert: crate::idealpres::Certificate| {
            let good = cert.status.is_verified();
            ok &= good;
            detail.push(format!(
                "{name}: {} (bound {}, window {}x{})",
                cert.status, cert.bound, cert.matrix_shape.0, cert.matrix_shape.1
            ));
        };
        let list: [(CartanType, usize, u64, &[&str]); 14] = [
            (CartanType::A, 2, 5, &["A-I", "A-J"]),
            (CartanType::A, 2, 6, &["A-I", "A-J"]),
            (CartanType::A, 3, 7, &["A-I", "A-J"]),
            (CartanType::C, 2, 12, &["C-even"]),
            (CartanType::C, 3, 14, &["C-even"]),
            (CartanType::C, 2, 11, &["C-odd"]),
            (CartanType::D, 4, 13, &["D-odd"]),
            (CartanType::D, 4, 14, &["D-2mod4"]),
            (CartanType::B, 2, 11, &["B-odd", "B-odd-raw"]),
            (CartanType::B, 3, 13, &["B-odd"]),
            (CartanType::G2, 2, 21, &["G2-case1"]),
            (CartanType::G2, 2, 24, &["G2-case2"]),
            (CartanType::G2, 2, 11, &["G2-case3"]),
            (CartanType::G2, 2, 7, &["G2-case4"]),
        ];
        for (ty, n, ell, labels) in list {
            let ctx = IdealContext::new(Arc::new(self.ring(ty, n, ell)?));
            let nm = ctx.alcove().root_system().name();
            let bound = ctx.default_bound();
            let mut sets: Vec<GeneratorSet> = Vec::new();
            for label in labels {
                let name = format!("{nm} ell={ell} {label}");
                record(name, ctx.certify_preset(label, bound)?);
                sets.push(ctx.preset(label)?);
            }
            if let [a, b] = sets.as_slice() {
                let name = format!("{nm} ell={ell} {} <-> {}", a.label, b.label);
                record(name, ctx.presentations_equivalent(a, b, bound)?);
            }
        }
        Ok((ok, detail))
    }

    fn g2_recursions(&mut self) -> Result<(bool, Vec<String>)> {
        let mut detail = Vec::new();
        let mut ok = true;
        for ell in [21, 24] {
            let ctx = IdealContext::new(Arc::new(self.ring(CartanType::G2, 2, ell)?));
            let cert = ctx.g2_recursion_check()?;
            ok &= cert.status.is_verified();
            detail.push(format!(
                "G2 ell={ell} k={}: {} ({} identities)",
                ctx.alcove().level(),
                cert.status,
                cert.witnesses.len()
            ));
        }
        Ok((ok, detail))
    }

    fn freudenthal_oracle(&mut self) -> Result<(bool, Vec<String>)> {
        let systems = [
            (CartanType::A, 1),
            (CartanType::A, 2),
            (CartanType::A, 3),
            (CartanType::B, 2),
            (CartanType::B, 3),
            (CartanType::C, 2),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::G2, 2),
        ];
        let mut detail = Vec::new();
        let mut ok = true;
        for (ty, n) in systems {
            let chars = self.chars(ty, n)?;
            let rs = chars.root_system().clone();
            let nm = rs.name();
            let weights = oracle::dominant_up_to_dimension(&rs, 300);
            let bad = weights
                .par_iter()
                .map(|lam| {
                    let fr = chars.weight_multiplicities(lam)?;
                    Ok((fr.dominant() != &oracle::kostant_multiplicities(&rs, lam)).then(|| lam.clone()))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .next();
            match bad {
                None => detail.push(format!("{nm}: {} highest weights agree", weights.len())),
                Some(lam) => {
                    ok = false;
                    detail.push(format!("{nm}: multiplicities of L({lam}) differ"));
                }
            }
        }
        Ok((ok, detail))
    }

    fn projection_invariance(&mut self) -> Result<(bool, Vec<String>)> {
        let trials = if self.cfg.quick { 200 } else { 1000 };
        let mut list: Vec<(CartanType, usize, u64)> = TABLE_INSTANCES.to_vec();
        list.extend([
            (CartanType::B, 2, 11),
            (CartanType::B, 3, 13),
            (CartanType::D, 4, 13),
            (CartanType::D, 4, 14),
            (CartanType::G2, 2, 24),
        ]);
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed.wrapping_add(10));
        let mut detail = Vec::new();
        let mut ok = true;
        for (ty, n, ell) in list {
            let ring = self.ring(ty, n, ell)?;
            let a = ring.alcove();
            let nm = a.root_system().name();
            let span = 2 * a.wall();
            let mut bad = None;
            for _ in 0..trials {
                let lam = Weight((0..n).map(|_| rng.gen_range(-span..=span)).collect());
                let len = rng.gen_range(0..=8);
                let mut moved = lam.clone();
                for _ in 0..len {
                    moved = a.dot_reflect_wall(&moved, rng.gen_range(0..a.wall_count()));
                }
                let want = if len % 2 == 0 { a.project(&lam)? } else { a.project(&lam)?.negated() };
                let got = a.project(&moved)?;
                if got != want {
                    bad = Some(format!("{nm} ell={ell}: {lam} vs {moved} gives {got:?} and {want:?}"));
                    break;
                }
            }
            match bad {
                None => detail.push(format!("{nm} ell={ell}: {trials} trials agree")),
                Some(b) => {
                    ok = false;
                    detail.push(b);
                }
            }
        }
        Ok((ok, detail))
    }
}

fn describe(d: (Weight, Weight, FusionElement, FusionElement)) -> String {
    format!("[{}]*[{}] = {} vs {}", d.0, d.1, d.2, d.3)
}

/// Commutativity, associativity, the unit and positivity on a table.
fn check_axioms(t: &FusionTable, samples: usize, rng: &mut ChaCha8Rng) -> std::result::Result<String, String> {
    let basis = t.basis();
    let size = basis.len();
    let index: HashMap<&Weight, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let unit = index
        .get(&Weight::zero(basis[0].len()))
        .copied()
        .ok_or("the zero weight is missing from the basis")?;
    for i in 0..size {
        if t.product(unit, i) != &FusionElement::basis(basis[i].clone()) {
            return Err(format!("[0]*[{}] = {}", basis[i], t.product(unit, i)));
        }
        for j in 0..size {
            if t.product(i, j) != t.product(j, i) {
                return Err(format!("[{}]*[{}] is not commutative", basis[i], basis[j]));
            }
            if let Some((w, c)) = t.product(i, j).terms().iter().find(|(_, &c)| c < 0) {
                return Err(format!("N([{}], [{}], [{w}]) = {c}", basis[i], basis[j]));
            }
        }
    }
    let times = |x: &FusionElement, c: usize| {
        let mut out = FusionElement::zero();
        for (w, &k) in x.terms() {
            out = out.add(&t.product(index[w], c).scaled(k));
        }
        out
    };
    let triples: Vec<(usize, usize, usize)> = if size <= 12 {
        (0..size)
            .flat_map(|i| (0..size).flat_map(move |j| (0..size).map(move |l| (i, j, l))))
            .collect()
    } else {
        let all: Vec<usize> = (0..size).collect();
        (0..samples)
            .map(|_| {
                (
                    *all.choose(rng).expect("basis is nonempty"),
                    *all.choose(rng).expect("basis is nonempty"),
                    *all.choose(rng).expect("basis is nonempty"),
                )
            })
            .collect()
    };
    for &(i, j, l) in &triples {
        let left = times(t.product(i, j), l);
        let right = times(t.product(j, l), i);
        if left != right {
            return Err(format!("([{}][{}])[{}] is not associative", basis[i], basis[j], basis[l]));
        }
    }
    Ok(format!("{size} basis weights, {} associativity triples", triples.len()))
}

/// Runs the suite and returns every report.
pub fn run(cfg: SelftestConfig) -> Vec<CriterionReport> {
    Suite::new(cfg).run_all()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_on_sl2() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(check_axioms(&oracle::sl2_table(3), 10, &mut rng).is_ok());
    }

    #[test]
    fn detects_broken_table() {
        let t = oracle::sl2_table(2);
        let size = t.basis().len();
        let mut products: Vec<FusionElement> =
            (0..size * size).map(|x| t.product(x / size, x % size).clone()).collect();
        products[size + 2] = products[size + 2].add(&FusionElement::basis(Weight(vec![0])));
        let broken = FusionTable::from_products(t.basis().to_vec(), products);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(check_axioms(&broken, 10, &mut rng).is_err());
    }
}
