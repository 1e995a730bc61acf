//! On-disk multiplicity cache.
//!
//! One file per highest weight, `<dir>/<type><rank>/<coords>.mult`:
//!
//! ```text
//! fusionring-mult v1 <type> <rank>
//! <lambda> <mu> <mult>
//! ...
//! ```
//!
//! Weights are comma-separated omega-coordinates and only dominant `mu`
//! are stored. A file with a bad header or a malformed line is ignored and
//! rewritten; the cache is advisory.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::rootsys::{CartanType, Weight};

pub const CACHE_ENV: &str = "FUSIONRING_CACHE_DIR";
const MAGIC: &str = "fusionring-mult";
const VERSION: &str = "v1";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(DiskCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, ty: CartanType, rank: usize, lambda: &Weight) -> PathBuf {
        let name: Vec<String> = lambda.0.iter().map(|m| m.to_string()).collect();
        self.dir
            .join(format!("{ty}{rank}"))
            .join(format!("{}.mult", name.join("_")))
    }

    pub fn header(ty: CartanType, rank: usize) -> String {
        format!("{MAGIC} {VERSION} {ty} {rank}")
    }

    pub fn load(
        &self,
        ty: CartanType,
        rank: usize,
        lambda: &Weight,
    ) -> Option<BTreeMap<Weight, u64>> {
        let text = fs::read_to_string(self.path_for(ty, rank, lambda)).ok()?;
        parse(&text, ty, rank, lambda)
    }

    pub fn store(
        &self,
        ty: CartanType,
        rank: usize,
        lambda: &Weight,
        dominant: &BTreeMap<Weight, u64>,
    ) -> std::io::Result<()> {
        let path = self.path_for(ty, rank, lambda);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let mut body = Self::header(ty, rank);
        body.push('\n');
        for (mu, m) in dominant {
            body.push_str(&format!("{lambda} {mu} {m}\n"));
        }
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
        }
        fs::rename(tmp, path)
    }
}

fn parse(text: &str, ty: CartanType, rank: usize, lambda: &Weight) -> Option<BTreeMap<Weight, u64>> {
    let mut lines = text.lines();
    if lines.next()? != DiskCache::header(ty, rank) {
        return None;
    }
    let mut out = BTreeMap::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let lam: Weight = parts.next()?.parse().ok()?;
        let mu: Weight = parts.next()?.parse().ok()?;
        let m: u64 = parts.next()?.parse().ok()?;
        if parts.next().is_some() || &lam != lambda || mu.len() != rank || m == 0 {
            return None;
        }
        out.insert(mu, m);
    }
    // the highest weight always occurs once
    if out.get(lambda) != Some(&1) {
        return None;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let lam = Weight(vec![1, 1]);
        let mut map = BTreeMap::new();
        map.insert(lam.clone(), 1);
        map.insert(Weight(vec![0, 0]), 2);
        cache.store(CartanType::A, 2, &lam, &map).unwrap();
        assert_eq!(cache.load(CartanType::A, 2, &lam), Some(map.clone()));

        let path = cache.path_for(CartanType::A, 2, &lam);
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("fusionring-mult v1 A 2\n"));
        fs::write(&path, text.replace("v1", "v0")).unwrap();
        assert_eq!(cache.load(CartanType::A, 2, &lam), None);
        fs::write(&path, "fusionring-mult v1 A 2\n1,1 1,1 x\n").unwrap();
        assert_eq!(cache.load(CartanType::A, 2, &lam), None);
        // wrong type in header
        cache.store(CartanType::A, 2, &lam, &map).unwrap();
        assert_eq!(cache.load(CartanType::C, 2, &lam), None);
    }
}
