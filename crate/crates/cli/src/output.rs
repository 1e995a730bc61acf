//! JSON payloads. Field order is the serialization order, so output is
//! byte-stable for fixed inputs.

use fusionring::alcove::{AffineWall, AlcoveData};
use fusionring::idealpres::{Certificate, VerificationStatus};
use fusionring::selftest::CriterionReport;
use serde::Serialize;

pub fn join(w: &[i64]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn wall_name(a: &AlcoveData) -> &'static str {
    match a.wall_root() {
        AffineWall::ShortRoot => "alpha_0",
        AffineWall::LongRoot => "beta_0",
    }
}

#[derive(Serialize)]
pub struct AlcoveOut {
    pub command: &'static str,
    pub root_system: String,
    pub ell: u64,
    pub seed: u64,
    pub level: i64,
    pub wall_root: &'static str,
    pub wall: i64,
    pub theta_coroot: Vec<i64>,
    pub transversal: bool,
    pub coordinates: &'static str,
    pub size: usize,
    pub basis: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct WeightMult {
    pub weight: Vec<i64>,
    pub mult: u64,
}

#[derive(Serialize)]
pub struct MultOut {
    pub command: &'static str,
    pub root_system: String,
    pub seed: u64,
    pub lambda: Vec<i64>,
    /// Decimal string; dimensions can exceed 2^53.
    pub dimension: String,
    pub dominant: Vec<WeightMult>,
}

#[derive(Serialize)]
pub struct Term {
    pub nu: Vec<i64>,
    pub coeff: i64,
}

#[derive(Serialize)]
pub struct ProductOut {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub terms: Vec<Term>,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct ProductRow {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub terms: Vec<Term>,
}

#[derive(Serialize)]
pub struct TableHead {
    pub command: &'static str,
    pub root_system: String,
    pub ell: u64,
    pub level: i64,
    pub seed: u64,
    pub basis: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct Difference {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub star: Vec<Term>,
    pub fusion: Vec<Term>,
}

#[derive(Serialize)]
pub struct CompareOut {
    pub command: &'static str,
    pub root_system: String,
    pub ell: u64,
    pub seed: u64,
    pub against: &'static str,
    pub result: &'static str,
    pub basis_size: usize,
    pub first_difference: Option<Difference>,
}

#[derive(Serialize)]
pub struct IdealMinOut {
    pub command: &'static str,
    pub root_system: String,
    pub ell: u64,
    pub level: i64,
    pub seed: u64,
    pub minimal_excluded: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct GenTerm {
    pub weight: Vec<i64>,
    pub coeff: i64,
}

#[derive(Serialize)]
pub struct GensOut {
    pub command: &'static str,
    pub root_system: String,
    pub ell: u64,
    pub level: i64,
    pub seed: u64,
    pub label: String,
    pub notes: Vec<String>,
    pub generators: Vec<Vec<GenTerm>>,
}

#[derive(Serialize)]
pub struct CertificateOut {
    pub command: &'static str,
    pub label: String,
    pub status: &'static str,
    pub witnesses: Vec<String>,
    pub bound: i64,
    pub matrix_shape: [usize; 2],
    pub seed: u64,
}

impl CertificateOut {
    pub fn from_certificate(command: &'static str, label: &str, cert: &Certificate, seed: u64) -> Self {
        let mut witnesses = Vec::new();
        match &cert.status {
            VerificationStatus::Refuted { witness } => witnesses.push(witness.clone()),
            VerificationStatus::Unsupported { reason } => witnesses.push(reason.clone()),
            _ => {}
        }
        witnesses.extend(cert.witnesses.iter().cloned());
        CertificateOut {
            command,
            label: label.to_string(),
            status: cert.status.name(),
            witnesses,
            bound: cert.bound,
            matrix_shape: [cert.matrix_shape.0, cert.matrix_shape.1],
            seed,
        }
    }

    pub fn unsupported(command: &'static str, label: &str, reason: String, seed: u64) -> Self {
        CertificateOut {
            command,
            label: label.to_string(),
            status: "UNSUPPORTED",
            witnesses: vec![reason],
            bound: 0,
            matrix_shape: [0, 0],
            seed,
        }
    }
}

#[derive(Serialize)]
pub struct SelftestOut {
    pub command: &'static str,
    pub seed: u64,
    pub quick: bool,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}
