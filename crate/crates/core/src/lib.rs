//! Exact fusion rings of quantum groups at roots of unity.

pub mod alcove;
pub mod cache;
pub mod charring;
pub mod comb;
pub mod error;
pub mod fusionring;
pub mod hnf;
pub mod idealpres;
pub mod lattice;
pub mod oracle;
pub mod rootsys;
pub mod selftest;

pub use alcove::{AlcoveData, GlAlcove};
pub use charring::{CharElement, CharRing, WeightMultiset};
pub use fusionring::{FusionElement, FusionRing, FusionTable, GlFusionRing};
pub use error::{Error, Result};
pub use rootsys::{CartanType, GlWeight, RootSystem, SignedWeight, Weight};
