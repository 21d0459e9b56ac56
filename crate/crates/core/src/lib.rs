//! Exact computations for twisted pairs and spectral curves over the
//! projective line.
//!
//! Everything runs over the rationals with arbitrary precision: polynomial
//! sections of O(k) in two charts, twisted endomorphisms and their
//! characteristic data, spectral-curve branch loci, genera and integrality,
//! permutation-group block systems, and the degree ledgers of iterated
//! covers. No floating point anywhere.

pub mod chain;
pub mod elliptic;
pub mod error;
pub mod lambda;
pub mod linalg;
pub mod pairs;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod section;
pub mod spectral;
pub mod tower;

pub use chain::{CyclicChain, FactoredSection, Stability};
pub use error::{Error, Result};
pub use lambda::LambdaPoly;
pub use pairs::{nitsure_dimension, BgType, HitchinTuple, TwistedPair};
pub use perm::{BlockSystem, Permutation};
pub use poly::Poly;
pub use rational::Rational;
pub use section::{Section, ZeroProfile};
pub use spectral::{Integrality, SpectralReport};
pub use tower::TowerPlan;
