//! Exact arithmetic for T-chains, blown-up Hirzebruch surfaces and the moduli of Horikawa surfaces.

pub mod error;
pub mod hj;
pub mod lattice;
pub mod matrix;
pub mod moduli;
pub mod poly;
pub mod systems;
pub mod tables;
pub mod tangent;
pub mod verify;

pub use error::{Error, Result};
pub use hj::{Chain, ChainClassification, ChainKind, CyclicQuotientSingularity, Side, TParameters};
pub use lattice::{DivisorClass, PicardLattice};
pub use poly::{Affine, Poly};
