//! Exact F2 certificates for the maximal topological complexity of connected
//! sums of real projective spaces, plus the matching cell-complex motion
//! planner.
//!
//! The algebra is generic over a [`Group`]; the aliases below name the
//! concrete instances used by the certificate pipeline.

pub mod bar;
pub mod certificate;
pub mod cocycle;
pub mod coinvariants;
pub mod error;
pub mod f2;
pub mod group;
pub mod linalg;
pub mod planner;
pub mod ring;
pub mod tensor;
pub mod wedge;

pub use error::{Error, Result};
pub use group::{Dihedral, DihedralQuotient, FreeProductWord, Group, Pair, Y, Z};

/// `D × D`.
pub type DihedralPair = Pair<Dihedral, Dihedral>;
/// `π_g × π_g`.
pub type FreeProductPair = Pair<FreeProductWord, FreeProductWord>;

pub type DihedralChain = bar::BarChain<Dihedral>;
pub type DihedralPairChain = bar::BarChain<DihedralPair>;
pub type FreeProductChain = bar::BarChain<FreeProductWord>;

pub type DihedralRingElement = ring::RingElement<Dihedral>;
pub type DihedralTensor = tensor::TensorElement<Dihedral>;
/// Tensors after the `(Y, ..., Z, ...)` projection, as elements of `Y × Z`.
pub type YzTensor = tensor::TensorElement<Pair<Y, Z>>;
