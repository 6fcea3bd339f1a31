//! Exact computation of Sylvester double sums, generalized Vandermonde
//! determinants, Hermite interpolation and subresultants over the rationals.

pub mod cli;
pub mod double_sums;
pub mod error;
pub mod hermite;
pub mod multipoly;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod subresultants;
pub mod symbolic;
#[cfg(test)]
mod testutil;
pub mod vandermonde;
pub mod verify;

pub use double_sums::{
    msylv, sylv_classical, sylv_general, sylv_nonmonic, symbolic_f, symbolic_s, DoubleSumIndex,
    SplitPoly,
};
pub use error::{Error, Result};
pub use hermite::{
    hermite_interpolate, reconstruct, symmetric_basis, symmetric_coords, HermiteData,
    SymmetricBasisElement,
};
pub use multipoly::MultiPoly;
pub use poly::UniPoly;
pub use roots::{pi_product, RootMultiset, RootPoint, SubsetSelection};
pub use scalar::{Scalar, ScalarMatrix, Sign};
pub use subresultants::{
    remainder_sequence, sres_det, sres_prs, SresSequence, SylvesterHabichtMatrix,
};
