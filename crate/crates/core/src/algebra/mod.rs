//! Complex matrices, Pauli/Dirac bases and the spinor parametrization of SL(2,C).

pub mod dirac;
pub mod matrix;
pub mod minkowski;
pub mod spinor;

pub use dirac::{dirac_basis, majorana_change, to_majorana, BasisTag, DiracBasis};
pub use matrix::{pauli, Matrix2, Matrix4, SquareMatrix, C64, I, ONE, ZERO};
pub use minkowski::{LorentzMatrix, METRIC};
pub use spinor::{b_matrix, bispinor, bispinor_pair, lorentz_from_spinor, spinor_compose, SpinorParam};
