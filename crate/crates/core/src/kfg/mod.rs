//! Klein-Fock-Gordon and Schrödinger solutions in parabolic cylindrical
//! coordinates: separation, series factors, parity classes, the separation
//! operator Â, orthogonality and selection rules on vector and spinor domains.

pub mod coords;
pub mod operator;
pub mod quadrature;
pub mod separation;
pub mod series;
pub mod wave;

pub use coords::{from_cartesian, jacobian, local_preimage, to_cartesian};
pub use operator::{a_operator_apply, a_operator_cartesian, EigenResidual};
pub use quadrature::{
    gauss_legendre, matrix_elements, orthogonality_integrals, ClassGrid, Coordinate, EntryFlag, MatrixElementTable,
    OrthogonalityReport, QuadratureSpec, Space,
};
pub use separation::{schrodinger_separate, separate, CanonicalPair, Equation, SeparationParams};
pub use series::{series_even, series_odd, OdeResidual, Parity, SeriesSolution, DEFAULT_TERMS};
pub use wave::{
    boundary_behavior_check, parity_eigenvalue, wavefunction_eval, BoundaryReport, ParityClass, WaveFunction,
};
