//! Cartan spatial spinors: the ξ (pseudo-vector) and η (proper-vector) maps,
//! their derivative equations, and their form in curvilinear charts over
//! doubled domains.

pub mod charts;
pub mod derivatives;
pub mod field;
pub mod maps;
pub mod vectors;

pub use charts::{chart_to_cartesian, curvilinear_ode_residual, spinor_in_chart, Chart, Domain, DoubledPoint};
pub use derivatives::{cauchy_riemann_residual, dir_deriv_eta, dir_deriv_xi};
pub use maps::{
    eta_auto, eta_from_vector, reconstruct_pseudovector, reconstruct_vector, transmute, xi_from_pseudovector, HalfSpace,
};
pub use vectors::{Direction2, Model, ProperVector3, PseudoVector3, Sheet, SpatialSpinor};
