//! Trigonometric (q-deformed) sector: R-matrix, U_q(gl(m|n)) in the
//! fundamental representation, FRT L-operators, boundary K-matrices,
//! non-local charges, q-Casimirs and the q-twisted Yangian.

pub mod rmatrix;
pub mod uq;
pub mod frt;
pub mod kmatrix;
pub mod charges;
pub mod qtwisted;

pub use rmatrix::{m_matrix, r_minus, r_plus, r_trig, r_trig_at, QParams};
