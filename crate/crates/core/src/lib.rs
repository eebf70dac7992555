//! Z₂-graded linear algebra engine and verification suite for boundary
//! symmetries of rational and trigonometric integrable super spin chains.

pub mod boundary;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod qdeformed;
pub mod report;
pub mod sample;
pub mod series;
pub mod twisted;
pub mod yangian;
pub mod operator;

pub use error::CoreError;
pub use grading::{Grading, Scheme};
pub use operator::GradedOperator;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
/// Dense complex matrix.
pub type CMat = nalgebra::DMatrix<num_complex::Complex64>;
