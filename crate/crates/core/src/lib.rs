pub mod complex;
pub mod dim2;
pub mod error;
pub mod fixtures;
pub mod hom;
pub mod instance;
pub mod linalg;
pub mod metric;
pub mod phase_space;
pub mod scalar;
pub mod tensor;
pub mod verdict;

pub use error::{Error, Result};
pub use linalg::{Matrix, Solution, Vector};
pub use scalar::{q, Field, GaussianRational, Rational};
pub use tensor::Tensor3;
pub use verdict::{Axiom, Verdict, Violation};
