//! Exact verification of Hopf-cyclic constructions on finite-dimensional Hopf
//! algebras over the rationals.

pub mod cyclic;
pub mod error;
pub mod homology;
pub mod hopf;
pub mod linalg;
pub mod rep;
pub mod trace;

pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use linalg::{Mat, Scalar, SparseMat, SubspaceBasis, TensorShape};
pub use rep::{LeftModule, ModComod, ModuleAlgebra, ModuleCoalgebra, RightComodule};
