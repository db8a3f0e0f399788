//! Exact rational linear algebra and geometry at desk scale: matrix
//! products, determinant-based areas and volumes, small-matrix eigen
//! analysis, an investment-redistribution model, 2D/3D affine transforms,
//! and a scene format rendered to standalone SVG.

pub mod affine;
pub mod eigen;
pub mod error;
pub mod invest;
pub mod matrix;
pub mod measure;
pub mod scalar;
pub mod scene;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;
