pub mod caseengine;
pub mod data;
pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod matrixlie;
pub mod model;
pub mod pattern;
pub mod pipeline;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod weyl;

pub use error::{Error, Result};
pub use exactfield::{FieldElem, Rational};
pub use roots::{AngleClass, CartanType, Family, RootSystem, Vect};
pub use scalar::{Field, Scalar};
pub use matrixlie::{MatQ, QuatRat};
