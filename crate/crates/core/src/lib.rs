//! Exact-arithmetic computations with finite quiver algebras: their module
//! categories, the category of maps between modules and its triangular
//! matrix model, translates and almost split sequences, recollements from
//! full subcategories, and subcategory approximations.

pub mod approx;
pub mod bimodule;
pub mod detrand;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod linalg;
pub mod maps;
pub mod module;
pub mod quiver;
pub mod recollement;
pub mod samples;
pub mod selftest;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::Matrix;
pub use quiver::{PathAlgebra, Quiver, Relation, RelationSet};
