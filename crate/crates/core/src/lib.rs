//! Exact tools for two-dimensional algebras given by a 2×4 matrix of
//! structure constants (MSC): products, the GL(2) action, unit detection,
//! canonical catalogs and isomorphism searches over ℚ and GF(p).

pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod exact_fields;
pub mod isomorphism;
pub mod linalg;
pub mod units;

pub use algebra::{kron, multiply, transform, Mat2, Msc, Vec2, Vec4};
pub use error::{Error, Result};
pub use exact_fields::{Field, Scalar};
pub use units::{
    find_left_units, find_right_units, find_two_sided_unit, find_units, Side, UnitKind, UnitSet,
};
