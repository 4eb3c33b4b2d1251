//! Small finite fields and the subspace linear algebra behind Grassmann and
//! dual polar graphs.

mod field;
mod gaussian;
mod quadratic;
mod subspace;

pub use field::{make_field, FieldSpec, SUPPORTED_ORDERS};
pub use gaussian::{eq5_product, eq5_sum, gaussian_binomial, shell_size};
pub use quadratic::{is_totally_isotropic, QuadraticForm};
pub use subspace::{
    enumerate_subspaces, enumerate_subspaces_capped, intersection_dim, rref, FFMatrix, Subspace,
    DEFAULT_CAP,
};
