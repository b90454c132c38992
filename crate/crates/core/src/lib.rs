//! Affine Hilbert functions of weight-determined sets in uniform grids.
//!
//! A uniform grid is `[0,k_1-1] x ... x [0,k_n-1]` with every `k_i >= 2`.
//! A weight-determined set is a union of layers (points of fixed coordinate
//! sum) and is described by a [`WeightSet`]. The crate computes
//!
//! * the affine Hilbert function `H_d(E)` in closed form and as an exact rank,
//! * the operator `L_{N,d}`, its fixpoint and the degree-`d` Z*-closure,
//! * lex standard monomials and order-shattered sets of arbitrary point sets,
//!
//! and ships the sweeps in [`verify`] that check these against each other.
//!
//! All arithmetic is exact. Matrices are generic over [`Scalar`]; the aliases
//! below fix the two scalar types used throughout.
//!
//! ```
//! use gridhilbert::{hilbert_closed, hilbert_rank_oracle, UniformGrid, WeightSet};
//!
//! let grid: UniformGrid = "3,3".parse().unwrap();
//! let e: WeightSet = "0,3-4".parse().unwrap();
//! assert_eq!(hilbert_closed(&grid, 2, &e).unwrap(), 4u32.into());
//! assert_eq!(hilbert_rank_oracle(&grid, 2, &e).unwrap(), 4);
//! ```

pub mod closure;
pub mod error;
pub mod grid;
pub mod hilbert;
pub mod linalg;
pub mod scalar;
pub mod shattering;
pub mod verify;

pub use closure::{
    closure_report, l_bar, l_bar_with_iterations, l_step, t_set, z_closure_points, zstar_closure, ClosureOracle,
    ClosureReport,
};
pub use error::{Error, Result};
pub use grid::{parse_points, GridPoint, LayerSizeTable, UniformGrid, WeightSet};
pub use hilbert::{
    be_enumeration, hilbert_closed, hilbert_cube_closed, hilbert_from_sizes, hilbert_layer, hilbert_profile,
    hilbert_rank_oracle, is_interval_compatible, rank_block, BeEnumeration, HilbertProfile,
};
pub use linalg::{LabeledMatrix, Matrix, RankResult};
pub use scalar::Scalar;
pub use shattering::{b_star, ord_str, order_shatters, standard_monomials, tau, MonomialDownset};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Labeled matrix over the rationals.
pub type ExactMatrix = LabeledMatrix<Rational>;
/// Labeled matrix over the integers; evaluation matrices are integral.
pub type IntMatrix = LabeledMatrix<Integer>;
