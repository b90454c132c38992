//! Exact dense linear algebra.

pub mod builders;
pub mod matrix;
pub mod rank;
pub mod span;

pub use builders::{diag_matrix, eval_matrix, eval_matrix_on, falling_factorial_value, up_matrix};
pub use matrix::{LabeledMatrix, Matrix};
pub use rank::{bareiss, pivot_columns_in_order, pivot_labels_in_order, rank, RankResult};
pub use span::SpanTracker;
