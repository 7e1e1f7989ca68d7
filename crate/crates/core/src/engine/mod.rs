//! The matrix-resolvent side: the matrix `M(λ, n; l)`, the 1-point and
//! k-point functions, count extraction and the closed formulas.

pub mod checks;
pub mod closed;
pub mod count;
pub mod kpoint;
pub mod onepoint;
pub mod resolvent;

pub use closed::{
    f_func, genus_closed, one_point_explicit, top_genus, two_point_explicit, zagier_t_formula,
    zagier_y_coefficients,
};
pub use count::{count_poly, count_poly_with, max_genus, n_exponent, CountResult};
pub use kpoint::{k_point, k_point_in, kpoint_coefficient};
pub use onepoint::{one_point, one_point_curve};
pub use resolvent::{m_matrix, y_entry, y_entry_curve, ResolventMatrix, YSeries};
