//! Exact arithmetic: rationals, polynomials in `n`, truncated Laurent series
//! in one and several variables, and combinatorial primitives.

pub mod comb;
pub mod multi;
pub mod poly;
pub mod powser;
pub mod rational;
pub mod series;

pub use comb::{binom_poly, binomial, binomial_i64, factorial, pochhammer, pochhammer_rat};
pub use multi::{
    expand_inverse_difference, expand_inverse_difference_in, InverseDifference, MultiSeries, Region,
};
pub use poly::Poly;
pub use powser::PowerSeries;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use series::LaurentSeries;
