//! Closed-form predictions and the calculus used to evaluate them.

mod counts;
mod kunneth;
mod poly;
mod predict;
mod series;

pub use counts::{binom, f_closed, f_recur};
pub use kunneth::{disjoint_union, join_power, kunneth_join, kunneth_smash, multiple, shift, wedge};
pub use poly::{abc_polynomials, abc_sequence, BivariatePoly};
pub use predict::{
    k2_join_complex_a, predict_bipartite, predict_f_skeleton, predict_k2_join, predict_multipartite, predict_pn_lex,
    predict_star, predict_susp_f0_lex, Prediction, Term,
};
pub use series::{genfun_check, printed_closed_form, solve_functional_equations, CoefficientMismatch, GenfunReport, SeriesTruncation};
