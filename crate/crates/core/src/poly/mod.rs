//! Exact polynomial arithmetic and the closed forms of the descent-statistic
//! identities: single-variable polynomials in q, subset-indexed multivariate
//! polynomials, and formula/enumeration pairs.

mod formulas;
mod qpoly;
mod subset;

pub use formulas::{
    a_poly, binomial, catalan, comaj_poly, des_count_formula, des_histogram, descent_set_poly,
    double213_claim, double213_enumerated, exact_descent_count, fibonacci_des_counts,
    fibonacci_maj, joint_des_maj, limit_hd_coefficient, limit_joint_series, maj_poly, q_binomial,
    superset_count, APolyMethod,
};
pub use qpoly::QPoly;
pub use subset::{mask_of, set_of, SubsetPoly};
