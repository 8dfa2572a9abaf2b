//! Exact scalars: rationals and the cyclotomic field Q(ζ₆₀).

pub mod complex;
pub mod cyclotomic;
pub mod rational;

pub use complex::ComplexApprox;
pub use cyclotomic::{
    cyc_arith, eps, epsilon, golden, imag_unit, named_constant, sqrt3, sqrt5, ArithOp, Cyclotomic,
};
pub use rational::{parse_rational, rat, rat_int, rational_to_string, Rational};
