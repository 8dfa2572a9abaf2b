//! Sparse polynomials, exact linear algebra, binary forms and prime-field scans.

pub mod binary;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod modp;
pub mod monomial;
pub mod polynomial;
pub mod scan;

pub use binary::{binary_gcd, binary_squarefree_part, distinct_root_count, UniPoly};
pub use linalg::{kernel, Matrix};
pub use matrix::{det, hessian, quadric_matrix, PolyMatrix};
pub use modp::{reduce_mod_p, ModPoly, PrimeFieldConfig, DEFAULT_PRIMES};
pub use monomial::{Monomial, MAX_VARS};
pub use polynomial::{poly_arith, proportional, PolyOp, Polynomial};
pub use scan::{scan_pencil, scan_singular, scan_singular_labeled, PencilParam, PencilScan, ScanResult};
