pub mod error;
pub mod exact;
pub mod hashimoto;
pub mod pencil;
pub mod poly;
pub mod rep;
pub mod report;
pub mod sextics;

pub use error::{Error, ParseError, Result};
pub use exact::{Cyclotomic, Rational};
pub use poly::{Matrix, PolyMatrix, Polynomial};
pub use report::{CheckRecord, Report, Status};
