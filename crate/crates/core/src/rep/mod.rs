//! Explicit representations of 2.A₅, A₅ and S₅ and their invariant theory.

pub mod character;
pub mod closure;
pub mod klein;
pub mod molien;
pub mod reynolds;
pub mod s5;

pub use character::character_inner_product;
pub use closure::{closure, GroupClosure, CLOSURE_BOUND};
pub use klein::{klein_generators, sym_power, sym_power_matrix, KleinRep};
pub use molien::{molien, MolienSeries};
pub use reynolds::{reynolds, InvariantBasis};
pub use s5::{a5_standard_rep, all_permutations, permutation_matrix, s5_standard_rep};

use crate::error::{Error, Result};
use crate::poly::Matrix;

/// Named generator matrices of a linear representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub label: String,
    pub dim: usize,
    pub generators: Vec<(String, Matrix)>,
}

impl MatrixRep {
    pub fn new(label: &str, generators: Vec<(String, Matrix)>) -> Result<Self> {
        let dim = generators.first().map_or(0, |(_, m)| m.rows());
        for (_, m) in &generators {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
            }
        }
        Ok(MatrixRep { label: label.to_string(), dim, generators })
    }

    pub fn generator(&self, name: &str) -> Option<&Matrix> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.generators.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Generator-wise block-diagonal sum; both must list generators in the same order.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.generators.len() != other.generators.len() {
            return Err(Error::ArityMismatch { expected: self.generators.len(), got: other.generators.len() });
        }
        let gens = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|((n, a), (_, b))| (n.clone(), a.direct_sum(b)))
            .collect();
        MatrixRep::new(&format!("{}+{}", self.label, other.label), gens)
    }

    /// Applies `f` to every generator.
    pub fn map(&self, label: &str, f: impl Fn(&Matrix) -> Matrix) -> Result<Self> {
        MatrixRep::new(label, self.generators.iter().map(|(n, m)| (n.clone(), f(m))).collect())
    }
}

/// Representations reachable by name from the command line.
pub fn named_rep(name: &str) -> Result<MatrixRep> {
    match name {
        "v" => Ok(klein_generators(KleinRep::V)),
        "vprime" => Ok(klein_generators(KleinRep::VPrime)),
        "s2v" => sym_power(&klein_generators(KleinRep::V), 2),
        "u4" => sym_power(&klein_generators(KleinRep::V), 3),
        "w4" => Ok(a5_standard_rep()),
        "w4s5" => Ok(s5_standard_rep()),
        other => Err(Error::UnknownConstant(other.to_string())),
    }
}

pub const NAMED_REPS: [&str; 6] = ["v", "vprime", "s2v", "u4", "w4", "w4s5"];
