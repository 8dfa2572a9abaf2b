//! The standard 4-dimensional representation W₄ of S₅ on x₁ + ⋯ + x₅ = 0.

use crate::exact::Cyclotomic;
use crate::poly::Matrix;

use super::MatrixRep;

/// Matrix of a permutation of {0..4} in the basis bᵢ = eᵢ − e₄ (i = 0..3).
///
/// Column j is σ(bⱼ) = b_{σ(j)} − b_{σ(4)}, with b₄ = 0.
pub fn permutation_matrix(sigma: [usize; 5]) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for j in 0..4 {
        let mut col = [0i64; 5];
        col[sigma[j]] += 1;
        col[sigma[4]] -= 1;
        for i in 0..4 {
            m.set(i, j, Cyclotomic::from_i64(col[i]));
        }
    }
    m
}

/// All 120 permutations of {0..4} in lexicographic order.
pub fn all_permutations() -> Vec<[usize; 5]> {
    fn extend(prefix: &mut Vec<usize>, out: &mut Vec<[usize; 5]>) {
        if prefix.len() == 5 {
            out.push([prefix[0], prefix[1], prefix[2], prefix[3], prefix[4]]);
            return;
        }
        for k in 0..5 {
            if !prefix.contains(&k) {
                prefix.push(k);
                extend(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::with_capacity(120);
    extend(&mut Vec::new(), &mut out);
    out
}

const FIVE_CYCLE: [usize; 5] = [1, 2, 3, 4, 0];
const TRANSPOSITION: [usize; 5] = [1, 0, 2, 3, 4];
const THREE_CYCLE: [usize; 5] = [1, 2, 0, 3, 4];

/// S₅ generated by (12345) and (12).
pub fn s5_standard_rep() -> MatrixRep {
    MatrixRep::new(
        "W4(S5)",
        vec![
            ("(12345)".into(), permutation_matrix(FIVE_CYCLE)),
            ("(12)".into(), permutation_matrix(TRANSPOSITION)),
        ],
    )
    .expect("4x4 generators")
}

/// A₅ generated by (12345) and (123).
pub fn a5_standard_rep() -> MatrixRep {
    MatrixRep::new(
        "W4",
        vec![
            ("(12345)".into(), permutation_matrix(FIVE_CYCLE)),
            ("(123)".into(), permutation_matrix(THREE_CYCLE)),
        ],
    )
    .expect("4x4 generators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{closure, molien};
    use num_bigint::BigInt;

    #[test]
    fn five_cycle_trace() {
        assert_eq!(permutation_matrix(FIVE_CYCLE).trace(), Cyclotomic::from_i64(-1));
        assert_eq!(permutation_matrix(TRANSPOSITION).trace(), Cyclotomic::from_i64(2));
    }

    #[test]
    fn permutations_enumerated() {
        let all = all_permutations();
        assert_eq!(all.len(), 120);
        assert_eq!(all[0], [0, 1, 2, 3, 4]);
        assert_eq!(all.iter().collect::<std::collections::BTreeSet<_>>().len(), 120);
    }

    #[test]
    fn group_orders() {
        assert_eq!(closure(&s5_standard_rep(), false).unwrap().len(), 120);
        assert_eq!(closure(&a5_standard_rep(), false).unwrap().len(), 60);
    }

    #[test]
    fn quartic_invariants() {
        assert_eq!(molien(&s5_standard_rep(), 4).unwrap().coeffs[4], BigInt::from(2));
        assert_eq!(molien(&a5_standard_rep(), 4).unwrap().coeffs[4], BigInt::from(2));
    }
}
