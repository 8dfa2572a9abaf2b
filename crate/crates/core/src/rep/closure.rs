use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::poly::Matrix;

use super::MatrixRep;

pub const CLOSURE_BOUND: usize = 10_000;

/// All elements of the group generated by a representation's matrices.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    pub projective: bool,
    /// Elements in breadth-first order; index 0 is the identity.
    pub elements: Vec<Matrix>,
    /// Generator word (indices into the representation's generator list) reaching each element.
    pub words: Vec<Vec<usize>>,
    /// `action[i][k]` = index of `elements[i] · generator[k]`.
    pub action: Vec<Vec<usize>>,
}

impl GroupClosure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        let key = if self.projective { m.projective_normalize() } else { m.clone() };
        self.elements.iter().position(|e| *e == key)
    }
}

/// Breadth-first closure under right multiplication by the generators.
///
/// In projective mode elements are scaled so their first nonzero entry is 1
/// before deduplication.
pub fn closure(rep: &MatrixRep, projective: bool) -> Result<GroupClosure> {
    closure_bounded(rep, projective, CLOSURE_BOUND)
}

pub fn closure_bounded(rep: &MatrixRep, projective: bool, bound: usize) -> Result<GroupClosure> {
    let gens = rep.matrices();
    let norm = |m: Matrix| if projective { m.projective_normalize() } else { m };
    let id = Matrix::identity(rep.dim);
    let mut elements = vec![id.clone()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut action: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Matrix, usize> = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let h = norm(&elements[i] * g);
            let j = match index.get(&h) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j >= bound {
                        return Err(Error::ClosureTooLarge(bound));
                    }
                    let mut w = words[i].clone();
                    w.push(k);
                    index.insert(h.clone(), j);
                    elements.push(h);
                    words.push(w);
                    action.push(Vec::new());
                    queue.push_back(j);
                    j
                }
            };
            action[i].push(j);
        }
    }
    Ok(GroupClosure { projective, elements, words, action })
}

/// Evaluates a generator word in a representation.
pub fn eval_word(rep: &MatrixRep, word: &[usize]) -> Matrix {
    let mut acc = Matrix::identity(rep.dim);
    for &k in word {
        acc = &acc * &rep.generators[k].1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{klein_generators, sym_power, KleinRep};

    #[test]
    fn binary_icosahedral_order() {
        let v = klein_generators(KleinRep::V);
        let g = closure(&v, false).unwrap();
        assert_eq!(g.len(), 120);
        for (i, w) in g.words.iter().enumerate() {
            assert_eq!(eval_word(&v, w), g.elements[i]);
        }
        assert!(g.action.iter().all(|row| row.len() == 3));
    }

    #[test]
    fn projective_images() {
        let v = klein_generators(KleinRep::V);
        assert_eq!(closure(&sym_power(&v, 2).unwrap(), true).unwrap().len(), 60);
        assert_eq!(closure(&sym_power(&v, 3).unwrap(), true).unwrap().len(), 60);
        assert_eq!(closure(&v, true).unwrap().len(), 60);
    }

    #[test]
    fn trivial_and_runaway() {
        let rep = MatrixRep::new("I", vec![("e".into(), Matrix::identity(3))]).unwrap();
        assert_eq!(closure(&rep, false).unwrap().len(), 1);
        let two = MatrixRep::new("2", vec![("g".into(), Matrix::from_ints(&[&[2]]))]).unwrap();
        assert_eq!(closure_bounded(&two, false, 50).unwrap_err(), Error::ClosureTooLarge(50));
    }
}
