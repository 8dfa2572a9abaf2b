use std::cmp::Ordering;

pub const MAX_VARS: usize = 8;

/// Exponent vector. Slots past the owning polynomial's `nvars` stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = [0; MAX_VARS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exps(&self, nvars: usize) -> &[u16] {
        &self.0[..nvars]
    }

    pub fn mul(&self, o: &Self) -> Self {
        Monomial(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.0.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// All exponent vectors of total degree `d` in `nvars` variables, grevlex descending.
    pub fn all_of_degree(nvars: usize, d: u16) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u16; MAX_VARS];
        fn rec(i: usize, nvars: usize, left: u16, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur[i] = left;
                out.push(Monomial(*cur));
                cur[i] = 0;
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, nvars, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, nvars, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order with x₀ > x₁ > ….
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            for i in (0..MAX_VARS).rev() {
                if self.0[i] != o.0[i] {
                    return o.0[i].cmp(&self.0[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", &self.0[..self.support_len()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_degree_two() {
        let ms = Monomial::all_of_degree(3, 2);
        let got: Vec<Vec<u16>> = ms.iter().map(|m| m.exps(3).to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2]]
        );
    }

    #[test]
    fn counts() {
        assert_eq!(Monomial::all_of_degree(4, 4).len(), 35);
        assert_eq!(Monomial::all_of_degree(2, 12).len(), 13);
        assert_eq!(Monomial::all_of_degree(4, 2).len(), 10);
    }
}
