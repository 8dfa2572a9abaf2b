use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Rational};

use super::closure::closure;
use super::MatrixRep;

/// ⟨χ_A, χ_B⟩ = (1/|G|) Σ_g χ_A(g)·χ_B(g⁻¹).
///
/// Both representations are read as images of the same abstract group through
/// their generator lists. The group is enumerated once as the closure of the
/// block-diagonal sum, so elements of A and B are matched word for word; if
/// that joint closure is larger than either factor the generator lists do not
/// define the same group and the call fails.
pub fn character_inner_product(a: &MatrixRep, b: &MatrixRep) -> Result<Rational> {
    let joint = a.direct_sum(b)?;
    let g = closure(&joint, false)?;
    let na = closure(a, false)?.len();
    let nb = closure(b, false)?.len();
    if g.len() > na.max(nb) {
        return Err(Error::ClosureSizeMismatch(g.len(), na.max(nb)));
    }
    let mut total = Cyclotomic::zero();
    for m in &g.elements {
        let mut ta = Cyclotomic::zero();
        let mut tb = Cyclotomic::zero();
        for i in 0..a.dim {
            ta += m.get(i, i);
        }
        for i in a.dim..a.dim + b.dim {
            tb += m.get(i, i);
        }
        // Elements have finite order, so tr(g⁻¹) is the complex conjugate of tr(g).
        total += ta * tb.conj();
    }
    let avg = total * Cyclotomic::from_frac(1, g.len() as i64);
    avg.as_rational().ok_or_else(|| Error::IdentityFailed("character inner product is not rational".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::rep::{klein_generators, sym_power, KleinRep};

    #[test]
    fn v_is_irreducible() {
        let v = klein_generators(KleinRep::V);
        assert_eq!(character_inner_product(&v, &v).unwrap(), rat_int(1));
    }

    #[test]
    fn v_and_vprime_are_distinct() {
        let v = klein_generators(KleinRep::V);
        let vp = klein_generators(KleinRep::VPrime);
        assert_eq!(character_inner_product(&v, &vp).unwrap(), rat_int(0));
    }

    #[test]
    fn sym_powers() {
        let v = klein_generators(KleinRep::V);
        let vp = klein_generators(KleinRep::VPrime);
        let s3v = sym_power(&v, 3).unwrap();
        let s3vp = sym_power(&vp, 3).unwrap();
        assert_eq!(character_inner_product(&s3v, &s3vp).unwrap(), rat_int(1));
        let s6v = sym_power(&v, 6).unwrap();
        assert_eq!(character_inner_product(&s6v, &s6v).unwrap(), rat_int(2));
    }
}
