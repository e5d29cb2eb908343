//! Named extremal constructions: valid multisets whose sumsets attain the
//! conjectured floors.

use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::multiset::Multiset;

/// The two-point extremal multiset in Z_p^2: (1,0) with multiplicity p-1 and
/// (0,1) with multiplicity k+1. Valid, |A| = p+k, and its sumset has exactly
/// (k+2)p elements.
pub fn extremal_2d(p: u64, k: u64) -> Result<Multiset> {
    let g = GroupParams::new(p, 2)?;
    if g.p() == 2 {
        return Err(Error::EvenPrimeUnsupported);
    }
    if k > p - 3 {
        return Err(Error::KOutOfRange { k, max: p - 3 });
    }
    let e0 = g.element(&[1, 0])?.index();
    let e1 = g.element(&[0, 1])?.index();
    Ok(Multiset::from_pairs(
        g,
        &[(e0, (p - 1) as u32), (e1, (k + 1) as u32)],
    ))
}

/// The layered construction over Z_p^m: p-1 copies of x_1 plus, for each
/// 2 <= j <= m, the p elements { x_j + a*x_1 : 0 <= a < p } with the standard
/// basis as the x_i. Valid of maximal size |A| = mp-1; its sumset fills the
/// whole group.
pub fn layered(p: u64, m: u32) -> Result<Multiset> {
    let g = GroupParams::new(p, m)?;
    if g.p() == 2 {
        return Err(Error::EvenPrimeUnsupported);
    }
    let mut a = Multiset::empty(g.clone());
    let x1 = g.pows()[0]; // index of the first standard basis vector
    a.insert(x1, g.p() - 1);
    for j in 1..m as usize {
        let xj = g.pows()[j];
        for c in 0..g.p() {
            a.insert(g.add_idx(xj, g.scalar_mul_idx(c, x1)), 1);
        }
    }
    Ok(a)
}

/// The layered construction with one copy of x_1 removed, so x_1 has
/// multiplicity p-2. Valid, |A| = mp-2, and its sumset misses exactly the
/// element -x_1, so it has p^m - 1 elements.
pub fn layered_minus_one(p: u64, m: u32) -> Result<Multiset> {
    let mut a = layered(p, m)?;
    let x1 = a.group().pows()[0];
    a.remove(x1, 1);
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::check_validity;

    #[test]
    fn extremal_2d_examples() {
        let a = extremal_2d(5, 1).unwrap();
        assert_eq!(a.to_literal(), "p=5 m=2 : (1,0)*4 (0,1)*2");
        assert_eq!(a.total(), 6);

        let a = extremal_2d(5, 0).unwrap();
        assert_eq!(a.total(), 5);

        let a = extremal_2d(7, 4).unwrap();
        assert_eq!(a.total(), 11);
        assert!(check_validity(&a).unwrap().valid);

        assert!(matches!(
            extremal_2d(5, 3),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn layered_examples() {
        let b = layered(3, 2).unwrap();
        assert_eq!(b.to_literal(), "p=3 m=2 : (1,0)*2 (0,1) (1,1) (2,1)");
        assert_eq!(b.total(), 5);

        assert_eq!(layered(3, 3).unwrap().total(), 8);

        let b = layered(5, 2).unwrap();
        assert_eq!(b.total(), 9);
        let g = b.group().clone();
        let line = crate::group::line_through(&g, 1).unwrap();
        assert_eq!(b.subgroup_count(&line), 4);

        // m = 1 degenerates to p-1 copies of the generator
        let b1 = layered(7, 1).unwrap();
        assert_eq!(b1.total(), 6);
        assert_eq!(b1.support_count(), 1);
    }

    #[test]
    fn layered_minus_one_examples() {
        let b = layered_minus_one(3, 2).unwrap();
        assert_eq!(b.to_literal(), "p=3 m=2 : (1,0) (0,1) (1,1) (2,1)");
        assert_eq!(b.total(), 4);
        assert_eq!(layered_minus_one(3, 3).unwrap().total(), 7);
        assert_eq!(layered_minus_one(5, 2).unwrap().total(), 8);
    }

    #[test]
    fn constructions_are_valid_across_small_parameters() {
        for p in [3u64, 5, 7, 11] {
            for k in 0..=(p - 3).min(4) {
                assert!(check_validity(&extremal_2d(p, k).unwrap()).unwrap().valid);
            }
            for m in 1..=3u32 {
                if (p as u128).pow(m) <= crate::group::DENSE_SET_CAP as u128 {
                    assert!(check_validity(&layered(p, m).unwrap()).unwrap().valid);
                    assert!(
                        check_validity(&layered_minus_one(p, m).unwrap())
                            .unwrap()
                            .valid
                    );
                }
            }
        }
    }

    #[test]
    fn p2_rejected() {
        assert!(matches!(layered(2, 2), Err(Error::EvenPrimeUnsupported)));
        assert!(matches!(
            layered_minus_one(2, 3),
            Err(Error::EvenPrimeUnsupported)
        ));
        assert!(matches!(
            extremal_2d(2, 0),
            Err(Error::EvenPrimeUnsupported)
        ));
    }
}
