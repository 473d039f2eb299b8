use std::sync::Arc;

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::lattice::quotient_by_set;

use super::HomFamily;

/// A nontrivial common quotient `A` of two images with `f_i . rho_i = f_j . rho_j`.
#[derive(Clone, Debug)]
pub struct GoursatWitness {
    pub quotient: Arc<FiniteGroup>,
    pub f_i: GroupHom,
    pub f_j: GroupHom,
    /// The identity `f_i . rho_i = f_j . rho_j` checked on every domain element.
    pub verified: bool,
}

/// Obstruction to independence of the pair `(i, j)`, or `None` when the pair
/// is independent.
///
/// With `rho_i`, `rho_j` made surjective, `A = G_i / rho_i(ker rho_j)`; the map
/// `f_j` sends `rho_j(x)` to the class of `rho_i(x)`, which is well defined
/// because `rho_j(x) = rho_j(y)` puts `x^-1 y` in `ker rho_j`.
pub fn goursat_witness(family: &HomFamily, i: usize, j: usize) -> Result<Option<GoursatWitness>> {
    let rho_i = family.homs()[i].corestrict();
    let rho_j = family.homs()[j].corestrict();
    let domain = family.domain();

    let mut common = rho_i.kernel_set();
    common.intersect_with(&rho_j.kernel_set());
    let pair_order = domain.order() / common.count_ones(..);
    if pair_order == rho_i.codomain().order() * rho_j.codomain().order() {
        return Ok(None);
    }

    let g_i = rho_i.codomain().clone();
    let g_j = rho_j.codomain().clone();
    let k = rho_i.image_of_set(&rho_j.kernel_set());
    let q = quotient_by_set(&g_i, &k);
    let f_i = q.projection;

    // first preimage of each element of G_j
    let mut preimage = vec![usize::MAX; g_j.order()];
    for x in 0..domain.order() {
        let y = rho_j.apply(x);
        if preimage[y] == usize::MAX {
            preimage[y] = x;
        }
    }
    let images: Vec<usize> = g_j
        .generator_indices()
        .into_iter()
        .map(|h| f_i.apply(rho_i.apply(preimage[h])))
        .collect();
    let f_j = GroupHom::from_indices(g_j, q.group.clone(), images)?;

    let verified =
        (0..domain.order()).all(|x| f_i.apply(rho_i.apply(x)) == f_j.apply(rho_j.apply(x)));
    Ok(Some(GoursatWitness {
        quotient: q.group,
        f_i,
        f_j,
        verified,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::tests::{crt_family, diagonal_c2_family, identity_sign_family};

    #[test]
    fn diagonal_pair() {
        let w = goursat_witness(&diagonal_c2_family(), 0, 1)
            .unwrap()
            .unwrap();
        assert_eq!(w.quotient.order(), 2);
        assert!(w.verified);
        assert!(w.f_i.is_surjective() && w.f_j.is_surjective());
    }

    #[test]
    fn identity_and_sign() {
        let f = identity_sign_family();
        let w = goursat_witness(&f, 0, 1).unwrap().unwrap();
        assert_eq!(w.quotient.order(), 2);
        assert!(w.verified);
        // f_1 on S3 is the sign map, f_2 on C2 is an isomorphism
        assert_eq!(w.f_i.kernel().order(), 3);
        assert_eq!(w.f_j.kernel().order(), 1);
        let w = goursat_witness(&f, 1, 0).unwrap().unwrap();
        assert_eq!(w.f_j.kernel().order(), 3);
    }

    #[test]
    fn independent_pair() {
        assert!(goursat_witness(&crt_family(), 0, 1).unwrap().is_none());
    }
}
