//! Sylow subgroups, the subgroup generated by all Sylow subgroups, and the
//! Frattini argument as a checkable statement.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_power_of, is_prime};
use crate::error::{Error, Result};
use crate::group::{ElemSet, FiniteGroup};
use crate::lattice::normal_closure_set;

fn p_part(n: usize, p: u64) -> usize {
    factorize(n as u64)
        .into_iter()
        .find(|&(q, _)| q == p)
        .map_or(1, |(q, e)| q.pow(e) as usize)
}

/// One Sylow `p`-subgroup, as an index set.
///
/// Grows a `p`-subgroup `P` one step at a time: the first element of
/// `N(P) \ P` whose coset has `p`-power order extends `P` to a larger
/// `p`-group, and such an element exists until `P` is Sylow.
pub fn sylow_set(g: &FiniteGroup, p: u64) -> ElemSet {
    let target = p_part(g.order(), p);
    let mut set = g.trivial_set();
    let mut gens: Vec<usize> = Vec::new();
    while set.count_ones(..) < target {
        let normalizer = g.normalizer_set(&set);
        let step = normalizer
            .ones()
            .filter(|&x| !set.contains(x))
            .find(|&x| {
                let mut y = x;
                let mut m = 1u64;
                while !set.contains(y) {
                    y = g.mul(y, x);
                    m += 1;
                }
                is_power_of(m, p)
            })
            .expect("a non-Sylow p-subgroup has a p-element in N(P) \\ P");
        set = g.extend_closure(&set, &gens, &[step]);
        gens.push(step);
    }
    set
}

pub fn sylow(g: &FiniteGroup, p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(g.subgroup_from_set(&sylow_set(g, p)))
}

/// The subgroup generated by all Sylow `ell`-subgroups, which is the normal
/// closure of any one of them.
pub fn plus_subgroup_set(g: &FiniteGroup, ell: u64) -> ElemSet {
    let p = sylow_set(g, ell);
    let seed: Vec<usize> = g.greedy_generators(&p);
    normal_closure_set(g, &seed)
}

pub fn plus_subgroup(g: &FiniteGroup, ell: u64) -> Result<FiniteGroup> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    Ok(g.subgroup_from_set(&plus_subgroup_set(g, ell)))
}

/// Orders witnessing `H = I * N_H(P)` for `P` a Sylow subgroup of `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrattiniWitness {
    pub holds: bool,
    pub p: u64,
    pub sylow_order: usize,
    pub normalizer_order: usize,
    pub intersection_order: usize,
    pub product_order: usize,
    pub group_order: usize,
}

pub fn frattini_check(h: &FiniteGroup, i: &FiniteGroup, p: u64) -> Result<FrattiniWitness> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let i_set = h.require_normal(i)?;
    let p_in_i = sylow_set(i, p);
    let mut p_set = h.empty_set();
    for x in p_in_i.ones() {
        p_set.insert(h.index_of(i.element(x)).expect("I is a subgroup of H"));
    }
    let normalizer = h.normalizer_set(&p_set);
    let product = h.product_set(&i_set, &normalizer);
    let mut meet = i_set.clone();
    meet.intersect_with(&normalizer);
    let product_order = product.count_ones(..);
    Ok(FrattiniWitness {
        holds: product_order == h.order(),
        p,
        sylow_order: p_set.count_ones(..),
        normalizer_order: normalizer.count_ones(..),
        intersection_order: meet.count_ones(..),
        product_order,
        group_order: h.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::normal_subgroups;
    use crate::perm::Perm;
    use crate::standard::{alternating, cyclic, dihedral, symmetric};

    #[test]
    fn sylow_orders() {
        let s4 = symmetric(4);
        assert_eq!(sylow(&s4, 2).unwrap().order(), 8);
        assert_eq!(sylow(&s4, 3).unwrap().order(), 3);
        assert_eq!(sylow(&s4, 5).unwrap().order(), 1);
        assert_eq!(sylow(&alternating(5), 2).unwrap().order(), 4);
        assert_eq!(sylow(&dihedral(6), 2).unwrap().order(), 4);
        assert!(sylow(&s4, 4).is_err());
    }

    #[test]
    fn sylow_is_deterministic() {
        let s4 = symmetric(4);
        assert_eq!(sylow(&s4, 2).unwrap(), sylow(&s4, 2).unwrap());
    }

    #[test]
    fn plus_subgroup_examples() {
        assert_eq!(plus_subgroup(&cyclic(6), 2).unwrap().order(), 2);
        // the 2-Sylows of S4 contain 4-cycles, which are odd
        let s4 = symmetric(4);
        let p = sylow(&s4, 2).unwrap();
        assert!(p.elements().iter().any(|x| {
            let i = s4.index_of(x).unwrap();
            s4.element_order(i) == 4
        }));
        assert_eq!(plus_subgroup(&s4, 2).unwrap().order(), 24);
        assert_eq!(plus_subgroup(&symmetric(3), 3).unwrap().order(), 3);
    }

    #[test]
    fn frattini_examples() {
        let s4 = symmetric(4);
        let a4 = s4.subgroup(alternating(4).generators()).unwrap();
        let w = frattini_check(&s4, &a4, 2).unwrap();
        assert!(w.holds);
        assert_eq!(w.sylow_order, 4);
        assert_eq!(w.normalizer_order, 24);

        let triv = FiniteGroup::trivial(4);
        assert!(frattini_check(&s4, &triv, 2).unwrap().holds);
        assert!(frattini_check(&s4, &s4, 3).unwrap().holds);
    }

    #[test]
    fn frattini_on_every_normal_subgroup() {
        for g in [symmetric(4), dihedral(6), alternating(4), symmetric(3)] {
            for n in normal_subgroups(&g) {
                for p in [2, 3, 5] {
                    assert!(frattini_check(&g, &n, p).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn frattini_rejects_non_normal() {
        let s3 = symmetric(3);
        let t = s3
            .subgroup(&[Perm::from_one_based(3, &[2, 1, 3]).unwrap()])
            .unwrap();
        assert!(matches!(
            frattini_check(&s3, &t, 2),
            Err(Error::NotNormal { .. })
        ));
    }
}
