//! Small named groups used by the corpus, the tests and the demo.

use crate::error::Result;
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::Perm;

fn perm(images: Vec<u32>) -> Perm {
    Perm::from_images(images).expect("standard generators are permutations")
}

fn gen(degree: usize, gens: Vec<Perm>) -> FiniteGroup {
    FiniteGroup::generate(degree, gens, DEFAULT_ORDER_CAP).expect("standard groups fit the cap")
}

fn cycle(n: usize) -> Perm {
    perm((0..n as u32).map(|i| (i + 1) % n as u32).collect())
}

/// Cyclic group of order `n`, generated by an `n`-cycle (trivial on 1 point for `n = 1`).
pub fn cyclic(n: usize) -> FiniteGroup {
    try_cyclic(n).expect("standard groups fit the cap")
}

pub fn try_cyclic(n: usize) -> Result<FiniteGroup> {
    if n <= 1 {
        return Ok(FiniteGroup::trivial(1));
    }
    FiniteGroup::generate(n, vec![cycle(n)], DEFAULT_ORDER_CAP)
}

/// Dihedral group of order `2n` acting on an `n`-gon (`n >= 3`).
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3, "dihedral groups need at least 3 vertices");
    let reflection = perm((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    gen(n, vec![cycle(n), reflection])
}

/// Symmetric group, generated by the transposition `(1 2)` and an `n`-cycle.
pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return FiniteGroup::trivial(1);
    }
    let mut t: Vec<u32> = (0..n as u32).collect();
    t.swap(0, 1);
    gen(n, vec![perm(t), cycle(n)])
}

/// Alternating group, generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize) -> FiniteGroup {
    if n <= 2 {
        return FiniteGroup::trivial(n.max(1));
    }
    let gens = (2..n)
        .map(|k| {
            let mut g: Vec<u32> = (0..n as u32).collect();
            g[0] = 1;
            g[1] = k as u32;
            g[k] = 0;
            perm(g)
        })
        .collect();
    gen(n, gens)
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion() -> FiniteGroup {
    // elements 1,i,j,k,-1,-i,-j,-k as points 0..8; right multiplication by i and j
    let i = perm(vec![1, 4, 7, 2, 5, 0, 3, 6]);
    let j = perm(vec![2, 3, 4, 5, 6, 7, 0, 1]);
    gen(8, vec![i, j])
}

/// Direct product on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let ia = Perm::identity(a.degree());
    let ib = Perm::identity(b.degree());
    let gens = a
        .generators()
        .iter()
        .map(|g| Perm::concat([g, &ib]))
        .chain(b.generators().iter().map(|h| Perm::concat([&ia, h])))
        .collect();
    gen(a.degree() + b.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(cyclic(12).order(), 12);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(7).order(), 14);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(direct_product(&cyclic(2), &cyclic(2)).order(), 4);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = quaternion();
        let involutions = (1..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }
}
