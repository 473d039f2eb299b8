//! Verified homomorphisms between enumerated groups.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, HomWitness, Result};
use crate::group::{ElemSet, FiniteGroup};
use crate::perm::Perm;

/// A homomorphism given on generators, with the full element map materialized.
#[derive(Clone)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    generator_images: Vec<usize>,
    element_map: Arc<[u32]>,
}

/// Extends a generator assignment along the right Cayley graph of the domain.
///
/// This is the closure of the graph subgroup generated by the pairs
/// `(g_k, h_k)` inside `domain x codomain`: each domain element is visited
/// once and every outgoing edge is checked, so the assignment is a
/// homomorphism exactly when no element receives two different images.
fn extend_on_generators(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    images: &[usize],
) -> std::result::Result<Vec<u32>, (usize, usize, usize)> {
    let gens = domain.generator_indices();
    let mut map = vec![u32::MAX; domain.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (k, &g) in gens.iter().enumerate() {
            let y = domain.mul(x, g);
            let v = codomain.mul(map[x] as usize, images[k]) as u32;
            if map[y] == u32::MAX {
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return Err((y, map[y] as usize, v as usize));
            }
        }
    }
    Ok(map)
}

impl GroupHom {
    /// Verifies the assignment `domain.generators()[k] -> images[k]`.
    pub fn new(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        images: &[Perm],
    ) -> Result<Self> {
        if images.len() != domain.generators().len() {
            return Err(Error::ImageCountMismatch {
                expected: domain.generators().len(),
                got: images.len(),
            });
        }
        let idx = images
            .iter()
            .map(|p| {
                codomain.index_of(p).ok_or_else(|| {
                    Error::NotAHomomorphism(HomWitness::ImageOutsideCodomain {
                        image: p.to_one_based(),
                    })
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(domain, codomain, idx)
    }

    pub(crate) fn from_indices(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self> {
        match extend_on_generators(&domain, &codomain, &images) {
            Ok(map) => Ok(GroupHom {
                domain,
                codomain,
                generator_images: images,
                element_map: map.into(),
            }),
            Err((x, a, b)) => Err(Error::NotAHomomorphism(HomWitness::GraphCollision {
                domain: domain.element(x).to_one_based(),
                first: codomain.element(a).to_one_based(),
                second: codomain.element(b).to_one_based(),
            })),
        }
    }

    /// Builds a map already known to be a homomorphism.
    pub(crate) fn from_map_unchecked(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        element_map: Vec<u32>,
    ) -> Self {
        let generator_images = domain
            .generator_indices()
            .into_iter()
            .map(|g| element_map[g] as usize)
            .collect();
        GroupHom {
            domain,
            codomain,
            generator_images,
            element_map: element_map.into(),
        }
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let map = (0..group.order() as u32).collect();
        Self::from_map_unchecked(group.clone(), group, map)
    }

    pub fn trivial(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>) -> Self {
        let map = vec![0; domain.order()];
        Self::from_map_unchecked(domain, codomain, map)
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn generator_images(&self) -> Vec<&Perm> {
        self.generator_images
            .iter()
            .map(|&i| self.codomain.element(i))
            .collect()
    }

    /// Image of the domain element with index `x`, as a codomain index.
    pub fn apply(&self, x: usize) -> usize {
        self.element_map[x] as usize
    }

    pub fn apply_perm(&self, p: &Perm) -> Result<&Perm> {
        let x = self.domain.require(p)?;
        Ok(self.codomain.element(self.apply(x)))
    }

    pub fn element_map(&self) -> &[u32] {
        &self.element_map
    }

    pub fn kernel_set(&self) -> ElemSet {
        let mut s = self.domain.empty_set();
        for (x, &y) in self.element_map.iter().enumerate() {
            if y == 0 {
                s.insert(x);
            }
        }
        s
    }

    pub fn image_set(&self) -> ElemSet {
        let mut s = self.codomain.empty_set();
        for &y in self.element_map.iter() {
            s.insert(y as usize);
        }
        s
    }

    /// Image of a subgroup of the domain (given as a domain index set).
    pub fn image_of_set(&self, set: &ElemSet) -> ElemSet {
        let mut s = self.codomain.empty_set();
        for x in set.ones() {
            s.insert(self.apply(x));
        }
        s
    }

    /// Full preimage of a codomain index set.
    pub fn preimage_of_set(&self, set: &ElemSet) -> ElemSet {
        let mut s = self.domain.empty_set();
        for (x, &y) in self.element_map.iter().enumerate() {
            if set.contains(y as usize) {
                s.insert(x);
            }
        }
        s
    }

    pub fn kernel(&self) -> FiniteGroup {
        self.domain.subgroup_from_set(&self.kernel_set())
    }

    /// The image, generated by the images of the domain generators.
    pub fn image(&self) -> FiniteGroup {
        self.codomain
            .subgroup_with_generators(&self.image_set(), &self.generator_images)
    }

    pub fn image_order(&self) -> usize {
        self.image_set().count_ones(..)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == self.codomain.order()
    }

    /// The same map with the codomain replaced by the image.
    pub fn corestrict(&self) -> GroupHom {
        if self.is_surjective() {
            return self.clone();
        }
        let image = Arc::new(self.image());
        let map = self
            .element_map
            .iter()
            .map(|&y| image.index_of(self.codomain.element(y as usize)).unwrap() as u32)
            .collect();
        Self::from_map_unchecked(self.domain.clone(), image, map)
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, sub: Arc<FiniteGroup>) -> Result<GroupHom> {
        let map = sub
            .elements()
            .iter()
            .map(|p| self.domain.require(p).map(|x| self.element_map[x]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_map_unchecked(sub, self.codomain.clone(), map))
    }

    /// `self` followed by `next`; the codomain of `self` must equal the domain of `next`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        let map = if Arc::ptr_eq(&self.codomain, &next.domain) || *self.codomain == *next.domain {
            self.element_map
                .iter()
                .map(|&y| next.element_map[y as usize])
                .collect()
        } else {
            self.element_map
                .iter()
                .map(|&y| {
                    let p = self.codomain.element(y as usize);
                    next.domain.require(p).map(|z| next.element_map[z])
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self::from_map_unchecked(
            self.domain.clone(),
            next.codomain.clone(),
            map,
        ))
    }

    /// Exhaustive check of `f(xy) = f(x) f(y)`; returns a failing pair if any.
    pub fn multiplicativity_failure(&self) -> Option<(usize, usize)> {
        let n = self.domain.order();
        for x in 0..n {
            for y in 0..n {
                let lhs = self.apply(self.domain.mul(x, y));
                let rhs = self.codomain.mul(self.apply(x), self.apply(y));
                if lhs != rhs {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom")
            .field("domain_order", &self.domain.order())
            .field("codomain_order", &self.codomain.order())
            .field("generator_images", &self.generator_images())
            .finish()
    }
}

/// Verifies a generator assignment given as 1-based image lists.
pub fn make_hom(
    domain: &Arc<FiniteGroup>,
    codomain: &Arc<FiniteGroup>,
    generator_images: &[Vec<u32>],
) -> Result<GroupHom> {
    let images = generator_images
        .iter()
        .map(|g| Perm::from_one_based(codomain.degree(), g))
        .collect::<Result<Vec<_>>>()?;
    GroupHom::new(domain.clone(), codomain.clone(), &images)
}

pub fn kernel(h: &GroupHom) -> FiniteGroup {
    h.kernel()
}

pub fn image(h: &GroupHom) -> FiniteGroup {
    h.image()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{cyclic, symmetric};

    #[test]
    fn mod_two_reduction() {
        let c6 = Arc::new(cyclic(6));
        let c2 = Arc::new(cyclic(2));
        let h = GroupHom::new(c6.clone(), c2.clone(), &[c2.generators()[0].clone()]).unwrap();
        assert_eq!(h.kernel().order(), 3);
        assert!(h.is_surjective());
        assert!(h.multiplicativity_failure().is_none());
    }

    #[test]
    fn order_obstruction() {
        let c2 = Arc::new(cyclic(2));
        let c3 = Arc::new(cyclic(3));
        let err = GroupHom::new(c2, c3.clone(), &[c3.generators()[0].clone()]).unwrap_err();
        assert!(matches!(
            err,
            Error::NotAHomomorphism(HomWitness::GraphCollision { .. })
        ));
    }

    #[test]
    fn sign_map_on_s3() {
        // generators: transposition, 3-cycle
        let s3 = Arc::new(symmetric(3));
        let c2 = Arc::new(cyclic(2));
        let t = c2.generators()[0].clone();
        let h = GroupHom::new(s3.clone(), c2.clone(), &[t, Perm::identity(2)]).unwrap();
        // all 36 pairs
        assert!(h.multiplicativity_failure().is_none());
        assert_eq!(h.kernel().order(), 3);
        assert_eq!(h.image().order(), 2);
        // the 3-cycle cannot map nontrivially to C2
        let bad = GroupHom::new(
            s3,
            c2.clone(),
            &[Perm::identity(2), c2.generators()[0].clone()],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn identity_and_trivial_maps() {
        let s3 = Arc::new(symmetric(3));
        let id = GroupHom::identity(s3.clone());
        assert_eq!(id.kernel().order(), 1);
        assert!(id.image().same_elements(&s3));
        let c2 = Arc::new(cyclic(2));
        let triv = GroupHom::trivial(s3.clone(), c2);
        assert!(triv.kernel().same_elements(&s3));
        assert_eq!(triv.image().order(), 1);
    }

    #[test]
    fn image_outside_codomain() {
        let c2 = Arc::new(cyclic(2));
        let s3 = Arc::new(symmetric(3));
        let r = make_hom(&s3, &c2, &[vec![1, 2], vec![3, 1]]);
        assert!(matches!(r, Err(Error::InvalidPermutation { .. })));
    }
}
