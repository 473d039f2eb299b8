//! Independence of a family of homomorphisms `rho_i: G -> G_i` out of one
//! finite group.
//!
//! The family is independent when the diagonal image `rho(G)` is the whole
//! product of the images. Everything here is the finite shadow of the
//! profinite statements: closures are plain subgroup generation.

mod corpus;
mod goursat;
mod report;
mod scenario;
mod semistable;

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::composition::{simple_quotients, SimpleFactorId};
use crate::error::{Error, Result};
use crate::group::{ElemSet, FiniteGroup};
use crate::hom::GroupHom;
use crate::perm::Perm;

pub use corpus::{
    corpus, corpus_pool, evaluate_corpus, CorpusFamily, CorpusSummary, MaximalityFinding,
    PoolGroup, MAXIMALITY_ORDER_LIMIT,
};
pub use goursat::{goursat_witness, GoursatWitness};
pub use report::{
    analyze, FlaggedQuotient, GoursatPair, IndependenceReport, Lemma2Summary, SharedQuotient,
    SubgroupSummary,
};
pub use scenario::truncation_scenario;
pub use semistable::{
    semistable_decompose, InertiaAssignment, InertiaPlace, SemistableComponent,
    SemistableComponentSummary, SemistableReport, SemistableSummary,
};

/// A common domain with an indexed list of homomorphisms out of it.
#[derive(Clone, Debug)]
pub struct HomFamily {
    domain: Arc<FiniteGroup>,
    homs: Vec<GroupHom>,
    labels: Vec<String>,
}

impl HomFamily {
    pub fn new(domain: Arc<FiniteGroup>, homs: Vec<GroupHom>, labels: Vec<String>) -> Result<Self> {
        if homs.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if labels.len() != homs.len() {
            return Err(Error::Parse(format!(
                "{} labels for {} homomorphisms",
                labels.len(),
                homs.len()
            )));
        }
        if homs.iter().any(|h| **h.domain() != *domain) {
            return Err(Error::DomainMismatch);
        }
        Ok(HomFamily {
            domain,
            homs,
            labels,
        })
    }

    /// Labels `0, 1, ...`.
    pub fn unlabelled(domain: Arc<FiniteGroup>, homs: Vec<GroupHom>) -> Result<Self> {
        let labels = (0..homs.len()).map(|i| i.to_string()).collect();
        Self::new(domain, homs, labels)
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn homs(&self) -> &[GroupHom] {
        &self.homs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    /// Every codomain replaced by the corresponding image.
    pub fn normalized(&self) -> HomFamily {
        HomFamily {
            domain: self.domain.clone(),
            homs: self.homs.iter().map(GroupHom::corestrict).collect(),
            labels: self.labels.clone(),
        }
    }

    /// The family restricted to a subgroup of the domain.
    pub fn restrict(&self, sub: Arc<FiniteGroup>) -> Result<HomFamily> {
        let homs = self
            .homs
            .iter()
            .map(|h| h.restrict(sub.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomFamily {
            domain: sub,
            homs,
            labels: self.labels.clone(),
        })
    }

    pub fn kernels(&self) -> Vec<ElemSet> {
        self.homs.iter().map(GroupHom::kernel_set).collect()
    }

    /// `N'_i`: the intersection of the kernels of all the other maps.
    pub fn complementary_kernels(&self) -> Vec<ElemSet> {
        let kernels = self.kernels();
        (0..kernels.len())
            .map(|i| {
                let mut acc = self.domain.full_set();
                for (j, k) in kernels.iter().enumerate() {
                    if j != i {
                        acc.intersect_with(k);
                    }
                }
                acc
            })
            .collect()
    }

    fn common_kernel(&self) -> ElemSet {
        let mut acc = self.domain.full_set();
        for k in self.kernels() {
            acc.intersect_with(&k);
        }
        acc
    }

    pub fn image_orders(&self) -> Vec<usize> {
        self.homs.iter().map(GroupHom::image_order).collect()
    }

    /// `prod |rho_i(G)|`, never materializing the product.
    pub fn product_order(&self) -> BigUint {
        self.image_orders()
            .into_iter()
            .fold(BigUint::one(), |acc, n| acc * n)
    }

    /// `|rho(G)| = |G| / |intersection of kernels|`.
    pub fn diagonal_order(&self) -> usize {
        self.domain.order() / self.common_kernel().count_ones(..)
    }
}

/// The diagonal image as a group of tuples, plus the product order.
#[derive(Clone, Debug)]
pub struct DiagonalImage {
    /// Acts on the disjoint union of the codomain point sets, block by block.
    pub group: FiniteGroup,
    pub block_degrees: Vec<usize>,
    pub product_order: BigUint,
}

impl DiagonalImage {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// The tuple with `x` in block `i` and the identity elsewhere.
    pub fn embed(&self, i: usize, x: &Perm) -> Perm {
        let parts: Vec<Perm> = self
            .block_degrees
            .iter()
            .enumerate()
            .map(|(j, &d)| if j == i { x.clone() } else { Perm::identity(d) })
            .collect();
        Perm::concat(&parts)
    }
}

pub fn diagonal_image(family: &HomFamily) -> DiagonalImage {
    let block_degrees: Vec<usize> = family.homs.iter().map(|h| h.codomain().degree()).collect();
    let gens: Vec<Perm> = family
        .domain
        .generator_indices()
        .into_iter()
        .map(|g| {
            let parts: Vec<&Perm> = family
                .homs
                .iter()
                .map(|h| h.codomain().element(h.apply(g)))
                .collect();
            Perm::concat(parts)
        })
        .collect();
    let degree = block_degrees.iter().sum::<usize>();
    let group = FiniteGroup::generate(degree, gens, family.domain.order())
        .expect("the diagonal image is a quotient of the domain");
    DiagonalImage {
        group,
        block_degrees,
        product_order: family.product_order(),
    }
}

/// `(prod |rho_i(G)|) / |rho(G)|`.
pub fn ro_index(family: &HomFamily) -> BigUint {
    family.product_order() / family.diagonal_order()
}

/// Independence: the diagonal image is the full product.
pub fn check_r(family: &HomFamily) -> bool {
    ro_index(family).is_one()
}

/// `G = N_i N'_i` for every `i`.
pub fn check_r1(family: &HomFamily) -> bool {
    let g = &family.domain;
    let kernels = family.kernels();
    let complements = family.complementary_kernels();
    kernels.iter().zip(&complements).all(|(n, c)| {
        let mut meet = n.clone();
        meet.intersect_with(c);
        n.count_ones(..) * c.count_ones(..) == g.order() * meet.count_ones(..)
    })
}

/// The subgroup generated by all the `N'_i`, as an index set.
pub fn independence_subgroup_set(family: &HomFamily) -> ElemSet {
    let g = &family.domain;
    let mut set = g.trivial_set();
    let mut gens: Vec<usize> = Vec::new();
    for c in family.complementary_kernels() {
        let extra = g.greedy_generators(&c);
        set = g.extend_closure(&set, &gens, &extra);
        gens.extend(extra);
    }
    set
}

/// `G` is generated by the `N'_i`.
pub fn check_r2(family: &HomFamily) -> bool {
    independence_subgroup_set(family).count_ones(..) == family.domain.order()
}

/// `G'`: the subgroup generated by the `N'_i`. It is normal, the family is
/// independent on it, and it contains every subgroup on which the family is
/// independent.
pub fn independence_subgroup(family: &HomFamily) -> FiniteGroup {
    family
        .domain
        .subgroup_from_set(&independence_subgroup_set(family))
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Conclusion {
    Independent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Verdict {
    /// No simple quotient of one image is a quotient of another image.
    pub applies: bool,
    /// Pairs `(i, j)` sharing a simple quotient.
    pub collisions: Vec<(usize, usize, SimpleFactorId)>,
    /// Simple quotients whose order is not in the catalogue; they block `applies`.
    pub flagged: Vec<(usize, SimpleFactorId)>,
    pub conclusion: Conclusion,
    pub r_holds: bool,
}

/// The disjoint-simple-quotients criterion. When it applies the family is
/// independent; when it does not, nothing is claimed.
pub fn lemma2_verdict(family: &HomFamily) -> Lemma2Verdict {
    let quotients: Vec<Vec<SimpleFactorId>> = family
        .homs
        .iter()
        .map(|h| simple_quotients(&h.image()))
        .collect();
    let mut collisions = Vec::new();
    let mut flagged = Vec::new();
    for (i, qs) in quotients.iter().enumerate() {
        for q in qs.iter().filter(|q| q.is_unidentified()) {
            flagged.push((i, q.clone()));
        }
    }
    for i in 0..quotients.len() {
        for j in i + 1..quotients.len() {
            for q in &quotients[i] {
                if quotients[j].contains(q) {
                    collisions.push((i, j, q.clone()));
                }
            }
        }
    }
    let applies = collisions.is_empty() && flagged.is_empty();
    let r_holds = check_r(family);
    Lemma2Verdict {
        applies,
        collisions,
        flagged,
        conclusion: if applies {
            Conclusion::Independent
        } else {
            Conclusion::Inconclusive
        },
        r_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::quotient_by_set;
    use crate::standard::{cyclic, direct_product, symmetric};

    fn reduction(domain: &Arc<FiniteGroup>, m: usize) -> GroupHom {
        let target = Arc::new(cyclic(m));
        GroupHom::new(
            domain.clone(),
            target.clone(),
            &[target.generators()[0].clone()],
        )
        .unwrap()
    }

    pub(crate) fn crt_family() -> HomFamily {
        let c6 = Arc::new(cyclic(6));
        HomFamily::unlabelled(c6.clone(), vec![reduction(&c6, 2), reduction(&c6, 3)]).unwrap()
    }

    pub(crate) fn diagonal_c2_family() -> HomFamily {
        let c2 = Arc::new(cyclic(2));
        let id = GroupHom::identity(c2.clone());
        HomFamily::unlabelled(c2, vec![id.clone(), id]).unwrap()
    }

    pub(crate) fn sign(s3: &Arc<FiniteGroup>) -> GroupHom {
        let a3 = crate::lattice::normal_closure_set(
            s3,
            &[s3.index_of(&Perm::from_one_based(3, &[2, 3, 1]).unwrap())
                .unwrap()],
        );
        quotient_by_set(s3, &a3).projection
    }

    pub(crate) fn identity_sign_family() -> HomFamily {
        let s3 = Arc::new(symmetric(3));
        HomFamily::unlabelled(s3.clone(), vec![GroupHom::identity(s3.clone()), sign(&s3)]).unwrap()
    }

    fn coordinate_projections() -> HomFamily {
        let c2 = cyclic(2);
        let v = Arc::new(direct_product(&c2, &c2));
        let target = Arc::new(c2);
        let t = target.generators()[0].clone();
        let id = Perm::identity(2);
        let p1 = GroupHom::new(v.clone(), target.clone(), &[t.clone(), id.clone()]).unwrap();
        let p2 = GroupHom::new(v.clone(), target, &[id, t]).unwrap();
        HomFamily::unlabelled(v, vec![p1, p2]).unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let d = diagonal_image(&crt_family());
        assert_eq!(
            (d.order(), d.product_order.clone()),
            (6, BigUint::from(6u32))
        );
        let d = diagonal_image(&diagonal_c2_family());
        assert_eq!(
            (d.order(), d.product_order.clone()),
            (2, BigUint::from(4u32))
        );
        let f = identity_sign_family();
        let d = diagonal_image(&f);
        assert_eq!(
            (d.order(), d.product_order.clone()),
            (6, BigUint::from(12u32))
        );
        assert_eq!(f.diagonal_order(), 6);
    }

    #[test]
    fn r_and_index() {
        assert!(check_r(&crt_family()));
        assert_eq!(ro_index(&crt_family()), BigUint::one());
        assert!(!check_r(&diagonal_c2_family()));
        assert_eq!(ro_index(&diagonal_c2_family()), BigUint::from(2u32));
        assert_eq!(ro_index(&identity_sign_family()), BigUint::from(2u32));
    }

    #[test]
    fn r1_r2_examples() {
        assert!(check_r1(&crt_family()) && check_r2(&crt_family()));
        assert!(!check_r1(&diagonal_c2_family()) && !check_r2(&diagonal_c2_family()));
        assert!(!check_r1(&identity_sign_family()) && !check_r2(&identity_sign_family()));
    }

    #[test]
    fn gamma_prime_examples() {
        assert_eq!(independence_subgroup(&diagonal_c2_family()).order(), 1);
        let f = identity_sign_family();
        let gp = Arc::new(independence_subgroup(&f));
        assert_eq!(gp.order(), 3);
        let r = f.restrict(gp).unwrap();
        assert!(check_r(&r));
        assert_eq!(independence_subgroup(&crt_family()).order(), 6);
    }

    #[test]
    fn lemma2_examples() {
        let v = lemma2_verdict(&crt_family());
        assert!(v.applies && v.r_holds);
        assert_eq!(v.conclusion, Conclusion::Independent);

        let v = lemma2_verdict(&coordinate_projections());
        assert!(!v.applies);
        assert!(v.r_holds);
        assert_eq!(v.collisions.len(), 1);

        let v = lemma2_verdict(&diagonal_c2_family());
        assert!(!v.applies && !v.r_holds);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn single_hom_family_is_independent() {
        let c6 = Arc::new(cyclic(6));
        let f = HomFamily::unlabelled(c6.clone(), vec![reduction(&c6, 3)]).unwrap();
        assert!(check_r(&f) && check_r1(&f) && check_r2(&f));
        assert_eq!(independence_subgroup(&f).order(), 6);
    }

    #[test]
    fn family_validation() {
        let c6 = Arc::new(cyclic(6));
        assert!(matches!(
            HomFamily::unlabelled(c6.clone(), vec![]),
            Err(Error::EmptyFamily)
        ));
        let c4 = Arc::new(cyclic(4));
        let h = GroupHom::identity(c4);
        assert!(matches!(
            HomFamily::unlabelled(c6.clone(), vec![reduction(&c6, 2), h]),
            Err(Error::DomainMismatch)
        ));
    }
}
