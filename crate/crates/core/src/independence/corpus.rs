//! Seeded random families for the property suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::composition::{composition_factors, composition_factors_seeded};
use crate::group::{ElemSet, FiniteGroup};
use crate::hom::GroupHom;
use crate::jordan::jordan_index;
use crate::lattice::{normal_subgroup_sets, quotient_by_set, subgroup_sets};
use crate::matrix::{general_linear, special_linear};
use crate::perm::Perm;
use crate::standard::{alternating, cyclic, dihedral, direct_product, quaternion, symmetric};
use crate::sylow::frattini_check;

use super::{
    check_r, check_r1, check_r2, goursat_witness, independence_subgroup_set, lemma2_verdict,
    HomFamily,
};

/// Largest domain for which every subgroup is tested against `G'`.
pub const MAXIMALITY_ORDER_LIMIT: usize = 100;

/// A named group of order at most 200 together with its normal subgroups.
pub struct PoolGroup {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    normals: Vec<ElemSet>,
}

/// The groups families are drawn from. Large elementary abelian groups are
/// left out: their subgroup lattices dwarf everything else.
pub fn corpus_pool() -> Vec<PoolGroup> {
    let c = cyclic;
    let mut named: Vec<(String, FiniteGroup)> = Vec::new();
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 30, 60] {
        named.push((format!("C{n}"), c(n)));
    }
    for n in [3, 4, 5, 6, 8, 10, 12, 50, 100] {
        named.push((format!("D{}", 2 * n), dihedral(n)));
    }
    named.push(("S3".into(), symmetric(3)));
    named.push(("S4".into(), symmetric(4)));
    named.push(("S5".into(), symmetric(5)));
    named.push(("A4".into(), alternating(4)));
    named.push(("A5".into(), alternating(5)));
    named.push(("Q8".into(), quaternion()));
    named.push((
        "SL2(3)".into(),
        (*special_linear(2, 3).expect("SL2(3)").group).clone(),
    ));
    named.push((
        "GL2(3)".into(),
        (*general_linear(2, 3).expect("GL2(3)").group).clone(),
    ));
    let products: [(&str, FiniteGroup, &str, FiniteGroup); 10] = [
        ("C2", c(2), "C2", c(2)),
        ("C4", c(4), "C2", c(2)),
        ("C2", c(2), "S3", symmetric(3)),
        ("C3", c(3), "S3", symmetric(3)),
        ("S3", symmetric(3), "S3", symmetric(3)),
        ("C2", c(2), "A4", alternating(4)),
        ("C3", c(3), "A4", alternating(4)),
        ("C2", c(2), "S4", symmetric(4)),
        ("C2", c(2), "A5", alternating(5)),
        ("Q8", quaternion(), "C3", c(3)),
    ];
    for (a, ga, b, gb) in products {
        named.push((format!("{a}x{b}"), direct_product(&ga, &gb)));
    }
    named
        .into_par_iter()
        .map(|(name, g)| {
            let normals = normal_subgroup_sets(&g);
            PoolGroup {
                name,
                group: Arc::new(g),
                normals,
            }
        })
        .collect()
}

/// One seeded family with a description of how it was built.
#[derive(Clone, Debug)]
pub struct CorpusFamily {
    pub id: usize,
    pub pool_index: usize,
    pub group_name: String,
    pub family: HomFamily,
}

/// A surjection onto `G/N`, sometimes followed by an embedding of `G/N`
/// into `G/N x C_m` so the codomain is larger than the image.
fn random_hom(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>, normals: &[ElemSet]) -> GroupHom {
    let n = normals
        .choose(rng)
        .expect("every group has a normal subgroup");
    let q = quotient_by_set(g, n);
    if rng.gen_ratio(1, 4) {
        let extra = cyclic(rng.gen_range(2..=3));
        let big = Arc::new(direct_product(&q.group, &extra));
        let pad = Perm::identity(extra.degree());
        let images: Vec<Perm> = g
            .generator_indices()
            .into_iter()
            .map(|x| Perm::concat([q.group.element(q.projection.apply(x)), &pad]))
            .collect();
        GroupHom::new(g.clone(), big, &images)
            .expect("embedding after projection is a homomorphism")
    } else {
        q.projection
    }
}

/// `count` families drawn from the pool with a ChaCha stream seeded by `seed`.
pub fn corpus(pool: &[PoolGroup], seed: u64, count: usize) -> Vec<CorpusFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|id| {
            let pool_index = rng.gen_range(0..pool.len());
            let entry = &pool[pool_index];
            let k = rng.gen_range(1..=4);
            let homs = (0..k)
                .map(|_| random_hom(&mut rng, &entry.group, &entry.normals))
                .collect();
            let family = HomFamily::unlabelled(entry.group.clone(), homs).expect("nonempty family");
            CorpusFamily {
                id,
                pool_index,
                group_name: entry.name.clone(),
                family,
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityFinding {
    pub family: usize,
    pub subgroup_order: usize,
    pub gamma_prime_order: usize,
}

/// Counts and failures over one corpus run. Failure lists hold family ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub seed: u64,
    pub families: usize,
    pub independent: usize,
    pub r_disagreements: Vec<usize>,
    pub lemma2_applied: usize,
    pub lemma2_violations: Vec<usize>,
    pub maximality_families: usize,
    pub maximality_subgroups: usize,
    pub maximality_violations: Vec<MaximalityFinding>,
    pub gamma_prime_failures: Vec<usize>,
    pub goursat_pairs: usize,
    pub goursat_failures: Vec<usize>,
    pub frattini_triples: usize,
    pub frattini_failures: Vec<usize>,
    pub jordan_holder_mismatches: Vec<usize>,
    pub jordan_abelian_mismatches: Vec<usize>,
}

#[derive(Default)]
struct FamilyOutcome {
    independent: bool,
    r_disagrees: bool,
    lemma2_applied: bool,
    lemma2_violated: bool,
    maximality_checked: bool,
    subgroups: usize,
    maximality: Vec<MaximalityFinding>,
    gamma_prime_failed: bool,
    goursat_pairs: usize,
    goursat_failed: bool,
    frattini_triples: usize,
    frattini_failed: bool,
    jordan_holder_mismatch: bool,
    jordan_abelian_mismatch: bool,
}

/// The family on `h` is independent iff `prod |h / (h & N_i)| = |h / (h & N)|`
/// with `N` the common kernel.
fn independent_on(h: &ElemSet, kernels: &[ElemSet]) -> bool {
    let size = h.count_ones(..) as u128;
    let mut common = h.clone();
    let mut product: u128 = 1;
    for k in kernels {
        let mut meet = h.clone();
        meet.intersect_with(k);
        product = product.saturating_mul(size / meet.count_ones(..) as u128);
        common.intersect_with(k);
    }
    product == size / common.count_ones(..) as u128
}

fn evaluate_one(cf: &CorpusFamily, subgroups: Option<&[ElemSet]>, seed: u64) -> FamilyOutcome {
    let f = &cf.family;
    let g = f.domain();
    let mut out = FamilyOutcome::default();

    let r = check_r(f);
    out.independent = r;
    out.r_disagrees = r != check_r1(f) || r != check_r2(f);

    let v = lemma2_verdict(f);
    out.lemma2_applied = v.applies;
    out.lemma2_violated = v.applies && !r;

    let gp_set = independence_subgroup_set(f);
    let gp = Arc::new(g.subgroup_from_set(&gp_set));
    out.gamma_prime_failed = !f.restrict(gp.clone()).map(|x| check_r(&x)).unwrap_or(false);

    if let Some(subs) = subgroups {
        out.maximality_checked = true;
        out.subgroups = subs.len();
        let kernels = f.kernels();
        for h in subs {
            if independent_on(h, &kernels) && !h.is_subset(&gp_set) {
                out.maximality.push(MaximalityFinding {
                    family: cf.id,
                    subgroup_order: h.count_ones(..),
                    gamma_prime_order: gp.order(),
                });
            }
        }
    }

    for i in 0..f.len() {
        for j in i + 1..f.len() {
            out.goursat_pairs += 1;
            let pair =
                HomFamily::unlabelled(g.clone(), vec![f.homs()[i].clone(), f.homs()[j].clone()])
                    .expect("two homomorphisms");
            let ok = match goursat_witness(f, i, j) {
                Ok(Some(w)) => w.verified && w.quotient.order() > 1 && !check_r(&pair),
                Ok(None) => check_r(&pair),
                Err(_) => false,
            };
            out.goursat_failed |= !ok;
        }
    }

    // Frattini over every kernel and over G'
    let mut normals: Vec<ElemSet> = f.kernels();
    normals.push(gp_set);
    normals.sort_by_key(|s| s.ones().collect::<Vec<_>>());
    normals.dedup();
    for n in normals.iter().filter(|n| n.count_ones(..) > 1) {
        let sub = g.subgroup_from_set(n);
        for p in prime_divisors(sub.order() as u64) {
            out.frattini_triples += 1;
            out.frattini_failed |= !frattini_check(g, &sub, p).map(|w| w.holds).unwrap_or(false);
        }
    }

    out.jordan_holder_mismatch =
        composition_factors(g) != composition_factors_seeded(g, seed ^ cf.id as u64);
    out.jordan_abelian_mismatch = (jordan_index(g).0 == 1) != g.is_abelian();
    out
}

/// Runs every corpus property in parallel; the summary does not depend on
/// the number of threads.
pub fn evaluate_corpus(pool: &[PoolGroup], families: &[CorpusFamily], seed: u64) -> CorpusSummary {
    let mut used = vec![false; pool.len()];
    for f in families {
        used[f.pool_index] = true;
    }
    let lattices: Vec<Option<Vec<ElemSet>>> = pool
        .par_iter()
        .zip(&used)
        .map(|(p, &used)| {
            (used && p.group.order() <= MAXIMALITY_ORDER_LIMIT).then(|| subgroup_sets(&p.group))
        })
        .collect();
    let outcomes: Vec<FamilyOutcome> = families
        .par_iter()
        .map(|cf| evaluate_one(cf, lattices[cf.pool_index].as_deref(), seed))
        .collect();

    let mut s = CorpusSummary {
        seed,
        families: families.len(),
        ..Default::default()
    };
    for (cf, o) in families.iter().zip(outcomes) {
        let id = cf.id;
        s.independent += o.independent as usize;
        if o.r_disagrees {
            s.r_disagreements.push(id);
        }
        s.lemma2_applied += o.lemma2_applied as usize;
        if o.lemma2_violated {
            s.lemma2_violations.push(id);
        }
        s.maximality_families += o.maximality_checked as usize;
        s.maximality_subgroups += o.subgroups;
        s.maximality_violations.extend(o.maximality);
        if o.gamma_prime_failed {
            s.gamma_prime_failures.push(id);
        }
        s.goursat_pairs += o.goursat_pairs;
        if o.goursat_failed {
            s.goursat_failures.push(id);
        }
        s.frattini_triples += o.frattini_triples;
        if o.frattini_failed {
            s.frattini_failures.push(id);
        }
        if o.jordan_holder_mismatch {
            s.jordan_holder_mismatches.push(id);
        }
        if o.jordan_abelian_mismatch {
            s.jordan_abelian_mismatches.push(id);
        }
    }
    s
}
