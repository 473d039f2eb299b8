//! Conjugacy classes, normal closures, normal-subgroup and subgroup
//! enumeration, and quotients.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{ElemSet, FiniteGroup};
use crate::hom::GroupHom;
use crate::perm::Perm;

/// A subgroup of an ambient group with a generating set, both by index.
#[derive(Clone, Debug)]
pub(crate) struct IndexedSubgroup {
    pub set: ElemSet,
    pub gens: Vec<usize>,
}

pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = g.generator_indices();
    let mut seen = g.empty_set();
    let mut classes = Vec::new();
    for a in 0..g.order() {
        if seen.contains(a) {
            continue;
        }
        seen.insert(a);
        let mut class = vec![a];
        let mut head = 0;
        while head < class.len() {
            let x = class[head];
            head += 1;
            for &s in &gens {
                let y = g.conj(x, s);
                if !seen.contains(y) {
                    seen.insert(y);
                    class.push(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Smallest normal subgroup containing `seed`, as an index set.
pub fn normal_closure_set(g: &FiniteGroup, seed: &[usize]) -> ElemSet {
    normal_closure_indexed(g, seed).set
}

fn normal_closure_indexed(g: &FiniteGroup, seed: &[usize]) -> IndexedSubgroup {
    let mut gens: Vec<usize> = Vec::new();
    let mut set = g.trivial_set();
    for &x in seed {
        if !set.contains(x) {
            set = g.extend_closure(&set, &gens, &[x]);
            gens.push(x);
        }
    }
    let ggens = g.generator_indices();
    let mut i = 0;
    while i < gens.len() {
        let h = gens[i];
        i += 1;
        for &s in &ggens {
            let c = g.conj(h, s);
            if !set.contains(c) {
                set = g.extend_closure(&set, &gens, &[c]);
                gens.push(c);
            }
        }
    }
    IndexedSubgroup { set, gens }
}

/// Smallest normal subgroup of `g` containing the given elements.
pub fn normal_closure(g: &FiniteGroup, seed: &[Perm]) -> Result<FiniteGroup> {
    let idx = seed
        .iter()
        .map(|p| {
            g.index_of(p)
                .ok_or_else(|| Error::ElementNotInGroup(p.to_one_based()))
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = normal_closure_indexed(g, &idx);
    Ok(g.subgroup_from_set(&sub.set))
}

fn sort_sets(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.sort_by_cached_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    sets
}

/// Joins of generators by repeated extension, deduplicated.
fn lattice_closure(g: &FiniteGroup, atoms: Vec<IndexedSubgroup>) -> Vec<ElemSet> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut list = vec![IndexedSubgroup {
        set: g.trivial_set(),
        gens: Vec::new(),
    }];
    seen.insert(g.trivial_set());
    for a in &atoms {
        if seen.insert(a.set.clone()) {
            list.push(a.clone());
        }
    }
    let mut i = 0;
    while i < list.len() {
        for a in &atoms {
            if a.set.is_subset(&list[i].set) {
                continue;
            }
            let joined = g.extend_closure(&list[i].set, &list[i].gens, &a.gens);
            if seen.insert(joined.clone()) {
                let mut gens = list[i].gens.clone();
                gens.extend(&a.gens);
                list.push(IndexedSubgroup { set: joined, gens });
            }
        }
        i += 1;
    }
    sort_sets(list.into_iter().map(|s| s.set).collect())
}

/// Every normal subgroup, sorted by order and then by element indices.
///
/// Normal closures of single conjugacy classes generate the lattice under joins.
pub fn normal_subgroup_sets(g: &FiniteGroup) -> Vec<ElemSet> {
    let mut atoms: Vec<IndexedSubgroup> = Vec::new();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    for class in conjugacy_classes(g).into_iter().skip(1) {
        let sub = normal_closure_indexed(g, &class);
        if seen.insert(sub.set.clone()) {
            atoms.push(sub);
        }
    }
    lattice_closure(g, atoms)
}

pub fn normal_subgroups(g: &FiniteGroup) -> Vec<FiniteGroup> {
    normal_subgroup_sets(g)
        .iter()
        .map(|s| g.subgroup_from_set(s))
        .collect()
}

/// Every subgroup, sorted as for [`normal_subgroup_sets`]. Exponential in
/// general; intended for groups of a few hundred elements.
pub fn subgroup_sets(g: &FiniteGroup) -> Vec<ElemSet> {
    let mut atoms: Vec<IndexedSubgroup> = Vec::new();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    for a in 1..g.order() {
        let set = g.closure(&[a]);
        if seen.insert(set.clone()) {
            atoms.push(IndexedSubgroup { set, gens: vec![a] });
        }
    }
    lattice_closure(g, atoms)
}

/// Proper normal subgroups not contained in any other proper normal subgroup.
pub fn maximal_normal_subgroup_sets(g: &FiniteGroup) -> Vec<ElemSet> {
    let all = normal_subgroup_sets(g);
    let n = g.order();
    let proper: Vec<&ElemSet> = all.iter().filter(|s| s.count_ones(..) < n).collect();
    proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|o| o.count_ones(..) > m.count_ones(..) && m.is_subset(o))
        })
        .map(|m| (*m).clone())
        .collect()
}

/// `G/N` realized as the permutation action on cosets, with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    /// Least element (in canonical order) of each coset; coset 0 is `N`.
    pub representatives: Vec<Perm>,
    pub projection: GroupHom,
}

pub(crate) fn quotient_by_set(g: &Arc<FiniteGroup>, n: &ElemSet) -> Quotient {
    let order = g.order();
    let n_size = n.count_ones(..);
    if n_size == 1 {
        return Quotient {
            group: g.clone(),
            representatives: g.elements().to_vec(),
            projection: GroupHom::identity(g.clone()),
        };
    }
    let members: Vec<usize> = n.ones().collect();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps = Vec::new();
    for a in 0..order {
        if coset_of[a] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(a);
        for &m in &members {
            coset_of[g.mul(m, a)] = c;
        }
    }
    let m = reps.len();
    let action = |x: usize| -> Perm {
        Perm::from_images(reps.iter().map(|&r| coset_of[g.mul(r, x)]).collect())
            .expect("right multiplication permutes cosets")
    };
    let gens: Vec<Perm> = g.generator_indices().into_iter().map(action).collect();
    let q = Arc::new(
        FiniteGroup::generate(m, gens.clone(), m.max(1)).expect("coset action has order [G:N]"),
    );
    debug_assert_eq!(q.order(), m);
    let images = gens.iter().map(|p| q.index_of(p).unwrap()).collect();
    let projection = GroupHom::from_indices(g.clone(), q.clone(), images)
        .expect("coset action is a homomorphism");
    Quotient {
        group: q,
        representatives: reps.iter().map(|&r| g.element(r).clone()).collect(),
        projection,
    }
}

/// The quotient of `g` by the normal subgroup `n`.
pub fn quotient(g: &Arc<FiniteGroup>, n: &FiniteGroup) -> Result<Quotient> {
    let set = g.require_normal(n)?;
    Ok(quotient_by_set(g, &set))
}
