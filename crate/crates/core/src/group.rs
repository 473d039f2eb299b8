//! Explicitly enumerated permutation groups.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default bound on the number of elements any enumeration may produce.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// Groups up to this order get a full multiplication table on first use.
const TABLE_LIMIT: usize = 2048;

/// Largest `order * degree` an enumeration may store.
pub const MAX_STORED_POINTS: usize = 1 << 27;

/// A set of elements of a fixed ambient group, by canonical index.
pub type ElemSet = FixedBitSet;

/// A finite permutation group with every element enumerated.
///
/// Elements are stored in lexicographic order of their one-line form, so the
/// identity always has index 0 and two constructions of the same group agree
/// index-for-index.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    table: OnceLock<Option<Box<[u32]>>>,
    inverses: OnceLock<Box<[u32]>>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` acting on `degree` points.
    pub fn generate(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation {
                    degree,
                    reason: format!("generator acts on {} points", g.degree()),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in &generators {
                let y = &x * g;
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    if (seen.len() + 1).saturating_mul(degree) > MAX_STORED_POINTS {
                        return Err(Error::StorageExceeded { degree });
                    }
                    seen.insert(y.clone());
                    queue.push(y);
                }
            }
        }
        if queue.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        queue.sort_unstable();
        Ok(Self::from_sorted(degree, generators, queue))
    }

    fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        FiniteGroup {
            degree,
            generators,
            elements,
            index,
            table: OnceLock::new(),
            inverses: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub(crate) fn require(&self, p: &Perm) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::ElementNotInGroup(p.to_one_based()))
    }

    /// Indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index_of(g).expect("generators are elements"))
            .collect()
    }

    fn table(&self) -> Option<&[u32]> {
        self.table
            .get_or_init(|| (self.order() <= TABLE_LIMIT).then(|| self.build_table()))
            .as_deref()
    }

    fn build_table(&self) -> Box<[u32]> {
        let n = self.order();
        let gens = self.generator_indices();
        let cols: Vec<Vec<u32>> = self
            .generators
            .iter()
            .map(|g| self.elements.iter().map(|x| self.index[&(x * g)]).collect())
            .collect();
        // spanning tree of the right Cayley graph: b = parent[b] * gens[via[b]]
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0usize; n];
        let mut seq = vec![0u32];
        parent[0] = 0;
        let mut head = 0;
        while head < seq.len() {
            let b = seq[head] as usize;
            head += 1;
            for (k, col) in cols.iter().enumerate().take(gens.len()) {
                let c = col[b] as usize;
                if parent[c] == u32::MAX {
                    parent[c] = b as u32;
                    via[c] = k;
                    seq.push(c as u32);
                }
            }
        }
        let mut table = vec![0u32; n * n].into_boxed_slice();
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            for &b in &seq[1..] {
                let b = b as usize;
                row[b] = cols[via[b]][row[parent[b] as usize] as usize];
            }
        }
        table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&(&self.elements[a] * &self.elements[b])] as usize,
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        let inv = self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|x| self.index[&x.inverse()])
                .collect()
        });
        inv[a] as usize
    }

    /// `g^-1 a g`.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.order())
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn trivial_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert(0);
        s
    }

    /// The subgroup generated by `gens`, as an index set.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        self.extend_closure(&self.trivial_set(), &[], gens)
    }

    /// `<base, extra>` where `base` is the subgroup generated by `base_gens`.
    pub fn extend_closure(&self, base: &ElemSet, base_gens: &[usize], extra: &[usize]) -> ElemSet {
        let gens: Vec<usize> = base_gens
            .iter()
            .chain(extra)
            .copied()
            .filter(|&g| g != 0)
            .collect();
        let mut set = base.clone();
        let mut queue: Vec<usize> = base.ones().collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push(y);
                }
            }
        }
        set
    }

    /// A small generating set of the subgroup `set`, chosen greedily in
    /// canonical element order.
    pub fn greedy_generators(&self, set: &ElemSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial_set();
        for x in set.ones() {
            if !span.contains(x) {
                span = self.extend_closure(&span, &gens, &[x]);
                gens.push(x);
            }
        }
        gens
    }

    /// Materializes the subgroup `set` (which must be closed) as a group.
    pub fn subgroup_from_set(&self, set: &ElemSet) -> FiniteGroup {
        let gens = self.greedy_generators(set);
        self.subgroup_with_generators(set, &gens)
    }

    pub(crate) fn subgroup_with_generators(&self, set: &ElemSet, gens: &[usize]) -> FiniteGroup {
        let elements: Vec<Perm> = set.ones().map(|i| self.elements[i].clone()).collect();
        let generators = gens.iter().map(|&i| self.elements[i].clone()).collect();
        FiniteGroup::from_sorted(self.degree, generators, elements)
    }

    /// The subgroup generated by the given elements, keeping them as generators.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<FiniteGroup> {
        let idx = gens
            .iter()
            .map(|g| self.require(g))
            .collect::<Result<Vec<_>>>()?;
        let set = self.closure(&idx);
        let elements: Vec<Perm> = set.ones().map(|i| self.elements[i].clone()).collect();
        Ok(FiniteGroup::from_sorted(
            self.degree,
            gens.to_vec(),
            elements,
        ))
    }

    /// Index set of a subgroup given as a group in its own right.
    pub fn set_of(&self, sub: &FiniteGroup) -> Result<ElemSet> {
        let mut s = self.empty_set();
        for p in sub.elements() {
            s.insert(self.require(p)?);
        }
        Ok(s)
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Same element set (generators may differ).
    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.elements == other.elements
    }

    /// First `(element, conjugator)` pair that leaves `set`, if any.
    pub fn normality_failure(&self, set: &ElemSet, set_gens: &[usize]) -> Option<(usize, usize)> {
        for &h in set_gens {
            for g in self.generator_indices() {
                let c = self.conj(h, g);
                if !set.contains(c) {
                    return Some((h, g));
                }
            }
        }
        None
    }

    pub fn is_normal_set(&self, set: &ElemSet) -> bool {
        let gens = self.greedy_generators(set);
        self.normality_failure(set, &gens).is_none()
    }

    /// Errors with `NotNormal` unless `sub` is a normal subgroup.
    pub fn require_normal(&self, sub: &FiniteGroup) -> Result<ElemSet> {
        let set = self.set_of(sub)?;
        let gens = sub
            .generators()
            .iter()
            .map(|g| self.require(g))
            .collect::<Result<Vec<_>>>()?;
        match self.normality_failure(&set, &gens) {
            None => Ok(set),
            Some((h, g)) => Err(Error::NotNormal {
                element: self.elements[h].to_one_based(),
                by: self.elements[g].to_one_based(),
            }),
        }
    }

    /// Product `AB` of two subgroups one of which normalizes the other.
    pub fn product_set(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let ga = self.greedy_generators(a);
        let gb = self.greedy_generators(b);
        self.extend_closure(a, &ga, &gb)
    }

    pub fn normalizer_set(&self, set: &ElemSet) -> ElemSet {
        let gens = self.greedy_generators(set);
        let mut out = self.empty_set();
        for g in 0..self.order() {
            if gens.iter().all(|&h| set.contains(self.conj(h, g))) {
                out.insert(g);
            }
        }
        out
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

/// Enumerates the permutation group on `degree` points generated by
/// 1-based image lists, with the default order cap.
pub fn make_perm_group(degree: usize, generators: &[Vec<u32>]) -> Result<FiniteGroup> {
    make_perm_group_capped(degree, generators, DEFAULT_ORDER_CAP)
}

pub fn make_perm_group_capped(
    degree: usize,
    generators: &[Vec<u32>],
    cap: usize,
) -> Result<FiniteGroup> {
    let gens = generators
        .iter()
        .map(|g| Perm::from_one_based(degree, g))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::generate(degree, gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force closure over perms, independent of the indexed path.
    fn brute_order(degree: usize, gens: &[Vec<u32>]) -> usize {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|g| Perm::from_one_based(degree, g).unwrap())
            .collect();
        let mut set: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        loop {
            let next: HashSet<Perm> = set
                .iter()
                .flat_map(|x| gens.iter().map(move |g| x * g))
                .collect();
            let before = set.len();
            set.extend(next);
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn perm_group_examples() {
        assert_eq!(make_perm_group(3, &[vec![2, 3, 1]]).unwrap().order(), 3);
        let s3 = [vec![2, 1, 3], vec![2, 3, 1]];
        assert_eq!(brute_order(3, &s3), 6);
        assert_eq!(make_perm_group(3, &s3).unwrap().order(), 6);
        assert_eq!(make_perm_group(1, &[]).unwrap().order(), 1);
    }

    #[test]
    fn invalid_and_capped() {
        assert!(matches!(
            make_perm_group(3, &[vec![1, 1, 2]]),
            Err(Error::InvalidPermutation { .. })
        ));
        let s5 = [vec![2, 1, 3, 4, 5], vec![2, 3, 4, 5, 1]];
        assert_eq!(
            make_perm_group_capped(5, &s5, 100),
            Err(Error::CapExceeded { cap: 100 })
        );
        assert_eq!(make_perm_group_capped(5, &s5, 120).unwrap().order(), 120);
    }

    #[test]
    fn canonical_order_is_deterministic() {
        let a = make_perm_group(4, &[vec![2, 1, 3, 4], vec![2, 3, 4, 1]]).unwrap();
        let b = make_perm_group(4, &[vec![2, 3, 4, 1], vec![2, 1, 3, 4]]).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert!(a.element(0).is_identity());
        assert!(a.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn table_agrees_with_direct_products() {
        let g = make_perm_group(5, &[vec![2, 1, 3, 4, 5], vec![2, 3, 4, 5, 1]]).unwrap();
        for a in 0..g.order() {
            for b in (0..g.order()).step_by(7) {
                let direct = g.index_of(&(g.element(a) * g.element(b))).unwrap();
                assert_eq!(g.mul(a, b), direct);
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn closure_is_closed() {
        let g = make_perm_group(4, &[vec![2, 1, 3, 4], vec![2, 3, 4, 1]]).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert!(g.contains(&(g.element(a) * g.element(b))));
            }
            assert!(g.contains(&g.element(a).inverse()));
        }
    }
}
