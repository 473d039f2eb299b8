//! Composition factors and simple quotients, labelled against the Lie-type
//! catalogue.
//!
//! Simple groups are identified by order only. A nonabelian factor whose
//! order matches a catalogue entry in some characteristic `ell >= 5` is
//! labelled with every witness of that entry; any other nonabelian order is
//! reported as unidentified. Groups outside the catalogue that happen to share
//! an order with a member are not distinguished from it.

use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, prime_divisors};
use crate::group::FiniteGroup;
use crate::lattice::maximal_normal_subgroup_sets;
use crate::lie::{identify_simple_by_order, LieTypeSpec, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorKind {
    Cyclic { p: u64 },
    Lie { witnesses: Vec<LieTypeSpec> },
    Unidentified,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleFactorId {
    pub order: BigUint,
    pub kind: FactorKind,
}

impl SimpleFactorId {
    /// Labels a simple group of the given order.
    pub fn identify(order: u64) -> Self {
        let kind = if is_prime(order) {
            FactorKind::Cyclic { p: order }
        } else {
            let big = BigUint::from(order);
            let witnesses: Vec<LieTypeSpec> = prime_divisors(order)
                .into_iter()
                .filter(|&ell| ell >= 5)
                .flat_map(|ell| identify_simple_by_order(&big, ell))
                .filter_map(|w| match w {
                    Witness::Lie(s) => Some(s),
                    Witness::Cyclic { .. } => None,
                })
                .collect();
            if witnesses.is_empty() {
                FactorKind::Unidentified
            } else {
                FactorKind::Lie { witnesses }
            }
        };
        SimpleFactorId {
            order: BigUint::from(order),
            kind,
        }
    }

    pub fn is_unidentified(&self) -> bool {
        self.kind == FactorKind::Unidentified
    }

    /// Characteristic of the catalogue this factor belongs to, if any.
    /// Cyclic groups of prime order `p` belong to the catalogue for `p` when `p >= 5`.
    pub fn characteristic(&self) -> Option<u64> {
        match &self.kind {
            FactorKind::Cyclic { p } => (*p >= 5).then_some(*p),
            FactorKind::Lie { witnesses } => witnesses.first().map(|w| w.ell),
            FactorKind::Unidentified => None,
        }
    }
}

impl fmt::Display for SimpleFactorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FactorKind::Cyclic { p } => write!(f, "cyclic({p})"),
            FactorKind::Lie { witnesses } => {
                let names: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
                write!(f, "lie({}) order {}", names.join(" | "), self.order)
            }
            FactorKind::Unidentified => write!(f, "unidentified order {}", self.order),
        }
    }
}

/// Orders of the composition factors along a series whose maximal normal
/// subgroup at each step is picked by `choose(count)`.
fn factor_orders(g: &FiniteGroup, choose: &mut dyn FnMut(usize) -> usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut current = g.clone();
    loop {
        let n = current.order() as u64;
        let factors = factorize(n);
        if n == 1 {
            break;
        }
        if factors.len() == 1 || current.is_abelian() {
            // p-groups and abelian groups: every factor is cyclic of prime order
            for (p, e) in factors {
                out.extend(std::iter::repeat_n(p, e as usize));
            }
            break;
        }
        let maxes = maximal_normal_subgroup_sets(&current);
        let m = &maxes[choose(maxes.len())];
        out.push(n / m.count_ones(..) as u64);
        current = current.subgroup_from_set(m);
    }
    out.sort_unstable();
    out
}

fn label(orders: Vec<u64>) -> Vec<SimpleFactorId> {
    let mut ids: Vec<SimpleFactorId> = orders.into_iter().map(SimpleFactorId::identify).collect();
    ids.sort();
    ids
}

/// Jordan-Holder factors as a sorted multiset.
pub fn composition_factors(g: &FiniteGroup) -> Vec<SimpleFactorId> {
    label(factor_orders(g, &mut |_| 0))
}

/// Composition factors along a series chosen at random from `seed`.
pub fn composition_factors_seeded(g: &FiniteGroup, seed: u64) -> Vec<SimpleFactorId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    label(factor_orders(g, &mut |n| {
        *(0..n).collect::<Vec<_>>().choose(&mut rng).unwrap()
    }))
}

/// The distinct simple quotients `G/M` over maximal normal subgroups `M`.
pub fn simple_quotients(g: &FiniteGroup) -> Vec<SimpleFactorId> {
    let n = g.order() as u64;
    let orders: Vec<u64> = if n == 1 {
        Vec::new()
    } else if g.is_abelian() {
        prime_divisors(n)
    } else {
        maximal_normal_subgroup_sets(g)
            .iter()
            .map(|m| n / m.count_ones(..) as u64)
            .collect()
    };
    let mut ids = label(orders);
    ids.dedup();
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Series;
    use crate::matrix::{general_linear, special_linear};
    use crate::standard::{alternating, cyclic, direct_product, symmetric};

    fn a1(ell: u64) -> FactorKind {
        FactorKind::Lie {
            witnesses: vec![LieTypeSpec::new(Series::A, 1, ell, 1).unwrap()],
        }
    }

    #[test]
    fn sl2_f5_factors() {
        let g = special_linear(2, 5).unwrap();
        let f = composition_factors(&g.group);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].kind, FactorKind::Cyclic { p: 2 });
        assert_eq!(f[1].order, BigUint::from(60u32));
        assert_eq!(f[1].kind, a1(5));
    }

    #[test]
    fn cyclic_and_trivial() {
        let f = composition_factors(&cyclic(12));
        let orders: Vec<u64> = f.iter().map(|x| x.order.to_u64_digits()[0]).collect();
        assert_eq!(orders, vec![2, 2, 3]);
        assert!(composition_factors(&cyclic(1)).is_empty());
    }

    #[test]
    fn simple_quotient_examples() {
        assert_eq!(
            simple_quotients(&symmetric(3)),
            vec![SimpleFactorId::identify(2)]
        );
        assert_eq!(
            simple_quotients(&cyclic(6)),
            vec![SimpleFactorId::identify(2), SimpleFactorId::identify(3)]
        );
        let a5 = simple_quotients(&alternating(5));
        assert_eq!(a5.len(), 1);
        assert_eq!(a5[0].kind, a1(5));
    }

    #[test]
    fn unidentified_orders() {
        // A6 has order 360 = |PSL2(9)|, characteristic 3
        let id = SimpleFactorId::identify(360);
        assert!(id.is_unidentified());
        assert_eq!(SimpleFactorId::identify(168).kind, a1(7));
    }

    #[test]
    fn gl2_f7_has_psl2_7() {
        let g = general_linear(2, 7).unwrap();
        let f = composition_factors(&g.group);
        let nonabelian: Vec<_> = f
            .iter()
            .filter(|x| !matches!(x.kind, FactorKind::Cyclic { .. }))
            .collect();
        assert_eq!(nonabelian.len(), 1);
        assert_eq!(nonabelian[0].kind, a1(7));
        // 2016 = 2 * 168 * 6
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn random_series_agree() {
        let g = direct_product(&symmetric(4), &cyclic(6));
        let reference = composition_factors(&g);
        for seed in 0..8 {
            assert_eq!(composition_factors_seeded(&g, seed), reference);
        }
    }
}
