use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{is_power_of, is_prime};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::jordan::jordan_index;
use crate::lattice::{normal_closure_set, quotient_by_set};
use crate::sylow::plus_subgroup_set;

use super::report::SubgroupSummary;
use super::{diagonal_image, HomFamily};

/// One place: its residue characteristic and the inertia subgroup of the
/// domain designated for each family label. A missing label means the
/// inertia group is trivial for that index.
#[derive(Clone, Debug)]
pub struct InertiaPlace {
    pub place: String,
    pub p: u64,
    pub subgroups: BTreeMap<String, FiniteGroup>,
}

#[derive(Clone, Debug, Default)]
pub struct InertiaAssignment {
    pub places: Vec<InertiaPlace>,
}

impl InertiaAssignment {
    pub fn none() -> Self {
        Self::default()
    }
}

/// The decomposition `A <= G+ A <= G` for one index.
#[derive(Clone, Debug)]
pub struct SemistableComponent {
    pub label: String,
    pub ell: u64,
    /// Image of the normal closure of the inertia at places above `ell`.
    pub a: FiniteGroup,
    /// Generated by the Sylow `ell`-subgroups.
    pub g_plus: FiniteGroup,
    /// `G / G+ A`.
    pub h: Arc<FiniteGroup>,
    pub h_prime_to_ell: bool,
    pub h_jordan_index: usize,
    /// Every designated inertia group dies in `H`.
    pub lemma5_ok: bool,
}

#[derive(Clone, Debug)]
pub struct SemistableReport {
    pub components: Vec<SemistableComponent>,
    /// The diagonal image contains the direct sum of the `A`s.
    pub lemma4_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemistableComponentSummary {
    pub label: String,
    pub ell: u64,
    pub a: SubgroupSummary,
    pub g_plus: SubgroupSummary,
    pub h_order: usize,
    pub h_prime_to_ell: bool,
    pub h_jordan_index: usize,
    pub lemma5_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemistableSummary {
    pub components: Vec<SemistableComponentSummary>,
    pub lemma4_holds: bool,
}

impl SemistableReport {
    pub fn summary(&self) -> SemistableSummary {
        SemistableSummary {
            components: self
                .components
                .iter()
                .map(|c| SemistableComponentSummary {
                    label: c.label.clone(),
                    ell: c.ell,
                    a: SubgroupSummary::of(&c.a),
                    g_plus: SubgroupSummary::of(&c.g_plus),
                    h_order: c.h.order(),
                    h_prime_to_ell: c.h_prime_to_ell,
                    h_jordan_index: c.h_jordan_index,
                    lemma5_ok: c.lemma5_ok,
                })
                .collect(),
            lemma4_holds: self.lemma4_holds,
        }
    }
}

fn parse_label(label: &str) -> Result<u64> {
    label
        .trim()
        .parse::<u64>()
        .ok()
        .filter(|&l| is_prime(l))
        .ok_or_else(|| Error::InvalidLabel(label.to_string()))
}

/// Splits each image into the part generated by inertia above `ell`, the
/// part generated by `ell`-Sylows, and the quotient `H` of order prime to `ell`.
///
/// Codomains are replaced by images first.
pub fn semistable_decompose(
    family: &HomFamily,
    inertia: &InertiaAssignment,
) -> Result<SemistableReport> {
    let family = family.normalized();
    let gamma = family.domain();
    let ells = family
        .labels()
        .iter()
        .map(|l| parse_label(l))
        .collect::<Result<Vec<_>>>()?;

    // inertia subgroups as index sets of the domain, per place and per index
    let mut sets = Vec::with_capacity(inertia.places.len());
    for place in &inertia.places {
        let mut per_index = Vec::with_capacity(family.len());
        for label in family.labels() {
            per_index.push(match place.subgroups.get(label) {
                Some(sub) => Some(gamma.set_of(sub)?),
                None => None,
            });
        }
        sets.push(per_index);
    }

    let mut components = Vec::with_capacity(family.len());
    for (i, (rho, &ell)) in family.homs().iter().zip(&ells).enumerate() {
        let label = &family.labels()[i];
        let g = rho.codomain();

        let mut seed = Vec::new();
        for (place, per_index) in inertia.places.iter().zip(&sets) {
            let Some(set) = &per_index[i] else { continue };
            if place.p == ell {
                seed.extend(gamma.greedy_generators(set));
            } else {
                let order = rho.image_of_set(set).count_ones(..);
                if !is_power_of(order as u64, ell) {
                    return Err(Error::SemistabilityViolated {
                        place: place.place.clone(),
                        p: place.p,
                        label: label.clone(),
                        order,
                    });
                }
            }
        }
        let a = rho.image_of_set(&normal_closure_set(gamma, &seed));
        let g_plus = plus_subgroup_set(g, ell);
        let big = g.product_set(&g_plus, &a);
        let lemma5_ok = sets.iter().all(|per_index| {
            per_index[i]
                .as_ref()
                .is_none_or(|set| rho.image_of_set(set).is_subset(&big))
        });
        let h = quotient_by_set(g, &big).group;
        let h_prime_to_ell = !(h.order() as u64).is_multiple_of(ell);
        let (h_jordan_index, _) = jordan_index(&h);
        components.push(SemistableComponent {
            label: label.clone(),
            ell,
            a: g.subgroup_from_set(&a),
            g_plus: g.subgroup_from_set(&g_plus),
            h,
            h_prime_to_ell,
            h_jordan_index,
            lemma5_ok,
        });
    }

    let diag = diagonal_image(&family);
    let lemma4_holds = components.iter().enumerate().all(|(i, c)| {
        c.a.generators()
            .iter()
            .all(|x| diag.group.contains(&diag.embed(i, x)))
    });
    Ok(SemistableReport {
        components,
        lemma4_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::GroupHom;
    use crate::perm::Perm;
    use crate::standard::{cyclic, symmetric};

    fn s3_family(label: &str) -> HomFamily {
        let s3 = Arc::new(symmetric(3));
        HomFamily::new(s3.clone(), vec![GroupHom::identity(s3)], vec![label.into()]).unwrap()
    }

    fn place(p: u64, label: &str, gens: &[&[u32]]) -> InertiaPlace {
        let s3 = symmetric(3);
        let gens: Vec<Perm> = gens
            .iter()
            .map(|g| Perm::from_one_based(3, g).unwrap())
            .collect();
        let sub = s3.subgroup(&gens).unwrap();
        InertiaPlace {
            place: format!("v{p}"),
            p,
            subgroups: BTreeMap::from([(label.to_string(), sub)]),
        }
    }

    #[test]
    fn no_inertia() {
        let r = semistable_decompose(&s3_family("3"), &InertiaAssignment::none()).unwrap();
        let c = &r.components[0];
        assert_eq!((c.a.order(), c.g_plus.order(), c.h.order()), (1, 3, 2));
        assert!(c.lemma5_ok && c.h_prime_to_ell && r.lemma4_holds);

        let r = semistable_decompose(&s3_family("2"), &InertiaAssignment::none()).unwrap();
        assert_eq!(r.components[0].h.order(), 1);
    }

    #[test]
    fn inertia_onto_alternating() {
        let inertia = InertiaAssignment {
            places: vec![place(3, "3", &[&[2, 3, 1]])],
        };
        let r = semistable_decompose(&s3_family("3"), &inertia).unwrap();
        let c = &r.components[0];
        assert_eq!((c.a.order(), c.g_plus.order(), c.h.order()), (3, 3, 2));
        assert!(c.lemma5_ok && c.h_prime_to_ell);
        assert_eq!(c.h_jordan_index, 1);
    }

    #[test]
    fn inertia_above_ell_can_fill_the_quotient() {
        let inertia = InertiaAssignment {
            places: vec![place(3, "3", &[&[2, 1, 3]])],
        };
        let r = semistable_decompose(&s3_family("3"), &inertia).unwrap();
        let c = &r.components[0];
        assert_eq!((c.a.order(), c.h.order()), (6, 1));
    }

    #[test]
    fn wrong_characteristic_inertia() {
        let inertia = InertiaAssignment {
            places: vec![place(2, "3", &[&[2, 1, 3]])],
        };
        let err = semistable_decompose(&s3_family("3"), &inertia).unwrap_err();
        assert!(matches!(err, Error::SemistabilityViolated { order: 2, .. }));
        // a 3-group at a place of characteristic 2 is fine
        let inertia = InertiaAssignment {
            places: vec![place(2, "3", &[&[2, 3, 1]])],
        };
        assert!(semistable_decompose(&s3_family("3"), &inertia).is_ok());
    }

    #[test]
    fn labels_must_be_primes() {
        let err = semistable_decompose(&s3_family("x"), &InertiaAssignment::none()).unwrap_err();
        assert_eq!(err, Error::InvalidLabel("x".into()));
        assert!(semistable_decompose(&s3_family("4"), &InertiaAssignment::none()).is_err());
    }

    #[test]
    fn two_index_direct_sum() {
        // C6 with its reductions mod 2 and mod 3, inertia above 2 and above 3
        let c6 = Arc::new(cyclic(6));
        let hom = |m: usize| {
            let t = Arc::new(cyclic(m));
            GroupHom::new(c6.clone(), t.clone(), &[t.generators()[0].clone()]).unwrap()
        };
        let f = HomFamily::new(
            c6.clone(),
            vec![hom(2), hom(3)],
            vec!["2".into(), "3".into()],
        )
        .unwrap();
        let g = c6.generators()[0].clone();
        let sub = c6.subgroup(&[g]).unwrap();
        let inertia = InertiaAssignment {
            places: vec![InertiaPlace {
                place: "v".into(),
                p: 2,
                subgroups: BTreeMap::from([("2".to_string(), sub)]),
            }],
        };
        let r = semistable_decompose(&f, &inertia).unwrap();
        assert_eq!(r.components[0].a.order(), 2);
        assert_eq!(r.components[1].a.order(), 1);
        assert!(r.lemma4_holds);
    }
}
