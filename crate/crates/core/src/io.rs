//! JSON input formats for groups, families and inertia assignments.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::independence::{HomFamily, InertiaAssignment, InertiaPlace};
use crate::matrix::{make_matrix_group_capped, Matrix, MatrixGroup};
use crate::perm::Perm;

/// A permutation group by 1-based generator images, or a matrix group over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Perm {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Matrix {
        n: usize,
        p: u64,
        matrices: Vec<Vec<Vec<i64>>>,
    },
}

/// A group element: 1-based one-line images, or a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Perm(Vec<u32>),
    Matrix(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpec {
    pub label: String,
    pub codomain: GroupSpec,
    pub images: Vec<ElementSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub domain: GroupSpec,
    pub homs: Vec<HomSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceSpec {
    pub place: String,
    pub p: u64,
    #[serde(default)]
    pub subgroup_generators_per_label: BTreeMap<String, Vec<ElementSpec>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaSpec {
    pub places: Vec<PlaceSpec>,
}

/// An enumerated group, remembering its matrices when it was given by them.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: Arc<FiniteGroup>,
    pub matrices: Option<MatrixGroup>,
}

impl LoadedGroup {
    pub fn element(&self, spec: &ElementSpec) -> Result<Perm> {
        match (spec, &self.matrices) {
            (ElementSpec::Perm(images), _) => {
                let p = Perm::from_one_based(self.group.degree(), images)?;
                self.group.require(&p)?;
                Ok(p)
            }
            (ElementSpec::Matrix(rows), Some(mg)) => {
                let m = Matrix::from_rows(mg.p, rows)?;
                if m.n() != mg.n {
                    return Err(Error::InvalidMatrix(format!(
                        "expected {0}x{0} matrices",
                        mg.n
                    )));
                }
                let x = mg
                    .element_of(&m)
                    .ok_or_else(|| Error::ElementNotInGroup(mg.perm_of(&m).to_one_based()))?;
                Ok(self.group.element(x).clone())
            }
            (ElementSpec::Matrix(_), None) => {
                Err(Error::Parse("matrix given for a permutation group".into()))
            }
        }
    }
}

pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<LoadedGroup> {
    match spec {
        GroupSpec::Perm { degree, generators } => {
            if *degree == 0 {
                return Err(Error::Parse("degree must be positive".into()));
            }
            let gens = generators
                .iter()
                .map(|g| Perm::from_one_based(*degree, g))
                .collect::<Result<Vec<_>>>()?;
            Ok(LoadedGroup {
                group: Arc::new(FiniteGroup::generate(*degree, gens, cap)?),
                matrices: None,
            })
        }
        GroupSpec::Matrix { n, p, matrices } => {
            let mg = make_matrix_group_capped(*n, *p, matrices, cap)?;
            Ok(LoadedGroup {
                group: mg.group.clone(),
                matrices: Some(mg),
            })
        }
    }
}

pub fn parse_group(text: &str, cap: usize) -> Result<LoadedGroup> {
    let spec: GroupSpec = serde_json::from_str(text)?;
    build_group(&spec, cap)
}

/// Loads a family; also returns the domain so inertia files can refer to it.
pub fn parse_family(text: &str, cap: usize) -> Result<(HomFamily, LoadedGroup)> {
    let spec: FamilySpec = serde_json::from_str(text)?;
    let domain = build_group(&spec.domain, cap)?;
    let mut homs = Vec::with_capacity(spec.homs.len());
    let mut labels = Vec::with_capacity(spec.homs.len());
    for h in &spec.homs {
        let codomain = build_group(&h.codomain, cap)?;
        let images = h
            .images
            .iter()
            .map(|e| codomain.element(e))
            .collect::<Result<Vec<_>>>()?;
        homs.push(GroupHom::new(
            domain.group.clone(),
            codomain.group.clone(),
            &images,
        )?);
        labels.push(h.label.clone());
    }
    Ok((HomFamily::new(domain.group.clone(), homs, labels)?, domain))
}

pub fn parse_inertia(text: &str, domain: &LoadedGroup) -> Result<InertiaAssignment> {
    let spec: InertiaSpec = serde_json::from_str(text)?;
    let mut places = Vec::with_capacity(spec.places.len());
    for place in spec.places {
        let mut subgroups = BTreeMap::new();
        for (label, gens) in &place.subgroup_generators_per_label {
            let gens = gens
                .iter()
                .map(|e| domain.element(e))
                .collect::<Result<Vec<_>>>()?;
            subgroups.insert(label.clone(), domain.group.subgroup(&gens)?);
        }
        places.push(InertiaPlace {
            place: place.place,
            p: place.p,
            subgroups,
        });
    }
    Ok(InertiaAssignment { places })
}

fn perm_spec(g: &FiniteGroup) -> GroupSpec {
    GroupSpec::Perm {
        degree: g.degree(),
        generators: g.generators().iter().map(Perm::to_one_based).collect(),
    }
}

/// A family as a file, with every group written as a permutation group.
pub fn family_spec(family: &HomFamily) -> FamilySpec {
    FamilySpec {
        domain: perm_spec(family.domain()),
        homs: family
            .homs()
            .iter()
            .zip(family.labels())
            .map(|(h, label)| HomSpec {
                label: label.clone(),
                codomain: perm_spec(h.codomain()),
                images: h
                    .generator_images()
                    .into_iter()
                    .map(|p| ElementSpec::Perm(p.to_one_based()))
                    .collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::independence::{check_r, ro_index, truncation_scenario};

    #[test]
    fn group_formats() {
        let s3 = parse_group(
            r#"{"degree": 3, "generators": [[2,1,3],[2,3,1]]}"#,
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(s3.group.order(), 6);
        let sl = parse_group(
            r#"{"n": 2, "p": 5, "matrices": [[[1,1],[0,1]],[[1,0],[1,1]]]}"#,
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(sl.group.order(), 120);
        assert!(sl
            .element(&ElementSpec::Matrix(vec![vec![-1, 0], vec![0, -1]]))
            .is_ok());
        assert!(sl
            .element(&ElementSpec::Matrix(vec![vec![2, 0], vec![0, 1]]))
            .is_err());
    }

    #[test]
    fn bad_input() {
        assert!(matches!(parse_group("{", 10), Err(Error::Parse(_))));
        assert!(parse_group(r#"{"degree": 3, "generators": [[1,1,3]]}"#, 10).is_err());
        assert!(matches!(
            parse_group(
                r#"{"degree": 5, "generators": [[2,3,4,5,1],[2,1,3,4,5]]}"#,
                10
            ),
            Err(Error::CapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn family_with_matrix_codomain() {
        // SL2(3) onto itself, identity and the trivial map
        let text = r#"{
            "domain": {"n": 2, "p": 3, "matrices": [[[1,1],[0,1]],[[1,0],[1,1]]]},
            "homs": [
                {"label": "3", "codomain": {"n": 2, "p": 3, "matrices": [[[1,1],[0,1]],[[1,0],[1,1]]]},
                 "images": [[[1,1],[0,1]], [[1,0],[1,1]]]},
                {"label": "5", "codomain": {"degree": 1, "generators": []}, "images": [[1],[1]]}
            ]
        }"#;
        let (f, _) = parse_family(text, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(f.image_orders(), vec![24, 1]);
        assert!(check_r(&f));
    }

    #[test]
    fn family_round_trip() {
        let f = truncation_scenario(3, 3).unwrap();
        let text = serde_json::to_string(&family_spec(&f)).unwrap();
        let (g, _) = parse_family(&text, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(ro_index(&g), ro_index(&f));
        assert_eq!(g.labels(), f.labels());
    }

    #[test]
    fn inertia_file() {
        let family = r#"{"domain": {"degree": 3, "generators": [[2,1,3],[2,3,1]]},
            "homs": [{"label": "3", "codomain": {"degree": 3, "generators": [[2,1,3],[2,3,1]]},
                      "images": [[2,1,3],[2,3,1]]}]}"#;
        let (_, dom) = parse_family(family, DEFAULT_ORDER_CAP).unwrap();
        let inertia = parse_inertia(
            r#"{"places": [{"place": "v3", "p": 3, "subgroup_generators_per_label": {"3": [[2,3,1]]}}]}"#,
            &dom,
        )
        .unwrap();
        assert_eq!(inertia.places[0].subgroups["3"].order(), 3);
        assert!(parse_inertia(
            r#"{"places": [{"place": "v", "p": 3, "subgroup_generators_per_label": {"3": [[1,2]]}}]}"#,
            &dom
        )
        .is_err());
    }
}
