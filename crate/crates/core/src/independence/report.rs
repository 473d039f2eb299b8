use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;

use super::semistable::SemistableSummary;
use super::{
    check_r, check_r1, check_r2, goursat_witness, independence_subgroup, lemma2_verdict, ro_index,
    Conclusion, HomFamily,
};

/// A subgroup by its order and (1-based) generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub generators: Vec<Vec<u32>>,
}

impl SubgroupSummary {
    pub fn of(g: &FiniteGroup) -> Self {
        SubgroupSummary {
            order: g.order(),
            generators: g.generators().iter().map(|p| p.to_one_based()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedQuotient {
    pub i: usize,
    pub j: usize,
    pub factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedQuotient {
    pub index: usize,
    pub factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Summary {
    pub applies: bool,
    pub pairwise_collisions: Vec<SharedQuotient>,
    pub flagged: Vec<FlaggedQuotient>,
    pub conclusion: Conclusion,
}

/// Goursat data for one pair of indices; `quotient_order` is absent when
/// the pair is independent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoursatPair {
    pub i: usize,
    pub j: usize,
    pub quotient_order: Option<usize>,
    pub verified: Option<bool>,
}

/// Everything the independence criteria say about one family. Big
/// integers are decimal strings so the document is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub labels: Vec<String>,
    pub domain_order: usize,
    pub image_orders: Vec<usize>,
    pub satisfies_r: bool,
    pub satisfies_r1: bool,
    pub satisfies_r2: bool,
    pub product_order: String,
    pub diagonal_order: String,
    pub ro_index: String,
    pub gamma_prime: SubgroupSummary,
    /// The family restricted to `gamma_prime` is independent.
    pub gamma_prime_restriction_independent: bool,
    pub lemma2: Lemma2Summary,
    pub goursat: Vec<GoursatPair>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub semistable: Option<SemistableSummary>,
}

pub fn analyze(family: &HomFamily) -> crate::Result<IndependenceReport> {
    let gamma_prime = independence_subgroup(family);
    let summary = SubgroupSummary::of(&gamma_prime);
    let restricted = family.restrict(std::sync::Arc::new(gamma_prime))?;
    let verdict = lemma2_verdict(family);
    let mut goursat = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let w = goursat_witness(family, i, j)?;
            goursat.push(GoursatPair {
                i,
                j,
                quotient_order: w.as_ref().map(|w| w.quotient.order()),
                verified: w.as_ref().map(|w| w.verified),
            });
        }
    }
    Ok(IndependenceReport {
        labels: family.labels().to_vec(),
        domain_order: family.domain().order(),
        image_orders: family.image_orders(),
        satisfies_r: check_r(family),
        satisfies_r1: check_r1(family),
        satisfies_r2: check_r2(family),
        product_order: family.product_order().to_string(),
        diagonal_order: family.diagonal_order().to_string(),
        ro_index: ro_index(family).to_string(),
        gamma_prime: summary,
        gamma_prime_restriction_independent: check_r(&restricted),
        lemma2: Lemma2Summary {
            applies: verdict.applies,
            pairwise_collisions: verdict
                .collisions
                .iter()
                .map(|(i, j, q)| SharedQuotient {
                    i: *i,
                    j: *j,
                    factor: q.to_string(),
                })
                .collect(),
            flagged: verdict
                .flagged
                .iter()
                .map(|(i, q)| FlaggedQuotient {
                    index: *i,
                    factor: q.to_string(),
                })
                .collect(),
            conclusion: verdict.conclusion,
        },
        goursat,
        seed: None,
        semistable: None,
    })
}
