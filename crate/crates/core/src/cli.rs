//! The commands behind the `indep` binary. Every command renders its whole
//! output to a string first, so a failure never leaves a partial table.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::{Num, Pow};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composition::{
    composition_factors, composition_factors_seeded, FactorKind, SimpleFactorId,
};
use crate::error::{Error, Result};
use crate::group::DEFAULT_ORDER_CAP;
use crate::independence::{
    analyze, semistable_decompose, truncation_scenario, IndependenceReport, SubgroupSummary,
};
use crate::io::{family_spec, parse_family, parse_group, parse_inertia};
use crate::jordan::{
    collins_bound, frobenius_bound_with_precision, jordan_index, DEFAULT_SQRT_BITS,
};
use crate::lie::{sigma_catalogue, SigmaCatalogue, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Table,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub order_cap: usize,
    pub seed: u64,
    pub output_mode: OutputMode,
    /// Starting precision, in fractional bits, for square roots in bounds.
    pub sqrt_bits: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order_cap: DEFAULT_ORDER_CAP,
            seed: 0,
            output_mode: OutputMode::Table,
            sqrt_bits: DEFAULT_SQRT_BITS,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.order_cap == 0 {
            return Err(Error::OutOfRange {
                n: 0,
                reason: "the order cap must be at least 1".into(),
            });
        }
        if self.sqrt_bits == 0 {
            return Err(Error::OutOfRange {
                n: 0,
                reason: "precision must be at least 1 bit".into(),
            });
        }
        Ok(())
    }

    fn render<T: Serialize>(&self, value: &T, table: impl FnOnce(&T) -> String) -> Result<String> {
        match self.output_mode {
            OutputMode::Machine => Ok(serde_json::to_string_pretty(value)? + "\n"),
            OutputMode::Table => Ok(table(value)),
        }
    }
}

/// Accepts `1000000`, `10^6` and `3*10^7`.
pub fn parse_bound(text: &str) -> Result<BigUint> {
    let bad = || Error::Parse(format!("cannot read {text:?} as a bound"));
    let atom = |s: &str| -> Result<BigUint> {
        match s.split_once('^') {
            Some((b, e)) => {
                let b = BigUint::from_str_radix(b.trim(), 10).map_err(|_| bad())?;
                let e: u32 = e.trim().parse().map_err(|_| bad())?;
                Ok(b.pow(e))
            }
            None => BigUint::from_str_radix(s.trim(), 10).map_err(|_| bad()),
        }
    };
    text.split('*')
        .map(atom)
        .try_fold(BigUint::from(1u32), |acc, x| Ok(acc * x?))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_names(ws: &[Witness]) -> Vec<String> {
    ws.iter().map(Witness::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaRow {
    pub order: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaOutput {
    pub ell: u64,
    pub bound: String,
    pub entries: Vec<SigmaRow>,
}

impl From<&SigmaCatalogue> for SigmaOutput {
    fn from(c: &SigmaCatalogue) -> Self {
        SigmaOutput {
            ell: c.ell,
            bound: c.bound.to_string(),
            entries: c
                .entries
                .iter()
                .map(|e| SigmaRow {
                    order: e.order.to_string(),
                    witnesses: witness_names(&e.witnesses),
                })
                .collect(),
        }
    }
}

/// One line per order: the order, then every group of that order.
pub fn cmd_sigma(cfg: &RunConfig, ell: u64, bound: &BigUint) -> Result<String> {
    let out = SigmaOutput::from(&sigma_catalogue(ell, bound)?);
    cfg.render(&out, |o| {
        let width = o.entries.iter().map(|e| e.order.len()).max().unwrap_or(0);
        let mut s = String::new();
        for e in &o.entries {
            let _ = writeln!(s, "{:>width$}  {}", e.order, e.witnesses.join(", "));
        }
        s
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionRow {
    pub order: String,
    pub first: Vec<String>,
    pub second: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinPair {
    pub ell1: u64,
    pub ell2: u64,
    pub collisions: Vec<CollisionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinOutput {
    pub bound: String,
    pub ells: Vec<u64>,
    pub pairs: Vec<ArtinPair>,
    pub disjoint: bool,
}

/// Pairwise comparison of catalogues; catalogues are built in parallel and
/// compared in the order the primes were given.
pub fn artin_table(ells: &[u64], bound: &BigUint) -> Result<ArtinOutput> {
    if ells.len() < 2 {
        return Err(Error::Parse("give at least two primes".into()));
    }
    for (i, a) in ells.iter().enumerate() {
        if ells[..i].contains(a) {
            return Err(Error::SamePrime(*a));
        }
    }
    let catalogues: Vec<SigmaCatalogue> = ells
        .par_iter()
        .map(|&ell| sigma_catalogue(ell, bound))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for i in 0..ells.len() {
        for j in i + 1..ells.len() {
            let collisions = catalogues[i]
                .entries
                .iter()
                .filter_map(|e| {
                    catalogues[j].find(&e.order).map(|o| CollisionRow {
                        order: e.order.to_string(),
                        first: witness_names(&e.witnesses),
                        second: witness_names(&o.witnesses),
                    })
                })
                .collect();
            pairs.push(ArtinPair {
                ell1: ells[i],
                ell2: ells[j],
                collisions,
            });
        }
    }
    let disjoint = pairs.iter().all(|p| p.collisions.is_empty());
    Ok(ArtinOutput {
        bound: bound.to_string(),
        ells: ells.to_vec(),
        pairs,
        disjoint,
    })
}

pub fn cmd_artin(cfg: &RunConfig, ells: &[u64], bound: &BigUint) -> Result<String> {
    let out = artin_table(ells, bound)?;
    cfg.render(&out, |o| {
        let mut s = String::new();
        let _ = writeln!(s, "bound: {}", o.bound);
        let w = o
            .ells
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let _ = write!(s, "{:>w$}", "");
        for e in &o.ells {
            let _ = write!(s, " {e:>w$}");
        }
        s.push('\n');
        for &a in &o.ells {
            let _ = write!(s, "{a:>w$}");
            for &b in &o.ells {
                let cell = o
                    .pairs
                    .iter()
                    .find(|p| (p.ell1, p.ell2) == (a, b) || (p.ell1, p.ell2) == (b, a))
                    .map_or("-".to_string(), |p| p.collisions.len().to_string());
                let _ = write!(s, " {cell:>w$}");
            }
            s.push('\n');
        }
        for p in &o.pairs {
            for c in &p.collisions {
                let _ = writeln!(
                    s,
                    "collision {}/{} at order {}: {} vs {}",
                    p.ell1,
                    p.ell2,
                    c.order,
                    c.first.join(", "),
                    c.second.join(", ")
                );
            }
        }
        let _ = writeln!(s, "disjoint: {}", yes(o.disjoint));
        s
    })
}

fn report_table(r: &IndependenceReport) -> String {
    let mut s = String::new();
    let list = |v: &[usize]| {
        v.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    let rows: Vec<(&str, String)> = vec![
        ("labels", r.labels.join(", ")),
        ("domain order", r.domain_order.to_string()),
        ("image orders", list(&r.image_orders)),
        ("independent (R)", yes(r.satisfies_r).into()),
        ("G = N_i N'_i (R1)", yes(r.satisfies_r1).into()),
        ("G = <N'_i> (R2)", yes(r.satisfies_r2).into()),
        ("product order", r.product_order.clone()),
        ("diagonal order", r.diagonal_order.clone()),
        ("index", r.ro_index.clone()),
        ("G' order", r.gamma_prime.order.to_string()),
        (
            "independent on G'",
            yes(r.gamma_prime_restriction_independent).into(),
        ),
        (
            "disjoint quotients",
            format!(
                "{} ({})",
                yes(r.lemma2.applies),
                match r.lemma2.conclusion {
                    crate::independence::Conclusion::Independent => "independent",
                    crate::independence::Conclusion::Inconclusive => "inconclusive",
                }
            ),
        ),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<22}{v}");
    }
    for c in &r.lemma2.pairwise_collisions {
        let _ = writeln!(s, "  shared quotient {},{}: {}", c.i, c.j, c.factor);
    }
    for f in &r.lemma2.flagged {
        let _ = writeln!(s, "  unidentified quotient of {}: {}", f.index, f.factor);
    }
    for g in &r.goursat {
        let v = match (g.quotient_order, g.verified) {
            (Some(q), Some(ok)) => format!(
                "common quotient of order {q} ({})",
                if ok { "verified" } else { "NOT verified" }
            ),
            _ => "independent".into(),
        };
        let _ = writeln!(s, "{:<22}{v}", format!("pair {},{}", g.i, g.j));
    }
    if let Some(st) = &r.semistable {
        let _ = writeln!(s, "semistable decomposition");
        let _ = writeln!(
            s,
            "  {:<8}{:>6}{:>8}{:>8}{:>8}  {:<14}{:<11}inertia dies in H",
            "label", "ell", "|A|", "|G+|", "|H|", "prime to ell", "jordan(H)"
        );
        for c in &st.components {
            let _ = writeln!(
                s,
                "  {:<8}{:>6}{:>8}{:>8}{:>8}  {:<14}{:<11}{}",
                c.label,
                c.ell,
                c.a.order,
                c.g_plus.order,
                c.h_order,
                yes(c.h_prime_to_ell),
                c.h_jordan_index,
                yes(c.lemma5_ok)
            );
        }
        let _ = writeln!(
            s,
            "  diagonal image contains the product of the A's: {}",
            yes(st.lemma4_holds)
        );
    }
    s
}

pub fn cmd_indep(cfg: &RunConfig, family_text: &str, inertia_text: Option<&str>) -> Result<String> {
    let (family, domain) = parse_family(family_text, cfg.order_cap)?;
    let mut report = analyze(&family)?;
    report.seed = Some(cfg.seed);
    if let Some(text) = inertia_text {
        let inertia = parse_inertia(text, &domain)?;
        report.semistable = Some(semistable_decompose(&family, &inertia)?.summary());
    }
    cfg.render(&report, report_table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRow {
    pub order: String,
    pub kind: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorsOutput {
    pub order: usize,
    pub factors: Vec<FactorRow>,
    /// A second composition series, chosen at random from the seed, gave the same factors.
    pub random_series_agrees: bool,
    pub seed: u64,
}

fn factor_row(f: &SimpleFactorId) -> FactorRow {
    let (kind, witnesses) = match &f.kind {
        FactorKind::Cyclic { p } => ("cyclic", vec![format!("Z/{p}")]),
        FactorKind::Lie { witnesses } => {
            ("lie", witnesses.iter().map(ToString::to_string).collect())
        }
        FactorKind::Unidentified => ("unidentified", Vec::new()),
    };
    FactorRow {
        order: f.order.to_string(),
        kind: kind.into(),
        witnesses,
    }
}

pub fn cmd_factors(cfg: &RunConfig, group_text: &str) -> Result<String> {
    let g = parse_group(group_text, cfg.order_cap)?.group;
    let factors = composition_factors(&g);
    let out = FactorsOutput {
        order: g.order(),
        factors: factors.iter().map(factor_row).collect(),
        random_series_agrees: composition_factors_seeded(&g, cfg.seed) == factors,
        seed: cfg.seed,
    };
    cfg.render(&out, |o| {
        let mut s = String::new();
        let _ = writeln!(s, "group order {}", o.order);
        let w = o.factors.iter().map(|f| f.order.len()).max().unwrap_or(1);
        for f in &o.factors {
            let label = if f.witnesses.is_empty() {
                "unidentified".to_string()
            } else {
                f.witnesses.join(" | ")
            };
            let _ = writeln!(s, "{:>w$}  {label}", f.order);
        }
        let _ = writeln!(
            s,
            "random series (seed {}) agrees: {}",
            o.seed,
            yes(o.random_series_agrees)
        );
        s
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanOutput {
    pub order: usize,
    pub jordan_index: usize,
    pub witness: SubgroupSummary,
    /// The threshold checked, if any: given with `--d`, or the default bound
    /// for matrix groups.
    pub d: Option<String>,
    pub d_source: Option<String>,
    pub holds: Option<bool>,
}

pub fn cmd_jordan(cfg: &RunConfig, group_text: &str, d: Option<&BigUint>) -> Result<String> {
    let loaded = parse_group(group_text, cfg.order_cap)?;
    let (index, witness) = jordan_index(&loaded.group);
    let (d, source) = match (d, &loaded.matrices) {
        (Some(d), _) => (Some(d.clone()), Some("given")),
        (None, Some(m)) => (
            Some(frobenius_bound_with_precision(m.n as u64, cfg.sqrt_bits)),
            Some("frobenius_bound"),
        ),
        (None, None) => (None, None),
    };
    let out = JordanOutput {
        order: loaded.group.order(),
        jordan_index: index,
        witness: SubgroupSummary::of(&witness.abelian_normal_subgroup),
        holds: d.as_ref().map(|d| BigUint::from(index) <= *d),
        d: d.map(|d| d.to_string()),
        d_source: source.map(str::to_string),
    };
    cfg.render(&out, |o| {
        let mut s = String::new();
        let _ = writeln!(s, "{:<22}{}", "group order", o.order);
        let _ = writeln!(s, "{:<22}{}", "jordan index", o.jordan_index);
        let _ = writeln!(s, "{:<22}{}", "abelian normal order", o.witness.order);
        if let (Some(d), Some(src), Some(h)) = (&o.d, &o.d_source, o.holds) {
            let _ = writeln!(s, "{:<22}{d} ({src})", "d");
            let _ = writeln!(s, "{:<22}{}", "index <= d", yes(h));
        }
        s
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsOutput {
    pub n: u64,
    pub frobenius_bound: String,
    pub collins_bound: Option<String>,
}

pub fn bounds(cfg: &RunConfig, n: u64) -> Result<BoundsOutput> {
    if n == 0 {
        return Err(Error::OutOfRange {
            n,
            reason: "n must be at least 1".into(),
        });
    }
    Ok(BoundsOutput {
        n,
        frobenius_bound: frobenius_bound_with_precision(n, cfg.sqrt_bits).to_string(),
        collins_bound: if n >= 71 {
            Some(collins_bound(n)?.to_string())
        } else {
            None
        },
    })
}

pub fn cmd_bounds(cfg: &RunConfig, n: u64) -> Result<String> {
    let out = bounds(cfg, n)?;
    cfg.render(&out, |o| {
        let mut s = String::new();
        let _ = writeln!(s, "n            {}", o.n);
        let _ = writeln!(s, "frobenius    {}", o.frobenius_bound);
        if let Some(c) = &o.collins_bound {
            let _ = writeln!(s, "collins      {c}");
        }
        s
    })
}

/// Builds the truncation family, optionally writes it as a family file,
/// and reports on it.
pub fn cmd_scenario(cfg: &RunConfig, p: u64, m: u32, out: Option<&Path>) -> Result<String> {
    let family = truncation_scenario(p, m)?;
    let mut report = analyze(&family)?;
    report.seed = Some(cfg.seed);
    let text = cfg.render(&report, |r| {
        format!("truncation family p = {p}, M = {m}\n{}", report_table(r))
    })?;
    if let Some(path) = out {
        std::fs::write(
            path,
            serde_json::to_string_pretty(&family_spec(&family))? + "\n",
        )?;
    }
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn machine() -> RunConfig {
        RunConfig {
            output_mode: OutputMode::Machine,
            ..RunConfig::default()
        }
    }

    #[test]
    fn bounds_parse() {
        assert_eq!(parse_bound("1000000").unwrap(), BigUint::from(1_000_000u32));
        assert_eq!(parse_bound("10^6").unwrap(), BigUint::from(1_000_000u32));
        assert_eq!(parse_bound("3*10^7").unwrap(), BigUint::from(30_000_000u32));
        assert!(parse_bound("1e6").is_err());
        assert!(parse_bound("").is_err());
    }

    #[test]
    fn sigma_table() {
        let s = cmd_sigma(&RunConfig::default(), 5, &parse_bound("10^6").unwrap()).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[5].trim_start().starts_with("976500"));
        let m = cmd_sigma(&machine(), 5, &parse_bound("10^6").unwrap()).unwrap();
        let back: SigmaOutput = serde_json::from_str(&m).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap() + "\n", m);
    }

    #[test]
    fn artin_output() {
        let s = cmd_artin(
            &RunConfig::default(),
            &[5, 7],
            &parse_bound("10^8").unwrap(),
        )
        .unwrap();
        assert!(s.contains("disjoint: yes"));
        assert!(cmd_artin(&RunConfig::default(), &[5, 5], &BigUint::from(10u32)).is_err());
        assert!(cmd_artin(&RunConfig::default(), &[5], &BigUint::from(10u32)).is_err());
    }

    #[test]
    fn scenario_index() {
        let m = cmd_scenario(&machine(), 3, 4, None).unwrap();
        let r: IndependenceReport = serde_json::from_str(&m).unwrap();
        assert_eq!(r.ro_index, "729");
        let t = cmd_scenario(&RunConfig::default(), 3, 4, None).unwrap();
        assert!(t
            .lines()
            .any(|l| l.starts_with("index") && l.ends_with("729")));
    }

    #[test]
    fn bounds_output() {
        let b = bounds(&RunConfig::default(), 2).unwrap();
        assert_eq!(b.frobenius_bound, "390625");
        assert!(b.collins_bound.is_none());
        assert_eq!(
            bounds(&RunConfig::default(), 71)
                .unwrap()
                .collins_bound
                .unwrap()
                .len(),
            104
        );
        assert!(bounds(&RunConfig::default(), 0).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        assert!(RunConfig {
            order_cap: 0,
            ..RunConfig::default()
        }
        .validate()
        .is_err());
    }
}
