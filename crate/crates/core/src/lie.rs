//! Orders of the finite simple groups of Lie type in characteristic at least 5,
//! and the sorted catalogue of those orders (together with the cyclic group of
//! prime order) for a fixed characteristic.
//!
//! All arithmetic is exact. A catalogue entry may carry several witnesses when
//! non-isomorphic groups share an order; in characteristic >= 5 the only such
//! coincidence is `B_n(q)` / `C_n(q)` for `n >= 3`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    TrialityD4,
    G2,
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
}

impl Series {
    pub const ALL: [Series; 13] = [
        Series::A,
        Series::TwistedA,
        Series::B,
        Series::C,
        Series::D,
        Series::TwistedD,
        Series::TrialityD4,
        Series::G2,
        Series::F4,
        Series::E6,
        Series::TwistedE6,
        Series::E7,
        Series::E8,
    ];

    /// Smallest rank in the canonical (deduplicated) parametrization.
    pub fn min_rank(self) -> u32 {
        match self {
            Series::A => 1,
            Series::TwistedA | Series::B => 2,
            Series::C => 3,
            Series::D | Series::TwistedD => 4,
            s => s.fixed_rank().unwrap(),
        }
    }

    /// The rank of an exceptional series.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Series::TrialityD4 | Series::F4 => Some(4),
            Series::G2 => Some(2),
            Series::E6 | Series::TwistedE6 => Some(6),
            Series::E7 => Some(7),
            Series::E8 => Some(8),
            _ => None,
        }
    }

    /// Exponent of `q` in the group order.
    pub fn q_exponent(self, rank: u32) -> u64 {
        let n = rank as u64;
        match self {
            Series::A | Series::TwistedA => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D | Series::TwistedD => n * (n - 1),
            Series::TrialityD4 => 12,
            Series::G2 => 6,
            Series::F4 => 24,
            Series::E6 | Series::TwistedE6 => 36,
            Series::E7 => 63,
            Series::E8 => 120,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::TwistedA => "2A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::TwistedD => "2D",
            Series::TrialityD4 => "3D",
            Series::G2 => "G",
            Series::F4 => "F",
            Series::E6 | Series::E7 | Series::E8 => "E",
            Series::TwistedE6 => "2E",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fixed_rank() {
            Some(r) => write!(f, "{}{}", self.label(), r),
            None => f.write_str(self.label()),
        }
    }
}

/// A simple group of Lie type over the field with `ell^f` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieTypeSpec {
    pub series: Series,
    pub rank: u32,
    pub ell: u64,
    pub f: u32,
}

impl LieTypeSpec {
    pub fn new(series: Series, rank: u32, ell: u64, f: u32) -> Result<Self> {
        let spec = LieTypeSpec {
            series,
            rank,
            ell,
            f,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// An exceptional series at its fixed rank.
    pub fn exceptional(series: Series, ell: u64, f: u32) -> Result<Self> {
        let rank = series.fixed_rank().ok_or(Error::InvalidRank {
            series: series.to_string(),
            rank: 0,
        })?;
        Self::new(series, rank, ell, f)
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell < 5 || !is_prime(self.ell) {
            return Err(Error::InvalidEll(self.ell));
        }
        let ok = match self.series.fixed_rank() {
            Some(r) => self.rank == r,
            None => self.rank >= self.series.min_rank(),
        };
        if !ok || self.f == 0 {
            return Err(Error::InvalidRank {
                series: self.series.to_string(),
                rank: self.rank,
            });
        }
        Ok(())
    }

    pub fn q(&self) -> BigUint {
        BigUint::from(self.ell).pow(self.f)
    }
}

impl fmt::Display for LieTypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = if self.f == 1 {
            self.ell.to_string()
        } else {
            format!("{}^{}", self.ell, self.f)
        };
        match self.series.fixed_rank() {
            Some(_) => write!(f, "{}({})", self.series, q),
            None => write!(f, "{}{}({})", self.series, self.rank, q),
        }
    }
}

/// `|H(F_q)|` for the simply connected group of the given type.
pub fn order_simply_connected(spec: &LieTypeSpec) -> Result<BigUint> {
    spec.validate()?;
    let q = spec.q();
    let n = spec.rank as u64;
    let qp = |d: u64| -> BigUint { q.clone().pow(d) };
    let minus = |d: u64| qp(d) - 1u32;
    let plus = |d: u64| qp(d) + 1u32;
    let product = |it: &mut dyn Iterator<Item = BigUint>| it.fold(BigUint::one(), |a, b| a * b);

    let tail = match spec.series {
        Series::A => product(&mut (2..=n + 1).map(minus)),
        Series::TwistedA => {
            product(&mut (2..=n + 1).map(|i| if i % 2 == 0 { minus(i) } else { plus(i) }))
        }
        Series::B | Series::C => product(&mut (1..=n).map(|i| minus(2 * i))),
        Series::D => minus(n) * product(&mut (1..n).map(|i| minus(2 * i))),
        Series::TwistedD => plus(n) * product(&mut (1..n).map(|i| minus(2 * i))),
        Series::TrialityD4 => (qp(8) + qp(4) + 1u32) * minus(6) * minus(2),
        Series::G2 => minus(6) * minus(2),
        Series::F4 => minus(2) * minus(6) * minus(8) * minus(12),
        Series::E6 => product(&mut [2, 5, 6, 8, 9, 12].into_iter().map(minus)),
        Series::TwistedE6 => minus(2) * plus(5) * minus(6) * minus(8) * plus(9) * minus(12),
        Series::E7 => product(&mut [2, 6, 8, 10, 12, 14, 18].into_iter().map(minus)),
        Series::E8 => product(&mut [2, 8, 12, 14, 18, 20, 24, 30].into_iter().map(minus)),
    };
    Ok(qp(spec.series.q_exponent(spec.rank)) * tail)
}

/// Order of the centre of the simply connected group.
pub fn center_order(spec: &LieTypeSpec) -> Result<u64> {
    spec.validate()?;
    let q = spec.q();
    let n = spec.rank as u64;
    let gcd_with = |m: u64, x: BigUint| -> u64 {
        let r = x % BigUint::from(m);
        let r = if r.is_zero() { 0 } else { r.to_u64_digits()[0] };
        m.gcd(&r)
    };
    Ok(match spec.series {
        Series::A => gcd_with(n + 1, &q - 1u32),
        Series::TwistedA => gcd_with(n + 1, &q + 1u32),
        Series::B | Series::C | Series::E7 => gcd_with(2, &q - 1u32),
        Series::D => gcd_with(4, q.pow(n) - 1u32),
        Series::TwistedD => gcd_with(4, q.pow(n) + 1u32),
        Series::E6 => gcd_with(3, &q - 1u32),
        Series::TwistedE6 => gcd_with(3, &q + 1u32),
        Series::TrialityD4 | Series::G2 | Series::F4 | Series::E8 => 1,
    })
}

/// Order of the simple group: the simply connected order divided by the centre.
pub fn order_simple(spec: &LieTypeSpec) -> Result<BigUint> {
    let full = order_simply_connected(spec)?;
    let (quo, rem) = full.div_rem(&BigUint::from(center_order(spec)?));
    debug_assert!(rem.is_zero());
    Ok(quo)
}

/// A member of the catalogue: a Lie-type group or the cyclic group of order `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Witness {
    Cyclic { ell: u64 },
    Lie(LieTypeSpec),
}

impl Witness {
    pub fn ell(&self) -> u64 {
        match self {
            Witness::Cyclic { ell } => *ell,
            Witness::Lie(s) => s.ell,
        }
    }

    pub fn order(&self) -> BigUint {
        match self {
            Witness::Cyclic { ell } => BigUint::from(*ell),
            Witness::Lie(s) => order_simple(s).expect("catalogue specs are valid"),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Cyclic { ell } => write!(f, "Z/{ell}"),
            Witness::Lie(s) => s.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderEntry {
    pub order: BigUint,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCatalogue {
    pub ell: u64,
    pub bound: BigUint,
    pub entries: Vec<OrderEntry>,
}

impl SigmaCatalogue {
    pub fn orders(&self) -> Vec<BigUint> {
        self.entries.iter().map(|e| e.order.clone()).collect()
    }

    pub fn find(&self, order: &BigUint) -> Option<&OrderEntry> {
        self.entries
            .binary_search_by(|e| e.order.cmp(order))
            .ok()
            .map(|i| &self.entries[i])
    }
}

fn require_ell(ell: u64) -> Result<()> {
    if ell < 5 || !is_prime(ell) {
        return Err(Error::InvalidEll(ell));
    }
    Ok(())
}

/// All orders of simple groups in characteristic `ell` that are at most `bound`.
///
/// Each branch stops once `q^N` exceeds the bound: the simple order is at
/// least `q^N`, and `N` grows with both rank and `f`.
pub fn sigma_catalogue(ell: u64, bound: &BigUint) -> Result<SigmaCatalogue> {
    require_ell(ell)?;
    let mut entries: BTreeMap<BigUint, Vec<Witness>> = BTreeMap::new();
    if BigUint::from(ell) <= *bound {
        entries
            .entry(BigUint::from(ell))
            .or_default()
            .push(Witness::Cyclic { ell });
    }
    let l = BigUint::from(ell);
    for series in Series::ALL {
        let mut rank = series.min_rank();
        loop {
            let n_exp = series.q_exponent(rank);
            if l.clone().pow(n_exp) > *bound {
                break;
            }
            let mut f = 1u32;
            while l.clone().pow(n_exp * f as u64) <= *bound {
                let spec = LieTypeSpec {
                    series,
                    rank,
                    ell,
                    f,
                };
                let order = order_simple(&spec)?;
                if order <= *bound {
                    entries.entry(order).or_default().push(Witness::Lie(spec));
                }
                f += 1;
            }
            if series.fixed_rank().is_some() {
                break;
            }
            rank += 1;
        }
    }
    Ok(SigmaCatalogue {
        ell,
        bound: bound.clone(),
        entries: entries
            .into_iter()
            .map(|(order, witnesses)| OrderEntry { order, witnesses })
            .collect(),
    })
}

/// Every catalogue member of characteristic `ell` whose order is exactly `order`.
pub fn identify_simple_by_order(order: &BigUint, ell: u64) -> Vec<Witness> {
    if require_ell(ell).is_err() || order.is_zero() {
        return Vec::new();
    }
    sigma_catalogue(ell, order)
        .ok()
        .and_then(|c| c.find(order).map(|e| e.witnesses.clone()))
        .unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub order: BigUint,
    pub first: Vec<Witness>,
    pub second: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinReport {
    pub ell1: u64,
    pub ell2: u64,
    pub bound: BigUint,
    pub disjoint: bool,
    pub collisions: Vec<Collision>,
}

/// Compares the order sets of two catalogues up to `bound`.
pub fn artin_disjoint(ell1: u64, ell2: u64, bound: &BigUint) -> Result<ArtinReport> {
    require_ell(ell1)?;
    require_ell(ell2)?;
    if ell1 == ell2 {
        return Err(Error::SamePrime(ell1));
    }
    let a = sigma_catalogue(ell1, bound)?;
    let b = sigma_catalogue(ell2, bound)?;
    let collisions: Vec<Collision> = a
        .entries
        .iter()
        .filter_map(|e| {
            b.find(&e.order).map(|o| Collision {
                order: e.order.clone(),
                first: e.witnesses.clone(),
                second: o.witnesses.clone(),
            })
        })
        .collect();
    Ok(ArtinReport {
        ell1,
        ell2,
        bound: bound.clone(),
        disjoint: collisions.is_empty(),
        collisions,
    })
}
