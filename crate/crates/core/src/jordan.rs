//! Jordan indices of finite groups and the explicit bounds on them for
//! finite subgroups of `GL_n`.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElemSet, FiniteGroup};
use crate::lattice::{normal_subgroup_sets, quotient};
use crate::matrix::MatrixGroup;

/// Initial number of fractional bits when bracketing a square root.
pub const DEFAULT_SQRT_BITS: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanWitness {
    pub abelian_normal_subgroup: FiniteGroup,
    pub index: usize,
}

fn is_abelian_set(g: &FiniteGroup, set: &ElemSet) -> bool {
    let gens = g.greedy_generators(set);
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// The least index of an abelian normal subgroup, with the largest such
/// subgroup (first in canonical order on ties) as witness.
pub fn jordan_index(g: &FiniteGroup) -> (usize, JordanWitness) {
    if g.is_abelian() {
        return (
            1,
            JordanWitness {
                abelian_normal_subgroup: g.clone(),
                index: 1,
            },
        );
    }
    let abelian: Vec<ElemSet> = normal_subgroup_sets(g)
        .into_iter()
        .filter(|s| is_abelian_set(g, s))
        .collect();
    let largest = abelian.iter().map(|s| s.count_ones(..)).max().unwrap_or(1);
    let best = abelian
        .into_iter()
        .find(|s| s.count_ones(..) == largest)
        .expect("the trivial subgroup is abelian and normal");
    let index = g.order() / best.count_ones(..);
    (
        index,
        JordanWitness {
            abelian_normal_subgroup: g.subgroup_from_set(&best),
            index,
        },
    )
}

/// Whether `g` has an abelian normal subgroup of index at most `d`.
pub fn jordan_check(g: &FiniteGroup, d: usize) -> bool {
    jordan_index(g).0 <= d
}

/// `ceil((sqrt(8n) + 1)^(2n^2))`, exactly.
pub fn frobenius_bound(n: u64) -> BigUint {
    frobenius_bound_with_precision(n, DEFAULT_SQRT_BITS)
}

/// An interval `[lo, hi] / 2^scale` with integer endpoints.
struct Bracket {
    lo: BigUint,
    hi: BigUint,
    scale: i64,
}

impl Bracket {
    /// Product, with both ends cut back to `precision` bits: `lo` rounded
    /// down and `hi` rounded up, so the true product stays inside.
    fn mul(&self, other: &Bracket, precision: u64) -> Bracket {
        let mut lo = &self.lo * &other.lo;
        let mut hi = &self.hi * &other.hi;
        let mut scale = self.scale + other.scale;
        let excess = hi.bits().saturating_sub(precision);
        if excess > 0 {
            lo >>= excess;
            hi = (hi + ((BigUint::one() << excess) - 1u32)) >> excess;
            scale -= excess as i64;
        }
        Bracket { lo, hi, scale }
    }

    fn pow(&self, mut e: u64, precision: u64) -> Bracket {
        let mut acc = Bracket {
            lo: BigUint::one(),
            hi: BigUint::one(),
            scale: 0,
        };
        let mut base = Bracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            scale: self.scale,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, precision);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, precision);
            }
        }
        acc
    }
}

/// As [`frobenius_bound`], with `bits` guard bits beyond the size of the
/// result; the guard is doubled until the ceiling is determined.
pub fn frobenius_bound_with_precision(n: u64, bits: u64) -> BigUint {
    let m = BigUint::from(8 * n);
    let e = 2 * n * n;
    let root = m.sqrt();
    if &root * &root == m {
        return (root + 1u32).pow(e);
    }
    // sqrt(m) + 1 < root + 2, so the result has at most e * bits(root + 2) bits
    let size = e * (&root + 2u32).bits();
    let mut guard = bits.max(1);
    loop {
        let precision = size + guard;
        let k = precision;
        let a = (&m << (2 * k)).sqrt();
        let one = BigUint::one() << k;
        let x = Bracket {
            lo: &a + &one,
            hi: &a + &one + 1u32,
            scale: k as i64,
        };
        let y = x.pow(e, precision);
        if y.scale >= 0 {
            // sqrt(m) is irrational, so the value lies strictly inside the bracket
            let s = y.scale as u64;
            let floor_lo = &y.lo >> s;
            let ceil_hi = (&y.hi + ((BigUint::one() << s) - 1u32)) >> s;
            if ceil_hi == &floor_lo + 1u32 {
                return ceil_hi;
            }
        }
        guard *= 2;
    }
}

/// `(n + 1)!`, the optimal Jordan constant for `n >= 71`.
pub fn collins_bound(n: u64) -> Result<BigUint> {
    if n < 71 {
        return Err(Error::OutOfRange {
            n,
            reason: "the factorial value is only established for n >= 71".into(),
        });
    }
    Ok((2..=n + 1).fold(BigUint::one(), |acc, k| acc * k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub n: usize,
    pub p: u64,
    pub quotient_order: usize,
    pub jordan_index: usize,
    pub bound: BigUint,
    pub within_bound: bool,
}

/// Jordan index of `H/N` for a matrix group `H` over `F_p`, where the
/// quotient must have order prime to `p`.
pub fn theorem3prime_probe(h: &MatrixGroup, kernel: &FiniteGroup) -> Result<ProbeReport> {
    let q = quotient(&h.group, kernel)?;
    let order = q.group.order();
    if (order as u64).is_multiple_of(h.p) {
        return Err(Error::CharacteristicDividesOrder { p: h.p, order });
    }
    let (index, _) = jordan_index(&q.group);
    let bound = frobenius_bound(h.n as u64);
    Ok(ProbeReport {
        n: h.n,
        p: h.p,
        quotient_order: order,
        jordan_index: index,
        within_bound: BigUint::from(index) <= bound,
        bound,
    })
}
