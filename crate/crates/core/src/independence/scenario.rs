use std::sync::Arc;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::DEFAULT_ORDER_CAP;
use crate::hom::GroupHom;
use crate::standard::try_cyclic;

use super::HomFamily;

/// The cyclic group of order `p^m` with its reductions onto the cyclic groups
/// of order `p^i`, `i = 1..=m`.
///
/// No two of these maps are independent, and the index of the diagonal image
/// in the product is `p^(m(m-1)/2)`, which grows without bound in `m`.
pub fn truncation_scenario(p: u64, m: u32) -> Result<HomFamily> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::OutOfRange {
            n: p,
            reason: "p must be odd".into(),
        });
    }
    if m == 0 {
        return Err(Error::OutOfRange {
            n: 0,
            reason: "M must be at least 1".into(),
        });
    }
    let order = p
        .checked_pow(m)
        .filter(|&o| o as usize <= DEFAULT_ORDER_CAP)
        .ok_or(Error::CapExceeded {
            cap: DEFAULT_ORDER_CAP,
        })?;
    let domain = Arc::new(try_cyclic(order as usize)?);
    let mut homs = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=m {
        let target = Arc::new(try_cyclic(p.pow(i) as usize)?);
        homs.push(GroupHom::new(
            domain.clone(),
            target.clone(),
            &[target.generators()[0].clone()],
        )?);
        labels.push(format!("p^{i}"));
    }
    HomFamily::new(domain, homs, labels)
}
