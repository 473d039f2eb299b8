//! Independent recomputations of the exact values the library produces.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use indep_core::jordan::{collins_bound, frobenius_bound, frobenius_bound_with_precision};
use indep_core::lie::{
    center_order, order_simple, order_simply_connected, sigma_catalogue, LieTypeSpec, Series,
    Witness,
};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn gcd_big(a: u64, b: &BigUint) -> u64 {
    (b % big(a)).to_u64().unwrap().gcd(&a)
}

/// Simple group orders from the classical groups: `|GL|`, `|GU|`, `|Sp|`,
/// `|SO^{+-}|` divided down to the simple quotient, plus the exceptional tables.
fn classical_order(series: Series, n: u64, q: &BigUint) -> BigUint {
    let qp = |e: u64| q.clone().pow(e);
    let prod = |it: Box<dyn Iterator<Item = BigUint>>| it.fold(BigUint::one(), |a, b| a * b);
    match series {
        Series::A => {
            // |GL_{n+1}| / (q - 1) = |SL|, then divide by the scalars of determinant 1
            let m = n + 1;
            let gl = prod(Box::new((0..m).map(|i| qp(m) - qp(i))));
            let sl = gl / (q - 1u32);
            sl / big(gcd_big(m, &(q - 1u32)))
        }
        Series::TwistedA => {
            let m = n + 1;
            let gu = qp(m * (m - 1) / 2)
                * prod(Box::new((1..=m).map(|i| {
                    if i % 2 == 0 {
                        qp(i) - 1u32
                    } else {
                        qp(i) + 1u32
                    }
                })));
            let su = gu / (q + 1u32);
            su / big(gcd_big(m, &(q + 1u32)))
        }
        Series::B | Series::C => {
            let sp = qp(n * n) * prod(Box::new((1..=n).map(|i| qp(2 * i) - 1u32)));
            sp / 2u32
        }
        Series::D | Series::TwistedD => {
            let eps_plus = series == Series::D;
            let top = if eps_plus { qp(n) - 1u32 } else { qp(n) + 1u32 };
            let so =
                big(2) * qp(n * (n - 1)) * &top * prod(Box::new((1..n).map(|i| qp(2 * i) - 1u32)));
            so / (big(2) * big(gcd_big(4, &top)))
        }
        Series::TrialityD4 => qp(12) * (qp(8) + qp(4) + 1u32) * (qp(6) - 1u32) * (qp(2) - 1u32),
        Series::G2 => qp(6) * (qp(6) - 1u32) * (qp(2) - 1u32),
        Series::F4 => {
            qp(24)
                * [12u64, 8, 6, 2]
                    .iter()
                    .map(|&d| qp(d) - 1u32)
                    .product::<BigUint>()
        }
        Series::E6 => {
            qp(36)
                * [12u64, 9, 8, 6, 5, 2]
                    .iter()
                    .map(|&d| qp(d) - 1u32)
                    .product::<BigUint>()
                / big(gcd_big(3, &(q - 1u32)))
        }
        Series::TwistedE6 => {
            qp(36)
                * (qp(12) - 1u32)
                * (qp(9) + 1u32)
                * (qp(8) - 1u32)
                * (qp(6) - 1u32)
                * (qp(5) + 1u32)
                * (qp(2) - 1u32)
                / big(gcd_big(3, &(q + 1u32)))
        }
        Series::E7 => {
            qp(63)
                * [18u64, 14, 12, 10, 8, 6, 2]
                    .iter()
                    .map(|&d| qp(d) - 1u32)
                    .product::<BigUint>()
                / 2u32
        }
        Series::E8 => {
            qp(120)
                * [30u64, 24, 20, 18, 14, 12, 8, 2]
                    .iter()
                    .map(|&d| qp(d) - 1u32)
                    .product::<BigUint>()
        }
    }
}

/// Smallest rank at which each series is listed without duplicates.
fn ranks(series: Series) -> Vec<u64> {
    match series {
        Series::A => (1..=12).collect(),
        Series::TwistedA => (2..=12).collect(),
        Series::B => (2..=12).collect(),
        Series::C => (3..=12).collect(),
        Series::D | Series::TwistedD => (4..=12).collect(),
        Series::TrialityD4 | Series::F4 => vec![4],
        Series::G2 => vec![2],
        Series::E6 | Series::TwistedE6 => vec![6],
        Series::E7 => vec![7],
        Series::E8 => vec![8],
    }
}

/// Brute force over rank <= 12 and f <= 10.
fn brute_catalogue(ell: u64, bound: &BigUint) -> BTreeMap<BigUint, Vec<(Series, u64, u64)>> {
    let mut out: BTreeMap<BigUint, Vec<(Series, u64, u64)>> = BTreeMap::new();
    out.entry(big(ell)).or_default();
    for series in Series::ALL {
        for n in ranks(series) {
            for f in 1..=10u64 {
                let q = big(ell).pow(f as u32);
                let order = classical_order(series, n, &q);
                if order <= *bound {
                    out.entry(order).or_default().push((series, n, f));
                }
            }
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

#[test]
fn catalogue_matches_brute_force() {
    let cases = [
        (5, "10000000"),
        (5, "1000000000000"),
        (7, "1000000000000"),
        (11, "1000000000000"),
        (13, "100000000000000"),
    ];
    for (ell, bound) in cases {
        let bound: BigUint = bound.parse().unwrap();
        let cat = sigma_catalogue(ell, &bound).unwrap();
        let brute = brute_catalogue(ell, &bound);
        let got: BTreeMap<BigUint, Vec<(Series, u64, u64)>> = cat
            .entries
            .iter()
            .map(|e| {
                let mut ws: Vec<(Series, u64, u64)> = e
                    .witnesses
                    .iter()
                    .filter_map(|w| match w {
                        Witness::Lie(s) => Some((s.series, s.rank as u64, s.f as u64)),
                        Witness::Cyclic { .. } => None,
                    })
                    .collect();
                ws.sort();
                (e.order.clone(), ws)
            })
            .collect();
        assert_eq!(got, brute, "ell = {ell}, bound = {bound}");
    }
}

#[test]
fn simple_times_centre_is_simply_connected() {
    for series in Series::ALL {
        for n in ranks(series).into_iter().take(4) {
            for ell in [5, 7, 11] {
                for f in 1..=2 {
                    let spec = LieTypeSpec::new(series, n as u32, ell, f).unwrap();
                    let s = order_simple(&spec).unwrap();
                    let c = center_order(&spec).unwrap();
                    assert_eq!(&s * c, order_simply_connected(&spec).unwrap(), "{spec}");
                    assert_eq!(s, classical_order(series, n, &spec.q()), "{spec}");
                    // the order is divisible by q^N
                    let qn = spec.q().pow(series.q_exponent(n as u32));
                    assert!((&s % &qn).is_zero(), "{spec}");
                }
            }
        }
    }
}

/// `(1 + sqrt m)^e = a + b sqrt m`, computed in `Z[sqrt m]`.
fn power_in_quadratic_ring(m: u64, e: u64) -> (BigUint, BigUint) {
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    let m = big(m);
    for _ in 0..e {
        // (a + b r)(1 + r) = (a + b m) + (a + b) r
        let na = &a + &b * &m;
        let nb = &a + &b;
        a = na;
        b = nb;
    }
    (a, b)
}

fn frobenius_oracle(n: u64) -> BigUint {
    let m = 8 * n;
    let e = 2 * n * n;
    let r = (m as f64).sqrt().round() as u64;
    if r * r == m {
        return big(r + 1).pow(e as u32);
    }
    let (a, b) = power_in_quadratic_ring(m, e);
    // b sqrt(m) is irrational, so the ceiling is a + floor(b sqrt m) + 1
    a + (&b * &b * big(m)).sqrt() + 1u32
}

#[test]
fn frobenius_matches_quadratic_ring() {
    for n in 1..=12 {
        assert_eq!(frobenius_bound(n), frobenius_oracle(n), "n = {n}");
    }
    assert_eq!(frobenius_bound(1), big(15));
    assert_eq!(frobenius_bound(2), big(390625));
}

#[test]
fn frobenius_large_n_and_low_precision() {
    for n in [18, 40, 71] {
        assert_eq!(
            frobenius_bound_with_precision(n, 1),
            frobenius_oracle(n),
            "n = {n}"
        );
    }
}

#[test]
fn frobenius_is_monotone_for_small_n() {
    let values: Vec<BigUint> = (1..=8).map(frobenius_bound).collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]));
}

/// `m!` from Legendre's formula.
fn factorial_by_legendre(m: u64) -> BigUint {
    let primes: Vec<u64> = (2..=m)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect();
    primes.into_iter().fold(BigUint::one(), |acc, p| {
        let mut v = 0u32;
        let mut pk = p;
        while pk <= m {
            v += (m / pk) as u32;
            pk *= p;
        }
        acc * big(p).pow(v)
    })
}

#[test]
fn collins_is_the_factorial() {
    let c = collins_bound(71).unwrap();
    assert_eq!(c, factorial_by_legendre(72));
    assert_eq!(c.to_string().len(), 104);
    assert_eq!(collins_bound(100).unwrap(), factorial_by_legendre(101));
    assert!(collins_bound(70).is_err());
}
