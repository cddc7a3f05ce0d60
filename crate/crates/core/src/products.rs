//! q-Pochhammer products, theta functions at monomial arguments, and the
//! named Rogers-Ramanujan-style product families.
//!
//! Infinite products are expanded factor by factor with early termination
//! once a factor's exponent exceeds the truncation order. Factors with
//! nonpositive exponents (finitely many) are exact binomials and are
//! multiplied in with enough working-order slack that the result is valid
//! to the requested order.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::error::{QError, Result};
use crate::series::{CoefRing, QSeries, Rational};

/// Π_{i=0}^{count-1} (1 − coef·q^{a_exp + i·step}).
#[derive(Clone, Debug, PartialEq)]
pub struct PochSpec<C: CoefRing> {
    pub coef: C,
    pub a_exp: i64,
    pub step: i64,
    pub count: Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(u32),
    Infinite,
}

impl<C: CoefRing> PochSpec<C> {
    pub fn infinite(coef: C, a_exp: i64, step: i64) -> Self {
        PochSpec { coef, a_exp, step, count: Count::Infinite }
    }

    pub fn finite(coef: C, a_exp: i64, step: i64, count: u32) -> Self {
        PochSpec { coef, a_exp, step, count: Count::Finite(count) }
    }
}

/// Expand a Pochhammer product to the requested validity order.
pub fn poch<C: CoefRing>(spec: &PochSpec<C>, order: i64) -> Result<QSeries<C>> {
    let exps: Vec<i64> = match spec.count {
        Count::Finite(n) => (0..n as i64).map(|i| spec.a_exp + i * spec.step).collect(),
        Count::Infinite => {
            if spec.step < 1 {
                return Err(QError::Divergence);
            }
            let mut v = Vec::new();
            let mut e = spec.a_exp;
            // Include every factor that can touch coefficients <= order;
            // factors with e > order only affect higher terms.
            while e <= order {
                v.push(e);
                e += spec.step;
            }
            v
        }
    };
    // Each negative-exponent binomial costs one unit of validity per |e|.
    let slack: i64 = exps.iter().map(|e| (-e).max(0)).sum();
    let mut acc = QSeries::one(order + slack);
    for e in exps {
        acc = acc.mul_binomial(&spec.coef, e);
    }
    Ok(if acc.order() > order { acc.truncated(order) } else { acc })
}

/// Π_i (q^{e_i}; q^modulus)_∞ over rationals, the workhorse for every
/// displayed product.
pub fn poch_inf_list(exps: &[i64], modulus: i64, order: i64) -> QSeries<Rational> {
    let mut acc = QSeries::one(order + total_slack(exps, modulus, order));
    for &e in exps {
        let spec = PochSpec::infinite(Rational::one(), e, modulus);
        let factor = poch(&spec, acc.order()).expect("positive step");
        acc = acc.mul(&factor);
    }
    if acc.order() > order {
        acc.truncated(order)
    } else {
        acc
    }
}

fn total_slack(exps: &[i64], modulus: i64, order: i64) -> i64 {
    let mut slack = 0;
    for &a in exps {
        let mut e = a;
        while e <= order {
            slack += (-e).max(0);
            e += modulus;
        }
    }
    slack
}

/// j(q^b; q^M) = (q^b, q^{M−b}, q^M; q^M)_∞, with exact handling of
/// negative b. Vanishes identically (and errors) when b ≡ 0 (mod M).
pub fn jtheta(b: i64, modulus: i64, order: i64) -> Result<QSeries<Rational>> {
    assert!(modulus >= 1);
    if b.rem_euclid(modulus) == 0 {
        return Err(QError::ZeroTheta { b, modulus });
    }
    Ok(poch_inf_list(&[b, modulus - b, modulus], modulus, order))
}

/// The named product families used throughout the identity registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductName {
    /// (q;q)_∞
    Euler,
    /// 1/((q;q⁵)(q⁴;q⁵))_∞ and 1/((q²;q⁵)(q³;q⁵))_∞
    G,
    H,
    /// mod-7 analogues 1/((q;q⁷)(q⁶;q⁷)), 1/((q²;q⁷)(q⁵;q⁷)), 1/((q³;q⁷)(q⁴;q⁷))
    L,
    N,
    Q,
    /// mod-49 eta-style quotients
    A,
    B,
    C,
    D,
    E,
    /// mod-25 / mod-49 dissection pieces P(i)
    P25(u8),
    P49(u8),
}

static PRODUCT_CACHE: Lazy<Mutex<HashMap<(ProductName, i64), QSeries<Rational>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Build (and memoize) a named product to the requested order.
pub fn named_product(name: ProductName, order: i64) -> QSeries<Rational> {
    if let Some(hit) = PRODUCT_CACHE.lock().unwrap().get(&(name, order)) {
        return hit.clone();
    }
    let s = build_named(name, order);
    PRODUCT_CACHE
        .lock()
        .unwrap()
        .insert((name, order), s.clone());
    s
}

fn build_named(name: ProductName, order: i64) -> QSeries<Rational> {
    use ProductName::*;
    let inv = |exps: &[i64], m: i64| {
        poch_inf_list(exps, m, order)
            .invert()
            .expect("unit constant term")
    };
    match name {
        Euler => poch_inf_list(&[1], 1, order),
        G => inv(&[1, 4], 5),
        H => inv(&[2, 3], 5),
        L => inv(&[1, 6], 7),
        N => inv(&[2, 5], 7),
        Q => inv(&[3, 4], 7),
        A => quotient(&[49], &[7, 42], order),
        B => quotient(&[14, 35, 49], &[7, 21, 28, 42], order),
        C => quotient(&[49], &[14, 35], order),
        D => quotient(&[49], &[21, 28], order),
        E => quotient(&[7, 42, 49], &[14, 21, 28, 35], order),
        P25(i) => match i {
            0 => poch_inf_list(&[25], 25, order),
            1 | 4 => poch_inf_list(&[5, 20], 25, order),
            2 | 3 => poch_inf_list(&[10, 15], 25, order),
            _ => panic!("P25 index out of range"),
        },
        P49(i) => match i {
            0 => poch_inf_list(&[49], 49, order),
            1 | 6 => poch_inf_list(&[7, 42], 49, order),
            2 | 5 => poch_inf_list(&[14, 35], 49, order),
            3 | 4 => poch_inf_list(&[21, 28], 49, order),
            _ => panic!("P49 index out of range"),
        },
    }
}

fn quotient(numer: &[i64], denom: &[i64], order: i64) -> QSeries<Rational> {
    let n = poch_inf_list(numer, 49, order);
    let d = poch_inf_list(denom, 49, order);
    n.mul(&d.invert().expect("unit constant term")).truncated(order)
}
