//! Truncated Laurent series in q over a pluggable coefficient ring.
//!
//! A [`QSeries`] stores dense coefficients for exponents `lower..=order`.
//! `order` is the validity order: coefficients above it are unknown, not
//! zero, and every operation tracks how validity propagates. In
//! particular the product of series valid to N₁, N₂ with lowest exponents
//! L₁, L₂ is only trusted to min(N₁+L₂, N₂+L₁).

pub mod ring;

use crate::error::{QError, Result};
use num::bigint::BigInt;
use num::Integer;
pub use ring::{CoefRing, DualRational, Rational, ZLaurent};

#[derive(Clone, Debug)]
pub struct QSeries<C: CoefRing> {
    lower: i64,
    order: i64,
    coefs: Vec<C>,
}

impl<C: CoefRing> QSeries<C> {
    /// The zero series tracked on `lower..=order`.
    pub fn zero(lower: i64, order: i64) -> Self {
        assert!(order >= lower, "order {order} below lower {lower}");
        let len = (order - lower + 1) as usize;
        QSeries { lower, order, coefs: vec![C::zero(); len] }
    }

    /// c·q^e, valid to `order`.
    pub fn monomial(c: C, e: i64, order: i64) -> Result<Self> {
        if e > order {
            return Err(QError::InvalidConstruction { exponent: e, order });
        }
        let mut s = Self::zero(e.min(0), order);
        s.set_coeff(e, c);
        Ok(s)
    }

    /// The constant series 1, valid to `order`.
    pub fn one(order: i64) -> Self {
        Self::monomial(C::one(), 0, order).expect("order >= 0 required for one()")
    }

    pub fn lower(&self) -> i64 {
        self.lower
    }

    /// Highest exponent whose coefficient is trusted.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of q^e. Exponents below `lower` are zero; asking above
    /// the validity order is a caller bug.
    pub fn coeff(&self, e: i64) -> C {
        assert!(e <= self.order, "coefficient q^{e} beyond validity order {}", self.order);
        if e < self.lower {
            C::zero()
        } else {
            self.coefs[(e - self.lower) as usize].clone()
        }
    }

    pub fn set_coeff(&mut self, e: i64, c: C) {
        assert!(e >= self.lower && e <= self.order, "exponent {e} outside {}..={}", self.lower, self.order);
        self.coefs[(e - self.lower) as usize] = c;
    }

    pub fn add_to_coeff(&mut self, e: i64, c: &C) {
        let cur = self.coeff(e);
        self.set_coeff(e, cur.add(c));
    }

    /// Lowest exponent with a nonzero coefficient, if any.
    pub fn lowest_nonzero(&self) -> Option<i64> {
        (self.lower..=self.order).find(|&e| !self.coeff(e).is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.lowest_nonzero().is_none()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let lower = self.lower.min(rhs.lower);
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(lower, order);
        for e in lower..=order {
            let a = if e >= self.lower { self.coeff(e) } else { C::zero() };
            let b = if e >= rhs.lower { rhs.coeff(e) } else { C::zero() };
            out.set_coeff(e, a.add(&b));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coefs {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = self.clone();
        for c in &mut out.coefs {
            *c = c.mul(s);
        }
        out
    }

    /// Product with the validity bound min(N₁+L₂, N₂+L₁).
    pub fn mul(&self, rhs: &Self) -> Self {
        let lower = self.lower + rhs.lower;
        let order = (self.order + rhs.lower).min(rhs.order + self.lower);
        let mut out = Self::zero(lower, order.max(lower));
        for e1 in self.lower..=self.order {
            let a = self.coeff(e1);
            if a.is_zero() {
                continue;
            }
            for e2 in rhs.lower..=rhs.order {
                let e = e1 + e2;
                if e > order {
                    break;
                }
                let b = rhs.coeff(e2);
                if b.is_zero() {
                    continue;
                }
                out.add_to_coeff(e, &a.mul(&b));
            }
        }
        out
    }

    /// Multiply by the exact monomial c·q^e (validity shifts by e).
    pub fn mul_monomial(&self, c: &C, e: i64) -> Self {
        let mut out = Self::zero(self.lower + e, self.order + e);
        for i in self.lower..=self.order {
            out.set_coeff(i + e, self.coeff(i).mul(c));
        }
        out
    }

    /// Multiply by the exact binomial (1 − c·q^e). For e < 0 validity drops by |e|.
    pub fn mul_binomial(&self, c: &C, e: i64) -> Self {
        let shifted = self.mul_monomial(c, e);
        self.sub(&shifted)
    }

    /// Restrict the validity order (never extend it).
    pub fn truncated(&self, new_order: i64) -> Self {
        assert!(new_order <= self.order, "cannot extend validity {} -> {new_order}", self.order);
        let lower = self.lower.min(new_order);
        let mut out = Self::zero(lower, new_order);
        for e in lower..=new_order {
            if e >= self.lower {
                out.set_coeff(e, self.coeff(e));
            }
        }
        out
    }

    /// Multiplicative inverse: requires the lowest nonzero coefficient to
    /// be a unit. A series with lowest exponent L valid to N inverts to a
    /// series with lowest exponent −L valid to N − 2L.
    pub fn invert(&self) -> Result<Self> {
        let lead = self
            .lowest_nonzero()
            .ok_or_else(|| QError::NoInverse("zero series".into()))?;
        let c0 = self.coeff(lead);
        let c0_inv = c0
            .inv()
            .ok_or_else(|| QError::NoInverse(format!("leading coefficient {c0} is not a unit")))?;
        // u = q^{-lead} * self has unit constant term; invert u as a power series.
        let deg = (self.order - lead) as usize; // u known to this degree
        let u: Vec<C> = (0..=deg as i64).map(|i| self.coeff(lead + i)).collect();
        let mut v: Vec<C> = Vec::with_capacity(deg + 1);
        v.push(c0_inv.clone());
        for n in 1..=deg {
            let mut acc = C::zero();
            for i in 1..=n {
                acc = acc.add(&u[i].mul(&v[n - i]));
            }
            v.push(acc.neg().mul(&c0_inv));
        }
        let lower = -lead;
        let order = self.order - 2 * lead;
        let mut out = Self::zero(lower.min(order), order);
        for (i, c) in v.into_iter().enumerate() {
            let e = lower + i as i64;
            if e <= order {
                out.set_coeff(e, c);
            }
        }
        Ok(out)
    }

    /// Replace q by q^k.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let lower = self.lower * k;
        let order = self.order * k;
        let mut out = Self::zero(lower, order);
        for e in self.lower..=self.order {
            out.set_coeff(e * k, self.coeff(e));
        }
        out
    }

    /// Split into residue classes mod M; component r holds exactly the
    /// terms with exponent ≡ r (mod M), negative exponents classified by
    /// true mathematical residue.
    pub fn dissect(&self, modulus: i64) -> Vec<Self> {
        assert!(modulus >= 1);
        let mut parts = vec![Self::zero(self.lower, self.order); modulus as usize];
        for e in self.lower..=self.order {
            let c = self.coeff(e);
            if !c.is_zero() {
                parts[e.rem_euclid(modulus) as usize].set_coeff(e, c);
            }
        }
        parts
    }

    /// Apply a coefficient map (e.g. ring change or part extraction).
    pub fn map<D: CoefRing>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            lower: self.lower,
            order: self.order,
            coefs: self.coefs.iter().map(|c| f(c)).collect(),
        }
    }

    /// First exponent in [min_exp, min(order, rhs.order, upto)] where the
    /// two series disagree, treating coefficients below `lower` as zero.
    pub fn first_mismatch(&self, rhs: &Self, min_exp: i64, upto: i64) -> Option<(i64, C, C)> {
        let hi = self.order.min(rhs.order).min(upto);
        for e in min_exp..=hi {
            let a = self.coeff(e);
            let b = rhs.coeff(e);
            if a != b {
                return Some((e, a, b));
            }
        }
        None
    }

    /// Equality of all tracked coefficients up to `upto`.
    pub fn equal_up_to(&self, rhs: &Self, upto: i64) -> bool {
        let lo = self.lower.min(rhs.lower);
        self.first_mismatch(rhs, lo, upto).is_none()
    }
}

impl<C: CoefRing> QSeries<C> {
    /// Σ_{j≥0} c^j q^{j·step}, truncated at `order`; step ≥ 1.
    pub fn geometric(c: &C, step: i64, order: i64) -> Self {
        assert!(step >= 1, "geometric step must be positive");
        let mut out = Self::zero(0, order);
        let mut pow = C::one();
        let mut e = 0;
        while e <= order {
            out.set_coeff(e, pow.clone());
            pow = pow.mul(c);
            e += step;
        }
        out
    }
}

impl QSeries<DualRational> {
    /// The ε-part of every coefficient: d/dx at x = 1 of a series built
    /// with x = 1 + ε.
    pub fn deriv_at_one(&self) -> QSeries<Rational> {
        self.map(|c| c.deriv.clone())
    }

    /// The value part (x = 1).
    pub fn value_at_one(&self) -> QSeries<Rational> {
        self.map(|c| c.value.clone())
    }
}

impl<C: CoefRing> QSeries<ZLaurent<C>> {
    /// For each q-exponent, sum the z-coefficients over z-exponents
    /// ≡ b (mod k).
    pub fn z_class_extract(&self, k: i64, b: i64) -> QSeries<C> {
        self.map(|c| c.class_sum(k, b))
    }

    pub fn z_eval_at_one(&self) -> QSeries<C> {
        self.map(|c| c.eval_at_one())
    }
}

impl QSeries<Rational> {
    /// Reduce every coefficient modulo m into [0, m). Errors if any
    /// denominator shares a factor with m.
    pub fn reduce_mod(&self, m: i64) -> Result<Self> {
        assert!(m >= 2, "modulus must be at least 2");
        let big_m = BigInt::from(m);
        let mut out = Self::zero(self.lower, self.order);
        for e in self.lower..=self.order {
            let c = self.coeff(e);
            let numer = c.numer().mod_floor(&big_m);
            let denom = c.denom().mod_floor(&big_m);
            let inv = mod_inverse(&denom, &big_m).ok_or_else(|| {
                QError::ModularReduction(format!(
                    "denominator of coefficient {c} at q^{e} is not invertible mod {m}"
                ))
            })?;
            let red = (numer * inv).mod_floor(&big_m);
            out.set_coeff(e, Rational::from_bigint(red));
        }
        Ok(out)
    }

    /// Embed into dual-number coefficients (zero derivative part).
    pub fn to_dual(&self) -> QSeries<DualRational> {
        self.map(|c| DualRational::constant(c.clone()))
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd == BigInt::from(1) {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl<C: CoefRing> std::fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for e in self.lower..=self.order {
            let c = self.coeff(e);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from(n)
    }

    fn poly(terms: &[(i64, i64)], order: i64) -> QSeries<Rational> {
        let lower = terms.iter().map(|t| t.0).min().unwrap_or(0).min(0);
        let mut s = QSeries::zero(lower, order);
        for (e, c) in terms {
            s.set_coeff(*e, rat(*c));
        }
        s
    }

    #[test]
    fn monomial_rejects_exponent_above_order() {
        assert!(QSeries::<Rational>::monomial(rat(1), 11, 10).is_err());
        let m = QSeries::<Rational>::monomial(rat(-1), -1, 5).unwrap();
        assert_eq!(m.coeff(-1), rat(-1));
        assert_eq!(m.coeff(0), rat(0));
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(&[(0, 1), (1, 1)], 10);
        let b = poly(&[(0, 1), (1, -1)], 10);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0), rat(1));
        assert_eq!(p.coeff(1), rat(0));
        assert_eq!(p.coeff(2), rat(-1));
    }

    #[test]
    fn product_validity_bound() {
        // orders 10 and 4, both lower 0: product valid to 4 only.
        let a = poly(&[(0, 1)], 10);
        let b = poly(&[(0, 1)], 4);
        assert_eq!(a.mul(&b).order(), 4);
        // Laurent lower bounds shift the bound: min(10-2, 4+0) = 4.
        let c = poly(&[(-2, 1)], 4);
        assert_eq!(a.mul(&c).order(), 4);
        assert_eq!(c.mul(&c).order(), 2);
    }

    #[test]
    fn invert_geometric() {
        let one_minus_q = poly(&[(0, 1), (1, -1)], 10);
        let inv = one_minus_q.invert().unwrap();
        for e in 0..=10 {
            assert_eq!(inv.coeff(e), rat(1));
        }
        assert!(one_minus_q.mul(&inv).equal_up_to(&QSeries::one(10), 10));
    }

    #[test]
    fn invert_laurent_shift() {
        // q(1-q) inverts to q^{-1} + 1 + q + ...
        let s = poly(&[(1, 1), (2, -1)], 10);
        let inv = s.invert().unwrap();
        assert_eq!(inv.lower(), -1);
        assert_eq!(inv.order(), 8);
        assert_eq!(inv.coeff(-1), rat(1));
        assert_eq!(inv.coeff(0), rat(1));
        assert_eq!(inv.coeff(5), rat(1));
    }

    #[test]
    fn invert_rejects_zero_and_nonunit_lead() {
        assert!(QSeries::<Rational>::zero(0, 5).invert().is_err());
        let mut s = QSeries::<DualRational>::zero(0, 5);
        s.set_coeff(0, DualRational::new(rat(0), rat(1)));
        assert!(s.invert().is_err());
    }

    #[test]
    fn dilate_examples() {
        let s = poly(&[(0, 1), (1, 1)], 1);
        let d = s.dilate(5);
        assert_eq!(d.order(), 5);
        assert_eq!(d.coeff(0), rat(1));
        assert_eq!(d.coeff(5), rat(1));
        assert_eq!(d.coeff(3), rat(0));
        let m = poly(&[(-1, 1)], 0);
        assert_eq!(m.dilate(3).coeff(-3), rat(1));
    }

    #[test]
    fn dissect_residues_and_reassembly() {
        let s = poly(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)], 4);
        let parts = s.dissect(5);
        for (r, p) in parts.iter().enumerate() {
            assert_eq!(p.coeff(r as i64), rat(1));
            assert_eq!(p.lowest_nonzero(), Some(r as i64));
        }
        // negative exponents use the true residue: -1 = 4 (mod 5)
        let m = poly(&[(-1, 1)], 5);
        let parts = m.dissect(5);
        assert_eq!(parts[4].coeff(-1), rat(1));
        assert!(parts[0].is_zero());
    }

    #[test]
    fn reduce_mod_examples() {
        let s = poly(&[(1, 5), (2, 7)], 5);
        let r = s.reduce_mod(5).unwrap();
        assert_eq!(r.coeff(1), rat(0));
        assert_eq!(r.coeff(2), rat(2));
        // 1/2 mod 2 fails
        let mut bad = QSeries::<Rational>::zero(0, 2);
        bad.set_coeff(0, Rational::new(1, 2));
        assert!(bad.reduce_mod(2).is_err());
        // but 1/2 mod 5 is 3
        assert_eq!(bad.reduce_mod(5).unwrap().coeff(0), rat(3));
    }

    #[test]
    fn deriv_at_one_extracts_eps_part() {
        // 1 - (1+e) q  ->  eps part is -q
        let mut s = QSeries::<DualRational>::zero(0, 5);
        s.set_coeff(0, DualRational::one());
        s.set_coeff(1, DualRational::one_plus_eps().neg());
        let d = s.deriv_at_one();
        assert_eq!(d.coeff(1), rat(-1));
        assert_eq!(d.coeff(0), rat(0));
    }

    #[test]
    fn deriv_at_one_of_one_minus_x_times_f() {
        // (1-x)F at x = 1+eps has eps-part -F.
        let f = poly(&[(0, 3), (1, -2), (4, 7)], 6).to_dual();
        let one_minus_x = QSeries::<DualRational>::monomial(
            DualRational::one().sub(&DualRational::one_plus_eps()),
            0,
            6,
        )
        .unwrap();
        let prod = one_minus_x.mul(&f);
        let d = prod.deriv_at_one();
        let expect = f.value_at_one().neg();
        assert!(d.equal_up_to(&expect, 6));
    }

    #[test]
    fn z_class_extract_examples() {
        // z^{-1} q + z^4 q with k=5, b=4 -> 2q
        let mut s = QSeries::<ZLaurent<Rational>>::zero(0, 3);
        s.set_coeff(
            1,
            ZLaurent::monomial(rat(1), -1).add(&ZLaurent::monomial(rat(1), 4)),
        );
        let e = s.z_class_extract(5, 4);
        assert_eq!(e.coeff(1), rat(2));
        // z-free series: b=0 unchanged, b!=0 zero.
        let t = QSeries::<Rational>::one(3).map(|c| ZLaurent::constant(c.clone()));
        assert!(t.z_class_extract(5, 0).equal_up_to(&QSeries::one(3), 3));
        assert!(t.z_class_extract(5, 2).is_zero());
    }
}
