//! Coefficient rings for truncated q-series.
//!
//! One series engine serves three coefficient rings:
//!
//! - [`Rational`]: exact arbitrary-precision rationals, the default scalar.
//! - [`DualRational`]: a + b·ε with ε² = 0, so that evaluating a series at
//!   x = 1 + ε computes the value and the x-derivative at x = 1 in one pass.
//! - [`ZLaurent`]: finitely supported Laurent polynomials in a marker
//!   variable z, used to track the crank exponent of each term.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// The small ring interface the series engine needs.
///
/// All operations are exact; `inv` returns `None` for non-units.
pub trait CoefRing: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl CoefRing for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn from_int(n: i64) -> Self {
        Rational::from(n)
    }
}

/// Dual rational a + b·ε with ε² = 0.
///
/// Multiplication follows (a+bε)(c+dε) = ac + (ad+bc)ε; a dual number is a
/// unit iff its value part is nonzero, with (a+bε)⁻¹ = a⁻¹ − (b/a²)ε.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualRational {
    pub value: Rational,
    pub deriv: Rational,
}

impl DualRational {
    pub fn new(value: Rational, deriv: Rational) -> Self {
        DualRational { value, deriv }
    }

    pub fn constant(value: Rational) -> Self {
        DualRational { value, deriv: Rational::zero() }
    }

    /// 1 + ε, the evaluation point that extracts d/dx at x = 1.
    pub fn one_plus_eps() -> Self {
        DualRational { value: Rational::one(), deriv: Rational::one() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for DualRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deriv.is_zero() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{}+({})e", self.value, self.deriv)
        }
    }
}

impl CoefRing for DualRational {
    fn zero() -> Self {
        DualRational::constant(Rational::zero())
    }

    fn one() -> Self {
        DualRational::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        DualRational {
            value: self.value.add(&rhs.value),
            deriv: self.deriv.add(&rhs.deriv),
        }
    }

    fn neg(&self) -> Self {
        DualRational {
            value: self.value.neg(),
            deriv: self.deriv.neg(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        DualRational {
            value: self.value.mul(&rhs.value),
            deriv: self.value.mul(&rhs.deriv).add(&self.deriv.mul(&rhs.value)),
        }
    }

    fn inv(&self) -> Option<Self> {
        let a_inv = self.value.inv()?;
        // (a+be)^-1 = 1/a - (b/a^2) e
        let deriv = self.deriv.mul(&a_inv).mul(&a_inv).neg();
        Some(DualRational { value: a_inv, deriv })
    }

    fn from_int(n: i64) -> Self {
        DualRational::constant(Rational::from(n))
    }
}

/// Finitely supported Laurent polynomial in the crank marker z.
///
/// Absent exponents mean zero coefficients; the map never stores zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct ZLaurent<C: CoefRing> {
    coeffs: BTreeMap<i64, C>,
}

impl<C: CoefRing> ZLaurent<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// c·z^e.
    pub fn monomial(c: C, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        ZLaurent { coeffs }
    }

    /// The z-variable itself.
    pub fn z() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeff(&self, e: i64) -> C {
        self.coeffs.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    /// Sum of the coefficients whose z-exponent is ≡ residue (mod modulus).
    pub fn class_sum(&self, modulus: i64, residue: i64) -> C {
        assert!(modulus >= 1);
        let r = residue.rem_euclid(modulus);
        let mut acc = C::zero();
        for (e, c) in &self.coeffs {
            if e.rem_euclid(modulus) == r {
                acc = acc.add(c);
            }
        }
        acc
    }

    /// Evaluate at z = 1, i.e. sum all coefficients.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.values() {
            acc = acc.add(c);
        }
        acc
    }

    fn insert(&mut self, e: i64, c: C) {
        if !c.is_zero() {
            self.coeffs.insert(e, c);
        }
    }
}

impl<C: CoefRing> fmt::Display for ZLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: CoefRing> CoefRing for ZLaurent<C> {
    fn zero() -> Self {
        ZLaurent { coeffs: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            let sum = out.coeff(*e).add(c);
            if sum.is_zero() {
                out.coeffs.remove(e);
            } else {
                out.coeffs.insert(*e, sum);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.coeffs {
            out.insert(*e, c.neg());
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let e = e1 + e2;
                let prod = c1.mul(c2);
                let sum = out.coeff(e).add(&prod);
                if sum.is_zero() {
                    out.coeffs.remove(&e);
                } else {
                    out.coeffs.insert(e, sum);
                }
            }
        }
        out
    }

    /// Units are single monomials c·z^e with c a unit.
    fn inv(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next().unwrap();
        Some(Self::monomial(c.inv()?, -e))
    }

    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_lowest_terms_and_sign() {
        let r = rat(2, -4);
        assert_eq!(r, rat(-1, 2));
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn dual_product_and_inverse() {
        let a = DualRational::new(rat(2, 1), rat(3, 1));
        let b = DualRational::new(rat(5, 1), rat(-1, 1));
        // (2+3e)(5-e) = 10 + (−2+15)e
        let p = a.mul(&b);
        assert_eq!(p.value, rat(10, 1));
        assert_eq!(p.deriv, rat(13, 1));
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), DualRational::one());
        // value 0 is not a unit even with nonzero deriv
        assert!(DualRational::new(rat(0, 1), rat(1, 1)).inv().is_none());
    }

    #[test]
    fn zlaurent_class_sum_uses_true_residue() {
        let s = ZLaurent::monomial(rat(1, 1), -1).add(&ZLaurent::monomial(rat(1, 1), 4));
        assert_eq!(s.class_sum(5, 4), rat(2, 1));
        assert_eq!(s.class_sum(5, 0), rat(0, 1));
    }

    #[test]
    fn zlaurent_monomial_inverse() {
        let m = ZLaurent::monomial(rat(2, 1), 3);
        let inv = m.inv().unwrap();
        assert_eq!(m.mul(&inv), ZLaurent::one());
        let not_unit = ZLaurent::monomial(rat(1, 1), 0).add(&ZLaurent::monomial(rat(1, 1), 1));
        assert!(not_unit.inv().is_none());
    }
}
