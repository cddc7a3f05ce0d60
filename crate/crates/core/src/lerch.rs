//! Bilateral Lerch-type sums, one-sided Lambert series, and Appell-Lerch
//! functions m(x,q,z) specialized at monomial arguments.
//!
//! A bilateral sum Σ_m (−1)^m q^{(Am²+Bm)/2 + C} / (1 − q^{Dm+E}) is
//! expanded term by term. Denominators with negative exponent are first
//! rewritten via 1/(1 − q^{−k}) = −q^k/(1 − q^k) so every stored geometric
//! expansion runs over positive exponents.

use crate::error::{QError, Result};
use crate::products::{jtheta, named_product, poch_inf_list, ProductName};
use crate::series::{QSeries, Rational};

/// Parameters of Σ_m (−1)^m q^{(Am²+Bm)/2 + C} / (1 − q^{Dm+E}); `primed`
/// omits the m = 0 term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BilateralSpec {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub primed: bool,
}

impl BilateralSpec {
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        let spec = BilateralSpec { a, b, c, d, e, primed: false };
        spec.validate();
        spec
    }

    pub fn primed(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        let spec = BilateralSpec { a, b, c, d, e, primed: true };
        spec.validate();
        spec
    }

    fn validate(&self) {
        assert!(self.a > 0, "quadratic coefficient must be positive");
        assert!(
            (self.a + self.b) % 2 == 0,
            "A+B must be even so (Am^2+Bm)/2 stays integral"
        );
    }

    /// Exponent of the numerator monomial at index m.
    pub fn num_exp(&self, m: i64) -> i64 {
        (self.a * m * m + self.b * m) / 2 + self.c
    }

    /// Exponent of the denominator 1 − q^{Dm+E}.
    pub fn den_exp(&self, m: i64) -> i64 {
        self.d * m + self.e
    }
}

/// Evaluate a bilateral spec to the requested order.
pub fn eval_bilateral(spec: &BilateralSpec, order: i64) -> Result<QSeries<Rational>> {
    // A pole at Dm+E = 0 is a property of the sum itself, not of the
    // truncation; reject it up front unless the primed convention skips it.
    if spec.d != 0 && spec.e % spec.d == 0 {
        let m0 = -spec.e / spec.d;
        if !(spec.primed && m0 == 0) {
            return Err(QError::Pole(format!(
                "denominator exponent {}m+{} vanishes at m={m0}",
                spec.d, spec.e
            )));
        }
    } else if spec.d == 0 && spec.e == 0 {
        return Err(QError::Pole("denominator exponent is identically zero".into()));
    }

    // Terms can reach below q^0 when C < 0; the quadratic gives the
    // global floor C - B²/(8A).
    let floor = spec.c - (spec.b * spec.b) / (8 * spec.a) - 1;
    let mut acc = QSeries::zero(floor.min(0), order.max(floor.min(0)));
    for direction in [1i64, -1] {
        let mut misses = 0;
        let mut m = if direction == 1 { 0 } else { -1 };
        loop {
            let skip = spec.primed && m == 0;
            if !skip {
                match term_min_exp(spec, m) {
                    Some(min_exp) if min_exp <= order => {
                        misses = 0;
                        add_term(&mut acc, spec, m, order);
                    }
                    _ => {
                        // Minimal exponents are not monotone near small |m|;
                        // require three consecutive misses before stopping.
                        misses += 1;
                        if misses >= 3 {
                            break;
                        }
                    }
                }
            }
            m += direction;
        }
    }
    Ok(acc)
}

/// Minimal exponent contributed by the m-th term, after the
/// negative-denominator rewrite. None when the denominator vanishes.
fn term_min_exp(spec: &BilateralSpec, m: i64) -> Option<i64> {
    let d = spec.den_exp(m);
    if d == 0 {
        return None;
    }
    Some(if d > 0 { spec.num_exp(m) } else { spec.num_exp(m) - d })
}

fn add_term(acc: &mut QSeries<Rational>, spec: &BilateralSpec, m: i64, order: i64) {
    let mut sign = if m.rem_euclid(2) == 0 { 1i64 } else { -1 };
    let mut base = spec.num_exp(m);
    let mut den = spec.den_exp(m);
    if den < 0 {
        // 1/(1 - q^{-k}) = -q^k / (1 - q^k)
        den = -den;
        base += den;
        sign = -sign;
    }
    let c = Rational::from(sign);
    let mut e = base;
    while e <= order {
        acc.add_to_coeff(e, &c);
        e += den;
    }
}

/// Σ_{j≥0} q^{b+aj} / (1 − q^{d+cj}), truncated.
pub fn lambert(a: i64, b: i64, c: i64, d: i64, order: i64) -> Result<QSeries<Rational>> {
    assert!(c >= 1);
    assert!(a >= 1, "numerator exponent must grow");
    if d <= 0 || b < 0 {
        return Err(QError::Pole(format!(
            "lambert({a},{b},{c},{d}) has a nonpositive exponent at j=0"
        )));
    }
    let mut acc = QSeries::zero(0, order);
    let mut j = 0;
    loop {
        let num = b + a * j;
        if num > order {
            break;
        }
        let den = d + c * j;
        let mut e = num;
        while e <= order {
            acc.add_to_coeff(e, &Rational::from(1));
            e += den;
        }
        j += 1;
    }
    Ok(acc)
}

/// Appell-Lerch sum m(x,q,z) = −(z/j(z;q)) Σ_r (−1)^r q^{r(r+1)/2} z^r / (1−xzq^r)
/// at x = q^a, q → q^M, z = q^b:
///
///   −q^b / j(q^b; q^M) · Σ_r (−1)^r q^{M r(r+1)/2 + b r} / (1 − q^{a+b+Mr}).
pub fn appell_m(a: i64, modulus: i64, b: i64, order: i64) -> Result<QSeries<Rational>> {
    assert!(modulus >= 1);
    // Working order covers the Laurent prefix of 1/j and the q^b shift.
    let pad = 4 * modulus + 4 * b.abs() + 8;
    let work = order + pad;
    let theta = jtheta(b, modulus, work)?;
    let theta_inv = theta.invert()?;
    let spec = BilateralSpec {
        a: modulus,
        b: modulus + 2 * b,
        c: 0,
        d: modulus,
        e: a + b,
        primed: false,
    };
    spec.validate();
    let sum = eval_bilateral(&spec, work)?;
    let s = sum
        .mul(&theta_inv)
        .mul_monomial(&Rational::from(-1), b);
    Ok(s.truncated(order))
}

/// Change-of-z product formula for Appell-Lerch sums at monomial
/// arguments: m(x,q,z₁) − m(x,q,z₀) as a single theta quotient, with
/// x = q^a, q → q^M, z_i = q^{b_i}:
///
///   q^{b₀} (q^M;q^M)³ j(q^{b₁−b₀};q^M) j(q^{a+b₀+b₁};q^M)
///   / (j(q^{b₀};q^M) j(q^{b₁};q^M) j(q^{a+b₀};q^M) j(q^{a+b₁};q^M)).
pub fn appell_change_z(a: i64, modulus: i64, b0: i64, b1: i64, order: i64) -> Result<QSeries<Rational>> {
    assert!(modulus >= 1);
    // Denominator thetas must be nonzero.
    for arg in [b0, b1, a + b0, a + b1] {
        if arg.rem_euclid(modulus) == 0 {
            return Err(QError::ZeroTheta { b: arg, modulus });
        }
    }
    // A vanishing numerator theta makes the whole difference zero.
    if (b1 - b0).rem_euclid(modulus) == 0 || (a + b0 + b1).rem_euclid(modulus) == 0 {
        return Ok(QSeries::zero(0, order));
    }
    let pad = 8 * modulus + 4 * (b0.abs() + b1.abs() + a.abs()) + 16;
    let work = order + pad;
    let cube = {
        let e = poch_inf_list(&[modulus], modulus, work);
        e.mul(&e).mul(&e)
    };
    let numer = cube
        .mul(&jtheta(b1 - b0, modulus, work)?)
        .mul(&jtheta(a + b0 + b1, modulus, work)?)
        .mul_monomial(&Rational::from(1), b0);
    let mut denom = jtheta(b0, modulus, work)?;
    for arg in [b1, a + b0, a + b1] {
        denom = denom.mul(&jtheta(arg, modulus, work)?);
    }
    let out = numer.mul(&denom.invert()?);
    Ok(out.truncated(order.min(out.order())))
}

/// The master left-hand series:
/// (1/(q;q)_∞) Σ_{n≥1} (−1)^n q^{n(n+1)/2} (1−q^n)^{k−2} (1+q^n) / (1−q^{kn}),
/// for k = 5 or 7.
pub fn build_master_lhs(k: i64, order: i64) -> QSeries<Rational> {
    assert!(k == 5 || k == 7, "master series defined for k = 5 or 7");
    assert!(order >= 1);
    let numerator = master_numerator(k, order);
    let euler_inv = named_product(ProductName::Euler, order)
        .invert()
        .expect("unit constant term");
    numerator.mul(&euler_inv)
}

/// The sum Σ_{n≥1} (−1)^n q^{n(n+1)/2} (1−q^n)^{k−2} (1+q^n) / (1−q^{kn})
/// without the Euler-product factor.
pub fn master_numerator(k: i64, order: i64) -> QSeries<Rational> {
    let one = Rational::from(1);
    let mut acc = QSeries::zero(0, order);
    let mut n = 1i64;
    while n * (n + 1) / 2 <= order {
        // (1-q^n)^{k-2} (1+q^n) as an exact polynomial
        let mut poly = QSeries::one(order);
        for _ in 0..(k - 2) {
            poly = poly.mul_binomial(&one, n);
        }
        poly = poly.sub(&poly.mul_monomial(&Rational::from(-1), n));
        let geom = QSeries::geometric(&one, k * n, order);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let term = poly
            .mul(&geom)
            .mul_monomial(&Rational::from(sign), n * (n + 1) / 2);
        acc = acc.add(&term.truncated(order));
        n += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::ProductName;

    fn rat(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn single_term_expansions() {
        // m=0 term of (A=5,B=5,C=0,D=5,E=1): 1/(1-q)
        let spec = BilateralSpec::new(5, 5, 0, 5, 1);
        let mut acc = QSeries::zero(0, 6);
        add_term(&mut acc, &spec, 0, 6);
        for e in 0..=6 {
            assert_eq!(acc.coeff(e), rat(1));
        }
        // m=-1 term: -q^0/(1-q^{-4}) = q^4/(1-q^4)
        let mut acc = QSeries::zero(0, 12);
        add_term(&mut acc, &spec, -1, 12);
        assert_eq!(acc.coeff(0), rat(0));
        assert_eq!(acc.coeff(4), rat(1));
        assert_eq!(acc.coeff(8), rat(1));
        assert_eq!(acc.coeff(5), rat(0));
    }

    #[test]
    fn eq11_bilateral_equals_product() {
        // Σ (−1)^m q^{(5m²+5m)/2}/(1−q^{5m+1}) = (q⁵;q⁵)²G(q)
        let lhs = eval_bilateral(&BilateralSpec::new(5, 5, 0, 5, 1), 60).unwrap();
        let e5 = poch_inf_list(&[5], 5, 60);
        let rhs = e5.mul(&e5).mul(&named_product(ProductName::G, 60));
        assert!(lhs.equal_up_to(&rhs, 60));
    }

    #[test]
    fn pole_detection() {
        // D=5, E=10: pole at m=-2
        assert!(matches!(
            eval_bilateral(&BilateralSpec { a: 5, b: 5, c: 0, d: 5, e: 10, primed: false }, 10),
            Err(QError::Pole(_))
        ));
        // primed only excuses m=0
        assert!(eval_bilateral(&BilateralSpec { a: 5, b: 5, c: 0, d: 5, e: 0, primed: true }, 10).is_ok());
    }

    #[test]
    fn primed_consistency_with_m0_removed() {
        // On a spec where m=0 is regular, primed = full minus the m=0 term.
        let spec = BilateralSpec::new(5, 1, -1, 5, 1);
        let full = eval_bilateral(&spec, 40).unwrap();
        let primed = eval_bilateral(&BilateralSpec { primed: true, ..spec }, 40).unwrap();
        let mut m0 = QSeries::zero(-2, 40);
        add_term(&mut m0, &spec, 0, 40);
        assert!(full.sub(&m0).equal_up_to(&primed, 40));
    }

    #[test]
    fn primed_first_terms() {
        // spec (5,1,-1,5,0) primed: m=1 term is -q^2/(1-q^5)
        let spec = BilateralSpec::primed(5, 1, -1, 5, 0);
        assert_eq!(spec.num_exp(1), 2);
        assert_eq!(spec.den_exp(1), 5);
        let mut acc = QSeries::zero(0, 12);
        add_term(&mut acc, &spec, 1, 12);
        assert_eq!(acc.coeff(2), rat(-1));
        assert_eq!(acc.coeff(7), rat(-1));
        assert_eq!(acc.coeff(3), rat(0));
    }

    #[test]
    fn lambert_first_term() {
        let s = lambert(5, 2, 5, 1, 20).unwrap();
        // first term q^2/(1-q): exponents 2,3,4,... plus later rows
        assert_eq!(s.coeff(2), rat(1));
        assert_eq!(s.coeff(0), rat(0));
        assert!(lambert(5, 2, 5, 0, 10).is_err());
    }

    #[test]
    fn lambert_reindexing_rule() {
        // Σ_j q^{5j}/(1−q^{5j+A}) = Σ_m q^{Am}/(1−q^{5m+5}) for A=1..4
        for a in 1..=4i64 {
            let lhs = lambert(5, 0, 5, a, 50).unwrap();
            let rhs = lambert(a, 0, 5, 5, 50).unwrap();
            assert!(lhs.equal_up_to(&rhs, 50), "reindex failed for A={a}");
        }
    }

    #[test]
    fn reindex_n_to_minus_n() {
        // Σ_{n≥1}(−1)^n q^{n(n+1)/2+3n}/(1−q^{5n}) = −Σ_{n≤−1}(−1)^n q^{n(n+1)/2+n}/(1−q^{5n})
        let order = 50;
        let mut lhs = QSeries::zero(0, order);
        let pos = BilateralSpec::primed(1, 7, 0, 5, 0); // q^{(n²+7n)/2} = q^{n(n+1)/2+3n}
        let neg = BilateralSpec::primed(1, 3, 0, 5, 0);
        let mut n = 1;
        while term_min_exp(&pos, n).unwrap_or(i64::MAX) <= order || n < 10 {
            add_term(&mut lhs, &pos, n, order);
            n += 1;
        }
        let mut rhs = QSeries::zero(0, order);
        let mut n = -1;
        while term_min_exp(&neg, n).unwrap_or(i64::MAX) <= order || n > -10 {
            add_term(&mut rhs, &neg, n, order);
            n -= 1;
        }
        assert!(lhs.equal_up_to(&rhs.neg(), order));
    }

    #[test]
    fn appell_m_has_requested_order() {
        let s = appell_m(2, 5, -1, 30).unwrap();
        assert!(s.order() >= 30);
    }

    #[test]
    fn appell_m_matches_s1_normalization() {
        // S₁ = Σ(−1)^m q^{(5m²+3m)/2}/(1−q^{5m+1}) = −q·j(q⁻¹;q⁵)·m(q²,q⁵,q⁻¹)
        let order = 40;
        let s1 = eval_bilateral(&BilateralSpec::new(5, 3, 0, 5, 1), order).unwrap();
        let m = appell_m(2, 5, -1, order + 4).unwrap();
        let theta = jtheta(-1, 5, order + 4).unwrap();
        let rhs = theta.mul(&m).mul_monomial(&rat(-1), 1);
        assert!(s1.equal_up_to(&rhs, order));
    }

    #[test]
    fn change_z_zero_when_z_equal() {
        let s = appell_change_z(2, 5, -1, -1, 20).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn change_z_matches_theta_quotient_example() {
        // m(q²,q⁵,1/q) − m(q²,q⁵,1/q⁴) = (q²,q³,q⁵;q⁵)∞/(q,q,q,q⁴,q⁴,q⁴;q⁵)∞
        let order = 40;
        let lhs = appell_change_z(2, 5, -4, -1, order).unwrap();
        let numer = poch_inf_list(&[2, 3, 5], 5, order + 10);
        let denom = poch_inf_list(&[1, 1, 1, 4, 4, 4], 5, order + 10);
        let rhs = numer.mul(&denom.invert().unwrap());
        assert!(lhs.equal_up_to(&rhs, order));
    }

    #[test]
    fn change_z_rejects_zero_denominator_theta() {
        assert!(matches!(
            appell_change_z(2, 5, 5, -1, 10),
            Err(QError::ZeroTheta { .. })
        ));
    }

    #[test]
    fn master_lhs_constant_term_is_zero() {
        let s = build_master_lhs(5, 20);
        assert_eq!(s.coeff(0), rat(0));
    }
}
