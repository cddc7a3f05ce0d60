//! Brute-force partition enumeration and the rank/crank statistics
//! N(m,k,n), NT(m,k,n), M_ω(m,k,n).
//!
//! Everything here is an independent combinatorial oracle: no generating
//! functions, just enumeration (plus the pentagonal-number recurrence as a
//! second, cross-checked route to p(n)).

use num::bigint::BigInt;

use crate::series::{QSeries, Rational};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Dyson rank: largest part minus number of parts (0 for the empty
    /// partition by convention).
    pub fn rank(&self) -> i64 {
        match self.parts.first() {
            Some(&l) => l as i64 - self.parts.len() as i64,
            None => 0,
        }
    }

    /// Number of ones.
    pub fn ones(&self) -> u32 {
        self.parts.iter().filter(|&&p| p == 1).count() as u32
    }

    /// Andrews-Garvan crank: the largest part if there are no ones, else
    /// (number of parts strictly greater than the number of ones) minus
    /// (the number of ones). Empty partition: 0 by convention.
    pub fn crank(&self) -> i64 {
        if self.parts.is_empty() {
            return 0;
        }
        let omega = self.ones() as i64;
        if omega == 0 {
            self.parts[0] as i64
        } else {
            let mu = self.parts.iter().filter(|&&p| (p as i64) > omega).count() as i64;
            mu - omega
        }
    }
}

/// Visit every partition of n exactly once, parts in lexicographic
/// descending order. n = 0 yields the empty partition.
pub fn for_each_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    let mut buf: Vec<u32> = Vec::new();
    descend(n, n.max(1), &mut buf, &mut visit);
}

fn descend(remaining: u32, max_part: u32, buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    let mut part = max_part.min(remaining);
    while part >= 1 {
        buf.push(part);
        descend(remaining - part, part, buf, visit);
        buf.pop();
        part -= 1;
    }
}

/// All partitions of n.
pub fn enumerate(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |parts| out.push(Partition { parts: parts.to_vec() }));
    out
}

/// p(n) by Euler's pentagonal-number recurrence, exact.
pub fn p_count(n: u32) -> BigInt {
    p_table(n)[n as usize].clone()
}

/// p(0)..p(n) in one pass.
pub fn p_table(n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let mut p = vec![BigInt::from(0); n + 1];
    p[0] = BigInt::from(1);
    for m in 1..=n {
        let mut acc = BigInt::from(0);
        let mut k: i64 = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m && g2 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 as usize <= m {
                acc += sign * &p[m - g1 as usize];
            }
            if g2 as usize <= m {
                acc += sign * &p[m - g2 as usize];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

/// Which statistic a [`StatTable`] tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    /// Number of partitions with rank ≡ m (mod k).
    N,
    /// Total number of parts over partitions with rank ≡ m (mod k).
    Nt,
    /// Total number of ones over partitions with crank ≡ m (mod k).
    MOmega,
}

/// Residue-class tallies of one statistic for a single n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatTable {
    pub n: u32,
    pub k: u32,
    pub stat: Stat,
    pub counts: Vec<i64>,
}

impl StatTable {
    pub fn count(&self, residue: i64) -> i64 {
        self.counts[residue.rem_euclid(self.k as i64) as usize]
    }
}

/// Tally one statistic over all partitions of n, by enumeration.
pub fn stats(n: u32, k: u32, stat: Stat) -> StatTable {
    assert!(k >= 2);
    let mut counts = vec![0i64; k as usize];
    for_each_partition(n, |parts| {
        let p = Partition { parts: parts.to_vec() };
        match stat {
            Stat::N => {
                counts[p.rank().rem_euclid(k as i64) as usize] += 1;
            }
            Stat::Nt => {
                counts[p.rank().rem_euclid(k as i64) as usize] += p.parts.len() as i64;
            }
            Stat::MOmega => {
                counts[p.crank().rem_euclid(k as i64) as usize] += p.ones() as i64;
            }
        }
    });
    StatTable { n, k, stat, counts }
}

/// Generating series Σ_n stat(b,k,n) q^n built purely by enumeration.
pub fn series_from_stats(k: u32, b: i64, stat: Stat, order: i64) -> QSeries<Rational> {
    assert!(order >= 0);
    let mut s = QSeries::zero(0, order);
    for n in 0..=order {
        let table = stats(n as u32, k, stat);
        s.set_coeff(n, Rational::from(table.count(b)));
    }
    s
}

/// Σ p(n) q^n via the pentagonal recurrence.
pub fn partition_series(order: i64) -> QSeries<Rational> {
    assert!(order >= 0);
    let table = p_table(order as u32);
    let mut s = QSeries::zero(0, order);
    for (n, p) in table.into_iter().enumerate() {
        s.set_coeff(n as i64, Rational::from_bigint(p));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{named_product, ProductName};
    use crate::series::CoefRing;

    #[test]
    fn five_partitions_of_four() {
        let parts = enumerate(4);
        let expect: Vec<Vec<u32>> = vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(
            parts.iter().map(|p| p.parts.clone()).collect::<Vec<_>>(),
            expect
        );
    }

    #[test]
    fn empty_partition_for_zero() {
        let parts = enumerate(0);
        assert_eq!(parts.len(), 1);
        assert!(parts[0].parts.is_empty());
        assert_eq!(parts[0].rank(), 0);
        assert_eq!(parts[0].crank(), 0);
    }

    #[test]
    fn enumeration_agrees_with_pentagonal() {
        for n in 0..=30u32 {
            assert_eq!(
                BigInt::from(enumerate(n).len()),
                p_count(n),
                "p({n}) mismatch between oracles"
            );
        }
    }

    #[test]
    fn rank_and_crank_examples() {
        let p = |parts: &[u32]| Partition { parts: parts.to_vec() };
        assert_eq!(p(&[4]).rank(), 3);
        assert_eq!(p(&[1, 1, 1, 1]).rank(), -3);
        assert_eq!(p(&[2, 2]).rank(), 0);
        assert_eq!(p(&[4]).crank(), 4);
        assert_eq!(p(&[1, 1, 1, 1]).crank(), -4);
        assert_eq!(p(&[3, 1]).crank(), 0);
    }

    #[test]
    fn ramanujan_mod_5_small_cases() {
        for n in [9u32, 14, 19] {
            assert_eq!(p_count(n) % 5, BigInt::from(0), "p({n}) mod 5");
        }
    }

    #[test]
    fn rank_equidistribution_at_5n_plus_4() {
        let t = stats(4, 5, Stat::N);
        for i in 0..5 {
            assert_eq!(t.count(i), 1);
        }
    }

    #[test]
    fn stat_table_row_sums() {
        for n in 0..=20u32 {
            for k in [5u32, 7, 11] {
                let parts = enumerate(n);
                let total_parts: i64 = parts.iter().map(|p| p.parts.len() as i64).sum();
                let total_ones: i64 = parts.iter().map(|p| p.ones() as i64).sum();
                assert_eq!(
                    stats(n, k, Stat::N).counts.iter().sum::<i64>(),
                    parts.len() as i64
                );
                assert_eq!(stats(n, k, Stat::Nt).counts.iter().sum::<i64>(), total_parts);
                assert_eq!(
                    stats(n, k, Stat::MOmega).counts.iter().sum::<i64>(),
                    total_ones
                );
            }
        }
    }

    #[test]
    fn rank_symmetry() {
        for n in 1..=25u32 {
            for k in [5i64, 7] {
                let t = stats(n, k as u32, Stat::N);
                for m in 1..k {
                    assert_eq!(t.count(m), t.count(k - m), "N symmetry at n={n}, k={k}");
                }
            }
        }
    }

    #[test]
    fn beck_mod5_single_instance() {
        let t = stats(4, 5, Stat::MOmega);
        let combo = t.count(1) + 2 * t.count(2) - 2 * t.count(3) - t.count(4);
        assert_eq!(combo.rem_euclid(5), 0);
    }

    #[test]
    fn partition_series_inverts_euler() {
        let p = partition_series(30);
        let euler = named_product(ProductName::Euler, 30);
        let prod = p.mul(&euler);
        assert!(prod.equal_up_to(&QSeries::one(30), 30));
        // spot-check the spec example at q^5 and q^0
        assert_eq!(prod.coeff(0), Rational::one());
        assert_eq!(prod.coeff(5), Rational::zero());
        // and invert((q;q)inf) reproduces p(n) to order 30
        let inv = euler.invert().unwrap();
        assert!(inv.equal_up_to(&p, 30));
    }
}
