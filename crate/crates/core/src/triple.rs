//! Reduced triangle triples and their number-theoretic invariants.
//!
//! The triple `(p0, p1, p2)` stands for the triangle with angles
//! `theta_i = p_i * pi / n`. Angles are never materialised; everything here
//! is exact integer arithmetic.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::{Error, Result};

/// A rational triangle in lowest terms, together with `n` and `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    p0: u64,
    p1: u64,
    p2: u64,
    n: u64,
    alpha: u64,
}

/// Nonnegative gcd with `gcd(x, 0) = |x|`.
pub(crate) fn gcd_i128(a: i128, b: i128) -> u64 {
    a.gcd(&b) as u64
}

impl Triple {
    /// Divides the triple by `gcd(p0, p1, p2)` and fills in `n` and `alpha`.
    pub fn reduce(p0: i64, p1: i64, p2: i64) -> Result<Triple> {
        if p0 <= 0 || p1 <= 0 || p2 <= 0 {
            return Err(Error::InvalidTriple(p0, p1, p2));
        }
        let k = p0.gcd(&p1).gcd(&p2);
        let (p0, p1, p2) = ((p0 / k) as u64, (p1 / k) as u64, (p2 / k) as u64);
        let n = p0
            .checked_add(p1)
            .and_then(|s| s.checked_add(p2))
            .ok_or(Error::InvalidTriple(p0 as i64, p1 as i64, p2 as i64))?;
        let mut t = Triple {
            p0,
            p1,
            p2,
            n,
            alpha: 0,
        };
        t.alpha = gcd_i128(n as i128, t.defect());
        Ok(t)
    }

    pub fn p0(&self) -> u64 {
        self.p0
    }

    pub fn p1(&self) -> u64 {
        self.p1
    }

    pub fn p2(&self) -> u64 {
        self.p2
    }

    /// `p_i` for `i` in `0..3`.
    pub fn p(&self, i: usize) -> u64 {
        match i {
            0 => self.p0,
            1 => self.p1,
            2 => self.p2,
            _ => panic!("side index {i} out of range"),
        }
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.p0, self.p1, self.p2]
    }

    /// Number of black vertices of the dessin, `p0 + p1 + p2`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `gcd(n, p0 p1 - p2^2)`.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// The signed integer `p0 p1 - p2^2`.
    pub fn defect(&self) -> i128 {
        let [a, b, c] = self.as_array().map(i128::from);
        a * b - c * c
    }

    /// The three expressions `p0 p1 - p2^2`, `p0 p2 - p1^2`, `p1 p2 - p0^2`
    /// reduced mod `n`, checked to coincide. Returns the common residue.
    pub fn cross_congruences(&self) -> Result<u64> {
        let [a, b, c] = self.as_array().map(i128::from);
        let n = self.n as i128;
        let residues =
            [a * b - c * c, a * c - b * b, b * c - a * a].map(|x| x.mod_floor(&n) as u64);
        if residues[0] != residues[1] || residues[1] != residues[2] {
            return Err(Error::Inconsistent(format!(
                "cross congruences differ for {self}: {residues:?} mod {}",
                self.n
            )));
        }
        Ok(residues[0])
    }

    /// `(|N|, |G|) = (n^2 / alpha, 3 n^2 / alpha)`.
    pub fn predicted_orders(&self) -> (u64, u64) {
        let order_n = self.n * self.n / self.alpha;
        (order_n, 3 * order_n)
    }

    /// Invariant factors `(n, n / alpha)` predicted for `N`.
    pub fn predicted_invariant_factors(&self) -> (u64, u64) {
        (self.n, self.n / self.alpha)
    }

    /// The distinct reorderings of the triple; equal entries collapse.
    pub fn orderings(&self) -> Vec<Triple> {
        let [a, b, c] = self.as_array().map(|x| x as i64);
        let mut out: Vec<Triple> = [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ]
        .into_iter()
        .map(|(x, y, z)| Triple::reduce(x, y, z).expect("reordering of a valid triple"))
        .collect();
        out.sort();
        out.dedup();
        out
    }

    /// True when `p0 <= p1 <= p2`.
    pub fn is_canonical(&self) -> bool {
        self.p0 <= self.p1 && self.p1 <= self.p2
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p0, self.p1, self.p2)
    }
}

/// Every reduced triple with `p0 <= p1 <= p2` and `n <= max_n`, sorted by
/// `(n, p0, p1)`.
pub fn enumerate_triples(max_n: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for p0 in 1..=n / 3 {
            for p1 in p0..=(n - p0) / 2 {
                let p2 = n - p0 - p1;
                if p0.gcd(&p1).gcd(&p2) == 1 {
                    out.push(Triple::reduce(p0 as i64, p1 as i64, p2 as i64).unwrap());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(a: i64, b: i64, c: i64) -> Triple {
        Triple::reduce(a, b, c).unwrap()
    }

    fn naive_gcd(a: i128, b: i128) -> i128 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }

    /// Brute-force oracle: all ordered positive triples, sorted and
    /// deduplicated, keeping only the reduced ones.
    fn enumerate_oracle(max_n: u64) -> Vec<(u64, u64, u64)> {
        let mut out = Vec::new();
        for a in 1..max_n {
            for b in 1..max_n {
                for c in 1..max_n {
                    if a + b + c > max_n {
                        continue;
                    }
                    let mut v = [a, b, c];
                    v.sort();
                    let g = naive_gcd(naive_gcd(a as i128, b as i128), c as i128);
                    if g == 1 {
                        out.push((v[0], v[1], v[2]));
                    }
                }
            }
        }
        out.sort_by_key(|&(a, b, c)| (a + b + c, a, b));
        out.dedup();
        out
    }

    #[test]
    fn reduce_examples() {
        let r = t(2, 2, 2);
        assert_eq!(r.as_array(), [1, 1, 1]);
        assert_eq!(r.n(), 3);
        assert_eq!(t(1, 1, 1).as_array(), [1, 1, 1]);
        let r = t(4, 6, 10);
        assert_eq!(r.as_array(), [2, 3, 5]);
        assert_eq!(r.n(), 10);
    }

    #[test]
    fn reduce_rejects_nonpositive() {
        assert_eq!(Triple::reduce(0, 1, 1), Err(Error::InvalidTriple(0, 1, 1)));
        assert!(Triple::reduce(1, -2, 1).is_err());
        assert!(Triple::reduce(1, 1, i64::MIN).is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(t(1, 1, 1).alpha(), 3);
        assert_eq!(t(2, 3, 5).alpha(), 1);
        assert_eq!(t(1, 4, 4).alpha(), 3);
    }

    #[test]
    fn cross_congruence_examples() {
        // p0p1-p2^2 = -19, p0p2-p1^2 = 1, p1p2-p0^2 = 11; all 1 mod 10
        assert_eq!(t(2, 3, 5).cross_congruences().unwrap(), 1);
        assert_eq!(t(1, 1, 1).cross_congruences().unwrap(), 0);
        assert_eq!(t(1, 2, 4).cross_congruences().unwrap(), 0);
    }

    #[test]
    fn predicted_order_examples() {
        // (1,1,1): C3 x C3 has order 9
        assert_eq!(t(1, 1, 1).predicted_orders(), (3, 9));
        assert_eq!(t(2, 3, 5).predicted_orders(), (100, 300));
        assert_eq!(t(1, 2, 4).predicted_orders(), (7, 21));
    }

    #[test]
    fn enumerate_examples() {
        let arr = |v: Vec<Triple>| v.iter().map(|t| t.as_array()).collect::<Vec<_>>();
        assert_eq!(arr(enumerate_triples(3)), vec![[1, 1, 1]]);
        assert_eq!(
            arr(enumerate_triples(5)),
            vec![[1, 1, 1], [1, 1, 2], [1, 1, 3], [1, 2, 2]]
        );
        assert_eq!(enumerate_triples(4).len(), 2);
    }

    #[test]
    fn enumerate_matches_oracle() {
        for max_n in [3, 4, 5, 12, 30] {
            let got: Vec<_> = enumerate_triples(max_n)
                .iter()
                .map(|t| (t.p0(), t.p1(), t.p2()))
                .collect();
            assert_eq!(got, enumerate_oracle(max_n), "max_n = {max_n}");
        }
    }

    #[test]
    fn enumerate_has_no_duplicates_or_unreduced() {
        let all = enumerate_triples(60);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        for t in &all {
            assert!(t.is_canonical());
            assert_eq!(
                naive_gcd(naive_gcd(t.p0() as i128, t.p1() as i128), t.p2() as i128),
                1
            );
        }
    }

    #[test]
    fn lemma_congruences_up_to_100() {
        for t in enumerate_triples(100) {
            for o in t.orderings() {
                o.cross_congruences().unwrap();
            }
        }
    }

    #[test]
    fn orderings_collapse_duplicates() {
        assert_eq!(t(1, 1, 1).orderings().len(), 1);
        assert_eq!(t(1, 1, 2).orderings().len(), 3);
        assert_eq!(t(2, 3, 5).orderings().len(), 6);
    }

    proptest! {
        #[test]
        fn alpha_is_symmetric_and_divides_n(a in 1i64..200, b in 1i64..200, c in 1i64..200) {
            let base = t(a, b, c);
            let n = base.n() as i128;
            let direct = naive_gcd(n, base.defect());
            prop_assert_eq!(base.alpha() as i128, direct);
            prop_assert_eq!(base.n() % base.alpha(), 0);
            for o in base.orderings() {
                prop_assert_eq!(o.alpha(), base.alpha());
            }
            let (order_n, order_g) = base.predicted_orders();
            prop_assert_eq!(order_n * base.alpha(), base.n() * base.n());
            prop_assert_eq!(order_g, 3 * order_n);
        }

        #[test]
        fn reduce_is_scale_invariant(a in 1i64..100, b in 1i64..100, c in 1i64..100, k in 1i64..20) {
            prop_assert_eq!(t(a * k, b * k, c * k), t(a, b, c));
        }
    }
}
