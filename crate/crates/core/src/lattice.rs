//! The translation lattice of `N` inside `(Z/nZ)^3`.
//!
//! Every element of `N = <sigma0 sigma1, sigma1 sigma0>` acts on edges as a
//! translation `(m, i) -> (m + c_i, i)`, so it is determined by the shift
//! vector `(c_0, c_1, c_2)` mod `n`. The two generators map to
//!
//! ```text
//! v1 = -(p1, p2, p0),   v2 = -(p2, p0, p1)
//! ```
//!
//! and `|N|` is the number of distinct combinations `a v1 + b v2`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use num_integer::Integer;
use serde::Serialize;

use crate::triple::{gcd_i128, Triple};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ModVector {
    entries: [u64; 3],
    modulus: u64,
}

impl ModVector {
    pub fn new(entries: [i128; 3], modulus: u64) -> ModVector {
        assert!(modulus > 0, "modulus must be positive");
        let m = modulus as i128;
        ModVector {
            entries: entries.map(|x| x.mod_floor(&m) as u64),
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> ModVector {
        ModVector::new([0; 3], modulus)
    }

    pub fn entries(&self) -> [u64; 3] {
        self.entries
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.entries == [0; 3]
    }

    pub fn scale(&self, k: u64) -> ModVector {
        let m = self.modulus as u128;
        let k = k as u128 % m;
        ModVector {
            entries: self.entries.map(|x| ((x as u128 * k) % m) as u64),
            modulus: self.modulus,
        }
    }

    pub fn checked_add(&self, rhs: &ModVector) -> Result<ModVector> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: rhs.modulus,
            });
        }
        let m = self.modulus;
        let entries = std::array::from_fn(|i| (self.entries[i] + rhs.entries[i]) % m);
        Ok(ModVector {
            entries,
            modulus: m,
        })
    }
}

impl Add for ModVector {
    type Output = ModVector;

    /// Panics on a modulus mismatch.
    fn add(self, rhs: ModVector) -> ModVector {
        self.checked_add(&rhs).expect("modulus mismatch")
    }
}

impl fmt::Display for ModVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.entries;
        write!(f, "({a}, {b}, {c}) mod {}", self.modulus)
    }
}

/// `(v1, v2)`, the images of `sigma0 sigma1` and `sigma1 sigma0`.
pub fn phi_generators(t: &Triple) -> (ModVector, ModVector) {
    let [p0, p1, p2] = t.as_array().map(|x| -(x as i128));
    (
        ModVector::new([p1, p2, p0], t.n()),
        ModVector::new([p2, p0, p1], t.n()),
    )
}

/// Image of the word `(sigma0 sigma1)^k1 (sigma1 sigma0)^k2`, i.e.
/// `k1 v1 + k2 v2`.
pub fn phi_of_word(k1: u64, k2: u64, t: &Triple) -> ModVector {
    let (v1, v2) = phi_generators(t);
    v1.scale(k1) + v2.scale(k2)
}

/// Number of distinct vectors `a v1 + b v2`, by enumerating all `n^2`
/// coefficient pairs.
pub fn span_order(v1: &ModVector, v2: &ModVector) -> Result<u64> {
    if v1.modulus != v2.modulus {
        return Err(Error::ModulusMismatch {
            left: v1.modulus,
            right: v2.modulus,
        });
    }
    let n = v1.modulus;
    let mut seen = HashSet::with_capacity((n * n) as usize);
    let mut a_part = ModVector::zero(n);
    for _ in 0..n {
        let mut v = a_part;
        for _ in 0..n {
            seen.insert(v.entries);
            v = v + *v2;
        }
        a_part = a_part + *v1;
    }
    Ok(seen.len() as u64)
}

/// Span order from the determinantal divisors of the integer matrix
/// `[v1 v2]`: if its Smith form has diagonal `(d1, d2)` the span is
/// `Z/(n/gcd(n,d1)) x Z/(n/gcd(n,d2))`.
pub fn span_order_smith(v1: &ModVector, v2: &ModVector) -> Result<u64> {
    if v1.modulus != v2.modulus {
        return Err(Error::ModulusMismatch {
            left: v1.modulus,
            right: v2.modulus,
        });
    }
    let n = v1.modulus;
    let a = v1.entries.map(i128::from);
    let b = v2.entries.map(i128::from);
    let d1 = a
        .iter()
        .chain(&b)
        .fold(0u64, |g, &x| gcd_i128(g as i128, x));
    let minors = [
        a[0] * b[1] - a[1] * b[0],
        a[0] * b[2] - a[2] * b[0],
        a[1] * b[2] - a[2] * b[1],
    ];
    let delta2 = minors.iter().fold(0u64, |g, &x| gcd_i128(g as i128, x));
    let d2 = delta2.checked_div(d1).unwrap_or(0);
    Ok((n / n.gcd(&d1)) * (n / n.gcd(&d2)))
}

/// Witness of the row reduction of `[-v1 -v2]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReduction {
    /// Coefficients with `s p1 + t p2 = 1 (mod n)`.
    pub s: i128,
    pub t: i128,
    /// `L [-v1 -v2] R` over the integers.
    pub product: [[i128; 2]; 3],
}

/// Finds `s, t` with `s p1 + t p2 = 1 (mod n)`.
pub fn bezout_mod_n(t: &Triple) -> Result<(i128, i128)> {
    let n = t.n() as i128;
    let (p1, p2) = (t.p1() as i128, t.p2() as i128);
    let e = p1.extended_gcd(&p2);
    // g = gcd(p1, p2) is coprime to n because gcd(p1, p2, n) = 1
    let inv = e.gcd.extended_gcd(&n);
    if inv.gcd != 1 {
        return Err(Error::Inconsistent(format!(
            "gcd(p1, p2, n) = {} for {t}",
            inv.gcd
        )));
    }
    let s = (e.x * inv.x).mod_floor(&n);
    let u = (e.y * inv.x).mod_floor(&n);
    Ok((s, u))
}

/// Builds the elimination matrices of the row reduction, multiplies them
/// over the integers and checks the result is
/// `[[1, 0], [0, d], [0, -d]]` mod `n` with `d = p0 p1 - p2^2`.
pub fn verify_row_reduction(tr: &Triple) -> Result<RowReduction> {
    let (s, t) = bezout_mod_n(tr)?;
    let [p0, p1, p2] = tr.as_array().map(i128::from);
    let n = tr.n() as i128;

    let left = [
        [1, 0, 0],
        [-(s * p2 + t * p0), 1, 0],
        [-(s * p0 + t * p1), 0, 1],
    ];
    let a = [[p1, p2], [p2, p0], [p0, p1]];
    let right = [[s, -p2], [t, p1]];

    let left_det = left[0][0] * (left[1][1] * left[2][2] - left[1][2] * left[2][1]);
    if left_det != 1 {
        return Err(Error::Inconsistent(format!(
            "left factor has determinant {left_det}"
        )));
    }
    let right_det = right[0][0] * right[1][1] - right[0][1] * right[1][0];
    if right_det.mod_floor(&n) != 1 % n {
        return Err(Error::Inconsistent(format!(
            "right factor has determinant {right_det}, not a unit congruent to 1 mod {n}"
        )));
    }

    let mut ar = [[0i128; 2]; 3];
    for i in 0..3 {
        for j in 0..2 {
            ar[i][j] = (0..2).map(|k| a[i][k] * right[k][j]).sum();
        }
    }
    let mut product = [[0i128; 2]; 3];
    for i in 0..3 {
        for j in 0..2 {
            product[i][j] = (0..3).map(|k| left[i][k] * ar[k][j]).sum();
        }
    }

    let d = tr.defect();
    let expected = [[1, 0], [0, d], [0, -d]];
    for i in 0..3 {
        for j in 0..2 {
            if (product[i][j] - expected[i][j]).mod_floor(&n) != 0 {
                return Err(Error::RowReduction {
                    row: i,
                    col: j,
                    got: product[i][j],
                    expected: expected[i][j],
                    modulus: tr.n(),
                });
            }
        }
    }
    Ok(RowReduction { s, t, product })
}
