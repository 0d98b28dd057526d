//! Permutations of a dense point set `0..len`.
//!
//! Products follow the right-to-left convention used for dessins:
//! `a.compose(&b)` is the map `x -> a(b(x))`, so `sigma0 sigma1` applies
//! `sigma1` first.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from its image sequence, rejecting anything that
    /// is not a bijection.
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &x in &images {
            if x >= len || seen[x] {
                return Err(Error::NotAPermutation(len));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from a function that is known to be a bijection.
    pub(crate) fn from_fn(len: usize, f: impl Fn(usize) -> usize) -> Perm {
        let p = Perm {
            images: (0..len).map(|x| f(x) as u32).collect(),
        };
        debug_assert!(Perm::new(p.images()).is_ok());
        p
    }

    pub fn identity(len: usize) -> Perm {
        Perm {
            images: (0..len as u32).collect(),
        }
    }

    /// Number of points acted on.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `x -> self(rhs(x))`.
    pub fn compose(&self, rhs: &Perm) -> Result<Perm> {
        if self.len() != rhs.len() {
            return Err(Error::DomainMismatch {
                left: self.len(),
                right: rhs.len(),
            });
        }
        Ok(Perm {
            images: rhs
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut result = Perm::identity(self.len());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// Disjoint cycles covering every point, fixed points included. Each
    /// cycle starts at its minimal point and cycles are sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self * other == other * self
    }

    /// `self * s * self^-1`.
    pub fn conjugate(&self, s: &Perm) -> Perm {
        &(self * s) * &self.inverse()
    }
}

impl Mul<&Perm> for &Perm {
    type Output = Perm;

    /// Right-to-left product. Panics on a domain mismatch; use
    /// [`Perm::compose`] for the fallible form.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("permutation domain mismatch")
    }
}

/// Cycle notation with fixed points omitted, e.g. `(0 1 2)(3 4 5)`; the
/// identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
