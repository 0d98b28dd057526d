//! Explicitly enumerated permutation groups and the semidirect-product
//! checks for `G = <sigma0, sigma1>`.
//!
//! With `x = sigma0 sigma1`, `y = sigma1 sigma0`, `N = <x, y>` and
//! `H = <sigma0>`, [`verify_theorem`] checks by enumeration that `N` is
//! abelian and normal, `N` and `H` meet trivially, `NH = G`, and that the
//! orders and invariant factors agree with the closed forms
//! `|N| = n^2 / alpha`, `N ~ C_n x C_{n/alpha}`.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use crate::dessin::Dessin;
use crate::lattice::{phi_generators, phi_of_word, span_order, ModVector};
use crate::perm::Perm;
use crate::triple::Triple;
use crate::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_LIMIT: usize = 1_000_000;

/// A finite permutation group listed element by element in breadth-first
/// discovery order. `elements[0]` is the identity.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    members: HashSet<Perm>,
}

impl GroupClosure {
    /// Enumerates `<generators>` by breadth-first left multiplication.
    pub fn generate(generators: &[Perm], limit: usize) -> Result<GroupClosure> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let len = first.len();
        if let Some(bad) = generators.iter().find(|g| g.len() != len) {
            return Err(Error::DomainMismatch {
                left: len,
                right: bad.len(),
            });
        }

        let id = Perm::identity(len);
        let mut members = HashSet::new();
        let mut elements = vec![id.clone()];
        members.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        if elements.len() > limit {
            return Err(Error::SizeExceeded { limit });
        }
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let next = g * &e;
                if members.insert(next.clone()) {
                    if members.len() > limit {
                        return Err(Error::SizeExceeded { limit });
                    }
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(GroupClosure {
            generators: generators.to_vec(),
            elements,
            members,
        })
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.members.contains(p)
    }

    /// Generators pairwise commute, hence the whole group does.
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    /// `g s g^-1` lies in `self` for every ambient generator `g` and every
    /// generator `s` of `self`.
    pub fn is_normal_in(&self, ambient_generators: &[Perm]) -> bool {
        ambient_generators.iter().all(|g| {
            self.generators
                .iter()
                .all(|s| self.contains(&g.conjugate(s)))
        })
    }

    /// The elements shared with `other` are exactly the identity.
    pub fn intersection_trivial(&self, other: &GroupClosure) -> bool {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .elements
            .iter()
            .filter(|e| big.contains(e))
            .all(Perm::is_identity)
    }

    /// The product set `{a b : a in self, b in h}` equals `g` as a set.
    pub fn product_covers(&self, h: &GroupClosure, g: &GroupClosure) -> bool {
        let mut product = HashSet::with_capacity(g.order());
        for a in &self.elements {
            for b in &h.elements {
                let ab = a * b;
                if !g.contains(&ab) {
                    return false;
                }
                product.insert(ab);
            }
        }
        product.len() == g.order()
    }

    /// Largest element order. Equals the exponent for an abelian group.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, e| acc.lcm(&e.order()))
    }

    /// Invariant factors `(d1, d2)`, `d2 | d1`, of an abelian group of rank
    /// at most two: `d1` is the exponent and `d2 = order / d1`.
    pub fn abelian_structure(&self) -> Result<(u64, u64)> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let order = self.order() as u64;
        let d1 = self.elements.iter().map(Perm::order).max().unwrap_or(1);
        let d2 = order / d1;
        if d1 * d2 != order || d1 % d2 != 0 {
            return Err(Error::RankExceeded {
                order: self.order(),
                exponent: d1,
            });
        }
        Ok((d1, d2))
    }
}

pub fn closure(generators: &[Perm], limit: usize) -> Result<GroupClosure> {
    GroupClosure::generate(generators, limit)
}

/// The four conjugation identities showing `N` is normal in `G`:
///
/// ```text
/// sigma0 y sigma0^-1 = x          sigma1 x sigma1^-1 = y
/// sigma0 x sigma0^-1 = y^-1 x^-1  sigma1 y sigma1^-1 = x^-1 y^-1
/// ```
pub fn conjugation_checks(t: &Triple) -> bool {
    let d = Dessin::new(t);
    let (s0, s1) = (d.sigma0(), d.sigma1());
    let (x, y) = d.rotation_products();
    let (xi, yi) = (x.inverse(), y.inverse());
    s0.conjugate(&y) == x
        && s1.conjugate(&x) == y
        && s0.conjugate(&x) == &yi * &xi
        && s1.conjugate(&y) == &xi * &yi
}

/// Shift vector of a translation `(m, i) -> (m + c_i, i)`, or `None` if `p`
/// does not preserve sides or does not translate uniformly.
pub fn translation_vector(p: &Perm, n: u64) -> Option<ModVector> {
    let mut shift = [0i128; 3];
    for (side, c) in shift.iter_mut().enumerate() {
        let image = p.apply(side);
        if image % 3 != side {
            return None;
        }
        *c = (image / 3) as i128;
    }
    let v = ModVector::new(shift, n);
    let ok = (0..p.len()).all(|e| {
        let (m, side) = ((e / 3) as u64, e % 3);
        p.apply(e) == 3 * ((m + v.entries()[side]) % n) as usize + side
    });
    ok.then_some(v)
}

/// Action of conjugation by `sigma0` on `N` in exponent coordinates: column
/// `j` holds the lexicographically first `(k1, k2)` with
/// `x^k1 y^k2 = sigma0 g_j sigma0^-1`, where `(g_0, g_1) = (x, y)`.
pub fn conjugation_action(t: &Triple) -> Result<[[u64; 2]; 2]> {
    let d = Dessin::new(t);
    let (x, y) = d.rotation_products();
    let n = t.n();
    let mut columns = [[0u64; 2]; 2];
    for (j, g) in [x, y].iter().enumerate() {
        let target = translation_vector(&d.sigma0().conjugate(g), n).ok_or_else(|| {
            Error::Inconsistent(format!(
                "{t}: conjugate of a generator of N is not a translation"
            ))
        })?;
        let found = (0..n)
            .flat_map(|k1| (0..n).map(move |k2| (k1, k2)))
            .find(|&(k1, k2)| phi_of_word(k1, k2, t) == target)
            .ok_or_else(|| {
                Error::Inconsistent(format!("{t}: conjugate of a generator lies outside N"))
            })?;
        columns[j] = [found.0, found.1];
    }
    Ok([
        [columns[0][0], columns[1][0]],
        [columns[0][1], columns[1][1]],
    ])
}

/// Outcome of every structural check for one triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub triple: Triple,
    #[serde(rename = "order_G")]
    pub order_g: u64,
    #[serde(rename = "order_N")]
    pub order_n: u64,
    #[serde(rename = "order_H")]
    pub order_h: u64,
    #[serde(rename = "predicted_order_N")]
    pub predicted_order_n: u64,
    #[serde(rename = "predicted_order_G")]
    pub predicted_order_g: u64,
    pub n_abelian: bool,
    pub n_normal: bool,
    pub intersection_trivial: bool,
    pub product_covers: bool,
    #[serde(rename = "exponent_N")]
    pub exponent_n: u64,
    #[serde(rename = "invariant_factors_N")]
    pub invariant_factors_n: (u64, u64),
    pub structure_string: String,
    pub all_pass: bool,
    #[serde(rename = "G_abelian")]
    pub g_abelian: bool,
    #[serde(rename = "H_normal")]
    pub h_normal: bool,
    pub conjugation_checks: bool,
    pub span_order: u64,
    pub conjugation_action: [[u64; 2]; 2],
}

pub fn structure_string(d1: u64, d2: u64) -> String {
    format!("(C{d1} x C{d2}) : C3")
}

/// Enumerates `G`, `N`, `H` for the triple and runs every check.
pub fn verify_theorem(t: &Triple, limit: usize) -> Result<TheoremReport> {
    let d = Dessin::new(t);
    let (s0, s1) = (d.sigma0().clone(), d.sigma1().clone());
    let (x, y) = d.rotation_products();
    let ambient = [s0.clone(), s1];

    let g = closure(&ambient, limit)?;
    let nsub = closure(&[x, y], limit)?;
    let h = closure(&[s0], limit)?;

    let (predicted_order_n, predicted_order_g) = t.predicted_orders();
    let n_abelian = nsub.is_abelian();
    let n_normal = nsub.is_normal_in(&ambient);
    let intersection_trivial = nsub.intersection_trivial(&h);
    let product_covers = nsub.product_covers(&h, &g);
    let exponent_n = nsub.exponent();
    let invariant_factors_n = nsub.abelian_structure()?;
    let conj = conjugation_checks(t);
    let (v1, v2) = phi_generators(t);
    let span = span_order(&v1, &v2)?;
    let action = conjugation_action(t)?;

    let all_pass = g.order() as u64 == predicted_order_g
        && nsub.order() as u64 == predicted_order_n
        && h.order() == 3
        && n_abelian
        && n_normal
        && intersection_trivial
        && product_covers
        && exponent_n == t.n()
        && invariant_factors_n == t.predicted_invariant_factors()
        && conj
        && span == nsub.order() as u64;

    Ok(TheoremReport {
        triple: *t,
        order_g: g.order() as u64,
        order_n: nsub.order() as u64,
        order_h: h.order() as u64,
        predicted_order_n,
        predicted_order_g,
        n_abelian,
        n_normal,
        intersection_trivial,
        product_covers,
        exponent_n,
        invariant_factors_n,
        structure_string: structure_string(invariant_factors_n.0, invariant_factors_n.1),
        all_pass,
        g_abelian: g.is_abelian(),
        h_normal: h.is_normal_in(&ambient),
        conjugation_checks: conj,
        span_order: span,
        conjugation_action: action,
    })
}
