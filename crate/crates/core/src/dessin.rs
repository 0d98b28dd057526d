//! The dessin `D(p0, p1, p2)` on a triangular billiards surface.
//!
//! Black vertices are the `n` positively oriented copies of the triangle,
//! labelled by `m` mod `n` (the copy rotated by `2 m pi / n`). White vertices
//! are the reflected copies. An edge `(m, i)` joins black vertex `m` to the
//! white vertex across side `s_i`, the side opposite `theta_i`. Edges are
//! indexed densely as `3 m + i`.
//!
//! ```text
//! sigma0 (m, i) = (m, i + 1)
//! sigma1 (m, 0) = (m - p1, 2)
//! sigma1 (m, 1) = (m - p2, 0)
//! sigma1 (m, 2) = (m - p0, 1)
//! ```

use std::fmt::{self, Write as _};

use num_integer::Integer;
use serde::Serialize;

use crate::perm::Perm;
use crate::triple::Triple;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeLabel {
    pub m: u64,
    pub side: u8,
}

impl EdgeLabel {
    /// Panics if `side > 2`.
    pub fn new(m: u64, side: u8) -> EdgeLabel {
        assert!(side < 3, "side index {side} out of range");
        EdgeLabel { m, side }
    }

    pub fn index(&self) -> usize {
        3 * self.m as usize + self.side as usize
    }

    pub fn from_index(index: usize) -> EdgeLabel {
        EdgeLabel {
            m: (index / 3) as u64,
            side: (index % 3) as u8,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.side)
    }
}

/// `(m - d) mod n` for `m < n`.
fn sub_mod(m: u64, d: u64, n: u64) -> u64 {
    (m + n - d % n) % n
}

pub fn build_sigma0(t: &Triple) -> Perm {
    Perm::from_fn(3 * t.n() as usize, |x| {
        let e = EdgeLabel::from_index(x);
        EdgeLabel::new(e.m, (e.side + 1) % 3).index()
    })
}

pub fn build_sigma1(t: &Triple) -> Perm {
    let n = t.n();
    Perm::from_fn(3 * n as usize, |x| {
        let e = EdgeLabel::from_index(x);
        let image = match e.side {
            0 => EdgeLabel::new(sub_mod(e.m, t.p1(), n), 2),
            1 => EdgeLabel::new(sub_mod(e.m, t.p2(), n), 0),
            _ => EdgeLabel::new(sub_mod(e.m, t.p0(), n), 1),
        };
        image.index()
    })
}

/// Cycle types of `sigma0`, `sigma1` and `sigma0 sigma1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Passport {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
    pub faces: Vec<usize>,
}

fn write_cycle_type(f: &mut fmt::Formatter<'_>, lens: &[usize]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < lens.len() {
        let j = i + lens[i..].iter().take_while(|&&l| l == lens[i]).count();
        if !first {
            write!(f, " ")?;
        }
        first = false;
        match j - i {
            1 => write!(f, "{}", lens[i])?,
            k => write!(f, "{}^{}", lens[i], k)?,
        }
        i = j;
    }
    Ok(())
}

/// `[3^n; 3^n; ...]` with each cycle type in decreasing exponent notation.
impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_cycle_type(f, &self.black)?;
        write!(f, "; ")?;
        write_cycle_type(f, &self.white)?;
        write!(f, "; ")?;
        write_cycle_type(f, &self.faces)?;
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DessinStats {
    pub black_vertices: u64,
    pub white_vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub euler_characteristic: i64,
    pub genus: u64,
    pub passport: Passport,
}

/// The bipartite graph underlying a dessin. Edge `k` is the dessin edge with
/// linear index `k`; its endpoints are `(black, white)` vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub black: usize,
    pub white: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn black_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.black];
        for &(b, _) in &self.edges {
            d[b] += 1;
        }
        d
    }

    pub fn white_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.white];
        for &(_, w) in &self.edges {
            d[w] += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let total = self.black + self.white;
        if total == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); total];
        for &(b, w) in &self.edges {
            adj[b].push(self.black + w);
            adj[self.black + w].push(b);
        }
        let mut seen = vec![false; total];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == total
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dessin {
    triple: Triple,
    sigma0: Perm,
    sigma1: Perm,
}

impl Dessin {
    pub fn new(t: &Triple) -> Dessin {
        Dessin {
            triple: *t,
            sigma0: build_sigma0(t),
            sigma1: build_sigma1(t),
        }
    }

    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn sigma0(&self) -> &Perm {
        &self.sigma0
    }

    pub fn sigma1(&self) -> &Perm {
        &self.sigma1
    }

    /// `(sigma0 sigma1, sigma1 sigma0)`, the generators of `N`.
    pub fn rotation_products(&self) -> (Perm, Perm) {
        (&self.sigma0 * &self.sigma1, &self.sigma1 * &self.sigma0)
    }

    /// `(sigma0 sigma1)^k1 (sigma1 sigma0)^k2`.
    pub fn word(&self, k1: u64, k2: u64) -> Perm {
        let (x, y) = self.rotation_products();
        &x.pow(k1) * &y.pow(k2)
    }

    pub fn passport(&self) -> Passport {
        Passport {
            black: self.sigma0.cycle_type(),
            white: self.sigma1.cycle_type(),
            faces: (&self.sigma0 * &self.sigma1).cycle_type(),
        }
    }

    /// Vertex, edge and face counts with the Euler characteristic and genus.
    /// Faces are the cycles of `sigma0 sigma1`; the count is cross-checked
    /// against `gcd(n, p0) + gcd(n, p1) + gcd(n, p2)`.
    pub fn stats(&self) -> Result<DessinStats> {
        let t = &self.triple;
        let n = t.n();
        let black = self.sigma0.cycles().len() as u64;
        let white = self.sigma1.cycles().len() as u64;
        let edges = self.sigma0.len() as u64;
        let passport = self.passport();
        let faces = passport.faces.len() as u64;
        let expected_faces: u64 = t.as_array().iter().map(|p| n.gcd(p)).sum();
        if faces != expected_faces {
            return Err(Error::Inconsistent(format!(
                "{t}: sigma0 sigma1 has {faces} cycles, expected {expected_faces}"
            )));
        }
        let chi = black as i64 + white as i64 - edges as i64 + faces as i64;
        if chi % 2 != 0 || chi > 2 {
            return Err(Error::Inconsistent(format!(
                "{t}: Euler characteristic {chi} is not of the form 2 - 2g"
            )));
        }
        Ok(DessinStats {
            black_vertices: black,
            white_vertices: white,
            edges,
            faces,
            euler_characteristic: chi,
            genus: ((2 - chi) / 2) as u64,
            passport,
        })
    }

    /// Black vertex `m` for every `m`; white vertices are the cycles of
    /// `sigma1`, numbered by their minimal edge index.
    pub fn graph(&self) -> BipartiteGraph {
        let white_cycles = self.sigma1.cycles();
        let mut white_of = vec![0usize; self.sigma1.len()];
        for (w, cycle) in white_cycles.iter().enumerate() {
            for &e in cycle {
                white_of[e] = w;
            }
        }
        let edges = (0..self.sigma0.len())
            .map(|e| (EdgeLabel::from_index(e).m as usize, white_of[e]))
            .collect();
        BipartiteGraph {
            black: self.triple.n() as usize,
            white: white_cycles.len(),
            edges,
        }
    }

    /// Undirected DOT rendering of [`Dessin::graph`]. Output depends only on
    /// the triple.
    pub fn export_dot(&self) -> String {
        let g = self.graph();
        let mut out = String::new();
        let t = &self.triple;
        writeln!(out, "graph \"D({},{},{})\" {{", t.p0(), t.p1(), t.p2()).unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for b in 0..g.black {
            writeln!(
                out,
                "  b{b} [style=filled, fillcolor=black, fontcolor=white];"
            )
            .unwrap();
        }
        for w in 0..g.white {
            writeln!(out, "  w{w} [style=solid, fillcolor=white];").unwrap();
        }
        for (e, &(b, w)) in g.edges.iter().enumerate() {
            writeln!(
                out,
                "  b{b} -- w{w} [label=\"{}\"];",
                EdgeLabel::from_index(e)
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

pub fn stats(t: &Triple) -> Result<DessinStats> {
    Dessin::new(t).stats()
}

pub fn export_dot(t: &Triple) -> String {
    Dessin::new(t).export_dot()
}
