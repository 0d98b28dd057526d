//! Dessins d'enfants drawn on rational triangular billiards surfaces.
//!
//! A reduced triple `(p0, p1, p2)` describes the triangle with angles
//! `p_i * pi / n`, `n = p0 + p1 + p2`. Its billiards surface carries a
//! bipartite dessin with `n` black vertices, `n` white vertices and `3n`
//! edges. This crate builds the two edge rotations `sigma0`, `sigma1` of that
//! dessin, enumerates the monodromy group they generate, and checks the
//! decomposition
//!
//! ```text
//! G = <sigma0, sigma1> = N x| H,   N = <sigma0 sigma1, sigma1 sigma0>,   H = <sigma0>
//! G ~ (C_n x C_{n/alpha}) x| C_3,  alpha = gcd(n, p0 p1 - p2^2)
//! ```
//!
//! by explicit enumeration, alongside the closed-form predictions.
//!
//! ```
//! use monodromy_core::{group, Triple};
//!
//! let t = Triple::reduce(2, 3, 5).unwrap();
//! let report = group::verify_theorem(&t, group::DEFAULT_LIMIT).unwrap();
//! assert_eq!(report.order_g, 300);
//! assert!(report.all_pass);
//! ```

pub mod dessin;
mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod triple;

pub use dessin::{Dessin, DessinStats, EdgeLabel, Passport};
pub use error::{Error, Result};
pub use group::{GroupClosure, TheoremReport};
pub use lattice::ModVector;
pub use perm::Perm;
pub use triple::Triple;
