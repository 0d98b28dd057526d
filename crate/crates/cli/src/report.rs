use std::fmt::Write as _;

use monodromy_core::{group, Dessin, Result, Triple};

/// Plain-text summary of a triple: invariants, predicted orders and the
/// combinatorics of its dessin.
pub fn analyze_report(t: &Triple) -> Result<String> {
    let residue = t.cross_congruences()?;
    let (order_n, order_g) = t.predicted_orders();
    let (d1, d2) = t.predicted_invariant_factors();
    let dessin = Dessin::new(t);
    let stats = dessin.stats()?;

    let mut out = String::new();
    let mut line = |key: &str, value: &dyn std::fmt::Display| {
        writeln!(out, "{key:<22}{value}").unwrap();
    };
    line("triple:", t);
    line("n:", &t.n());
    line("alpha:", &t.alpha());
    line("p0p1 - p2^2 mod n:", &residue);
    line("order_N:", &order_n);
    line("order_G:", &order_g);
    line("structure:", &group::structure_string(d1, d2));
    line("black_vertices:", &stats.black_vertices);
    line("white_vertices:", &stats.white_vertices);
    line("edges:", &stats.edges);
    line("faces:", &stats.faces);
    line("euler_characteristic:", &stats.euler_characteristic);
    line("genus:", &stats.genus);
    line("passport:", &stats.passport);
    line("sigma0:", dessin.sigma0());
    line("sigma1:", dessin.sigma1());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilateral_report() {
        let r = analyze_report(&Triple::reduce(1, 1, 1).unwrap()).unwrap();
        assert!(r.contains("order_G:              9\n"), "{r}");
        assert!(r.contains("genus:                1\n"));
        assert!(r.contains("passport:             [3^3; 3^3; 3^3]\n"));
    }

    #[test]
    fn report_depends_on_reduced_triple_only() {
        let a = analyze_report(&Triple::reduce(2, 2, 2).unwrap()).unwrap();
        let b = analyze_report(&Triple::reduce(1, 1, 1).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
