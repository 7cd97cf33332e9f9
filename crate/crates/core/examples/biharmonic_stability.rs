//! Proper biharmonic tubes, their normal index bounds, and the empirical
//! dimension from which the index equals one.

use hopf_core::precise::Precision;
use hopf_core::stability::{
    asymptotic_check, biharmonic_radii, index_threshold_scan, stability_report,
};

fn main() -> hopf_core::Result<()> {
    let prec = Precision::default();
    for (n, p) in [(2, 1), (3, 2), (6, 1), (10, 3)] {
        let radii = biharmonic_radii(n, p, prec)?;
        for tube in &radii.tubes {
            let rep = stability_report(tube)?;
            println!(
                "n = {n:>2} p = {p} {:<5} cos^2 t = {}  tr S = {}  unstable {}  {}",
                tube.branch,
                rep.cos_sq_t.to_sci_string(12),
                rep.trace.to_sci_string(8),
                rep.is_unstable(),
                rep.index_claim
            );
        }
        for (branch, c) in &radii.degenerate {
            println!(
                "n = {n:>2} p = {p} {branch:<5} degenerate, cos^2 t = {}",
                c.to_sci_string(6)
            );
        }
    }
    for p in 1..=3 {
        let scan = index_threshold_scan(p, 200, prec)?;
        let a = asymptotic_check(p, 10_000, prec)?;
        println!(
            "p = {p}: index one from n = {:?}; errors at n = 1e4 {:?}",
            scan.threshold(),
            a.metrics()
        );
    }
    Ok(())
}
