//! Principal curvatures of every projective and hyperbolic family at one
//! radius, with the traces that enter the r-harmonic equation.

use hopf_core::family::{curvature_spectrum, special_radii, FamilyKind, HypersurfaceFamily};
use hopf_core::precise::Precision;

fn main() -> hopf_core::Result<()> {
    let n = 5;
    let t = 0.4f64;
    for kind in FamilyKind::ALL {
        let (n, k) = match kind {
            FamilyKind::CpD => (9, None),
            FamilyKind::CpE => (15, None),
            k if k.takes_k() => (n, Some(1)),
            _ => (n, None),
        };
        let fam = HypersurfaceFamily::new(kind, n, k)?;
        let s = curvature_spectrum(&fam, &t)?;
        let branches: Vec<String> = s
            .branches
            .iter()
            .map(|b| format!("{:.6} (x{})", b.value, b.multiplicity))
            .collect();
        println!(
            "{fam:<16} alpha {:>9.5}  {}  tr S {:.5}  tr S^2 {:.5}",
            s.alpha,
            branches.join(", "),
            s.trace(),
            s.trace_sq()
        );
    }

    let fam = HypersurfaceFamily::cp_b(n)?;
    let sp = special_radii(&fam, Precision::default())?;
    println!(
        "\n{fam}: minimal at x = {}, r-independent at x = {}",
        sp.x_minimal, sp.x_r_independent
    );
    Ok(())
}
