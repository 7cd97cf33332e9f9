//! The r-harmonicity residual along a projective tube family, and its
//! strict negativity on the hyperbolic side.

use hopf_core::family::HypersurfaceFamily;
use hopf_core::residual::{ch_grid, ch_limit_residual, chn_scan, residual};

fn main() -> hopf_core::Result<()> {
    let fam = HypersurfaceFamily::cp_a1(3)?;
    let r = 4;
    println!("{fam}, r = {r}");
    let upper = std::f64::consts::FRAC_PI_2;
    let mut prev: Option<f64> = None;
    for i in 1..40 {
        let t = upper * f64::from(i) / 40.0;
        let rep = residual(&fam, &t, r)?;
        if let Some(p) = prev {
            if p * rep.residual < 0.0 {
                println!("  sign change near t = {t:.4}");
            }
        }
        prev = Some(rep.residual);
    }

    for fam in [
        HypersurfaceFamily::ch_a1_point(4)?,
        HypersurfaceFamily::ch_a2(6, 2)?,
        HypersurfaceFamily::ch_b(4)?,
    ] {
        let grid = ch_grid(&fam, 1e-3, 12.0, 2000);
        for r in [2, 10, 20] {
            let scan = chn_scan(&fam, r, &grid)?;
            println!(
                "{fam:<14} r = {r:>2}: max residual {:>12.4} at t = {:.3}, limit {:.4}",
                scan.max_residual,
                scan.t_at_max,
                ch_limit_residual(&fam, r)?
            );
        }
    }
    Ok(())
}
