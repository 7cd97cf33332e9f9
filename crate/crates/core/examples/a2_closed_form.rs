//! The biquadratic A2 branch `2k + 1 = n` solved in radicals and checked
//! against the certified roots.

use hopf_core::existence::{a2_closed_form, a2_closed_form_exact, proper_solutions};
use hopf_core::family::HypersurfaceFamily;
use hopf_core::precise::Precision;

fn main() -> hopf_core::Result<()> {
    let prec = Precision::digits(40);
    for n in [3u32, 5, 7, 9] {
        let fam = HypersurfaceFamily::cp_a2(n, (n - 1) / 2)?;
        for r in [2u64, 10, 40] {
            let cf = a2_closed_form(n, r, prec)?;
            let sols = proper_solutions(&fam, r, 1e-32, prec)?;
            let worst = sols
                .iter()
                .map(|s| {
                    let d1 = (&s.certificate.root - &cf.x_plus).abs().to_f64();
                    let d2 = (&s.certificate.root - &cf.x_minus).abs().to_f64();
                    d1.min(d2)
                })
                .fold(0.0, f64::max);
            println!(
                "n = {n} r = {r:>2}: x+ = {}  x- = {}  cos 4t = {}  gap {worst:.1e}",
                cf.x_plus.to_sci_string(20),
                cf.x_minus.to_sci_string(20),
                cf.cos_4t.to_sci_string(12)
            );
        }
    }
    if let Some(exact) = a2_closed_form_exact(3, 2)? {
        println!(
            "exact at n = 3, r = 2: x = {}, {}; cos 4t = {}",
            exact.x_minus, exact.x_plus, exact.cos_4t
        );
    }
    Ok(())
}
