//! Sturm isolation and refinement of the characteristic quartics.

use hopf_core::family::HypersurfaceFamily;
use hopf_core::precise::Precision;
use hopf_core::quartic::{
    build_quartic, cauchy_bound, count_real_roots, depress, isolate_and_refine_prec,
};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn main() -> hopf_core::Result<()> {
    let prec = Precision::digits(40);
    let (lo, hi) = (BigRational::zero(), BigRational::one());
    for (fam, r) in [
        (HypersurfaceFamily::cp_a1(2)?, 17),
        (HypersurfaceFamily::cp_c(5)?, 300),
        (HypersurfaceFamily::cp_d(), 89),
    ] {
        let q = build_quartic(&fam, r)?;
        println!("{fam} r = {r}");
        println!("  P(x) = {q}");
        println!(
            "  Cauchy bound {}, roots in (0, 1): {}",
            cauchy_bound(&q)?,
            count_real_roots(&q, &lo, &hi)?
        );
        for c in isolate_and_refine_prec(&q, &lo, &hi, 1e-30, prec)? {
            println!(
                "  x = {}  t = {}",
                c.root.to_sci_string(30),
                c.radius.map_or("-".into(), |t| t.to_sci_string(20))
            );
        }
    }

    let q = build_quartic(&HypersurfaceFamily::cp_a2(5, 2)?, 7)?;
    let d = depress(&q)?;
    println!(
        "A2 n = 5 k = 2 r = 7 depressed: p2 = {}, p1 = {}, p0 = {}",
        d.p2, d.p1, d.p0
    );
    Ok(())
}
