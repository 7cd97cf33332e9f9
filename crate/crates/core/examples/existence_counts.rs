//! Certified solution counts against the guaranteed thresholds.

use hopf_core::existence::{count_solutions, guaranteed_thresholds, probe_values};
use hopf_core::family::HypersurfaceFamily;
use hopf_core::Error;

fn main() -> hopf_core::Result<()> {
    let fams = [
        HypersurfaceFamily::cp_a1(2)?,
        HypersurfaceFamily::cp_a2(7, 1)?,
        HypersurfaceFamily::cp_a2(6, 2)?,
        HypersurfaceFamily::cp_b(3)?,
        HypersurfaceFamily::cp_d(),
        HypersurfaceFamily::cp_e(),
    ];
    for fam in &fams {
        match guaranteed_thresholds(fam) {
            Ok(t) => println!(
                "{fam}: at least two from r = {}, exactly four from {}",
                t.r_two,
                t.r_four.map_or("never".into(), |v| v.to_string())
            ),
            Err(Error::NoExactCountGuarantee { .. }) => println!("{fam}: no guarantee"),
            Err(e) => return Err(e),
        }
        let counts: Vec<String> = [2, 10, 20, 50, 100, 200]
            .iter()
            .map(|&r| count_solutions(fam, r).map(|c| format!("r={r}:{c}")))
            .collect::<hopf_core::Result<_>>()?;
        println!("  {}", counts.join(" "));
        let probes = probe_values(fam, 100)?;
        println!("  probe signs at r = 100: {}", probes.pattern());
    }
    Ok(())
}
