// Exact heat invariants of the Hodge Laplacian on `p`-forms. For constant
// holomorphic sectional curvature the `a₂` invariant is a closed rational in
// `c` and the volume; on the 2-sphere and on CP² it reproduces the classical
// values.
//
// ```bash
// cargo run --example heat_coefficients
// ```

use kahler_spectra::patodi::{self, CurvatureIntegrals};
use kahler_spectra::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 8;
    println!("n = {n}");
    println!("{:>3} {:>14} {:>14} {:>14} {:>14}", "p", "lambda1", "lambda2", "lambda3", "reduced");
    for lam in patodi::lambda_row(n).iter().take(n as usize + 1) {
        println!(
            "{:>3} {:>14} {:>14} {:>14} {:>14}",
            lam.p,
            lam.lambda1.to_string(),
            lam.lambda2.to_string(),
            lam.lambda3.to_string(),
            lam.reduced_weight().to_string()
        );
    }

    // Round 2-sphere of curvature 4 (CP^1 with c = 4): a2 = ∫K²/15 = 16/15·vol.
    let c = Rational::from(4);
    let sphere = patodi::a2_const_hsc(0, 1, &c, &Rational::one())?;
    println!("\nCP^1(4), functions: a2 / vol = {sphere}");
    assert_eq!(sphere, Rational::frac(16, 15));

    // CP^2 with c = 4: the same value from the general curvature formula.
    let hsc = patodi::a2_const_hsc(0, 2, &c, &Rational::one())?;
    let integrals = CurvatureIntegrals::new(Rational::from(576), Rational::zero(), Rational::zero())?;
    let general = patodi::a2_general(0, 2, &integrals)?;
    println!("CP^2(4), functions: a2 / vol = {hsc} (general formula {general})");
    assert_eq!(hsc, general);

    // 1-forms on CP^2(4): s = 24, so ∫s = 24·vol.
    let inv = patodi::heat_invariants(1, 2, &Rational::one(), &Rational::from(24), &integrals)?;
    println!(
        "CP^2(4), 1-forms: a0 = {}, a1 = {}, a2 = {}",
        inv.a0, inv.a1, inv.a2
    );
    assert_eq!(inv.a2, patodi::a2_const_hsc(1, 2, &c, &Rational::one())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
