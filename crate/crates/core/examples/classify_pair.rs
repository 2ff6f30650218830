// Rigidity verdicts for a handful of `(p, n)` cells, including the single
// vanishing of `λ₁` at `(2, 8)` and the two `p = 1` cells where the exact
// coefficients disagree with the published case list.
//
// ```bash
// cargo run --example classify_pair
// ```

use kahler_spectra::classifier::{self, Q1Verdict, Q2Verdict};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>4} {:>4}  {:<22} {:<16} {:>10}", "p", "n", "Q1", "Q2", "lambda1");
    for (p, n) in [(0, 3), (2, 8), (14, 8), (1, 3), (1, 6), (1, 7), (1, 8), (3, 5)] {
        let r = classifier::classify(p, n)?;
        println!(
            "{:>4} {:>4}  {:<22} {:<16} {:>10}",
            r.p,
            r.n,
            format!("{:?}", r.q1_verdict),
            format!("{:?}", r.q2_verdict),
            r.lambdas.lambda1.to_string()
        );
        for w in &r.warnings {
            println!("           warning: {w}");
        }
    }

    // p and 2n - p describe the same Hodge-dual problem.
    assert_eq!(classifier::classify(14, 8)?, classifier::classify(2, 8)?);
    let fujita = classifier::classify(2, 8)?;
    assert_eq!(fujita.q1_verdict, Q1Verdict::Lambda1Zero);
    assert_eq!(fujita.q2_verdict, Q2Verdict::RigidViaFujita);
    println!("\n(2,8): {}", fujita.q2_verdict.basis());
    assert_eq!(classifier::classify(1, 3)?.q1_verdict, Q1Verdict::DegeneratePair(1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
