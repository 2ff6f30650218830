// Numerical cross-check on CP^n(c). The Laplace spectrum is explicit, so
// the heat trace can be summed to 60 digits with a certified tail, and a
// least-squares fit of `(4πt)^n Z(t)` recovers `a₀ = Vol`, `a₁/a₀ = s/6`
// and the exact `a₂/a₀`.
//
// ```bash
// cargo run --example cpn_heat_fit
// ```

use kahler_spectra::cpn_spectrum::{self, FitConfig};
use kahler_spectra::{DBig, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = Rational::from(4);
    for level in cpn_spectrum::levels(2, &c, 4)? {
        println!(
            "CP^2(4): k = {}, eigenvalue {}, multiplicity {}",
            level.k, level.eigenvalue, level.multiplicity
        );
    }

    let t: DBig = "0.05".parse()?;
    let eps: DBig = "1e-40".parse()?;
    let z = cpn_spectrum::heat_trace(&t, 2, &c, &eps, 50)?;
    println!(
        "Z(0.05) on CP^2(4) = {} (cutoff {}, tail <= {})",
        cpn_spectrum::to_decimal_string(&z.value, 30),
        z.cutoff,
        z.truncation_bound
            .as_ref()
            .map_or("-".into(), |b| cpn_spectrum::to_scientific_string(b, 3))
    );

    for n in 1..=3 {
        let fit = cpn_spectrum::fit_asymptotics(n, &c, &FitConfig::default())?;
        println!(
            "\nCP^{n}(4): fit residual {}, a0 vs volume rel err {}",
            cpn_spectrum::to_scientific_string(&fit.fit_residual, 3),
            cpn_spectrum::to_scientific_string(&fit.a0_relative_error()?, 3)
        );
        for i in 1..=2 {
            let (Some(ratio), Some(exact), Some(err)) = (
                fit.ratio(i),
                fit.predicted_ratio(i),
                fit.ratio_relative_error(i),
            ) else {
                continue;
            };
            println!(
                "  a{i}/a0 = {} (exact {exact}, rel err {})",
                cpn_spectrum::to_decimal_string(&ratio, 15),
                cpn_spectrum::to_scientific_string(&err, 3)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
