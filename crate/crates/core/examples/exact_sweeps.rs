// The exhaustive exact checks behind `kahler-spectra verify`, on a small
// range: duality `p ↦ 2n − p`, the exact reduction identity, the sign sweep
// of `λ₁` and the reduced coefficient, and the set comparison against the
// published case list.
//
// ```bash
// cargo run --example exact_sweeps
// ```

use kahler_spectra::checks;
use kahler_spectra::classifier::{self, Cell};
use kahler_spectra::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = 60;

    let duality = checks::verify_duality(max_n)?;
    println!("duality: {} comparisons, {} violations", duality.checks, duality.violations.len());

    let identity = checks::verify_reduction_identity(max_n)?;
    println!("reduction identity: {} cells, {} violations", identity.checks, identity.violations.len());

    let signs = checks::sweep_positivity(max_n)?;
    let show = |cells: &mut dyn Iterator<Item = &Cell>| {
        cells.map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    };
    println!(
        "signs: {} cells, lambda1 = 0 at {}, lambda1 < 0 at {} cells",
        signs.cells_checked,
        show(&mut signs.lambda1_zero.iter()),
        signs.lambda1_negative.len()
    );

    // Between integers, p = a/b with b <= 3: λ₁ / C(2n, p) has no new zeros.
    let rational = checks::sweep_rational_p(20, 3)?;
    let zeros: Vec<String> = rational
        .lambda1_zero
        .iter()
        .map(|(p, n)| format!("({p},{n})"))
        .collect();
    println!(
        "rational p grid: {} points, zeros {}",
        rational.points_checked,
        zeros.join(" ")
    );
    assert_eq!(rational.lambda1_zero[0], (Rational::from(2), 8));

    let lemma = classifier::verify_lastlemma(max_n)?;
    println!(
        "case list: {} cells, {} satisfy the condition, diff {}",
        lemma.cells_checked,
        lemma.satisfying_count,
        show(&mut lemma.diff().iter())
    );
    for row in lemma.boundary_rows.iter().filter(|r| r.computed != r.claimed) {
        println!(
            "  ({},{}): lambda1 = {}, reduced = {}",
            row.p, row.n, row.lambda1, row.reduced_coeff
        );
    }

    assert!(duality.passed() && identity.passed() && signs.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
