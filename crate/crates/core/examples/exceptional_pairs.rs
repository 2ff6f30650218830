// Integer solutions of `3p² − 6np + 2n² − n = 0`, where the `a₁` invariant
// carries no information. The closed-form recursion is checked against a
// direct scan, and successive ratios approach `7 + 4√3`.
//
// ```bash
// cargo run --example exceptional_pairs
// ```

use kahler_spectra::diophantine;
use num_traits::ToPrimitive;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = diophantine::enumerate_recursive(12)?;
    for e in &pairs {
        println!("k = {}: (p, n) = ({}, {})", e.k, e.p, e.n);
    }

    let cmp = diophantine::compare_methods(1_000_000)?;
    println!(
        "n <= {}: recursion finds {}, direct scan finds {}, agree = {}",
        cmp.max_n,
        cmp.recursion.len(),
        cmp.bruteforce.len(),
        cmp.agree
    );
    assert!(cmp.agree);

    let limit = 7.0 + 4.0 * 3f64.sqrt();
    let last = pairs.len() - 1;
    let ratio = pairs[last].n.to_f64().unwrap() / pairs[last - 1].n.to_f64().unwrap();
    println!("n_12 / n_11 = {ratio:.12}, 7 + 4*sqrt(3) = {limit:.12}");
    assert!((ratio - limit).abs() < 1e-9);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
