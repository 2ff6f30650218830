//! Every crate example runs to completion.

macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(classify_pair, classify_pair_runs, "classify_pair.rs");
example!(exceptional_pairs, exceptional_pairs_runs, "exceptional_pairs.rs");
example!(heat_coefficients, heat_coefficients_runs, "heat_coefficients.rs");
example!(exact_sweeps, exact_sweeps_runs, "exact_sweeps.rs");
example!(cpn_heat_fit, cpn_heat_fit_runs, "cpn_heat_fit.rs");
