//! Exact heat-invariant arithmetic for the spectral rigidity of Kähler
//! manifolds.
//!
//! * [`exact_arith`]: reduced rationals and the extended binomial convention.
//! * [`patodi`]: Patodi coefficients and the heat invariants `a_0, a_1, a_2`.
//! * [`diophantine`]: the exceptional `(p, n)` pairs where `a_1` degenerates.
//! * [`classifier`]: rigidity verdicts per `(p, n)` and the positivity-set check.
//! * [`checks`]: exhaustive exact sweeps (duality, reduction identity, signs).
//! * [`cpn_spectrum`]: the spectrum and heat trace of `CP^n(c)`, and a
//!   high-precision fit of its small-time coefficients.
//! * [`cli`]: the `kahler-spectra` command line.
//!
//! ## Examples
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example classify_pair      # verdicts, duality, the (2,8) cell
//! cargo run --example exceptional_pairs  # recursion vs direct scan
//! cargo run --example heat_coefficients  # λ table and closed-form a_2
//! cargo run --example exact_sweeps       # the exhaustive exact checks
//! cargo run --example cpn_heat_fit       # CP^n spectrum and heat-trace fit
//! ```

pub mod checks;
pub mod classifier;
pub mod cli;
pub mod cpn_spectrum;
pub mod diophantine;
pub mod error;
pub mod exact_arith;
pub mod patodi;

pub use dashu_float::DBig;
pub use error::{Error, Result};
pub use exact_arith::{binom_ext, factorial, Rational};
