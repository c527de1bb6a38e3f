//! Shared fixtures for the criterion benches.

use lwd_core::{bch, reed_muller, LinearCode};

/// Named codes the benches sweep, smallest first.
pub fn fixtures() -> Vec<(&'static str, LinearCode)> {
    vec![
        ("rm(2,4)", reed_muller(2, 4).expect("valid parameters")),
        ("bch(31,16)", bch(5, 7).expect("valid parameters")),
        ("rm(2,5)", reed_muller(2, 5).expect("valid parameters")),
    ]
}
