//! Shared inputs for the criterion benchmarks.

pub use wronski_core::conjectures::default_lambda_grid as lambda_grid;
