//! Independent engines, samplers and property suites.

pub mod brute;
pub mod sample;
pub mod suites;

pub use brute::{brute_force_det, dependence_search};
pub use sample::{sample, trial_rng, Sample, SampleKind, Sampler};
pub use suites::{run_suite, Failure, TrialReport, Verdict, SUITES};
