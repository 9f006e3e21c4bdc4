//! Finite-level diagnostics around the polynomial log-signature question:
//! per-level vanishing of log-signatures, randomized searches for vanishing
//! runs, and growth profiles of signature levels.

mod profile;
mod sample;
mod vanishing;

pub use profile::{level_l1_norm, lp_profile, path_length, path_length_l1, LpProfile};
pub use sample::{random_path, random_rational, random_reduced_path, random_vector, trial_rng};
pub use vanishing::{
    vanish_search, vanishing_report, SearchParams, VanishingReport, STRUCTURED_SAMPLES,
};
