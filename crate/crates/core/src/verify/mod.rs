//! Verification campaigns behind the `hyperlie-verify` binary.
//!
//! Each campaign produces a [`VerificationReport`] whose rows are written as
//! `<campaign>.csv` with columns [`CSV_COLUMNS`]; a `summary.json` records
//! pass counts and wall time.

mod campaigns;
mod config;
mod report;

pub use campaigns::{
    flux_drift, random_translation, ring_data, run_adjoint_max, run_all, run_compare, run_decay, run_harmonic, run_radial,
    run_solve2d, run_translate, sample_radial, Campaign,
};
pub use config::CampaignConfig;
pub use report::{combined_summary, write_outputs, Failure, Row, Summary, VerificationReport, CSV_COLUMNS};
