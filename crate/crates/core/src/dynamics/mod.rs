//! Orbits of the Zadeh extension, hitting searches, the constructive
//! transitivity witness and the isometry obstruction.

mod certificate;
mod hitting;
mod mixing;
mod orbit;
mod witness;

pub use certificate::{isometry_separation_certificate, sendograph_to_hyperspace, Extraction, Separation};
pub use hitting::{
    empirical_hitting, hitting_trial, hitting_trials, perturb, summarize, HittingQuery, HittingResult, MetricKind,
    TrialOutcome,
};
pub use mixing::{weak_mixing_check, weak_mixing_holds};
pub use orbit::{iterate_fuzzy, orbit_fuzzy};
pub use witness::{fuzzy_witness, LevelEntry, WitnessCertificate};
