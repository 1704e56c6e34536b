//! Theorem-level checks over single graphs and corpora, open-problem
//! hunters, and the configurable suite runner with JSON reports.

mod checks;
mod hunt;
mod properties;
mod report;
mod suite;

pub use checks::{check_chromatic_and_critical, check_structural_theorems, check_weight_equivalence};
pub use hunt::{hunt_open_problems, persist_hit, HitRecord, HuntOptions, OpenProblem};
pub use properties::{check_mn2d_properties, check_mnpd_properties};
pub use report::{TheoremId, TheoremReport, Violation};
pub use suite::{load_corpus, run_suite, CorpusSpec, SuiteConfig, SuiteReport, DEFAULT_CONFIG};
