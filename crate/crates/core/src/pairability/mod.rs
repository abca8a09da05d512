//! Path-pairability: exact decision for small graphs and a necessary-condition screener.

mod decide;
mod screen;
mod search;

pub use decide::{
    enumerate_pairings, is_path_pairable, is_path_pairable_with, pairing_count, DecideError,
    DecideOptions, DecideStats, Status, Verdict, MAX_ENUMERATION_VERTICES,
};
pub use screen::{
    diameter_bound, screen, screen_with, Certificate, DiameterViolation, LayerCutViolation,
    LayerPairViolation, RootFindings, ScreenError, ScreenReport, ScreenVerdict, DIAMETER_BOUND_MIN,
};
pub use search::{find_disjoint_paths, SearchOutcome, SearchResult, DEFAULT_BUDGET};
