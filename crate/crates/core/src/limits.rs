use serde::{Deserialize, Serialize};

/// Size caps for the exponential searches. Exceeding one is always an
/// explicit [`Error::CapExceeded`](crate::Error::CapExceeded), never a
/// truncated answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase")]
pub struct Limits {
    /// Unweighted subset-table searches: PD, MNPD, 2-division.
    pub exhaustive: usize,
    /// Searches against a single explicit weight function.
    pub weighted: usize,
    /// Enumeration of all weight functions with values in `1..=W`, `W >= 2`.
    pub bounded_weight: usize,
    pub chromatic: usize,
    pub perfection: usize,
    /// Brute-force subset scans for homogeneous sets and basins.
    pub structure: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive: 16,
            weighted: 12,
            bounded_weight: 8,
            chromatic: 32,
            perfection: 32,
            structure: 20,
        }
    }
}
