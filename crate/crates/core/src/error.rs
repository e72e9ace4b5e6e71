use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse group spec {0:?} (expected e.g. A3, E8, SU(4), Spin(10), Sp(6))")]
    GroupSpec(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error(
        "Weyl group of {group} has {order} elements, exceeding the cap of {cap}; \
         use the closed-form routes (globaldim, cs3) instead"
    )]
    WeylCapExceeded { group: String, order: u128, cap: u64 },

    #[error("weight {weight} is not integrable at level {level}")]
    NotIntegrable { weight: String, level: u32 },

    #[error("argument {arg} lies outside the unitary window (0, {altitude})")]
    OutsideUnitaryWindow { arg: String, altitude: u32 },

    #[error("Verlinde sum is not integral: residue {residue} at N_{m}[{n}][{p}]")]
    NotIntegral {
        m: usize,
        n: usize,
        p: usize,
        residue: f64,
    },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("route {route} needs {missing}")]
    MissingRouteData {
        route: &'static str,
        missing: &'static str,
    },

    #[error("central charges differ for {id}: {lhs} (inner) vs {rhs} (outer)")]
    CentralCharge { id: String, lhs: String, rhs: String },

    #[error("semi-simple inner group in {0}: only simple inner groups are supported")]
    SemiSimple(String),

    #[error("unknown catalog id {0:?}")]
    UnknownCatalogId(String),

    #[error("bad catalog record {record}: {reason}")]
    Catalog { record: String, reason: String },

    #[error("weight system of {weight} exceeds the cap of {cap} weights")]
    WeightSystemCap { weight: String, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
