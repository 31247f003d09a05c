use thiserror::Error;

/// Errors raised by frame construction, mass validation, combination and
/// scenario evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame has no hypotheses")]
    EmptyFrame,
    #[error("frame has {0} hypotheses, at most 64 are supported")]
    FrameTooLarge(usize),
    #[error("duplicate hypothesis label `{0}`")]
    DuplicateLabel(String),
    #[error("hypothesis labels must be non-empty")]
    EmptyLabel,
    #[error("unknown hypothesis label `{0}`")]
    UnknownLabel(String),
    #[error("subsets or mass functions belong to different frames")]
    FrameMismatch,

    #[error("masses sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },
    #[error("mass {0} is negative or not finite")]
    NegativeMass(f64),
    #[error("the empty set cannot carry mass ({0})")]
    EmptySetMass(f64),
    #[error("simple support needs a non-empty focal element")]
    EmptyFocal,
    #[error("support weight {0} is outside (0, 1]")]
    WeightOutOfRange(f64),
    #[error("simple support focal element must be a proper subset of the frame")]
    FocalIsFullFrame,

    #[error("{}", total_conflict_message(*.k, *.step))]
    TotalConflict {
        k: f64,
        /// 1-based combination step within a fold, when known.
        step: Option<usize>,
    },
    #[error("no evidence sources given")]
    EmptyInput,
    #[error("oracle enumeration would visit {tuples} focal tuples (cap {cap})")]
    ExplosionGuard { tuples: u128, cap: u128 },

    #[error("condition {condition} out of range 1..={count}")]
    ConditionOutOfRange { condition: usize, count: usize },
    #[error("no proper focal element to decide on")]
    NoCandidate,
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
}

fn total_conflict_message(k: f64, step: Option<usize>) -> String {
    match step {
        Some(step) => format!("total conflict (k = {k}) at combination step {step}"),
        None => format!("total conflict (k = {k}): evidence cores are disjoint"),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
