//! Dempster-Shafer evidence fusion.
//!
//! - [`frame`]: frames of discernment and subset algebra over a `u64` mask
//! - [`mass`]: basic probability assignments, belief, plausibility and core
//! - [`fusion`]: Dempster's rule with conflict accounting, traced pairwise
//!   combination, left-to-right folding and an exact n-way oracle
//! - [`scenario`]: motion evidence over conditions and direction prediction,
//!   including the built-in sepak takraw bicycle-kick model
//! - [`cli`]: scenario documents, reports and the `dsfusion` command line
//!
//! ```
//! use dsfusion::{combine, Frame, MassFunction};
//!
//! let frame = Frame::new(["F", "L", "R", "B"]).unwrap();
//! let front = frame.subset_of(&["F"]).unwrap();
//! let m = MassFunction::simple_support(&front, 0.75).unwrap();
//! let mm = combine(&m, &m).unwrap();
//! assert_eq!(mm.mass(&front).unwrap(), 0.9375);
//! ```

pub mod cli;
pub mod error;
pub mod frame;
pub mod fusion;
pub mod mass;
pub mod scenario;

pub use error::{Error, Result};
pub use frame::{Frame, Subset};
pub use fusion::{
    combine, combine_traced, conflict, fuse_all, oracle_fuse_all, oracle_fuse_exact,
    CombinationCell, CombinationTrace, FusionReport,
};
pub use mass::MassFunction;
pub use scenario::{builtin_takraw_scenario, Motion, Prediction, Scenario};
