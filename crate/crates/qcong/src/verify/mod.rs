//! The check registry: one named, parameterized verification per congruence
//! and identity, plus the cyclic-sum conjecture lab.
//!
//! Every check compares two exactly-computed canonical forms and reports
//! pass / fail / hypothesis_violated. Sweeping a grid must distinguish "the
//! congruence is false" from "the parameters fall outside the stated range",
//! so a violated precondition is a distinct status, never a failure.

mod congruences;
mod conjecture;
mod identities;
mod registry;
mod report;

pub use congruences::*;
pub use conjecture::*;
pub use identities::*;
pub use registry::*;
pub use report::*;
