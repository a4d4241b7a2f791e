//! Deduction trees, assumption classes and the well-formedness checker.

pub(crate) mod check;
mod deduction;
mod rule;

pub use check::{check, CheckReport, CoordMode, SystemConfig, Violation, ViolationKind};
pub use deduction::{
    postorder_cmp, strictly_above, Deduction, Label, LabelSupply, Path, SubstError,
};
pub use rule::{Rule, RuleKind};
