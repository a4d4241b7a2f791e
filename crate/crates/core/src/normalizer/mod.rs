//! Normalization: reduction steps, redex selection and the top-level loop.

mod atomize;
pub mod steps;
pub mod strategy;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{Analysis, Rank};
use crate::kernel::{check, CheckReport, Deduction, LabelSupply, Path, SystemConfig};
use crate::syntax::Connective;

pub use atomize::{atomize_nc, AtomizeError};
pub use steps::{is_reducible, reduce, simplify, StepError};
pub use strategy::{candidates, select_redex};

pub const DEFAULT_MAX_STEPS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StepRecord {
    pub index: usize,
    pub kind: &'static str,
    pub subcase: String,
    pub position: Path,
    pub rank_before: Rank,
    pub rank_after: Rank,
    /// Set when the preferred redex did not lower the rank and another
    /// highest-degree redex was reduced instead.
    #[serde(skip)]
    pub fallback: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Outcome {
    Normal,
    Stuck,
    StepLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StuckRedex {
    pub kind: &'static str,
    pub connective: String,
    pub position: Path,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Trace {
    pub outcome: Outcome,
    pub steps: Vec<StepRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub stuck_redexes: Vec<StuckRedex>,
}

#[derive(Debug, Error)]
pub enum NormalizeError {
    #[error("input does not check: {} violation(s)", .0.violations.len())]
    IllFormed(CheckReport),
    #[error("rank did not decrease at step {step}: {message}")]
    RankNotDecreasing {
        step: usize,
        message: String,
        trace: Trace,
    },
    #[error("step {step} produced an ill-formed deduction: {report:?}")]
    BrokenStep {
        step: usize,
        report: CheckReport,
        trace: Trace,
    },
}

#[derive(Debug, Clone)]
pub struct NormalizeOptions {
    pub max_steps: usize,
    /// Re-check every intermediate deduction.
    pub verify: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            max_steps: DEFAULT_MAX_STEPS,
            verify: cfg!(debug_assertions),
        }
    }
}

fn stuck_list(analysis: &Analysis) -> Vec<StuckRedex> {
    analysis
        .redexes
        .iter()
        .filter(|r| !is_reducible(r))
        .map(|r| StuckRedex {
            kind: r.kind.name(),
            connective: r
                .consumer
                .connective()
                .map_or("?", Connective::name)
                .to_string(),
            position: r.path.clone(),
            formula: r.formula.to_string(),
        })
        .collect()
}

/// Normalizes with default options.
pub fn normalize(
    d: &Deduction,
    cfg: &SystemConfig,
    max_steps: usize,
) -> Result<(Deduction, Trace), NormalizeError> {
    normalize_with(
        d,
        cfg,
        &NormalizeOptions {
            max_steps,
            ..NormalizeOptions::default()
        },
    )
}

pub fn normalize_with(
    d: &Deduction,
    cfg: &SystemConfig,
    opts: &NormalizeOptions,
) -> Result<(Deduction, Trace), NormalizeError> {
    let report = check(d, cfg);
    if !report.ok() {
        return Err(NormalizeError::IllFormed(report));
    }
    let mut supply = LabelSupply::for_tree(d);
    let mut cur = d.clone();
    let mut steps: Vec<StepRecord> = Vec::new();
    let finish = |outcome, steps, stuck_redexes| Trace {
        outcome,
        steps,
        stuck_redexes,
    };
    loop {
        let analysis = Analysis::of(&cur);
        if analysis.is_normal() {
            return Ok((cur, finish(Outcome::Normal, steps, vec![])));
        }
        if steps.len() >= opts.max_steps {
            return Ok((cur, finish(Outcome::StepLimit, steps, vec![])));
        }
        let before = analysis.rank();
        let mut chosen = None;
        let mut last_problem = String::from("no reducible redex of highest degree");
        for (n, redex) in candidates(&cur, &analysis).into_iter().enumerate() {
            match reduce(&cur, &redex, &mut supply) {
                Ok((next, subcase)) => {
                    let next = simplify(&next);
                    let after = Analysis::of(&next).rank();
                    if after < before {
                        chosen = Some((next, redex, subcase, after, n > 0));
                        break;
                    }
                    last_problem = format!(
                        "{} redex at {:?} gives rank {after} from {before}",
                        redex.kind, redex.path
                    );
                }
                Err(e) => last_problem = e.to_string(),
            }
        }
        let Some((next, redex, subcase, after, fallback)) = chosen else {
            let stuck = stuck_list(&analysis);
            if !stuck.is_empty() {
                return Ok((cur, finish(Outcome::Stuck, steps, stuck)));
            }
            let step = steps.len();
            return Err(NormalizeError::RankNotDecreasing {
                step,
                message: last_problem,
                trace: finish(Outcome::Stuck, steps, vec![]),
            });
        };
        steps.push(StepRecord {
            index: steps.len(),
            kind: redex.kind.name(),
            subcase,
            position: redex.path.clone(),
            rank_before: before,
            rank_after: after,
            fallback,
        });
        if opts.verify {
            let report = check(&next, cfg);
            if !report.ok() {
                let step = steps.len() - 1;
                return Err(NormalizeError::BrokenStep {
                    step,
                    report,
                    trace: finish(Outcome::Stuck, steps, vec![]),
                });
            }
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse, print};

    #[test]
    fn trace_records_each_step() {
        let d = parse(
            "(+andE1 (+ A) () (+andI (+ (and A B)) () \
               (+andE1 (+ A) () (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))) \
               (hyp 2 (+ B))))",
        )
        .unwrap();
        let (out, trace) = normalize(&d, &SystemConfig::classical(), 10).unwrap();
        assert_eq!(print(&out), "(hyp 1 (+ A))");
        assert_eq!(trace.outcome, Outcome::Normal);
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.steps[0].rank_before, Rank::pair(1, 2));
        assert_eq!(trace.steps[1].rank_after, Rank::Zero);
        assert!(trace
            .steps
            .iter()
            .all(|s| s.rank_after < s.rank_before && !s.fallback));
        assert_eq!(trace.steps[1].index, 1);
    }

    #[test]
    fn zero_step_limit() {
        let d = parse("(+notE (- A) () (+notI (+ (not A)) () (hyp 1 (- A))))").unwrap();
        let (out, trace) = normalize(&d, &SystemConfig::classical(), 0).unwrap();
        assert_eq!(out, d);
        assert_eq!(trace.outcome, Outcome::StepLimit);
    }

    #[test]
    fn verification_can_be_switched_off() {
        let d = parse("(+notE (- A) () (+notI (+ (not A)) () (hyp 1 (- A))))").unwrap();
        let opts = NormalizeOptions {
            max_steps: 5,
            verify: false,
        };
        let (out, _) = normalize_with(&d, &SystemConfig::classical(), &opts).unwrap();
        assert_eq!(print(&out), "(hyp 1 (- A))");
    }
}
