//! Which redex to reduce next.

use crate::analysis::{rightmost_cmp, Analysis, Redex, RedexKind};
use crate::kernel::{strictly_above, Deduction, Rule};

use super::steps::is_reducible;

fn same_redex(a: &Redex, b: &Redex) -> bool {
    a.kind == b.kind && a.path == b.path && a.top() == b.top()
}

/// Positions of the minor premises of the rule consuming `y`.
fn minor_positions(d: &Deduction, y: &Redex) -> Vec<Vec<usize>> {
    let Some((&k, parent)) = y.path.split_last() else {
        return vec![];
    };
    let arity = d.at(parent).map_or(0, |n| n.premises().len());
    let with = |j: usize| {
        let mut p = parent.to_vec();
        p.push(j);
        p
    };
    if y.consumer == Rule::NonContradiction {
        vec![with(1 - k)]
    } else {
        (1..arity).map(with).collect()
    }
}

/// Whether `y` meets the three selection conditions relative to the other
/// redexes of highest degree `top`.
fn qualifies(d: &Deduction, y: &Redex, top: &[&Redex]) -> bool {
    let others = || top.iter().filter(|x| !same_redex(x, y));
    // (i) nothing of highest degree above the redex
    if others().any(|x| strictly_above(&x.path, y.top())) {
        return false;
    }
    // (ii) nothing of highest degree above or at a minor premise of the
    // consuming rule
    for m in minor_positions(d, y) {
        if others().any(|x| x.path == m || strictly_above(&x.path, &m)) {
            return false;
        }
    }
    // (iii) no highest-degree segment runs through the case split's minor
    // premises
    if y.consumer.is_case_split() && y.path.last() == Some(&0) {
        let parent = &y.path[..y.path.len() - 1];
        let minors: Vec<Vec<usize>> = [1, 2]
            .iter()
            .map(|j| {
                let mut p = parent.to_vec();
                p.push(*j);
                p
            })
            .collect();
        if others().any(|x| {
            x.kind == RedexKind::Perm && x.occurrences().iter().any(|o| minors.contains(o))
        }) {
            return false;
        }
    }
    true
}

/// Highest-degree redexes ordered by preference: those meeting the
/// selection conditions first, each group rightmost first. Redexes without
/// a reduction step are left out.
pub fn candidates(d: &Deduction, analysis: &Analysis) -> Vec<Redex> {
    let top = analysis.top_redexes();
    let mut good = Vec::new();
    let mut rest = Vec::new();
    for y in &top {
        if !is_reducible(y) {
            continue;
        }
        if qualifies(d, y, &top) {
            good.push((*y).clone());
        } else {
            rest.push((*y).clone());
        }
    }
    good.sort_by(|a, b| rightmost_cmp(b, a));
    rest.sort_by(|a, b| rightmost_cmp(b, a));
    good.extend(rest);
    good
}

/// The rightmost highest-degree redex meeting the selection conditions, or
/// `None` when the deduction is normal. Falls back to the rightmost
/// highest-degree redex if none qualifies.
pub fn select_redex(d: &Deduction) -> Option<Redex> {
    let analysis = Analysis::of(d);
    let top = analysis.top_redexes();
    if top.is_empty() {
        return None;
    }
    let mut qualifying: Vec<&Redex> = top
        .iter()
        .copied()
        .filter(|y| qualifies(d, y, &top))
        .collect();
    if qualifying.is_empty() {
        qualifying = top.clone();
    }
    qualifying
        .into_iter()
        .max_by(|a, b| rightmost_cmp(a, b))
        .cloned()
}
