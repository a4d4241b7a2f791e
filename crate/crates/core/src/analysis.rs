//! Maximal formulas, segments, effective degrees and the rank of a
//! deduction.
//!
//! Four configurations make a formula occurrence maximal:
//!
//! * `ie`: concluded by an introduction, major premise of an elimination;
//! * `re`: concluded by reductio, major premise of an elimination;
//! * `rnc`: concluded by reductio, premise of non-contradiction;
//! * `inc`: concluded by an introduction, premise of non-contradiction
//!   whose other premise is also concluded by an introduction.
//!
//! A segment is a chain of occurrences of one formula threaded through the
//! minor premises of `+orE`/`-andE`; it is maximal when its last occurrence
//! is a major premise of an elimination or a premise of non-contradiction.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::kernel::{Deduction, Path, Rule};
use crate::syntax::{Conclusion, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RedexKind {
    Perm,
    Ie,
    Re,
    Rnc,
    Inc,
}

impl RedexKind {
    pub fn name(self) -> &'static str {
        match self {
            RedexKind::Perm => "perm",
            RedexKind::Ie => "ie",
            RedexKind::Re => "re",
            RedexKind::Rnc => "rnc",
            RedexKind::Inc => "inc",
        }
    }
}

impl fmt::Display for RedexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// Occurrences from top to bottom.
    pub positions: Vec<Path>,
    pub formula: Conclusion,
    pub maximal: bool,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn first(&self) -> &Path {
        &self.positions[0]
    }

    pub fn last(&self) -> &Path {
        self.positions.last().unwrap()
    }
}

/// A maximal formula or maximal segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Redex {
    pub kind: RedexKind,
    /// Bottom occurrence: the formula itself, or a segment's last formula.
    pub path: Path,
    pub formula: Conclusion,
    pub effective_degree: usize,
    /// Right premise of non-contradiction whose left premise is maximal too.
    pub bumped: bool,
    /// Present for `perm`.
    pub segment: Option<Segment>,
    /// The rule consuming the bottom occurrence.
    pub consumer: Rule,
}

impl Redex {
    pub fn degree(&self) -> usize {
        self.formula.degree()
    }

    /// Position in the degree ordering: a bumped occurrence of degree `d`
    /// ranks above unbumped ones of degree `d` and below those of `d + 1`.
    pub fn level(&self) -> Level {
        Level {
            degree: self.degree(),
            bumped: self.bumped,
        }
    }

    /// Topmost occurrence: a segment's first formula, else the formula.
    pub fn top(&self) -> &Path {
        match &self.segment {
            Some(s) => s.first(),
            None => &self.path,
        }
    }

    /// Every occurrence the redex consists of.
    pub fn occurrences(&self) -> &[Path] {
        match &self.segment {
            Some(s) => &s.positions,
            None => std::slice::from_ref(&self.path),
        }
    }

    /// Weight towards the second rank component.
    pub fn weight(&self) -> usize {
        self.occurrences().len()
    }
}

/// Degree of a maximal occurrence, with the non-contradiction bump as a
/// half step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level {
    pub degree: usize,
    pub bumped: bool,
}

impl Level {
    pub fn plain(degree: usize) -> Level {
        Level {
            degree,
            bumped: false,
        }
    }

    fn as_f64(self) -> f64 {
        self.degree as f64 + if self.bumped { 0.5 } else { 0.0 }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bumped {
            write!(f, "{}.5", self.degree)
        } else {
            write!(f, "{}", self.degree)
        }
    }
}

/// Lexicographic complexity measure; `Zero` for redex-free deductions sits
/// below every pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Zero,
    Pair { d: Level, l: usize },
}

impl Rank {
    pub fn is_zero(&self) -> bool {
        matches!(self, Rank::Zero)
    }

    pub fn pair(d: usize, l: usize) -> Rank {
        Rank::Pair {
            d: Level::plain(d),
            l,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Zero => f.write_str("0"),
            Rank::Pair { d, l } => write!(f, "<{d}, {l}>"),
        }
    }
}

impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        match self {
            Rank::Zero => s.serialize_u8(0),
            Rank::Pair { d, l } => {
                let mut t = s.serialize_tuple(2)?;
                if d.bumped {
                    t.serialize_element(&d.as_f64())?;
                } else {
                    t.serialize_element(&d.degree)?;
                }
                t.serialize_element(l)?;
                t.end()
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Node<'a> {
    path: Path,
    deduction: &'a Deduction,
    /// (parent index, premise index within the parent)
    parent: Option<(usize, usize)>,
}

fn flatten(d: &Deduction) -> Vec<Node<'_>> {
    let mut nodes = Vec::new();
    let mut stack = vec![(d, Vec::new(), None)];
    while let Some((ded, path, parent)) = stack.pop() {
        let idx = nodes.len();
        for (i, p) in ded.premises().iter().enumerate().rev() {
            let mut child = path.clone();
            child.push(i);
            stack.push((p, child, Some((idx, i))));
        }
        nodes.push(Node {
            path,
            deduction: ded,
            parent,
        });
    }
    nodes
}

/// Everything the normalizer needs to know about a deduction's detours.
#[derive(Debug, Clone)]
pub struct Analysis {
    /// All segments, maximal or not.
    pub segments: Vec<Segment>,
    /// Maximal formulas and maximal segments, in pre-order of their bottom
    /// occurrence.
    pub redexes: Vec<Redex>,
}

impl Analysis {
    pub fn of(d: &Deduction) -> Analysis {
        let nodes = flatten(d);
        let rule_of = |i: usize| nodes[i].deduction.rule();
        let consumer = |i: usize| nodes[i].parent.map(|(p, k)| (rule_of(p).unwrap(), k, p));

        let is_case_split = |i: usize| rule_of(i).is_some_and(Rule::is_case_split);
        let is_minor_of_split =
            |i: usize| matches!(consumer(i), Some((r, k, _)) if r.is_case_split() && k >= 1);
        let feeds_detour = |i: usize| match consumer(i) {
            Some((r, 0, _)) if r.is_elim() => true,
            Some((Rule::NonContradiction, _, _)) => true,
            _ => false,
        };

        let mut segments = Vec::new();
        for (i, n) in nodes.iter().enumerate() {
            if is_case_split(i) || !is_minor_of_split(i) {
                continue;
            }
            let mut positions = vec![n.path.clone()];
            let mut cur = i;
            while is_minor_of_split(cur) {
                cur = n_parent(&nodes, cur);
                positions.push(nodes[cur].path.clone());
            }
            segments.push((
                cur,
                Segment {
                    positions,
                    formula: n.deduction.conclusion(),
                    maximal: feeds_detour(cur),
                },
            ));
        }

        let mut found: Vec<(usize, RedexKind, Option<Segment>)> = Vec::new();
        for (i, n) in nodes.iter().enumerate() {
            let Some((r, k, parent)) = consumer(i) else {
                continue;
            };
            let red = n.deduction.is_reductio();
            let intro = n.deduction.is_intro();
            let kind = if r.is_elim() && k == 0 && intro {
                RedexKind::Ie
            } else if r.is_elim() && k == 0 && red {
                RedexKind::Re
            } else if r == Rule::NonContradiction && red {
                RedexKind::Rnc
            } else if r == Rule::NonContradiction
                && intro
                && nodes[parent].deduction.premises()[1 - k].is_intro()
            {
                RedexKind::Inc
            } else {
                continue;
            };
            found.push((i, kind, None));
        }
        for (bottom, s) in &segments {
            if s.maximal {
                found.push((*bottom, RedexKind::Perm, Some(s.clone())));
            }
        }

        let maximal_bottoms: HashSet<usize> = found.iter().map(|(i, _, _)| *i).collect();
        let mut redexes: Vec<(usize, Redex)> = found
            .into_iter()
            .map(|(i, kind, segment)| {
                let (rule, k, parent) = consumer(i).unwrap();
                let formula = nodes[i].deduction.conclusion();
                let bumped = rule == Rule::NonContradiction
                    && k == 1
                    && maximal_bottoms.contains(&n_child(&nodes, parent, 0));
                let effective_degree = formula.degree() + usize::from(bumped);
                let redex = Redex {
                    kind,
                    path: nodes[i].path.clone(),
                    formula,
                    effective_degree,
                    bumped,
                    segment,
                    consumer: rule,
                };
                (i, redex)
            })
            .collect();
        redexes.sort_by_key(|(i, r)| (*i, r.segment.as_ref().map(|s| s.first().clone())));
        Analysis {
            segments: segments.into_iter().map(|(_, s)| s).collect(),
            redexes: redexes.into_iter().map(|(_, r)| r).collect(),
        }
    }

    pub fn maximal_formulas(&self) -> impl Iterator<Item = &Redex> {
        self.redexes.iter().filter(|r| r.kind != RedexKind::Perm)
    }

    pub fn maximal_segments(&self) -> impl Iterator<Item = &Redex> {
        self.redexes.iter().filter(|r| r.kind == RedexKind::Perm)
    }

    pub fn highest_degree(&self) -> Option<usize> {
        self.redexes.iter().map(|r| r.effective_degree).max()
    }

    pub fn highest_level(&self) -> Option<Level> {
        self.redexes.iter().map(Redex::level).max()
    }

    /// Redexes at the highest level.
    pub fn top_redexes(&self) -> Vec<&Redex> {
        let top = self.highest_level();
        self.redexes
            .iter()
            .filter(|r| Some(r.level()) == top)
            .collect()
    }

    /// `<d, l>` with `d` the highest level and `l` the number of maximal
    /// formulas plus the summed lengths of maximal segments at that level.
    pub fn rank(&self) -> Rank {
        match self.highest_level() {
            None => Rank::Zero,
            Some(d) => Rank::Pair {
                d,
                l: self.top_redexes().into_iter().map(Redex::weight).sum(),
            },
        }
    }

    /// Number of maximal formulas plus the summed lengths of all maximal
    /// segments, whatever their degree.
    pub fn total_weight(&self) -> usize {
        self.redexes.iter().map(Redex::weight).sum()
    }

    pub fn is_normal(&self) -> bool {
        self.redexes.is_empty()
    }
}

fn n_parent(nodes: &[Node<'_>], i: usize) -> usize {
    nodes[i].parent.unwrap().0
}

fn n_child(nodes: &[Node<'_>], parent: usize, k: usize) -> usize {
    // Children of a node are contiguous in pre-order; find the k-th.
    let mut idx = parent + 1;
    for _ in 0..k {
        idx += nodes[idx].deduction.size();
    }
    idx
}

pub fn segments(d: &Deduction) -> Vec<Segment> {
    Analysis::of(d).segments
}

pub fn maximal_occurrences(d: &Deduction) -> Vec<Redex> {
    Analysis::of(d).maximal_formulas().cloned().collect()
}

pub fn rank(d: &Deduction) -> Rank {
    Analysis::of(d).rank()
}

pub fn is_normal(d: &Deduction) -> bool {
    Analysis::of(d).is_normal()
}

/// Orders redexes so that the one whose bottom occurrence comes latest in
/// post-order is greatest.
pub fn rightmost_cmp(a: &Redex, b: &Redex) -> Ordering {
    crate::kernel::postorder_cmp(&a.path, &b.path)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubformulaViolation {
    pub path: Path,
    pub formula: Formula,
}

/// Occurrences whose unsigned body is not a subformula of the conclusion or
/// of an open assumption. Absurdity is exempt.
pub fn subformula_report(d: &Deduction) -> Vec<SubformulaViolation> {
    let mut allowed: BTreeSet<Formula> = BTreeSet::new();
    if let Some(c) = d.signed_conclusion() {
        allowed.extend(c.body.subformulas());
    }
    for f in d.open_formulas() {
        allowed.extend(f.body.subformulas());
    }
    let mut out = Vec::new();
    d.visit(&mut |path, node| {
        if let Some(sf) = node.signed_conclusion() {
            if !allowed.contains(&sf.body) {
                out.push(SubformulaViolation {
                    path: path.to_vec(),
                    formula: sf.body.clone(),
                });
            }
        }
    });
    out
}
