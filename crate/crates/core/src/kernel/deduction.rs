use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use super::rule::Rule;
use crate::syntax::{Conclusion, SignedFormula};

/// Assumption class label.
pub type Label = u32;

/// Premise indices from the root, 0-based.
pub type Path = Vec<usize>;

/// A deduction tree. Leaves are hypotheses, inner nodes are rule
/// applications listing the assumption classes they discharge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Deduction {
    /// Well-formed hypotheses carry a signed formula; the parser still
    /// admits `bot` so that the checker can report it.
    Hypothesis {
        class: Label,
        assumption: Conclusion,
    },
    Inference {
        rule: Rule,
        conclusion: Conclusion,
        discharged: Vec<Label>,
        premises: Vec<Deduction>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("replacement concludes {found}, assumption class {class} holds {expected}")]
    ConclusionMismatch {
        class: Label,
        expected: Conclusion,
        found: Conclusion,
    },
    #[error("assumption class {0} is discharged inside the deduction")]
    ClassNotOpen(Label),
}

impl Deduction {
    pub fn hyp(class: Label, assumption: impl Into<Conclusion>) -> Deduction {
        Deduction::Hypothesis {
            class,
            assumption: assumption.into(),
        }
    }

    pub fn inf(
        rule: Rule,
        conclusion: impl Into<Conclusion>,
        discharged: Vec<Label>,
        premises: Vec<Deduction>,
    ) -> Deduction {
        Deduction::Inference {
            rule,
            conclusion: conclusion.into(),
            discharged,
            premises,
        }
    }

    pub fn conclusion(&self) -> Conclusion {
        match self {
            Deduction::Hypothesis { assumption, .. } => assumption.clone(),
            Deduction::Inference { conclusion, .. } => conclusion.clone(),
        }
    }

    /// Signed conclusion, `None` for absurdity.
    pub fn signed_conclusion(&self) -> Option<&SignedFormula> {
        match self {
            Deduction::Hypothesis { assumption, .. } => assumption.signed(),
            Deduction::Inference { conclusion, .. } => conclusion.signed(),
        }
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            Deduction::Hypothesis { .. } => None,
            Deduction::Inference { rule, .. } => Some(*rule),
        }
    }

    pub fn premises(&self) -> &[Deduction] {
        match self {
            Deduction::Hypothesis { .. } => &[],
            Deduction::Inference { premises, .. } => premises,
        }
    }

    pub fn discharged(&self) -> &[Label] {
        match self {
            Deduction::Hypothesis { .. } => &[],
            Deduction::Inference { discharged, .. } => discharged,
        }
    }

    pub fn is_intro(&self) -> bool {
        self.rule().is_some_and(Rule::is_intro)
    }

    pub fn is_reductio(&self) -> bool {
        self.rule() == Some(Rule::Reductio)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(Deduction::size).sum::<usize>()
    }

    pub fn at(&self, path: &[usize]) -> Option<&Deduction> {
        let mut node = self;
        for &i in path {
            node = node.premises().get(i)?;
        }
        Some(node)
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut Deduction> {
        let mut node = self;
        for &i in path {
            node = match node {
                Deduction::Hypothesis { .. } => return None,
                Deduction::Inference { premises, .. } => premises.get_mut(i)?,
            };
        }
        Some(node)
    }

    /// Replaces the subtree at `path`, returning the old one.
    ///
    /// Panics if the path does not address a node.
    pub fn replace_at(&mut self, path: &[usize], new: Deduction) -> Deduction {
        let slot = self.at_mut(path).expect("path out of range");
        std::mem::replace(slot, new)
    }

    /// Visits every node in pre-order together with its path.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&[usize], &'a Deduction)) {
        fn go<'a>(d: &'a Deduction, path: &mut Path, f: &mut impl FnMut(&[usize], &'a Deduction)) {
            f(path, d);
            for (i, p) in d.premises().iter().enumerate() {
                path.push(i);
                go(p, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f)
    }

    pub fn max_label(&self) -> Label {
        let mut max = 0;
        self.visit(&mut |_, d| match d {
            Deduction::Hypothesis { class, .. } => max = max.max(*class),
            Deduction::Inference { discharged, .. } => {
                max = discharged.iter().copied().fold(max, Label::max)
            }
        });
        max
    }

    /// Labels named in some discharge list.
    pub fn bound_labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        self.visit(&mut |_, d| out.extend(d.discharged().iter().copied()));
        out
    }

    /// Undischarged hypotheses, by class, with their occurrence counts.
    pub fn open_assumptions(&self) -> BTreeMap<Label, (SignedFormula, usize)> {
        let mut out: BTreeMap<Label, (SignedFormula, usize)> = BTreeMap::new();
        self.walk_scoped(&mut Vec::new(), &mut |scope, class, a| {
            if let (false, Some(a)) = (scope.contains(&class), a.signed()) {
                out.entry(class).or_insert_with(|| (a.clone(), 0)).1 += 1;
            }
        });
        out
    }

    /// Set of signed formulas among the open assumptions.
    pub fn open_formulas(&self) -> BTreeSet<SignedFormula> {
        self.open_assumptions()
            .into_values()
            .map(|(f, _)| f)
            .collect()
    }

    /// Calls `f` on every hypothesis with the labels discharged on its way
    /// to the root.
    fn walk_scoped(
        &self,
        scope: &mut Vec<Label>,
        f: &mut impl FnMut(&[Label], Label, &Conclusion),
    ) {
        match self {
            Deduction::Hypothesis { class, assumption } => f(scope, *class, assumption),
            Deduction::Inference {
                rule,
                discharged,
                premises,
                ..
            } => {
                let slots = rule.discharge_slots();
                for (i, p) in premises.iter().enumerate() {
                    let before = scope.len();
                    for (slot, label) in slots.iter().zip(discharged) {
                        if *slot == i {
                            scope.push(*label);
                        }
                    }
                    p.walk_scoped(scope, f);
                    scope.truncate(before);
                }
            }
        }
    }

    /// Rebuilds the tree, replacing each hypothesis for which `f` returns
    /// a deduction.
    pub fn map_hypotheses(
        &self,
        f: &mut impl FnMut(Label, &Conclusion) -> Option<Deduction>,
    ) -> Deduction {
        match self {
            Deduction::Hypothesis { class, assumption } => {
                f(*class, assumption).unwrap_or_else(|| self.clone())
            }
            Deduction::Inference {
                rule,
                conclusion,
                discharged,
                premises,
            } => Deduction::Inference {
                rule: *rule,
                conclusion: conclusion.clone(),
                discharged: discharged.clone(),
                premises: premises.iter().map(|p| p.map_hypotheses(f)).collect(),
            },
        }
    }

    /// Applies a label renaming to hypotheses and discharge lists alike.
    pub fn relabel(&self, map: &HashMap<Label, Label>) -> Deduction {
        let get = |l: &Label| *map.get(l).unwrap_or(l);
        match self {
            Deduction::Hypothesis { class, assumption } => Deduction::Hypothesis {
                class: get(class),
                assumption: assumption.clone(),
            },
            Deduction::Inference {
                rule,
                conclusion,
                discharged,
                premises,
            } => Deduction::Inference {
                rule: *rule,
                conclusion: conclusion.clone(),
                discharged: discharged.iter().map(get).collect(),
                premises: premises.iter().map(|p| p.relabel(map)).collect(),
            },
        }
    }

    /// Copy with every internally discharged class moved to a fresh label.
    pub fn refreshed(&self, supply: &mut LabelSupply) -> Deduction {
        let map: HashMap<Label, Label> = self
            .bound_labels()
            .into_iter()
            .map(|l| (l, supply.fresh()))
            .collect();
        self.relabel(&map)
    }

    /// Moves the hypotheses of class `from` into class `to`.
    pub fn rename_class(&self, from: Label, to: Label) -> Deduction {
        self.map_hypotheses(&mut |class, a| (class == from).then(|| Deduction::hyp(to, a.clone())))
    }

    pub fn count_class(&self, label: Label) -> usize {
        let mut n = 0;
        self.visit(&mut |_, d| {
            if let Deduction::Hypothesis { class, .. } = d {
                if *class == label {
                    n += 1;
                }
            }
        });
        n
    }

    /// Concludes every hypothesis of `class` by a freshly relabelled copy of
    /// `replacement`.
    pub fn substitute_hypotheses(
        &self,
        class: Label,
        replacement: &Deduction,
        supply: &mut LabelSupply,
    ) -> Result<Deduction, SubstError> {
        if self.bound_labels().contains(&class) {
            return Err(SubstError::ClassNotOpen(class));
        }
        let found = replacement.conclusion();
        let mut mismatch = None;
        let out = self.map_hypotheses(&mut |c, a| {
            if c != class {
                return None;
            }
            if found != *a {
                mismatch.get_or_insert_with(|| a.clone());
                return None;
            }
            Some(replacement.refreshed(supply))
        });
        match mismatch {
            Some(expected) => Err(SubstError::ConclusionMismatch {
                class,
                expected,
                found,
            }),
            None => Ok(out),
        }
    }
}

/// Monotone source of assumption class labels, never reusing one within a
/// session.
#[derive(Debug, Clone)]
pub struct LabelSupply {
    next: Label,
}

impl LabelSupply {
    /// Starts above every label used in `d`.
    pub fn for_tree(d: &Deduction) -> Self {
        LabelSupply {
            next: d.max_label() + 1,
        }
    }

    pub fn starting_at(next: Label) -> Self {
        LabelSupply { next }
    }

    pub fn fresh(&mut self) -> Label {
        let l = self.next;
        self.next += 1;
        l
    }

    /// Ensures future labels stay above those used in `d`.
    pub fn observe(&mut self, d: &Deduction) {
        self.next = self.next.max(d.max_label() + 1);
    }
}

/// Compares two paths by the post-order position of the nodes they address:
/// descendants come before ancestors, left subtrees before right ones.
pub fn postorder_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    // One is a prefix of the other; the shorter (ancestor) comes later.
    match a.len().cmp(&b.len()) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => Ordering::Equal,
    }
}

/// True when `inner` addresses a node strictly above `outer`.
pub fn strictly_above(inner: &[usize], outer: &[usize]) -> bool {
    inner.len() > outer.len() && inner.starts_with(outer)
}
