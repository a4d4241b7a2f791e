//! Random check-valid deductions for testing.
//!
//! Trees are built top-down from a goal over the atoms A, B, C, D. At each
//! node the generator picks a hypothesis, an introduction, an elimination,
//! a case split or reductio; `redex_bias` raises the odds of an elimination
//! whose major premise is concluded by an introduction, reductio or a case
//! split, and of non-contradiction between two introductions.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::check::{intro_schema, part, projection_schema, Part};
use crate::kernel::{CoordMode, Deduction, Label, Rule, SystemConfig};
use crate::syntax::{Conclusion, Connective, Formula, Sign, SignedFormula};

const ATOMS: [&str; 4] = ["A", "B", "C", "D"];

#[derive(Debug, Clone)]
pub struct GeneratorParams {
    pub seed: u64,
    pub max_nodes: usize,
    pub cfg: SystemConfig,
    pub redex_bias: f64,
}

impl GeneratorParams {
    pub fn new(seed: u64, max_nodes: usize) -> Self {
        GeneratorParams {
            seed,
            max_nodes,
            cfg: SystemConfig::classical(),
            redex_bias: 0.5,
        }
    }
}

pub fn generate(p: &GeneratorParams) -> Deduction {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(p.seed),
        cfg: &p.cfg,
        bias: p.redex_bias.clamp(0.0, 1.0),
        next: 1,
        scope: Vec::new(),
        free: HashMap::new(),
    };
    let budget = p.max_nodes.max(1);
    let goal = if budget >= 3 && g.nc_possible() && g.rng.gen_bool(0.1) {
        Conclusion::Absurdity
    } else {
        let depth = g.rng.gen_range(0..=2);
        let body = g.formula(depth);
        let sign = if g.rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Conclusion::Signed(SignedFormula::new(sign, body))
    };
    g.gen(&goal, budget, Force::Any)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Force {
    Any,
    Intro,
    Red,
    Split,
}

/// A premise to generate: its conclusion, a class to open over it, and a
/// steer.
type Goal = (Conclusion, Option<(Label, SignedFormula)>, Force);

struct Gen<'a> {
    rng: ChaCha8Rng,
    cfg: &'a SystemConfig,
    bias: f64,
    next: Label,
    /// Classes discharged below the current node.
    scope: Vec<(Label, SignedFormula)>,
    free: HashMap<SignedFormula, Label>,
}

fn min_size(goal: &Conclusion) -> usize {
    if goal.is_absurdity() {
        3
    } else {
        1
    }
}

impl Gen<'_> {
    fn fresh(&mut self) -> Label {
        self.next += 1;
        self.next - 1
    }

    fn has(&self, c: Connective) -> bool {
        self.cfg.connectives.contains(&c)
    }

    fn nc_possible(&self) -> bool {
        self.cfg.nc != CoordMode::Disabled
    }

    fn red_possible(&self, goal: &SignedFormula) -> bool {
        self.nc_possible()
            && match self.cfg.reductio {
                CoordMode::General => true,
                CoordMode::AtomicOnly => goal.body.is_atomic(),
                CoordMode::Disabled => false,
            }
    }

    fn atom(&mut self) -> Formula {
        Formula::atom(ATOMS.choose(&mut self.rng).unwrap())
    }

    fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.3) {
            return self.atom();
        }
        let cs: Vec<Connective> = self.cfg.connectives.iter().copied().collect();
        let c = *cs.choose(&mut self.rng).unwrap();
        let a = self.formula(depth - 1);
        if c == Connective::Not {
            Formula::not(a)
        } else {
            let b = self.formula(depth - 1);
            Formula::binary(c, a, b)
        }
    }

    fn hyp(&mut self, goal: &SignedFormula) -> Deduction {
        let bound: Vec<Label> = self
            .scope
            .iter()
            .filter(|(_, f)| f == goal)
            .map(|(l, _)| *l)
            .collect();
        if !bound.is_empty() && self.rng.gen_bool(0.85) {
            return Deduction::hyp(*bound.choose(&mut self.rng).unwrap(), goal.clone());
        }
        let label = match self.free.get(goal) {
            Some(l) => *l,
            None => {
                let l = self.fresh();
                self.free.insert(goal.clone(), l);
                l
            }
        };
        Deduction::hyp(label, goal.clone())
    }

    /// Generates the premises in order, each within what the later ones
    /// leave over. `bind` gives a class to open while generating a premise.
    fn premises(&mut self, goals: &[Goal], budget: usize) -> Vec<Deduction> {
        let mut rem = budget;
        let mut out = Vec::new();
        for (i, (goal, bind, force)) in goals.iter().enumerate() {
            let reserve: usize = goals[i + 1..].iter().map(|(g, _, _)| min_size(g)).sum();
            let avail = rem - reserve;
            let need = min_size(goal);
            let share = if i + 1 == goals.len() {
                avail
            } else {
                self.rng.gen_range(need..=avail)
            };
            if let Some(b) = bind {
                self.scope.push(b.clone());
            }
            let d = self.gen(goal, share, *force);
            if bind.is_some() {
                self.scope.pop();
            }
            rem -= d.size();
            out.push(d);
        }
        out
    }

    fn needs(goals: &[Goal]) -> usize {
        1 + goals.iter().map(|(g, _, _)| min_size(g)).sum::<usize>()
    }

    fn gen(&mut self, goal: &Conclusion, budget: usize, force: Force) -> Deduction {
        match goal {
            Conclusion::Absurdity => self.absurdity(budget),
            Conclusion::Signed(sf) => self.signed(sf, budget, force),
        }
    }

    fn absurdity(&mut self, budget: usize) -> Deduction {
        debug_assert!(budget >= 3 && self.nc_possible());
        let split_ok = budget >= 8 && (self.has(Connective::Or) || self.has(Connective::And));
        if split_ok && self.rng.gen_bool(0.15 + 0.15 * self.bias) {
            if let Some(d) = self.case_split(&Conclusion::Absurdity, budget, Force::Any) {
                return d;
            }
        }
        let f = if self.cfg.nc == CoordMode::AtomicOnly {
            self.atom()
        } else if !self.scope.is_empty() && self.rng.gen_bool(0.4) {
            self.scope.choose(&mut self.rng).unwrap().1.body.clone()
        } else {
            let depth = self.rng.gen_range(0..=2);
            self.formula(depth)
        };
        let (fl, fr) = if self.rng.gen_bool(0.5) {
            (Force::Intro, Force::Intro)
        } else if self.rng.gen_bool(0.5) {
            (Force::Any, Force::Red)
        } else {
            (Force::Red, Force::Any)
        };
        let detour = self.rng.gen_bool(self.bias * 0.6);
        let (fl, fr) = if detour {
            (fl, fr)
        } else {
            (Force::Any, Force::Any)
        };
        let (l, r) = if self.rng.gen_bool(0.5) {
            (SignedFormula::plus(f.clone()), SignedFormula::minus(f))
        } else {
            (SignedFormula::minus(f.clone()), SignedFormula::plus(f))
        };
        let ps = self.premises(&[(l.into(), None, fl), (r.into(), None, fr)], budget - 1);
        Deduction::inf(Rule::NonContradiction, Conclusion::Absurdity, vec![], ps)
    }

    fn signed(&mut self, goal: &SignedFormula, budget: usize, force: Force) -> Deduction {
        if budget <= 1 {
            return self.hyp(goal);
        }
        let attempt = match force {
            Force::Intro => self.intro(goal, budget),
            Force::Red => self.reductio(goal, budget, true),
            Force::Split => self.case_split(&goal.clone().into(), budget, Force::Any),
            Force::Any => None,
        };
        if let Some(d) = attempt {
            return d;
        }
        for _ in 0..4 {
            let roll: f64 = self.rng.gen();
            let small = budget < 4;
            let attempt = if roll < 0.12 || (small && roll < 0.4) {
                return self.hyp(goal);
            } else if roll < 0.40 {
                self.intro(goal, budget)
            } else if roll < 0.40 + 0.35 * self.bias {
                self.elim(goal, budget, true)
            } else if roll < 0.85 {
                self.elim(goal, budget, false)
            } else if roll < 0.93 {
                self.reductio(goal, budget, false)
            } else {
                self.case_split(&goal.clone().into(), budget, Force::Any)
            };
            if let Some(d) = attempt {
                return d;
            }
        }
        self.hyp(goal)
    }

    fn intro(&mut self, goal: &SignedFormula, budget: usize) -> Option<Deduction> {
        let c = goal.body.main_connective()?;
        if !self.has(c) {
            return None;
        }
        let rules: Vec<Rule> = Rule::ALL
            .iter()
            .copied()
            .filter(|r| r.is_intro() && r.connective() == Some(c) && r.sign() == Some(goal.sign))
            .collect();
        let rule = *rules.choose(&mut self.rng)?;
        if rule == Rule::PlusImpI {
            let (a, b) = (part(&goal.body, Part::Left), part(&goal.body, Part::Right));
            let class = self.fresh();
            let goals = [(
                SignedFormula::plus(b.clone()).into(),
                Some((class, SignedFormula::plus(a.clone()))),
                Force::Any,
            )];
            let ps = self.premises(&goals, budget - 1);
            return Some(Deduction::inf(rule, goal.clone(), vec![class], ps));
        }
        let schema = intro_schema(rule)?;
        let goals: Vec<_> = schema
            .iter()
            .map(|(s, p)| {
                (
                    Conclusion::from(SignedFormula::new(*s, part(&goal.body, *p).clone())),
                    None,
                    Force::Any,
                )
            })
            .collect();
        if Self::needs(&goals) > budget {
            return None;
        }
        let ps = self.premises(&goals, budget - 1);
        Some(Deduction::inf(rule, goal.clone(), vec![], ps))
    }

    /// An elimination concluding `goal`; with `detour` the major premise is
    /// concluded by an introduction, reductio or a case split.
    fn elim(&mut self, goal: &SignedFormula, budget: usize, detour: bool) -> Option<Deduction> {
        let mut options: Vec<Rule> = Rule::ALL
            .iter()
            .copied()
            .filter(|r| {
                r.connective().is_some_and(|c| self.has(c))
                    && projection_schema(*r).is_some_and(|(s, _)| s == goal.sign)
            })
            .collect();
        if goal.sign == Sign::Plus && self.has(Connective::Imp) {
            options.push(Rule::PlusImpE);
        }
        let rule = *options.choose(&mut self.rng)?;
        let c = rule.connective().unwrap();
        let force = if !detour {
            Force::Any
        } else {
            *[Force::Intro, Force::Intro, Force::Red, Force::Split]
                .choose(&mut self.rng)
                .unwrap()
        };
        let other_depth = self.rng.gen_range(0..=1);
        let other = self.formula(other_depth);
        let body = goal.body.clone();
        if rule == Rule::PlusImpE {
            let major = SignedFormula::plus(Formula::imp(other.clone(), body));
            let goals = [
                (major.into(), None, force),
                (SignedFormula::plus(other).into(), None, Force::Any),
            ];
            if Self::needs(&goals) > budget {
                return None;
            }
            let ps = self.premises(&goals, budget - 1);
            return Some(Deduction::inf(rule, goal.clone(), vec![], ps));
        }
        let (_, p) = projection_schema(rule).unwrap();
        let major_body = match (c, p) {
            (Connective::Not, _) => Formula::not(body),
            (_, Part::Left) => Formula::binary(c, body, other),
            (_, Part::Right) => Formula::binary(c, other, body),
        };
        let major = SignedFormula::new(rule.sign().unwrap(), major_body);
        let ps = self.premises(&[(major.into(), None, force)], budget - 1);
        Some(Deduction::inf(rule, goal.clone(), vec![], ps))
    }

    fn reductio(&mut self, goal: &SignedFormula, budget: usize, eager: bool) -> Option<Deduction> {
        if budget < 4 || !self.red_possible(goal) {
            return None;
        }
        let class = self.fresh();
        let star = goal.star();
        self.scope.push((class, star));
        // Make the discharged class likely to be used.
        let d = if eager && budget >= 4 && self.rng.gen_bool(0.7) {
            let hyp = Deduction::hyp(class, goal.star());
            let other = self.gen(&goal.clone().into(), budget - 3, Force::Any);
            let ps = if hyp.signed_conclusion().unwrap().is_plus() {
                vec![hyp, other]
            } else {
                vec![other, hyp]
            };
            Deduction::inf(Rule::NonContradiction, Conclusion::Absurdity, vec![], ps)
        } else {
            self.absurdity(budget - 1)
        };
        self.scope.pop();
        Some(Deduction::inf(
            Rule::Reductio,
            goal.clone(),
            vec![class],
            vec![d],
        ))
    }

    fn case_split(&mut self, goal: &Conclusion, budget: usize, force: Force) -> Option<Deduction> {
        let mut rules = Vec::new();
        if self.has(Connective::Or) {
            rules.push(Rule::PlusOrE);
        }
        if self.has(Connective::And) {
            rules.push(Rule::MinusAndE);
        }
        let rule = *rules.choose(&mut self.rng)?;
        let (a, b) = (self.formula(1), self.formula(1));
        let (c, s) = if rule == Rule::PlusOrE {
            (Connective::Or, Sign::Plus)
        } else {
            (Connective::And, Sign::Minus)
        };
        let major = SignedFormula::new(s, Formula::binary(c, a.clone(), b.clone()));
        let (la, lb) = (self.fresh(), self.fresh());
        // Minor premises may themselves end in case splits, forming segments.
        let minor_force = if !goal.is_absurdity() && self.rng.gen_bool(0.3 * self.bias) {
            Force::Split
        } else {
            force
        };
        let goals = [
            (major.into(), None, Force::Any),
            (
                goal.clone(),
                Some((la, SignedFormula::new(s, a))),
                minor_force,
            ),
            (
                goal.clone(),
                Some((lb, SignedFormula::new(s, b))),
                Force::Any,
            ),
        ];
        if Self::needs(&goals) > budget {
            return None;
        }
        let ps = self.premises(&goals, budget - 1);
        Some(Deduction::inf(rule, goal.clone(), vec![la, lb], ps))
    }
}
