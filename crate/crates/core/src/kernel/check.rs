//! Rule-by-rule well-formedness checking.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use super::deduction::{Deduction, Label, Path};
use super::rule::Rule;
use crate::syntax::{Conclusion, Connective, Formula, Sign, SignedFormula};

/// How a co-ordination rule (reductio or non-contradiction) is admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordMode {
    General,
    AtomicOnly,
    Disabled,
}

impl CoordMode {
    pub fn from_flag(s: &str) -> Option<CoordMode> {
        match s {
            "general" => Some(CoordMode::General),
            "atomic" => Some(CoordMode::AtomicOnly),
            "off" => Some(CoordMode::Disabled),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemConfig {
    pub connectives: BTreeSet<Connective>,
    pub reductio: CoordMode,
    pub nc: CoordMode,
}

impl SystemConfig {
    /// Bilateral classical logic: and, or, imp, not with unrestricted
    /// co-ordination rules.
    pub fn classical() -> Self {
        SystemConfig {
            connectives: BTreeSet::from([
                Connective::And,
                Connective::Or,
                Connective::Imp,
                Connective::Not,
            ]),
            reductio: CoordMode::General,
            nc: CoordMode::General,
        }
    }

    pub fn with_connective(mut self, c: Connective) -> Self {
        self.connectives.insert(c);
        self
    }

    /// Looks up `B`, `B+tonk`, `B+conk`, `B+honk` or `B-coord`.
    pub fn from_system_name(name: &str) -> Option<Self> {
        let base = SystemConfig::classical();
        Some(match name {
            "B" => base,
            "B+tonk" => base.with_connective(Connective::Tonk),
            "B+conk" => base.with_connective(Connective::Conk),
            "B+honk" => base.with_connective(Connective::Honk),
            "B-coord" => SystemConfig {
                reductio: CoordMode::Disabled,
                nc: CoordMode::Disabled,
                ..base
            },
            _ => return None,
        })
    }
}

impl Default for SystemConfig {
    fn default() -> Self {
        SystemConfig::classical()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Arity,
    Schema,
    AbsurdHypothesis,
    InconsistentClass,
    DischargeScope,
    OutsideSystem,
    Restriction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: Path,
    pub kind: ViolationKind,
    pub message: String,
    pub rule: Option<Rule>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}", self.path)?;
        if let Some(r) = self.rule {
            write!(f, " ({r})")?;
        }
        write!(f, ": {}", self.message)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Part {
    Left,
    Right,
}

pub(crate) fn part(f: &Formula, p: Part) -> &Formula {
    match (f, p) {
        (Formula::Not(a), _) => a,
        (Formula::Binary(_, a, _), Part::Left) => a,
        (Formula::Binary(_, _, b), Part::Right) => b,
        (Formula::Atom(_), _) => unreachable!("atoms have no parts"),
    }
}

use Part::{Left, Right};
use Sign::{Minus, Plus};

/// Premise schema of an introduction rule, as (sign, operand) pairs.
pub(crate) fn intro_schema(rule: Rule) -> Option<&'static [(Sign, Part)]> {
    use Rule::*;
    Some(match rule {
        PlusAndI | PlusConkI => &[(Plus, Left), (Plus, Right)],
        MinusAndI1 => &[(Minus, Left)],
        MinusAndI2 => &[(Minus, Right)],
        PlusOrI1 | PlusTonkI => &[(Plus, Left)],
        PlusOrI2 => &[(Plus, Right)],
        MinusOrI | MinusConkI => &[(Minus, Left), (Minus, Right)],
        MinusImpI | MinusHonkI => &[(Plus, Left), (Minus, Right)],
        PlusHonkI => &[(Minus, Left), (Plus, Right)],
        PlusNotI => &[(Minus, Left)],
        MinusNotI => &[(Plus, Left)],
        _ => return None,
    })
}

/// Conclusion schema of a one-premise elimination rule.
pub(crate) fn projection_schema(rule: Rule) -> Option<(Sign, Part)> {
    use Rule::*;
    Some(match rule {
        PlusAndE1 | PlusConkE1 => (Plus, Left),
        PlusAndE2 | PlusConkE2 | TonkE | PlusHonkE2 => (Plus, Right),
        MinusOrE1 | MinusConkE1 => (Minus, Left),
        MinusOrE2 | MinusConkE2 | MinusImpE2 | MinusHonkE2 => (Minus, Right),
        MinusImpE1 | MinusHonkE1 => (Plus, Left),
        PlusHonkE1 => (Minus, Left),
        PlusNotE => (Minus, Left),
        MinusNotE => (Plus, Left),
        _ => return None,
    })
}

fn signed(sign: Sign, f: &Formula) -> Conclusion {
    Conclusion::Signed(SignedFormula::new(sign, f.clone()))
}

/// Checks one rule instance; returns the formula each discharge slot binds.
fn schema(rule: Rule, concl: &Conclusion, ps: &[Conclusion]) -> Result<Vec<Conclusion>, String> {
    let connective = rule.connective();
    let sign = rule.sign();
    // The formula a rule is about: the conclusion for introductions, the
    // major premise for eliminations.
    let principal = |c: &Conclusion, what: &str| -> Result<Formula, String> {
        let (s, k) = (sign.unwrap(), connective.unwrap());
        match c.signed() {
            Some(sf) if sf.sign == s && sf.body.main_connective() == Some(k) => Ok(sf.body.clone()),
            _ => Err(format!(
                "{what} must be {} ({k} ...), found {c}",
                s.symbol()
            )),
        }
    };
    let expect = |found: &Conclusion, want: Conclusion, what: &str| -> Result<(), String> {
        if *found == want {
            Ok(())
        } else {
            Err(format!("{what} must be {want}, found {found}"))
        }
    };
    if let Some(parts) = intro_schema(rule) {
        let f = principal(concl, "conclusion")?;
        for (i, (s, p)) in parts.iter().enumerate() {
            expect(&ps[i], signed(*s, part(&f, *p)), &format!("premise {i}"))?;
        }
        return Ok(vec![]);
    }
    if let Some((s, p)) = projection_schema(rule) {
        let f = principal(&ps[0], "major premise")?;
        expect(concl, signed(s, part(&f, p)), "conclusion")?;
        return Ok(vec![]);
    }
    match rule {
        Rule::PlusImpI => {
            let f = principal(concl, "conclusion")?;
            expect(&ps[0], signed(Plus, part(&f, Right)), "premise 0")?;
            Ok(vec![signed(Plus, part(&f, Left))])
        }
        Rule::PlusImpE => {
            let f = principal(&ps[0], "major premise")?;
            expect(&ps[1], signed(Plus, part(&f, Left)), "minor premise")?;
            expect(concl, signed(Plus, part(&f, Right)), "conclusion")?;
            Ok(vec![])
        }
        Rule::PlusOrE | Rule::MinusAndE => {
            let f = principal(&ps[0], "major premise")?;
            expect(&ps[1], concl.clone(), "minor premise 1")?;
            expect(&ps[2], concl.clone(), "minor premise 2")?;
            let s = sign.unwrap();
            Ok(vec![signed(s, part(&f, Left)), signed(s, part(&f, Right))])
        }
        Rule::Reductio => {
            expect(&ps[0], Conclusion::Absurdity, "premise")?;
            match concl.signed() {
                Some(a) => Ok(vec![Conclusion::Signed(a.star())]),
                None => Err("reductio must conclude a signed formula".into()),
            }
        }
        Rule::NonContradiction => {
            expect(concl, Conclusion::Absurdity, "conclusion")?;
            match ps[0].signed() {
                Some(a) => {
                    expect(&ps[1], Conclusion::Signed(a.star()), "premise 1")?;
                    Ok(vec![])
                }
                None => Err("premises of non-contradiction must be signed formulas".into()),
            }
        }
        _ => unreachable!("every rule has a schema"),
    }
}

struct Checker<'a> {
    cfg: &'a SystemConfig,
    violations: Vec<Violation>,
    /// Class label -> (binding node, formula bound).
    binders: HashMap<Label, Conclusion>,
    free_classes: HashMap<Label, Conclusion>,
    in_scope: HashSet<Label>,
}

impl Checker<'_> {
    fn report(&mut self, path: &[usize], kind: ViolationKind, rule: Option<Rule>, message: String) {
        self.violations.push(Violation {
            path: path.to_vec(),
            kind,
            message,
            rule,
        });
    }

    fn check_connectives(&mut self, path: &[usize], c: &Conclusion, rule: Option<Rule>) {
        if let Some(sf) = c.signed() {
            let mut used = BTreeSet::new();
            sf.body.connectives(&mut used);
            for k in used.difference(&self.cfg.connectives) {
                let msg = format!("connective {k} is not part of the configured system");
                self.report(path, ViolationKind::OutsideSystem, rule, msg);
            }
        }
    }

    /// First pass: local rule schemas, configuration, binder table.
    fn local(&mut self, d: &Deduction, path: &mut Path) {
        match d {
            Deduction::Hypothesis { assumption, .. } => {
                if assumption.is_absurdity() {
                    let msg = "⊥ hypothesis: deductions do not begin with absurdity".into();
                    self.report(path, ViolationKind::AbsurdHypothesis, None, msg);
                }
                self.check_connectives(path, assumption, None);
            }
            Deduction::Inference {
                rule,
                conclusion,
                discharged,
                premises,
            } => {
                let r = Some(*rule);
                self.check_connectives(path, conclusion, r);
                if let Some(k) = rule.connective() {
                    if !self.cfg.connectives.contains(&k) {
                        let msg = format!("rule {rule} is outside the configured system");
                        self.report(path, ViolationKind::OutsideSystem, r, msg);
                    }
                }
                self.coordination(path, *rule, conclusion, premises);
                let slots = rule.discharge_slots();
                if premises.len() != rule.arity() {
                    let msg = format!(
                        "{rule} takes {} premises, found {}",
                        rule.arity(),
                        premises.len()
                    );
                    self.report(path, ViolationKind::Arity, r, msg);
                } else if discharged.len() != slots.len() {
                    let msg = format!(
                        "{rule} discharges {} assumption classes, found {}",
                        slots.len(),
                        discharged.len()
                    );
                    self.report(path, ViolationKind::Arity, r, msg);
                } else {
                    let ps: Vec<Conclusion> = premises.iter().map(Deduction::conclusion).collect();
                    match schema(*rule, conclusion, &ps) {
                        Ok(bound) => {
                            for (label, formula) in discharged.iter().zip(bound) {
                                if self.binders.insert(*label, formula).is_some() {
                                    let msg = format!(
                                        "assumption class {label} is discharged more than once"
                                    );
                                    self.report(path, ViolationKind::DischargeScope, r, msg);
                                }
                            }
                        }
                        Err(msg) => self.report(path, ViolationKind::Schema, r, msg),
                    }
                }
                for (i, p) in premises.iter().enumerate() {
                    path.push(i);
                    self.local(p, path);
                    path.pop();
                }
            }
        }
    }

    fn coordination(
        &mut self,
        path: &[usize],
        rule: Rule,
        concl: &Conclusion,
        premises: &[Deduction],
    ) {
        let r = Some(rule);
        match rule {
            Rule::Reductio => match self.cfg.reductio {
                CoordMode::Disabled => self.report(
                    path,
                    ViolationKind::OutsideSystem,
                    r,
                    "reductio is disabled".into(),
                ),
                CoordMode::AtomicOnly if concl.degree() > 0 => self.report(
                    path,
                    ViolationKind::Restriction,
                    r,
                    "reductio restricted to atomic conclusions".into(),
                ),
                _ => {}
            },
            Rule::NonContradiction => match self.cfg.nc {
                CoordMode::Disabled => self.report(
                    path,
                    ViolationKind::OutsideSystem,
                    r,
                    "non-contradiction is disabled".into(),
                ),
                CoordMode::AtomicOnly if premises.iter().any(|p| p.conclusion().degree() > 0) => {
                    self.report(
                        path,
                        ViolationKind::Restriction,
                        r,
                        "non-contradiction restricted to atomic premises".into(),
                    )
                }
                _ => {}
            },
            _ => {}
        }
    }

    /// Second pass: every hypothesis is consistent with its class and lies
    /// within the scope of the rule discharging it, if any.
    fn scope(&mut self, d: &Deduction, path: &mut Path) {
        match d {
            Deduction::Hypothesis { class, assumption } => {
                if let Some(bound) = self.binders.get(class) {
                    if !self.in_scope.contains(class) {
                        let msg = format!(
                            "assumption class {class} is discharged elsewhere but occurs outside that discharge"
                        );
                        self.report(path, ViolationKind::DischargeScope, None, msg);
                    } else if bound != assumption {
                        let msg = format!(
                            "hypothesis {assumption} does not match {bound} discharged as class {class}"
                        );
                        self.report(path, ViolationKind::InconsistentClass, None, msg);
                    }
                } else {
                    let first = self
                        .free_classes
                        .entry(*class)
                        .or_insert_with(|| assumption.clone());
                    if first != assumption {
                        let msg =
                            format!("assumption class {class} holds both {first} and {assumption}");
                        self.report(path, ViolationKind::InconsistentClass, None, msg);
                    }
                }
            }
            Deduction::Inference {
                rule,
                discharged,
                premises,
                ..
            } => {
                let slots = rule.discharge_slots();
                let well_formed = premises.len() == rule.arity() && discharged.len() == slots.len();
                for (i, p) in premises.iter().enumerate() {
                    let mut entered = Vec::new();
                    if well_formed {
                        for (slot, label) in slots.iter().zip(discharged) {
                            if *slot == i && self.in_scope.insert(*label) {
                                entered.push(*label);
                            }
                        }
                    }
                    path.push(i);
                    self.scope(p, path);
                    path.pop();
                    for l in entered {
                        self.in_scope.remove(&l);
                    }
                }
            }
        }
    }
}

/// Checks `d` against the rules of the configured system. Never aborts:
/// every violation found is reported with its position.
pub fn check(d: &Deduction, cfg: &SystemConfig) -> CheckReport {
    let mut checker = Checker {
        cfg,
        violations: Vec::new(),
        binders: HashMap::new(),
        free_classes: HashMap::new(),
        in_scope: HashSet::new(),
    };
    checker.local(d, &mut Vec::new());
    checker.scope(d, &mut Vec::new());
    CheckReport {
        violations: checker.violations,
    }
}
