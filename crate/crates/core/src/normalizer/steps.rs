//! Local reduction steps. Each `*_at` function rewrites the subtree rooted
//! at the rule that consumes the redex (the elimination or
//! non-contradiction below the maximal occurrence).

use thiserror::Error;

use crate::analysis::{Redex, RedexKind};
use crate::kernel::{Deduction, Label, LabelSupply, Path, Rule};
use crate::syntax::{Conclusion, Connective, Formula, Sign, SignedFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("{kind} redex on {connective} has no reduction step (at {path:?})")]
    Irreducible {
        kind: RedexKind,
        connective: Connective,
        path: Path,
    },
    #[error("step not applicable: {0}")]
    NotApplicable(String),
}

fn not_applicable<T>(msg: impl Into<String>) -> Result<T, StepError> {
    Err(StepError::NotApplicable(msg.into()))
}

type Step = Result<(Deduction, String), StepError>;
type Maker = Box<dyn FnMut(&mut LabelSupply) -> Deduction>;

fn signed(sign: Sign, body: &Formula) -> SignedFormula {
    SignedFormula::new(sign, body.clone())
}

fn split(f: &Formula) -> (&Formula, &Formula) {
    match f {
        Formula::Binary(_, a, b) => (a, b),
        Formula::Not(a) => (a, a),
        Formula::Atom(_) => unreachable!("compound expected"),
    }
}

type Parts<'a> = (Rule, &'a Conclusion, &'a [Label], &'a [Deduction]);

fn inference_parts(d: &Deduction) -> Result<Parts<'_>, StepError> {
    match d {
        Deduction::Inference {
            rule,
            conclusion,
            discharged,
            premises,
        } => Ok((*rule, conclusion, discharged, premises)),
        Deduction::Hypothesis { .. } => not_applicable("expected a rule application"),
    }
}

fn major_formula(d: &Deduction) -> Result<&SignedFormula, StepError> {
    d.signed_conclusion()
        .ok_or_else(|| StepError::NotApplicable("major premise is absurdity".into()))
}

fn nc(left: Deduction, right: Deduction) -> Deduction {
    Deduction::inf(
        Rule::NonContradiction,
        Conclusion::Absurdity,
        vec![],
        vec![left, right],
    )
}

/// Which operand a one-premise elimination projects onto.
fn projection_index(rule: Rule) -> Option<usize> {
    use Rule::*;
    match rule {
        PlusAndE1 | MinusOrE1 | MinusImpE1 | PlusConkE1 | MinusConkE1 | PlusHonkE1
        | MinusHonkE1 | PlusNotE | MinusNotE => Some(0),
        PlusAndE2 | MinusOrE2 | MinusImpE2 | PlusConkE2 | MinusConkE2 | PlusHonkE2
        | MinusHonkE2 => Some(1),
        _ => None,
    }
}

/// Introduction followed by elimination of the same formula.
pub fn ie_at(elim: &Deduction, supply: &mut LabelSupply) -> Step {
    let (rule, _, discharged, premises) = inference_parts(elim)?;
    let intro = &premises[0];
    let (irule, _, idis, ips) = inference_parts(intro)?;
    if !rule.is_elim() || !irule.is_intro() {
        return not_applicable("not an introduction feeding an elimination");
    }
    let connective = rule.connective().unwrap();
    let tag = format!("ie-{connective}");
    if connective == Connective::Tonk {
        return Err(StepError::Irreducible {
            kind: RedexKind::Ie,
            connective,
            path: vec![],
        });
    }
    if let Some(i) = projection_index(rule) {
        let i = i.min(ips.len() - 1);
        return Ok((ips[i].clone(), tag));
    }
    let out = match (irule, rule) {
        (Rule::PlusImpI, Rule::PlusImpE) => {
            ips[0].substitute_hypotheses(idis[0], &premises[1], supply)
        }
        (Rule::PlusOrI1, Rule::PlusOrE) | (Rule::MinusAndI1, Rule::MinusAndE) => {
            premises[1].substitute_hypotheses(discharged[0], &ips[0], supply)
        }
        (Rule::PlusOrI2, Rule::PlusOrE) | (Rule::MinusAndI2, Rule::MinusAndE) => {
            premises[2].substitute_hypotheses(discharged[1], &ips[0], supply)
        }
        _ => return not_applicable(format!("{irule} does not match {rule}")),
    };
    out.map(|d| (d, tag))
        .map_err(|e| StepError::NotApplicable(e.to_string()))
}

/// Both premises of non-contradiction concluded by introductions.
pub fn inc_at(node: &Deduction, supply: &mut LabelSupply) -> Step {
    let (rule, _, _, premises) = inference_parts(node)?;
    if rule != Rule::NonContradiction || !premises[0].is_intro() || !premises[1].is_intro() {
        return not_applicable("not non-contradiction between two introductions");
    }
    let pos_left = major_formula(&premises[0])?.is_plus();
    let (pos, neg) = if pos_left {
        (&premises[0], &premises[1])
    } else {
        (&premises[1], &premises[0])
    };
    let (prule, _, pdis, pps) = inference_parts(pos)?;
    let (nrule, _, _, nps) = inference_parts(neg)?;
    let connective = prule.connective().unwrap();
    let tag = format!("inc-{connective}");
    use Rule::*;
    let (p, n) = match (prule, nrule) {
        (PlusAndI, MinusAndI1) => (pps[0].clone(), nps[0].clone()),
        (PlusAndI, MinusAndI2) => (pps[1].clone(), nps[0].clone()),
        (PlusOrI1, MinusOrI) => (pps[0].clone(), nps[0].clone()),
        (PlusOrI2, MinusOrI) => (pps[0].clone(), nps[1].clone()),
        (PlusImpI, MinusImpI) => {
            let body = pps[0]
                .substitute_hypotheses(pdis[0], &nps[0], supply)
                .map_err(|e| StepError::NotApplicable(e.to_string()))?;
            (body, nps[1].clone())
        }
        (PlusNotI, MinusNotI) => {
            // The operand signs flip: the left premise's content moves right.
            let (l, r) = (&premises[0].premises()[0], &premises[1].premises()[0]);
            return Ok((nc(r.clone(), l.clone()), tag));
        }
        (PlusConkI, MinusConkI) | (PlusHonkI, MinusHonkI) => (pps[0].clone(), nps[0].clone()),
        _ => return not_applicable(format!("{prule} and {nrule} do not clash")),
    };
    let out = if pos_left { nc(p, n) } else { nc(n, p) };
    Ok((out, tag))
}

/// Reductio conclusion used as a premise of non-contradiction; `k` is the
/// reductio's premise index.
///
/// Where a copy of the other premise lands next to a formula that makes
/// both premises of a non-contradiction maximal, that pair is reduced as
/// part of the step.
pub fn rnc_at(node: &Deduction, k: usize, supply: &mut LabelSupply) -> Step {
    let (rule, _, _, premises) = inference_parts(node)?;
    if rule != Rule::NonContradiction || !premises[k].is_reductio() {
        return not_applicable("not reductio feeding non-contradiction");
    }
    let red = &premises[k];
    let class = red.discharged()[0];
    let body = &red.premises()[0];
    let other = &premises[1 - k];
    if other.conclusion() != red.signed_conclusion().unwrap().star().into() {
        return not_applicable("premises of non-contradiction do not clash");
    }
    let mut into_nc = false;
    body.visit(&mut |_, n| {
        if n.rule() == Some(Rule::NonContradiction)
            && n.premises().iter().any(|p| is_class_hyp(p, class))
        {
            into_nc = true;
        }
    });
    let mut make = |s: &mut LabelSupply| other.refreshed(s);
    let out = replace_class(body, class, &mut make, FollowUp::Pairs, supply)?;
    Ok((out, if into_nc { "rnc-2" } else { "rnc-1" }.to_string()))
}

fn is_class_hyp(d: &Deduction, label: Label) -> bool {
    matches!(d, Deduction::Hypothesis { class, .. } if *class == label)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FollowUp {
    /// Reduce detours where a replaced hypothesis was the major premise of
    /// an elimination or faced an introduction in non-contradiction.
    Detours,
    /// Reduce non-contradictions whose premises both became maximal, and
    /// detours where an introduction replaced a major premise.
    Pairs,
}

/// Replaces every hypothesis of `class` in `body` by `make()`, then
/// reduces the new redexes at exactly those positions as `mode` says.
fn replace_class(
    body: &Deduction,
    class: Label,
    make: &mut dyn FnMut(&mut LabelSupply) -> Deduction,
    mode: FollowUp,
    supply: &mut LabelSupply,
) -> Result<Deduction, StepError> {
    match body {
        Deduction::Hypothesis { class: c, .. } if *c == class => Ok(make(supply)),
        Deduction::Hypothesis { .. } => Ok(body.clone()),
        Deduction::Inference {
            rule,
            conclusion,
            discharged,
            premises,
        } => {
            let was: Vec<bool> = premises.iter().map(|p| is_class_hyp(p, class)).collect();
            let rebuilt = premises
                .iter()
                .map(|p| replace_class(p, class, make, mode, supply))
                .collect::<Result<Vec<_>, _>>()?;
            let node = Deduction::inf(*rule, conclusion.clone(), discharged.clone(), rebuilt);
            let ps = node.premises();
            let touched_nc = *rule == Rule::NonContradiction && (was[0] || was[1]);
            match mode {
                FollowUp::Detours if rule.is_elim() && was[0] => Ok(ie_at(&node, supply)?.0),
                FollowUp::Pairs if rule.is_elim() && was[0] && ps[0].is_intro() => {
                    match ie_at(&node, supply) {
                        Ok((out, _)) => Ok(out),
                        Err(StepError::Irreducible { .. }) => Ok(node),
                        Err(e) => Err(e),
                    }
                }
                FollowUp::Detours | FollowUp::Pairs
                    if touched_nc && ps[0].is_intro() && ps[1].is_intro() =>
                {
                    Ok(inc_at(&node, supply)?.0)
                }
                FollowUp::Pairs if touched_nc && ps[0].is_reductio() && ps[1].is_reductio() => {
                    Ok(rnc_at(&node, 1, supply)?.0)
                }
                _ => Ok(node),
            }
        }
    }
}

/// Turns a deduction of `alpha` into one of absurdity using a hypothesis of
/// `alpha*` in class `class`. Case splits concluding `alpha` are kept and
/// capped branch by branch; a final reductio is unwrapped and its class
/// merged into `class`.
fn cap(d: &Deduction, alpha: &SignedFormula, class: Label) -> Deduction {
    match d {
        Deduction::Inference {
            rule,
            discharged,
            premises,
            ..
        } if rule.is_case_split() => Deduction::inf(
            *rule,
            Conclusion::Absurdity,
            discharged.clone(),
            vec![
                premises[0].clone(),
                cap(&premises[1], alpha, class),
                cap(&premises[2], alpha, class),
            ],
        ),
        Deduction::Inference {
            rule: Rule::Reductio,
            discharged,
            premises,
            ..
        } => premises[0].rename_class(discharged[0], class),
        _ => nc(d.clone(), Deduction::hyp(class, alpha.star())),
    }
}

/// Reductio conclusion used as the major premise of an elimination.
pub fn re_at(elim: &Deduction, supply: &mut LabelSupply) -> Step {
    let (rule, conclusion, discharged, premises) = inference_parts(elim)?;
    let red = &premises[0];
    if !rule.is_elim() || !red.is_reductio() {
        return not_applicable("not reductio feeding an elimination");
    }
    let connective = rule.connective().unwrap();
    if matches!(
        connective,
        Connective::Tonk | Connective::Conk | Connective::Honk
    ) {
        return Err(StepError::Irreducible {
            kind: RedexKind::Re,
            connective,
            path: vec![],
        });
    }
    let class = red.discharged()[0];
    let body = &red.premises()[0];
    let major = major_formula(red)?.body.clone();
    let (a, b) = split(&major);

    if rule.is_case_split() {
        return re_case_split(
            rule, conclusion, discharged, premises, class, body, a, b, supply,
        );
    }

    let beta = conclusion
        .signed()
        .expect("eliminations conclude signed formulas")
        .clone();
    let fresh = supply.fresh();
    let hyp = Deduction::hyp(fresh, beta.star());
    use Rule::*;
    let (tag, mut make): (&str, Maker) = match rule {
        PlusAndE1 | PlusAndE2 | MinusOrE1 | MinusOrE2 => {
            let intro = match rule {
                PlusAndE1 => MinusAndI1,
                PlusAndE2 => MinusAndI2,
                MinusOrE1 => PlusOrI1,
                _ => PlusOrI2,
            };
            let concl = red.signed_conclusion().unwrap().star();
            let tag = if connective == Connective::And {
                "re-and-proj"
            } else {
                "re-or-proj"
            };
            (
                tag,
                Box::new(move |_| Deduction::inf(intro, concl.clone(), vec![], vec![hyp.clone()])),
            )
        }
        PlusNotE | MinusNotE => {
            let intro = if rule == PlusNotE {
                MinusNotI
            } else {
                PlusNotI
            };
            let concl = red.signed_conclusion().unwrap().star();
            (
                "re-not",
                Box::new(move |_| Deduction::inf(intro, concl.clone(), vec![], vec![hyp.clone()])),
            )
        }
        PlusImpE => {
            // + B>A with minor premise + B: rebuild - B>A from the minor
            // premise and the new - A hypothesis.
            let minor = premises[1].clone();
            let concl = SignedFormula::minus(major.clone());
            (
                "re-imp-i",
                Box::new(move |s| {
                    Deduction::inf(
                        MinusImpI,
                        concl.clone(),
                        vec![],
                        vec![minor.refreshed(s), hyp.clone()],
                    )
                }),
            )
        }
        MinusImpE2 => {
            // - B>A concluding - A: + B>A follows from + A vacuously.
            let concl = SignedFormula::plus(major.clone());
            (
                "re-imp-ii",
                Box::new(move |s| {
                    Deduction::inf(PlusImpI, concl.clone(), vec![s.fresh()], vec![hyp.clone()])
                }),
            )
        }
        MinusImpE1 => {
            // - A>B concluding + A: + A>B from + A, - A by non-contradiction
            // and reductio to + B.
            let concl = SignedFormula::plus(major.clone());
            let pa = signed(Sign::Plus, a);
            let pb = signed(Sign::Plus, b);
            (
                "re-imp-iii",
                Box::new(move |s| {
                    let i = s.fresh();
                    let v = s.fresh();
                    let clash = nc(Deduction::hyp(i, pa.clone()), hyp.clone());
                    let to_b = Deduction::inf(Reductio, pb.clone(), vec![v], vec![clash]);
                    Deduction::inf(PlusImpI, concl.clone(), vec![i], vec![to_b])
                }),
            )
        }
        _ => return not_applicable(format!("no reductio step for {rule}")),
    };
    let new_body = replace_class(body, class, &mut *make, FollowUp::Detours, supply)?;
    let out = Deduction::inf(Reductio, beta, vec![fresh], vec![new_body]);
    Ok((out, tag.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn re_case_split(
    rule: Rule,
    conclusion: &Conclusion,
    discharged: &[Label],
    premises: &[Deduction],
    class: Label,
    body: &Deduction,
    a: &Formula,
    b: &Formula,
    supply: &mut LabelSupply,
) -> Step {
    // +orE: branches assume + A, + B; rebuild - A v B by -orI from - A, - B.
    // -andE: branches assume - A, - B; rebuild + A & B by +andI from + A, + B.
    let (branch_sign, rebuild_rule) = if rule == Rule::PlusOrE {
        (Sign::Plus, Rule::MinusOrI)
    } else {
        (Sign::Minus, Rule::PlusAndI)
    };
    let target = SignedFormula::new(branch_sign.flip(), rule_major(a, b, rule));
    let (left_class, right_class) = (discharged[0], discharged[1]);
    let (left, right) = (&premises[1], &premises[2]);
    let left_concl = signed(branch_sign.flip(), a);
    let right_concl = signed(branch_sign.flip(), b);
    let name = if rule == Rule::PlusOrE {
        "re-or"
    } else {
        "re-and"
    };

    match conclusion {
        Conclusion::Absurdity => {
            let mut make = |s: &mut LabelSupply| {
                let (l, r) = (s.fresh(), s.fresh());
                let lb = left.refreshed(s).rename_class(left_class, l);
                let rb = right.refreshed(s).rename_class(right_class, r);
                Deduction::inf(
                    rebuild_rule,
                    target.clone(),
                    vec![],
                    vec![
                        Deduction::inf(Rule::Reductio, left_concl.clone(), vec![l], vec![lb]),
                        Deduction::inf(Rule::Reductio, right_concl.clone(), vec![r], vec![rb]),
                    ],
                )
            };
            let out = replace_class(body, class, &mut make, FollowUp::Detours, supply)?;
            Ok((out, format!("{name}-bot")))
        }
        Conclusion::Signed(alpha) => {
            let outer = supply.fresh();
            let mut make = |s: &mut LabelSupply| {
                let (l, r) = (s.fresh(), s.fresh());
                let lb = cap(&left.refreshed(s).rename_class(left_class, l), alpha, outer);
                let rb = cap(
                    &right.refreshed(s).rename_class(right_class, r),
                    alpha,
                    outer,
                );
                Deduction::inf(
                    rebuild_rule,
                    target.clone(),
                    vec![],
                    vec![
                        Deduction::inf(Rule::Reductio, left_concl.clone(), vec![l], vec![lb]),
                        Deduction::inf(Rule::Reductio, right_concl.clone(), vec![r], vec![rb]),
                    ],
                )
            };
            let new_body = replace_class(body, class, &mut make, FollowUp::Detours, supply)?;
            let out = Deduction::inf(Rule::Reductio, alpha.clone(), vec![outer], vec![new_body]);
            Ok((out, name.to_string()))
        }
    }
}

fn rule_major(a: &Formula, b: &Formula, rule: Rule) -> Formula {
    let c = if rule == Rule::PlusOrE {
        Connective::Or
    } else {
        Connective::And
    };
    Formula::binary(c, a.clone(), b.clone())
}

/// Moves the rule consuming a case split (premise `k` of `node`) up into
/// both of the split's minor premises.
pub fn permute_at(node: &Deduction, k: usize, supply: &mut LabelSupply) -> Step {
    let (rule, conclusion, discharged, premises) = inference_parts(node)?;
    let split = &premises[k];
    let (srule, _, sdis, sps) = inference_parts(split)?;
    if !srule.is_case_split() {
        return not_applicable("premise is not concluded by +orE or -andE");
    }
    let branch = |minor: &Deduction, s: &mut LabelSupply| -> Deduction {
        let fresh: std::collections::HashMap<Label, Label> =
            discharged.iter().map(|l| (*l, s.fresh())).collect();
        let ps = premises
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == k {
                    minor.clone()
                } else {
                    p.relabel(&fresh).refreshed(s)
                }
            })
            .collect();
        let dis = discharged.iter().map(|l| fresh[l]).collect();
        Deduction::inf(rule, conclusion.clone(), dis, ps)
    };
    let tag = if rule == Rule::NonContradiction {
        "perm-into-nc".to_string()
    } else {
        format!("perm-into-{rule}")
    };
    let first = branch(&sps[1], supply);
    let second = branch(&sps[2], supply);
    let out = Deduction::inf(
        srule,
        conclusion.clone(),
        sdis.to_vec(),
        vec![sps[0].clone(), first, second],
    );
    Ok((out, tag))
}

/// Applies the reduction step for `redex` anywhere in `d`.
pub fn reduce(d: &Deduction, redex: &Redex, supply: &mut LabelSupply) -> Step {
    let Some((&k, consumer_path)) = redex.path.split_last() else {
        return not_applicable("the root is not a redex");
    };
    let consumer = d
        .at(consumer_path)
        .ok_or_else(|| StepError::NotApplicable("redex position out of range".into()))?;
    let result = match redex.kind {
        RedexKind::Ie => ie_at(consumer, supply),
        RedexKind::Re => re_at(consumer, supply),
        RedexKind::Rnc => rnc_at(consumer, k, supply),
        RedexKind::Inc => inc_at(consumer, supply),
        RedexKind::Perm => permute_at(consumer, k, supply),
    };
    let (local, tag) = result.map_err(|e| match e {
        StepError::Irreducible {
            kind, connective, ..
        } => StepError::Irreducible {
            kind,
            connective,
            path: redex.path.clone(),
        },
        other => other,
    })?;
    let mut out = d.clone();
    out.replace_at(consumer_path, local);
    Ok((out, tag))
}

/// Whether any reduction step exists for the redex.
pub fn is_reducible(redex: &Redex) -> bool {
    match redex.kind {
        RedexKind::Ie => redex.consumer.connective() != Some(Connective::Tonk),
        RedexKind::Re => !matches!(
            redex.consumer.connective(),
            Some(Connective::Tonk | Connective::Conk | Connective::Honk)
        ),
        _ => true,
    }
}

/// Removes `+orE`/`-andE` applications with an empty assumption class in a
/// minor premise, keeping that minor premise (the first one when both are
/// empty). Runs to a fixpoint.
pub fn simplify(d: &Deduction) -> Deduction {
    match d {
        Deduction::Hypothesis { .. } => d.clone(),
        Deduction::Inference {
            rule,
            conclusion,
            discharged,
            premises,
        } => {
            let ps: Vec<Deduction> = premises.iter().map(simplify).collect();
            if rule.is_case_split() && ps.len() == 3 && discharged.len() == 2 {
                if ps[1].count_class(discharged[0]) == 0 {
                    return ps.into_iter().nth(1).unwrap();
                }
                if ps[2].count_class(discharged[1]) == 0 {
                    return ps.into_iter().nth(2).unwrap();
                }
            }
            Deduction::inf(*rule, conclusion.clone(), discharged.clone(), ps)
        }
    }
}
