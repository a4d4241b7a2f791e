//! Pushing non-contradiction down to atomic premises.

use thiserror::Error;

use crate::kernel::{Deduction, LabelSupply, Rule};
use crate::syntax::{Conclusion, Connective, Formula, SignedFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomizeError {
    #[error("no atomization for {0}")]
    Unsupported(Connective),
    #[error("non-contradiction at {0:?} does not have a signed premise pair")]
    Malformed(Vec<usize>),
}

/// Rewrites every application of non-contradiction on a compound formula
/// into applications on its atoms. The positive premise ends up on the
/// left.
pub fn atomize_nc(d: &Deduction) -> Result<Deduction, AtomizeError> {
    let mut supply = LabelSupply::for_tree(d);
    walk(d, &mut supply, &mut Vec::new())
}

fn walk(
    d: &Deduction,
    supply: &mut LabelSupply,
    path: &mut Vec<usize>,
) -> Result<Deduction, AtomizeError> {
    let Deduction::Inference {
        rule,
        conclusion,
        discharged,
        premises,
    } = d
    else {
        return Ok(d.clone());
    };
    let mut ps = Vec::with_capacity(premises.len());
    for (i, p) in premises.iter().enumerate() {
        path.push(i);
        ps.push(walk(p, supply, path)?);
        path.pop();
    }
    if *rule != Rule::NonContradiction {
        return Ok(Deduction::inf(
            *rule,
            conclusion.clone(),
            discharged.clone(),
            ps,
        ));
    }
    let [left, right]: [Deduction; 2] = ps
        .try_into()
        .map_err(|_| AtomizeError::Malformed(path.clone()))?;
    let plus_left = match left.signed_conclusion() {
        Some(s) => s.is_plus(),
        None => return Err(AtomizeError::Malformed(path.clone())),
    };
    let (pos, neg) = if plus_left {
        (left, right)
    } else {
        (right, left)
    };
    clash(pos, neg, supply)
}

fn elim(rule: Rule, concl: SignedFormula, premises: Vec<Deduction>) -> Deduction {
    Deduction::inf(rule, concl, vec![], premises)
}

/// Non-contradiction between `pos` (+ F) and `neg` (- F), decomposed until
/// F is atomic.
fn clash(
    pos: Deduction,
    neg: Deduction,
    supply: &mut LabelSupply,
) -> Result<Deduction, AtomizeError> {
    let f = pos
        .signed_conclusion()
        .expect("signed premise")
        .body
        .clone();
    let plus = |f: &Formula| SignedFormula::plus(f.clone());
    let minus = |f: &Formula| SignedFormula::minus(f.clone());
    match &f {
        Formula::Atom(_) => Ok(Deduction::inf(
            Rule::NonContradiction,
            Conclusion::Absurdity,
            vec![],
            vec![pos, neg],
        )),
        Formula::Not(c) => {
            let p = elim(Rule::MinusNotE, plus(c), vec![neg]);
            let n = elim(Rule::PlusNotE, minus(c), vec![pos]);
            clash(p, n, supply)
        }
        Formula::Binary(Connective::Or, c, e) => {
            let (a, b) = (supply.fresh(), supply.fresh());
            let neg2 = neg.refreshed(supply);
            let left = clash(
                Deduction::hyp(a, plus(c)),
                elim(Rule::MinusOrE1, minus(c), vec![neg]),
                supply,
            )?;
            let right = clash(
                Deduction::hyp(b, plus(e)),
                elim(Rule::MinusOrE2, minus(e), vec![neg2]),
                supply,
            )?;
            Ok(Deduction::inf(
                Rule::PlusOrE,
                Conclusion::Absurdity,
                vec![a, b],
                vec![pos, left, right],
            ))
        }
        Formula::Binary(Connective::And, c, e) => {
            let (a, b) = (supply.fresh(), supply.fresh());
            let pos2 = pos.refreshed(supply);
            let left = clash(
                elim(Rule::PlusAndE1, plus(c), vec![pos]),
                Deduction::hyp(a, minus(c)),
                supply,
            )?;
            let right = clash(
                elim(Rule::PlusAndE2, plus(e), vec![pos2]),
                Deduction::hyp(b, minus(e)),
                supply,
            )?;
            Ok(Deduction::inf(
                Rule::MinusAndE,
                Conclusion::Absurdity,
                vec![a, b],
                vec![neg, left, right],
            ))
        }
        Formula::Binary(Connective::Imp, c, e) => {
            let neg2 = neg.refreshed(supply);
            let antecedent = elim(Rule::MinusImpE1, plus(c), vec![neg]);
            let p = elim(Rule::PlusImpE, plus(e), vec![pos, antecedent]);
            let n = elim(Rule::MinusImpE2, minus(e), vec![neg2]);
            clash(p, n, supply)
        }
        Formula::Binary(other, _, _) => Err(AtomizeError::Unsupported(*other)),
    }
}
