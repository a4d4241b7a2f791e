#![allow(dead_code)]

pub mod fixtures;

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use bilateral::kernel::{Deduction, Label, Path, Rule, SystemConfig};
use bilateral::syntax::Conclusion;
use bilateral::textio::parse;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_text(name: &str) -> String {
    fs::read_to_string(corpus_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn corpus(name: &str) -> Deduction {
    parse(&corpus_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn system(name: &str) -> SystemConfig {
    SystemConfig::from_system_name(name).unwrap_or_else(|| panic!("unknown system {name}"))
}

pub fn ded(text: &str) -> Deduction {
    parse(text).unwrap_or_else(|e| panic!("{e}\n{text}"))
}

#[derive(Debug, Clone)]
pub struct ManifestEntry {
    pub file: String,
    pub system: String,
    pub expected: String,
    pub max_steps: usize,
}

pub fn manifest() -> Vec<ManifestEntry> {
    corpus_text("manifest.tsv")
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            assert_eq!(cols.len(), 4, "bad manifest line {l:?}");
            ManifestEntry {
                file: cols[0].to_string(),
                system: cols[1].to_string(),
                expected: cols[2].to_string(),
                max_steps: cols[3].parse().unwrap(),
            }
        })
        .collect()
}

/// Label-free shape of a deduction: bound labels become the index of their
/// binder in pre-order, free labels the order of first appearance.
#[derive(Debug, PartialEq, Eq)]
pub enum Shape {
    Bound(usize, Conclusion),
    Free(usize, Conclusion),
    Node(String, Conclusion, Vec<usize>, Vec<Shape>),
}

fn slots(rule: Rule) -> &'static [usize] {
    // premise index each entry of the discharge list binds in
    match rule.name() {
        "+orE" | "-andE" => &[1, 2],
        "+impI" | "red" => &[0],
        _ => &[],
    }
}

fn shape(
    d: &Deduction,
    env: &HashMap<Label, usize>,
    binders: &mut usize,
    free: &mut HashMap<Label, usize>,
) -> Shape {
    match d {
        Deduction::Hypothesis { class, assumption } => match env.get(class) {
            Some(&b) => Shape::Bound(b, assumption.clone()),
            None => {
                let n = free.len();
                Shape::Free(*free.entry(*class).or_insert(n), assumption.clone())
            }
        },
        Deduction::Inference {
            rule,
            conclusion,
            discharged,
            premises,
        } => {
            let s = slots(*rule);
            let mut ids = Vec::new();
            let mut scoped: Vec<Vec<(Label, usize)>> = vec![Vec::new(); premises.len()];
            for (i, l) in discharged.iter().enumerate() {
                let id = *binders;
                *binders += 1;
                ids.push(id);
                let slot = s.get(i).copied().unwrap_or(usize::MAX);
                if slot < premises.len() {
                    scoped[slot].push((*l, id));
                }
            }
            let kids = premises
                .iter()
                .zip(scoped)
                .map(|(p, bind)| {
                    let mut inner = env.clone();
                    inner.extend(bind);
                    shape(p, &inner, binders, free)
                })
                .collect();
            Shape::Node(rule.name().to_string(), conclusion.clone(), ids, kids)
        }
    }
}

pub fn shape_of(d: &Deduction) -> Shape {
    shape(d, &HashMap::new(), &mut 0, &mut HashMap::new())
}

/// Equality up to renaming of assumption classes.
pub fn alpha_eq(a: &Deduction, b: &Deduction) -> bool {
    shape_of(a) == shape_of(b)
}

pub fn nodes(d: &Deduction) -> Vec<(Path, Deduction)> {
    let mut out = Vec::new();
    d.visit(&mut |p, n| out.push((p.to_vec(), n.clone())));
    out
}

/// Brute-force re-derivation of maximal formulas and segments, straight
/// from the definitions, with no shared code beyond tree access.
pub mod oracle {
    use std::collections::BTreeSet;

    use super::*;

    fn name(d: &Deduction) -> Option<&'static str> {
        d.rule().map(Rule::name)
    }

    fn is_intro(d: &Deduction) -> bool {
        name(d).is_some_and(|n| {
            let body = n.trim_start_matches(['+', '-']);
            body.ends_with('I') || body.ends_with("I1") || body.ends_with("I2")
        })
    }

    fn is_elim(n: &str) -> bool {
        let body = n.trim_start_matches(['+', '-']);
        body.ends_with('E') || body.ends_with("E1") || body.ends_with("E2")
    }

    fn is_split(n: &str) -> bool {
        n == "+orE" || n == "-andE"
    }

    fn parent(p: &Path) -> Option<(Path, usize)> {
        let (&k, rest) = p.split_last()?;
        Some((rest.to_vec(), k))
    }

    fn minor_of_split(d: &Deduction, p: &Path) -> bool {
        match parent(p) {
            Some((q, k)) => k >= 1 && name(d.at(&q).unwrap()).is_some_and(is_split),
            None => false,
        }
    }

    fn major_of_elim(d: &Deduction, p: &Path) -> bool {
        match parent(p) {
            Some((q, k)) => k == 0 && name(d.at(&q).unwrap()).is_some_and(is_elim),
            None => false,
        }
    }

    fn premise_of_nc(d: &Deduction, p: &Path) -> bool {
        match parent(p) {
            Some((q, _)) => name(d.at(&q).unwrap()) == Some("nc"),
            None => false,
        }
    }

    /// (kind, path) of every maximal formula.
    pub fn maximal_formulas(d: &Deduction) -> BTreeSet<(&'static str, Path)> {
        let mut out = BTreeSet::new();
        for (p, n) in nodes(d) {
            let red = name(&n) == Some("red");
            let intro = is_intro(&n);
            if intro && major_of_elim(d, &p) {
                out.insert(("ie", p.clone()));
            }
            if red && major_of_elim(d, &p) {
                out.insert(("re", p.clone()));
            }
            if red && premise_of_nc(d, &p) {
                out.insert(("rnc", p.clone()));
            }
            if intro && premise_of_nc(d, &p) {
                let (q, k) = parent(&p).unwrap();
                let mut other = q.clone();
                other.push(1 - k);
                if is_intro(d.at(&other).unwrap()) {
                    out.insert(("inc", p.clone()));
                }
            }
        }
        out
    }

    /// Every segment as (positions top to bottom, maximal).
    pub fn segments(d: &Deduction) -> BTreeSet<(Vec<Path>, bool)> {
        let all = nodes(d);
        let mut out = BTreeSet::new();
        for (start, first) in &all {
            // C1 must not be concluded by a case split
            if name(first).is_some_and(is_split) {
                continue;
            }
            // try every ancestor as the last occurrence
            for len in 2..=start.len() + 1 {
                let chain: Vec<Path> = (0..len)
                    .map(|i| start[..start.len() - i].to_vec())
                    .collect();
                let ok = chain[..len - 1].iter().all(|c| minor_of_split(d, c))
                    && !minor_of_split(d, &chain[len - 1])
                    && chain
                        .iter()
                        .all(|c| d.at(c).unwrap().conclusion() == first.conclusion());
                if ok {
                    let last = &chain[len - 1];
                    let maximal = major_of_elim(d, last) || premise_of_nc(d, last);
                    out.insert((chain, maximal));
                }
            }
        }
        out
    }
}

/// (corpus stem, redex kind reduced) for each golden step;
/// `None` marks the atomization example.
pub const GOLDEN: &[(&str, Option<&str>)] = &[
    ("perm_and_into_or", Some("perm")),
    ("perm_into_nc", Some("perm")),
    ("re_and", Some("re")),
    ("re_not", Some("re")),
    ("re_imp_i", Some("re")),
    ("re_imp_ii", Some("re")),
    ("re_imp_iii", Some("re")),
    ("re_or", Some("re")),
    ("rnc_substitute", Some("rnc")),
    ("rnc_collapse", Some("rnc")),
    ("inc_and", Some("inc")),
    ("inc_imp", Some("inc")),
    ("atomize_or", None),
];

/// Applies the single operation a golden file illustrates.
pub fn apply_golden(stem: &str, kind: Option<&str>) -> Deduction {
    use bilateral::analysis::Analysis;
    use bilateral::kernel::LabelSupply;
    use bilateral::normalizer::{atomize_nc, reduce};

    let before = corpus(&format!("{stem}.bnd"));
    let Some(kind) = kind else {
        return atomize_nc(&before).unwrap();
    };
    let analysis = Analysis::of(&before);
    let redex = analysis
        .redexes
        .iter()
        .find(|r| r.kind.name() == kind)
        .unwrap_or_else(|| panic!("{stem}: no {kind} redex"));
    let mut supply = LabelSupply::for_tree(&before);
    reduce(&before, redex, &mut supply)
        .unwrap_or_else(|e| panic!("{stem}: {e}"))
        .0
}
