mod common;

use std::collections::BTreeSet;

use bilateral::analysis::{subformula_report, Analysis, Rank, RedexKind};
use bilateral::generator::{generate, GeneratorParams};
use bilateral::kernel::{LabelSupply, Path};
use bilateral::normalizer::reduce;

use common::{corpus, ded, oracle, system};

fn kinds(d: &str) -> Vec<(&'static str, Path)> {
    Analysis::of(&ded(d))
        .redexes
        .iter()
        .map(|r| (r.kind.name(), r.path.clone()))
        .collect()
}

#[test]
fn no_case_split_no_segment() {
    let a = Analysis::of(&ded("(+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))"));
    assert!(a.segments.is_empty());
    assert!(a.is_normal());
    assert_eq!(a.rank(), Rank::Zero);
}

#[test]
fn final_case_split_gives_two_plain_segments() {
    let a = Analysis::of(&ded(
        "(+orE (+ C) (2 3) (hyp 1 (+ (or A B))) (hyp 2 (+ C)) (hyp 3 (+ C)))",
    ));
    let got: BTreeSet<(Vec<Path>, bool)> = a
        .segments
        .iter()
        .map(|s| (s.positions.clone(), s.maximal))
        .collect();
    let want: BTreeSet<(Vec<Path>, bool)> = [
        (vec![vec![1], vec![]], false),
        (vec![vec![2], vec![]], false),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    assert!(a.is_normal());
}

#[test]
fn case_split_feeding_an_elimination_is_maximal() {
    let d = ded(
        "(+impE (+ D) () \
           (+orE (+ (imp C D)) (2 3) (hyp 1 (+ (or A B))) (hyp 2 (+ (imp C D))) (hyp 3 (+ (imp C D)))) \
           (hyp 4 (+ C)))",
    );
    let a = Analysis::of(&d);
    assert!(a.segments.iter().all(|s| s.maximal && s.len() == 2));
    assert_eq!(a.maximal_segments().count(), 2);
    assert_eq!(a.rank(), Rank::pair(1, 4));
}

#[test]
fn detour_kinds() {
    assert_eq!(
        kinds("(+andE1 (+ A) () (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B))))"),
        vec![("ie", vec![0])]
    );
    let conk = Analysis::of(&corpus("conk_explosion.bnd"));
    assert_eq!(conk.redexes.len(), 1);
    assert_eq!(conk.redexes[0].kind, RedexKind::Re);
    assert_eq!(conk.redexes[0].path, vec![0]);
    assert!(!conk.is_normal());
    assert_eq!(
        kinds(
            "(nc bot () (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B))) \
               (-andI2 (- (and A B)) () (hyp 3 (- B))))"
        ),
        vec![("inc", vec![0]), ("inc", vec![1])]
    );
    assert_eq!(
        kinds("(nc bot () (hyp 2 (+ A)) (red (- A) (1) (nc bot () (hyp 1 (+ A)) (hyp 3 (- A)))))"),
        vec![("rnc", vec![1])]
    );
}

#[test]
fn intro_against_hypothesis_is_not_maximal() {
    assert!(
        kinds("(nc bot () (+notI (+ (not A)) () (hyp 1 (- A))) (hyp 2 (- (not A))))").is_empty()
    );
}

#[test]
fn right_nc_premise_is_bumped_only_when_both_are_maximal() {
    let single = Analysis::of(&ded(
        "(nc bot () (hyp 2 (+ (and A B))) (red (- (and A B)) (1) (nc bot () (hyp 1 (+ (and A B))) (hyp 3 (- (and A B))))))",
    ));
    assert_eq!(single.redexes[0].effective_degree, 1);
    assert!(!single.redexes[0].bumped);

    let both = Analysis::of(&ded(
        "(nc bot () \
           (+andI (+ (and (and A B) C)) () (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B))) (hyp 3 (+ C))) \
           (-andI1 (- (and (and A B) C)) () (hyp 4 (- (and A B)))))",
    ));
    let degrees: Vec<(Path, usize)> = both
        .redexes
        .iter()
        .map(|r| (r.path.clone(), r.effective_degree))
        .collect();
    assert_eq!(degrees, vec![(vec![0], 2), (vec![1], 3)]);
    for r in &both.redexes {
        assert!(r.effective_degree - r.degree() <= 1);
    }
}

#[test]
fn rank_examples() {
    assert_eq!(Analysis::of(&ded("(hyp 1 (+ A))")).rank(), Rank::Zero);
    let ie = ded("(+andE1 (+ A) () (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B))))");
    assert_eq!(Analysis::of(&ie).rank(), Rank::pair(1, 1));
    assert!(Rank::Zero < Rank::pair(0, 1));
    assert!(Rank::pair(1, 9) < Rank::pair(2, 1));
    assert!(Rank::pair(2, 1) < Rank::pair(2, 2));
}

#[test]
fn rank_counts_the_highest_level_only() {
    // a degree-1 segment of length 2 under a degree-2 detour
    let d = ded(
        "(+impE (+ B) () \
           (+orE (+ (imp A B)) (2 3) (hyp 1 (+ (or A A))) (hyp 2 (+ (imp A B))) \
             (+impI (+ (imp A B)) (5) (hyp 6 (+ B)))) \
           (+andE1 (+ A) () (+andI (+ (and A (and B C))) () (hyp 4 (+ A)) (hyp 7 (+ (and B C))))))",
    );
    let a = Analysis::of(&d);
    assert_eq!(a.rank(), Rank::pair(2, 1));
    // two segments (length 2 each) plus the detour
    assert_eq!(a.total_weight(), 5);
}

#[test]
fn literal_count_can_stay_put_while_rank_drops() {
    let x = "(+andE1 (+ (and A B)) () (+andI (+ (and (and A B) C)) () \
               (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B))) (hyp 3 (+ C))))";
    let d = ded(&format!(
        "(+andI (+ (and A A)) () (+andE1 (+ A) () {x}) (+andE1 (+ A) () {x}))"
    ));
    let before = Analysis::of(&d);
    let target = before.redexes.iter().find(|r| r.degree() == 2).unwrap();
    let (next, _) = reduce(&d, target, &mut LabelSupply::for_tree(&d)).unwrap();
    let after = Analysis::of(&next);
    assert_eq!(before.total_weight(), 2);
    assert_eq!(after.total_weight(), 2);
    assert!(after.rank() < before.rank());
}

#[test]
fn subformula_report_examples() {
    assert!(subformula_report(&ded("(hyp 1 (+ A))")).is_empty());
    let ie = ded("(+andE1 (+ A) () (+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B))))");
    let v = subformula_report(&ie);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].path, vec![0]);
}

#[test]
fn fast_detection_matches_brute_force_on_small_trees() {
    for seed in 0..400 {
        let d = generate(&GeneratorParams {
            redex_bias: 1.0,
            ..GeneratorParams::new(seed, 12)
        });
        let a = Analysis::of(&d);
        let fast: BTreeSet<(&'static str, Path)> = a
            .maximal_formulas()
            .map(|r| (r.kind.name(), r.path.clone()))
            .collect();
        assert_eq!(fast, oracle::maximal_formulas(&d), "seed {seed}");
        let segs: BTreeSet<(Vec<Path>, bool)> = a
            .segments
            .iter()
            .map(|s| (s.positions.clone(), s.maximal))
            .collect();
        assert_eq!(segs, oracle::segments(&d), "seed {seed}");
        assert_eq!(a.is_normal(), a.rank() == Rank::Zero);
    }
}

#[test]
fn every_minor_premise_starts_or_continues_one_segment() {
    for seed in 0..200 {
        let d = generate(&GeneratorParams::new(seed, 30));
        let a = Analysis::of(&d);
        let mut tops = BTreeSet::new();
        for s in &a.segments {
            assert!(tops.insert(s.first().clone()), "seed {seed}");
        }
        assert!(bilateral::kernel::check(&d, &system("B")).ok());
    }
}
