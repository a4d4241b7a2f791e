mod common;

use std::collections::BTreeSet;

use bilateral::kernel::{check, Rule};

use common::fixtures::{MUTANTS, RULE_INSTANCES};
use common::{ded, system};

#[test]
fn every_rule_has_a_valid_instance() {
    let mut seen = BTreeSet::new();
    for (name, sys, text) in RULE_INSTANCES {
        let d = ded(text);
        assert_eq!(d.rule().map(Rule::name), Some(*name), "{text}");
        let report = check(&d, &system(sys));
        assert!(report.ok(), "{name}: {:?}", report.violations);
        seen.insert(*name);
    }
    let all: BTreeSet<&str> = Rule::ALL.iter().map(|r| r.name()).collect();
    assert_eq!(seen, all);
}

#[test]
fn extension_rules_need_their_system() {
    for (name, sys, text) in RULE_INSTANCES {
        if *sys != "B" {
            assert!(
                !check(&ded(text), &system("B")).ok(),
                "{name} accepted in B"
            );
        }
    }
}

#[test]
fn mutants_fail_at_the_expected_position() {
    for (text, sys, path) in MUTANTS {
        let report = check(&ded(text), &system(sys));
        assert!(!report.ok(), "mutant accepted: {text}");
        assert!(
            report.violations.iter().any(|v| v.path == *path),
            "{text}: expected a violation at {path:?}, got {:?}",
            report.violations
        );
    }
}
