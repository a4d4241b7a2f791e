//! Hand-written deductions shared by the integration tests.

/// (rule, system, deduction whose last inference applies the rule)
pub const RULE_INSTANCES: &[(&str, &str, &str)] = &[
    (
        "+andI",
        "B",
        "(+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))",
    ),
    ("+andE1", "B", "(+andE1 (+ A) () (hyp 1 (+ (and A B))))"),
    ("+andE2", "B", "(+andE2 (+ B) () (hyp 1 (+ (and A B))))"),
    ("-andI1", "B", "(-andI1 (- (and A B)) () (hyp 1 (- A)))"),
    ("-andI2", "B", "(-andI2 (- (and A B)) () (hyp 1 (- B)))"),
    (
        "-andE",
        "B",
        "(-andE (- C) (2 3) (hyp 1 (- (and A B))) \
         (-orE1 (- C) () (-orI (- (or C A)) () (hyp 4 (- C)) (hyp 2 (- A)))) \
         (-orE1 (- C) () (-orI (- (or C B)) () (hyp 4 (- C)) (hyp 3 (- B)))))",
    ),
    ("+orI1", "B", "(+orI1 (+ (or A B)) () (hyp 1 (+ A)))"),
    ("+orI2", "B", "(+orI2 (+ (or A B)) () (hyp 1 (+ B)))"),
    (
        "+orE",
        "B",
        "(+orE (+ (or B A)) (2 3) (hyp 1 (+ (or A B))) \
         (+orI2 (+ (or B A)) () (hyp 2 (+ A))) (+orI1 (+ (or B A)) () (hyp 3 (+ B))))",
    ),
    (
        "-orI",
        "B",
        "(-orI (- (or A B)) () (hyp 1 (- A)) (hyp 2 (- B)))",
    ),
    ("-orE1", "B", "(-orE1 (- A) () (hyp 1 (- (or A B))))"),
    ("-orE2", "B", "(-orE2 (- B) () (hyp 1 (- (or A B))))"),
    ("+impI", "B", "(+impI (+ (imp A A)) (1) (hyp 1 (+ A)))"),
    (
        "+impE",
        "B",
        "(+impE (+ B) () (hyp 1 (+ (imp A B))) (hyp 2 (+ A)))",
    ),
    (
        "-impI",
        "B",
        "(-impI (- (imp A B)) () (hyp 1 (+ A)) (hyp 2 (- B)))",
    ),
    ("-impE1", "B", "(-impE1 (+ A) () (hyp 1 (- (imp A B))))"),
    ("-impE2", "B", "(-impE2 (- B) () (hyp 1 (- (imp A B))))"),
    ("+notI", "B", "(+notI (+ (not A)) () (hyp 1 (- A)))"),
    ("+notE", "B", "(+notE (- A) () (hyp 1 (+ (not A))))"),
    ("-notI", "B", "(-notI (- (not A)) () (hyp 1 (+ A)))"),
    ("-notE", "B", "(-notE (+ A) () (hyp 1 (- (not A))))"),
    (
        "red",
        "B",
        "(red (+ A) (1) (nc bot () (hyp 2 (+ A)) (hyp 1 (- A))))",
    ),
    ("nc", "B", "(nc bot () (hyp 1 (+ A)) (hyp 2 (- A)))"),
    (
        "+tonkI",
        "B+tonk",
        "(+tonkI (+ (tonk A B)) () (hyp 1 (+ A)))",
    ),
    ("tonkE", "B+tonk", "(tonkE (+ B) () (hyp 1 (+ (tonk A B))))"),
    (
        "+conkI",
        "B+conk",
        "(+conkI (+ (conk A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))",
    ),
    (
        "+conkE1",
        "B+conk",
        "(+conkE1 (+ A) () (hyp 1 (+ (conk A B))))",
    ),
    (
        "+conkE2",
        "B+conk",
        "(+conkE2 (+ B) () (hyp 1 (+ (conk A B))))",
    ),
    (
        "-conkI",
        "B+conk",
        "(-conkI (- (conk A B)) () (hyp 1 (- A)) (hyp 2 (- B)))",
    ),
    (
        "-conkE1",
        "B+conk",
        "(-conkE1 (- A) () (hyp 1 (- (conk A B))))",
    ),
    (
        "-conkE2",
        "B+conk",
        "(-conkE2 (- B) () (hyp 1 (- (conk A B))))",
    ),
    (
        "+honkI",
        "B+honk",
        "(+honkI (+ (honk A B)) () (hyp 1 (- A)) (hyp 2 (+ B)))",
    ),
    (
        "+honkE1",
        "B+honk",
        "(+honkE1 (- A) () (hyp 1 (+ (honk A B))))",
    ),
    (
        "+honkE2",
        "B+honk",
        "(+honkE2 (+ B) () (hyp 1 (+ (honk A B))))",
    ),
    (
        "-honkI",
        "B+honk",
        "(-honkI (- (honk A B)) () (hyp 1 (+ A)) (hyp 2 (- B)))",
    ),
    (
        "-honkE1",
        "B+honk",
        "(-honkE1 (+ A) () (hyp 1 (- (honk A B))))",
    ),
    (
        "-honkE2",
        "B+honk",
        "(-honkE2 (- B) () (hyp 1 (- (honk A B))))",
    ),
];

/// (deduction, system, position of the expected violation)
pub const MUTANTS: &[(&str, &str, &[usize])] = &[
    // wrong conjunct projected
    ("(+andE1 (+ B) () (hyp 1 (+ (and A B))))", "B", &[]),
    // sign flipped on an introduction
    (
        "(+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (- B)))",
        "B",
        &[],
    ),
    // denial of a disjunction from a single disjunct
    ("(+orI1 (- (or A B)) () (hyp 1 (+ A)))", "B", &[]),
    // minor premises disagree with the conclusion
    (
        "(+orE (+ C) (2 3) (hyp 1 (+ (or A B))) (hyp 4 (+ C)) (hyp 5 (+ D)))",
        "B",
        &[],
    ),
    // discharged class holds the wrong formula
    ("(+impI (+ (imp A B)) (1) (hyp 1 (+ B)))", "B", &[0]),
    // implication elimination with the wrong antecedent
    (
        "(+impE (+ B) () (hyp 1 (+ (imp A B))) (hyp 2 (+ C)))",
        "B",
        &[],
    ),
    // non-contradiction on two assertions
    ("(nc bot () (hyp 1 (+ A)) (hyp 2 (+ A)))", "B", &[]),
    // reductio discharging the conclusion rather than its contradictory
    (
        "(red (+ A) (1) (nc bot () (hyp 1 (+ A)) (hyp 2 (- A))))",
        "B",
        &[0, 0],
    ),
    // negation elimination keeps the sign
    ("(-notE (- A) () (hyp 1 (- (not A))))", "B", &[]),
    // wrong premise count, nested below a valid rule
    (
        "(+notI (+ (not A)) () (-andI1 (- A) () (hyp 1 (- A)) (hyp 2 (- B))))",
        "B",
        &[0],
    ),
];
