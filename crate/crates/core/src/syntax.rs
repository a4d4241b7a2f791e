//! Unsigned formulas, signed formulas and the absurdity marker.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Main operator of a compound formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connective {
    And,
    Or,
    Imp,
    Not,
    Tonk,
    Conk,
    Honk,
}

impl Connective {
    pub const ALL: [Connective; 7] = [
        Connective::And,
        Connective::Or,
        Connective::Imp,
        Connective::Not,
        Connective::Tonk,
        Connective::Conk,
        Connective::Honk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Imp => "imp",
            Connective::Not => "not",
            Connective::Tonk => "tonk",
            Connective::Conk => "conk",
            Connective::Honk => "honk",
        }
    }

    pub fn from_name(s: &str) -> Option<Connective> {
        Connective::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn arity(self) -> usize {
        if self == Connective::Not {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An unsigned propositional formula.
///
/// Operands are shared behind `Arc`, so cloning a formula is cheap and
/// formulas can be sent across threads.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Arc<str>),
    Not(Arc<Formula>),
    Binary(Connective, Arc<Formula>, Arc<Formula>),
}

/// Returns true for names matching `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Formula {
    /// Panics if `name` is not an identifier.
    pub fn atom(name: &str) -> Formula {
        assert!(is_identifier(name), "invalid atom name {name:?}");
        Formula::Atom(Arc::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Arc::new(f))
    }

    /// Panics if `c` is `Not`.
    pub fn binary(c: Connective, l: Formula, r: Formula) -> Formula {
        assert!(c != Connective::Not, "`not` is unary");
        Formula::Binary(c, Arc::new(l), Arc::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::binary(Connective::And, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::binary(Connective::Or, l, r)
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::binary(Connective::Imp, l, r)
    }

    pub fn main_connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) => None,
            Formula::Not(_) => Some(Connective::Not),
            Formula::Binary(c, _, _) => Some(*c),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Immediate operands, left to right.
    pub fn operands(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) => vec![],
            Formula::Not(a) => vec![a],
            Formula::Binary(_, a, b) => vec![a, b],
        }
    }

    /// Operands of a binary formula with the given main connective.
    pub fn as_binary(&self, c: Connective) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Binary(k, a, b) if *k == c => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_not(&self) -> Option<&Formula> {
        match self {
            Formula::Not(a) => Some(a),
            _ => None,
        }
    }

    /// Number of connective occurrences.
    pub fn degree(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(a) => 1 + a.degree(),
            Formula::Binary(_, a, b) => 1 + a.degree() + b.degree(),
        }
    }

    /// The formula itself and all of its subformulas.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.insert(self.clone()) {
            for op in self.operands() {
                op.collect_subformulas(out);
            }
        }
    }

    /// Visits every connective occurring in the formula.
    pub fn connectives(&self, out: &mut BTreeSet<Connective>) {
        if let Some(c) = self.main_connective() {
            out.insert(c);
        }
        for op in self.operands() {
            op.connectives(out);
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => f.write_str(a),
            Formula::Not(a) => write!(f, "(not {a})"),
            Formula::Binary(c, a, b) => write!(f, "({c} {a} {b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// Asserted.
    Plus,
    /// Denied.
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedFormula {
    pub sign: Sign,
    pub body: Formula,
}

impl SignedFormula {
    pub fn new(sign: Sign, body: Formula) -> Self {
        SignedFormula { sign, body }
    }

    pub fn plus(body: Formula) -> Self {
        SignedFormula::new(Sign::Plus, body)
    }

    pub fn minus(body: Formula) -> Self {
        SignedFormula::new(Sign::Minus, body)
    }

    /// Same body, opposite sign.
    pub fn star(&self) -> SignedFormula {
        SignedFormula::new(self.sign.flip(), self.body.clone())
    }

    pub fn degree(&self) -> usize {
        self.body.degree()
    }

    pub fn is_plus(&self) -> bool {
        self.sign == Sign::Plus
    }
}

impl fmt::Display for SignedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.sign.symbol(), self.body)
    }
}

/// What a deduction step may conclude: a signed formula or absurdity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conclusion {
    Signed(SignedFormula),
    Absurdity,
}

impl Conclusion {
    /// Absurdity has degree 0.
    pub fn degree(&self) -> usize {
        match self {
            Conclusion::Signed(s) => s.degree(),
            Conclusion::Absurdity => 0,
        }
    }

    pub fn signed(&self) -> Option<&SignedFormula> {
        match self {
            Conclusion::Signed(s) => Some(s),
            Conclusion::Absurdity => None,
        }
    }

    pub fn is_absurdity(&self) -> bool {
        matches!(self, Conclusion::Absurdity)
    }
}

impl From<SignedFormula> for Conclusion {
    fn from(s: SignedFormula) -> Self {
        Conclusion::Signed(s)
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Signed(s) => s.fmt(f),
            Conclusion::Absurdity => f.write_str("bot"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Formula {
        Formula::atom("A")
    }
    fn b() -> Formula {
        Formula::atom("B")
    }
    fn c() -> Formula {
        Formula::atom("C")
    }

    // Independent count over the printed form: every "(" opens one connective.
    fn paren_count(f: &Formula) -> usize {
        f.to_string().matches('(').count()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(Conclusion::Absurdity.degree(), 0);
        assert_eq!(SignedFormula::plus(a()).degree(), 0);
        let f = Formula::imp(Formula::and(a(), b()), Formula::not(c()));
        assert_eq!(paren_count(&f), 3);
        assert_eq!(SignedFormula::minus(f).degree(), 3);
    }

    #[test]
    fn star_examples() {
        assert_eq!(SignedFormula::plus(a()).star(), SignedFormula::minus(a()));
        let ab = Formula::or(a(), b());
        assert_eq!(
            SignedFormula::minus(ab.clone()).star(),
            SignedFormula::plus(ab)
        );
        assert_eq!(
            SignedFormula::plus(a()).star().star(),
            SignedFormula::plus(a())
        );
    }

    #[test]
    fn subformula_examples() {
        assert_eq!(a().subformulas(), BTreeSet::from([a()]));
        let ab = Formula::and(a(), b());
        assert_eq!(ab.subformulas(), BTreeSet::from([ab.clone(), a(), b()]));
        let n = Formula::not(Formula::imp(a(), b()));
        let expected = BTreeSet::from([n.clone(), Formula::imp(a(), b()), a(), b()]);
        assert_eq!(n.subformulas(), expected);
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("A"));
        assert!(is_identifier("p_1"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("1p"));
        assert!(!is_identifier("a-b"));
    }
}
