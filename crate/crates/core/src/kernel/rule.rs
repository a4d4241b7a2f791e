use std::fmt;

use crate::syntax::{Connective, Sign};

/// Every inference rule the checker knows, including the extension
/// connectives `tonk`, `conk` and `honk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    PlusAndI,
    PlusAndE1,
    PlusAndE2,
    MinusAndI1,
    MinusAndI2,
    MinusAndE,
    PlusOrI1,
    PlusOrI2,
    PlusOrE,
    MinusOrI,
    MinusOrE1,
    MinusOrE2,
    PlusImpI,
    PlusImpE,
    MinusImpI,
    MinusImpE1,
    MinusImpE2,
    PlusNotI,
    PlusNotE,
    MinusNotI,
    MinusNotE,
    Reductio,
    NonContradiction,
    PlusTonkI,
    TonkE,
    PlusConkI,
    PlusConkE1,
    PlusConkE2,
    MinusConkI,
    MinusConkE1,
    MinusConkE2,
    PlusHonkI,
    PlusHonkE1,
    PlusHonkE2,
    MinusHonkI,
    MinusHonkE1,
    MinusHonkE2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Introduction,
    Elimination,
    /// Reductio and non-contradiction.
    Coordination,
}

use Rule::*;

impl Rule {
    pub const ALL: [Rule; 37] = [
        PlusAndI,
        PlusAndE1,
        PlusAndE2,
        MinusAndI1,
        MinusAndI2,
        MinusAndE,
        PlusOrI1,
        PlusOrI2,
        PlusOrE,
        MinusOrI,
        MinusOrE1,
        MinusOrE2,
        PlusImpI,
        PlusImpE,
        MinusImpI,
        MinusImpE1,
        MinusImpE2,
        PlusNotI,
        PlusNotE,
        MinusNotI,
        MinusNotE,
        Reductio,
        NonContradiction,
        PlusTonkI,
        TonkE,
        PlusConkI,
        PlusConkE1,
        PlusConkE2,
        MinusConkI,
        MinusConkE1,
        MinusConkE2,
        PlusHonkI,
        PlusHonkE1,
        PlusHonkE2,
        MinusHonkI,
        MinusHonkE1,
        MinusHonkE2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlusAndI => "+andI",
            PlusAndE1 => "+andE1",
            PlusAndE2 => "+andE2",
            MinusAndI1 => "-andI1",
            MinusAndI2 => "-andI2",
            MinusAndE => "-andE",
            PlusOrI1 => "+orI1",
            PlusOrI2 => "+orI2",
            PlusOrE => "+orE",
            MinusOrI => "-orI",
            MinusOrE1 => "-orE1",
            MinusOrE2 => "-orE2",
            PlusImpI => "+impI",
            PlusImpE => "+impE",
            MinusImpI => "-impI",
            MinusImpE1 => "-impE1",
            MinusImpE2 => "-impE2",
            PlusNotI => "+notI",
            PlusNotE => "+notE",
            MinusNotI => "-notI",
            MinusNotE => "-notE",
            Reductio => "red",
            NonContradiction => "nc",
            PlusTonkI => "+tonkI",
            TonkE => "tonkE",
            PlusConkI => "+conkI",
            PlusConkE1 => "+conkE1",
            PlusConkE2 => "+conkE2",
            MinusConkI => "-conkI",
            MinusConkE1 => "-conkE1",
            MinusConkE2 => "-conkE2",
            PlusHonkI => "+honkI",
            PlusHonkE1 => "+honkE1",
            PlusHonkE2 => "+honkE2",
            MinusHonkI => "-honkI",
            MinusHonkE1 => "-honkE1",
            MinusHonkE2 => "-honkE2",
        }
    }

    pub fn from_name(s: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == s)
    }

    pub fn kind(self) -> RuleKind {
        match self {
            Reductio | NonContradiction => RuleKind::Coordination,
            PlusAndI | MinusAndI1 | MinusAndI2 | PlusOrI1 | PlusOrI2 | MinusOrI | PlusImpI
            | MinusImpI | PlusNotI | MinusNotI | PlusTonkI | PlusConkI | MinusConkI | PlusHonkI
            | MinusHonkI => RuleKind::Introduction,
            _ => RuleKind::Elimination,
        }
    }

    pub fn is_intro(self) -> bool {
        self.kind() == RuleKind::Introduction
    }

    pub fn is_elim(self) -> bool {
        self.kind() == RuleKind::Elimination
    }

    /// `+orE` and `-andE`, the rules whose minor premises thread segments.
    pub fn is_case_split(self) -> bool {
        matches!(self, PlusOrE | MinusAndE)
    }

    /// Connective governed by the rule; `None` for reductio and
    /// non-contradiction.
    pub fn connective(self) -> Option<Connective> {
        use Connective as C;
        Some(match self {
            PlusAndI | PlusAndE1 | PlusAndE2 | MinusAndI1 | MinusAndI2 | MinusAndE => C::And,
            PlusOrI1 | PlusOrI2 | PlusOrE | MinusOrI | MinusOrE1 | MinusOrE2 => C::Or,
            PlusImpI | PlusImpE | MinusImpI | MinusImpE1 | MinusImpE2 => C::Imp,
            PlusNotI | PlusNotE | MinusNotI | MinusNotE => C::Not,
            PlusTonkI | TonkE => C::Tonk,
            PlusConkI | PlusConkE1 | PlusConkE2 | MinusConkI | MinusConkE1 | MinusConkE2 => C::Conk,
            PlusHonkI | PlusHonkE1 | PlusHonkE2 | MinusHonkI | MinusHonkE1 | MinusHonkE2 => C::Honk,
            Reductio | NonContradiction => return None,
        })
    }

    /// Sign of the formula introduced, or of the major premise eliminated.
    pub fn sign(self) -> Option<Sign> {
        self.connective()?;
        Some(if self.name().starts_with('-') {
            Sign::Minus
        } else {
            Sign::Plus
        })
    }

    pub fn arity(self) -> usize {
        match self {
            MinusAndE | PlusOrE => 3,
            PlusAndI | MinusOrI | PlusImpE | MinusImpI | NonContradiction | PlusConkI
            | MinusConkI | PlusHonkI | MinusHonkI => 2,
            _ => 1,
        }
    }

    /// Premise indices at which assumption classes are discharged, in the
    /// order the discharge list names them.
    pub fn discharge_slots(self) -> &'static [usize] {
        match self {
            MinusAndE | PlusOrE => &[1, 2],
            PlusImpI | Reductio => &[0],
            _ => &[],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for r in Rule::ALL {
            assert_eq!(Rule::from_name(r.name()), Some(r));
        }
        assert_eq!(Rule::from_name("andI"), None);
    }

    #[test]
    fn classification_counts() {
        let base: Vec<_> = Rule::ALL.iter().take(23).collect();
        assert_eq!(base.iter().filter(|r| r.is_intro()).count(), 10);
        assert_eq!(base.iter().filter(|r| r.is_elim()).count(), 11);
        assert_eq!(Rule::Reductio.kind(), RuleKind::Coordination);
        assert_eq!(Rule::MinusImpE1.sign(), Some(Sign::Minus));
        assert_eq!(Rule::TonkE.sign(), Some(Sign::Plus));
    }
}
