//! The `.bnd` text format for deductions.
//!
//! ```text
//! node  := (hyp NAT concl) | (RULE concl (NAT*) node*)
//! concl := (+ f) | (- f) | bot
//! f     := IDENT | (and f f) | (or f f) | (imp f f) | (not f)
//!        | (tonk f f) | (conk f f) | (honk f f)
//! ```
//!
//! Whitespace is insignificant and `;` starts a line comment. Parsing only
//! checks shape; rule schemas are the checker's business.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::kernel::{Deduction, Label, Rule};
use crate::normalizer::Trace;
use crate::syntax::{is_identifier, Conclusion, Connective, Formula, Sign, SignedFormula};

/// Byte range into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at bytes {span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

fn err<T>(span: SourceSpan, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        span,
        message: message.into(),
    })
}

#[derive(Debug)]
enum Sexp<'a> {
    Word(&'a str, SourceSpan),
    List(Vec<Sexp<'a>>, SourceSpan),
}

impl Sexp<'_> {
    fn span(&self) -> SourceSpan {
        match self {
            Sexp::Word(_, s) | Sexp::List(_, s) => *s,
        }
    }
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn skip_trivia(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() {
            match bytes[self.pos] {
                b';' => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn read(&mut self) -> Result<Sexp<'a>, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        match bytes.get(start) {
            None => err(SourceSpan::new(start, start), "unexpected end of input"),
            Some(b')') => err(SourceSpan::new(start, start + 1), "unbalanced ')'"),
            Some(b'(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match bytes.get(self.pos) {
                        None => {
                            return err(
                                SourceSpan::new(start, self.pos),
                                "unbalanced '(': missing ')'",
                            )
                        }
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Sexp::List(items, SourceSpan::new(start, self.pos)));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(_) => {
                while self.pos < bytes.len()
                    && !matches!(bytes[self.pos], b'(' | b')' | b';')
                    && !bytes[self.pos].is_ascii_whitespace()
                {
                    self.pos += 1;
                }
                // Stop only at ASCII delimiters, so the slice is on char boundaries.
                Ok(Sexp::Word(
                    &self.text[start..self.pos],
                    SourceSpan::new(start, self.pos),
                ))
            }
        }
    }
}

fn read_single(text: &str) -> Result<Sexp<'_>, ParseError> {
    let mut r = Reader { text, pos: 0 };
    let sexp = r.read()?;
    r.skip_trivia();
    if r.pos < text.len() {
        return err(
            SourceSpan::new(r.pos, text.len()),
            "trailing input after deduction",
        );
    }
    Ok(sexp)
}

fn formula(s: &Sexp<'_>) -> Result<Formula, ParseError> {
    match s {
        Sexp::Word(w, span) => {
            if *w == "bot" {
                err(*span, "`bot` is not a formula")
            } else if is_identifier(w) {
                Ok(Formula::atom(w))
            } else {
                err(*span, format!("invalid atom name {w:?}"))
            }
        }
        Sexp::List(items, span) => {
            let Some(Sexp::Word(head, head_span)) = items.first() else {
                return err(*span, "expected connective");
            };
            let Some(c) = Connective::from_name(head) else {
                return err(*head_span, format!("unknown connective {head:?}"));
            };
            if items.len() != c.arity() + 1 {
                return err(*span, format!("{c} takes {} operands", c.arity()));
            }
            let ops = items[1..]
                .iter()
                .map(formula)
                .collect::<Result<Vec<_>, _>>()?;
            let mut ops = ops.into_iter();
            Ok(match c {
                Connective::Not => Formula::not(ops.next().unwrap()),
                _ => Formula::binary(c, ops.next().unwrap(), ops.next().unwrap()),
            })
        }
    }
}

fn conclusion(s: &Sexp<'_>) -> Result<Conclusion, ParseError> {
    match s {
        Sexp::Word("bot", _) => Ok(Conclusion::Absurdity),
        Sexp::Word(w, span) => err(*span, format!("expected (+ f), (- f) or bot, found {w:?}")),
        Sexp::List(items, span) => {
            let sign = match items.first() {
                Some(Sexp::Word("+", _)) => Sign::Plus,
                Some(Sexp::Word("-", _)) => Sign::Minus,
                _ => return err(*span, "expected a sign `+` or `-`"),
            };
            if items.len() != 2 {
                return err(*span, "a signed formula has exactly one body");
            }
            Ok(Conclusion::Signed(SignedFormula::new(
                sign,
                formula(&items[1])?,
            )))
        }
    }
}

fn label(s: &Sexp<'_>) -> Result<Label, ParseError> {
    match s {
        Sexp::Word(w, span) => w
            .parse::<Label>()
            .or_else(|_| err(*span, format!("expected a class number, found {w:?}"))),
        Sexp::List(_, span) => err(*span, "expected a class number"),
    }
}

fn node(s: &Sexp<'_>) -> Result<Deduction, ParseError> {
    let Sexp::List(items, span) = s else {
        return err(s.span(), "expected a deduction node");
    };
    let Some(Sexp::Word(head, head_span)) = items.first() else {
        return err(*span, "expected `hyp` or a rule name");
    };
    if *head == "hyp" {
        if items.len() != 3 {
            return err(*span, "hyp takes a class number and a formula");
        }
        return Ok(Deduction::hyp(label(&items[1])?, conclusion(&items[2])?));
    }
    let Some(rule) = Rule::from_name(head) else {
        return err(*head_span, format!("unknown rule name {head:?}"));
    };
    if items.len() < 3 {
        return err(
            *span,
            format!("{rule} needs a conclusion and a discharge list"),
        );
    }
    let concl = conclusion(&items[1])?;
    let discharged = match &items[2] {
        Sexp::List(ls, _) => ls.iter().map(label).collect::<Result<Vec<_>, _>>()?,
        other => return err(other.span(), "expected a discharge list `(NAT*)`"),
    };
    let premises = items[3..].iter().map(node).collect::<Result<Vec<_>, _>>()?;
    Ok(Deduction::inf(rule, concl, discharged, premises))
}

pub fn parse(text: &str) -> Result<Deduction, ParseError> {
    node(&read_single(text)?)
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    formula(&read_single(text)?)
}

pub fn parse_conclusion(text: &str) -> Result<Conclusion, ParseError> {
    conclusion(&read_single(text)?)
}

/// Canonical single-line form.
pub fn print(d: &Deduction) -> String {
    let mut out = String::new();
    write_node(&mut out, d, None);
    out
}

/// One node per line, premises indented under their conclusion.
pub fn print_indented(d: &Deduction) -> String {
    let mut out = String::new();
    write_node(&mut out, d, Some(0));
    out.push('\n');
    out
}

/// Compact JSON with keys in a fixed order.
pub fn trace_to_json(t: &Trace) -> String {
    serde_json::to_string(t).expect("traces always serialize")
}

fn write_node(out: &mut String, d: &Deduction, indent: Option<usize>) {
    match d {
        Deduction::Hypothesis { class, assumption } => {
            let _ = write!(out, "(hyp {class} {assumption})");
        }
        Deduction::Inference {
            rule,
            conclusion,
            discharged,
            premises,
        } => {
            let labels: Vec<String> = discharged.iter().map(Label::to_string).collect();
            let _ = write!(out, "({rule} {conclusion} ({})", labels.join(" "));
            for p in premises {
                match indent {
                    None => out.push(' '),
                    Some(n) => {
                        out.push('\n');
                        out.push_str(&"  ".repeat(n + 1));
                    }
                }
                write_node(out, p, indent.map(|n| n + 1));
            }
            out.push(')');
        }
    }
}
