use std::fmt;

use thiserror::Error;

use super::term::{Parser, SyntaxError, Term};

/// Condition under which a conditional law is claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Guard {
    /// `x ≠ N(x)`
    Zeroless(String),
    /// `x ≠ 0`
    Nonzero(String),
    /// `s = t`
    Equal(Term, Term),
}

/// Laws that are not plain equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// `x ≠ N(x) ⇒ x·x⁻¹ = 1 + e` for an error term `e` such that `1 + e`
    /// is not an error term.
    FlexibleInverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawKind {
    Identity { lhs: Term, rhs: Term },
    Conditional { guard: Guard, lhs: Term, rhs: Term },
    /// Holds when at least one of the equations holds.
    Disjunction(Vec<(Term, Term)>),
    /// `sub ⊆ sup` as sets, for models whose values are sets.
    Inclusion { sub: Term, sup: Term },
    Builtin(Builtin),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Law {
    pub id: String,
    pub catalog: String,
    pub kind: LawKind,
    /// Universally quantified variables, drawn independently.
    pub vars: Vec<String>,
    /// Variables defined from the drawn ones, evaluated in order. Used to
    /// discharge existentials and to make equality guards reachable.
    pub witnesses: Vec<(String, Term)>,
}

impl Law {
    pub fn new(id: &str, catalog: &str, kind: LawKind) -> Law {
        Law::with_witnesses(id, catalog, kind, Vec::new())
    }

    pub fn with_witnesses(id: &str, catalog: &str, kind: LawKind, witnesses: Vec<(String, Term)>) -> Law {
        let mut all = Vec::new();
        for (_, t) in &witnesses {
            t.collect_vars(&mut all);
        }
        let mut vars = Vec::new();
        match &kind {
            LawKind::Identity { lhs, rhs } => {
                lhs.collect_vars(&mut vars);
                rhs.collect_vars(&mut vars);
            }
            LawKind::Conditional { guard, lhs, rhs } => {
                match guard {
                    Guard::Zeroless(v) | Guard::Nonzero(v) => Term::Var(v.clone()).collect_vars(&mut vars),
                    Guard::Equal(a, b) => {
                        a.collect_vars(&mut vars);
                        b.collect_vars(&mut vars);
                    }
                }
                lhs.collect_vars(&mut vars);
                rhs.collect_vars(&mut vars);
            }
            LawKind::Disjunction(eqs) => {
                for (l, r) in eqs {
                    l.collect_vars(&mut vars);
                    r.collect_vars(&mut vars);
                }
            }
            LawKind::Inclusion { sub, sup } => {
                sub.collect_vars(&mut vars);
                sup.collect_vars(&mut vars);
            }
            LawKind::Builtin(Builtin::FlexibleInverse) => vars.push("x".to_string()),
        }
        for v in all {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.retain(|v| !witnesses.iter().any(|(w, _)| w == v));
        Law {
            id: id.to_string(),
            catalog: catalog.to_string(),
            kind,
            vars,
            witnesses,
        }
    }

    pub fn is_guarded(&self) -> bool {
        matches!(self.kind, LawKind::Conditional { .. } | LawKind::Builtin(_))
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guard::Zeroless(v) => write!(f, "zeroless({v})"),
            Guard::Nonzero(v) => write!(f, "nonzero({v})"),
            Guard::Equal(a, b) => write!(f, "{a} = {b}"),
        }
    }
}

/// One line per law; identities and guarded equations use the law-file
/// syntax.
impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : ", self.id)?;
        match &self.kind {
            LawKind::Identity { lhs, rhs } => write!(f, "{lhs} = {rhs}")?,
            LawKind::Conditional { guard, lhs, rhs } => write!(f, "{guard} => {lhs} = {rhs}")?,
            LawKind::Disjunction(eqs) => {
                for (i, (l, r)) in eqs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" or ")?;
                    }
                    write!(f, "{l} = {r}")?;
                }
            }
            LawKind::Inclusion { sub, sup } => write!(f, "{sub} <= {sup}")?,
            LawKind::Builtin(Builtin::FlexibleInverse) => {
                f.write_str("zeroless(x) => x*x^-1 = 1 + e with N(e) = e and 1 + e zeroless")?
            }
        }
        for (w, t) in &self.witnesses {
            write!(f, " [{w} := {t}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawFileError {
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: SyntaxError },
    #[error("line {line}: duplicate law id '{id}'")]
    Duplicate { line: usize, id: String },
}

/// Parses `<id> : <term> = <term>` or
/// `<id> : zeroless(x) => <term> = <term>` (also `nonzero(x)`).
pub fn parse_law(src: &str, catalog: &str) -> Result<Law, SyntaxError> {
    let start = src.len() - src.trim_start().len();
    let colon = src.find(':').ok_or_else(|| SyntaxError {
        pos: start,
        msg: "expected '<id> :'".into(),
    })?;
    let id = src[start..colon].trim();
    let id_ok = !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.');
    if !id_ok {
        return Err(SyntaxError {
            pos: start,
            msg: format!("invalid law id '{id}'"),
        });
    }
    let mut p = Parser::at(src, colon + 1);
    let save = p.pos();
    let guard = match p.ident() {
        Some(kw @ ("zeroless" | "nonzero")) if p.peek() == Some('(') => {
            p.eat('(');
            let v = p
                .ident()
                .ok_or_else(|| p.error("expected a variable"))?
                .to_string();
            if !p.eat(')') {
                return Err(p.error("expected ')'"));
            }
            if !p.eat_str("=>") {
                return Err(p.error("expected '=>'"));
            }
            Some(if kw == "zeroless" {
                Guard::Zeroless(v)
            } else {
                Guard::Nonzero(v)
            })
        }
        _ => {
            p = Parser::at(src, save);
            None
        }
    };
    let lhs = p.term()?;
    if !p.eat('=') {
        return Err(p.error("expected '='"));
    }
    let rhs = p.term()?;
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    let kind = match guard {
        Some(guard) => LawKind::Conditional { guard, lhs, rhs },
        None => LawKind::Identity { lhs, rhs },
    };
    Ok(Law::new(id, catalog, kind))
}

/// One law per line; blank lines and lines starting with `#` are skipped.
pub fn parse_law_file(src: &str, catalog: &str) -> Result<Vec<Law>, LawFileError> {
    let mut laws: Vec<Law> = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let law = parse_law(line, catalog).map_err(|source| LawFileError::Syntax { line: i + 1, source })?;
        if laws.iter().any(|l| l.id == law.id) {
            return Err(LawFileError::Duplicate { line: i + 1, id: law.id });
        }
        laws.push(law);
    }
    Ok(laws)
}
