//! First-order terms, rewrite rules, and term rewrite systems.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A first-order term: a variable or a function symbol applied to argument
/// terms. Constants are applications with no arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    App { sym: String, args: Vec<Term> },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(sym: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App { sym: sym.into(), args }
    }

    pub fn constant(sym: impl Into<String>) -> Term {
        Term::app(sym, Vec::new())
    }

    /// Node count: variable occurrences plus function-symbol occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App { args, .. } => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    /// The set of variable names occurring in the term.
    pub fn variables(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Var(x) => {
                out.insert(x.as_str());
            }
            Term::App { args, .. } => {
                for arg in args {
                    arg.collect_variables(out);
                }
            }
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App { args, .. } => args.iter().all(Term::is_ground),
        }
    }

    /// Records the arity of every symbol in the term, failing on a symbol
    /// used with two different arities.
    pub fn collect_arities(&self, into: &mut BTreeMap<String, usize>) -> Result<(), TrsError> {
        match self {
            Term::Var(_) => Ok(()),
            Term::App { sym, args } => {
                match into.get(sym) {
                    Some(&arity) if arity != args.len() => {
                        return Err(TrsError::ArityConflict {
                            symbol: sym.clone(),
                            first: arity,
                            second: args.len(),
                        });
                    }
                    Some(_) => {}
                    None => {
                        into.insert(sym.clone(), args.len());
                    }
                }
                for arg in args {
                    arg.collect_arities(into)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => write!(f, "{x}"),
            Term::App { sym, args } => {
                write!(f, "{sym}")?;
                if !args.is_empty() {
                    write!(f, "(")?;
                    for (i, arg) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{arg}")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// Simultaneous replacement of variables by terms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<String, Term>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, var: impl Into<String>, term: Term) {
        self.map.insert(var.into(), term);
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.map.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Term)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Applies the substitution, replacing exactly the mapped variables,
    /// all at once.
    pub fn apply(&self, term: &Term) -> Term {
        match term {
            Term::Var(x) => self.map.get(x).cloned().unwrap_or_else(|| term.clone()),
            Term::App { sym, args } => Term::App {
                sym: sym.clone(),
                args: args.iter().map(|a| self.apply(a)).collect(),
            },
        }
    }
}

impl FromIterator<(String, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (String, Term)>>(iter: I) -> Self {
        Substitution { map: iter.into_iter().collect() }
    }
}

/// Syntactic matching: the unique substitution `s` with
/// `s.apply(pattern) == subject`, when one exists.
pub fn match_term(pattern: &Term, subject: &Term) -> Option<Substitution> {
    let mut subst = Substitution::new();
    match_into(pattern, subject, &mut subst).then_some(subst)
}

fn match_into(pattern: &Term, subject: &Term, subst: &mut Substitution) -> bool {
    match pattern {
        Term::Var(x) => match subst.get(x) {
            Some(bound) => bound == subject,
            None => {
                subst.bind(x.clone(), subject.clone());
                true
            }
        },
        Term::App { sym, args } => match subject {
            Term::App { sym: ssym, args: sargs } if sym == ssym && args.len() == sargs.len() => {
                args.iter().zip(sargs).all(|(p, s)| match_into(p, s, subst))
            }
            _ => false,
        },
    }
}

/// Ill-formed rule or rewrite system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrsError {
    /// The left-hand side of a rule is a bare variable.
    VariableLhs { var: String },
    /// A right-hand-side variable that does not occur on the left.
    UnboundRhsVariable { var: String },
    /// One symbol used with two different arities.
    ArityConflict { symbol: String, first: usize, second: usize },
}

impl fmt::Display for TrsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrsError::VariableLhs { var } => {
                write!(f, "left-hand side is the bare variable {var}")
            }
            TrsError::UnboundRhsVariable { var } => {
                write!(f, "right-hand-side variable {var} does not occur on the left")
            }
            TrsError::ArityConflict { symbol, first, second } => {
                write!(f, "symbol {symbol} used with arities {first} and {second}")
            }
        }
    }
}

impl core::error::Error for TrsError {}

/// A rewrite rule `lhs -> rhs`. The left-hand side is never a bare variable
/// and every right-hand-side variable occurs on the left; without these the
/// rewrite relation would admit unbounded derivations from any term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    lhs: Term,
    rhs: Term,
}

impl Rule {
    pub fn new(lhs: Term, rhs: Term) -> Result<Rule, TrsError> {
        if let Term::Var(var) = &lhs {
            return Err(TrsError::VariableLhs { var: var.clone() });
        }
        let lhs_vars = lhs.variables();
        if let Some(var) = rhs.variables().difference(&lhs_vars).next() {
            return Err(TrsError::UnboundRhsVariable { var: (*var).into() });
        }
        Ok(Rule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// A term rewrite system: an ordered list of rules plus the signature they
/// induce, with arities checked for consistency across all rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trs {
    rules: Vec<Rule>,
    signature: BTreeMap<String, usize>,
}

impl Trs {
    pub fn new(rules: Vec<Rule>) -> Result<Trs, TrsError> {
        let mut signature = BTreeMap::new();
        for rule in &rules {
            rule.lhs.collect_arities(&mut signature)?;
            rule.rhs.collect_arities(&mut signature)?;
        }
        Ok(Trs { rules, signature })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Map from function symbol to arity, covering every rule.
    pub fn signature(&self) -> &BTreeMap<String, usize> {
        &self.signature
    }
}
