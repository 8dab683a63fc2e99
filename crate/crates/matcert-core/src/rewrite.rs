//! The rewrite relation, exhaustive derivation search, and ground-term
//! enumeration used by the brute-force oracles.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::term::{match_term, Term, Trs};

/// All terms reachable from `term` in exactly one rewrite step, at any
/// position, with any rule.
pub fn rewrite_successors(trs: &Trs, term: &Term) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    for rule in trs.rules() {
        if let Some(subst) = match_term(rule.lhs(), term) {
            out.insert(subst.apply(rule.rhs()));
        }
    }
    if let Term::App { sym, args } = term {
        for (i, arg) in args.iter().enumerate() {
            for replacement in rewrite_successors(trs, arg) {
                let mut new_args = args.clone();
                new_args[i] = replacement;
                out.insert(Term::App { sym: sym.clone(), args: new_args });
            }
        }
    }
    out
}

/// Why a derivation search gave up: an actual loop, or a derivation longer
/// than the caller's step budget. Either way the trace is a genuine rewrite
/// sequence, with first term equal to last in the cycle case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonterminationEvidence {
    Cycle { trace: Vec<Term> },
    StepCapExceeded { cap: u64, trace: Vec<Term> },
}

impl NonterminationEvidence {
    pub fn trace(&self) -> &[Term] {
        match self {
            NonterminationEvidence::Cycle { trace } => trace,
            NonterminationEvidence::StepCapExceeded { trace, .. } => trace,
        }
    }
}

impl fmt::Display for NonterminationEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (label, trace) = match self {
            NonterminationEvidence::Cycle { trace } => ("cycle", trace),
            NonterminationEvidence::StepCapExceeded { cap, trace } => {
                write!(f, "derivation exceeds {cap} steps: ")?;
                return write_trace(f, trace);
            }
        };
        write!(f, "{label}: ")?;
        write_trace(f, trace)
    }
}

fn write_trace(f: &mut fmt::Formatter<'_>, trace: &[Term]) -> fmt::Result {
    for (i, term) in trace.iter().enumerate() {
        if i > 0 {
            write!(f, " -> ")?;
        }
        write!(f, "{term}")?;
    }
    Ok(())
}

impl core::error::Error for NonterminationEvidence {}

struct Frame {
    term: Term,
    succs: Vec<Term>,
    next: usize,
    best: u64,
}

/// Longest-derivation search with a memo shared across start terms, so that
/// sweeping many start terms of one system stays cheap.
pub struct DerivationSearch<'a> {
    trs: &'a Trs,
    memo: BTreeMap<Term, u64>,
}

impl<'a> DerivationSearch<'a> {
    pub fn new(trs: &'a Trs) -> Self {
        DerivationSearch { trs, memo: BTreeMap::new() }
    }

    /// The exact maximum number of rewrite steps in any derivation from
    /// `start`. A repeated term on the current path or a path deeper than
    /// `step_cap` aborts the search with the offending trace.
    ///
    /// Memoised values are only ever proven-finite, so a result may exceed
    /// the cap when pieced together from short explored paths; that is a
    /// correct answer, not a failure.
    pub fn longest_from(
        &mut self,
        start: &Term,
        step_cap: u64,
    ) -> Result<u64, NonterminationEvidence> {
        if let Some(&v) = self.memo.get(start) {
            return Ok(v);
        }
        let mut stack: Vec<Frame> = Vec::new();
        let mut on_path: BTreeSet<Term> = BTreeSet::new();
        on_path.insert(start.clone());
        stack.push(Frame {
            term: start.clone(),
            succs: rewrite_successors(self.trs, start).into_iter().collect(),
            next: 0,
            best: 0,
        });

        loop {
            let top = stack.last_mut().expect("loop exits when the stack empties");
            if top.next < top.succs.len() {
                let child = top.succs[top.next].clone();
                top.next += 1;
                if let Some(&v) = self.memo.get(&child) {
                    top.best = top.best.max(v + 1);
                } else if on_path.contains(&child) {
                    let first = stack
                        .iter()
                        .position(|f| f.term == child)
                        .expect("on_path mirrors the stack");
                    let mut trace: Vec<Term> =
                        stack[first..].iter().map(|f| f.term.clone()).collect();
                    trace.push(child);
                    return Err(NonterminationEvidence::Cycle { trace });
                } else {
                    if stack.len() as u64 > step_cap {
                        let mut trace: Vec<Term> =
                            stack.iter().map(|f| f.term.clone()).collect();
                        trace.push(child);
                        return Err(NonterminationEvidence::StepCapExceeded {
                            cap: step_cap,
                            trace,
                        });
                    }
                    let succs = rewrite_successors(self.trs, &child).into_iter().collect();
                    on_path.insert(child.clone());
                    stack.push(Frame { term: child, succs, next: 0, best: 0 });
                }
            } else {
                let done = stack.pop().expect("just inspected the top frame");
                on_path.remove(&done.term);
                self.memo.insert(done.term, done.best);
                match stack.last_mut() {
                    Some(parent) => parent.best = parent.best.max(done.best + 1),
                    None => return Ok(done.best),
                }
            }
        }
    }
}

/// One-shot form of [`DerivationSearch::longest_from`].
pub fn longest_derivation_steps(
    trs: &Trs,
    start: &Term,
    step_cap: u64,
) -> Result<u64, NonterminationEvidence> {
    DerivationSearch::new(trs).longest_from(start, step_cap)
}

/// A constant symbol name not present in the signature: `_c`, extended with
/// underscores until it is free.
pub fn fresh_constant_symbol(signature: &BTreeMap<String, usize>) -> String {
    let mut name = String::from("_c");
    while signature.contains_key(&name) {
        name.push('_');
    }
    name
}

/// All ground terms over the signature with size at most `size_bound`,
/// ordered by size and then structurally (symbol name, then arguments).
/// A signature without constants gets a [`fresh_constant_symbol`] added,
/// since it admits no ground terms at all.
pub fn enumerate_ground_terms(
    signature: &BTreeMap<String, usize>,
    size_bound: usize,
) -> Vec<Term> {
    let mut sig = signature.clone();
    if !sig.values().any(|&a| a == 0) {
        sig.insert(fresh_constant_symbol(signature), 0);
    }

    // by_size[s] holds the sorted terms of size exactly s
    let mut by_size: Vec<Vec<Term>> = Vec::with_capacity(size_bound + 1);
    by_size.push(Vec::new());
    for size in 1..=size_bound {
        let mut bucket = Vec::new();
        for (sym, &arity) in &sig {
            if arity == 0 {
                if size == 1 {
                    bucket.push(Term::constant(sym.clone()));
                }
                continue;
            }
            if size < arity + 1 {
                continue;
            }
            let mut partial: Vec<Term> = Vec::with_capacity(arity);
            fill_args(sym, arity, size - 1, &by_size, &mut partial, &mut bucket);
        }
        bucket.sort();
        by_size.push(bucket);
    }

    by_size.into_iter().flatten().collect()
}

/// Extends `partial` with argument terms whose sizes sum to `weight`,
/// pushing each completed application onto `out`.
fn fill_args(
    sym: &str,
    arity: usize,
    weight: usize,
    by_size: &[Vec<Term>],
    partial: &mut Vec<Term>,
    out: &mut Vec<Term>,
) {
    let remaining = arity - partial.len();
    if remaining == 0 {
        if weight == 0 {
            out.push(Term::app(sym, partial.clone()));
        }
        return;
    }
    // each later argument needs size at least 1
    let max_here = weight.saturating_sub(remaining - 1);
    for size in 1..=max_here.min(by_size.len() - 1) {
        for arg in &by_size[size] {
            partial.push(arg.clone());
            fill_args(sym, arity, weight - size, by_size, partial, out);
            partial.pop();
        }
    }
}

/// The longest derivation, in rewrite steps, from any ground term of size at
/// most `max_size`. This is the brute-force referent that certified bounds
/// are judged against.
pub fn derivational_complexity(
    trs: &Trs,
    max_size: usize,
    step_cap: u64,
) -> Result<u64, NonterminationEvidence> {
    let mut search = DerivationSearch::new(trs);
    let mut best = 0;
    for term in enumerate_ground_terms(trs.signature(), max_size) {
        best = best.max(search.longest_from(&term, step_cap)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Rule;
    use alloc::vec;

    fn f1(arg: Term) -> Term {
        Term::app("f", vec![arg])
    }

    fn collapse() -> Trs {
        Trs::new(vec![Rule::new(f1(Term::var("x")), Term::var("x")).unwrap()]).unwrap()
    }

    #[test]
    fn successors_cover_all_positions() {
        let trs = collapse();
        let t = f1(f1(Term::constant("c")));
        // both redex positions collapse to the same term
        let succs = rewrite_successors(&trs, &t);
        assert_eq!(succs, BTreeSet::from([f1(Term::constant("c"))]));
    }

    #[test]
    fn successors_of_a_constant_rule() {
        let trs =
            Trs::new(vec![Rule::new(Term::constant("a"), Term::constant("b")).unwrap()])
                .unwrap();
        assert_eq!(
            rewrite_successors(&trs, &Term::constant("a")),
            BTreeSet::from([Term::constant("b")])
        );
        assert!(rewrite_successors(&trs, &Term::constant("b")).is_empty());
    }

    #[test]
    fn longest_counts_steps() {
        let trs = collapse();
        let t = f1(f1(Term::constant("c")));
        assert_eq!(longest_derivation_steps(&trs, &t, 100), Ok(2));
        assert_eq!(longest_derivation_steps(&trs, &Term::constant("c"), 100), Ok(0));
    }

    #[test]
    fn cycle_is_reported_with_its_trace() {
        let trs =
            Trs::new(vec![Rule::new(Term::constant("a"), Term::constant("a")).unwrap()])
                .unwrap();
        let err = longest_derivation_steps(&trs, &Term::constant("a"), 100).unwrap_err();
        assert_eq!(
            err,
            NonterminationEvidence::Cycle {
                trace: vec![Term::constant("a"), Term::constant("a")]
            }
        );
    }

    #[test]
    fn growing_derivation_hits_the_cap() {
        let trs =
            Trs::new(vec![Rule::new(f1(Term::var("x")), f1(f1(Term::var("x")))).unwrap()])
                .unwrap();
        let err = longest_derivation_steps(&trs, &f1(Term::constant("c")), 4).unwrap_err();
        match err {
            NonterminationEvidence::StepCapExceeded { cap, trace } => {
                assert_eq!(cap, 4);
                assert_eq!(trace.len(), 6);
                assert_eq!(trace[0], f1(Term::constant("c")));
            }
            other => panic!("expected a cap overflow, got {other:?}"),
        }
    }

    #[test]
    fn memo_shares_work_across_starts() {
        let trs = collapse();
        let mut search = DerivationSearch::new(&trs);
        assert_eq!(search.longest_from(&f1(Term::constant("c")), 100), Ok(1));
        assert_eq!(search.longest_from(&f1(f1(Term::constant("c"))), 100), Ok(2));
    }

    #[test]
    fn enumeration_is_size_then_structural() {
        let sig: BTreeMap<String, usize> = BTreeMap::from([("c".into(), 0)]);
        assert_eq!(enumerate_ground_terms(&sig, 2), vec![Term::constant("c")]);

        let sig: BTreeMap<String, usize> =
            BTreeMap::from([("c".into(), 0), ("f".into(), 1)]);
        assert_eq!(
            enumerate_ground_terms(&sig, 2),
            vec![Term::constant("c"), f1(Term::constant("c"))]
        );

        let sig: BTreeMap<String, usize> =
            BTreeMap::from([("c".into(), 0), ("g".into(), 2)]);
        assert_eq!(
            enumerate_ground_terms(&sig, 3),
            vec![
                Term::constant("c"),
                Term::app("g", vec![Term::constant("c"), Term::constant("c")]),
            ]
        );
    }

    #[test]
    fn enumeration_invents_a_constant_when_needed() {
        let sig: BTreeMap<String, usize> = BTreeMap::from([("f".into(), 1)]);
        assert_eq!(fresh_constant_symbol(&sig), "_c");
        assert_eq!(
            enumerate_ground_terms(&sig, 2),
            vec![Term::constant("_c"), f1(Term::constant("_c"))]
        );
    }

    #[test]
    fn fresh_constant_avoids_collisions() {
        let sig: BTreeMap<String, usize> =
            BTreeMap::from([("_c".into(), 0), ("_c_".into(), 2)]);
        assert_eq!(fresh_constant_symbol(&sig), "_c__");
    }

    #[test]
    fn derivational_complexity_matches_hand_counts() {
        assert_eq!(derivational_complexity(&collapse(), 3, 1000), Ok(2));

        let empty = Trs::new(vec![]).unwrap();
        assert_eq!(derivational_complexity(&empty, 3, 1000), Ok(0));

        let ab = Trs::new(vec![Rule::new(Term::constant("a"), Term::constant("b")).unwrap()])
            .unwrap();
        assert_eq!(derivational_complexity(&ab, 1, 1000), Ok(1));
    }
}
