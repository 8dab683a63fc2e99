//! Randomized checks for the rewriting engine: the successor relation
//! against an independent position-based oracle, pattern matching as a
//! one-sided inverse of substitution, the recursion law of the longest
//! derivation, and monotonicity of derivational complexity in term size.

use std::collections::BTreeSet;

use matcert_core::{
    derivational_complexity, enumerate_ground_terms, longest_derivation_steps, match_term,
    rewrite_successors, Rule, Substitution, Term, Trs,
};
use proptest::prelude::*;

fn sample_systems() -> Vec<Trs> {
    let collapse = Trs::new(vec![Rule::new(
        Term::app("f", vec![Term::var("x")]),
        Term::var("x"),
    )
    .unwrap()])
    .unwrap();

    let swap = Trs::new(vec![Rule::new(
        Term::app("a", vec![Term::app("b", vec![Term::var("x")])]),
        Term::app("b", vec![Term::app("a", vec![Term::var("x")])]),
    )
    .unwrap()])
    .unwrap();

    let funnel = Trs::new(vec![
        Rule::new(Term::app("f", vec![Term::var("x")]), Term::var("x")).unwrap(),
        Rule::new(
            Term::app("g", vec![Term::var("x"), Term::var("y")]),
            Term::app("f", vec![Term::var("x")]),
        )
        .unwrap(),
    ])
    .unwrap();

    let squash = Trs::new(vec![Rule::new(
        Term::app("f", vec![Term::app("f", vec![Term::var("x")])]),
        Term::app("f", vec![Term::var("x")]),
    )
    .unwrap()])
    .unwrap();

    let ground_sink = Trs::new(vec![Rule::new(
        Term::app("h", vec![Term::var("x")]),
        Term::constant("c"),
    )
    .unwrap()])
    .unwrap();

    vec![collapse, swap, funnel, squash, ground_sink]
}

fn system_and_term() -> impl Strategy<Value = (usize, Term)> {
    let count = sample_systems().len();
    (0..count).prop_flat_map(|sys| {
        let terms = enumerate_ground_terms(sample_systems()[sys].signature(), 6);
        let len = terms.len();
        (Just(sys), 0..len).prop_map(move |(sys, idx)| (sys, terms[idx].clone()))
    })
}

/// All positions of a term, root first, as index paths.
fn positions(term: &Term) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    if let Term::App { args, .. } = term {
        for (i, arg) in args.iter().enumerate() {
            for mut tail in positions(arg) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
    }
    out
}

fn subterm_at<'a>(term: &'a Term, pos: &[usize]) -> &'a Term {
    match pos.split_first() {
        None => term,
        Some((&head, rest)) => match term {
            Term::App { args, .. } => subterm_at(&args[head], rest),
            Term::Var(_) => panic!("position descends into a variable"),
        },
    }
}

fn replace_at(term: &Term, pos: &[usize], replacement: Term) -> Term {
    match pos.split_first() {
        None => replacement,
        Some((&head, rest)) => match term {
            Term::App { sym, args } => {
                let mut new_args = args.clone();
                new_args[head] = replace_at(&args[head], rest, replacement);
                Term::app(sym.clone(), new_args)
            }
            Term::Var(_) => panic!("position descends into a variable"),
        },
    }
}

/// Successor oracle by explicit position enumeration: for every position and
/// every rule, match the left-hand side against the subterm there and splice
/// in the instantiated right-hand side.
fn oracle_successors(trs: &Trs, term: &Term) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    for pos in positions(term) {
        let sub = subterm_at(term, &pos);
        for rule in trs.rules() {
            if let Some(binding) = match_term(rule.lhs(), sub) {
                out.insert(replace_at(term, &pos, binding.apply(rule.rhs())));
            }
        }
    }
    out
}

fn pattern() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(Term::var),
        Just(Term::constant("c")),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("f", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::app("g", vec![s, t])),
        ]
    })
}

fn ground_term_small() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::constant("c")), Just(Term::constant("d"))];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("f", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::app("g", vec![s, t])),
        ]
    })
}

proptest! {
    #[test]
    fn successors_match_the_position_oracle((sys, term) in system_and_term()) {
        let trs = &sample_systems()[sys];
        prop_assert_eq!(rewrite_successors(trs, &term), oracle_successors(trs, &term));
    }

    #[test]
    fn matching_inverts_substitution(
        pat in pattern(),
        gx in ground_term_small(),
        gy in ground_term_small(),
        gz in ground_term_small(),
    ) {
        let mut binding = Substitution::new();
        binding.bind("x", gx);
        binding.bind("y", gy);
        binding.bind("z", gz);
        let subject = binding.apply(&pat);
        let recovered = match_term(&pat, &subject).expect("instance must match its pattern");
        let vars = pat.variables();
        prop_assert_eq!(recovered.len(), vars.len());
        for (var, term) in recovered.iter() {
            prop_assert!(vars.contains(var));
            prop_assert_eq!(Some(term), binding.get(var));
        }
    }

    #[test]
    fn longest_derivation_satisfies_the_recursion((sys, term) in system_and_term()) {
        let trs = &sample_systems()[sys];
        let best = longest_derivation_steps(trs, &term, 1_000).unwrap();
        let recursive = rewrite_successors(trs, &term)
            .iter()
            .map(|s| longest_derivation_steps(trs, s, 1_000).unwrap())
            .max()
            .map_or(0, |v| v + 1);
        prop_assert_eq!(best, recursive);
    }
}

#[test]
fn derivational_complexity_is_monotone_in_size() {
    for trs in sample_systems() {
        let mut previous = 0;
        for size in 1..=6 {
            let steps = derivational_complexity(&trs, size, 10_000).unwrap();
            assert!(
                steps >= previous,
                "complexity dropped from {previous} to {steps} at size {size}"
            );
            previous = steps;
        }
    }
}

#[test]
fn positions_cover_the_term_exactly() {
    let term = Term::app(
        "g",
        vec![Term::app("f", vec![Term::constant("c")]), Term::constant("d")],
    );
    let all = positions(&term);
    assert_eq!(all.len(), term.size());
    assert_eq!(subterm_at(&term, &[0, 0]), &Term::constant("c"));
    assert_eq!(
        replace_at(&term, &[1], Term::constant("c")),
        Term::app(
            "g",
            vec![Term::app("f", vec![Term::constant("c")]), Term::constant("c")],
        )
    );
}
