//! Randomized soundness checks for linear matrix interpretations: concrete
//! evaluation against symbolic forms, orientation verdicts against sampled
//! assignments, the monotonicity criterion against context embeddings, and
//! certified fixtures against the brute-force derivation search.

mod common;

use common::{collapse_fixture, swap_fixture};
use matcert_core::{
    certify_termination, check_monotone, check_rule_orientation, enumerate_ground_terms, eval,
    interpret_bound, linear_form, longest_derivation_steps, Assignment, GuardedMatrix,
    LinearInterpretation, Rule, RuleOrientation, Term,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn nonneg_mat(n: usize, hi: i64) -> impl Strategy<Value = GuardedMatrix> {
    proptest::collection::vec((0..=hi).prop_map(BigInt::from), n * n)
        .prop_map(move |entries| GuardedMatrix::new(n, n, entries).unwrap())
}

/// Raises the upper-left entry to at least 1, which makes a coefficient
/// matrix satisfy the monotonicity criterion.
fn bump_upper_left(m: GuardedMatrix) -> GuardedMatrix {
    GuardedMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        if (i, j) == (0, 0) && m[(0, 0)] < BigInt::from(1) {
            BigInt::from(1)
        } else {
            m[(i, j)].clone()
        }
    })
}

/// Interpretation of the fixed test signature f/1, g/2, c/0, d/0 with
/// nonnegative matrices of dimension `n`. With `monotone` set, every
/// coefficient gets its upper-left entry raised to at least 1.
fn interp_of_dim(n: usize, monotone: bool) -> impl Strategy<Value = LinearInterpretation> {
    (
        nonneg_mat(n, 3),
        nonneg_mat(n, 2),
        nonneg_mat(n, 3),
        nonneg_mat(n, 2),
        nonneg_mat(n, 2),
        nonneg_mat(n, 3),
        nonneg_mat(n, 3),
    )
        .prop_map(move |(fc, f1, gc, g1, g2, cc, dc)| {
            let fix = |m: GuardedMatrix| if monotone { bump_upper_left(m) } else { m };
            let mut interp = LinearInterpretation::new(n).unwrap();
            interp.assign("f", fc, vec![fix(f1)]).unwrap();
            interp.assign("g", gc, vec![fix(g1), fix(g2)]).unwrap();
            interp.assign("c", cc, Vec::new()).unwrap();
            interp.assign("d", dc, Vec::new()).unwrap();
            interp
        })
}

fn assignment_of_dim(n: usize) -> impl Strategy<Value = Assignment> {
    (nonneg_mat(n, 3), nonneg_mat(n, 3), nonneg_mat(n, 3)).prop_map(move |(x, y, z)| {
        let mut alpha = Assignment::new(n);
        alpha.bind("x", x).unwrap();
        alpha.bind("y", y).unwrap();
        alpha.bind("z", z).unwrap();
        alpha
    })
}

fn term_with_vars() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::var("x")),
        Just(Term::var("y")),
        Just(Term::constant("c")),
        Just(Term::constant("d")),
    ];
    leaf.prop_recursive(3, 10, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("f", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::app("g", vec![s, t])),
        ]
    })
}

/// Application-rooted patterns, as rule left-hand sides must be.
fn app_pattern() -> impl Strategy<Value = Term> {
    term_with_vars().prop_map(|t| match t {
        app @ Term::App { .. } => app,
        var @ Term::Var(_) => Term::app("f", vec![var]),
    })
}

/// Renames every variable to one occurring in `allowed`, grounding to `c`
/// when nothing is allowed, so the result can serve as a right-hand side.
fn retarget_vars(term: &Term, allowed: &[String]) -> Term {
    match term {
        Term::Var(v) => {
            if allowed.is_empty() {
                Term::constant("c")
            } else {
                Term::var(allowed[v.as_bytes()[0] as usize % allowed.len()].clone())
            }
        }
        Term::App { sym, args } => Term::app(
            sym.clone(),
            args.iter().map(|a| retarget_vars(a, allowed)).collect(),
        ),
    }
}

proptest! {
    #[test]
    fn evaluation_agrees_with_form_instantiation(
        (interp, alpha, term) in (1..=3usize)
            .prop_flat_map(|n| (interp_of_dim(n, false), assignment_of_dim(n), term_with_vars())),
    ) {
        let direct = eval(&interp, &alpha, &term).unwrap();
        let symbolic = linear_form(&interp, &term).unwrap().instantiate(&alpha).unwrap();
        prop_assert_eq!(direct, symbolic);
    }

    #[test]
    fn orientation_verdicts_hold_on_sampled_assignments(
        (interp, lhs, rhs_raw, a1, a2, a3) in (1..=3usize).prop_flat_map(|n| (
            interp_of_dim(n, false),
            app_pattern(),
            term_with_vars(),
            assignment_of_dim(n),
            assignment_of_dim(n),
            assignment_of_dim(n),
        )),
    ) {
        let lhs_vars: Vec<String> = lhs.variables().into_iter().map(String::from).collect();
        let rhs = retarget_vars(&rhs_raw, &lhs_vars);
        let rule = Rule::new(lhs, rhs).unwrap();
        let verdict = check_rule_orientation(&interp, &rule).unwrap();
        for alpha in [&a1, &a2, &a3] {
            let l = eval(&interp, alpha, rule.lhs()).unwrap();
            let r = eval(&interp, alpha, rule.rhs()).unwrap();
            match &verdict {
                RuleOrientation::Strict => prop_assert!(l.gt(&r).unwrap()),
                RuleOrientation::WeakOnly => prop_assert!(l.geq(&r).unwrap()),
                RuleOrientation::NotOriented { .. } => {}
            }
        }
    }

    #[test]
    fn monotone_interpretations_preserve_strictness_in_context(
        (n, interp, small, d) in (1..=3usize).prop_flat_map(|n| (
            Just(n),
            interp_of_dim(n, true),
            nonneg_mat(n, 3),
            nonneg_mat(n, 2),
        )),
    ) {
        prop_assert!(check_monotone(&interp).is_monotone());
        let bump = GuardedMatrix::from_fn(n, n, |i, j| {
            if (i, j) == (0, 0) {
                BigInt::from(1) + &d[(0, 0)]
            } else {
                d[(i, j)].clone()
            }
        });
        let big = small.add(&bump).unwrap();
        prop_assert!(big.gt(&small).unwrap());

        let contexts = [
            Term::app("f", vec![Term::var("x")]),
            Term::app("g", vec![Term::var("x"), Term::constant("c")]),
            Term::app("g", vec![Term::constant("c"), Term::var("x")]),
            Term::app("f", vec![Term::app("f", vec![Term::var("x")])]),
            Term::app("g", vec![Term::app("f", vec![Term::var("x")]), Term::constant("d")]),
        ];
        let mut alpha_small = Assignment::new(n);
        alpha_small.bind("x", small).unwrap();
        let mut alpha_big = Assignment::new(n);
        alpha_big.bind("x", big).unwrap();
        for context in &contexts {
            let lo = eval(&interp, &alpha_small, context).unwrap();
            let hi = eval(&interp, &alpha_big, context).unwrap();
            prop_assert!(hi.gt(&lo).unwrap());
        }
    }
}

#[test]
fn certified_fixtures_bound_every_derivation() {
    for (trs, interp) in [collapse_fixture(), swap_fixture()] {
        assert!(certify_termination(&interp, &trs).is_certified());
        for term in enumerate_ground_terms(trs.signature(), 6) {
            let steps = longest_derivation_steps(&trs, &term, 10_000).unwrap();
            let bound = interpret_bound(&interp, &term).unwrap();
            assert!(
                BigInt::from(steps) <= bound,
                "term {term}: {steps} steps exceeds certified bound {bound}"
            );
        }
    }
}

#[test]
fn strict_orientation_on_the_collapse_fixture() {
    let (trs, interp) = collapse_fixture();
    assert_eq!(
        check_rule_orientation(&interp, &trs.rules()[0]).unwrap(),
        RuleOrientation::Strict
    );
}
