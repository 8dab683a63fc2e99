//! Fixture systems shared by the integration suites: a size-reducing unary
//! system with a linear bound and a two-letter commuting system with a
//! quadratic bound.

#![allow(dead_code)]

use matcert_core::{GuardedMatrix, LinearInterpretation, Rule, Term, Trs};
use num_bigint::BigInt;

/// f(x) -> x with f interpreted as x + 1 in dimension 1.
pub fn collapse_fixture() -> (Trs, LinearInterpretation) {
    let trs = Trs::new(vec![Rule::new(
        Term::app("f", vec![Term::var("x")]),
        Term::var("x"),
    )
    .unwrap()])
    .unwrap();
    let mut interp = LinearInterpretation::new(1).unwrap();
    interp
        .assign(
            "f",
            GuardedMatrix::new(1, 1, vec![BigInt::from(1)]).unwrap(),
            vec![GuardedMatrix::identity(1)],
        )
        .unwrap();
    (trs, interp)
}

/// a(b(x)) -> b(a(x)) with a two-dimensional triangular interpretation that
/// certifies a quadratic bound.
pub fn swap_fixture() -> (Trs, LinearInterpretation) {
    let trs = Trs::new(vec![Rule::new(
        Term::app("a", vec![Term::app("b", vec![Term::var("x")])]),
        Term::app("b", vec![Term::app("a", vec![Term::var("x")])]),
    )
    .unwrap()])
    .unwrap();
    let mut interp = LinearInterpretation::new(2).unwrap();
    interp
        .assign(
            "a",
            GuardedMatrix::zero(2, 2),
            vec![GuardedMatrix::new(
                2,
                2,
                vec![BigInt::from(1), BigInt::from(1), BigInt::from(0), BigInt::from(1)],
            )
            .unwrap()],
        )
        .unwrap();
    interp
        .assign(
            "b",
            GuardedMatrix::new(
                2,
                2,
                vec![BigInt::from(0), BigInt::from(0), BigInt::from(1), BigInt::from(0)],
            )
            .unwrap(),
            vec![GuardedMatrix::identity(2)],
        )
        .unwrap();
    (trs, interp)
}
