//! Linear matrix interpretations: symbolic evaluation of terms into linear
//! forms, monotonicity and rule-orientation checks, and the termination
//! verdict they combine into.
//!
//! A symbol of arity k is interpreted as f(x_1, …, x_k) = F_0 + F_1·x_1 +
//! … + F_k·x_k over square nonnegative integer matrices, with constants as
//! full matrices. The order compares entrywise, strictly at (0, 0).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{GuardedMatrix, MatrixError, Scalar};
use crate::term::{Rule, Term, Trs};

use num_traits::One;

/// Faulty interpretation data or a term outside the interpreted signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterpError {
    ZeroDimension,
    WrongShape { symbol: String, expected: usize, rows: usize, cols: usize },
    NegativeEntry { symbol: String, row: usize, col: usize },
    UnassignedSymbol { symbol: String },
    ArityMismatch { symbol: String, coefficients: usize, arguments: usize },
    MissingVariable { var: String },
    AssignmentShape { var: String, expected: usize, rows: usize, cols: usize },
    AssignmentNegative { var: String, row: usize, col: usize },
    Matrix(MatrixError),
}

impl fmt::Display for InterpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpError::ZeroDimension => write!(f, "interpretation dimension must be positive"),
            InterpError::WrongShape { symbol, expected, rows, cols } => write!(
                f,
                "matrix for {symbol} is {rows}x{cols}, expected {expected}x{expected}"
            ),
            InterpError::NegativeEntry { symbol, row, col } => {
                write!(f, "matrix for {symbol} has a negative entry at ({row}, {col})")
            }
            InterpError::UnassignedSymbol { symbol } => {
                write!(f, "no interpretation assigned to symbol {symbol}")
            }
            InterpError::ArityMismatch { symbol, coefficients, arguments } => write!(
                f,
                "symbol {symbol} has {coefficients} coefficient matrices but is applied to \
                 {arguments} arguments"
            ),
            InterpError::MissingVariable { var } => {
                write!(f, "assignment does not cover variable {var}")
            }
            InterpError::AssignmentShape { var, expected, rows, cols } => write!(
                f,
                "assignment for {var} is {rows}x{cols}, expected {expected}x{expected}"
            ),
            InterpError::AssignmentNegative { var, row, col } => {
                write!(f, "assignment for {var} has a negative entry at ({row}, {col})")
            }
            InterpError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for InterpError {}

impl From<MatrixError> for InterpError {
    fn from(e: MatrixError) -> Self {
        InterpError::Matrix(e)
    }
}

/// The interpretation of one symbol: the constant part and one coefficient
/// matrix per argument position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolInterpretation {
    constant: GuardedMatrix,
    coeffs: Vec<GuardedMatrix>,
}

impl SymbolInterpretation {
    pub fn constant(&self) -> &GuardedMatrix {
        &self.constant
    }

    pub fn coeffs(&self) -> &[GuardedMatrix] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }
}

/// A linear matrix interpretation of some signature, all matrices square of
/// one fixed dimension with nonnegative entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInterpretation {
    dimension: usize,
    assigns: BTreeMap<String, SymbolInterpretation>,
}

impl LinearInterpretation {
    pub fn new(dimension: usize) -> Result<Self, InterpError> {
        if dimension == 0 {
            return Err(InterpError::ZeroDimension);
        }
        Ok(LinearInterpretation { dimension, assigns: BTreeMap::new() })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Installs the interpretation of one symbol, checking shape and sign of
    /// every matrix. The number of coefficient matrices fixes the arity.
    pub fn assign(
        &mut self,
        symbol: impl Into<String>,
        constant: GuardedMatrix,
        coeffs: Vec<GuardedMatrix>,
    ) -> Result<(), InterpError> {
        let symbol = symbol.into();
        for m in core::iter::once(&constant).chain(&coeffs) {
            if !m.has_shape(self.dimension, self.dimension) {
                return Err(InterpError::WrongShape {
                    symbol,
                    expected: self.dimension,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if let Some((row, col)) = m.first_negative() {
                return Err(InterpError::NegativeEntry { symbol, row, col });
            }
        }
        self.assigns.insert(symbol, SymbolInterpretation { constant, coeffs });
        Ok(())
    }

    pub fn get(&self, symbol: &str) -> Option<&SymbolInterpretation> {
        self.assigns.get(symbol)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, &SymbolInterpretation)> {
        self.assigns.iter().map(|(k, v)| (k.as_str(), v))
    }
}

/// Maps variables to concrete square nonnegative matrices of the
/// interpretation's dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    dimension: usize,
    map: BTreeMap<String, GuardedMatrix>,
}

impl Assignment {
    pub fn new(dimension: usize) -> Self {
        Assignment { dimension, map: BTreeMap::new() }
    }

    pub fn bind(
        &mut self,
        var: impl Into<String>,
        value: GuardedMatrix,
    ) -> Result<(), InterpError> {
        let var = var.into();
        if !value.has_shape(self.dimension, self.dimension) {
            return Err(InterpError::AssignmentShape {
                var,
                expected: self.dimension,
                rows: value.rows(),
                cols: value.cols(),
            });
        }
        if let Some((row, col)) = value.first_negative() {
            return Err(InterpError::AssignmentNegative { var, row, col });
        }
        self.map.insert(var, value);
        Ok(())
    }

    pub fn get(&self, var: &str) -> Option<&GuardedMatrix> {
        self.map.get(var)
    }
}

/// A term evaluated symbolically: constant + Σ coeff(x)·α(x) for every
/// assignment α. Variables absent from the coefficient map have coefficient
/// zero; stored coefficients are always nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    constant: GuardedMatrix,
    coeffs: BTreeMap<String, GuardedMatrix>,
}

impl LinearForm {
    pub fn constant(&self) -> &GuardedMatrix {
        &self.constant
    }

    /// The coefficient of a variable; `None` means zero.
    pub fn coeff(&self, var: &str) -> Option<&GuardedMatrix> {
        self.coeffs.get(var)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&str, &GuardedMatrix)> {
        self.coeffs.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Plugs an assignment into the form.
    pub fn instantiate(&self, alpha: &Assignment) -> Result<GuardedMatrix, InterpError> {
        let mut acc = self.constant.clone();
        for (var, coeff) in &self.coeffs {
            let value = alpha
                .get(var)
                .ok_or_else(|| InterpError::MissingVariable { var: var.clone() })?;
            acc = acc.add(&coeff.mul(value)?)?;
        }
        Ok(acc)
    }
}

fn symbol_form(
    interp: &LinearInterpretation,
    sym: &str,
    args: &[Term],
) -> Result<(GuardedMatrix, Vec<LinearForm>), InterpError> {
    let assigned = interp
        .get(sym)
        .ok_or_else(|| InterpError::UnassignedSymbol { symbol: sym.into() })?;
    if assigned.arity() != args.len() {
        return Err(InterpError::ArityMismatch {
            symbol: sym.into(),
            coefficients: assigned.arity(),
            arguments: args.len(),
        });
    }
    let child_forms = args
        .iter()
        .map(|arg| linear_form(interp, arg))
        .collect::<Result<Vec<_>, _>>()?;
    let mut constant = assigned.constant().clone();
    for (coeff, child) in assigned.coeffs().iter().zip(&child_forms) {
        constant = constant.add(&coeff.mul(child.constant())?)?;
    }
    Ok((constant, child_forms))
}

/// The unique linear form a term denotes: variables become identity
/// coefficients, applications compose the children's forms through the
/// symbol's matrices.
pub fn linear_form(interp: &LinearInterpretation, term: &Term) -> Result<LinearForm, InterpError> {
    let n = interp.dimension();
    match term {
        Term::Var(x) => {
            let mut coeffs = BTreeMap::new();
            coeffs.insert(x.clone(), GuardedMatrix::identity(n));
            Ok(LinearForm { constant: GuardedMatrix::zero(n, n), coeffs })
        }
        Term::App { sym, args } => {
            let assigned = interp
                .get(sym)
                .ok_or_else(|| InterpError::UnassignedSymbol { symbol: sym.clone() })?;
            let (constant, child_forms) = symbol_form(interp, sym, args)?;
            let mut coeffs: BTreeMap<String, GuardedMatrix> = BTreeMap::new();
            for (coeff, child) in assigned.coeffs().iter().zip(&child_forms) {
                for (var, child_coeff) in &child.coeffs {
                    let piece = coeff.mul(child_coeff)?;
                    match coeffs.get_mut(var) {
                        Some(acc) => *acc = acc.add(&piece)?,
                        None => {
                            coeffs.insert(var.clone(), piece);
                        }
                    }
                }
            }
            coeffs.retain(|_, m| !m.is_zero());
            Ok(LinearForm { constant, coeffs })
        }
    }
}

/// Concrete evaluation of a term under an assignment. Always equal to
/// instantiating [`linear_form`], which the property tests pin down.
pub fn eval(
    interp: &LinearInterpretation,
    alpha: &Assignment,
    term: &Term,
) -> Result<GuardedMatrix, InterpError> {
    match term {
        Term::Var(x) => alpha
            .get(x)
            .cloned()
            .ok_or_else(|| InterpError::MissingVariable { var: x.clone() }),
        Term::App { sym, args } => {
            let assigned = interp
                .get(sym)
                .ok_or_else(|| InterpError::UnassignedSymbol { symbol: sym.clone() })?;
            if assigned.arity() != args.len() {
                return Err(InterpError::ArityMismatch {
                    symbol: sym.clone(),
                    coefficients: assigned.arity(),
                    arguments: args.len(),
                });
            }
            let mut acc = assigned.constant().clone();
            for (coeff, arg) in assigned.coeffs().iter().zip(args) {
                acc = acc.add(&coeff.mul(&eval(interp, alpha, arg)?)?)?;
            }
            Ok(acc)
        }
    }
}

/// One argument position whose coefficient matrix fails the monotonicity
/// criterion, upper-left entry below 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityFailure {
    pub symbol: String,
    pub argument: usize,
    pub upper_left: Scalar,
}

impl fmt::Display for MonotonicityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "symbol {}, argument {}: coefficient entry (0, 0) is {}, needs at least 1",
            self.symbol, self.argument, self.upper_left
        )
    }
}

/// Per-symbol outcome of the monotonicity criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    failures: Vec<MonotonicityFailure>,
}

impl MonotonicityReport {
    pub fn is_monotone(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[MonotonicityFailure] {
        &self.failures
    }
}

/// Checks that every argument-coefficient matrix has upper-left entry at
/// least 1. Strict decreases at entry (0, 0) then survive any surrounding
/// context, which is what makes rule orientation compose with rewriting.
pub fn check_monotone(interp: &LinearInterpretation) -> MonotonicityReport {
    let mut failures = Vec::new();
    for (symbol, assigned) in interp.symbols() {
        for (argument, coeff) in assigned.coeffs().iter().enumerate() {
            let upper_left = &coeff[(0, 0)];
            if *upper_left < Scalar::one() {
                failures.push(MonotonicityFailure {
                    symbol: symbol.into(),
                    argument,
                    upper_left: upper_left.clone(),
                });
            }
        }
    }
    MonotonicityReport { failures }
}

/// Which component of a linear form a comparison failed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormPart {
    Constant,
    Coefficient { var: String },
}

impl fmt::Display for FormPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormPart::Constant => write!(f, "constant part"),
            FormPart::Coefficient { var } => write!(f, "coefficient of {var}"),
        }
    }
}

/// The first entry at which a required comparison between the two sides of
/// a rule fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationWitness {
    pub part: FormPart,
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for OrientationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} entry ({}, {}): {} < {}",
            self.part, self.row, self.col, self.lhs, self.rhs
        )
    }
}

/// How a rule compares under the interpretation: strictly decreasing,
/// decreasing but not strictly at (0, 0), or incomparable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOrientation {
    Strict,
    WeakOnly,
    NotOriented { witness: OrientationWitness },
}

fn first_entry_below(lhs: &GuardedMatrix, rhs: &GuardedMatrix) -> Option<(usize, usize)> {
    lhs.indexed_entries()
        .zip(rhs.indexed_entries())
        .find(|((_, l), (_, r))| l < r)
        .map(|(((row, col), _), _)| (row, col))
}

/// Compares the linear forms of a rule's sides coefficient by coefficient.
/// Over nonnegative carriers this entrywise check implies the decrease for
/// every assignment, so `Strict` is sound; it is only a sufficient
/// condition, and certificates relying on cancellation are not oriented.
pub fn check_rule_orientation(
    interp: &LinearInterpretation,
    rule: &Rule,
) -> Result<RuleOrientation, InterpError> {
    let lhs = linear_form(interp, rule.lhs())?;
    let rhs = linear_form(interp, rule.rhs())?;
    let n = interp.dimension();
    let zero = GuardedMatrix::zero(n, n);

    if let Some((row, col)) = first_entry_below(&lhs.constant, &rhs.constant) {
        return Ok(RuleOrientation::NotOriented {
            witness: OrientationWitness {
                part: FormPart::Constant,
                row,
                col,
                lhs: lhs.constant[(row, col)].clone(),
                rhs: rhs.constant[(row, col)].clone(),
            },
        });
    }
    let vars: alloc::collections::BTreeSet<&String> =
        lhs.coeffs.keys().chain(rhs.coeffs.keys()).collect();
    for var in vars {
        let l = lhs.coeffs.get(var).unwrap_or(&zero);
        let r = rhs.coeffs.get(var).unwrap_or(&zero);
        if let Some((row, col)) = first_entry_below(l, r) {
            return Ok(RuleOrientation::NotOriented {
                witness: OrientationWitness {
                    part: FormPart::Coefficient { var: var.clone() },
                    row,
                    col,
                    lhs: l[(row, col)].clone(),
                    rhs: r[(row, col)].clone(),
                },
            });
        }
    }
    if lhs.constant[(0, 0)] > rhs.constant[(0, 0)] {
        Ok(RuleOrientation::Strict)
    } else {
        Ok(RuleOrientation::WeakOnly)
    }
}

/// Why a termination certificate was turned down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TerminationFailure {
    UnassignedSymbol { symbol: String, arity: usize },
    ArityMismatch { symbol: String, coefficients: usize, arity: usize },
    NotMonotone(MonotonicityFailure),
    RuleNotStrict { rule: Rule, orientation: RuleOrientation },
}

impl fmt::Display for TerminationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TerminationFailure::UnassignedSymbol { symbol, arity } => {
                write!(f, "symbol {symbol} (arity {arity}) has no interpretation")
            }
            TerminationFailure::ArityMismatch { symbol, coefficients, arity } => write!(
                f,
                "symbol {symbol} has arity {arity} but {coefficients} coefficient matrices"
            ),
            TerminationFailure::NotMonotone(failure) => {
                write!(f, "not monotone: {failure}")
            }
            TerminationFailure::RuleNotStrict { rule, orientation } => match orientation {
                RuleOrientation::Strict => write!(f, "rule {rule} is strict"),
                RuleOrientation::WeakOnly => write!(
                    f,
                    "rule {rule} only decreases weakly, constant entry (0, 0) does not drop"
                ),
                RuleOrientation::NotOriented { witness } => {
                    write!(f, "rule {rule} is not oriented: {witness}")
                }
            },
        }
    }
}

/// Verdict of the termination check: every rule strictly decreasing under a
/// monotone interpretation, or the collected reasons it is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TerminationVerdict {
    Certified,
    Rejected { failures: Vec<TerminationFailure> },
}

impl TerminationVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, TerminationVerdict::Certified)
    }
}

/// Checks that the interpretation covers the system's signature, is
/// monotone, and orients every rule strictly. Any shortfall rejects the
/// certificate with all collected witnesses; rejection is a value, not an
/// error.
pub fn certify_termination(interp: &LinearInterpretation, trs: &Trs) -> TerminationVerdict {
    let mut failures = Vec::new();
    for (symbol, &arity) in trs.signature() {
        match interp.get(symbol) {
            None => failures.push(TerminationFailure::UnassignedSymbol {
                symbol: symbol.clone(),
                arity,
            }),
            Some(assigned) if assigned.arity() != arity => {
                failures.push(TerminationFailure::ArityMismatch {
                    symbol: symbol.clone(),
                    coefficients: assigned.arity(),
                    arity,
                });
            }
            Some(_) => {}
        }
    }
    if !failures.is_empty() {
        return TerminationVerdict::Rejected { failures };
    }

    for failure in check_monotone(interp).failures() {
        failures.push(TerminationFailure::NotMonotone(failure.clone()));
    }
    for rule in trs.rules() {
        let orientation = check_rule_orientation(interp, rule)
            .expect("signature coverage was checked above");
        if orientation != RuleOrientation::Strict {
            failures.push(TerminationFailure::RuleNotStrict { rule: rule.clone(), orientation });
        }
    }
    if failures.is_empty() {
        TerminationVerdict::Certified
    } else {
        TerminationVerdict::Rejected { failures }
    }
}

fn ground_value(interp: &LinearInterpretation, term: &Term) -> Result<GuardedMatrix, InterpError> {
    let n = interp.dimension();
    match term {
        Term::Var(_) => Ok(GuardedMatrix::zero(n, n)),
        Term::App { sym, args } => match interp.get(sym) {
            None if args.is_empty() => Ok(GuardedMatrix::zero(n, n)),
            None => Err(InterpError::UnassignedSymbol { symbol: sym.clone() }),
            Some(assigned) => {
                if assigned.arity() != args.len() {
                    return Err(InterpError::ArityMismatch {
                        symbol: sym.clone(),
                        coefficients: assigned.arity(),
                        arguments: args.len(),
                    });
                }
                let mut acc = assigned.constant().clone();
                for (coeff, arg) in assigned.coeffs().iter().zip(args) {
                    acc = acc.add(&coeff.mul(&ground_value(interp, arg)?)?)?;
                }
                Ok(acc)
            }
        },
    }
}

/// The derivation-length bound a certified interpretation places on a term:
/// the (0, 0) entry of its value, the position where every rewrite step
/// strictly decreases. Variables and unassigned constants (the invented
/// grounding constant in particular) evaluate to the zero matrix.
pub fn interpret_bound(interp: &LinearInterpretation, term: &Term) -> Result<Scalar, InterpError> {
    let value = ground_value(interp, term)?;
    Ok(value[(0, 0)].clone())
}
