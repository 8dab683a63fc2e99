//! Growth criteria for the maximum coefficient matrix of an interpretation,
//! combined into derivational-complexity verdicts.
//!
//! Three bounding routes: the triangular shape check (degree = dimension),
//! the spectral check (radius at most 1, degree = multiplicity of eigenvalue
//! 1 in the characteristic polynomial), and an exact product-norm harness
//! that measures how lossy replacing the coefficient set by its pointwise
//! maximum is. Only the first two certify; the harness is diagnostic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::interp::{certify_termination, LinearInterpretation, TerminationFailure, TerminationVerdict};
use crate::matrix::{GuardedMatrix, MatrixError, Scalar};
use crate::poly::char_poly;
use crate::term::Trs;

/// All matrices of an interpretation, argument coefficients separated from
/// constant parts. The coefficient set is kept nonempty (a constants-only
/// interpretation contributes a single zero matrix) so the pointwise
/// maximum always exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSet {
    dimension: usize,
    matrices: BTreeSet<GuardedMatrix>,
    constants: BTreeSet<GuardedMatrix>,
}

impl CoefficientSet {
    /// Assembles a set from explicit parts, checking shape and sign.
    pub fn from_parts(
        dimension: usize,
        matrices: impl IntoIterator<Item = GuardedMatrix>,
        constants: impl IntoIterator<Item = GuardedMatrix>,
    ) -> Result<Self, MatrixError> {
        let mut checked_matrices = BTreeSet::new();
        for m in matrices {
            checked_matrices.insert(check_member(dimension, m)?);
        }
        let mut checked_constants = BTreeSet::new();
        for m in constants {
            checked_constants.insert(check_member(dimension, m)?);
        }
        if checked_matrices.is_empty() {
            checked_matrices.insert(GuardedMatrix::zero(dimension, dimension));
        }
        Ok(CoefficientSet {
            dimension,
            matrices: checked_matrices,
            constants: checked_constants,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn matrices(&self) -> &BTreeSet<GuardedMatrix> {
        &self.matrices
    }

    pub fn constants(&self) -> &BTreeSet<GuardedMatrix> {
        &self.constants
    }

    /// The pointwise maximum of the coefficient matrices, the single matrix
    /// that dominates every product of the set entrywise.
    pub fn max_matrix(&self) -> GuardedMatrix {
        GuardedMatrix::pointwise_max(self.matrices.iter())
            .expect("the coefficient set is kept nonempty")
    }
}

fn check_member(dimension: usize, m: GuardedMatrix) -> Result<GuardedMatrix, MatrixError> {
    if !m.has_shape(dimension, dimension) {
        return Err(MatrixError::DimensionMismatch {
            op: "coefficient set",
            left: (dimension, dimension),
            right: m.shape(),
        });
    }
    if let Some((row, col)) = m.first_negative() {
        return Err(MatrixError::NegativeEntry { row, col });
    }
    Ok(m)
}

/// Collects every argument-coefficient matrix and every constant part of the
/// interpretation.
pub fn coefficient_set(interp: &LinearInterpretation) -> CoefficientSet {
    let n = interp.dimension();
    let mut matrices = BTreeSet::new();
    let mut constants = BTreeSet::new();
    for (_, assigned) in interp.symbols() {
        constants.insert(assigned.constant().clone());
        for coeff in assigned.coeffs() {
            matrices.insert(coeff.clone());
        }
    }
    if matrices.is_empty() {
        matrices.insert(GuardedMatrix::zero(n, n));
    }
    CoefficientSet { dimension: n, matrices, constants }
}

/// The per-term prefactor of every certified bound: the largest linear norm
/// among the constant parts, floored at 1.
pub fn constant_bound(cs: &CoefficientSet) -> Scalar {
    let mut bound = Scalar::one();
    for constant in &cs.constants {
        let norm = constant
            .linear_norm()
            .expect("coefficient sets only hold nonnegative matrices");
        if norm > bound {
            bound = norm;
        }
    }
    bound
}

/// Outcome of the triangular shape check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangularOutcome {
    Accepted { degree: usize },
    Rejected { row: usize, col: usize, entry: Scalar },
}

impl TriangularOutcome {
    pub fn degree(&self) -> Option<usize> {
        match self {
            TriangularOutcome::Accepted { degree } => Some(*degree),
            TriangularOutcome::Rejected { .. } => None,
        }
    }
}

impl fmt::Display for TriangularOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangularOutcome::Accepted { degree } => {
                write!(f, "upper triangular with diagonal at most 1, degree {degree}")
            }
            TriangularOutcome::Rejected { row, col, entry } => {
                write!(f, "not triangular: entry ({row}, {col}) is {entry}")
            }
        }
    }
}

/// Accepts upper-triangular matrices whose diagonal entries are at most 1;
/// the certified degree is the dimension. The first offending entry in
/// row-major order is the rejection witness.
pub fn check_triangular(m: &GuardedMatrix) -> TriangularOutcome {
    for ((row, col), entry) in m.indexed_entries() {
        let below_diagonal = row > col && !entry.is_zero();
        let diagonal_too_big = row == col && *entry > Scalar::one();
        if below_diagonal || diagonal_too_big {
            return TriangularOutcome::Rejected { row, col, entry: entry.clone() };
        }
    }
    TriangularOutcome::Accepted { degree: m.rows() }
}

/// How one strongly connected component of the support digraph behaves
/// under powering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    /// Single node without a self-loop; contributes nothing in the limit.
    NilpotentTrivial,
    /// Single node with weight-1 self-loop.
    UnitLoop,
    /// Several nodes forming one cycle with all weights 1.
    UnitCycle,
    /// Anything else; powers of its submatrix grow geometrically.
    Expanding,
}

impl ComponentClass {
    /// Whether the component's submatrix has spectral radius exactly 1.
    pub fn is_unit(self) -> bool {
        matches!(self, ComponentClass::UnitLoop | ComponentClass::UnitCycle)
    }
}

/// One strongly connected component, indices sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub indices: Vec<usize>,
    pub class: ComponentClass,
}

/// The strongly connected components of a matrix's support digraph, their
/// classification, and the condensation. Components are listed in reverse
/// topological order: every successor of a component precedes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccAnalysis {
    components: Vec<Component>,
    successors: Vec<BTreeSet<usize>>,
}

impl SccAnalysis {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Condensation edges out of component `index`.
    pub fn successors(&self, index: usize) -> &BTreeSet<usize> {
        &self.successors[index]
    }

    pub fn first_expanding(&self) -> Option<&Component> {
        self.components.iter().find(|c| c.class == ComponentClass::Expanding)
    }
}

struct TarjanState<'a> {
    adj: &'a [Vec<usize>],
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    next_index: usize,
    components: Vec<Vec<usize>>,
}

fn tarjan_visit(s: &mut TarjanState<'_>, v: usize) {
    s.index[v] = Some(s.next_index);
    s.low[v] = s.next_index;
    s.next_index += 1;
    s.stack.push(v);
    s.on_stack[v] = true;
    for i in 0..s.adj[v].len() {
        let w = s.adj[v][i];
        if s.index[w].is_none() {
            tarjan_visit(s, w);
            s.low[v] = s.low[v].min(s.low[w]);
        } else if s.on_stack[w] {
            s.low[v] = s.low[v].min(s.index[w].expect("indexed above"));
        }
    }
    if s.low[v] == s.index[v].expect("set on entry") {
        let mut component = Vec::new();
        loop {
            let w = s.stack.pop().expect("v is still on the stack");
            s.on_stack[w] = false;
            component.push(w);
            if w == v {
                break;
            }
        }
        component.sort_unstable();
        s.components.push(component);
    }
}

/// Partitions the support digraph (edge i -> j wherever the entry (i, j) is
/// positive) into strongly connected components and classifies each one.
///
/// The classification decides spectral radius at most 1 exactly: inside one
/// strongly connected component every node keeps an outgoing edge, so all
/// row sums are at least 1, and Perron-Frobenius pins the radius between the
/// smallest and largest row sum, strictly inside unless they agree. With
/// integer entries that leaves exactly the all-row-sums-1 case, a single
/// cycle of weight-1 edges.
///
/// Requires a square nonnegative matrix.
pub fn scc_analysis(m: &GuardedMatrix) -> SccAnalysis {
    assert!(m.is_square(), "scc analysis requires a square matrix");
    assert!(m.is_nonnegative(), "scc analysis requires nonnegative entries");
    let n = m.rows();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| !m[(i, j)].is_zero()).collect())
        .collect();

    let mut state = TarjanState {
        adj: &adj,
        index: alloc::vec![None; n],
        low: alloc::vec![0; n],
        on_stack: alloc::vec![false; n],
        stack: Vec::new(),
        next_index: 0,
        components: Vec::new(),
    };
    for v in 0..n {
        if state.index[v].is_none() {
            tarjan_visit(&mut state, v);
        }
    }

    let mut component_of = alloc::vec![0usize; n];
    for (ci, nodes) in state.components.iter().enumerate() {
        for &v in nodes {
            component_of[v] = ci;
        }
    }

    let components: Vec<Component> = state
        .components
        .into_iter()
        .map(|indices| {
            let class = classify(m, &indices);
            Component { indices, class }
        })
        .collect();

    let mut successors = alloc::vec![BTreeSet::new(); components.len()];
    for i in 0..n {
        for &j in &adj[i] {
            let (ci, cj) = (component_of[i], component_of[j]);
            if ci != cj {
                successors[ci].insert(cj);
            }
        }
    }

    SccAnalysis { components, successors }
}

fn classify(m: &GuardedMatrix, nodes: &[usize]) -> ComponentClass {
    if let [single] = nodes {
        let diagonal = &m[(*single, *single)];
        return if diagonal.is_zero() {
            ComponentClass::NilpotentTrivial
        } else if diagonal.is_one() {
            ComponentClass::UnitLoop
        } else {
            ComponentClass::Expanding
        };
    }
    let all_row_sums_one = nodes.iter().all(|&i| {
        let row_sum: Scalar = nodes.iter().map(|&j| m[(i, j)].clone()).sum();
        row_sum.is_one()
    });
    if all_row_sums_one {
        ComponentClass::UnitCycle
    } else {
        ComponentClass::Expanding
    }
}

/// Decides whether every eigenvalue of a nonnegative integer matrix has
/// absolute value at most 1, exactly and without numerics: true precisely
/// when no component of the support digraph is expanding.
pub fn spectral_radius_leq_one(m: &GuardedMatrix) -> Result<bool, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if let Some((row, col)) = m.first_negative() {
        return Err(MatrixError::NegativeEntry { row, col });
    }
    Ok(scc_analysis(m).first_expanding().is_none())
}

/// Outcome of the spectral criterion: spectral radius at most 1 together
/// with the multiplicity of eigenvalue 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralOutcome {
    Accepted { degree: usize, multiplicity: usize },
    /// Indices of an expanding component of the support digraph.
    Rejected { expanding: Vec<usize> },
}

impl SpectralOutcome {
    pub fn degree(&self) -> Option<usize> {
        match self {
            SpectralOutcome::Accepted { degree, .. } => Some(*degree),
            SpectralOutcome::Rejected { .. } => None,
        }
    }
}

impl fmt::Display for SpectralOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralOutcome::Accepted { degree, multiplicity } => write!(
                f,
                "spectral radius at most 1, eigenvalue-1 multiplicity {multiplicity}, \
                 degree {degree}"
            ),
            SpectralOutcome::Rejected { expanding } => {
                write!(f, "spectral radius above 1 on component {{")?;
                for (i, node) in expanding.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{node}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// The spectral criterion: accept when the spectral radius is at most 1 and
/// certify degree max(1, m) where m is the multiplicity of eigenvalue 1.
/// The floor at 1 covers nilpotent coefficient matrices, whose products
/// vanish while the bound still grows linearly through the term-size
/// prefactor.
pub fn complexity_degree_spectral(m: &GuardedMatrix) -> SpectralOutcome {
    let analysis = scc_analysis(m);
    if let Some(component) = analysis.first_expanding() {
        return SpectralOutcome::Rejected { expanding: component.indices.clone() };
    }
    let chi = char_poly(m).expect("square integer matrices have integer characteristic polynomials");
    let multiplicity = chi
        .multiplicity_of_root_one()
        .expect("characteristic polynomials are monic, never zero");
    SpectralOutcome::Accepted { degree: multiplicity.max(1), multiplicity }
}

/// Exact asymptotics of the entries of matrix powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthDegree {
    /// The maximum entry of the k-th power grows like k^d.
    Polynomial(usize),
    /// Powers vanish from the dimension onward.
    EventuallyZero,
    /// Some entry grows geometrically.
    Unbounded,
}

impl fmt::Display for GrowthDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthDegree::Polynomial(d) => write!(f, "polynomial of degree {d}"),
            GrowthDegree::EventuallyZero => write!(f, "eventually zero"),
            GrowthDegree::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// The exact growth degree of max-entry(M^k): unbounded when some component
/// expands, eventually zero when no component sustains weight, and
/// otherwise one less than the largest number of unit components on a
/// single condensation path. Diagnostic only; certificates come from the
/// triangular and spectral criteria.
pub fn exact_growth_degree(m: &GuardedMatrix) -> GrowthDegree {
    let analysis = scc_analysis(m);
    if analysis.first_expanding().is_some() {
        return GrowthDegree::Unbounded;
    }
    if !analysis.components().iter().any(|c| c.class.is_unit()) {
        return GrowthDegree::EventuallyZero;
    }
    // components come successors-first, so each best value is ready in time
    let components = analysis.components();
    let mut best_from = alloc::vec![0usize; components.len()];
    let mut overall = 0;
    for (ci, component) in components.iter().enumerate() {
        let weight = usize::from(component.class.is_unit());
        let tail = analysis
            .successors(ci)
            .iter()
            .map(|&s| {
                debug_assert!(s < ci);
                best_from[s]
            })
            .max()
            .unwrap_or(0);
        best_from[ci] = weight + tail;
        overall = overall.max(best_from[ci]);
    }
    GrowthDegree::Polynomial(overall - 1)
}

/// Exact product-norm table for a coefficient set: for each length k up to
/// the requested bound, the maximum linear norm over all k-fold products,
/// next to the norm of the k-th power of the pointwise maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    requested_lengths: usize,
    product_norms: Vec<Scalar>,
    power_norms: Vec<Scalar>,
    degree_estimate: Option<usize>,
}

impl GrowthReport {
    /// Number of lengths actually measured; smaller than requested only in
    /// a budget-truncated report.
    pub fn lengths(&self) -> usize {
        self.product_norms.len()
    }

    pub fn requested_lengths(&self) -> usize {
        self.requested_lengths
    }

    pub fn is_complete(&self) -> bool {
        self.lengths() == self.requested_lengths
    }

    /// Maximum norm over products, indexed by length minus one.
    pub fn product_norms(&self) -> &[Scalar] {
        &self.product_norms
    }

    /// Norms of powers of the pointwise maximum, same indexing.
    pub fn power_norms(&self) -> &[Scalar] {
        &self.power_norms
    }

    /// Least degree that fits the tail of the product norms within a small
    /// margin, capped at dimension minus one; `None` flags growth no
    /// polynomial of admissible degree explains. An estimate, never a
    /// certificate.
    pub fn degree_estimate(&self) -> Option<usize> {
        self.degree_estimate
    }

    /// Whether the pointwise-maximum approximation strictly overshoots the
    /// true product norms somewhere in the table.
    pub fn has_approximation_gap(&self) -> bool {
        self.product_norms
            .iter()
            .zip(&self.power_norms)
            .any(|(product, power)| product < power)
    }
}

/// Product enumeration ran over its budget; the table so far is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthError {
    BudgetExceeded { budget: usize, partial: GrowthReport },
}

impl fmt::Display for GrowthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthError::BudgetExceeded { budget, partial } => write!(
                f,
                "product enumeration exceeded its budget of {budget} after {} of {} lengths",
                partial.lengths(),
                partial.requested_lengths()
            ),
        }
    }
}

impl core::error::Error for GrowthError {}

/// Default work budget for product enumeration, counted in matrix
/// multiplications.
pub const DEFAULT_PRODUCT_BUDGET: usize = 1 << 16;

/// Number of product lengths measured for diagnostic reports.
pub const DEFAULT_REPORT_LENGTHS: usize = 8;

fn power_scalar(base: usize, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= Scalar::from(base as u64);
    }
    acc
}

/// Least d with norms(k) <= norms(k0) * (k/k0)^d * 3/2 over the tail
/// k0 = ceil(K/2) .. K, compared in exact integers; degrees above
/// dimension - 1 cannot come from products of a bounded set, so the search
/// stops there and returns `None`.
fn fit_degree(norms: &[Scalar], dimension: usize) -> Option<usize> {
    if norms.is_empty() {
        return None;
    }
    let count = norms.len();
    let k0 = count.div_ceil(2);
    let base = &norms[k0 - 1];
    'degrees: for d in 0..dimension.max(1) {
        for k in k0..=count {
            let lhs = norms[k - 1].clone() * 2 * power_scalar(k0, d);
            let rhs = base.clone() * 3 * power_scalar(k, d);
            if lhs > rhs {
                continue 'degrees;
            }
        }
        return Some(d);
    }
    None
}

/// Measures the exact maximum linear norm over all products of each length
/// up to `max_len`, by breadth-first extension with deduplication, next to
/// the same norms for powers of the pointwise maximum. The budget counts
/// matrix multiplications; exceeding it returns the truncated table as an
/// error payload.
pub fn product_growth_measure(
    cs: &CoefficientSet,
    max_len: usize,
    budget: usize,
) -> Result<GrowthReport, GrowthError> {
    assert!(max_len >= 1, "a growth report needs at least one length");
    let generators: Vec<&GuardedMatrix> = cs.matrices().iter().collect();
    let m_max = cs.max_matrix();

    let mut level: BTreeSet<GuardedMatrix> = BTreeSet::new();
    let mut power = GuardedMatrix::identity(cs.dimension());
    let mut product_norms: Vec<Scalar> = Vec::new();
    let mut power_norms: Vec<Scalar> = Vec::new();
    let mut spent = 0usize;

    for length in 1..=max_len {
        let cost = if length == 1 {
            generators.len()
        } else {
            level.len().saturating_mul(generators.len())
        };
        if spent.saturating_add(cost) > budget {
            let degree_estimate = fit_degree(&product_norms, cs.dimension());
            let partial = GrowthReport {
                requested_lengths: max_len,
                product_norms,
                power_norms,
                degree_estimate,
            };
            return Err(GrowthError::BudgetExceeded { budget, partial });
        }
        spent += cost;

        level = if length == 1 {
            cs.matrices().clone()
        } else {
            let mut next = BTreeSet::new();
            for product in &level {
                for generator in &generators {
                    next.insert(
                        product.mul(generator).expect("uniform dimensions by construction"),
                    );
                }
            }
            next
        };
        power = power.mul(&m_max).expect("uniform dimensions by construction");

        let level_norm = level
            .iter()
            .map(|m| m.linear_norm().expect("products of nonnegative matrices"))
            .max()
            .expect("levels of a nonempty set are nonempty");
        product_norms.push(level_norm);
        power_norms.push(power.linear_norm().expect("powers of a nonnegative matrix"));
    }

    let degree_estimate = fit_degree(&product_norms, cs.dimension());
    Ok(GrowthReport {
        requested_lengths: max_len,
        product_norms,
        power_norms,
        degree_estimate,
    })
}

/// Which criterion certified the final degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Triangular,
    Spectral,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Triangular => write!(f, "triangular"),
            Criterion::Spectral => write!(f, "spectral"),
        }
    }
}

/// A certified polynomial bound on derivational complexity, with both
/// criterion outcomes retained for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityCertificate {
    pub degree: usize,
    pub criterion: Criterion,
    pub triangular: TriangularOutcome,
    pub spectral: SpectralOutcome,
    pub m_max: GuardedMatrix,
    pub constant_bound: Scalar,
}

/// Neither criterion accepted the maximum matrix; the product-norm table is
/// attached for diagnosis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRejection {
    pub triangular: TriangularOutcome,
    pub spectral: SpectralOutcome,
    pub m_max: GuardedMatrix,
    pub constant_bound: Scalar,
    pub report: GrowthReport,
}

/// Verdict of the complexity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexityVerdict {
    Certified(ComplexityCertificate),
    /// The interpretation does not even certify termination.
    RejectedTermination { failures: Vec<TerminationFailure> },
    /// Termination holds but no growth criterion accepts the maximum matrix.
    RejectedGrowth(GrowthRejection),
}

impl ComplexityVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, ComplexityVerdict::Certified(_))
    }
}

/// Certifies a polynomial derivational-complexity degree: termination with
/// every rule strict first, then the triangular and spectral criteria on
/// the pointwise maximum of the coefficient set. Both outcomes are kept;
/// the certified degree is the smaller accepted one, credited to the
/// triangular criterion on ties.
pub fn certify_complexity(interp: &LinearInterpretation, trs: &Trs) -> ComplexityVerdict {
    if let TerminationVerdict::Rejected { failures } = certify_termination(interp, trs) {
        return ComplexityVerdict::RejectedTermination { failures };
    }

    let cs = coefficient_set(interp);
    let m_max = cs.max_matrix();
    let bound = constant_bound(&cs);
    let triangular = check_triangular(&m_max);
    let spectral = complexity_degree_spectral(&m_max);

    let candidates: BTreeMap<usize, Criterion> = [
        (spectral.degree(), Criterion::Spectral),
        (triangular.degree(), Criterion::Triangular),
    ]
    .into_iter()
    .filter_map(|(degree, criterion)| degree.map(|d| (d, criterion)))
    .collect();

    match candidates.into_iter().next() {
        Some((degree, criterion)) => ComplexityVerdict::Certified(ComplexityCertificate {
            degree,
            criterion,
            triangular,
            spectral,
            m_max,
            constant_bound: bound,
        }),
        None => {
            let report =
                match product_growth_measure(&cs, DEFAULT_REPORT_LENGTHS, DEFAULT_PRODUCT_BUDGET)
                {
                    Ok(report) => report,
                    Err(GrowthError::BudgetExceeded { partial, .. }) => partial,
                };
            ComplexityVerdict::RejectedGrowth(GrowthRejection {
                triangular,
                spectral,
                m_max,
                constant_bound: bound,
                report,
            })
        }
    }
}
