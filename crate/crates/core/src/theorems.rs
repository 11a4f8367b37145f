//! Witness extraction and instance checks for the uncertainty bound and the
//! Schur-square results.
//!
//! Every checker computes the quantities involved and reports which
//! statements applied and whether they held. A statement that applies and
//! fails is a [`Error::Violation`] where the result is a structural
//! guarantee, and a `false` field where callers aggregate verdicts.

use crate::algebra::{AlgElem, GroupAlgebra};
use crate::code::GCode;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::linalg::Matrix;
use crate::schur::schur_square;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Greedy right `S`-rank sequence: walk `order` and keep `g` whenever `Sg`
/// is not covered by the translates kept so far. Returns the sequence; its
/// length `t` satisfies `t ≥ ⌈|G|/|S|⌉` and the kept translates cover `G`.
pub fn s_rank_greedy(group: &Group, s: &[usize], order: &[usize]) -> Result<Vec<usize>> {
    let n = group.order();
    if s.is_empty() {
        return Err(Error::InvalidArgument("S must be nonempty".into()));
    }
    if let Some(&bad) = s.iter().find(|&&x| x >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            bound: n,
        });
    }
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&g| g >= n || core::mem::replace(&mut seen[g], true))
    {
        return Err(Error::InvalidArgument(
            "visit order must be a permutation of G".into(),
        ));
    }
    let mut covered = vec![false; n];
    let mut sequence = Vec::new();
    for &g in order {
        if s.iter().any(|&x| !covered[group.mul(x, g)]) {
            for &x in s {
                covered[group.mul(x, g)] = true;
            }
            sequence.push(g);
        }
    }
    debug_assert!(covered.iter().all(|&c| c));
    Ok(sequence)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UncertaintyReport {
    pub weight: usize,
    /// `rank T_f = dim fKG`.
    pub rank: usize,
    /// Length of the greedy `supp(f)`-rank sequence for the given order.
    pub greedy_t: usize,
}

/// Checks `rank T_f ≥ t` for the greedy sequence over `order` and
/// `wt(f) · rank T_f ≥ |G|`.
pub fn uncertainty_check_with_order(f: &AlgElem<'_>, order: &[usize]) -> Result<UncertaintyReport> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("f must be nonzero".into()));
    }
    let group = f.algebra().group();
    let weight = f.weight();
    let rank = f.translates_matrix().rank();
    let greedy_t = s_rank_greedy(group, &f.support(), order)?.len();
    if weight * greedy_t < group.order() {
        return Err(Error::Violation(format!(
            "greedy S-rank {greedy_t} below |G|/|S| for |S| = {weight}"
        )));
    }
    if rank < greedy_t {
        return Err(Error::Violation(format!(
            "rank T_f = {rank} < S-rank {greedy_t} for {f:?}"
        )));
    }
    if weight * rank < group.order() {
        return Err(Error::Violation(format!(
            "wt(f)·rank(T_f) = {weight}·{rank} < {} for {f:?}",
            group.order()
        )));
    }
    Ok(UncertaintyReport {
        weight,
        rank,
        greedy_t,
    })
}

/// [`uncertainty_check_with_order`] with the natural element order.
pub fn uncertainty_check(f: &AlgElem<'_>) -> Result<UncertaintyReport> {
    let order: Vec<usize> = (0..f.algebra().order()).collect();
    uncertainty_check_with_order(f, &order)
}

/// Certificate that `d(C)·dim C = |G|`: `C = cKG` with `c ∈ KH`,
/// `supp(c) = H`, `|H| = d(C)` and `dim cKH = 1`.
#[derive(Debug, Clone)]
pub struct EqualityWitness<'g> {
    pub subgroup: Subgroup<'g>,
    pub generator: AlgElem<'g>,
    /// An idempotent `e` with `C = eKG`; present iff `p ∤ d(C)`.
    pub idempotent: Option<AlgElem<'g>>,
}

/// `dim cKH` via the `|H| × |H|` matrix of `x ↦ c x` restricted to `KH`.
fn restricted_rank(c: &AlgElem<'_>, h: &Subgroup<'_>) -> usize {
    let alg = c.algebra();
    let members = h.members();
    let mut data = Vec::with_capacity(members.len() * members.len());
    for &x in members {
        let moved = c.right_translate(x);
        data.extend(members.iter().map(|&y| moved.coeff(y)));
    }
    Matrix::new(alg.field(), members.len(), members.len(), data)
        .expect("square")
        .rank()
}

/// Returns a witness when `d(C)·dim C = |G|` and `None` when the product is
/// larger. Follows the constructive argument: a minimum-weight codeword,
/// translated so that its support contains the identity, is supported on a
/// subgroup `H` and generates `C`.
pub fn equality_analysis<'g>(c: &GCode<'g>, guard: u64) -> Result<Option<EqualityWitness<'g>>> {
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    let alg = c.algebra();
    let g = alg.group();
    let n = g.order();
    let (d, word) = c.min_weight_codeword(guard)?;
    let k = c.dim();
    if d * k < n {
        return Err(Error::Violation(format!("d·k = {d}·{k} < |G| = {n}")));
    }
    if d * k > n {
        return Ok(None);
    }
    let word = word.right_translate(g.inv(word.support()[0]));
    let h = g
        .subgroup(&word.support())
        .map_err(|_| Error::Violation("equality case: support is not a subgroup".into()))?;
    if &GCode::principal(&word) != c {
        return Err(Error::Violation("equality case: C ≠ cKG".into()));
    }
    if restricted_rank(&word, &h) != 1 {
        return Err(Error::Violation("equality case: dim cKH ≠ 1".into()));
    }
    let p = alg.field().p() as usize;
    if g.is_p_group(p) && &GCode::trivial_induced(alg, &h)? != c {
        return Err(Error::Violation(
            "p-group equality case is not K_H^G".into(),
        ));
    }
    let idempotent = idempotent_generator(&h, &word)?;
    Ok(Some(EqualityWitness {
        subgroup: h,
        generator: word,
        idempotent,
    }))
}

/// For `c ∈ KH` with `dim cKH = 1`: `c·c = μ c`, and when `p ∤ |H|` the
/// element `e = μ^{-1} c` is an idempotent with `eKG = cKG`. Returns `None`
/// when `p` divides `|H|`.
pub fn idempotent_generator<'g>(h: &Subgroup<'_>, c: &AlgElem<'g>) -> Result<Option<AlgElem<'g>>> {
    let f = c.algebra().field();
    if c.is_zero() {
        return Err(Error::InvalidArgument("generator must be nonzero".into()));
    }
    if c.support().iter().any(|&x| !h.contains(x)) {
        return Err(Error::InvalidArgument(
            "generator is not supported on H".into(),
        ));
    }
    if h.order() % f.p() as usize == 0 {
        return Ok(None);
    }
    let square = c.convolve(c)?;
    let i = c.support()[0];
    let mu = f.mul(square.coeff(i), f.inv(c.coeff(i))?);
    if mu == 0 || square != c.scale(mu) {
        return Err(Error::Violation(
            "c·c is not a nonzero multiple of c".into(),
        ));
    }
    let e = c.scale(f.inv(mu)?);
    if e.convolve(&e)? != e {
        return Err(Error::Violation("μ^{-1}c is not idempotent".into()));
    }
    if GCode::principal(&e) != GCode::principal(c) {
        return Err(Error::Violation("eKG ≠ cKG".into()));
    }
    Ok(Some(e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMethod {
    /// `p ∤ |G|`: `P_0 = K·Σg`.
    Semisimple,
    /// `G` a `p`-group: `P_0 = KG`.
    PGroup,
    /// `G` has a normal `p`-complement `H`: `P_0 = K_H^G`.
    PNilpotent,
}

#[derive(Debug, Clone)]
pub struct ProjectiveCover<'g> {
    pub code: GCode<'g>,
    pub method: CoverMethod,
    /// The subgroup `H` with `P_0 = K_H^G`.
    pub subgroup: Subgroup<'g>,
}

/// Projective cover of the trivial module in the three cases where it is
/// an induced trivial code. Anything else is [`Error::Unsupported`].
pub fn projective_cover_trivial<'g>(alg: GroupAlgebra<'g>) -> Result<ProjectiveCover<'g>> {
    let g = alg.group();
    let p = alg.field().p() as usize;
    let (method, subgroup) = if g.order() % p != 0 {
        (CoverMethod::Semisimple, g.whole())
    } else if g.is_p_group(p) {
        (CoverMethod::PGroup, g.identity_subgroup())
    } else if let Some(h) = g.normal_p_complement(p) {
        (CoverMethod::PNilpotent, h)
    } else {
        return Err(Error::Unsupported(format!(
            "projective cover of the trivial module for {} at p = {p}",
            g.name()
        )));
    };
    let code = GCode::trivial_induced(alg, &subgroup)?;
    if code
        .basis_elems()
        .iter()
        .all(|b| b.augmentation().is_zero())
    {
        return Err(Error::Violation("ε vanishes on P_0".into()));
    }
    Ok(ProjectiveCover {
        code,
        method,
        subgroup,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurClause {
    /// Not self-orthogonal ⇒ `dim C*C ≥ |G|_p`.
    ProjectiveBound,
    /// Not self-orthogonal over a `p`-group ⇒ `C*C = KG`.
    FullSquare,
    /// Self-orthogonal ⇒ `dim C*C < |G|`.
    DeficientSquare,
    /// `p`-group and `dim C < (√(8|G|+1) − 1)/2` ⇒ self-orthogonal.
    SmallDimension,
    /// Self-orthogonal ⇔ `C*C ⊆ ker ε`.
    AugmentationCriterion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurSquareVerdict {
    pub self_orthogonal: bool,
    pub square_dim: usize,
    /// Clauses whose hypotheses applied, with whether the conclusion held.
    pub clauses: Vec<(SchurClause, bool)>,
}

impl SchurSquareVerdict {
    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|&(_, ok)| ok)
    }
}

/// Checks the Schur-square dimension statements that apply to `C`.
pub fn schur_square_theorem_check(c: &GCode<'_>) -> Result<SchurSquareVerdict> {
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    let alg = c.algebra();
    let g = alg.group();
    let n = g.order();
    let p = alg.field().p() as usize;
    let square = schur_square(c)?;
    let so = c.is_self_orthogonal();
    let p_group = g.is_p_group(p);
    let mut clauses = Vec::new();

    let in_kernel = square.is_subcode_of(&GCode::augmentation_ideal(alg))?;
    clauses.push((SchurClause::AugmentationCriterion, in_kernel == so));
    if !so {
        clauses.push((SchurClause::ProjectiveBound, square.dim() >= g.p_part(p)));
        if p_group {
            clauses.push((SchurClause::FullSquare, square.dim() == n));
        }
    } else {
        clauses.push((SchurClause::DeficientSquare, square.dim() < n));
    }
    let k = c.dim();
    if p_group && (2 * k + 1) * (2 * k + 1) < 8 * n + 1 {
        clauses.push((SchurClause::SmallDimension, so));
    }
    Ok(SchurSquareVerdict {
        self_orthogonal: so,
        square_dim: square.dim(),
        clauses,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolvVerdict {
    /// `C ⊄ C^⊥`, the hypothesis of the statement.
    pub applies: bool,
    pub contained_in_cover: bool,
    pub square_is_cover: bool,
}

impl SolvVerdict {
    /// `C*C = P_0 ⇔ C ≤ P_0` whenever the hypothesis applies.
    pub fn holds(&self) -> bool {
        !self.applies || self.contained_in_cover == self.square_is_cover
    }
}

/// Over `F_2` with `P_0 = K_H^G` computable: for non-self-orthogonal `C`,
/// `C*C = P_0` iff `C ≤ P_0`.
pub fn solv_check(c: &GCode<'_>) -> Result<SolvVerdict> {
    let alg = c.algebra();
    if alg.field().p() != 2 {
        return Err(Error::Unsupported(
            "the P_0 criterion is stated over F_2".into(),
        ));
    }
    let cover = projective_cover_trivial(alg)?;
    let square = schur_square(c)?;
    Ok(SolvVerdict {
        applies: !c.is_self_orthogonal(),
        contained_in_cover: c.is_subcode_of(&cover.code)?,
        square_is_cover: square == cover.code,
    })
}
