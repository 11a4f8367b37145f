//! Named example codes: binary Reed–Muller codes as ideals of
//! `F_2[(Z/2)^m]`, and a seeded search for a `[24, 12, 8]` ideal of `F_2 S_4`.

use crate::algebra::{AlgElem, GroupAlgebra};
use crate::code::{GCode, DEFAULT_GUARD};
use crate::error::{Error, Result};
use crate::linalg::{gf2_rank, RowBasis};
use crate::schur::schur_square;
use alloc::format;
use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub const MAX_RM_VARIABLES: usize = 6;

/// Order `r` and variable count `m` of a binary Reed–Muller code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RmSpec {
    r: usize,
    m: usize,
}

impl RmSpec {
    pub fn new(r: usize, m: usize) -> Result<Self> {
        if r > m || m > MAX_RM_VARIABLES {
            return Err(Error::InvalidArgument(format!(
                "RM({r}, {m}) needs r <= m <= {MAX_RM_VARIABLES}"
            )));
        }
        Ok(RmSpec { r, m })
    }

    pub fn r(self) -> usize {
        self.r
    }

    pub fn m(self) -> usize {
        self.m
    }

    /// `Σ_{i ≤ r} binom(m, i)`.
    pub fn dimension(self) -> usize {
        (0..=self.r).map(|i| binom(self.m, i)).sum()
    }

    /// `2^{m - r}`.
    pub fn min_distance(self) -> usize {
        1 << (self.m - self.r)
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `RM(r, m)` inside `F_2 G`, `G = (Z/2)^m` as built by
/// [`Group::elementary_abelian`](crate::group::Group::elementary_abelian).
/// Group element `i` is the evaluation point whose first coordinate is the
/// most significant bit of `i`; the basis is the evaluations of all
/// monomials of degree at most `r`.
pub fn reed_muller<'g>(alg: GroupAlgebra<'g>, spec: RmSpec) -> Result<GCode<'g>> {
    let g = alg.group();
    let n = 1usize << spec.m;
    if alg.field().p() != 2 || g.order() != n {
        return Err(Error::InvalidArgument(format!(
            "RM(_, {}) lives in F_2 (Z/2)^{}",
            spec.m, spec.m
        )));
    }
    if (0..n).any(|i| (0..n).any(|j| g.mul(i, j) != i ^ j)) {
        return Err(Error::InvalidArgument(
            "group is not (Z/2)^m in bit-vector order".into(),
        ));
    }
    let rows: Vec<Vec<u32>> = (0u32..1 << spec.m)
        .filter(|mask| mask.count_ones() as usize <= spec.r)
        .map(|mask| {
            // variable j <-> bit (m - 1 - j) of the point index
            let bits: u32 = (0..spec.m)
                .filter(|j| mask >> j & 1 == 1)
                .map(|j| 1u32 << (spec.m - 1 - j))
                .sum();
            (0..n as u32)
                .map(|pt| u32::from(pt & bits == bits))
                .collect()
        })
        .collect();
    let basis = RowBasis::span(alg.field(), n, &rows)?;
    GCode::from_basis(alg, basis)
        .map_err(|_| Error::Violation(format!("RM({}, {}) is not an ideal", spec.r, spec.m)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RmSquareVerdict {
    pub square_dim: usize,
    /// `RM(r,m) * RM(r,m) = RM(2r, m)`.
    pub square_is_rm_2r: bool,
    /// Checked when `r ≤ (m-1)/2`.
    pub self_orthogonal: Option<bool>,
    /// Checked when `r < (m-1)/2`: the square is a proper subspace of `ker ε`.
    pub strictly_inside_augmentation: Option<bool>,
}

impl RmSquareVerdict {
    pub fn holds(&self) -> bool {
        self.square_is_rm_2r
            && self.self_orthogonal.unwrap_or(true)
            && self.strictly_inside_augmentation.unwrap_or(true)
    }
}

/// Compares the Schur square of `RM(r, m)` with `RM(2r, m)`; needs `2r ≤ m`.
pub fn rm_schur_square_check(alg: GroupAlgebra<'_>, spec: RmSpec) -> Result<RmSquareVerdict> {
    if 2 * spec.r > spec.m {
        return Err(Error::InvalidArgument(format!(
            "RM square check needs 2r <= m, got r = {}, m = {}",
            spec.r, spec.m
        )));
    }
    let c = reed_muller(alg, spec)?;
    let square = schur_square(&c)?;
    let target = reed_muller(alg, RmSpec::new(2 * spec.r, spec.m)?)?;
    let self_orthogonal = (2 * spec.r < spec.m).then(|| c.is_self_orthogonal());
    let strictly_inside_augmentation = if 2 * spec.r + 1 < spec.m {
        let ker = GCode::augmentation_ideal(alg);
        Some(square.is_subcode_of(&ker)? && square.dim() < ker.dim())
    } else {
        None
    };
    Ok(RmSquareVerdict {
        square_dim: square.dim(),
        square_is_rm_2r: square == target,
        self_orthogonal,
        strictly_inside_augmentation,
    })
}

/// A successful Golay-parameter hit.
#[derive(Debug, Clone)]
pub struct GolayHit<'g> {
    /// Zero-based index of the trial that produced the generator.
    pub trial: u64,
    pub generator: AlgElem<'g>,
    pub code: GCode<'g>,
}

/// The deterministic stream of trial generators for a seed: each trial is
/// the low 24 bits of one ChaCha8 `u32`, read as a 0/1 coefficient vector.
pub struct GolayTrials {
    rng: ChaCha8Rng,
}

impl GolayTrials {
    pub fn new(seed: u64) -> Self {
        GolayTrials {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for GolayTrials {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        Some(self.rng.next_u32() & 0x00ff_ffff)
    }
}

fn check_golay_algebra(alg: GroupAlgebra<'_>) -> Result<()> {
    if alg.field().p() != 2 || alg.order() != 24 {
        return Err(Error::InvalidArgument(
            "Golay search runs in F_2 G with |G| = 24".into(),
        ));
    }
    Ok(())
}

/// Tests one trial generator: `fKG` must be a self-dual `[24, 12, 8]` code.
pub fn golay_trial<'g>(alg: GroupAlgebra<'g>, bits: u32) -> Result<Option<GCode<'g>>> {
    check_golay_algebra(alg)?;
    let g = alg.group();
    let mut rows = [0u64; 24];
    for (h, row) in rows.iter_mut().enumerate() {
        for x in (0..24).filter(|&x| bits >> x & 1 == 1) {
            *row |= 1 << g.mul(x, h);
        }
    }
    if gf2_rank(&mut rows) != 12 {
        return Ok(None);
    }
    let f = alg.elem((0..24).map(|x| bits >> x & 1).collect())?;
    let code = GCode::principal(&f);
    if code.min_distance_with_guard(DEFAULT_GUARD)? != 8 || !code.is_self_orthogonal() {
        return Ok(None);
    }
    let params = code.params(DEFAULT_GUARD)?;
    if params.product != Some(96) || code.dual()? != code {
        return Err(Error::Violation(
            "Golay candidate failed re-verification".into(),
        ));
    }
    Ok(Some(code))
}

/// Samples `budget` generators from the seeded stream and returns the first
/// whose principal ideal is a self-dual `[24, 12, 8]` code.
pub fn golay_search<'g>(
    alg: GroupAlgebra<'g>,
    budget: u64,
    seed: u64,
) -> Result<Option<GolayHit<'g>>> {
    check_golay_algebra(alg)?;
    for (trial, bits) in (0..budget).zip(GolayTrials::new(seed)) {
        if let Some(code) = golay_trial(alg, bits)? {
            let generator = alg.elem((0..24).map(|x| bits >> x & 1).collect())?;
            return Ok(Some(GolayHit {
                trial,
                generator,
                code,
            }));
        }
    }
    Ok(None)
}
