//! G-codes: right ideals of `F_p G` with their Hamming parameters.

use crate::algebra::{AlgElem, GroupAlgebra};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{dot, pack_bits, Matrix, RowBasis};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default cap on `p^k` for exhaustive minimum-distance enumeration.
pub const DEFAULT_GUARD: u64 = 1 << 26;

/// A right ideal of `F_p G`, stored as its canonical RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct GCode<'g> {
    alg: GroupAlgebra<'g>,
    basis: RowBasis,
}

impl fmt::Debug for GCode<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GCode {{ {:?}, k = {}, basis = {:?} }}",
            self.alg,
            self.dim(),
            self.basis.matrix().data()
        )
    }
}

/// Whether the row space of `basis` is closed under right translation by
/// the group. Closure under a generating set is enough.
pub fn is_ideal(alg: GroupAlgebra<'_>, basis: &RowBasis) -> Result<bool> {
    if basis.cols() != alg.order() {
        return Err(Error::DimensionMismatch {
            expected: alg.order(),
            found: basis.cols(),
        });
    }
    if basis.field() != alg.field() {
        return Err(Error::ModulusMismatch {
            left: alg.field().p(),
            right: basis.field().p(),
        });
    }
    let g = alg.group();
    let mut moved = vec![0u32; g.order()];
    for row in basis.rows() {
        for &s in g.generators() {
            for (x, &c) in row.iter().enumerate() {
                moved[g.mul(x, s)] = c;
            }
            if !basis.contains(&moved)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Parameters of a code together with the product and sum bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamReport {
    pub length: usize,
    pub dimension: usize,
    /// Absent for the zero code.
    pub min_distance: Option<usize>,
    pub product: Option<usize>,
    /// `d·k ≥ n` (vacuously true for the zero code).
    pub bound_ok: bool,
    /// `2√n ≤ d + k ≤ n + 1`.
    pub sum_chain_ok: bool,
    /// `d·k = n`.
    pub equality: bool,
}

impl<'g> GCode<'g> {
    /// Wraps `basis` after checking it spans a right ideal.
    pub fn from_basis(alg: GroupAlgebra<'g>, basis: RowBasis) -> Result<Self> {
        if !is_ideal(alg, &basis)? {
            return Err(Error::NotAnIdeal);
        }
        Ok(GCode { alg, basis })
    }

    pub fn zero(alg: GroupAlgebra<'g>) -> Self {
        GCode {
            alg,
            basis: RowBasis::zero(alg.field(), alg.order()),
        }
    }

    pub fn full(alg: GroupAlgebra<'g>) -> Self {
        GCode {
            alg,
            basis: RowBasis::full(alg.field(), alg.order()),
        }
    }

    /// The right ideal generated by `gens`: the span of all `f·g`.
    pub fn ideal_from_generators(alg: GroupAlgebra<'g>, gens: &[AlgElem<'g>]) -> Result<Self> {
        let n = alg.order();
        let mut data = Vec::with_capacity(gens.len() * n * n);
        for f in gens {
            if f.algebra() != alg {
                return Err(Error::AlgebraMismatch);
            }
            for g in 0..n {
                data.extend_from_slice(f.right_translate(g).coeffs());
            }
        }
        let m = Matrix::new(alg.field(), gens.len() * n, n, data)?;
        Ok(GCode {
            alg,
            basis: m.rref(),
        })
    }

    /// `fKG`.
    pub fn principal(f: &AlgElem<'g>) -> Self {
        GCode {
            alg: f.algebra(),
            basis: f.translates_matrix().rref(),
        }
    }

    /// `K_H^G`: the span of the right-coset sums `Σ_{h ∈ H} h g`.
    pub fn trivial_induced(alg: GroupAlgebra<'g>, h: &Subgroup<'_>) -> Result<Self> {
        if !core::ptr::eq(h.parent(), alg.group()) {
            return Err(Error::AlgebraMismatch);
        }
        let g = alg.group();
        let rows: Vec<Vec<u32>> = g
            .right_cosets(h)
            .into_iter()
            .map(|block| alg.indicator(block).into_coeffs())
            .collect();
        Ok(GCode {
            alg,
            basis: RowBasis::span(alg.field(), alg.order(), &rows)?,
        })
    }

    /// `ker ε`, the augmentation ideal.
    pub fn augmentation_ideal(alg: GroupAlgebra<'g>) -> Self {
        GCode {
            alg,
            basis: Matrix::from_rows(alg.field(), alg.order(), &[alg.all_ones().coeffs()])
                .expect("one row")
                .kernel(),
        }
    }

    pub fn algebra(&self) -> GroupAlgebra<'g> {
        self.alg
    }

    pub fn basis(&self) -> &RowBasis {
        &self.basis
    }

    pub fn length(&self) -> usize {
        self.alg.order()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_elems(&self) -> Vec<AlgElem<'g>> {
        self.basis
            .rows()
            .map(|r| self.alg.elem(r.to_vec()).expect("width"))
            .collect()
    }

    pub fn contains(&self, f: &AlgElem<'_>) -> Result<bool> {
        self.basis.contains(f.coeffs())
    }

    pub fn is_subcode_of(&self, other: &GCode<'_>) -> Result<bool> {
        self.basis.is_subspace_of(&other.basis)
    }

    pub fn is_ideal(&self) -> Result<bool> {
        is_ideal(self.alg, &self.basis)
    }

    /// `C^⊥`, which is again a right ideal.
    pub fn dual(&self) -> Result<Self> {
        let basis = self.basis.orthogonal();
        if !is_ideal(self.alg, &basis)? {
            return Err(Error::Violation("dual of an ideal is not an ideal".into()));
        }
        Ok(GCode {
            alg: self.alg,
            basis,
        })
    }

    /// `C ⊆ C^⊥`, checked on basis pairs.
    pub fn is_self_orthogonal(&self) -> bool {
        let f = self.alg.field();
        let k = self.dim();
        (0..k).all(|i| (i..k).all(|j| dot(f, self.basis.row(i), self.basis.row(j)) == 0))
    }

    fn check_guard(&self, guard: u64) -> Result<()> {
        let size = (self.alg.field().p() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX);
        if size > guard as u128 {
            return Err(Error::GuardExceeded { size, guard });
        }
        Ok(())
    }

    /// A nonzero codeword of minimum weight, found by enumerating every
    /// message vector.
    pub fn min_weight_codeword(&self, guard: u64) -> Result<(usize, AlgElem<'g>)> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        self.check_guard(guard)?;
        let coeffs = if self.alg.field().p() == 2 && self.length() <= 64 {
            self.min_weight_binary()
        } else {
            self.min_weight_general()
        };
        let c = self.alg.elem(coeffs)?;
        Ok((c.weight(), c))
    }

    /// `d(C)` by exhaustive enumeration with the default guard.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_guard(DEFAULT_GUARD)
    }

    pub fn min_distance_with_guard(&self, guard: u64) -> Result<usize> {
        Ok(self.min_weight_codeword(guard)?.0)
    }

    // Gray-code walk over F_2^k with bit-packed rows.
    fn min_weight_binary(&self) -> Vec<u32> {
        let rows: Vec<u64> = self.basis.rows().map(pack_bits).collect();
        let mut word = 0u64;
        let mut best = (u32::MAX, 0u64);
        for i in 1u64..(1u64 << rows.len()) {
            word ^= rows[i.trailing_zeros() as usize];
            let w = word.count_ones();
            if w < best.0 {
                best = (w, word);
                if w == 1 {
                    break;
                }
            }
        }
        (0..self.length())
            .map(|i| ((best.1 >> i) & 1) as u32)
            .collect()
    }

    // Odometer over F_p^k in lexicographic order; each step adds one basis
    // row per carried digit, since a digit wrapping from p-1 to 0 adds the
    // row a p-th time.
    fn min_weight_general(&self) -> Vec<u32> {
        let f = self.alg.field();
        let p = f.p();
        let k = self.dim();
        let n = self.length();
        let mut digits = vec![0u32; k];
        let mut word = vec![0u32; n];
        let mut best_weight = usize::MAX;
        let mut best = Vec::new();
        loop {
            let mut j = 0;
            loop {
                if j == k {
                    return best;
                }
                for (x, &b) in word.iter_mut().zip(self.basis.row(j)) {
                    *x = f.add(*x, b);
                }
                digits[j] = (digits[j] + 1) % p;
                if digits[j] != 0 {
                    break;
                }
                j += 1;
            }
            let w = word.iter().filter(|&&x| x != 0).count();
            if w != 0 && w < best_weight {
                best_weight = w;
                best = word.clone();
            }
        }
    }

    /// `[n, k, d]` with the product bound `d·k ≥ n` and the chain
    /// `2√n ≤ d + k ≤ n + 1`. Either bound failing is reported as a
    /// [`Error::Violation`].
    pub fn params(&self, guard: u64) -> Result<ParamReport> {
        let n = self.length();
        let k = self.dim();
        if k == 0 {
            return Ok(ParamReport {
                length: n,
                dimension: 0,
                min_distance: None,
                product: None,
                bound_ok: true,
                sum_chain_ok: true,
                equality: false,
            });
        }
        let d = self.min_distance_with_guard(guard)?;
        let product = d * k;
        let s = d + k;
        let report = ParamReport {
            length: n,
            dimension: k,
            min_distance: Some(d),
            product: Some(product),
            bound_ok: product >= n,
            sum_chain_ok: s * s >= 4 * n && s <= n + 1,
            equality: product == n,
        };
        if !report.bound_ok || !report.sum_chain_ok {
            return Err(Error::Violation(format!(
                "[{n},{k},{d}] breaks d·k >= n or 2√n <= d+k <= n+1"
            )));
        }
        Ok(report)
    }
}
