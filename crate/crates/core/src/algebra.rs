//! Elements of the group algebra `F_p G`.
//!
//! An element `f = Σ a_g g` is stored as its coefficient vector in group-index
//! order, which is the standard identification `F_p G ≅ F_p^n`.

use crate::error::{Error, Result};
use crate::field::{FieldElem, Fp};
use crate::group::Group;
use crate::linalg::{dot, Matrix};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The algebra `F_p G` for a fixed group and field.
#[derive(Clone, Copy)]
pub struct GroupAlgebra<'g> {
    group: &'g Group,
    field: Fp,
}

impl PartialEq for GroupAlgebra<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.group, other.group) && self.field == other.field
    }
}

impl Eq for GroupAlgebra<'_> {}

impl fmt::Debug for GroupAlgebra<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.group.name())
    }
}

impl<'g> GroupAlgebra<'g> {
    pub fn new(group: &'g Group, field: Fp) -> Self {
        GroupAlgebra { group, field }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    /// `|G|`, the code length.
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn elem(&self, coeffs: Vec<u32>) -> Result<AlgElem<'g>> {
        if coeffs.len() != self.order() {
            return Err(Error::DimensionMismatch {
                expected: self.order(),
                found: coeffs.len(),
            });
        }
        let p = self.field.p();
        Ok(AlgElem {
            alg: *self,
            coeffs: coeffs.into_iter().map(|x| x % p).collect(),
        })
    }

    /// Parses the comma-separated residue form, e.g. `"1,2"`.
    pub fn parse(&self, text: &str) -> Result<AlgElem<'g>> {
        let coeffs = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map(|x| self.field.reduce(x))
                    .map_err(|_| Error::InvalidArgument(alloc::format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        self.elem(coeffs)
    }

    pub fn zero(&self) -> AlgElem<'g> {
        AlgElem {
            alg: *self,
            coeffs: vec![0; self.order()],
        }
    }

    pub fn one(&self) -> AlgElem<'g> {
        self.basis(0)
    }

    /// The group element `g` as an algebra element.
    pub fn basis(&self, g: usize) -> AlgElem<'g> {
        let mut e = self.zero();
        e.coeffs[g] = 1;
        e
    }

    /// `Σ_{g ∈ G} g`.
    pub fn all_ones(&self) -> AlgElem<'g> {
        self.indicator(0..self.order())
    }

    /// `Σ_{g ∈ S} g`.
    pub fn indicator(&self, set: impl IntoIterator<Item = usize>) -> AlgElem<'g> {
        let mut e = self.zero();
        for g in set {
            e.coeffs[g] = 1;
        }
        e
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem<'g> {
    alg: GroupAlgebra<'g>,
    coeffs: Vec<u32>,
}

impl fmt::Debug for AlgElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.alg, self.to_text())
    }
}

impl<'g> AlgElem<'g> {
    pub fn algebra(&self) -> GroupAlgebra<'g> {
        self.alg
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn coeff(&self, g: usize) -> u32 {
        self.coeffs[g]
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| alloc::format!("{c}")).collect();
        parts.join(",")
    }

    fn same_algebra(&self, other: &AlgElem<'_>) -> Result<()> {
        if self.alg.field != other.alg.field {
            return Err(Error::ModulusMismatch {
                left: self.alg.field.p(),
                right: other.alg.field.p(),
            });
        }
        if !core::ptr::eq(self.alg.group, other.alg.group) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `supp(f)`, sorted.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] != 0)
            .collect()
    }

    /// `wt(f) = |supp(f)|`.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn hamming_distance(&self, other: &AlgElem<'_>) -> Result<usize> {
        self.same_algebra(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn add(&self, other: &AlgElem<'g>) -> Result<AlgElem<'g>> {
        self.same_algebra(other)?;
        let f = self.alg.field;
        Ok(self.map2(other, |a, b| f.add(a, b)))
    }

    pub fn sub(&self, other: &AlgElem<'g>) -> Result<AlgElem<'g>> {
        self.same_algebra(other)?;
        let f = self.alg.field;
        Ok(self.map2(other, |a, b| f.sub(a, b)))
    }

    pub fn scale(&self, lambda: u32) -> AlgElem<'g> {
        let f = self.alg.field;
        let lambda = lambda % f.p();
        AlgElem {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(|&c| f.mul(c, lambda)).collect(),
        }
    }

    fn map2(&self, other: &AlgElem<'g>, op: impl Fn(u32, u32) -> u32) -> AlgElem<'g> {
        AlgElem {
            alg: self.alg,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// Group algebra product `f·h`: coefficient of `k` is the sum of
    /// `f[i]·h[j]` over all `g_i g_j = g_k`.
    pub fn convolve(&self, other: &AlgElem<'g>) -> Result<AlgElem<'g>> {
        self.same_algebra(other)?;
        let g = self.alg.group;
        let f = self.alg.field;
        let n = g.order();
        let p = f.p() as u64;
        let mut acc = vec![0u64; n];
        for i in (0..n).filter(|&i| self.coeffs[i] != 0) {
            let a = self.coeffs[i] as u64;
            for j in (0..n).filter(|&j| other.coeffs[j] != 0) {
                let k = g.mul(i, j);
                acc[k] = (acc[k] + a * other.coeffs[j] as u64) % p;
            }
        }
        Ok(AlgElem {
            alg: self.alg,
            coeffs: acc.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// `f·g` for a group element `g`: the coefficient of `x` in the result is
    /// the coefficient of `x g^{-1}` in `f`.
    pub fn right_translate(&self, g: usize) -> AlgElem<'g> {
        let grp = self.alg.group;
        let mut out = vec![0u32; grp.order()];
        for (x, &c) in self.coeffs.iter().enumerate() {
            out[grp.mul(x, g)] = c;
        }
        AlgElem {
            alg: self.alg,
            coeffs: out,
        }
    }

    /// Componentwise product.
    pub fn schur(&self, other: &AlgElem<'g>) -> Result<AlgElem<'g>> {
        self.same_algebra(other)?;
        let f = self.alg.field;
        Ok(self.map2(other, |a, b| f.mul(a, b)))
    }

    /// `ε(f) = Σ a_g`.
    pub fn augmentation(&self) -> FieldElem {
        let f = self.alg.field;
        let s = self
            .coeffs
            .iter()
            .fold(0u64, |acc, &c| (acc + c as u64) % f.p() as u64);
        f.elem(s as u32)
    }

    /// `⟨f, h⟩ = ε(f * h)`.
    pub fn inner(&self, other: &AlgElem<'g>) -> Result<FieldElem> {
        self.same_algebra(other)?;
        let f = self.alg.field;
        Ok(f.elem(dot(f, &self.coeffs, &other.coeffs)))
    }

    /// Matrix of `v ↦ f v`: column `j` holds the coefficients of `f·g_j`, so
    /// its rank is `dim fKG`.
    pub fn multiplication_matrix(&self) -> Matrix {
        self.translates_matrix().transpose()
    }

    /// Rows `f·g_0, …, f·g_{n-1}`; their span is the right ideal `fKG`.
    pub fn translates_matrix(&self) -> Matrix {
        let n = self.alg.order();
        let mut data = Vec::with_capacity(n * n);
        for g in 0..n {
            data.extend_from_slice(&self.right_translate(g).coeffs);
        }
        Matrix::new(self.alg.field, n, n, data).expect("square")
    }
}
