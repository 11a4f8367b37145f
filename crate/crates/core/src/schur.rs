//! Schur products and Schur powers of G-codes.

use crate::code::GCode;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::Matrix;
use alloc::format;
use alloc::vec::Vec;

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `C * C'`: the span of all componentwise products, computed from basis
/// pairs. The result is checked to be an ideal and to respect the dimension
/// bounds `dim ≤ min{n, k k' − binom(dim C∩C', 2)}` and, for squares,
/// `dim ≤ min{n, binom(k+1, 2)}`.
pub fn schur_product<'g>(a: &GCode<'g>, b: &GCode<'g>) -> Result<GCode<'g>> {
    let alg = a.algebra();
    if alg != b.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let n = alg.order();
    let f = alg.field();
    let square = a == b;
    let mut data = Vec::new();
    let mut rows = 0;
    for (i, x) in a.basis().rows().enumerate() {
        for (j, y) in b.basis().rows().enumerate() {
            if square && j < i {
                continue;
            }
            data.extend(x.iter().zip(y).map(|(&u, &v)| f.mul(u, v)));
            rows += 1;
        }
    }
    let basis = Matrix::new(f, rows, n, data)?.rref();
    let product = GCode::from_basis(alg, basis)
        .map_err(|_| Error::Violation("Schur product of ideals is not an ideal".into()))?;

    let (k, k2) = (a.dim(), b.dim());
    let common = a.basis().intersect(b.basis())?.dim();
    let bound = n.min(k * k2 - binom2(common));
    if product.dim() > bound || (square && product.dim() > n.min(binom2(k + 1))) {
        return Err(Error::Violation(format!(
            "dim C*C' = {} exceeds the bound {bound}",
            product.dim()
        )));
    }
    Ok(product)
}

pub fn schur_square<'g>(c: &GCode<'g>) -> Result<GCode<'g>> {
    schur_product(c, c)
}

/// If `C = C * C` and `C ≠ 0`, recovers the subgroup `H` with `C = K_H^G`:
/// a minimum-weight codeword translated so its support contains the
/// identity has support exactly `H`.
pub fn fixed_point_structure<'g>(c: &GCode<'g>, guard: u64) -> Result<Subgroup<'g>> {
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    if &schur_square(c)? != c {
        return Err(Error::NotSchurFixed);
    }
    let alg = c.algebra();
    let g = alg.group();
    let (_, word) = c.min_weight_codeword(guard)?;
    let h = word.support()[0];
    let word = word.right_translate(g.inv(h));
    let members = word.support();
    let sub = g.subgroup(&members).map_err(|_| {
        Error::Violation("support of a minimum-weight word is not a subgroup".into())
    })?;
    if &GCode::trivial_induced(alg, &sub)? != c {
        return Err(Error::Violation(
            "Schur-fixed code differs from K_H^G".into(),
        ));
    }
    Ok(sub)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainStatus {
    /// `C^(t+1) = C^(t)` from some point on.
    Stable,
    /// The codes revisit an earlier member with period greater than one.
    Periodic,
    /// `max_t` was reached before any repetition.
    Exhausted,
}

/// The sequence `C^(1) = C`, `C^(t+1) = C^(t) * C`.
#[derive(Debug, Clone)]
pub struct SchurChainReport<'g> {
    /// `dim C^(t)` for every distinct power computed, `t = 1, 2, …`.
    pub dims: Vec<usize>,
    pub status: ChainStatus,
    /// When the chain repeats: `C^(T+1) = C^(cycle_start)` with `T = dims.len()`.
    pub cycle_start: Option<usize>,
    pub period: Option<usize>,
    /// Smallest `t` after which the dimension never changes.
    pub regularity: Option<usize>,
    pub stabilized_code: Option<GCode<'g>>,
    /// `H` with `C^(t) = K_H^G` for large `t`, when the limit is Schur-fixed.
    pub stabilizer_subgroup: Option<Subgroup<'g>>,
}

/// Iterates Schur powers until a power repeats (as a code, not merely in
/// dimension) or `max_t` powers have been formed.
///
/// Over `F_2` the limit must be some `K_H^G` containing `C`; a failure of
/// that is reported as [`Error::Violation`].
pub fn schur_power_chain<'g>(
    c: &GCode<'g>,
    max_t: usize,
    guard: u64,
) -> Result<SchurChainReport<'g>> {
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    let mut codes: Vec<GCode<'g>> = alloc::vec![c.clone()];
    let mut repeat = None;
    while codes.len() < max_t.max(1) {
        let next = schur_product(codes.last().expect("nonempty"), c)?;
        if let Some(s) = codes.iter().position(|x| x == &next) {
            repeat = Some(s);
            break;
        }
        codes.push(next);
    }
    if repeat.is_none() {
        // one more product tells whether the last power is already stable
        let next = schur_product(codes.last().expect("nonempty"), c)?;
        repeat = codes.iter().position(|x| x == &next);
    }
    let dims: Vec<usize> = codes.iter().map(GCode::dim).collect();
    let total = codes.len();
    let (status, cycle_start, period) = match repeat {
        Some(s) if s + 1 == total => (ChainStatus::Stable, Some(s + 1), Some(1)),
        Some(s) => (ChainStatus::Periodic, Some(s + 1), Some(total - s)),
        None => (ChainStatus::Exhausted, None, None),
    };
    let regularity = cycle_start.and_then(|start| {
        let tail = &dims[start - 1..];
        let d = tail[0];
        if tail.iter().any(|&x| x != d) {
            return None;
        }
        let mut t = start;
        while t > 1 && dims[t - 2] == d {
            t -= 1;
        }
        Some(t)
    });
    let stabilized_code = (status == ChainStatus::Stable).then(|| codes[total - 1].clone());

    let mut stabilizer_subgroup = None;
    if let Some(limit) = &stabilized_code {
        let binary = c.algebra().field().p() == 2;
        if binary || &schur_square(limit)? == limit {
            let h = fixed_point_structure(limit, guard).map_err(|e| match e {
                Error::NotSchurFixed => {
                    Error::Violation("binary Schur chain limit is not Schur-fixed".into())
                }
                other => other,
            })?;
            if !c.is_subcode_of(limit)? {
                return Err(Error::Violation(
                    "C is not contained in its Schur limit K_H^G".into(),
                ));
            }
            stabilizer_subgroup = Some(h);
        }
    }
    Ok(SchurChainReport {
        dims,
        status,
        cycle_start,
        period,
        regularity,
        stabilized_code,
        stabilizer_subgroup,
    })
}

/// Outcome of [`binary_chain_monotone_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryChainVerdict {
    /// `dim C^(2^i)` for `i = 0, 1, …` until the squares repeat.
    pub square_dims: Vec<usize>,
    /// `C^(2^i) ⊆ C^(2^(i+1))` at every step.
    pub monotone: bool,
    /// `b * b ∈ C * C` for every basis vector `b`.
    pub frobenius_lands_in_square: bool,
    /// `C ⊆ C * C`; over `F_2` this is injectivity of `c ↦ c * c`.
    pub contained_in_square: bool,
}

impl BinaryChainVerdict {
    pub fn holds(&self) -> bool {
        self.monotone && self.frobenius_lands_in_square && self.contained_in_square
    }
}

/// Over `F_2`, checks that repeated squaring is monotone and that
/// `c ↦ c * c` embeds `C` into `C * C`.
pub fn binary_chain_monotone_check(c: &GCode<'_>) -> Result<BinaryChainVerdict> {
    let f = c.algebra().field();
    if f.p() != 2 {
        return Err(Error::Unsupported(format!(
            "binary chain check needs p = 2, got p = {}",
            f.p()
        )));
    }
    let square = schur_square(c)?;
    let mut frobenius = true;
    for b in c.basis_elems() {
        frobenius &= square.contains(&b.schur(&b)?)?;
    }
    let contained = c.is_subcode_of(&square)?;
    let mut dims = alloc::vec![c.dim()];
    let mut monotone = true;
    let mut current = c.clone();
    loop {
        let next = schur_square(&current)?;
        monotone &= current.is_subcode_of(&next)?;
        if next == current || !monotone {
            break;
        }
        dims.push(next.dim());
        current = next;
    }
    Ok(BinaryChainVerdict {
        square_dims: dims,
        monotone,
        frobenius_lands_in_square: frobenius,
        contained_in_square: contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupAlgebra;
    use crate::code::DEFAULT_GUARD;
    use crate::field::Fp;
    use crate::group::Group;

    #[test]
    fn product_with_zero() {
        let c4 = Group::cyclic(4).unwrap();
        let kg = GroupAlgebra::new(&c4, Fp::binary());
        let z = GCode::zero(kg);
        assert_eq!(schur_product(&GCode::full(kg), &z).unwrap(), z);
    }

    #[test]
    fn ternary_c2_square_is_trivial_module() {
        let c2 = Group::cyclic(2).unwrap();
        let kg = GroupAlgebra::new(&c2, Fp::new(3).unwrap());
        let c = GCode::principal(&kg.parse("1,2").unwrap());
        let sq = schur_square(&c).unwrap();
        assert_eq!(sq, GCode::principal(&kg.parse("1,1").unwrap()));
        assert_eq!(sq.basis().matrix().data(), &[1, 1]);
    }

    #[test]
    fn induced_trivial_code_is_schur_idempotent() {
        let c4 = Group::cyclic(4).unwrap();
        let kg = GroupAlgebra::new(&c4, Fp::binary());
        let h = c4.subgroup(&[0, 2]).unwrap();
        let c = GCode::trivial_induced(kg, &h).unwrap();
        assert_eq!(schur_square(&c).unwrap(), c);
    }

    #[test]
    fn chain_full_algebra() {
        let c6 = Group::cyclic(6).unwrap();
        let kg = GroupAlgebra::new(&c6, Fp::binary());
        let r = schur_power_chain(&GCode::full(kg), 10, DEFAULT_GUARD).unwrap();
        assert_eq!(r.dims, vec![6]);
        assert_eq!(r.regularity, Some(1));
        assert_eq!(r.status, ChainStatus::Stable);
        assert_eq!(r.stabilizer_subgroup.unwrap().members(), &[0]);
    }

    #[test]
    fn chain_induced_code_is_constant() {
        let c4 = Group::cyclic(4).unwrap();
        let kg = GroupAlgebra::new(&c4, Fp::binary());
        let h = c4.subgroup(&[0, 2]).unwrap();
        let c = GCode::trivial_induced(kg, &h).unwrap();
        let r = schur_power_chain(&c, 10, DEFAULT_GUARD).unwrap();
        assert_eq!(r.dims, vec![2]);
        assert_eq!(r.regularity, Some(1));
        assert_eq!(r.stabilizer_subgroup.unwrap(), h);
    }

    #[test]
    fn ternary_chain_oscillates() {
        // (1+2r)KG → (1+r)KG → (1+2r)KG → …
        let c2 = Group::cyclic(2).unwrap();
        let kg = GroupAlgebra::new(&c2, Fp::new(3).unwrap());
        let c = GCode::principal(&kg.parse("1,2").unwrap());
        let r = schur_power_chain(&c, 10, DEFAULT_GUARD).unwrap();
        assert_eq!(r.dims, vec![1, 1]);
        assert_eq!(r.status, ChainStatus::Periodic);
        assert_eq!(r.cycle_start, Some(1));
        assert_eq!(r.period, Some(2));
        assert_eq!(r.regularity, Some(1));
        assert!(r.stabilized_code.is_none());
    }

    #[test]
    fn chain_exhaustion_is_reported() {
        // C = (1+r)F_2C_4 = ker ε: squares grow 3 → 4, needs two steps
        let c4 = Group::cyclic(4).unwrap();
        let kg = GroupAlgebra::new(&c4, Fp::binary());
        let c = GCode::principal(&kg.parse("1,1,0,0").unwrap());
        let r = schur_power_chain(&c, 1, DEFAULT_GUARD).unwrap();
        assert_eq!(r.status, ChainStatus::Exhausted);
        assert_eq!(r.regularity, None);
        let r = schur_power_chain(&c, 5, DEFAULT_GUARD).unwrap();
        assert_eq!(r.dims, vec![3, 4]);
        assert_eq!(r.regularity, Some(2));
        assert_eq!(r.stabilizer_subgroup.unwrap().members(), &[0]);
    }

    #[test]
    fn fixed_point_examples() {
        let c6 = Group::cyclic(6).unwrap();
        let kg = GroupAlgebra::new(&c6, Fp::binary());
        assert_eq!(
            fixed_point_structure(&GCode::full(kg), DEFAULT_GUARD)
                .unwrap()
                .members(),
            &[0]
        );
        let all = GCode::principal(&kg.all_ones());
        assert_eq!(
            fixed_point_structure(&all, DEFAULT_GUARD).unwrap().order(),
            6
        );
        let h = c6.subgroup(&[0, 3]).unwrap();
        let c = GCode::trivial_induced(kg, &h).unwrap();
        assert_eq!(fixed_point_structure(&c, DEFAULT_GUARD).unwrap(), h);
        let not_fixed = GCode::principal(&kg.parse("1,1,0,0,0,0").unwrap());
        assert_eq!(
            fixed_point_structure(&not_fixed, DEFAULT_GUARD),
            Err(Error::NotSchurFixed)
        );
    }

    #[test]
    fn binary_monotone_examples() {
        let c8 = Group::cyclic(8).unwrap();
        let kg = GroupAlgebra::new(&c8, Fp::binary());
        for bits in 1u32..256 {
            let f = kg.elem((0..8).map(|i| (bits >> i) & 1).collect()).unwrap();
            let v = binary_chain_monotone_check(&GCode::principal(&f)).unwrap();
            assert!(v.holds(), "{f:?}");
        }
        let full = binary_chain_monotone_check(&GCode::full(kg)).unwrap();
        assert_eq!(full.square_dims, vec![8]);
        let c2 = Group::cyclic(2).unwrap();
        let k3 = GroupAlgebra::new(&c2, Fp::new(3).unwrap());
        let c = GCode::principal(&k3.parse("1,2").unwrap());
        assert!(matches!(
            binary_chain_monotone_check(&c),
            Err(Error::Unsupported(_))
        ));
    }
}
