//! Enumeration of cyclic ideals `fKG` on a thread pool, and the per-ideal
//! parameter table.

use crate::error::{Error, Result};
use gcodelab_core::schur::schur_square;
use gcodelab_core::{AlgElem, GCode, GroupAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use serde::Serialize;
use std::collections::HashMap;

/// Largest `p^|G|` the exhaustive generator enumeration accepts.
pub const MAX_EXHAUSTIVE: u64 = 1 << 24;

/// Thread pool plus the settings every sweep shares.
pub struct Engine {
    pool: ThreadPool,
    guard: u64,
    seed: u64,
}

impl Engine {
    /// `threads = None` uses the available parallelism.
    pub fn new(threads: Option<usize>, guard: u64, seed: u64) -> Result<Self> {
        if guard == 0 {
            return Err(Error::Usage("guard must be at least 1".into()));
        }
        let pool = ThreadPoolBuilder::new()
            .num_threads(threads.unwrap_or(0))
            .build()?;
        Ok(Engine { pool, guard, seed })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn guard(&self) -> u64 {
        self.guard
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        self.pool.install(op)
    }
}

/// The generators `f` a sweep runs over.
#[derive(Debug, Clone)]
pub enum Generators {
    /// Every `f ∈ F_pG`; index `i` has coefficient `g` equal to digit `g`
    /// of `i` in base `p`, least significant first.
    Exhaustive { p: u32, n: usize, count: u64 },
    /// A seeded uniform sample.
    Sampled(Vec<Vec<u32>>),
}

impl Generators {
    pub fn exhaustive(alg: GroupAlgebra<'_>) -> Result<Self> {
        let p = alg.field().p();
        let n = alg.order();
        let count = (0..n).try_fold(1u64, |acc, _| {
            acc.checked_mul(u64::from(p))
                .filter(|&c| c <= MAX_EXHAUSTIVE)
        });
        match count {
            Some(count) => Ok(Generators::Exhaustive { p, n, count }),
            None => Err(Error::Usage(format!(
                "{p}^{n} generators exceed the exhaustive limit {MAX_EXHAUSTIVE}; use sampling"
            ))),
        }
    }

    pub fn sampled(alg: GroupAlgebra<'_>, count: usize, seed: u64) -> Self {
        let p = alg.field().p();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sample = (0..count)
            .map(|_| (0..alg.order()).map(|_| rng.random_range(0..p)).collect())
            .collect();
        Generators::Sampled(sample)
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Generators::Exhaustive { .. })
    }

    pub fn len(&self) -> u64 {
        match self {
            Generators::Exhaustive { count, .. } => *count,
            Generators::Sampled(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coeffs(&self, i: u64) -> Vec<u32> {
        match self {
            Generators::Exhaustive { p, n, .. } => {
                let p = u64::from(*p);
                let mut rest = i;
                (0..*n)
                    .map(|_| {
                        let digit = rest % p;
                        rest /= p;
                        digit as u32
                    })
                    .collect()
            }
            Generators::Sampled(v) => v[i as usize].clone(),
        }
    }

    pub fn elem<'g>(&self, alg: GroupAlgebra<'g>, i: u64) -> AlgElem<'g> {
        alg.elem(self.coeffs(i))
            .expect("generator coefficients are residues")
    }
}

/// A distinct nonzero cyclic ideal with the first generator that produced it.
#[derive(Debug, Clone)]
pub struct CyclicIdeal<'g> {
    pub index: u64,
    pub generator: AlgElem<'g>,
    pub code: GCode<'g>,
}

/// Distinct nonzero ideals `fKG` over `gens`, ordered by the smallest
/// generator index reaching each one.
pub fn cyclic_ideals<'g>(
    engine: &Engine,
    alg: GroupAlgebra<'g>,
    gens: &Generators,
) -> Vec<CyclicIdeal<'g>> {
    let firsts: HashMap<Vec<u32>, u64> = engine.install(|| {
        (0..gens.len())
            .into_par_iter()
            .fold(HashMap::new, |mut seen: HashMap<Vec<u32>, u64>, i| {
                let code = GCode::principal(&gens.elem(alg, i));
                if !code.is_zero() {
                    let key = code.basis().matrix().data().to_vec();
                    seen.entry(key)
                        .and_modify(|j| *j = (*j).min(i))
                        .or_insert(i);
                }
                seen
            })
            .reduce(HashMap::new, |mut a, b| {
                for (key, i) in b {
                    a.entry(key).and_modify(|j| *j = (*j).min(i)).or_insert(i);
                }
                a
            })
    });
    let mut indices: Vec<u64> = firsts.into_values().collect();
    indices.sort_unstable();
    indices
        .into_iter()
        .map(|index| {
            let generator = gens.elem(alg, index);
            let code = GCode::principal(&generator);
            CyclicIdeal {
                index,
                generator,
                code,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub index: u64,
    pub generator: String,
    pub k: usize,
    pub d: usize,
    pub dk: usize,
    pub ratio: f64,
    pub self_orthogonal: bool,
    pub square_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub group: String,
    pub order: usize,
    pub p: u32,
    pub exhaustive: bool,
    pub generators: u64,
    pub rows: Vec<SweepRow>,
}

/// One row per distinct nonzero cyclic ideal, sorted by `d·k/|G|`
/// descending and then by generator index.
pub fn sweep_report(
    engine: &Engine,
    alg: GroupAlgebra<'_>,
    gens: &Generators,
) -> Result<SweepReport> {
    let ideals = cyclic_ideals(engine, alg, gens);
    let n = alg.order();
    let mut rows = engine.install(|| {
        ideals
            .par_iter()
            .map(|ideal| -> Result<SweepRow> {
                let params = ideal.code.params(engine.guard())?;
                let d = params.min_distance.expect("nonzero code");
                let dk = params.product.expect("nonzero code");
                Ok(SweepRow {
                    index: ideal.index,
                    generator: ideal.generator.to_text(),
                    k: params.dimension,
                    d,
                    dk,
                    ratio: dk as f64 / n as f64,
                    self_orthogonal: ideal.code.is_self_orthogonal(),
                    square_dim: schur_square(&ideal.code)?.dim(),
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by(|a, b| b.dk.cmp(&a.dk).then(a.index.cmp(&b.index)));
    Ok(SweepReport {
        group: alg.group().name().to_string(),
        order: n,
        p: alg.field().p(),
        exhaustive: gens.is_exhaustive(),
        generators: gens.len(),
        rows,
    })
}
