//! Exhaustive or sampled instance checks of the structural statements,
//! aggregated into a deterministic `{"checked", "failures"}` report.

use crate::error::Result;
use crate::sweep::{cyclic_ideals, CyclicIdeal, Engine, Generators};
use gcodelab_core::schur::{
    binary_chain_monotone_check, fixed_point_structure, schur_power_chain, schur_product,
    schur_square, ChainStatus,
};
use gcodelab_core::theorems::{
    equality_analysis, schur_square_theorem_check, solv_check, uncertainty_check,
    uncertainty_check_with_order,
};
use gcodelab_core::{AlgElem, Error as CoreError, GCode, GroupAlgebra};
use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Ideals up to this length also get the all-pairs Schur product check.
pub const PAIR_CHECK_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyKind {
    /// Weight times rank of `T_f` and the greedy `S`-rank, for every `f`.
    Up,
    /// `d·k ≥ |G|`, the sum chain, and even distance over binary 2-groups.
    Bound,
    /// Equality witnesses, induced trivial codes and idempotents.
    Equality,
    /// Schur products, squares, fixed points and power chains.
    Schur,
    All,
}

impl VerifyKind {
    fn includes(self, other: VerifyKind) -> bool {
        self == VerifyKind::All || self == other
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// Generator index in the sweep (first index for a deduplicated ideal).
    pub index: u64,
    pub check: String,
    pub generator: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks run on one item, in order, and the failures among them.
#[derive(Default)]
struct Tally {
    index: u64,
    generator: String,
    checks: Vec<&'static str>,
    failures: Vec<Failure>,
}

impl Tally {
    fn new(index: u64, generator: &AlgElem<'_>) -> Self {
        Tally {
            index,
            generator: generator.to_text(),
            ..Tally::default()
        }
    }

    /// Records a check. `Ok(None)` passes, `Ok(Some(why))` and a violation
    /// error fail; any other error aborts the sweep.
    fn check(
        &mut self,
        name: &'static str,
        outcome: std::result::Result<Option<String>, CoreError>,
    ) -> Result<()> {
        self.checks.push(name);
        let detail = match outcome {
            Ok(None) => return Ok(()),
            Ok(Some(detail)) | Err(CoreError::Violation(detail)) => detail,
            Err(e) => return Err(e.into()),
        };
        self.failures.push(Failure {
            index: self.index,
            check: name.to_string(),
            generator: self.generator.clone(),
            detail,
        });
        Ok(())
    }
}

fn fail_unless(ok: bool, detail: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(detail)
}

pub struct VerifyOptions {
    pub kind: VerifyKind,
    /// Marks one seeded check as failed, to exercise the reporting path.
    pub inject_fault: Option<u64>,
}

pub fn verify(
    engine: &Engine,
    alg: GroupAlgebra<'_>,
    gens: &Generators,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let mut tallies = Vec::new();
    if opts.kind.includes(VerifyKind::Up) {
        tallies.extend(uncertainty_sweep(engine, alg, gens)?);
    }
    let per_ideal = [VerifyKind::Bound, VerifyKind::Equality, VerifyKind::Schur]
        .iter()
        .any(|&k| opts.kind.includes(k));
    if per_ideal {
        let ideals = cyclic_ideals(engine, alg, gens);
        tallies.extend(engine.install(|| {
            ideals
                .par_iter()
                .map(|ideal| ideal_checks(engine, ideal, opts.kind))
                .collect::<Result<Vec<_>>>()
        })?);
        if opts.kind.includes(VerifyKind::Schur) && alg.order() <= PAIR_CHECK_MAX_ORDER {
            tallies.extend(pair_checks(engine, &ideals)?);
        }
    }
    if let Some(seed) = opts.inject_fault {
        inject(&mut tallies, seed);
    }
    let checked = tallies.iter().map(|t| t.checks.len() as u64).sum();
    let mut failures: Vec<Failure> = tallies.into_iter().flat_map(|t| t.failures).collect();
    failures.sort();
    Ok(VerifyReport { checked, failures })
}

fn inject(tallies: &mut [Tally], seed: u64) {
    let total: usize = tallies.iter().map(|t| t.checks.len()).sum();
    if total == 0 {
        return;
    }
    let mut target = (ChaCha8Rng::seed_from_u64(seed).next_u64() % total as u64) as usize;
    for t in tallies.iter_mut() {
        if target < t.checks.len() {
            t.failures.push(Failure {
                index: t.index,
                check: t.checks[target].to_string(),
                generator: t.generator.clone(),
                detail: format!("injected fault (seed {seed})"),
            });
            return;
        }
        target -= t.checks.len();
    }
}

fn uncertainty_sweep(
    engine: &Engine,
    alg: GroupAlgebra<'_>,
    gens: &Generators,
) -> Result<Vec<Tally>> {
    let n = alg.order();
    let mut shuffled: Vec<usize> = (0..n).collect();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(engine.seed()));
    let tallies = engine.install(|| {
        (0..gens.len())
            .into_par_iter()
            .map(|i| -> Result<Option<Tally>> {
                let f = gens.elem(alg, i);
                if f.is_zero() {
                    return Ok(None);
                }
                let mut t = Tally::new(i, &f);
                t.check(
                    "uncertainty",
                    uncertainty_check(&f).map(|r| {
                        fail_unless(r.weight * r.rank >= n && r.rank >= r.greedy_t, || {
                            format!("wt {} rank {} greedy t {}", r.weight, r.rank, r.greedy_t)
                        })
                    }),
                )?;
                t.check(
                    "s-rank-shuffled",
                    uncertainty_check_with_order(&f, &shuffled).map(|r| {
                        fail_unless(r.rank >= r.greedy_t, || {
                            format!("rank {} < greedy t {}", r.rank, r.greedy_t)
                        })
                    }),
                )?;
                Ok(Some(t))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(tallies.into_iter().flatten().collect())
}

fn ideal_checks(engine: &Engine, ideal: &CyclicIdeal<'_>, kind: VerifyKind) -> Result<Tally> {
    let c = &ideal.code;
    let alg = c.algebra();
    let g = alg.group();
    let n = g.order();
    let p = alg.field().p() as usize;
    let p_group = g.is_p_group(p);
    let guard = engine.guard();
    let mut t = Tally::new(ideal.index, &ideal.generator);

    let params = match c.params(guard) {
        Ok(r) => r,
        Err(e) => {
            t.check("bound", Err(e))?;
            return Ok(t);
        }
    };
    let d = params.min_distance.expect("nonzero code");
    let k = params.dimension;

    if kind.includes(VerifyKind::Bound) {
        t.check(
            "bound",
            Ok(fail_unless(params.bound_ok && params.sum_chain_ok, || {
                format!("d = {d}, k = {k}, n = {n}")
            })),
        )?;
        if p == 2 && p_group && k < n {
            t.check(
                "even-distance",
                Ok(fail_unless(d % 2 == 0, || format!("d = {d}"))),
            )?;
        }
    }

    if kind.includes(VerifyKind::Equality) {
        let witness = equality_analysis(c, guard);
        let witness = match witness {
            Ok(w) => w,
            Err(e) => {
                t.check("equality", Err(e))?;
                None
            }
        };
        t.check(
            "equality",
            Ok(fail_unless(witness.is_some() == params.equality, || {
                format!("d·k = {}, witness found: {}", d * k, witness.is_some())
            })),
        )?;
        if let Some(w) = &witness {
            let induced = GCode::trivial_induced(alg, &w.subgroup)?;
            t.check(
                "equality-induced",
                induced.params(guard).map(|r| {
                    fail_unless(r.equality, || format!("K_H^G has d·k = {:?}", r.product))
                }),
            )?;
            if p_group {
                t.check(
                    "p-group-induced",
                    Ok(fail_unless(&induced == c, || "C ≠ K_H^G".into())),
                )?;
            }
            let expect_e = d % p != 0;
            t.check(
                "idempotent",
                Ok(fail_unless(w.idempotent.is_some() == expect_e, || {
                    format!(
                        "p = {p}, d = {d}, idempotent found: {}",
                        w.idempotent.is_some()
                    )
                })),
            )?;
            if let Some(e) = &w.idempotent {
                t.check(
                    "idempotent-generates",
                    e.convolve(e).map(|ee| {
                        fail_unless(&ee == e && &GCode::principal(e) == c, || {
                            "e is not an idempotent generator of C".into()
                        })
                    }),
                )?;
            }
        }
    }

    if kind.includes(VerifyKind::Schur) {
        t.check(
            "schur-square",
            schur_square_theorem_check(c).map(|v| {
                fail_unless(v.holds(), || {
                    let failed: Vec<_> = v.clauses.iter().filter(|x| !x.1).map(|x| x.0).collect();
                    format!("failed clauses {failed:?}")
                })
            }),
        )?;
        let square = schur_square(c);
        let fixed = matches!(&square, Ok(sq) if sq == c);
        t.check("schur-ideal", square.map(|_| None))?;
        if fixed {
            t.check(
                "fixed-point",
                fixed_point_structure(c, guard).and_then(|h| {
                    let induced = GCode::trivial_induced(alg, &h)?;
                    Ok(fail_unless(&induced == c && d * k == n, || {
                        format!("H of order {}, d·k = {}", h.order(), d * k)
                    }))
                }),
            )?;
        }
        let chain = schur_power_chain(c, 2 * n + 2, guard);
        if p == 2 {
            t.check(
                "schur-chain",
                chain.map(|r| {
                    fail_unless(
                        r.status == ChainStatus::Stable && r.stabilizer_subgroup.is_some(),
                        || format!("status {:?}, dims {:?}", r.status, r.dims),
                    )
                }),
            )?;
            t.check(
                "binary-chain",
                binary_chain_monotone_check(c).map(|v| fail_unless(v.holds(), || format!("{v:?}"))),
            )?;
            match solv_check(c) {
                Err(CoreError::Unsupported(_)) => {}
                outcome => t.check(
                    "cover-criterion",
                    outcome.map(|v| fail_unless(v.holds(), || format!("{v:?}"))),
                )?,
            }
        } else {
            t.check("schur-chain", chain.map(|_| None))?;
        }
    }
    Ok(t)
}

fn pair_checks(engine: &Engine, ideals: &[CyclicIdeal<'_>]) -> Result<Vec<Tally>> {
    engine.install(|| {
        (0..ideals.len())
            .into_par_iter()
            .map(|i| -> Result<Tally> {
                let a = &ideals[i];
                let mut t = Tally::new(a.index, &a.generator);
                for b in &ideals[i..] {
                    t.check(
                        "schur-pair",
                        schur_product(&a.code, &b.code).and_then(|ab| {
                            Ok(fail_unless(ab.is_ideal()?, || {
                                format!("product with {} is not an ideal", b.generator.to_text())
                            }))
                        }),
                    )?;
                }
                Ok(t)
            })
            .collect()
    })
}
