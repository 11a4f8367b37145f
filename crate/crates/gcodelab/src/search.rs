//! Seeded Golay search with trial batches evaluated on the thread pool.

use crate::error::Result;
use crate::report::ParamsJson;
use crate::sweep::Engine;
use gcodelab_core::constructions::{golay_trial, GolayHit, GolayTrials};
use gcodelab_core::GroupAlgebra;
use rayon::prelude::*;
use serde::Serialize;

/// Trials drawn from the stream per parallel batch.
pub const GOLAY_BATCH: usize = 1 << 12;

/// Same trial stream and result as the sequential search: batches are
/// drawn in order and the first hit within a batch is the one with the
/// smallest trial index.
pub fn golay_search<'g>(
    engine: &Engine,
    alg: GroupAlgebra<'g>,
    budget: u64,
) -> Result<Option<GolayHit<'g>>> {
    let mut trials = GolayTrials::new(engine.seed());
    let mut start = 0u64;
    while start < budget {
        let len = (budget - start).min(GOLAY_BATCH as u64) as usize;
        let batch: Vec<u32> = trials.by_ref().take(len).collect();
        let hit = engine.install(|| {
            batch.par_iter().enumerate().find_map_first(|(i, &bits)| {
                golay_trial(alg, bits).transpose().map(|r| (i, bits, r))
            })
        });
        if let Some((i, bits, code)) = hit {
            let code = code?;
            let generator = alg.elem((0..24).map(|x| bits >> x & 1).collect())?;
            return Ok(Some(GolayHit {
                trial: start + i as u64,
                generator,
                code,
            }));
        }
        start += len as u64;
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GolayReport {
    pub group: String,
    pub seed: u64,
    pub budget: u64,
    pub trials_run: u64,
    pub found: bool,
    pub trial: Option<u64>,
    pub generator: Option<String>,
    pub params: Option<ParamsJson>,
    pub self_dual: Option<bool>,
    pub basis: Option<Vec<Vec<u32>>>,
}

pub fn golay_report(engine: &Engine, alg: GroupAlgebra<'_>, budget: u64) -> Result<GolayReport> {
    let hit = golay_search(engine, alg, budget)?;
    let mut report = GolayReport {
        group: alg.group().name().to_string(),
        seed: engine.seed(),
        budget,
        trials_run: budget,
        found: false,
        trial: None,
        generator: None,
        params: None,
        self_dual: None,
        basis: None,
    };
    if let Some(hit) = hit {
        let params = hit.code.params(engine.guard())?;
        report.trials_run = hit.trial + 1;
        report.found = true;
        report.trial = Some(hit.trial);
        report.generator = Some(hit.generator.to_text());
        report.params = Some(ParamsJson::from(&params));
        report.self_dual = Some(hit.code.dual()? == hit.code);
        report.basis = Some(hit.code.basis().rows().map(<[u32]>::to_vec).collect());
    }
    Ok(report)
}
