use gcodelab_core::ParamReport;
use serde::Serialize;

/// JSON view of a [`ParamReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsJson {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub dk: Option<usize>,
    pub bound_ok: bool,
    pub sum_chain_ok: bool,
    pub equality: bool,
}

impl From<&ParamReport> for ParamsJson {
    fn from(r: &ParamReport) -> Self {
        ParamsJson {
            n: r.length,
            k: r.dimension,
            d: r.min_distance,
            dk: r.product,
            bound_ok: r.bound_ok,
            sum_chain_ok: r.sum_chain_ok,
            equality: r.equality,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}
