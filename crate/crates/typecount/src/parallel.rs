//! Data-parallel drivers. Work is split into fixed index ranges and the
//! partial results are combined in range order, so output does not depend
//! on the thread count.

use rayon::prelude::*;
use typecount_core::matrix::OMatrix;
use typecount_core::projcensus::{CensusFlags, CensusReport, CosetModel, Model, Route};
use typecount_core::{Error, Result};

const CHUNK: u128 = 1 << 12;

/// Brute-force census over `X_k`, split across the rayon pool.
pub fn census(g: &OMatrix, model: Model, k: usize, budget: u64) -> Result<CensusReport> {
    let n = g.n() as u32;
    let m = CosetModel::new(model, g.q(), n, k)?;
    let cost = m.census_cost();
    if cost > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: cost.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    let prepared = m.prepare(g)?;
    let size = m.size();
    let chunks = size.div_ceil(CHUNK) as u64;
    let count: u128 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c as u128 * CHUNK;
            m.census_chunk(&prepared, lo..(lo + CHUNK).min(size))
        })
        .sum();
    Ok(CensusReport {
        model,
        q: g.q(),
        n,
        k,
        count,
        route: Route::Brute,
        flags: CensusFlags {
            hensel_fallback: false,
            every_point_fixed: count == size,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_matrix;

    #[test]
    fn agrees_with_serial() {
        let g = parse_matrix("t,1,2,1+t", 3, 2, 3).unwrap();
        let h = parse_matrix("1,t,t,1+t", 3, 2, 3).unwrap();
        for (m, model) in [(&g, Model::Unramified), (&h, Model::Ramified)] {
            let a = census(m, model, 3, u64::MAX).unwrap();
            let b = typecount_core::projcensus::census(m, model, 3, u64::MAX).unwrap();
            assert_eq!(a, b);
        }
    }
}
