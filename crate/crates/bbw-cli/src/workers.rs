//! Worker-partitioned census: the subset space is split into contiguous
//! mask ranges, each handled on its own thread; partial ledgers merge in
//! range order so the output is identical for every worker count.

use bbw_core::census::{assemble, census_range, merge, CensusResult, PartialCensus};
use bbw_core::superalg::Superalgebra;
use bbw_core::weight::Weight;

pub fn census_parallel(
    spec: &Superalgebra,
    roots: &[Weight],
    workers: usize,
) -> Result<CensusResult, bbw_core::Error> {
    let k = roots.len();
    let full: u64 = 1u64 << k;
    let workers = workers.max(1).min(full.max(1) as usize);
    if workers == 1 || full < 4096 {
        let part = census_range(&spec.factors, roots, 0, full)?;
        return Ok(assemble(&spec.name, spec.family_valid, k, part));
    }
    let chunk = full.div_ceil(workers as u64);
    let ranges: Vec<(u64, u64)> = (0..workers as u64)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(full)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    let parts: Vec<Result<PartialCensus, bbw_core::Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || census_range(&spec.factors, roots, lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut acc = PartialCensus::default();
    for part in parts {
        acc = merge(acc, part?);
    }
    Ok(assemble(&spec.name, spec.family_valid, k, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bbw_core::census::census;
    use bbw_core::superalg::{catalog_lookup, Family};

    #[test]
    fn worker_count_does_not_change_the_result() {
        let spec = catalog_lookup(Family::P, 6, 0).unwrap();
        let reference = census(&spec).unwrap();
        for workers in [1, 2, 3, 7] {
            let got = census_parallel(&spec, &spec.pos_roots, workers).unwrap();
            assert_eq!(got.poincare, reference.poincare);
            assert_eq!(got.euler, reference.euler);
            assert_eq!(got.contributions, reference.contributions);
        }
    }
}
