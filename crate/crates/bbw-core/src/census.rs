//! The weight census: enumerate sub-multisets `J` of the positive odd
//! roots, push `-rho(J)` through the per-factor line-bundle oracle, combine
//! factors by adding degrees and multiplying dimensions, and assemble the
//! Poincaré polynomial together with its Euler-characteristic shadow.
//!
//! Only contributions whose dominant representative is the trivial
//! character enter the Poincaré polynomial; regular contributions with a
//! nontrivial dominant are ledgered and flip `nontrivial_found` instead of
//! being silently added. The Euler vector counts every regular subset with
//! sign `(-1)^(cohomological degree)` and is additive over filtrations, so
//! it remains meaningful even where the degree-by-degree census is not.
//!
//! The subset space may be partitioned into contiguous mask ranges handled
//! by independent workers; partial results merge associatively and the
//! assembled ledger is ordered by subset mask regardless of the partition.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::rootsys::{Factor, FactorTables};
use crate::series::Poly;
use crate::superalg::{ParabolicQuotient, Superalgebra};
use crate::weight::Weight;
use crate::{ratq, Error};

/// Hard bound on the subset space: `2^22` masks.
pub const MAX_CENSUS_ROOTS: usize = 22;

/// One regular subset in the ledger.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Contribution {
    /// Sorted indices into the root multiset the census ran over.
    pub subset: Vec<u16>,
    /// `|J|`, the exterior-power degree.
    pub lambda_degree: usize,
    /// Sum of the per-factor cohomological degrees.
    pub coh_degree: usize,
    /// Per-factor dominant representatives.
    pub dominant: Weight,
    /// Product of the per-factor Weyl dimensions.
    pub dim: u64,
    /// Whether every factor lands on the trivial character.
    pub trivial: bool,
}

/// Assembled census output.
#[derive(Clone, Debug)]
pub struct CensusResult {
    pub algebra: String,
    /// Sum of `t^(coh_degree)` over the trivial contributions.
    pub poincare: Poly,
    pub contributions: Vec<Contribution>,
    pub nontrivial_found: bool,
    pub family_valid: bool,
    /// Euler characteristic per exterior degree: `e_n = sum over regular
    /// |J| = n of (-1)^(coh) * dim`.
    pub euler: Vec<i64>,
    /// Which exterior degrees contribute to each cohomological degree.
    pub parity_ledger: BTreeMap<usize, BTreeSet<usize>>,
}

impl CensusResult {
    pub fn euler_total(&self) -> i64 {
        self.euler.iter().sum()
    }
}

/// Partial census over a contiguous mask range.
#[derive(Clone, Debug, Default)]
pub struct PartialCensus {
    pub trivial_by_degree: BTreeMap<usize, i64>,
    pub contributions: Vec<(u64, Contribution)>,
    pub nontrivial_found: bool,
    pub euler: Vec<i64>,
    pub parity: BTreeMap<usize, BTreeSet<usize>>,
}

/// Census over the mask range `lo..hi` of the given indexed root multiset.
pub fn census_range(
    factors: &[Factor],
    roots: &[Weight],
    lo: u64,
    hi: u64,
) -> Result<PartialCensus, Error> {
    let k = roots.len();
    if k > MAX_CENSUS_ROOTS {
        return Err(Error::TooManySubsets(k));
    }
    let full: u64 = 1u64 << k;
    assert!(lo <= hi && hi <= full, "mask range out of bounds");
    let tables: Vec<FactorTables> = factors.iter().map(FactorTables::new).collect();
    // doubled per-factor coordinates of each root
    let root2: Vec<Vec<Vec<i64>>> = roots
        .iter()
        .map(|w| {
            w.slices
                .iter()
                .map(|s| {
                    s.iter()
                        .map(|c| {
                            let d = c * crate::rat(2);
                            debug_assert_eq!(*d.denom(), 1);
                            d.to_integer()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut part = PartialCensus {
        euler: vec![0; k + 1],
        ..PartialCensus::default()
    };
    if lo >= hi {
        return Ok(part);
    }

    // mu2 = -2 rho(J) for the current mask, per factor slice
    let mut mu2: Vec<Vec<i64>> = factors
        .iter()
        .map(|f| vec![0i64; f.kind.coords()])
        .collect();
    #[allow(clippy::needless_range_loop)]
    for b in 0..k {
        if lo >> b & 1 == 1 {
            for (slice, r) in mu2.iter_mut().zip(&root2[b]) {
                for (x, c) in slice.iter_mut().zip(r) {
                    *x -= c;
                }
            }
        }
    }

    let mut mask = lo;
    loop {
        // evaluate all factors; bail out on the first singular one
        let mut coh = 0usize;
        let mut points: Vec<Vec<i64>> = Vec::with_capacity(factors.len());
        let mut singular = false;
        for (t, slice) in tables.iter().zip(&mu2) {
            match t.eval_doubled(slice) {
                None => {
                    singular = true;
                    break;
                }
                Some((len, point)) => {
                    coh += len;
                    points.push(point);
                }
            }
        }
        if !singular {
            let lambda_degree = mask.count_ones() as usize;
            let mut dim: u64 = 1;
            let mut trivial = true;
            for (t, p) in tables.iter().zip(&points) {
                dim = dim
                    .checked_mul(t.dim_from_dominant_point(p))
                    .expect("dimension product overflow");
                trivial &= t.is_trivial_dominant(p);
            }
            let sign = if coh.is_multiple_of(2) { 1i64 } else { -1 };
            part.euler[lambda_degree] += sign * dim as i64;
            if trivial {
                *part.trivial_by_degree.entry(coh).or_default() += 1;
            } else {
                part.nontrivial_found = true;
            }
            part.parity.entry(coh).or_default().insert(lambda_degree);
            let dominant = Weight::new(
                points
                    .iter()
                    .zip(&tables)
                    .map(|(p, t)| {
                        p.iter()
                            .zip(&t.rho2)
                            .map(|(x, r)| ratq(x - r, 2))
                            .collect()
                    })
                    .collect(),
            );
            let subset: Vec<u16> = (0..k as u16).filter(|b| mask >> b & 1 == 1).collect();
            part.contributions.push((
                mask,
                Contribution {
                    subset,
                    lambda_degree,
                    coh_degree: coh,
                    dominant,
                    dim,
                    trivial,
                },
            ));
        }
        if mask + 1 >= hi {
            break;
        }
        // toggle the roots that differ between mask and mask + 1
        let diff = mask ^ (mask + 1);
        let next = mask + 1;
        #[allow(clippy::needless_range_loop)]
        for b in 0..k {
            if diff >> b & 1 == 1 {
                let adding = next >> b & 1 == 1;
                for (slice, r) in mu2.iter_mut().zip(&root2[b]) {
                    for (x, c) in slice.iter_mut().zip(r) {
                        if adding {
                            *x -= c;
                        } else {
                            *x += c;
                        }
                    }
                }
            }
        }
        mask = next;
    }
    Ok(part)
}

/// Merge two partial censuses. Associative and order-independent up to the
/// final sort in [`assemble`].
pub fn merge(mut a: PartialCensus, mut b: PartialCensus) -> PartialCensus {
    for (d, c) in b.trivial_by_degree {
        *a.trivial_by_degree.entry(d).or_default() += c;
    }
    a.contributions.append(&mut b.contributions);
    a.nontrivial_found |= b.nontrivial_found;
    if a.euler.len() < b.euler.len() {
        a.euler.resize(b.euler.len(), 0);
    }
    for (i, e) in b.euler.iter().enumerate() {
        a.euler[i] += e;
    }
    for (d, set) in b.parity {
        a.parity.entry(d).or_default().extend(set);
    }
    a
}

/// Assemble a partial census (covering the full mask range) into the final
/// result, with a canonical subset-ordered ledger.
pub fn assemble(name: &str, family_valid: bool, num_roots: usize, part: PartialCensus) -> CensusResult {
    let mut contributions = part.contributions;
    contributions.sort_by_key(|(mask, _)| *mask);
    let max_deg = part.trivial_by_degree.keys().max().copied().unwrap_or(0);
    let mut coeffs = vec![0i64; max_deg + 1];
    for (d, c) in &part.trivial_by_degree {
        coeffs[*d] = *c;
    }
    let mut euler = part.euler;
    euler.resize(num_roots + 1, 0);
    CensusResult {
        algebra: String::from(name),
        poincare: Poly::from_coeffs(coeffs),
        contributions: contributions.into_iter().map(|(_, c)| c).collect(),
        nontrivial_found: part.nontrivial_found,
        family_valid,
        euler,
        parity_ledger: part.parity,
    }
}

/// The census over an arbitrary indexed root multiset of the entry.
pub fn census_of_roots(
    spec: &Superalgebra,
    roots: &[Weight],
) -> Result<CensusResult, Error> {
    let part = census_range(&spec.factors, roots, 0, 1u64 << roots.len())?;
    Ok(assemble(&spec.name, spec.family_valid, roots.len(), part))
}

/// The full census over the positive odd roots: assembles `p_{G,B}`.
pub fn census(spec: &Superalgebra) -> Result<CensusResult, Error> {
    census_of_roots(spec, &spec.pos_roots)
}

/// The census over the quotient roots of a parabolic: assembles `p_{G,P}`.
pub fn census_parabolic(
    spec: &Superalgebra,
    pq: &ParabolicQuotient,
) -> Result<CensusResult, Error> {
    census_of_roots(spec, &pq.quotient_roots)
}

/// Euler characteristics per exterior degree (valid for every family,
/// including those where the degree-by-degree census is not).
pub fn euler_characteristics(spec: &Superalgebra) -> Result<Vec<i64>, Error> {
    Ok(census(spec)?.euler)
}

/// For type-Q entries: does each cohomological degree receive contributions
/// from exactly one exterior degree? (For other families this is a no-op
/// returning true.)
pub fn parity_check_q(spec: &Superalgebra, result: &CensusResult) -> bool {
    use crate::superalg::Family;
    if !matches!(spec.family, Family::Q | Family::Psq) {
        return true;
    }
    result.parity_ledger.values().all(|set| set.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{catalog_lookup, embedding_specs, Family};

    fn poincare_of(family: Family, m: usize, n: usize) -> Poly {
        let spec = catalog_lookup(family, m, n).unwrap();
        census(&spec).unwrap().poincare
    }

    #[test]
    fn q2_census() {
        assert_eq!(poincare_of(Family::Q, 2, 0), Poly::from_coeffs(vec![1, 1]));
    }

    #[test]
    fn gl11_census_is_empty() {
        let spec = catalog_lookup(Family::Gl, 1, 1).unwrap();
        let res = census(&spec).unwrap();
        assert_eq!(res.poincare, Poly::one());
        assert_eq!(res.euler, vec![1]);
        assert!(!res.nontrivial_found);
    }

    #[test]
    fn p_family_censuses() {
        assert_eq!(poincare_of(Family::P, 2, 0), Poly::from_coeffs(vec![1, 1]));
        assert_eq!(
            poincare_of(Family::P, 3, 0),
            Poly::from_coeffs(vec![1, 0, 1])
        );
        let p4 = catalog_lookup(Family::P, 4, 0).unwrap();
        let res = census(&p4).unwrap();
        assert_eq!(res.poincare, Poly::from_coeffs(vec![1, 0, 3, 0, 3, 0, 1]));
        assert!(!res.nontrivial_found);
    }

    #[test]
    fn d21a_raw_census_and_euler() {
        let d = catalog_lookup(Family::D21Alpha, 0, 0).unwrap();
        let res = census(&d).unwrap();
        // raw trivial census overcounts: the true series is 1 + t^2
        assert_eq!(res.poincare, Poly::from_coeffs(vec![1, 1, 2]));
        assert_eq!(res.euler, vec![1, 0, 1, 0]);
        assert_eq!(res.euler_total(), 2);
        assert!(!res.family_valid);
    }

    #[test]
    fn q2_euler() {
        let q2 = catalog_lookup(Family::Q, 2, 0).unwrap();
        let res = census(&q2).unwrap();
        assert_eq!(res.euler, vec![1, -1]);
        assert_eq!(res.euler_total(), 0);
    }

    #[test]
    fn gl23_parabolic_census_is_one() {
        let g = catalog_lookup(Family::Gl, 2, 3).unwrap();
        let rows = embedding_specs(&g).unwrap();
        let res = census_parabolic(&g, &rows[0]).unwrap();
        assert_eq!(res.poincare, Poly::one());
    }

    #[test]
    fn osp44_mid_parabolic_census() {
        // ground truth for the gl(2|2) parabolic inside osp(4|4): 1 + t^2
        let o = catalog_lookup(Family::OspEven, 2, 2).unwrap();
        let rows = embedding_specs(&o).unwrap();
        let res = census_parabolic(&o, &rows[0]).unwrap();
        assert_eq!(res.poincare, Poly::from_coeffs(vec![1, 0, 1]));
    }

    #[test]
    fn osp42_mid_parabolic_census() {
        // the osp(2|2) parabolic inside osp(4|2) contributes 1 + t^2
        let o = catalog_lookup(Family::OspEven, 2, 1).unwrap();
        let rows = embedding_specs(&o).unwrap();
        let mid = rows.iter().find(|r| !r.within_pos).unwrap();
        let res = census_parabolic(&o, mid).unwrap();
        assert_eq!(res.poincare, Poly::from_coeffs(vec![1, 0, 1]));
    }

    #[test]
    fn merge_is_partition_invariant() {
        let p5 = catalog_lookup(Family::P, 5, 0).unwrap();
        let whole = census(&p5).unwrap();
        let k = p5.pos_roots.len();
        let full = 1u64 << k;
        for pieces in [2u64, 3, 5] {
            let mut acc = PartialCensus::default();
            let step = full / pieces + 1;
            let mut lo = 0;
            while lo < full {
                let hi = (lo + step).min(full);
                let part = census_range(&p5.factors, &p5.pos_roots, lo, hi).unwrap();
                acc = merge(acc, part);
                lo = hi;
            }
            let res = assemble(&p5.name, p5.family_valid, k, acc);
            assert_eq!(res.poincare, whole.poincare);
            assert_eq!(res.euler, whole.euler);
            assert_eq!(res.contributions, whole.contributions);
        }
    }

    #[test]
    fn census_refuses_oversized_subset_space() {
        let spec = catalog_lookup(Family::Gl, 2, 2).unwrap();
        let many = vec![spec.pos_roots[0].clone(); MAX_CENSUS_ROOTS + 1];
        assert!(matches!(
            census_of_roots(&spec, &many),
            Err(Error::TooManySubsets(_))
        ));
    }

    #[test]
    fn euler_shadow_holds_across_the_catalog() {
        // the trivial census at t = -1 equals the total Euler
        // characteristic for every entry, including those whose
        // degree-by-degree census overcounts
        for spec in crate::superalg::default_catalog() {
            let res = census(&spec).unwrap();
            assert_eq!(
                res.poincare.eval_signed(),
                res.euler_total(),
                "{}",
                spec.name
            );
        }
    }

    #[test]
    fn poincare_starts_at_one() {
        for (fam, m, n) in [
            (Family::Gl, 3, 2),
            (Family::OspOdd, 2, 2),
            (Family::Q, 4, 0),
            (Family::P, 5, 0),
        ] {
            let spec = catalog_lookup(fam, m, n).unwrap();
            let res = census(&spec).unwrap();
            assert_eq!(res.poincare.coeff(0), 1, "{}", spec.name);
        }
    }
}
