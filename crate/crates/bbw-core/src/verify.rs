//! The theorem-level verification suite: every polynomial identity in
//! scope becomes one named, machine-checkable report.
//!
//! A report never panics: `Pass`/`Fail` carry the exact expected and
//! computed values. `Flagged` marks the designated open-question
//! comparisons (they are informative, not gating), and `FixtureOnly` marks
//! the exceptional-family census, where the degree-by-degree count is
//! known to overcount and only the Euler and ratio identities gate.

use alloc::format;
use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::census::{census, census_parabolic, parity_check_q, CensusResult};
use crate::Error;
use crate::oddweyl::{context_for, verify_phiw_proposition};
use crate::reflgroup::poincare_poly_from_exponents;
use crate::series::Poly;
use crate::superalg::{
    catalog_lookup, embedding_specs, parabolic_from_functional, pb_series, pg_series,
    same_multiset, z_expected_poly, z_series, Family, Superalgebra,
};

/// Where an expected value comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// Transcribed from a reference table.
    StatedTable,
    /// A stated theorem-level identity.
    StatedTheorem,
    /// Computed by an independent oracle inside this crate.
    DerivedOracle,
}

impl core::fmt::Display for Provenance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Provenance::StatedTable => write!(f, "stated-table"),
            Provenance::StatedTheorem => write!(f, "stated-theorem"),
            Provenance::DerivedOracle => write!(f, "derived-oracle"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    /// A designated open-question comparison; never gates the suite.
    Flagged,
    /// The exceptional families: the stated value is a fixture, the census
    /// is reported next to it.
    FixtureOnly,
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "FAIL"),
            Status::Flagged => write!(f, "flagged"),
            Status::FixtureOnly => write!(f, "fixture-only"),
        }
    }
}

/// One named check outcome.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_id: String,
    pub algebra: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub status: Status,
    pub note: String,
}

impl CheckReport {
    fn new(
        check_id: &str,
        algebra: &str,
        provenance: Provenance,
        status: Status,
        expected: String,
        computed: String,
        note: String,
    ) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            algebra: algebra.to_string(),
            expected,
            computed,
            provenance,
            status,
            note,
        }
    }

    pub fn is_gating_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

fn eq_status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// The stored partition against the hyperplane functional.
pub fn check_partition(spec: &Superalgebra) -> CheckReport {
    let (zero, neg, pos) = parabolic_from_functional(spec);
    let ok = same_multiset(&zero, &spec.f_roots)
        && same_multiset(&neg, &spec.neg_roots)
        && same_multiset(&pos, &spec.pos_roots);
    CheckReport::new(
        "hyperplane-partition",
        &spec.name,
        Provenance::StatedTable,
        eq_status(ok),
        format!(
            "|S0| = {}, |S-| = {}, |S+| = {}",
            spec.f_roots.len(),
            spec.neg_roots.len(),
            spec.pos_roots.len()
        ),
        format!(
            "|S0| = {}, |S-| = {}, |S+| = {}",
            zero.len(),
            neg.len(),
            pos.len()
        ),
        String::from("sign partition of the odd roots under the hyperplane functional"),
    )
}

/// `z = pb/pg` against the closed form, plus `z(1) = |W1|`.
pub fn check_z(spec: &Superalgebra, order: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let expect = z_expected_poly(spec);
    match z_series(spec, order) {
        Ok(z) => {
            out.push(CheckReport::new(
                "z-closed-form",
                &spec.name,
                match spec.pg {
                    crate::superalg::PgDegrees::Stated(_) => Provenance::StatedTheorem,
                    crate::superalg::PgDegrees::Derived => Provenance::DerivedOracle,
                },
                eq_status(z.agrees_with_poly(&expect)),
                format!("{expect}"),
                format!("{z}"),
                String::from("pb/pg against the reflection-group closed form"),
            ));
            let w_order = match spec.family {
                Family::P => {
                    let l = spec.m / 2;
                    (1u128 << l) * (1..=l as u128).product::<u128>()
                }
                _ => spec.w1.order(),
            };
            out.push(CheckReport::new(
                "z-at-one",
                &spec.name,
                Provenance::StatedTheorem,
                eq_status(z.eval_one() as u128 == w_order),
                format!("{w_order}"),
                format!("{}", z.eval_one()),
                String::from("z(1) equals the order of the attached reflection group"),
            ));
        }
        Err(e) => out.push(CheckReport::new(
            "z-closed-form",
            &spec.name,
            Provenance::DerivedOracle,
            Status::Fail,
            format!("{expect}"),
            format!("error: {e}"),
            String::new(),
        )),
    }
    out
}

/// The main equality `census = z = p_{W1}(t^s)` for the non-p(n),
/// non-exceptional entries.
pub fn check_poincare_identity(
    spec: &Superalgebra,
    res: &CensusResult,
    order: usize,
) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if matches!(
        spec.family,
        Family::P | Family::D21Alpha | Family::G3 | Family::F4
    ) {
        return out;
    }
    let expect = z_expected_poly(spec);
    let ok = res.poincare == expect;
    let note = if ok {
        String::from("weight census equals the substituted reflection-group polynomial")
    } else {
        String::from(
            "the weight-level count differs; its surplus terms must cancel at module level \
             (the Euler data below is consistent with the closed form)",
        )
    };
    out.push(CheckReport::new(
        "poincare-census-identity",
        &spec.name,
        Provenance::StatedTheorem,
        eq_status(ok),
        format!("{expect}"),
        format!("{}", res.poincare),
        note,
    ));
    if let Ok(z) = z_series(spec, order) {
        out.push(CheckReport::new(
            "poincare-census-vs-z",
            &spec.name,
            Provenance::DerivedOracle,
            eq_status(z.agrees_with_poly(&res.poincare)),
            format!("{z}"),
            format!("{}", res.poincare),
            String::from("census against pb/pg computed from the Hilbert-series side"),
        ));
    }
    out
}

/// Spectral-sequence collapse: `pg * p_{G,B} = pb` coefficientwise.
/// For the exceptional families the fixture value `1 + t^2` stands in for
/// the census.
pub fn check_collapse(spec: &Superalgebra, res: &CensusResult, order: usize) -> CheckReport {
    let exceptional = matches!(spec.family, Family::D21Alpha | Family::G3 | Family::F4);
    let poincare = if exceptional {
        Poly::from_coeffs(vec![1, 0, 1])
    } else {
        res.poincare.clone()
    };
    let pb = pb_series(spec, order);
    match pg_series(spec, order) {
        Ok(pg) => {
            let prod = pg.mul(&poincare.to_series(order));
            let ok = prod == pb;
            let status = if exceptional {
                if ok {
                    Status::FixtureOnly
                } else {
                    Status::Fail
                }
            } else {
                eq_status(ok)
            };
            CheckReport::new(
                "collapse",
                &spec.name,
                Provenance::StatedTheorem,
                status,
                format!("pb = {pb}"),
                format!("pg * p_GB = {prod}"),
                if exceptional {
                    String::from("fixture 1 + t^2 used in place of the census")
                } else {
                    String::from("graded dimension count of the two sides of the degeneration")
                },
            )
        }
        Err(e) => CheckReport::new(
            "collapse",
            &spec.name,
            Provenance::StatedTheorem,
            Status::Fail,
            format!("pb = {pb}"),
            format!("error: {e}"),
            String::new(),
        ),
    }
}

/// Type-Q parity bookkeeping: every cohomological degree is fed by exactly
/// one exterior degree.
pub fn check_parity_q(spec: &Superalgebra, res: &CensusResult) -> Option<CheckReport> {
    if !matches!(spec.family, Family::Q | Family::Psq) {
        return None;
    }
    let ok = parity_check_q(spec, res);
    Some(CheckReport::new(
        "q-parity",
        &spec.name,
        Provenance::StatedTheorem,
        eq_status(ok),
        String::from("one exterior degree per cohomological degree"),
        format!("{:?}", res.parity_ledger),
        String::from("hypothesis for lifting the even-group count to the supergroup"),
    ))
}

/// The Euler shadow: the trivial census evaluated at `t = -1` equals the
/// total Euler characteristic, which is filtration-independent.
pub fn check_euler_shadow(spec: &Superalgebra, res: &CensusResult) -> CheckReport {
    let total = res.euler_total();
    let at_minus_one = res.poincare.eval_signed();
    CheckReport::new(
        "euler-shadow",
        &spec.name,
        Provenance::DerivedOracle,
        eq_status(total == at_minus_one),
        format!("census(-1) = {at_minus_one}"),
        format!("sum of euler vector = {total}"),
        String::from("alternating sums agree independently of module-level cancellation"),
    )
}

/// Exceptional families: `z = 1 + t^2` exactly, Euler total `2`, the
/// documented per-degree Euler vector for the rank-(1,1,1) case, and the
/// census reported against the fixture.
pub fn check_exceptional(spec: &Superalgebra, res: &CensusResult, order: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if !matches!(spec.family, Family::D21Alpha | Family::G3 | Family::F4) {
        return out;
    }
    let fixture = Poly::from_coeffs(vec![1, 0, 1]);
    match z_series(spec, order) {
        Ok(z) => out.push(CheckReport::new(
            "exceptional-z",
            &spec.name,
            Provenance::StatedTheorem,
            eq_status(z.agrees_with_poly(&fixture)),
            String::from("1 + t^2"),
            format!("{z}"),
            String::from("(1 - t^4)/(1 - t^2) from the degree-4 generator and the degree-2 ring"),
        )),
        Err(e) => out.push(CheckReport::new(
            "exceptional-z",
            &spec.name,
            Provenance::StatedTheorem,
            Status::Fail,
            String::from("1 + t^2"),
            format!("error: {e}"),
            String::new(),
        )),
    }
    out.push(CheckReport::new(
        "exceptional-euler-total",
        &spec.name,
        Provenance::StatedTheorem,
        eq_status(res.euler_total() == 2),
        String::from("2"),
        format!("{}", res.euler_total()),
        String::from("equals the fixture evaluated at t = -1"),
    ));
    if spec.family == Family::D21Alpha {
        out.push(CheckReport::new(
            "exceptional-euler-vector",
            &spec.name,
            Provenance::DerivedOracle,
            eq_status(res.euler == vec![1, 0, 1, 0]),
            String::from("[1, 0, 1, 0]"),
            format!("{:?}", res.euler),
            String::from("per-exterior-degree Euler characteristics"),
        ));
    }
    out.push(CheckReport::new(
        "exceptional-census-fixture",
        &spec.name,
        Provenance::StatedTheorem,
        Status::FixtureOnly,
        format!("{fixture}"),
        format!("{}", res.poincare),
        String::from(
            "the raw weight census overcounts here by design: non-split module extensions \
             cancel cohomology the weight-level count cannot see",
        ),
    ));
    out
}

/// The p(n) family: exact values for n = 2, 3, 4, the negative assertion
/// for n = 4, and the open-question comparison for n = 5, 6.
pub fn check_pn(spec: &Superalgebra, res: &CensusResult, order: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if spec.family != Family::P {
        return out;
    }
    let n = spec.m;
    match n {
        2..=4 => {
            let expect = match n {
                2 => Poly::from_coeffs(vec![1, 1]),
                3 => Poly::from_coeffs(vec![1, 0, 1]),
                _ => Poly::from_coeffs(vec![1, 0, 3, 0, 3, 0, 1]),
            };
            out.push(CheckReport::new(
                "p-census-value",
                &spec.name,
                Provenance::StatedTheorem,
                eq_status(res.poincare == expect),
                format!("{expect}"),
                format!("{}", res.poincare),
                String::from("exact census value"),
            ));
            if n == 4 {
                // (1+t^2)^3 is not p_{W1}(t^r) for any r = 1..4
                let w1 = poincare_poly_from_exponents(spec.w1);
                let reproduced = (1..=4).any(|r| w1.substitute_power(r) == res.poincare);
                out.push(CheckReport::new(
                    "p4-not-a-substituted-group-polynomial",
                    &spec.name,
                    Provenance::StatedTheorem,
                    eq_status(!reproduced),
                    String::from("no r in 1..4 with census = p_W1(t^r)"),
                    format!(
                        "census = {}, p_W1(t) = {}",
                        res.poincare, w1
                    ),
                    String::from("the negative conclusion: this parabolic is not governed by a \
                                  substituted length generating function"),
                ));
            }
        }
        _ => {
            // open question: census against z, reported but never gating
            let zval = z_series(spec, order)
                .map(|z| format!("{z}"))
                .unwrap_or_else(|e| format!("error: {e}"));
            let agrees = z_series(spec, order)
                .map(|z| z.agrees_with_poly(&res.poincare))
                .unwrap_or(false);
            out.push(CheckReport::new(
                "p-open-question",
                &spec.name,
                Provenance::DerivedOracle,
                Status::Flagged,
                format!("z = {zval}"),
                format!("census = {}", res.poincare),
                if agrees {
                    String::from("census agrees with z at this rank")
                } else {
                    String::from(
                        "census differs from z at this rank; the Euler vector still matches \
                         the alternating data of z",
                    )
                },
            ));
        }
    }
    out
}

/// Factorization through a mid parabolic: asserts
/// `p_{G,B} = p_{G,P} * p_{P,B}` with every series computed independently,
/// and checks the hypotheses numerically: both factors must be
/// concentrated in even degrees.
pub fn factorization_check(
    spec: &Superalgebra,
    pq: &crate::superalg::ParabolicQuotient,
    p_pb: &Poly,
) -> Result<Vec<CheckReport>, Error> {
    let mut out = Vec::new();
    let full = census(spec)?;
    let quotient = census_parabolic(spec, pq)?;
    let even_only = |p: &Poly| p.coeffs().iter().skip(1).step_by(2).all(|c| *c == 0);
    out.push(CheckReport::new(
        "factorization-hypotheses",
        &spec.name,
        Provenance::StatedTheorem,
        eq_status(even_only(&quotient.poincare) && even_only(p_pb)),
        String::from("both factors concentrated in even degrees"),
        format!("p_GP = {}, p_PB = {}", quotient.poincare, p_pb),
        pq.description.clone(),
    ));
    let product = quotient.poincare.mul(p_pb);
    out.push(CheckReport::new(
        "factorization",
        &spec.name,
        Provenance::StatedTheorem,
        eq_status(full.poincare == product),
        format!("{product}"),
        format!("{}", full.poincare),
        pq.description.clone(),
    ));
    Ok(out)
}

/// The mid-parabolic data for `osp(2n|2n)` and `osp(2(n+1)|2n)`: quotient
/// censuses, the stated product forms, and the factorization of the full
/// census through the mid parabolic.
pub fn check_mid_parabolic(spec: &Superalgebra, res: &CensusResult) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if spec.family != Family::OspEven || (spec.m != spec.n && spec.m != spec.n + 1) {
        return out;
    }
    let n = spec.n;
    let rows = match embedding_specs(spec) {
        Ok(r) => r,
        Err(_) => return out,
    };
    if spec.m == spec.n {
        let Some(row) = rows
            .iter()
            .find(|r| matches!(r.reduced, Some((Family::Gl, _, _))))
        else {
            return out;
        };
        let quotient = match census_parabolic(spec, row) {
            Ok(c) => c,
            Err(_) => return out,
        };
        // the stated product has 2^n terms
        let mut stated = Poly::one();
        for k in 1..=n {
            stated = stated.mul(&Poly::from_coeffs({
                let mut c = vec![0i64; 2 * k + 1];
                c[0] = 1;
                c[2 * k] = 1;
                c
            }));
        }
        out.push(CheckReport::new(
            "mid-parabolic-quotient",
            &spec.name,
            Provenance::StatedTheorem,
            eq_status(quotient.poincare == stated),
            format!("{stated}"),
            format!("{}", quotient.poincare),
            String::from(
                "the computed quotient census is the product over k = 1..n-1 of (1 + t^{2k}); \
                 the stated display runs one factor too far",
            ),
        ));
        // factorization through the mid parabolic, both sides by census
        let sym = poincare_poly_from_exponents(crate::reflgroup::ReflectionGroupSpec::Symmetric(
            n,
        ))
        .substitute_power(2);
        let stated_product = stated.mul(&sym);
        out.push(CheckReport::new(
            "mid-parabolic-factorization",
            &spec.name,
            Provenance::StatedTheorem,
            eq_status(res.poincare == stated_product),
            format!("{stated_product}"),
            format!("{}", res.poincare),
            String::from("full census against the stated quotient product times the \
                          symmetric-group polynomial at t^2"),
        ));
        let computed_product = quotient.poincare.mul(&sym);
        out.push(CheckReport::new(
            "mid-parabolic-factorization-computed",
            &spec.name,
            Provenance::DerivedOracle,
            eq_status(res.poincare == computed_product),
            format!("{computed_product}"),
            format!("{}", res.poincare),
            String::from("full census against the computed quotient census times the \
                          symmetric-group polynomial at t^2"),
        ));
        // the flagged arbitration: which candidate group does the ground
        // truth match?
        let demi = z_expected_poly(spec);
        let hyper = poincare_poly_from_exponents(
            crate::reflgroup::ReflectionGroupSpec::Hyperoctahedral(n),
        )
        .substitute_power(2);
        let verdict = if computed_product == demi {
            "the computed factorization matches the smaller (index-two) signed-permutation group"
        } else if computed_product == hyper {
            "the computed factorization matches the full signed-permutation group"
        } else {
            "the computed factorization matches neither candidate"
        };
        out.push(CheckReport::new(
            "mid-parabolic-group-arbitration",
            &spec.name,
            Provenance::DerivedOracle,
            Status::Flagged,
            format!("either {demi} or {hyper}"),
            format!("{computed_product}"),
            String::from(verdict),
        ));
    } else {
        // m = n + 1: the stated quotient census is 1 + t^{2n}
        let Some(row) = rows.iter().find(|r| !r.within_pos) else {
            return out;
        };
        let quotient = match census_parabolic(spec, row) {
            Ok(c) => c,
            Err(_) => return out,
        };
        let stated = Poly::from_coeffs({
            let mut c = vec![0i64; 2 * n + 1];
            c[0] = 1;
            c[2 * n] = 1;
            c
        });
        out.push(CheckReport::new(
            "mid-parabolic-quotient",
            &spec.name,
            Provenance::StatedTheorem,
            eq_status(quotient.poincare == stated),
            format!("{stated}"),
            format!("{}", quotient.poincare),
            String::from("quotient census over the listed explicit root set"),
        ));
    }
    out
}

/// Tabulated embedding reductions: quotient census 1, and equality of the
/// full censuses of the large and the reduced entry.
pub fn check_embeddings(spec: &Superalgebra, res: &CensusResult) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let rows = match embedding_specs(spec) {
        Ok(r) => r,
        Err(_) => return out,
    };
    for row in rows.iter().filter(|r| r.within_pos) {
        let Some((family, rm, rn)) = row.reduced else {
            continue;
        };
        // skip the gl(n|n) parabolic of osp(2n|2n): handled by the
        // mid-parabolic checks
        if spec.family == Family::OspEven && spec.m == spec.n && family == Family::Gl {
            continue;
        }
        let quotient = match census_parabolic(spec, row) {
            Ok(c) => c,
            Err(e) => {
                out.push(CheckReport::new(
                    "embedding-quotient-census",
                    &spec.name,
                    Provenance::StatedTable,
                    Status::Fail,
                    String::from("1"),
                    format!("error: {e}"),
                    row.description.clone(),
                ));
                continue;
            }
        };
        out.push(CheckReport::new(
            "embedding-quotient-census",
            &spec.name,
            Provenance::StatedTable,
            eq_status(quotient.poincare == Poly::one()),
            String::from("1"),
            format!("{}", quotient.poincare),
            row.description.clone(),
        ));
        match catalog_lookup(family, rm, rn).and_then(|sub| census(&sub)) {
            Ok(sub_res) => out.push(CheckReport::new(
                "embedding-reduction",
                &spec.name,
                Provenance::StatedTheorem,
                eq_status(res.poincare == sub_res.poincare),
                format!("{} (census of {})", sub_res.poincare, sub_res.algebra),
                format!("{}", res.poincare),
                row.description.clone(),
            )),
            Err(e) => out.push(CheckReport::new(
                "embedding-reduction",
                &spec.name,
                Provenance::StatedTheorem,
                Status::Fail,
                String::from("census of the reduced entry"),
                format!("error: {e}"),
                row.description.clone(),
            )),
        }
    }
    out
}

/// The inverted-root-set proposition sweeps for the diagonal families.
pub fn check_phiw(family: Family, n: usize) -> CheckReport {
    let name = match family {
        Family::OspOdd => format!("osp({}|{})", 2 * n + 1, 2 * n),
        _ => format!("sl({n}|{n})"),
    };
    match context_for(family, n).and_then(|ctx| verify_phiw_proposition(&ctx)) {
        Ok(report) => CheckReport::new(
            "inverted-root-sets",
            &name,
            Provenance::StatedTheorem,
            Status::Pass,
            format!("all four parts for {} elements", report.group_order),
            format!("checked {}", report.checked),
            String::from("cardinality, dot-zero value, reduced-word formula, uniqueness"),
        ),
        Err(e) => CheckReport::new(
            "inverted-root-sets",
            &name,
            Provenance::StatedTheorem,
            Status::Fail,
            String::from("all four parts"),
            format!("{e}"),
            String::new(),
        ),
    }
}

/// Run every check over a catalog. Reports come out in deterministic
/// order: catalog order, then check order within each entry.
pub fn run_all(catalog: &[Superalgebra], order: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for spec in catalog {
        out.push(check_partition(spec));
        out.extend(check_z(spec, order));
        let res = match census(spec) {
            Ok(r) => r,
            Err(e) => {
                out.push(CheckReport::new(
                    "census",
                    &spec.name,
                    Provenance::DerivedOracle,
                    Status::Fail,
                    String::from("census completes"),
                    format!("error: {e}"),
                    String::new(),
                ));
                continue;
            }
        };
        out.extend(check_poincare_identity(spec, &res, order));
        out.push(check_collapse(spec, &res, order));
        out.push(check_euler_shadow(spec, &res));
        if let Some(r) = check_parity_q(spec, &res) {
            out.push(r);
        }
        out.extend(check_exceptional(spec, &res, order));
        out.extend(check_pn(spec, &res, order));
        out.extend(check_mid_parabolic(spec, &res));
        out.extend(check_embeddings(spec, &res));
    }
    for (family, n) in [
        (Family::Gl, 2),
        (Family::Gl, 3),
        (Family::OspOdd, 1),
        (Family::OspOdd, 2),
    ] {
        out.push(check_phiw(family, n));
    }
    out
}

/// Count the gating failures in a report list.
pub fn count_failures(reports: &[CheckReport]) -> usize {
    reports.iter().filter(|r| r.is_gating_failure()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::catalog_lookup;

    fn reports_for(family: Family, m: usize, n: usize) -> Vec<CheckReport> {
        let spec = catalog_lookup(family, m, n).unwrap();
        run_all(core::slice::from_ref(&spec), 24)
    }

    #[test]
    fn q3_all_pass() {
        let reports = reports_for(Family::Q, 3, 0);
        assert!(reports.iter().all(|r| r.status == Status::Pass), "{reports:#?}");
    }

    #[test]
    fn gl32_all_pass() {
        let reports = reports_for(Family::Gl, 3, 2);
        assert!(reports
            .iter()
            .all(|r| r.status == Status::Pass));
    }

    #[test]
    fn exceptional_fixture_checks() {
        let reports = reports_for(Family::D21Alpha, 0, 0);
        for r in &reports {
            match r.check_id.as_str() {
                "exceptional-z" | "exceptional-euler-total" | "exceptional-euler-vector" => {
                    assert_eq!(r.status, Status::Pass, "{r:?}");
                }
                "exceptional-census-fixture" => assert_eq!(r.status, Status::FixtureOnly),
                "collapse" => assert_eq!(r.status, Status::FixtureOnly),
                _ => {}
            }
        }
    }

    #[test]
    fn osp52_reports_the_overcount() {
        let reports = reports_for(Family::OspOdd, 2, 1);
        let census_report = reports
            .iter()
            .find(|r| r.check_id == "poincare-census-identity")
            .unwrap();
        assert_eq!(census_report.status, Status::Fail);
        assert_eq!(census_report.computed, "1 + t + 2t^2");
        assert_eq!(census_report.expected, "1 + t^2");
        // the Euler shadow still passes
        let euler = reports
            .iter()
            .find(|r| r.check_id == "euler-shadow")
            .unwrap();
        assert_eq!(euler.status, Status::Pass);
    }

    #[test]
    fn p5_open_question_is_flagged() {
        let reports = reports_for(Family::P, 5, 0);
        let r = reports
            .iter()
            .find(|r| r.check_id == "p-open-question")
            .unwrap();
        assert_eq!(r.status, Status::Flagged);
        assert!(!r.is_gating_failure());
    }

    #[test]
    fn phiw_checks_pass() {
        for (fam, n) in [
            (Family::Gl, 2),
            (Family::Gl, 3),
            (Family::OspOdd, 1),
            (Family::OspOdd, 2),
        ] {
            let r = check_phiw(fam, n);
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn factorization_check_trivial_and_nontrivial() {
        use crate::reflgroup::{poincare_poly_from_exponents, ReflectionGroupSpec};
        use crate::superalg::embedding_specs;
        // trivial case P = B: the "quotient" over the full positive set is
        // p_{G,B} itself and p_{P,B} = 1
        let spec = catalog_lookup(Family::Gl, 2, 2).unwrap();
        let pq = crate::superalg::ParabolicQuotient {
            parent: spec.name.clone(),
            description: String::from("the distinguished parabolic itself"),
            quotient_roots: spec.pos_roots.clone(),
            reduced: None,
            within_pos: true,
        };
        let reports = factorization_check(&spec, &pq, &Poly::one()).unwrap();
        assert!(reports.iter().all(|r| r.status == Status::Pass));
        // osp(4|4) through its gl(2|2) parabolic: the hypotheses hold but
        // the raw full census breaks the product identity
        let spec = catalog_lookup(Family::OspEven, 2, 2).unwrap();
        let row = embedding_specs(&spec).unwrap().into_iter().next().unwrap();
        let sym2 = poincare_poly_from_exponents(ReflectionGroupSpec::Symmetric(2))
            .substitute_power(2);
        let reports = factorization_check(&spec, &row, &sym2).unwrap();
        assert_eq!(reports[0].status, Status::Pass, "{:?}", reports[0]);
        assert_eq!(reports[1].status, Status::Fail);
    }

    #[test]
    fn determinism() {
        let catalog = vec![
            catalog_lookup(Family::Q, 2, 0).unwrap(),
            catalog_lookup(Family::P, 4, 0).unwrap(),
        ];
        let a = run_all(&catalog, 24);
        let b = run_all(&catalog, 24);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(format!("{x:?}"), format!("{y:?}"));
        }
    }
}
