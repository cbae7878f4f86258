//! JSON output schemas for the census and the verification report.

use serde_json::{json, Value};

use bbw_core::census::CensusResult;
use bbw_core::series::Poly;
use bbw_core::superalg::Superalgebra;
use bbw_core::verify::CheckReport;
use bbw_core::weight::Weight;

use crate::catfile::weight_to_file;

pub fn poly_json(p: &Poly) -> Value {
    json!({ "coeffs": p.coeffs() })
}

pub fn weight_json(spec: &Superalgebra, w: &Weight) -> Value {
    let wf = weight_to_file(&spec.factors, w);
    json!({
        "factors": wf.factors.iter().map(|s| json!({
            "basis": s.basis,
            "coords": s.coords,
        })).collect::<Vec<_>>()
    })
}

pub fn census_json(spec: &Superalgebra, res: &CensusResult, ledger: bool) -> Value {
    let mut out = json!({
        "algebra": res.algebra,
        "poincare": poly_json(&res.poincare),
        "poincare_text": format!("{}", res.poincare),
        "family_valid": res.family_valid,
        "nontrivial_found": res.nontrivial_found,
        "euler": res.euler,
    });
    if ledger {
        out["contributions"] = Value::Array(
            res.contributions
                .iter()
                .map(|c| {
                    json!({
                        "J": c.subset,
                        "n": c.lambda_degree,
                        "j": c.coh_degree,
                        "dim": c.dim,
                        "trivial": c.trivial,
                        "dominant": weight_json(spec, &c.dominant),
                    })
                })
                .collect(),
        );
    }
    out
}

pub fn roots_json(spec: &Superalgebra) -> Value {
    let ws = |roots: &[Weight]| -> Vec<Value> {
        roots.iter().map(|w| weight_json(spec, w)).collect()
    };
    json!({
        "algebra": spec.name,
        "detecting": ws(&spec.f_roots),
        "nilradical": ws(&spec.neg_roots),
        "quotient": ws(&spec.pos_roots),
        "hyperplane": spec.functional.iter()
            .map(|s| s.iter().map(|c| format!("{c}")).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn reports_json(reports: &[CheckReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "check_id": r.check_id,
                    "algebra": r.algebra,
                    "expected": r.expected,
                    "computed": r.computed,
                    "provenance": format!("{}", r.provenance),
                    "status": format!("{}", r.status),
                    "note": r.note,
                })
            })
            .collect(),
    )
}
