//! Catalog files: a JSON format mirroring the in-memory entry, with a
//! loader that re-validates every structural invariant. Built-in entries
//! re-export through [`entry_to_file`] and round-trip byte-identically.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use bbw_core::reflgroup::ReflectionGroupSpec;
use bbw_core::rootsys::{Factor, FactorKind};
use bbw_core::superalg::{validate, Family, PgDegrees, Superalgebra};
use bbw_core::weight::{omega_to_canonical, Basis, Weight};
use bbw_core::Rat;

#[derive(Serialize, Deserialize)]
pub struct CatalogFile {
    pub entries: Vec<EntryFile>,
}

#[derive(Serialize, Deserialize)]
pub struct EntryFile {
    pub name: String,
    pub family: String,
    pub params: [usize; 2],
    pub factors: Vec<FactorFile>,
    pub phi1: Vec<WeightFile>,
    pub f_roots: Vec<WeightFile>,
    pub neg_roots: Vec<WeightFile>,
    pub pos_roots: Vec<WeightFile>,
    pub functional: Vec<Vec<String>>,
    pub w1: GroupFile,
    pub s_param: usize,
    /// Generator degrees, or the string "derived".
    pub pg_degrees: PgFile,
    pub f1_torus_weights: Vec<WeightFile>,
    pub center_dirs: Vec<Vec<String>>,
    pub family_valid: bool,
}

#[derive(Serialize, Deserialize)]
pub struct FactorFile {
    pub kind: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "is_false")]
    pub trace_quotient: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
pub struct WeightFile {
    pub factors: Vec<SliceFile>,
}

#[derive(Serialize, Deserialize)]
pub struct SliceFile {
    pub basis: String,
    pub coords: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum PgFile {
    Derived(String),
    Stated(Vec<usize>),
}

fn rat_to_string(r: &Rat) -> String {
    format!("{r}")
}

fn rat_from_string(s: &str) -> Result<Rat> {
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().context("rational numerator")?;
        let q: i64 = q.trim().parse().context("rational denominator")?;
        if q == 0 {
            bail!("zero denominator in `{s}`");
        }
        Ok(Rat::new(p, q))
    } else {
        Ok(Rat::from_integer(s.trim().parse().context("integer coordinate")?))
    }
}

fn family_to_string(f: Family) -> String {
    f.label().to_string()
}

fn family_from_string(s: &str) -> Result<Family> {
    Ok(match s {
        "gl" => Family::Gl,
        "sl" => Family::Sl,
        "psl" => Family::Psl,
        "osp-even" => Family::OspEven,
        "osp-odd" => Family::OspOdd,
        "q" => Family::Q,
        "psq" => Family::Psq,
        "p" => Family::P,
        "D(2,1,a)" => Family::D21Alpha,
        "G(3)" => Family::G3,
        "F(4)" => Family::F4,
        other => bail!("unknown family `{other}`"),
    })
}

fn kind_to_strings(k: FactorKind) -> (String, usize) {
    match k {
        FactorKind::TypeA { n } => ("A".into(), n),
        FactorKind::TypeB { m } => ("B".into(), m),
        FactorKind::TypeC { n } => ("C".into(), n),
        FactorKind::TypeD { m } => ("D".into(), m),
        FactorKind::G2 => ("G2".into(), 2),
    }
}

fn kind_from_strings(kind: &str, rank: usize) -> Result<FactorKind> {
    Ok(match kind {
        "A" => FactorKind::TypeA { n: rank },
        "B" => FactorKind::TypeB { m: rank },
        "C" => FactorKind::TypeC { n: rank },
        "D" => FactorKind::TypeD { m: rank },
        "G2" => FactorKind::G2,
        other => bail!("unknown factor kind `{other}`"),
    })
}

/// The canonical display basis of a factor kind.
fn canonical_basis(kind: FactorKind) -> Basis {
    match kind {
        FactorKind::G2 => Basis::Omega,
        _ => Basis::Epsilon,
    }
}

pub fn weight_to_file(factors: &[Factor], w: &Weight) -> WeightFile {
    WeightFile {
        factors: w
            .slices
            .iter()
            .zip(factors)
            .map(|(slice, f)| SliceFile {
                basis: match canonical_basis(f.kind) {
                    Basis::Epsilon => "epsilon".into(),
                    Basis::Omega => "omega".into(),
                },
                coords: slice.iter().map(rat_to_string).collect(),
            })
            .collect(),
    }
}

pub fn weight_from_file(factors: &[Factor], wf: &WeightFile) -> Result<Weight> {
    if wf.factors.len() != factors.len() {
        bail!("weight has {} slices, expected {}", wf.factors.len(), factors.len());
    }
    let mut slices = Vec::new();
    for (sf, f) in wf.factors.iter().zip(factors) {
        let coords: Vec<Rat> = sf
            .coords
            .iter()
            .map(|s| rat_from_string(s))
            .collect::<Result<_>>()?;
        let canonical = match (sf.basis.as_str(), canonical_basis(f.kind)) {
            ("epsilon", Basis::Epsilon) | ("omega", Basis::Omega) => coords,
            ("omega", Basis::Epsilon) => {
                omega_to_canonical(f.kind, &coords).map_err(|e| anyhow!("{e}"))?
            }
            ("epsilon", Basis::Omega) => bail!("epsilon coordinates on an omega-basis factor"),
            (other, _) => bail!("unknown basis `{other}`"),
        };
        slices.push(canonical);
    }
    Ok(Weight::new(slices))
}

fn group_to_file(g: ReflectionGroupSpec) -> GroupFile {
    match g {
        ReflectionGroupSpec::Symmetric(n) => GroupFile {
            kind: "symmetric".into(),
            rank: n,
        },
        ReflectionGroupSpec::Hyperoctahedral(n) => GroupFile {
            kind: "hyperoctahedral".into(),
            rank: n,
        },
        ReflectionGroupSpec::Demihyperoctahedral(n) => GroupFile {
            kind: "demihyperoctahedral".into(),
            rank: n,
        },
    }
}

fn group_from_file(g: &GroupFile) -> Result<ReflectionGroupSpec> {
    Ok(match g.kind.as_str() {
        "symmetric" => ReflectionGroupSpec::Symmetric(g.rank),
        "hyperoctahedral" => ReflectionGroupSpec::Hyperoctahedral(g.rank),
        "demihyperoctahedral" => ReflectionGroupSpec::Demihyperoctahedral(g.rank),
        other => bail!("unknown reflection group `{other}`"),
    })
}

pub fn entry_to_file(spec: &Superalgebra) -> EntryFile {
    let wf = |w: &Weight| weight_to_file(&spec.factors, w);
    EntryFile {
        name: spec.name.clone(),
        family: family_to_string(spec.family),
        params: [spec.m, spec.n],
        factors: spec
            .factors
            .iter()
            .map(|f| {
                let (kind, rank) = kind_to_strings(f.kind);
                FactorFile {
                    kind,
                    rank,
                    trace_quotient: f.trace_quotient,
                }
            })
            .collect(),
        phi1: spec.phi1.iter().map(wf).collect(),
        f_roots: spec.f_roots.iter().map(wf).collect(),
        neg_roots: spec.neg_roots.iter().map(wf).collect(),
        pos_roots: spec.pos_roots.iter().map(wf).collect(),
        functional: spec
            .functional
            .iter()
            .map(|s| s.iter().map(rat_to_string).collect())
            .collect(),
        w1: group_to_file(spec.w1),
        s_param: spec.s_param,
        pg_degrees: match &spec.pg {
            PgDegrees::Stated(d) => PgFile::Stated(d.clone()),
            PgDegrees::Derived => PgFile::Derived("derived".into()),
        },
        f1_torus_weights: spec.f1_torus_weights.iter().map(wf).collect(),
        center_dirs: spec
            .center_dirs
            .iter()
            .map(|s| s.iter().map(rat_to_string).collect())
            .collect(),
        family_valid: spec.family_valid,
    }
}

pub fn entry_from_file(ef: &EntryFile) -> Result<Superalgebra> {
    let family = family_from_string(&ef.family)?;
    let factors: Vec<Factor> = ef
        .factors
        .iter()
        .map(|f| {
            kind_from_strings(&f.kind, f.rank).map(|kind| Factor {
                kind,
                trace_quotient: f.trace_quotient,
            })
        })
        .collect::<Result<_>>()?;
    let weights = |ws: &[WeightFile]| -> Result<Vec<Weight>> {
        ws.iter().map(|w| weight_from_file(&factors, w)).collect()
    };
    let rationals = |rows: &[Vec<String>]| -> Result<Vec<Vec<Rat>>> {
        rows.iter()
            .map(|r| r.iter().map(|s| rat_from_string(s)).collect())
            .collect()
    };
    let spec = Superalgebra {
        family,
        m: ef.params[0],
        n: ef.params[1],
        name: ef.name.clone(),
        phi1: weights(&ef.phi1)?,
        f_roots: weights(&ef.f_roots)?,
        neg_roots: weights(&ef.neg_roots)?,
        pos_roots: weights(&ef.pos_roots)?,
        functional: rationals(&ef.functional)?,
        w1: group_from_file(&ef.w1)?,
        s_param: ef.s_param,
        pg: match &ef.pg_degrees {
            PgFile::Stated(d) => PgDegrees::Stated(d.clone()),
            PgFile::Derived(tag) if tag == "derived" => PgDegrees::Derived,
            PgFile::Derived(other) => bail!("unknown pg_degrees tag `{other}`"),
        },
        f1_torus_weights: weights(&ef.f1_torus_weights)?,
        center_dirs: rationals(&ef.center_dirs)?,
        family_valid: ef.family_valid,
        factors,
    };
    validate(&spec).map_err(|e| anyhow!("entry `{}`: {e}", ef.name))?;
    Ok(spec)
}

pub fn serialize_catalog(specs: &[Superalgebra]) -> String {
    let file = CatalogFile {
        entries: specs.iter().map(entry_to_file).collect(),
    };
    serde_json::to_string_pretty(&file).expect("catalog serialization cannot fail")
}

pub fn load_catalog(text: &str) -> Result<Vec<Superalgebra>> {
    let file: CatalogFile = serde_json::from_str(text).context("parsing catalog file")?;
    file.entries.iter().map(entry_from_file).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bbw_core::superalg::catalog_lookup;

    #[test]
    fn builtin_q3_roundtrips_byte_identically() {
        let q3 = catalog_lookup(Family::Q, 3, 0).unwrap();
        let first = serialize_catalog(std::slice::from_ref(&q3));
        let loaded = load_catalog(&first).unwrap();
        assert_eq!(loaded.len(), 1);
        let second = serialize_catalog(&loaded);
        assert_eq!(first, second);
    }

    #[test]
    fn roundtrip_all_builtins() {
        for spec in bbw_core::superalg::default_catalog() {
            let text = serialize_catalog(std::slice::from_ref(&spec));
            let loaded = load_catalog(&text).unwrap();
            let again = serialize_catalog(&loaded);
            assert_eq!(text, again, "{}", spec.name);
        }
    }

    #[test]
    fn corrupted_partition_is_rejected() {
        let q2 = catalog_lookup(Family::Q, 2, 0).unwrap();
        let mut ef = entry_to_file(&q2);
        // swap the two sides of the partition: the functional now disagrees
        std::mem::swap(&mut ef.neg_roots, &mut ef.pos_roots);
        let text = serde_json::to_string(&CatalogFile { entries: vec![ef] }).unwrap();
        let err = load_catalog(&text).unwrap_err();
        assert!(format!("{err}").contains("partition"), "{err}");
    }
}
