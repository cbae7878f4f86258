//! Human-readable output: symbolic roots, the four reference tables in
//! Markdown and LaTeX, and the verification report.

use std::fmt::Write as _;

use bbw_core::census::CensusResult;
use bbw_core::reflgroup::describe;
use bbw_core::rootsys::FactorKind;
use bbw_core::superalg::{pb_series, z_expected_poly, Family, PgDegrees, Superalgebra};
use bbw_core::verify::CheckReport;
use bbw_core::weight::{canonical_to_omega, Weight};
use bbw_core::Rat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Markdown,
    Latex,
    Json,
}

/// Coordinate symbols per factor slice: `e`/`d` for the classical pairs,
/// `w` for omega-basis slices.
fn slice_symbol(spec: &Superalgebra, idx: usize) -> (&'static str, bool) {
    // (symbol, use omega display)
    match spec.family {
        Family::G3 => [("w", true), ("e", false)][idx],
        Family::F4 => [("w", true), ("e", false)][idx],
        Family::D21Alpha => ("e", false),
        _ => {
            if idx == 0 {
                ("e", false)
            } else {
                ("d", false)
            }
        }
    }
}

fn render_term(out: &mut String, coef: Rat, sym: &str, index: Option<usize>, first: &mut bool) {
    if coef == Rat::from_integer(0) {
        return;
    }
    let sign_prefix = if coef < Rat::from_integer(0) { "-" } else { "+" };
    if *first {
        if sign_prefix == "-" {
            out.push('-');
        }
        *first = false;
    } else {
        out.push_str(sign_prefix);
    }
    let a = if coef < Rat::from_integer(0) { -coef } else { coef };
    if a != Rat::from_integer(1) {
        let _ = write!(out, "{a}");
    }
    out.push_str(sym);
    if let Some(i) = index {
        let _ = write!(out, "{}", i + 1);
    }
}

/// Symbolic rendering of a weight, e.g. `e1-d2`, `d1`, `(w1-w2, -e)`.
pub fn weight_symbolic(spec: &Superalgebra, w: &Weight) -> String {
    let multi =
        matches!(spec.family, Family::D21Alpha | Family::G3 | Family::F4);
    let mut parts = Vec::new();
    for (idx, slice) in w.slices.iter().enumerate() {
        let (sym, omega) = slice_symbol(spec, idx);
        let coords: Vec<Rat> = if omega {
            match spec.factors[idx].kind {
                FactorKind::G2 => slice.clone(),
                kind => canonical_to_omega(kind, slice).unwrap_or_else(|_| slice.clone()),
            }
        } else {
            slice.clone()
        };
        let singleton = coords.len() == 1;
        let mut text = String::new();
        let mut first = true;
        for (i, c) in coords.iter().enumerate() {
            render_term(
                &mut text,
                *c,
                sym,
                if singleton && multi { None } else { Some(i) },
                &mut first,
            );
        }
        if text.is_empty() {
            text.push('0');
        }
        parts.push(text);
    }
    if multi {
        format!("({})", parts.join(", "))
    } else {
        let joined: String = parts
            .iter()
            .filter(|p| p.as_str() != "0")
            .cloned()
            .collect::<Vec<_>>()
            .join("+");
        let cleaned = joined.replace("+-", "-");
        if cleaned.is_empty() {
            "0".into()
        } else {
            cleaned
        }
    }
}

pub fn weight_list(spec: &Superalgebra, ws: &[Weight]) -> String {
    if ws.is_empty() {
        return "{}".into();
    }
    let items: Vec<String> = ws.iter().map(|w| weight_symbolic(spec, w)).collect();
    format!("{{{}}}", items.join(", "))
}

/// The hyperplane functional with its sample coefficients, e.g.
/// `2(E1+D1) + 1(E2+D2)`.
pub fn functional_symbolic(spec: &Superalgebra) -> String {
    let mut out = String::new();
    let mut first = true;
    let tuple = matches!(spec.family, Family::D21Alpha | Family::G3 | Family::F4);
    let mut global = 0usize;
    for (idx, coeffs) in spec.functional.iter().enumerate() {
        let sym = match (spec.family, idx) {
            (Family::G3 | Family::F4, 0) => "L",
            (Family::D21Alpha, _) => "E",
            (Family::G3 | Family::F4, _) => "E",
            (_, 0) => "E",
            _ => "D",
        };
        for (i, c) in coeffs.iter().enumerate() {
            // the exceptional duals carry one running index per coordinate;
            // the final sl_2 dual of G(3)/F(4) is written without one
            let index = if tuple {
                if sym == "E" && matches!(spec.family, Family::G3 | Family::F4) {
                    None
                } else {
                    Some(global)
                }
            } else {
                Some(i)
            };
            render_term(&mut out, *c, sym, index, &mut first);
            global += 1;
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    footnotes: Vec<String>,
}

impl Table {
    fn markdown(&self, title: &str) -> String {
        let mut s = format!("### {title}\n\n");
        let _ = writeln!(s, "| {} |", self.header.join(" | "));
        let _ = writeln!(
            s,
            "|{}|",
            self.header.iter().map(|_| "---").collect::<Vec<_>>().join("|")
        );
        for row in &self.rows {
            let _ = writeln!(s, "| {} |", row.join(" | "));
        }
        for note in &self.footnotes {
            let _ = writeln!(s, "\n*{note}*");
        }
        s
    }

    fn latex(&self, title: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "\\begin{{table}}[htp]");
        let _ = writeln!(s, "\\caption{{{title}}}");
        let _ = writeln!(s, "\\begin{{center}}");
        let cols = "c".repeat(self.header.len());
        let _ = writeln!(s, "\\begin{{tabular}}{{{cols}}}");
        let _ = writeln!(s, "{} \\\\ \\hline", self.header.join(" & "));
        for row in &self.rows {
            let _ = writeln!(s, "{} \\\\", row.join(" & "));
        }
        let _ = writeln!(s, "\\end{{tabular}}");
        let _ = writeln!(s, "\\end{{center}}");
        for note in &self.footnotes {
            let _ = writeln!(s, "% {note}");
        }
        let _ = writeln!(s, "\\end{{table}}");
        s
    }

    fn text(&self, title: &str) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut s = format!("{title}\n");
        let fmt_row = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(s, "{}", fmt_row(&self.header));
        let _ = writeln!(s, "{}", "-".repeat(widths.iter().sum::<usize>() + 2 * widths.len()));
        for row in &self.rows {
            let _ = writeln!(s, "{}", fmt_row(row));
        }
        for note in &self.footnotes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }

    fn render(&self, format: Format, title: &str) -> String {
        match format {
            Format::Markdown => self.markdown(title),
            Format::Latex => self.latex(title),
            _ => self.text(title),
        }
    }
}

/// Which reference table to emit.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum WhichTable {
    DetectingRoots,
    Hyperplanes,
    ParabolicRoots,
    Cohomology,
}

pub fn emit_table(catalog: &[Superalgebra], which: WhichTable, format: Format) -> String {
    match which {
        WhichTable::DetectingRoots => {
            let rows = catalog
                .iter()
                .map(|s| vec![s.name.clone(), weight_list(s, &s.f_roots)])
                .collect();
            Table {
                header: vec!["algebra".into(), "detecting roots".into()],
                rows,
                footnotes: vec![],
            }
            .render(format, "Roots of the detecting subalgebras")
        }
        WhichTable::Hyperplanes => {
            let rows = catalog
                .iter()
                .map(|s| vec![s.name.clone(), functional_symbolic(s)])
                .collect();
            Table {
                header: vec!["algebra".into(), "hyperplane functional (sample values)".into()],
                rows,
                footnotes: vec![],
            }
            .render(format, "Defining hyperplanes of the parabolics")
        }
        WhichTable::ParabolicRoots => {
            let rows = catalog
                .iter()
                .map(|s| vec![s.name.clone(), weight_list(s, &s.neg_roots)])
                .collect();
            Table {
                header: vec!["algebra".into(), "odd nilradical roots".into()],
                rows,
                footnotes: vec![
                    "for p(n) the set follows the defining inequalities i + j > n + 1 and \
                     i + j < n + 1; a published display of the n = 4 case repeats -e1-e2 and \
                     omits -e1-e3"
                        .into(),
                    "for osp(2m+1|2n) with m < n every -d_t lies strictly below the \
                     hyperplane; a published display restricts to t <= m, which is \
                     incompatible with the hyperplane and the closure axiom"
                        .into(),
                ],
            }
            .render(format, "Odd roots of the parabolics")
        }
        WhichTable::Cohomology => {
            let rows = catalog
                .iter()
                .map(|s| {
                    let pb = pb_series(s, 12);
                    let z = z_expected_poly(s);
                    let zrel = match s.family {
                        Family::P => format!("{z}"),
                        _ => format!("p_W1(t^{})", s.s_param),
                    };
                    let pg = match &s.pg {
                        PgDegrees::Stated(d) => format!("generators in degrees {d:?}"),
                        PgDegrees::Derived => "derived as pb / z".into(),
                    };
                    vec![
                        s.name.clone(),
                        describe(s.w1),
                        format!("{pb}"),
                        pg,
                        zrel,
                    ]
                })
                .collect();
            Table {
                header: vec![
                    "algebra".into(),
                    "W1".into(),
                    "pb (Hilbert series)".into(),
                    "pg".into(),
                    "z".into(),
                ],
                rows,
                footnotes: vec![],
            }
            .render(format, "Cohomology rings and Hilbert series")
        }
    }
}

/// The `roots` subcommand body: the full partition and hyperplane data of
/// one entry.
pub fn emit_roots(spec: &Superalgebra, format: Format) -> String {
    let table = Table {
        header: vec!["set".into(), "roots".into()],
        rows: vec![
            vec!["detecting (on hyperplane)".into(), weight_list(spec, &spec.f_roots)],
            vec!["nilradical (below)".into(), weight_list(spec, &spec.neg_roots)],
            vec!["quotient (above)".into(), weight_list(spec, &spec.pos_roots)],
            vec!["hyperplane".into(), functional_symbolic(spec)],
        ],
        footnotes: match spec.family {
            Family::P => vec![
                "generated from the defining inequalities; a published display of the \
                 n = 4 nilradical repeats one root and omits another"
                    .into(),
            ],
            _ => vec![],
        },
    };
    table.render(format, &format!("Odd-root partition of {}", spec.name))
}

pub fn emit_census_text(spec: &Superalgebra, res: &CensusResult, ledger: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra:      {}", spec.name);
    let _ = writeln!(s, "poincare:     {}", res.poincare);
    let _ = writeln!(s, "family-valid: {}", res.family_valid);
    let _ = writeln!(s, "nontrivial:   {}", res.nontrivial_found);
    let _ = writeln!(s, "euler:        {:?} (total {})", res.euler, res.euler_total());
    if ledger {
        let _ = writeln!(s, "contributions ({}):", res.contributions.len());
        for c in &res.contributions {
            let _ = writeln!(
                s,
                "  J={:?} n={} j={} dim={} trivial={} dominant={}",
                c.subset,
                c.lambda_degree,
                c.coh_degree,
                c.dim,
                c.trivial,
                weight_symbolic(spec, &c.dominant)
            );
        }
    }
    s
}

pub fn emit_reports_text(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "[{}] {:28} {:22} expected: {} | computed: {}",
            r.status, r.check_id, r.algebra, r.expected, r.computed
        );
        if !r.note.is_empty() {
            let _ = writeln!(s, "       note: {}", r.note);
        }
    }
    s
}

pub fn emit_reports_markdown(reports: &[CheckReport]) -> String {
    let mut t = Table {
        header: vec![
            "status".into(),
            "check".into(),
            "algebra".into(),
            "expected".into(),
            "computed".into(),
            "provenance".into(),
        ],
        rows: vec![],
        footnotes: vec![],
    };
    for r in reports {
        t.rows.push(vec![
            format!("{}", r.status),
            r.check_id.clone(),
            r.algebra.clone(),
            r.expected.clone(),
            r.computed.clone(),
            format!("{}", r.provenance),
        ]);
    }
    t.markdown("Verification report")
}
