//! Structured reports for each command of the `obstruct` tool.
//!
//! A [`Report`] renders to JSON with sorted keys and rationals as `"p/q"` strings, so identical
//! inputs give byte-identical output regardless of thread count. Timing is attached only when
//! asked for.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::goeritz::family_2odd_2odd;
use crate::lattice::{
    changemaker_obstruction, enumerate_changemakers, genus_from_changemaker, ChangemakerVerdict, GramMatrix,
    ObstructionOptions,
};
use crate::manifolds::{
    cable_su2_cyclic_slopes, em_slope, em_splice_form, em_su2_cyclic, not_surgery_verdict, ChangemakerCheck, EmKnot,
    IteratedTorusKnot, Overall, ResidueVerdict, Splice,
};
use crate::numtheory::{density, product_bound, BoundKind, ResiduePredicateSet};
use crate::repvar::{irrep_witness, IrrepVerdict};
use crate::Result;

/// Version of the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub verdict: Value,
    pub witnesses: Value,
    /// Wall-clock milliseconds, present only when requested.
    pub elapsed_ms: Option<u128>,
    /// Short human-readable lines for the table view.
    pub summary: Vec<(String, String)>,
    /// Optional table body: header then rows.
    pub rows: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Report {
    fn new(command: &str, inputs: Value, verdict: Value, witnesses: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            verdict,
            witnesses,
            elapsed_ms: None,
            summary: Vec::new(),
            rows: None,
        }
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "version": env!("CARGO_PKG_VERSION"),
        });
        if let Some(ms) = self.elapsed_ms {
            v["timing"] = json!({ "elapsed_ms": ms as u64 });
        }
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("values serialize")
    }

    /// Aligned plain-text rendering of the summary and the table.
    pub fn to_table(&self) -> String {
        let mut out = format!("{}\n", self.command);
        let width = self.summary.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.summary {
            out += &format!("  {k:<width$}  {v}\n");
        }
        if let Some((header, rows)) = &self.rows {
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for r in rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                format!("  {}\n", padded.join("  "))
            };
            out += &line(header);
            for r in rows {
                out += &line(r);
            }
        }
        out
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn overall_text(o: &Overall) -> String {
    match o {
        Overall::HalfIntegralSurgery { slope } => format!("half-integral surgery, slope ±{slope}"),
        Overall::NotAnySurgery => "not surgery on any knot in S³".into(),
        Overall::Undecided { open_slopes } => {
            let s: Vec<String> = open_slopes.iter().map(|s| s.to_string()).collect();
            format!("undecided; open slopes {}", s.join(", "))
        }
    }
}

/// Full obstruction pipeline for `Y(T_{a,b}, T_{c,d})`.
pub fn cmd_splice(a: i64, b: i64, c: i64, d: i64, changemaker: bool) -> Result<Report> {
    let y = Splice::from_ints(a, b, c, d)?;
    let v = not_surgery_verdict(&y, changemaker)?;
    let mut witnesses = serde_json::Map::new();
    for (key, iv) in [("integral_plus", &v.integral_plus), ("integral_minus", &v.integral_minus)] {
        let mut w = serde_json::Map::new();
        if let ResidueVerdict::Inconclusive { .. } = iv.residue {
            w.insert("residue".into(), to_value(&iv.residue));
        }
        if let ChangemakerCheck::Witness { embedding, .. } = &iv.changemaker {
            w.insert("changemaker".into(), to_value(embedding));
        }
        if !w.is_empty() {
            witnesses.insert(key.into(), Value::Object(w));
        }
    }
    if let Some(found) = &v.nonintegral {
        witnesses.insert("nonintegral".into(), to_value(found));
    }
    let mut r = Report::new(
        "splice",
        json!({ "a": a, "b": b, "c": c, "d": d, "changemaker": changemaker }),
        to_value(&v),
        Value::Object(witnesses),
    );
    let residue_text = |x: &ResidueVerdict| match x {
        ResidueVerdict::Obstructed => "obstructed".to_string(),
        ResidueVerdict::Inconclusive { residue, witness } => format!("inconclusive ({witness}² ≡ {residue})"),
    };
    let cm_text = |x: &ChangemakerCheck| match x {
        ChangemakerCheck::NotRequested => "not requested".to_string(),
        ChangemakerCheck::NoFormAvailable => "no form available".to_string(),
        ChangemakerCheck::Obstructed { diagram } => format!("obstructed ({diagram})"),
        ChangemakerCheck::Witness { diagram, embedding } => format!("witness σ = {:?} ({diagram})", embedding.sigma.entries()),
    };
    r.summary = vec![
        ("manifold".into(), y.to_string()),
        ("|H1|".into(), v.h1_order.to_string()),
        ("linking".into(), format!("{}, {}", v.linking.0, v.linking.1)),
        (
            "non-integral".into(),
            v.nonintegral.map_or("none".into(), |m| format!("(l, m) = ({}, {}), slope ±{}", m.l, m.m, m.slope)),
        ),
        (format!("slope {}", v.integral_plus.slope), residue_text(&v.integral_plus.residue)),
        (format!("slope {}", v.integral_minus.slope), residue_text(&v.integral_minus.residue)),
    ];
    if changemaker {
        r.summary.push((format!("changemaker {}", v.integral_plus.slope), cm_text(&v.integral_plus.changemaker)));
        r.summary.push((format!("changemaker {}", v.integral_minus.slope), cm_text(&v.integral_minus.changemaker)));
    }
    r.summary.push(("overall".into(), overall_text(&v.overall)));
    Ok(r)
}

/// One row of the `Y(T_{2a+1,2}, T_{2b+1,2})` census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub a: i64,
    pub b: i64,
    /// `|H₁| = 4(2a+1)(2b+1) − 1`; the slope tested is `−n`.
    pub n: i64,
    pub witness: Option<Vec<i64>>,
    pub changemakers_tried: u64,
    pub nodes: u64,
}

/// Changemaker test at slope `−n` for every `1 <= a <= b` with `(2a+1)(2b+1) <= max_product`.
pub fn census_2odd(max_product: i64) -> Result<Vec<CensusRow>> {
    let mut pairs = Vec::new();
    for a in 1.. {
        if (2 * a + 1) * (2 * a + 1) > max_product {
            break;
        }
        for b in a.. {
            if (2 * a + 1) * (2 * b + 1) > max_product {
                break;
            }
            pairs.push((a, b));
        }
    }
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let n = 4 * (2 * a + 1) * (2 * b + 1) - 1;
            let gram = family_2odd_2odd(a, b)?;
            let (verdict, stats) = changemaker_obstruction(&gram, n, ObstructionOptions::default())?;
            log::info!("census ({a},{b}): n = {n}, {} changemakers", stats.changemakers);
            let witness = match verdict {
                ChangemakerVerdict::Obstructed => None,
                ChangemakerVerdict::Witness(e) => Some(e[0].sigma.entries().to_vec()),
            };
            Ok(CensusRow { a, b, n, witness, changemakers_tried: stats.changemakers, nodes: stats.nodes })
        })
        .collect()
}

pub fn cmd_census_2odd(max_product: i64) -> Result<Report> {
    let rows = census_2odd(max_product)?;
    let survivors: Vec<Value> = rows.iter().filter(|r| r.witness.is_some()).map(|r| json!([r.a, r.b])).collect();
    let witnesses: Vec<Value> =
        rows.iter().filter_map(|r| r.witness.as_ref().map(|s| json!({ "a": r.a, "b": r.b, "sigma": s }))).collect();
    let mut r = Report::new(
        "census-2odd",
        json!({ "max_product": max_product }),
        json!({ "rows": to_value(&rows), "witness_pairs": survivors }),
        Value::Array(witnesses),
    );
    r.summary = vec![
        ("pairs".into(), rows.len().to_string()),
        ("with witness".into(), survivors.len().to_string()),
    ];
    r.rows = Some((
        ["a", "b", "slope", "verdict", "tried", "nodes"].map(String::from).to_vec(),
        rows.iter()
            .map(|row| {
                vec![
                    row.a.to_string(),
                    row.b.to_string(),
                    format!("-{}", row.n),
                    row.witness.as_ref().map_or("obstructed".into(), |s| format!("witness {s:?}")),
                    row.changemakers_tried.to_string(),
                    row.nodes.to_string(),
                ]
            })
            .collect(),
    ));
    Ok(r)
}

pub fn cmd_changemaker_enum(len: usize, norm: i64) -> Result<Report> {
    let list = enumerate_changemakers(len, norm);
    let mut r = Report::new(
        "changemaker enum",
        json!({ "len": len, "norm": norm }),
        json!({ "count": list.len(), "changemakers": to_value(&list) }),
        Value::Null,
    );
    r.summary = vec![("count".into(), list.len().to_string())];
    r.rows = Some((
        vec!["sigma".into(), "genus".into()],
        list.iter().map(|s| vec![format!("{:?}", s.entries()), genus_from_changemaker(s).to_string()]).collect(),
    ));
    Ok(r)
}

pub fn cmd_changemaker_embed(gram: &GramMatrix, p: i64, all: bool) -> Result<Report> {
    let (verdict, stats) = changemaker_obstruction(gram, p, ObstructionOptions { all, ..Default::default() })?;
    let found = match &verdict {
        ChangemakerVerdict::Obstructed => Vec::new(),
        ChangemakerVerdict::Witness(e) => e.clone(),
    };
    let mut r = Report::new(
        "changemaker embed",
        json!({ "gram": gram.rows(), "p": p, "all": all }),
        json!({
            "obstructed": verdict.is_obstructed(),
            "admitting_changemakers": found.len(),
            "changemakers_tried": stats.changemakers,
            "nodes": stats.nodes,
        }),
        to_value(&found),
    );
    r.summary = vec![
        ("rank".into(), gram.rank().to_string()),
        ("norm".into(), p.to_string()),
        ("verdict".into(), if found.is_empty() { "obstructed".into() } else { format!("{} admitting changemaker(s)", found.len()) }),
        ("changemakers tried".into(), stats.changemakers.to_string()),
    ];
    for e in &found {
        r.summary.push(("sigma".into(), format!("{:?}", e.sigma.entries())));
        for (i, v) in e.vectors.iter().enumerate() {
            r.summary.push((format!("  v{}", i + 1), format!("{v:?}")));
        }
    }
    Ok(r)
}

pub fn cmd_em(l: i64, m: i64, n: i64, p: i64) -> Result<Report> {
    let k = EmKnot::new(l, m, n, p)?;
    let slope = em_slope(&k);
    let cyclic = em_su2_cyclic(&k);
    let splice = if cyclic { em_splice_form(&k)? } else { None };
    let witness = if !cyclic && n == 0 && !matches!(m, 0 | 1) {
        match irrep_witness(l, m, p)? {
            IrrepVerdict::Witness(w) => Some(w),
            IrrepVerdict::Cyclic => unreachable!("cyclicity criteria agree"),
        }
    } else {
        None
    };
    let mut r = Report::new(
        "em",
        json!({ "l": l, "m": m, "n": n, "p": p }),
        json!({
            "knot": k.to_string(),
            "slope": slope.to_string(),
            "h1_order": slope.numerator().unsigned_abs() as u64,
            "su2_cyclic": cyclic,
            "splice": splice.map(|s| format!("±{s}")),
            "possibly_degenerate": k.possibly_degenerate(),
        }),
        witness.as_ref().map_or(Value::Null, to_value),
    );
    r.summary = vec![
        ("knot".into(), k.to_string()),
        ("slope".into(), slope.to_string()),
        ("SU(2)-cyclic".into(), cyclic.to_string()),
        (
            "splice".into(),
            match (cyclic, splice) {
                (true, Some(s)) => format!("±{s}"),
                (true, None) => "not a splice of torus-knot exteriors".into(),
                (false, _) => "n/a".into(),
            },
        ),
    ];
    if let Some(w) = &witness {
        r.summary.push(("φ/π".into(), w.phi_over_pi.to_string()));
    }
    if k.possibly_degenerate() {
        r.summary.push(("warning".into(), "parameters near the degenerate cases".into()));
    }
    Ok(r)
}

pub fn cmd_density(set: ResiduePredicateSet, limit: i64, bound: bool) -> Result<Report> {
    let d = density(set, limit)?;
    let bound_value = match (bound, set) {
        (true, ResiduePredicateSet::Sk(k)) => Some(product_bound(BoundKind::Sk, k)),
        (true, ResiduePredicateSet::Tk(k)) => Some(product_bound(BoundKind::Tk, k)),
        _ => None,
    };
    let mut verdict = json!({
        "density": d.to_string(),
        "count": (d * crate::Rational::from_integer(limit as i128)).to_integer() as i64,
    });
    if bound {
        verdict["product_bound"] = bound_value.map_or(Value::Null, |b| Value::String(b.to_string()));
    }
    let mut r = Report::new("density", json!({ "set": set.to_string(), "limit": limit, "bound": bound }), verdict, Value::Null);
    r.summary = vec![("set".into(), set.to_string()), ("density".into(), d.to_string())];
    if let Some(b) = bound_value {
        r.summary.push(("product bound".into(), b.to_string()));
    }
    Ok(r)
}

pub fn cmd_cable(knot: &str) -> Result<Report> {
    let k: IteratedTorusKnot = knot.parse()?;
    let rows = cable_su2_cyclic_slopes(&k);
    let mut r = Report::new(
        "cable",
        json!({ "knot": knot }),
        json!({ "knot": k.to_string(), "depth": k.depth(), "slopes": to_value(&rows) }),
        Value::Null,
    );
    r.summary = vec![("knot".into(), k.to_string()), ("cyclic slopes".into(), rows.len().to_string())];
    r.rows = Some((
        vec!["slope".into(), "manifold".into()],
        rows.iter().map(|c| vec![c.slopes.to_string(), c.manifold_text()]).collect(),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = cmd_splice(2, 3, 2, -3, false).unwrap();
        let v = r.to_value();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["verdict"]["overall"]["kind"], "half_integral_surgery");
        assert_eq!(v["verdict"]["overall"]["slope"], "37/2");
        assert_eq!(v["verdict"]["linking"], json!(["31/37", "6/37"]));
        assert!(v.get("timing").is_none());
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn small_commands() {
        assert!(cmd_census_2odd(8).unwrap().verdict["rows"].as_array().unwrap().is_empty());
        let v = cmd_census_2odd(9).unwrap().verdict;
        assert_eq!(v["witness_pairs"], json!([[1, 1]]));
        assert_eq!(cmd_changemaker_enum(2, 2).unwrap().verdict["changemakers"], json!([[1, 1]]));
        assert_eq!(cmd_density(ResiduePredicateSet::Sk(1), 25, true).unwrap().verdict["density"], "3/5");
        assert_eq!(cmd_density(ResiduePredicateSet::Sk(0), 10, false).unwrap().verdict["density"], "1");
        let v = cmd_em(5, 2, 0, 2).unwrap();
        assert_eq!(v.witnesses["phi_over_pi"], "2/3");
        assert!(cmd_em(2, 2, 1, 1).is_err());
        assert_eq!(cmd_cable("C(5,2);C(13,2);T(2,3)").unwrap().verdict["slopes"], json!([]));
    }
}
