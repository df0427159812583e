//! JSON and plain-text reports for the command-line interface.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::rat::rat_to_fraction;
use crate::decision::{ScanReport, Status, SubsetCriterion};
use crate::rationalize::{MinPoly, Witness, WitnessCheck};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_subset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset_criterion: Option<SubsetCriterion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<MinPolyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            version: VERSION.to_string(),
            inputs,
            ..Report::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    /// Image of `x`, in the variable `t`.
    pub phi: String,
    /// `h_i` with `f_i(phi) = d_i * h_i^2`.
    pub roots: Vec<String>,
    /// `d_i` as `"n/d"`, or null when `d_i = 1`.
    pub defects: Vec<Option<String>>,
    pub accepted: bool,
    /// Accepted with no constant defects: valid over the rationals.
    pub exact: bool,
}

impl WitnessReport {
    pub fn new(w: &Witness, check: &WitnessCheck) -> Self {
        WitnessReport {
            phi: w.phi.image.to_expr_string("t"),
            roots: w.roots.iter().map(|h| h.to_expr_string("t")).collect(),
            defects: check
                .defects
                .iter()
                .map(|d| d.as_ref().map(rat_to_fraction))
                .collect(),
            accepted: check.accepted,
            exact: check.exact(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinPolyReport {
    pub poly: String,
    pub degree: usize,
    pub generators: Vec<String>,
    /// Roots of `poly` are `scale` times the signed sums of square roots.
    pub scale: String,
}

impl MinPolyReport {
    pub fn new(m: &MinPoly) -> Self {
        MinPolyReport {
            poly: m.poly.to_expr_string(),
            degree: m.poly.degree().unwrap_or(0),
            generators: m.generators.iter().map(|g| g.to_expr_string("x")).collect(),
            scale: m.scale.to_expr_string("x"),
        }
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Rationalizable => "rationalizable",
        Status::NotRationalizable => "not rationalizable",
        Status::Unknown => "unknown",
    }
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn kv(out: &mut String, k: &str, v: String) {
    let _ = writeln!(out, "{k}: {v}");
}

/// Plain-text rendering, one `key: value` per line.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    if let Some(e) = &r.error {
        kv(&mut out, "error", e.clone());
    }
    if let Some(s) = r.verdict {
        kv(&mut out, "verdict", status_text(s).to_string());
    }
    if let Some(e) = r.root_order {
        kv(&mut out, "root order", e.to_string());
    }
    if let Some(g) = r.genus {
        kv(&mut out, "genus", g.to_string());
    }
    if let Some(k) = r.rank {
        kv(&mut out, "rank", k.to_string());
    }
    if let Some(b) = r.branch_count {
        kv(&mut out, "branch points", b.to_string());
    }
    if let Some(s) = &r.subset_criterion {
        kv(
            &mut out,
            "subset criterion",
            if s.pass { "pass" } else { "fail" }.to_string(),
        );
    }
    if let Some(j) = &r.failing_subset {
        kv(&mut out, "failing subset", list(j));
    }
    if let Some(m) = &r.minpoly {
        kv(&mut out, "generators", m.generators.join(", "));
        if m.scale != "1" {
            kv(&mut out, "scale", m.scale.clone());
        }
        kv(&mut out, "minimal polynomial", m.poly.clone());
    }
    if let Some(n) = &r.note {
        kv(&mut out, "note", n.clone());
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness: x -> {}", w.phi);
        for ((f, h), d) in r.inputs.iter().zip(&w.roots).zip(&w.defects) {
            match d {
                None => {
                    let _ = writeln!(out, "  sqrt({f}) = {h}");
                }
                Some(d) => {
                    let d = d.strip_suffix("/1").unwrap_or(d);
                    let _ = writeln!(out, "  sqrt({f}) = sqrt({d}) * ({h})");
                }
            }
        }
        if !w.exact {
            let _ = writeln!(
                out,
                "  valid only after adjoining the square roots of the defects"
            );
        }
    }
    if let Some(s) = &r.scan {
        let _ = writeln!(out, "seed: {}", s.seed);
        let _ = writeln!(out, "trials: {}", s.trials);
        let _ = writeln!(out, "agreements: {}", s.agreements);
        let _ = writeln!(out, "disagreements: {}", s.disagreements.len());
        let _ = writeln!(out, "necessity violations: {}", s.necessity_violations);
        for d in &s.disagreements {
            let _ = writeln!(
                out,
                "  trial {}: {{{}}} subset {} genus {}",
                d.trial,
                d.radicands.join(", "),
                if d.subset_pass { "pass" } else { "fail" },
                d.genus
            );
        }
    }
    out
}
