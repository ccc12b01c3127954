//! Cross-verification of the four counting methods.

use std::path::Path;
use std::time::Instant;

use anyhow::anyhow;
use serde::Serialize;

use dncount::counting::d_count;
use dncount::mutation_class::{d_mutation_class, BfsOptions};
use dncount::polygon::triangulation_classes;
use dncount::trees::enumerate_star_trees;

use crate::{emit, to_json, Bounds, Failure};

/// One counting method at one n.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Count {
    Value(String),
    Skipped(&'static str),
}

impl Count {
    fn value(&self) -> Option<&str> {
        match self {
            Count::Value(v) => Some(v),
            Count::Skipped(_) => None,
        }
    }

    fn show(&self) -> &str {
        match self {
            Count::Value(v) => v,
            Count::Skipped(s) => s,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Agreement {
    pub quiver_bfs: Option<bool>,
    pub triangulation_classes: Option<bool>,
    pub trees: Option<bool>,
    pub trees_vs_triangulations: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WallTime {
    pub formula_ms: f64,
    pub quiver_bfs_ms: Option<f64>,
    pub triangulation_classes_ms: Option<f64>,
    pub trees_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: u64,
    pub formula_count: Count,
    pub quiver_bfs_count: Count,
    pub triangulation_class_count: Count,
    pub tree_count: Count,
    /// Agreement with the formula, except `trees_vs_triangulations`.
    pub agreement: Agreement,
    /// Set at n = 4, where the triangulation and tree sides count 10.
    pub expected_divergence: bool,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<WallTime>,
}

const SKIPPED: &str = "skipped";

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64() * 1e3)
}

fn method(
    n: u64,
    bound: usize,
    f: impl FnOnce() -> Result<usize, dncount::Error>,
) -> Result<(Count, Option<f64>), Failure> {
    if n as usize > bound {
        return Ok((Count::Skipped(SKIPPED), None));
    }
    let (r, ms) = timed(f);
    Ok((Count::Value(r?.to_string()), Some(ms)))
}

fn agree(a: &Count, b: &Count) -> Option<bool> {
    Some(a.value()? == b.value()?)
}

fn report(n: u64, seed_orientation: u64, bounds: Bounds) -> Result<VerificationReport, Failure> {
    let (formula, formula_ms) = timed(|| d_count(n));
    let formula = Count::Value(formula?.to_string());
    let opts = BfsOptions {
        parallel: true,
        ..BfsOptions::default()
    };
    let (quiver, quiver_ms) = method(n, bounds.quiver_bound, || {
        d_mutation_class(n as usize, seed_orientation, &opts).map(|c| c.len())
    })?;
    let (tri, tri_ms) = method(n, bounds.triangulation_bound, || {
        triangulation_classes(n as usize, bounds.triangulation_bound).map(|c| c.len())
    })?;
    let (trees, trees_ms) = method(n, bounds.tree_bound, || {
        enumerate_star_trees(n as usize, bounds.tree_bound).map(|c| c.len())
    })?;

    let expected_divergence = n == 4;
    let agreement = Agreement {
        quiver_bfs: agree(&quiver, &formula),
        triangulation_classes: agree(&tri, &formula),
        trees: agree(&trees, &formula),
        trees_vs_triangulations: agree(&trees, &tri),
    };
    let ok = if expected_divergence {
        // the polygon side overcounts D_4; it must still agree with itself and give 10
        agreement.quiver_bfs != Some(false)
            && agreement.trees_vs_triangulations != Some(false)
            && [&tri, &trees]
                .iter()
                .all(|c| c.value().is_none_or(|v| v == "10"))
    } else {
        [
            agreement.quiver_bfs,
            agreement.triangulation_classes,
            agreement.trees,
            agreement.trees_vs_triangulations,
        ]
        .iter()
        .all(|a| *a != Some(false))
    };
    Ok(VerificationReport {
        n,
        formula_count: formula,
        quiver_bfs_count: quiver,
        triangulation_class_count: tri,
        tree_count: trees,
        agreement,
        expected_divergence,
        ok,
        wall_time: Some(WallTime {
            formula_ms,
            quiver_bfs_ms: quiver_ms,
            triangulation_classes_ms: tri_ms,
            trees_ms,
        }),
    })
}

fn status(r: &VerificationReport) -> &'static str {
    match (r.ok, r.expected_divergence) {
        (true, true) => "expected divergence (n=4)",
        (true, false) => "agree",
        (false, _) => "MISMATCH",
    }
}

fn ms(t: Option<f64>) -> String {
    t.map_or_else(|| "-".to_string(), |t| format!("{t:.1}"))
}

pub fn run(
    nmin: u64,
    nmax: u64,
    json: Option<&Path>,
    timings: bool,
    seed_orientation: u64,
    bounds: Bounds,
) -> Result<(), Failure> {
    if nmin > nmax {
        return Err(anyhow!("nmin {nmin} is larger than nmax {nmax}").into());
    }
    if nmin < 3 {
        return Err(anyhow!("verification starts at n = 3, got {nmin}").into());
    }
    let mut reports = Vec::new();
    for n in nmin..=nmax {
        let mut r = report(n, seed_orientation, bounds)?;
        if !timings {
            r.wall_time = None;
        }
        reports.push(r);
    }

    let mut header = format!(
        "{:>3}  {:>12}  {:>10}  {:>14}  {:>10}  status",
        "n", "formula", "quiver_bfs", "triangulations", "trees"
    );
    if timings {
        header.push_str("  times_ms (formula/quiver/triangulations/trees)");
    }
    println!("{header}");
    for r in &reports {
        let mut line = format!(
            "{:>3}  {:>12}  {:>10}  {:>14}  {:>10}  {}",
            r.n,
            r.formula_count.show(),
            r.quiver_bfs_count.show(),
            r.triangulation_class_count.show(),
            r.tree_count.show(),
            status(r)
        );
        if let Some(w) = &r.wall_time {
            line.push_str(&format!(
                "  {:.1}/{}/{}/{}",
                w.formula_ms,
                ms(w.quiver_bfs_ms),
                ms(w.triangulation_classes_ms),
                ms(w.trees_ms)
            ));
        }
        println!("{line}");
    }
    if let Some(p) = json {
        emit(Some(p), &to_json(&reports)?)?;
    }

    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.ok)
        .map(|r| r.n.to_string())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "counts disagree at n = {}",
            bad.join(", ")
        )))
    }
}
