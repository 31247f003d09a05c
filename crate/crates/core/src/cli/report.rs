//! Text, JSON and CSV renderings of fusion runs.
//!
//! Rendering never recomputes anything: every number printed comes straight
//! from a [`CombinationTrace`], [`FusionReport`] or [`Prediction`].

use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::frame::Subset;
use crate::fusion::{CombinationTrace, FusionReport};
use crate::mass::MassFunction;
use crate::scenario::{Prediction, Scenario};

pub const DEFAULT_PRECISION: usize = 4;

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    format!("{s}{}", " ".repeat(w.saturating_sub(width(s))))
}

fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| width(s))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| pad(s, w)).collect();
        out.push_str(line.join("   ").trim_end());
        out.push('\n');
    }
    out
}

/// Masses in focal order, e.g. `{F} 0.9375, Θ 0.0625`.
pub fn render_masses(m: &MassFunction, precision: usize) -> String {
    m.focal_elements()
        .iter()
        .map(|(s, v)| format!("{s} {v:.precision$}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Cross-product table of one combination: left focal elements down the
/// side, right focal elements across the top, each cell showing the
/// intersection and its product. Conflict and the normalized result follow.
pub fn render_trace(trace: &CombinationTrace, precision: usize) -> String {
    let precision = precision.clamp(1, 12);
    let mut rows = Vec::with_capacity(trace.left_focal.len() + 1);
    let mut header = vec![String::new()];
    header.extend(
        trace
            .right_focal
            .iter()
            .map(|(s, m)| format!("{s} {m:.precision$}")),
    );
    rows.push(header);
    let ncols = trace.right_focal.len();
    for (i, (left, m)) in trace.left_focal.iter().enumerate() {
        let mut row = vec![format!("{left} {m:.precision$}")];
        row.extend(
            trace.cells[i * ncols..(i + 1) * ncols]
                .iter()
                .map(|c| format!("{} {:.precision$}", c.intersection, c.product)),
        );
        rows.push(row);
    }
    let mut out = grid(&rows);
    let _ = writeln!(out, "k = {:.precision$}", trace.conflict_k);
    let _ = writeln!(out, "result: {}", render_masses(&trace.result, precision));
    out
}

/// Human-readable fuse output: optional traces, final masses and winner.
pub fn render_fuse_table(
    scenario: &Scenario,
    report: &FusionReport,
    prediction: &Prediction,
    trace: bool,
    precision: usize,
) -> String {
    let precision = precision.clamp(1, 12);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "scenario: {}  condition: {}",
        scenario.name().unwrap_or("(unnamed)"),
        prediction.condition
    );
    if trace {
        let motions = scenario.motions();
        for (i, step) in report.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "\ncombination {} (sources 1-{} with {}: {})",
                i + 1,
                i + 1,
                i + 2,
                motions.get(i + 1).map_or("", |m| m.name.as_str())
            );
            out.push_str(&render_trace(step, precision));
        }
        out.push('\n');
    }
    let rows: Vec<Vec<String>> = std::iter::once(
        ["set", "mass", "belief", "plausibility"]
            .map(String::from)
            .to_vec(),
    )
    .chain(prediction.final_mass.focal_elements().iter().map(|(s, m)| {
        vec![
            s.to_string(),
            format!("{m:.precision$}"),
            format!(
                "{:.precision$}",
                prediction.final_mass.belief(s).unwrap_or(f64::NAN)
            ),
            format!(
                "{:.precision$}",
                prediction.final_mass.plausibility(s).unwrap_or(f64::NAN)
            ),
        ]
    }))
    .collect();
    out.push_str("final masses:\n");
    out.push_str(&grid(&rows));
    let _ = writeln!(
        out,
        "winner: {}  mass {:.precision$}  belief {:.precision$}  plausibility {:.precision$}",
        scenario.describe(&prediction.winner),
        prediction.winner_mass,
        prediction.winner_belief,
        prediction.winner_plausibility
    );
    out
}

/// Focal masses keyed by label set, serialized in focal order.
struct MassMap<'a>(&'a MassFunction);

impl Serialize for MassMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let focal = self.0.focal_elements();
        let mut map = serializer.serialize_map(Some(focal.len()))?;
        for (s, m) in &focal {
            map.serialize_entry(&s.key(), m)?;
        }
        map.end()
    }
}

fn labels(s: &Subset) -> Vec<String> {
    s.labels().into_iter().map(String::from).collect()
}

#[derive(Serialize)]
struct CellJson {
    left: Vec<String>,
    right: Vec<String>,
    intersection: Vec<String>,
    product: f64,
}

#[derive(Serialize)]
struct StepJson<'a> {
    k: f64,
    cells: Vec<CellJson>,
    result: MassMap<'a>,
}

#[derive(Serialize)]
struct WinnerJson {
    labels: Vec<String>,
    mass: f64,
    belief: f64,
    plausibility: f64,
}

impl WinnerJson {
    fn new(p: &Prediction) -> Self {
        WinnerJson {
            labels: labels(&p.winner),
            mass: p.winner_mass,
            belief: p.winner_belief,
            plausibility: p.winner_plausibility,
        }
    }
}

#[derive(Serialize)]
struct RunReportJson<'a> {
    scenario: Option<&'a str>,
    scenario_hash: &'a str,
    condition: usize,
    steps: Vec<StepJson<'a>>,
    #[serde(rename = "final")]
    final_mass: MassMap<'a>,
    winner: WinnerJson,
}

/// JSON run report for one condition.
pub fn fuse_json(
    scenario: &Scenario,
    hash: &str,
    report: &FusionReport,
    prediction: &Prediction,
) -> String {
    let steps = report
        .steps
        .iter()
        .map(|t| StepJson {
            k: t.conflict_k,
            cells: t
                .cells
                .iter()
                .map(|c| CellJson {
                    left: labels(&c.left),
                    right: labels(&c.right),
                    intersection: labels(&c.intersection),
                    product: c.product,
                })
                .collect(),
            result: MassMap(&t.result),
        })
        .collect();
    let doc = RunReportJson {
        scenario: scenario.name(),
        scenario_hash: hash,
        condition: prediction.condition,
        steps,
        final_mass: MassMap(&report.final_mass),
        winner: WinnerJson::new(prediction),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

/// Formats `x` with at most 12 significant digits in plain notation.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("float");
    format!("{rounded}")
}

/// Final masses as CSV: `set,mass,belief,plausibility`.
pub fn fuse_csv(prediction: &Prediction) -> String {
    let m = &prediction.final_mass;
    let mut out = String::from("set,mass,belief,plausibility\n");
    for (s, v) in m.focal_elements() {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            s.key(),
            sig12(v),
            sig12(m.belief(&s).unwrap_or(f64::NAN)),
            sig12(m.plausibility(&s).unwrap_or(f64::NAN))
        );
    }
    out
}

/// One row per successful condition.
pub fn sweep_csv(predictions: &[Prediction]) -> String {
    let mut out = String::from("condition,winner,winner_mass,winner_belief,winner_plausibility\n");
    for p in predictions {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            p.condition,
            p.winner.key(),
            sig12(p.winner_mass),
            sig12(p.winner_belief),
            sig12(p.winner_plausibility)
        );
    }
    out
}

pub fn sweep_table(
    scenario: &Scenario,
    outcomes: &[(usize, Result<Prediction, String>)],
    precision: usize,
) -> String {
    let precision = precision.clamp(1, 12);
    let mut rows = vec![[
        "condition",
        "winner",
        "mass",
        "belief",
        "plausibility",
        "max k",
    ]
    .map(String::from)
    .to_vec()];
    for (condition, outcome) in outcomes {
        match outcome {
            Ok(p) => rows.push(vec![
                condition.to_string(),
                scenario.describe(&p.winner),
                format!("{:.precision$}", p.winner_mass),
                format!("{:.precision$}", p.winner_belief),
                format!("{:.precision$}", p.winner_plausibility),
                format!(
                    "{:.precision$}",
                    p.steps_conflict.iter().copied().fold(0.0, f64::max)
                ),
            ]),
            Err(e) => rows.push(vec![condition.to_string(), format!("error: {e}")]),
        }
    }
    grid(&rows)
}

#[derive(Serialize)]
struct SweepEntryJson<'a> {
    condition: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    winner: Option<WinnerJson>,
    #[serde(rename = "final", skip_serializing_if = "Option::is_none")]
    final_mass: Option<MassMap<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    step_conflicts: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

#[derive(Serialize)]
struct SweepJson<'a> {
    scenario: Option<&'a str>,
    scenario_hash: &'a str,
    conditions: Vec<SweepEntryJson<'a>>,
}

pub fn sweep_json(
    scenario: &Scenario,
    hash: &str,
    outcomes: &[(usize, Result<Prediction, String>)],
) -> String {
    let conditions = outcomes
        .iter()
        .map(|(condition, outcome)| match outcome {
            Ok(p) => SweepEntryJson {
                condition: *condition,
                winner: Some(WinnerJson::new(p)),
                final_mass: Some(MassMap(&p.final_mass)),
                step_conflicts: Some(&p.steps_conflict),
                error: None,
            },
            Err(e) => SweepEntryJson {
                condition: *condition,
                winner: None,
                final_mass: None,
                step_conflicts: None,
                error: Some(e),
            },
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&SweepJson {
        scenario: scenario.name(),
        scenario_hash: hash,
        conditions,
    })
    .expect("sweep serializes");
    text.push('\n');
    text
}
