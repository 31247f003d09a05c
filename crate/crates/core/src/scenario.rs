//! Kick-direction prediction from motion evidence.
//!
//! A [`Scenario`] lists motion evidence sources, each pointing at a set of
//! directions, and a weight matrix with one row per condition. Predicting a
//! condition turns each motion into a simple support mass function, folds
//! them with Dempster's rule and picks the proper focal element with the
//! largest combined mass.
//!
//! [`builtin_takraw_scenario`] is the ten-motion, nine-condition model of the
//! start of a sepak takraw bicycle kick over the frame (F, L, R, B).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::frame::{Frame, Subset};
use crate::fusion::{fuse_all, FusionReport};
use crate::mass::MassFunction;

#[derive(Debug, Clone)]
pub struct Motion {
    pub name: String,
    /// Non-empty proper subset of the frame.
    pub direction: Subset,
}

impl Motion {
    pub fn new(name: impl Into<String>, direction: Subset) -> Result<Self> {
        if direction.is_empty() {
            return Err(Error::EmptyFocal);
        }
        if direction.is_full() {
            return Err(Error::FocalIsFullFrame);
        }
        Ok(Motion {
            name: name.into(),
            direction,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Scenario {
    name: Option<String>,
    frame: Frame,
    /// Optional long name per frame label, e.g. `B` → `back`.
    descriptions: Option<Vec<String>>,
    motions: Vec<Motion>,
    /// `bpa[condition][motion]`, each weight in (0, 1].
    bpa: Vec<Vec<f64>>,
}

impl Scenario {
    pub fn new(frame: Frame, motions: Vec<Motion>, bpa: Vec<Vec<f64>>) -> Result<Self> {
        if motions.is_empty() {
            return Err(Error::InvalidScenario("scenario has no motions".into()));
        }
        if bpa.is_empty() {
            return Err(Error::InvalidScenario("scenario has no conditions".into()));
        }
        for motion in &motions {
            frame.check(motion.direction.frame())?;
            if motion.direction.is_empty() {
                return Err(Error::EmptyFocal);
            }
            if motion.direction.is_full() {
                return Err(Error::FocalIsFullFrame);
            }
        }
        for (c, row) in bpa.iter().enumerate() {
            if row.len() != motions.len() {
                return Err(Error::InvalidScenario(format!(
                    "condition {} has {} weights for {} motions",
                    c + 1,
                    row.len(),
                    motions.len()
                )));
            }
            if let Some(&w) = row.iter().find(|&&w| !(w > 0.0 && w <= 1.0)) {
                return Err(Error::WeightOutOfRange(w));
            }
        }
        Ok(Scenario {
            name: None,
            frame,
            descriptions: None,
            motions,
            bpa,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_descriptions(mut self, descriptions: Vec<String>) -> Result<Self> {
        if descriptions.len() != self.frame.len() {
            return Err(Error::InvalidScenario(format!(
                "{} descriptions for {} frame labels",
                descriptions.len(),
                self.frame.len()
            )));
        }
        self.descriptions = Some(descriptions);
        Ok(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn descriptions(&self) -> Option<&[String]> {
        self.descriptions.as_deref()
    }

    pub fn motions(&self) -> &[Motion] {
        &self.motions
    }

    pub fn bpa(&self) -> &[Vec<f64>] {
        &self.bpa
    }

    pub fn condition_count(&self) -> usize {
        self.bpa.len()
    }

    /// Human-readable name of a subset: `B (back)` when descriptions exist.
    pub fn describe(&self, subset: &Subset) -> String {
        let key = subset.key();
        match &self.descriptions {
            Some(desc) => {
                let long: Vec<&str> = subset
                    .labels()
                    .iter()
                    .filter_map(|l| self.frame.index_of(l))
                    .map(|i| desc[i].as_str())
                    .collect();
                format!("{key} ({})", long.join("+"))
            }
            None => key,
        }
    }

    fn row(&self, condition: usize) -> Result<&[f64]> {
        if condition == 0 || condition > self.bpa.len() {
            return Err(Error::ConditionOutOfRange {
                condition,
                count: self.bpa.len(),
            });
        }
        Ok(&self.bpa[condition - 1])
    }

    /// One simple support mass per motion, in motion order. `condition` is
    /// 1-based.
    pub fn evidence_for(&self, condition: usize) -> Result<Vec<MassFunction>> {
        let row = self.row(condition)?;
        self.motions
            .iter()
            .zip(row)
            .map(|(m, &w)| MassFunction::simple_support(&m.direction, w))
            .collect()
    }

    pub fn predict(&self, condition: usize) -> Result<Prediction> {
        self.predict_traced(condition).map(|(_, p)| p)
    }

    /// Prediction together with the fold that produced it.
    pub fn predict_traced(&self, condition: usize) -> Result<(FusionReport, Prediction)> {
        let evidence = self.evidence_for(condition)?;
        let report = fuse_all(&evidence)?;
        let prediction = decide(
            condition,
            &report.final_mass,
            report.per_step_conflict.clone(),
        )?;
        Ok((report, prediction))
    }

    /// Predictions for every condition in order. A failing condition does not
    /// stop the others.
    pub fn sweep(&self) -> Vec<Result<Prediction>> {
        (1..=self.condition_count())
            .map(|c| self.predict(c))
            .collect()
    }
}

impl PartialEq for Scenario {
    /// Structural equality; frame identity is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.frame.same_labels(&other.frame)
            && self.descriptions == other.descriptions
            && self.bpa == other.bpa
            && self.motions.len() == other.motions.len()
            && self
                .motions
                .iter()
                .zip(&other.motions)
                .all(|(a, b)| a.name == b.name && a.direction.mask() == b.direction.mask())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    /// 1-based.
    pub condition: usize,
    pub final_mass: MassFunction,
    pub winner: Subset,
    pub winner_mass: f64,
    pub winner_belief: f64,
    pub winner_plausibility: f64,
    pub steps_conflict: Vec<f64>,
}

/// Picks the proper focal element of `final_mass` with the largest mass.
/// Ties go to the higher belief, then to the smaller mask. Θ never wins.
pub fn decide(
    condition: usize,
    final_mass: &MassFunction,
    steps_conflict: Vec<f64>,
) -> Result<Prediction> {
    let frame = final_mass.frame();
    let mut best: Option<(Subset, f64, f64)> = None;
    for (subset, mass) in final_mass.focal_elements() {
        if subset.is_full() {
            continue;
        }
        let belief = final_mass.belief(&subset)?;
        let better = match &best {
            None => true,
            Some((b, bm, bb)) => match mass.total_cmp(bm) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => match belief.total_cmp(bb) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => subset.mask() < b.mask(),
                },
            },
        };
        if better {
            best = Some((subset, mass, belief));
        }
    }
    let (winner, winner_mass, winner_belief) = best.ok_or(Error::NoCandidate)?;
    debug_assert!(frame.same_identity(winner.frame()));
    let winner_plausibility = final_mass.plausibility(&winner)?;
    Ok(Prediction {
        condition,
        final_mass: final_mass.clone(),
        winner,
        winner_mass,
        winner_belief,
        winner_plausibility,
        steps_conflict,
    })
}

const TAKRAW_MOTIONS: [(&str, &[&str]); 10] = [
    ("left foot moves to front", &["F"]),
    ("right foot moves to front", &["F"]),
    ("right hand moves to front", &["F"]),
    ("left hand moves to front", &["F"]),
    ("left foot turning left", &["L", "B"]),
    ("right foot turning left", &["L", "B"]),
    ("left foot turning right", &["R", "B"]),
    ("right foot turning right", &["R", "B"]),
    ("left foot turning back", &["B"]),
    ("right foot turning back", &["B"]),
];

// Rows are motions, columns conditions 1..=9.
const TAKRAW_WEIGHTS: [[f64; 9]; 10] = [
    [0.75, 0.55, 0.55, 0.55, 0.45, 0.45, 0.45, 0.45, 0.45],
    [0.75, 0.75, 0.55, 0.45, 0.45, 0.45, 0.45, 0.45, 0.65],
    [0.55, 0.55, 0.45, 0.45, 0.45, 0.45, 0.45, 0.65, 0.65],
    [0.55, 0.45, 0.45, 0.45, 0.45, 0.45, 0.65, 0.65, 0.75],
    [0.45, 0.45, 0.45, 0.45, 0.65, 0.65, 0.65, 0.75, 0.75],
    [0.45, 0.45, 0.45, 0.65, 0.65, 0.75, 0.75, 0.55, 0.55],
    [0.45, 0.45, 0.65, 0.65, 0.75, 0.75, 0.55, 0.55, 0.45],
    [0.45, 0.65, 0.65, 0.75, 0.75, 0.55, 0.55, 0.45, 0.45],
    [0.65, 0.65, 0.75, 0.75, 0.55, 0.55, 0.45, 0.45, 0.45],
    [0.65, 0.75, 0.75, 0.55, 0.55, 0.45, 0.45, 0.45, 0.45],
];

/// The bicycle-kick model: ten motions over (F, L, R, B), nine conditions.
///
/// Motions 1-4 support `{F}`, 5-6 `{L,B}`, 7-8 `{R,B}` and 9-10 `{B}`.
pub fn builtin_takraw_scenario() -> Scenario {
    let frame = Frame::new(["F", "L", "R", "B"]).expect("static frame");
    let motions = TAKRAW_MOTIONS
        .iter()
        .map(|(name, dir)| {
            Motion::new(*name, frame.subset_of(dir).expect("static labels")).expect("proper focal")
        })
        .collect();
    let bpa = (0..9)
        .map(|c| TAKRAW_WEIGHTS.iter().map(|row| row[c]).collect())
        .collect();
    Scenario::new(frame, motions, bpa)
        .expect("static scenario")
        .with_name("takraw")
        .with_descriptions(
            ["front", "left", "right", "back"]
                .map(String::from)
                .to_vec(),
        )
        .expect("four descriptions")
}
