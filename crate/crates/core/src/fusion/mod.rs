//! Dempster's rule of combination.
//!
//! [`combine`] pools two mass functions: every pair of focal elements
//! contributes the product of its masses to the intersection, products landing
//! on ∅ form the conflict `k`, and the rest is rescaled by `1 / (1 - k)`.
//! [`combine_traced`] keeps the full cross-product so each step can be
//! printed as a table, and [`fuse_all`] folds a list of sources left to
//! right, normalizing after every step.
//!
//! [`oracle::oracle_fuse_all`] computes the same n-way combination by
//! exhaustive enumeration in exact rational arithmetic and is used to check
//! the fold.

pub mod oracle;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frame::Subset;
use crate::mass::MassFunction;

pub use oracle::{oracle_fuse_all, oracle_fuse_exact, ExactFusion, ORACLE_TUPLE_CAP};

/// Combination is refused once the conflict reaches `1 - TOTAL_CONFLICT_MARGIN`.
pub const TOTAL_CONFLICT_MARGIN: f64 = 1e-9;

/// One summand `m1(B) · m2(C)` of the cross product.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationCell {
    pub left: Subset,
    pub left_mass: f64,
    pub right: Subset,
    pub right_mass: f64,
    pub intersection: Subset,
    pub product: f64,
}

impl CombinationCell {
    pub fn is_conflict(&self) -> bool {
        self.intersection.is_empty()
    }
}

/// A single pairwise combination with every intermediate product.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationTrace {
    /// Ordered by left focal mask, then right focal mask.
    pub cells: Vec<CombinationCell>,
    pub left_focal: Vec<(Subset, f64)>,
    pub right_focal: Vec<(Subset, f64)>,
    pub conflict_k: f64,
    pub result: MassFunction,
}

impl CombinationTrace {
    pub fn total_product(&self) -> f64 {
        self.cells.iter().map(|c| c.product).sum()
    }

    /// Sum of the products whose intersection is exactly `a`.
    pub fn unnormalized(&self, a: &Subset) -> f64 {
        self.cells
            .iter()
            .filter(|c| c.intersection == *a)
            .map(|c| c.product)
            .sum()
    }
}

/// The outcome of folding a list of sources.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionReport {
    /// `steps[i]` combines the accumulated mass with source `i + 1`.
    pub steps: Vec<CombinationTrace>,
    pub final_mass: MassFunction,
    pub per_step_conflict: Vec<f64>,
}

/// `k = Σ_{B ∩ C = ∅} m1(B) m2(C)`.
pub fn conflict(m1: &MassFunction, m2: &MassFunction) -> Result<f64> {
    m1.frame().check(m2.frame())?;
    let mut k = 0.0;
    for &(b, x) in m1.focal_masks() {
        for &(c, y) in m2.focal_masks() {
            if b & c == 0 {
                k += x * y;
            }
        }
    }
    Ok(k)
}

fn is_total_conflict(k: f64) -> bool {
    k >= 1.0 - TOTAL_CONFLICT_MARGIN
}

fn normalize(m1: &MassFunction, acc: BTreeMap<u64, f64>, k: f64) -> MassFunction {
    let scale = 1.0 - k;
    let focal = acc
        .into_iter()
        .map(|(mask, w)| (mask, w / scale))
        .filter(|&(_, m)| m > 0.0)
        .collect();
    MassFunction::from_sorted_unchecked(m1.frame(), focal)
}

/// Dempster's rule: `m12(A) = Σ_{B∩C=A≠∅} m1(B) m2(C) / (1 - k)`.
pub fn combine(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    m1.frame().check(m2.frame())?;
    let mut acc = BTreeMap::new();
    let mut k = 0.0;
    for &(b, x) in m1.focal_masks() {
        for &(c, y) in m2.focal_masks() {
            let a = b & c;
            if a == 0 {
                k += x * y;
            } else {
                *acc.entry(a).or_insert(0.0) += x * y;
            }
        }
    }
    if is_total_conflict(k) {
        return Err(Error::TotalConflict { k, step: None });
    }
    Ok(normalize(m1, acc, k))
}

/// [`combine`] keeping every cell of the cross product.
pub fn combine_traced(m1: &MassFunction, m2: &MassFunction) -> Result<CombinationTrace> {
    m1.frame().check(m2.frame())?;
    let frame = m1.frame();
    let mut cells = Vec::with_capacity(m1.focal_count() * m2.focal_count());
    let mut acc = BTreeMap::new();
    let mut k = 0.0;
    for (left, x) in m1.focal_elements() {
        for (right, y) in m2.focal_elements() {
            let a = left.mask() & right.mask();
            let product = x * y;
            if a == 0 {
                k += product;
            } else {
                *acc.entry(a).or_insert(0.0) += product;
            }
            cells.push(CombinationCell {
                left: left.clone(),
                left_mass: x,
                right,
                right_mass: y,
                intersection: frame.subset_unchecked(a),
                product,
            });
        }
    }
    if is_total_conflict(k) {
        return Err(Error::TotalConflict { k, step: None });
    }
    Ok(CombinationTrace {
        cells,
        left_focal: m1.focal_elements(),
        right_focal: m2.focal_elements(),
        conflict_k: k,
        result: normalize(m1, acc, k),
    })
}

/// Folds `sources` left to right with [`combine_traced`].
pub fn fuse_all(sources: &[MassFunction]) -> Result<FusionReport> {
    let (first, rest) = sources.split_first().ok_or(Error::EmptyInput)?;
    for s in rest {
        first.frame().check(s.frame())?;
    }
    let mut acc = first.clone();
    let mut steps = Vec::with_capacity(rest.len());
    for (i, source) in rest.iter().enumerate() {
        let trace = combine_traced(&acc, source).map_err(|e| match e {
            Error::TotalConflict { k, .. } => Error::TotalConflict {
                k,
                step: Some(i + 1),
            },
            other => other,
        })?;
        acc = trace.result.clone();
        steps.push(trace);
    }
    let per_step_conflict = steps.iter().map(|t| t.conflict_k).collect();
    Ok(FusionReport {
        steps,
        final_mass: acc,
        per_step_conflict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Frame;

    fn flrb() -> Frame {
        Frame::new(["F", "L", "R", "B"]).unwrap()
    }

    fn ss(f: &Frame, labels: &[&str], w: f64) -> MassFunction {
        MassFunction::simple_support(&f.subset_of(labels).unwrap(), w).unwrap()
    }

    // Accumulated front mass after motions 1-4 of condition 1 (exact).
    fn front_after_four(f: &Frame) -> MassFunction {
        let front = f.subset_of(&["F"]).unwrap();
        MassFunction::from_entries(f, [(front, 0.98734375), (f.full(), 0.01265625)]).unwrap()
    }

    #[test]
    fn conflict_examples() {
        let f = flrb();
        let m = ss(&f, &["F"], 0.75);
        assert_eq!(conflict(&m, &m).unwrap(), 0.0);

        let k = conflict(&front_after_four(&f), &ss(&f, &["L", "B"], 0.45)).unwrap();
        assert!((k - 0.4443046875).abs() < 1e-12);

        let k = conflict(&ss(&f, &["F"], 1.0), &ss(&f, &["B"], 1.0)).unwrap();
        assert_eq!(k, 1.0);
    }

    #[test]
    fn first_combination_table() {
        let f = flrb();
        let m = ss(&f, &["F"], 0.75);
        let trace = combine_traced(&m, &m).unwrap();
        let products: Vec<f64> = trace.cells.iter().map(|c| c.product).collect();
        assert_eq!(products, vec![0.5625, 0.1875, 0.1875, 0.0625]);
        assert_eq!(trace.conflict_k, 0.0);
        assert_eq!(
            trace.result.focal_masks(),
            &[(0b0001, 0.9375), (0b1111, 0.0625)]
        );
        assert_eq!(combine(&m, &m).unwrap(), trace.result);
    }

    #[test]
    fn fourth_combination_has_one_conflict_cell() {
        let f = flrb();
        let trace = combine_traced(&front_after_four(&f), &ss(&f, &["L", "B"], 0.45)).unwrap();
        assert_eq!(trace.cells.len(), 4);
        assert_eq!(trace.cells.iter().filter(|c| c.is_conflict()).count(), 1);
        // exact: 69509/71129, 729/71129, 891/71129
        let r = &trace.result;
        let s = |l: &[&str]| f.subset_of(l).unwrap();
        assert!((r.mass(&s(&["F"])).unwrap() - 69509.0 / 71129.0).abs() < 1e-12);
        assert!((r.mass(&s(&["L", "B"])).unwrap() - 729.0 / 71129.0).abs() < 1e-12);
        assert!((r.mass(&f.full()).unwrap() - 891.0 / 71129.0).abs() < 1e-12);
        assert!((r.mass(&s(&["F"])).unwrap() - 0.977225).abs() < 1e-5);
        assert!((r.mass(&s(&["L", "B"])).unwrap() - 0.010249).abs() < 1e-5);
        assert!((r.mass(&f.full()).unwrap() - 0.012527).abs() < 1e-5);
    }

    #[test]
    fn trace_conservation() {
        let f = flrb();
        let trace = combine_traced(&front_after_four(&f), &ss(&f, &["L", "B"], 0.45)).unwrap();
        assert!((trace.total_product() - 1.0).abs() < 1e-9);
        for (a, m) in trace.result.focal_elements() {
            assert!((m * (1.0 - trace.conflict_k) - trace.unnormalized(&a)).abs() < 1e-9);
        }
    }

    #[test]
    fn vacuous_is_neutral() {
        let f = flrb();
        let m = front_after_four(&f);
        let v = MassFunction::vacuous(&f);
        assert_eq!(combine(&m, &v).unwrap(), m);
        assert_eq!(combine(&v, &m).unwrap(), m);
    }

    #[test]
    fn total_conflict_refused() {
        let f = flrb();
        let err = combine_traced(&ss(&f, &["F"], 1.0), &ss(&f, &["B"], 1.0)).unwrap_err();
        assert_eq!(err, Error::TotalConflict { k: 1.0, step: None });
        assert!(matches!(
            combine(&ss(&f, &["F"], 1.0), &ss(&f, &["B"], 1.0)),
            Err(Error::TotalConflict { .. })
        ));
    }

    #[test]
    fn frames_must_match() {
        let a = flrb();
        let b = flrb();
        let m = MassFunction::vacuous(&a);
        let n = MassFunction::vacuous(&b);
        assert_eq!(combine(&m, &n).unwrap_err(), Error::FrameMismatch);
        assert_eq!(conflict(&m, &n).unwrap_err(), Error::FrameMismatch);
        assert_eq!(fuse_all(&[m, n]).unwrap_err(), Error::FrameMismatch);
    }

    #[test]
    fn fuse_all_edge_cases() {
        let f = flrb();
        assert_eq!(fuse_all(&[]).unwrap_err(), Error::EmptyInput);

        let m = ss(&f, &["F"], 0.75);
        let report = fuse_all(std::slice::from_ref(&m)).unwrap();
        assert!(report.steps.is_empty());
        assert_eq!(report.final_mass, m);

        let v = MassFunction::vacuous(&f);
        let report = fuse_all(&[v.clone(), v.clone(), v.clone()]).unwrap();
        assert_eq!(report.final_mass, v);
        assert_eq!(report.per_step_conflict, vec![0.0, 0.0]);
    }

    #[test]
    fn fuse_all_reports_conflict_step() {
        let f = flrb();
        let sources = [
            ss(&f, &["F"], 0.5),
            ss(&f, &["F"], 1.0),
            ss(&f, &["B"], 1.0),
        ];
        let err = fuse_all(&sources).unwrap_err();
        assert!(matches!(err, Error::TotalConflict { step: Some(2), .. }));
    }

    #[test]
    fn not_idempotent() {
        let f = flrb();
        let m = ss(&f, &["F"], 0.75);
        let mm = combine(&m, &m).unwrap();
        assert_ne!(mm, m);
        assert!(mm.mass(&f.subset_of(&["F"]).unwrap()).unwrap() > 0.75);
    }
}
