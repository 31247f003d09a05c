//! Basic probability assignments.

use std::fmt;

use crate::error::{Error, Result};
use crate::frame::{Frame, Subset};

/// Tolerance on `Σ m = 1` at construction and after each combination.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// A validated mass function over one frame.
///
/// Focal elements are kept sorted by ascending mask and every stored mass is
/// strictly positive; the empty set never carries mass.
#[derive(Clone)]
pub struct MassFunction {
    frame: Frame,
    focal: Vec<(u64, f64)>,
}

impl MassFunction {
    /// Builds a mass function from `(subset, mass)` pairs. Repeated subsets
    /// are summed and zero masses dropped.
    pub fn from_entries<I>(frame: &Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, f64)>,
    {
        let mut raw = Vec::new();
        for (subset, mass) in entries {
            frame.check(subset.frame())?;
            raw.push((subset.mask(), mass));
        }
        Self::from_masks(frame, raw)
    }

    pub(crate) fn from_masks(frame: &Frame, mut raw: Vec<(u64, f64)>) -> Result<Self> {
        for &(mask, mass) in &raw {
            if !mass.is_finite() || mass < 0.0 {
                return Err(Error::NegativeMass(mass));
            }
            if mask == 0 && mass > 0.0 {
                return Err(Error::EmptySetMass(mass));
            }
        }
        raw.sort_by_key(|&(mask, _)| mask);
        let mut focal: Vec<(u64, f64)> = Vec::with_capacity(raw.len());
        for (mask, mass) in raw {
            match focal.last_mut() {
                Some((m, acc)) if *m == mask => *acc += mass,
                _ => focal.push((mask, mass)),
            }
        }
        focal.retain(|&(_, mass)| mass > 0.0);
        let sum: f64 = focal.iter().map(|&(_, m)| m).sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized { sum });
        }
        Ok(MassFunction {
            frame: frame.clone(),
            focal,
        })
    }

    /// Trusted constructor for combination results: masks sorted and unique,
    /// masses already normalized.
    pub(crate) fn from_sorted_unchecked(frame: &Frame, focal: Vec<(u64, f64)>) -> Self {
        debug_assert!(focal.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(focal.iter().all(|&(mask, m)| mask != 0 && m > 0.0));
        debug_assert!(
            (focal.iter().map(|&(_, m)| m).sum::<f64>() - 1.0).abs() <= NORMALIZATION_TOLERANCE
        );
        MassFunction {
            frame: frame.clone(),
            focal,
        }
    }

    /// Total ignorance: `m(Θ) = 1`.
    pub fn vacuous(frame: &Frame) -> Self {
        MassFunction {
            frame: frame.clone(),
            focal: vec![(frame.full_mask(), 1.0)],
        }
    }

    /// `{focal: weight, Θ: 1 - weight}`; the Θ entry is omitted at weight 1.
    pub fn simple_support(focal: &Subset, weight: f64) -> Result<Self> {
        if focal.is_empty() {
            return Err(Error::EmptyFocal);
        }
        if focal.is_full() {
            return Err(Error::FocalIsFullFrame);
        }
        if !(weight > 0.0 && weight <= 1.0) {
            return Err(Error::WeightOutOfRange(weight));
        }
        let frame = focal.frame();
        let mut entries = vec![(focal.mask(), weight)];
        if weight < 1.0 {
            entries.push((frame.full_mask(), 1.0 - weight));
        }
        Ok(MassFunction {
            frame: frame.clone(),
            focal: entries,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// `m(a)`; zero for non-focal sets.
    pub fn mass(&self, a: &Subset) -> Result<f64> {
        self.frame.check(a.frame())?;
        Ok(self.mass_of_mask(a.mask()))
    }

    pub fn mass_of_mask(&self, mask: u64) -> f64 {
        self.focal
            .binary_search_by_key(&mask, |&(m, _)| m)
            .map_or(0.0, |i| self.focal[i].1)
    }

    /// `Bel(a) = Σ_{B ⊆ a} m(B)`.
    pub fn belief(&self, a: &Subset) -> Result<f64> {
        self.frame.check(a.frame())?;
        let a = a.mask();
        Ok(self
            .focal
            .iter()
            .filter(|&&(b, _)| b & !a == 0)
            .map(|&(_, m)| m)
            .sum())
    }

    /// `Pl(a) = Σ_{B ∩ a ≠ ∅} m(B)`.
    pub fn plausibility(&self, a: &Subset) -> Result<f64> {
        self.frame.check(a.frame())?;
        let a = a.mask();
        Ok(self
            .focal
            .iter()
            .filter(|&&(b, _)| b & a != 0)
            .map(|&(_, m)| m)
            .sum())
    }

    /// Union of all focal elements.
    pub fn core(&self) -> Subset {
        let mask = self.focal.iter().fold(0, |acc, &(m, _)| acc | m);
        self.frame.subset_unchecked(mask)
    }

    /// Focal elements with their masses, ascending by mask.
    pub fn focal_elements(&self) -> Vec<(Subset, f64)> {
        self.focal
            .iter()
            .map(|&(mask, m)| (self.frame.subset_unchecked(mask), m))
            .collect()
    }

    /// Raw `(mask, mass)` pairs, ascending by mask.
    pub fn focal_masks(&self) -> &[(u64, f64)] {
        &self.focal
    }

    pub fn focal_count(&self) -> usize {
        self.focal.len()
    }

    pub fn total_mass(&self) -> f64 {
        self.focal.iter().map(|&(_, m)| m).sum()
    }

    /// Largest absolute per-set difference against `other` over the union of
    /// both focal sets.
    pub fn max_abs_diff(&self, other: &MassFunction) -> Result<f64> {
        self.frame.check(&other.frame)?;
        let mut diff: f64 = 0.0;
        for &(mask, m) in &self.focal {
            diff = diff.max((m - other.mass_of_mask(mask)).abs());
        }
        for &(mask, m) in &other.focal {
            diff = diff.max((m - self.mass_of_mask(mask)).abs());
        }
        Ok(diff)
    }
}

impl PartialEq for MassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.frame == other.frame && self.focal == other.focal
    }
}

impl fmt::Debug for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.focal_elements()
                    .iter()
                    .map(|(s, m)| (s.to_string(), m)),
            )
            .finish()
    }
}
