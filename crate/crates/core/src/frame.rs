//! Frames of discernment and subsets of them.
//!
//! A [`Frame`] is an ordered set of at most 64 hypothesis labels. Subsets are
//! stored as a `u64` membership mask where bit `i` stands for `labels[i]`, so
//! every set operation is a single integer instruction.
//!
//! Each call to [`Frame::new`] mints a fresh identity. Subsets remember the
//! frame they came from and refuse to mix with subsets of another frame, even
//! one with identical labels.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_FRAME_SIZE: usize = 64;

static NEXT_FRAME_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
struct FrameData {
    id: u64,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered, finite frame of discernment.
///
/// Cloning is cheap and clones share identity.
#[derive(Clone)]
pub struct Frame(Arc<FrameData>);

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let id = NEXT_FRAME_ID.fetch_add(1, Ordering::Relaxed);
        Ok(Frame(Arc::new(FrameData { id, labels, index })))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    /// Always false; a frame holds at least one hypothesis.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    /// True when both handles come from the same [`Frame::new`] call.
    pub fn same_identity(&self, other: &Frame) -> bool {
        self.0.id == other.0.id
    }

    /// True when both frames list the same labels in the same order,
    /// regardless of identity.
    pub fn same_labels(&self, other: &Frame) -> bool {
        self.labels() == other.labels()
    }

    /// Mask with one bit set per hypothesis.
    pub fn full_mask(&self) -> u64 {
        if self.len() == MAX_FRAME_SIZE {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// The whole frame, Θ.
    pub fn full(&self) -> Subset {
        Subset {
            frame: self.clone(),
            mask: self.full_mask(),
        }
    }

    pub fn empty(&self) -> Subset {
        Subset {
            frame: self.clone(),
            mask: 0,
        }
    }

    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut mask = 0u64;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            mask |= 1 << i;
        }
        Ok(Subset {
            frame: self.clone(),
            mask,
        })
    }

    /// Builds a subset from a raw mask. Bits beyond the frame size are an
    /// error reported as an unknown label.
    pub fn subset_from_mask(&self, mask: u64) -> Result<Subset> {
        if mask & !self.full_mask() != 0 {
            let bit = (mask & !self.full_mask()).trailing_zeros();
            return Err(Error::UnknownLabel(format!("#{bit}")));
        }
        Ok(Subset {
            frame: self.clone(),
            mask,
        })
    }

    pub(crate) fn subset_unchecked(&self, mask: u64) -> Subset {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        Subset {
            frame: self.clone(),
            mask,
        }
    }

    /// Iterates every subset of the frame in ascending mask order. Intended
    /// for small frames; the count is `2^len`.
    pub fn powerset(&self) -> impl Iterator<Item = Subset> + '_ {
        assert!(
            self.len() < 32,
            "powerset of a {}-element frame",
            self.len()
        );
        (0..=self.full_mask()).map(move |m| self.subset_unchecked(m))
    }

    pub(crate) fn check(&self, other: &Frame) -> Result<()> {
        if self.same_identity(other) {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.same_identity(other)
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frame")
            .field("id", &self.0.id)
            .field("labels", &self.0.labels)
            .finish()
    }
}

/// A subset of one frame's hypotheses.
#[derive(Clone)]
pub struct Subset {
    frame: Frame,
    mask: u64,
}

impl Subset {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == self.frame.full_mask()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, label: &str) -> bool {
        self.frame
            .index_of(label)
            .is_some_and(|i| self.mask & (1 << i) != 0)
    }

    /// Member labels in frame order.
    pub fn labels(&self) -> Vec<&str> {
        self.frame
            .labels()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask & (1 << i) != 0)
            .map(|(_, l)| l.as_str())
            .collect()
    }

    pub fn intersect(&self, other: &Subset) -> Result<Subset> {
        self.frame.check(&other.frame)?;
        Ok(self.frame.subset_unchecked(self.mask & other.mask))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.frame.check(&other.frame)?;
        Ok(self.frame.subset_unchecked(self.mask | other.mask))
    }

    pub fn complement(&self) -> Subset {
        self.frame
            .subset_unchecked(!self.mask & self.frame.full_mask())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Subset) -> Result<bool> {
        self.frame.check(&other.frame)?;
        Ok(self.mask & !other.mask == 0)
    }

    pub fn intersects(&self, other: &Subset) -> Result<bool> {
        self.frame.check(&other.frame)?;
        Ok(self.mask & other.mask != 0)
    }

    /// Labels joined by `+` in frame order, e.g. `L+B`. Empty for ∅.
    pub fn key(&self) -> String {
        self.labels().join("+")
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.frame.same_identity(&other.frame)
    }
}

impl Eq for Subset {}

impl Hash for Subset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frame.0.id.hash(state);
        self.mask.hash(state);
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else if self.is_full() {
            f.write_str("Θ")
        } else {
            write!(f, "{{{}}}", self.labels().join(","))
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({{{}}})", self.labels().join(","))
    }
}
