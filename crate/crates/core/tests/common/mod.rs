#![allow(dead_code)]

use dsfusion::{Frame, MassFunction};
use proptest::prelude::*;

/// Raw focal data: `(mask, integer weight)` pairs, normalized on build.
pub type RawMass = Vec<(u64, u32)>;

pub fn frame_of(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("h{i}"))).unwrap()
}

pub fn build(frame: &Frame, raw: &RawMass) -> MassFunction {
    let total: f64 = raw.iter().map(|&(_, w)| f64::from(w)).sum();
    let entries = raw
        .iter()
        .map(|&(mask, w)| (frame.subset_from_mask(mask).unwrap(), f64::from(w) / total));
    MassFunction::from_entries(frame, entries).unwrap()
}

/// 1..=max_focal focal elements drawn from the non-empty subsets of an
/// `n`-element frame.
pub fn raw_mass(n: usize, max_focal: usize) -> impl Strategy<Value = RawMass> {
    let full = (1u64 << n) - 1;
    prop::collection::vec((1..=full, 1u32..=1000), 1..=max_focal)
}

/// Like [`raw_mass`] but with every focal element inside `within`.
pub fn raw_mass_within(within: u64, max_focal: usize) -> impl Strategy<Value = RawMass> {
    let members: Vec<u64> = (0..64)
        .filter(|b| within & (1 << b) != 0)
        .map(|b| 1u64 << b)
        .collect();
    let k = members.len();
    prop::collection::vec(
        (prop::collection::vec(any::<bool>(), k), 1u32..=1000).prop_filter_map(
            "non-empty focal",
            move |(bits, w)| {
                let mask = members
                    .iter()
                    .zip(&bits)
                    .filter(|(_, b)| **b)
                    .fold(0, |acc, (m, _)| acc | m);
                (mask != 0).then_some((mask, w))
            },
        ),
        1..=max_focal,
    )
}

/// A frame size in 2..=6 and `count` raw masses over it.
pub fn frame_and_masses(
    count: std::ops::RangeInclusive<usize>,
    max_focal: usize,
) -> impl Strategy<Value = (usize, Vec<RawMass>)> {
    (2usize..=6).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(raw_mass(n, max_focal), count.clone()),
        )
    })
}

pub fn assert_close(a: &MassFunction, b: &MassFunction, tol: f64) {
    let d = a.max_abs_diff(b).unwrap();
    assert!(
        d <= tol,
        "masses differ by {d:e} (tol {tol:e}):\n{a:?}\n{b:?}"
    );
}

/// Random scenario documents as JSON text, always valid.
pub fn scenario_text() -> impl Strategy<Value = String> {
    (
        prop::collection::hash_set("[a-zA-Z][a-zA-Z0-9_]{0,5}", 2..=5),
        1usize..=4,
        any::<bool>(),
        any::<bool>(),
    )
        .prop_flat_map(|(labels, conditions, named, described)| {
            let labels: Vec<String> = labels.into_iter().collect();
            let n = labels.len();
            let full = (1u64 << n) - 1;
            let source = (
                "[a-z ]{1,12}",
                1..full,
                prop::collection::vec(1e-6f64..=1.0, conditions),
            );
            (
                Just(labels),
                prop::collection::vec(source, 1..=6),
                Just(named),
                Just(described),
            )
        })
        .prop_map(|(labels, sources, named, described)| {
            let sources: Vec<serde_json::Value> = sources
                .into_iter()
                .enumerate()
                .map(|(i, (name, mask, bpa))| {
                    let focal: Vec<&String> = labels
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask & (1 << b) != 0)
                        .map(|(_, l)| l)
                        .collect();
                    serde_json::json!({ "name": format!("{i}:{name}"), "focal": focal, "bpa": bpa })
                })
                .collect();
            let mut doc = serde_json::json!({ "frame": labels, "sources": sources });
            if named {
                doc["name"] = serde_json::json!("random");
            }
            if described {
                let desc: Vec<String> = labels.iter().map(|l| format!("{l} long")).collect();
                doc["descriptions"] = serde_json::json!(desc);
            }
            serde_json::to_string(&doc).unwrap()
        })
}
