//! Exhaustive n-way Dempster combination in exact arithmetic.
//!
//! Rather than folding pairwise, the oracle walks the full Cartesian product
//! of focal elements of all sources, multiplies the masses of each tuple and
//! credits the product to the tuple's intersection. Normalization happens
//! once, at the end. Agreement with [`super::fuse_all`] is therefore a check
//! of both the implementation and the associativity of the rule.
//!
//! Input masses are read as decimals: each `f64` is replaced by the shortest
//! decimal that lies within a few ulps of it, so `0.45` and `1.0 - 0.55` both
//! become exactly `9/20`. Each source is scaled to integer weights over its
//! own common denominator; those denominators cancel in the final ratio and
//! the enumeration itself only needs big-integer products.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::mass::MassFunction;

/// Maximum number of focal tuples the oracle will enumerate.
pub const ORACLE_TUPLE_CAP: u128 = 10_000_000;

/// Exact result of an n-way combination.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactFusion {
    pub frame: Frame,
    /// Normalized masses by ascending focal mask.
    pub masses: Vec<(u64, BigRational)>,
    /// Joint conflict: weight on ∅ over total weight.
    pub conflict: BigRational,
}

impl ExactFusion {
    pub fn mass_of_mask(&self, mask: u64) -> BigRational {
        self.masses
            .iter()
            .find(|(m, _)| *m == mask)
            .map_or_else(BigRational::zero, |(_, v)| v.clone())
    }

    pub fn to_mass_function(&self) -> MassFunction {
        let focal = self
            .masses
            .iter()
            .map(|(mask, v)| (*mask, v.to_f64().unwrap_or(f64::NAN)))
            .filter(|&(_, m)| m > 0.0)
            .collect();
        MassFunction::from_sorted_unchecked(&self.frame, focal)
    }
}

/// Reads `x` as the shortest decimal within 4 ulps of it.
pub fn decimal_to_rational(x: f64) -> BigRational {
    assert!(x.is_finite(), "non-finite mass {x}");
    if x == 0.0 {
        return BigRational::zero();
    }
    let tolerance = 4.0 * f64::EPSILON * x.abs();
    for precision in 0..=17 {
        let text = format!("{x:.precision$e}");
        let y: f64 = text.parse().expect("formatted float parses");
        if (y - x).abs() <= tolerance {
            return parse_scientific(&text);
        }
    }
    BigRational::from_float(x).expect("finite")
}

fn parse_scientific(text: &str) -> BigRational {
    let (mantissa, exponent) = text.split_once('e').expect("scientific notation");
    let exponent: i32 = exponent.parse().expect("exponent");
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let fraction_digits = mantissa.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let mut numer: BigInt = digits.parse().expect("mantissa digits");
    if negative {
        numer = -numer;
    }
    let shift = exponent - fraction_digits;
    let ten = BigInt::from(10u32);
    if shift >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-shift) as usize))
    }
}

/// One source scaled to integer weights.
fn integer_weights(m: &MassFunction) -> Vec<(u64, BigUint)> {
    let exact: Vec<(u64, BigRational)> = m
        .focal_masks()
        .iter()
        .map(|&(mask, v)| (mask, decimal_to_rational(v)))
        .collect();
    let denom = exact
        .iter()
        .fold(BigInt::one(), |acc, (_, r)| acc.lcm(r.denom()));
    exact
        .into_iter()
        .map(|(mask, r)| {
            let scaled = r * BigRational::from_integer(denom.clone());
            debug_assert!(scaled.is_integer());
            let w = scaled
                .to_integer()
                .to_biguint()
                .expect("masses are non-negative");
            (mask, w)
        })
        .collect()
}

fn enumerate(
    sources: &[Vec<(u64, BigUint)>],
    mask: u64,
    weight: &BigUint,
    acc: &mut BTreeMap<u64, BigUint>,
) {
    match sources.split_first() {
        None => {
            *acc.entry(mask).or_insert_with(BigUint::zero) += weight;
        }
        Some((head, tail)) => {
            for (focal, w) in head {
                enumerate(tail, mask & focal, &(weight * w), acc);
            }
        }
    }
}

/// Exact n-way combination of `sources`.
pub fn oracle_fuse_exact(sources: &[MassFunction]) -> Result<ExactFusion> {
    let (first, rest) = sources.split_first().ok_or(Error::EmptyInput)?;
    let frame = first.frame();
    for s in rest {
        frame.check(s.frame())?;
    }
    let tuples = sources
        .iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s.focal_count() as u128));
    if tuples > ORACLE_TUPLE_CAP {
        return Err(Error::ExplosionGuard {
            tuples,
            cap: ORACLE_TUPLE_CAP,
        });
    }

    let scaled: Vec<_> = sources.iter().map(integer_weights).collect();
    let mut acc = BTreeMap::new();
    enumerate(&scaled, frame.full_mask(), &BigUint::one(), &mut acc);

    let total: BigUint = acc.values().sum();
    let empty = acc.remove(&0).unwrap_or_else(BigUint::zero);
    let supported = &total - &empty;
    let to_rational = |n: &BigUint, d: &BigUint| {
        BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
    };
    let conflict = to_rational(&empty, &total);
    // k >= 1 - 1e-9  <=>  supported * 1e9 <= total
    if &supported * BigUint::from(1_000_000_000u32) <= total {
        return Err(Error::TotalConflict {
            k: conflict.to_f64().unwrap_or(1.0),
            step: None,
        });
    }
    let masses = acc
        .into_iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|(mask, w)| (mask, to_rational(&w, &supported)))
        .collect();
    Ok(ExactFusion {
        frame: frame.clone(),
        masses,
        conflict,
    })
}

/// [`oracle_fuse_exact`] rounded back to floating point.
pub fn oracle_fuse_all(sources: &[MassFunction]) -> Result<MassFunction> {
    oracle_fuse_exact(sources).map(|e| e.to_mass_function())
}
