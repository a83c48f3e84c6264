//! The binary linear code `C_f = {(u f(x) + v.x)_{x != 0} : u in GF(2), v in GF(2)^n}`
//! and its weight distribution read off the Walsh spectrum of `f`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::boolfn::{walsh_full, BooleanFunction};
use crate::error::{Error, Result};
use crate::exactmath::ExactInt;
use crate::pointset::PointSet;

/// Largest `n` accepted by the codeword enumeration oracle.
pub const MAX_ENUMERATION_N: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub length: u64,
    pub dimension: u32,
    pub counts: BTreeMap<u64, ExactInt>,
}

impl WeightDistribution {
    fn new(n: u32) -> Self {
        Self {
            length: (1u64 << n) - 1,
            dimension: n + 1,
            counts: BTreeMap::new(),
        }
    }

    fn add(&mut self, weight: u64, count: ExactInt) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(weight).or_insert_with(ExactInt::zero) += count;
    }

    pub fn total(&self) -> ExactInt {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight with a nonzero count.
    pub fn minimum_distance(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in &self.counts {
            let _ = writeln!(out, "{w},{c}");
        }
        out
    }
}

fn check_code_function(f: &BooleanFunction) -> Result<()> {
    if f.eval_mask(0) {
        return Err(Error::Precondition("f(0) must be 0".into()));
    }
    if f.weight() == 0 {
        return Err(Error::Precondition("f must not be identically zero".into()));
    }
    Ok(())
}

/// Weight distribution of `C_f` from the dense Walsh spectrum; no codeword is
/// built.
///
/// The multiset ranges over all pairs `(u, v)`. If `f` is itself a linear
/// form `w.x` then `f^(w) = -2^(n-1)`, every codeword arises from exactly two
/// pairs and the code has dimension `n`; counts are halved accordingly.
pub fn code_weight_distribution(f: &BooleanFunction) -> Result<WeightDistribution> {
    check_code_function(f)?;
    let n = f.n();
    let spectrum = walsh_full(f)?;
    let half = 1i64 << (n - 1);
    let mut dist = WeightDistribution::new(n);
    dist.add(0, ExactInt::one());
    dist.add(spectrum.value(0) as u64, ExactInt::one());
    dist.add(half as u64, ExactInt::from((1u64 << n) - 1));
    for w in 1..(1u64 << n) {
        dist.add((half + spectrum.value(w)) as u64, ExactInt::one());
    }
    if dist.counts.get(&0).is_some_and(|c| *c == ExactInt::from(2)) {
        dist.dimension = n;
        for c in dist.counts.values_mut() {
            *c = &*c / 2;
        }
    }
    Ok(dist)
}

/// Weight of the codeword `(u f(x) + v.x)` over nonzero `x`, by direct
/// evaluation.
pub fn code_enumerate(f: &BooleanFunction, u: bool, v: &PointSet) -> Result<u64> {
    check_code_function(f)?;
    if v.n() != f.n() {
        return Err(Error::SizeMismatch {
            expected: f.n(),
            actual: v.n(),
        });
    }
    if f.n() > MAX_ENUMERATION_N {
        return Err(Error::DenseCapExceeded {
            n: f.n(),
            cap: MAX_ENUMERATION_N,
        });
    }
    let count = (1..(1u64 << f.n()))
        .filter(|&x| (u && f.eval_mask(x)) ^ ((x & v.mask()).count_ones() % 2 == 1))
        .count();
    Ok(count as u64)
}

/// Weight histogram of the distinct codewords over all `2^(n+1)` pairs
/// `(u, v)`, using word-packed truth tables. The dimension is read off the
/// number of distinct codewords.
pub fn enumerate_weight_distribution(f: &BooleanFunction) -> Result<WeightDistribution> {
    check_code_function(f)?;
    let n = f.n();
    if n > MAX_ENUMERATION_N {
        return Err(Error::DenseCapExceeded {
            n,
            cap: MAX_ENUMERATION_N,
        });
    }
    let size = 1usize << n;
    let words = size.div_ceil(64);
    let valid = if size >= 64 { u64::MAX } else { (1u64 << size) - 1 };
    let mut table = vec![0u64; words];
    for &x in f.support_masks() {
        table[(x / 64) as usize] |= 1 << (x % 64);
    }
    // in-word truth tables of x -> v.x for the low six bits of v
    let low: Vec<u64> = (0..64u64)
        .map(|v| (0..64u64).filter(|x| (x & v).count_ones() % 2 == 1).fold(0, |acc, x| acc | 1 << x))
        .collect();
    let mut codewords: HashSet<Vec<u64>> = HashSet::with_capacity(2 * size);
    for v in 0..size as u64 {
        let (v_low, v_high) = (v & 63, v >> 6);
        let linear: Vec<u64> = (0..words as u64)
            .map(|i| {
                let flip = if (v_high & i).count_ones() % 2 == 1 { u64::MAX } else { 0 };
                (low[v_low as usize] ^ flip) & valid
            })
            .collect();
        let affine: Vec<u64> = linear.iter().zip(&table).map(|(l, f)| l ^ f).collect();
        codewords.insert(linear);
        codewords.insert(affine);
    }
    let distinct = codewords.len() as u64;
    if !distinct.is_power_of_two() {
        return Err(Error::Inconsistency(format!("{distinct} distinct codewords")));
    }
    let mut dist = WeightDistribution::new(n);
    dist.dimension = distinct.trailing_zeros();
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for word in &codewords {
        let weight: u64 = word.iter().map(|w| w.count_ones() as u64).sum();
        *counts.entry(weight).or_default() += 1;
    }
    for (w, c) in counts {
        dist.add(w, ExactInt::from(c));
    }
    Ok(dist)
}
