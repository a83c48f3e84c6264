use std::fmt;

use crate::error::{Error, Result};

pub const MAX_AMBIENT: u32 = 64;

/// A subset of `[1..n]`, equivalently a vector of `GF(2)^n`. Point `i`
/// (1-based) is bit `i - 1` of the mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    n: u32,
    mask: u64,
}

pub(crate) fn full_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_ambient(n: u32) -> Result<()> {
    if n == 0 || n > MAX_AMBIENT {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range: format!("[1, {MAX_AMBIENT}]"),
        });
    }
    Ok(())
}

impl PointSet {
    pub fn new(n: u32, mask: u64) -> Result<Self> {
        check_ambient(n)?;
        if mask & !full_mask(n) != 0 {
            return Err(Error::InvalidStructure(format!(
                "mask {mask:#x} has bits above position {n}"
            )));
        }
        Ok(Self { n, mask })
    }

    /// Builds a set from 1-based point labels. Repeated labels are rejected.
    pub fn from_points(n: u32, points: &[u32]) -> Result<Self> {
        check_ambient(n)?;
        let mut mask = 0u64;
        for &p in points {
            if p == 0 || p > n {
                return Err(Error::OutOfRange {
                    what: "point",
                    value: p as i64,
                    range: format!("[1, {n}]"),
                });
            }
            let bit = 1u64 << (p - 1);
            if mask & bit != 0 {
                return Err(Error::InvalidStructure(format!("point {p} repeated")));
            }
            mask |= bit;
        }
        Ok(Self { n, mask })
    }

    pub(crate) fn from_mask_unchecked(n: u32, mask: u64) -> Self {
        debug_assert!(mask & !full_mask(n) == 0);
        Self { n, mask }
    }

    pub fn empty(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: u32) -> Result<Self> {
        Self::new(n, full_mask(n))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            mask: !self.mask & full_mask(self.n),
        }
    }

    pub fn contains(&self, point: u32) -> bool {
        point >= 1 && point <= self.n && self.mask >> (point - 1) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn intersection_size(&self, other: &PointSet) -> u32 {
        (self.mask & other.mask).count_ones()
    }

    /// Parity of the standard inner product.
    pub fn dot(&self, other: &PointSet) -> bool {
        (self.mask & other.mask).count_ones() & 1 == 1
    }

    /// Ascending 1-based labels.
    pub fn points(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        let mut m = self.mask;
        while m != 0 {
            out.push(m.trailing_zeros() + 1);
            m &= m - 1;
        }
        out
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

pub fn complement_vector(w: &PointSet) -> PointSet {
    w.complement()
}

pub fn weight(w: &PointSet) -> u32 {
    w.weight()
}

/// Iterates the masks of weight `h` among `n` bits in increasing numeric
/// order (Gosper's hack).
#[derive(Debug, Clone)]
pub struct MasksOfWeight {
    next: Option<u128>,
    limit: u128,
}

pub fn masks_of_weight(n: u32, h: u32) -> MasksOfWeight {
    let limit = 1u128 << n;
    let next = if h > n {
        None
    } else {
        Some((1u128 << h) - 1)
    };
    MasksOfWeight { next, limit }
}

impl Iterator for MasksOfWeight {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as u64)
    }
}
