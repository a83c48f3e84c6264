//! Incidence structures and their classical parameters.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, ExactInt};
use crate::pointset::{check_ambient, masks_of_weight, PointSet};

/// Default cap on the number of `t`-subsets enumerated by
/// [`verify_bruteforce`].
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;

/// A simple `k`-uniform incidence structure on `[1..n]`.
///
/// Blocks are kept sorted by mask value. `k = 0` is accepted so that the
/// complement of the trivial design `{[1..n]}` stays representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    n: u32,
    k: u32,
    blocks: Vec<PointSet>,
}

impl IncidenceStructure {
    pub fn new(n: u32, k: u32, blocks: Vec<PointSet>) -> Result<Self> {
        check_ambient(n)?;
        if k > n {
            return Err(Error::InvalidStructure(format!("block size {k} exceeds n = {n}")));
        }
        if blocks.is_empty() {
            return Err(Error::InvalidStructure("no blocks".into()));
        }
        for b in &blocks {
            if b.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: b.n(),
                });
            }
            if b.weight() != k {
                return Err(Error::InvalidStructure(format!(
                    "block {b} has size {}, expected {k}",
                    b.weight()
                )));
            }
        }
        let mut blocks = blocks;
        blocks.sort_by_key(PointSet::mask);
        if let Some(pair) = blocks.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidStructure(format!("duplicate block {}", pair[0])));
        }
        Ok(Self { n, k, blocks })
    }

    /// Builds from 1-based point lists; `k` is taken from the first block.
    pub fn from_point_lists(n: u32, lists: &[Vec<u32>]) -> Result<Self> {
        let blocks = lists
            .iter()
            .map(|l| PointSet::from_points(n, l))
            .collect::<Result<Vec<_>>>()?;
        let k = blocks.first().map_or(0, PointSet::weight);
        Self::new(n, k, blocks)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn contains_block(&self, block: &PointSet) -> bool {
        self.blocks
            .binary_search_by_key(&block.mask(), PointSet::mask)
            .is_ok()
    }

    /// `f_D`: the Boolean function whose support is the set of blocks.
    pub fn characteristic_function(&self) -> BooleanFunction {
        BooleanFunction::from_masks(self.n, self.blocks.iter().map(PointSet::mask))
            .expect("blocks are valid point sets")
    }

    /// A copy with one block removed; `None` if it was the only block or is
    /// not present.
    pub fn without_block(&self, block: &PointSet) -> Option<Self> {
        let rest: Vec<PointSet> = self.blocks.iter().filter(|b| *b != block).copied().collect();
        if rest.len() == self.blocks.len() || rest.is_empty() {
            return None;
        }
        Some(Self {
            n: self.n,
            k: self.k,
            blocks: rest,
        })
    }
}

/// Parameters of a `t-(n, k, lambda)` design together with the derived
/// `lambda_0 .. lambda_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignParameters {
    pub t: u32,
    pub n: u32,
    pub k: u32,
    pub lambda: ExactInt,
    pub lambda_s: Vec<ExactInt>,
    pub b: ExactInt,
}

/// `lambda_s = lambda C(n-s, t-s) / C(k-s, t-s)` for `s = 0..=t`, or `None`
/// when any of them is not an integer.
pub fn lambda_table(t: u32, n: u32, k: u32, lambda: &ExactInt) -> Result<Option<DesignParameters>> {
    if t == 0 || t > k || k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= t <= k <= n, got t = {t}, k = {k}, n = {n}"
        )));
    }
    let mut lambda_s = Vec::with_capacity(t as usize + 1);
    for s in 0..=t {
        let num = lambda * binomial((n - s) as u64, (t - s) as i64);
        let den = binomial((k - s) as u64, (t - s) as i64);
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Ok(None);
        }
        lambda_s.push(q);
    }
    Ok(Some(DesignParameters {
        t,
        n,
        k,
        lambda: lambda.clone(),
        b: lambda_s[0].clone(),
        lambda_s,
    }))
}

fn check_t(d: &IncidenceStructure, t: u32) -> Result<()> {
    if t == 0 || t > d.k {
        return Err(Error::Precondition(format!(
            "strength t = {t} must satisfy 1 <= t <= k = {}",
            d.k
        )));
    }
    Ok(())
}

pub fn verify_bruteforce(d: &IncidenceStructure, t: u32) -> Result<Option<DesignParameters>> {
    verify_bruteforce_with_budget(d, t, DEFAULT_ENUMERATION_BUDGET)
}

/// Counts, for every `t`-subset, the blocks containing it. Returns the
/// design parameters when that count is constant.
pub fn verify_bruteforce_with_budget(
    d: &IncidenceStructure,
    t: u32,
    budget: u128,
) -> Result<Option<DesignParameters>> {
    check_t(d, t)?;
    let subsets = binomial(d.n as u64, t as i64);
    let required: u128 = u128::try_from(&subsets).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let masks: Vec<u64> = d.blocks.iter().map(PointSet::mask).collect();
    let mut lambda: Option<usize> = None;
    for s in masks_of_weight(d.n, t) {
        let count = masks.iter().filter(|&&b| s & !b == 0).count();
        match lambda {
            None => lambda = Some(count),
            Some(l) if l != count => return Ok(None),
            _ => {}
        }
    }
    let lambda = ExactInt::from(lambda.unwrap_or(0));
    let params = lambda_table(t, d.n, d.k, &lambda)?;
    if params.is_none() {
        return Err(Error::Inconsistency(format!(
            "constant t-subset count {lambda} gives non-integral lambda_s"
        )));
    }
    Ok(params)
}

pub fn complement_design(d: &IncidenceStructure) -> IncidenceStructure {
    let blocks = d.blocks.iter().map(PointSet::complement).collect();
    IncidenceStructure::new(d.n, d.n - d.k, blocks).expect("complements of distinct blocks are distinct")
}

/// `lambda-bar_s = sum_{i=0}^{s} (-1)^i C(s, i) lambda_i`.
pub fn complement_lambda(params: &DesignParameters, s: u32) -> Result<ExactInt> {
    if s > params.t {
        return Err(Error::OutOfRange {
            what: "s",
            value: s as i64,
            range: format!("[0, {}]", params.t),
        });
    }
    let mut acc = ExactInt::zero();
    for i in 0..=s {
        let term = binomial(s as u64, i as i64) * &params.lambda_s[i as usize];
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn exact_div(num: ExactInt, den: &ExactInt, what: &str) -> Result<ExactInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!("{what}: {num} / {den} is not an integer")));
    }
    Ok(q)
}

/// Block intersection number `lambda_(i,j) = lambda C(n-i-j, k-i) / C(n-t, k-t)`,
/// defined for `i + j <= t`.
pub fn intersection_number(params: &DesignParameters, i: u32, j: u32) -> Result<ExactInt> {
    if i + j > params.t {
        return Err(Error::OutOfRange {
            what: "i + j",
            value: (i + j) as i64,
            range: format!("[0, {}]", params.t),
        });
    }
    let (n, k, t) = (params.n as i64, params.k as i64, params.t as i64);
    let num = &params.lambda * binomial((n - (i + j) as i64) as u64, k - i as i64);
    let den = binomial((n - t) as u64, k - t);
    exact_div(num, &den, "lambda_(i,j)")
}

/// For a `t-(n, t+1, 1)` design, a block `X` and a `j`-subset `Y` of `X`:
/// the number of blocks meeting `X` exactly in `Y`'s complement within `X`,
/// i.e. `lambda_(t-(j-1), j)(X, Y)`, by the alternating closed form.
pub fn steiner_intersection(params: &DesignParameters, j: u32) -> Result<ExactInt> {
    if params.k != params.t + 1 || !params.lambda.is_one() {
        return Err(Error::Precondition(format!(
            "parameters {}-({}, {}, {}) are not of the form t-(n, t+1, 1)",
            params.t, params.n, params.k, params.lambda
        )));
    }
    if j == 0 || j > params.t + 1 {
        return Err(Error::OutOfRange {
            what: "j",
            value: j as i64,
            range: format!("[1, {}]", params.t + 1),
        });
    }
    let m = (params.n - params.t) as u64;
    let mut inner = ExactInt::zero();
    for l in 0..j {
        let term = binomial(m, l as i64 + 1);
        if l % 2 == 0 {
            inner += term;
        } else {
            inner -= term;
        }
    }
    if (j - 1) % 2 == 1 {
        inner = -inner;
    }
    let q = exact_div(inner, &ExactInt::from(m), "steiner intersection")?;
    Ok(if j % 2 == 0 { q + 1 } else { q - 1 })
}

/// True iff the blocks are all `k`-subsets, or the structure is `{[1..n]}`.
pub fn is_trivial(d: &IncidenceStructure, _t: u32) -> bool {
    let all = binomial(d.n as u64, d.k as i64);
    ExactInt::from(d.b()) == all || (d.k == d.n && d.b() == 1)
}

/// Exact count of blocks `B` with `B ∩ X = Y` for explicit `X ⊇ Y`.
pub fn count_blocks_meeting(d: &IncidenceStructure, x: &PointSet, y: &PointSet) -> usize {
    d.blocks
        .iter()
        .filter(|b| b.mask() & x.mask() == y.mask())
        .count()
}
