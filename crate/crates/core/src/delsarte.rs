//! Delsarte-style characterisations in the Hamming and Johnson schemes,
//! written in terms of Walsh spectra. Sets of vectors are given by their
//! supports.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::boolfn::{walsh_at_mask, walsh_full, BooleanFunction};
use crate::design::{is_trivial, IncidenceStructure};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, eberlein, krawtchouk, pow2, ExactInt, ExactRational};
use crate::pointset::{masks_of_weight, PointSet};

/// Inner distribution `B_0..B_n` of a set in the Hamming scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    pub n: u32,
    pub b: Vec<ExactRational>,
}

/// Outer distribution `B'_0..B'_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterDistribution {
    pub n: u32,
    pub bp: Vec<ExactRational>,
}

fn indicator(c: &[PointSet]) -> Result<BooleanFunction> {
    let first = c
        .first()
        .ok_or_else(|| Error::Precondition("the set must be nonempty".into()))?;
    let n = first.n();
    let mut seen = HashSet::with_capacity(c.len());
    for x in c {
        if x.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: x.n(),
            });
        }
        if !seen.insert(x.mask()) {
            return Err(Error::InvalidStructure(format!("repeated vector {x}")));
        }
    }
    BooleanFunction::from_masks(n, c.iter().map(PointSet::mask))
}

/// `B_i = |{(u, v) in C^2 : d(u, v) = i}| / |C|`.
pub fn inner_distribution(c: &[PointSet]) -> Result<DistanceDistribution> {
    let n = indicator(c)?.n();
    let mut pairs = vec![0u64; n as usize + 1];
    for u in c {
        for v in c {
            pairs[(u.mask() ^ v.mask()).count_ones() as usize] += 1;
        }
    }
    let size = ExactInt::from(c.len());
    let b = pairs
        .into_iter()
        .map(|p| ExactRational::new(ExactInt::from(p), size.clone()))
        .collect();
    Ok(DistanceDistribution { n, b })
}

/// Largest `t` with `1_C^(w) = 0` for every `1 <= wt(w) <= t`.
pub fn oa_strength(c: &[PointSet]) -> Result<u32> {
    let f = indicator(c)?;
    let n = f.n();
    let spectrum = walsh_full(&f)?;
    let mut zero_up_to = n;
    for w in 1..(1u64 << n) {
        if spectrum.value(w) != 0 {
            zero_up_to = zero_up_to.min(w.count_ones() - 1);
        }
    }
    Ok(zero_up_to)
}

/// `B'_k` computed both as `(1/|C|) sum_i P_k(i) B_i` and as
/// `(1/|C|^2) sum_{wt w = k} 1_C^(w)^2`; the two must agree.
pub fn outer_distribution_hamming(c: &[PointSet]) -> Result<OuterDistribution> {
    let f = indicator(c)?;
    let n = f.n();
    let inner = inner_distribution(c)?;
    let size = ExactInt::from(c.len());
    let spectrum = walsh_full(&f)?;
    let mut class_squares = vec![ExactInt::zero(); n as usize + 1];
    for w in 0..(1u64 << n) {
        let v = spectrum.value(w);
        class_squares[w.count_ones() as usize] += ExactInt::from(v) * v;
    }
    let mut bp = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let mut via_inner = ExactRational::zero();
        for (i, b_i) in inner.b.iter().enumerate() {
            via_inner += b_i * ExactRational::from_integer(krawtchouk(n, k, i as u32)?);
        }
        via_inner /= ExactRational::from_integer(size.clone());
        let via_spectrum = ExactRational::new(class_squares[k as usize].clone(), &size * &size);
        if via_inner != via_spectrum {
            return Err(Error::Inconsistency(format!(
                "B'_{k}: {via_inner} from the inner distribution, {via_spectrum} from the spectrum"
            )));
        }
        bp.push(via_inner);
    }
    Ok(OuterDistribution { n, bp })
}

/// `S_h = sum_{wt w = h} f^(w)^2` for `h = 0..=n`.
fn squares_by_weight(f: &BooleanFunction) -> Result<Vec<ExactInt>> {
    let spectrum = walsh_full(f)?;
    let mut s = vec![ExactInt::zero(); f.n() as usize + 1];
    for w in 0..(1u64 << f.n()) {
        let v = spectrum.value(w);
        s[w.count_ones() as usize] += ExactInt::from(v) * v;
    }
    Ok(s)
}

/// The Johnson-scheme quantity
/// `sum_w f^(w)^2 sum_j (mu_i / v_j) Q_j(i) P_{2j}(wt w)` for `k <= n/2`,
/// with `j` ranging over `0..=k`.
pub fn johnson_outer_sum(n: u32, k: u32, squares: &[ExactInt], i: u32) -> Result<ExactRational> {
    let mu = ExactRational::new(ExactInt::from(n - 2 * i + 1), ExactInt::from(n - i + 1))
        * ExactRational::from_integer(binomial(n as u64, i as i64));
    let mut weights = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        let v_j = binomial(k as u64, j as i64) * binomial((n - k) as u64, j as i64);
        weights.push(&mu * ExactRational::new(eberlein(n, k, j, i)?, v_j));
    }
    let mut total = ExactRational::zero();
    for (h, s_h) in squares.iter().enumerate() {
        if s_h.is_zero() {
            continue;
        }
        let mut inner = ExactRational::zero();
        for (j, c_j) in weights.iter().enumerate() {
            inner += c_j * ExactRational::from_integer(krawtchouk(n, 2 * j as u32, h as u32)?);
        }
        total += inner * ExactRational::from_integer(s_h.clone());
    }
    Ok(total)
}

/// Decides whether `D` is a `t`-design by the vanishing of the Johnson
/// outer sums for `i = 1..=t`. For `k > n/2` the sums are taken in the
/// scheme on `(n-k)`-subsets, whose squared spectrum is the same; when
/// `t > n - k` only the complete design qualifies.
pub fn johnson_design_check(d: &IncidenceStructure, t: u32) -> Result<bool> {
    let (n, k) = (d.n(), d.k());
    if t == 0 || t > k {
        return Err(Error::Precondition(format!(
            "strength t = {t} must satisfy 1 <= t <= k = {k}"
        )));
    }
    let k_eff = k.min(n - k);
    if t > k_eff {
        return Ok(is_trivial(d, t));
    }
    let squares = squares_by_weight(&d.characteristic_function())?;
    for i in 1..=t {
        if !johnson_outer_sum(n, k_eff, &squares, i)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of `C(n,i) sum_{wt w = i} 1_D^(w)^2 = (sum_{y in D} P_i(wt y))^2`.
pub fn relative_design_sides(d: &[PointSet], i: u32) -> Result<(ExactInt, ExactInt)> {
    let f = indicator(d)?;
    let n = f.n();
    if i > n {
        return Err(Error::OutOfRange {
            what: "i",
            value: i as i64,
            range: format!("[0, {n}]"),
        });
    }
    let mut class = ExactInt::zero();
    for w in masks_of_weight(n, i) {
        let v = walsh_at_mask(&f, w);
        class += ExactInt::from(v) * v;
    }
    let lhs = binomial(n as u64, i as i64) * class;
    let mut sum = ExactInt::zero();
    for y in d {
        sum += krawtchouk(n, i, y.weight())?;
    }
    Ok((lhs, &sum * &sum))
}

/// Equality of both sides for every `i` in `1..=t`; all members must share
/// one weight.
pub fn relative_design_check(d: &[PointSet], t: u32) -> Result<bool> {
    let k = d.first().map(PointSet::weight).unwrap_or(0);
    if let Some(y) = d.iter().find(|y| y.weight() != k) {
        return Err(Error::Precondition(format!("{y} does not have weight {k}")));
    }
    for i in 1..=t {
        let (lhs, rhs) = relative_design_sides(d, i)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `B_i` from the spectrum: `(1/(2^n |C|)) sum_w 1_C^(w)^2 P_{2i}(wt w)`,
/// for a set of `k`-subsets with intersection classes `|u & v| = k - i`.
pub fn johnson_inner_from_spectrum(c: &[PointSet], i: u32) -> Result<ExactRational> {
    let f = indicator(c)?;
    let n = f.n();
    let squares = squares_by_weight(&f)?;
    let mut total = ExactInt::zero();
    for (h, s_h) in squares.iter().enumerate() {
        if 2 * i <= n {
            total += s_h * krawtchouk(n, 2 * i, h as u32)?;
        }
    }
    Ok(ExactRational::new(total, pow2(n) * c.len()))
}

impl OuterDistribution {
    pub fn all_nonnegative(&self) -> bool {
        self.bp.iter().all(|v| !v.is_negative())
    }
}
