//! Boolean functions `GF(2)^n -> {0, 1}` viewed as integer-valued functions.
//!
//! The Walsh transform used throughout is the sum of `f` itself,
//! `f^(w) = sum_x f(x) (-1)^(w.x)`, not of `(-1)^f`. The `(-1)^f` transform
//! appears only as the butterfly kernel inside [`walsh_full`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::ExactInt;
use crate::pointset::{check_ambient, full_mask, masks_of_weight, PointSet};

/// Largest ambient size accepted by the dense transforms by default.
pub const DEFAULT_DENSE_CAP: u32 = 28;

/// A Boolean function stored by its support, sorted by mask value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    support: Vec<u64>,
}

impl BooleanFunction {
    /// Builds the function from its support; repeated points collapse.
    pub fn from_support<I>(n: u32, support: I) -> Result<Self>
    where
        I: IntoIterator<Item = PointSet>,
    {
        check_ambient(n)?;
        let mut masks = Vec::new();
        for p in support {
            if p.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: p.n(),
                });
            }
            masks.push(p.mask());
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Self { n, support: masks })
    }

    pub fn from_masks<I: IntoIterator<Item = u64>>(n: u32, masks: I) -> Result<Self> {
        check_ambient(n)?;
        let full = full_mask(n);
        let mut support: Vec<u64> = masks.into_iter().collect();
        if let Some(bad) = support.iter().find(|m| **m & !full != 0) {
            return Err(Error::InvalidStructure(format!(
                "mask {bad:#x} has bits above position {n}"
            )));
        }
        support.sort_unstable();
        support.dedup();
        Ok(Self { n, support })
    }

    /// Builds the function from a truth table indexed by mask value.
    pub fn from_truth_table(n: u32, table: &[bool]) -> Result<Self> {
        check_ambient(n)?;
        if n > 63 || table.len() as u128 != 1u128 << n {
            return Err(Error::Precondition(format!(
                "truth table for n = {n} needs 2^{n} entries, got {}",
                table.len()
            )));
        }
        let support = table
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(|(x, _)| x as u64)
            .collect();
        Ok(Self { n, support })
    }

    pub fn zero(n: u32) -> Result<Self> {
        Self::from_masks(n, std::iter::empty())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `wt(f)`, the size of the support.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn support_masks(&self) -> &[u64] {
        &self.support
    }

    pub fn support(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.support
            .iter()
            .map(move |&m| PointSet::from_mask_unchecked(self.n, m))
    }

    pub fn eval_mask(&self, x: u64) -> bool {
        self.support.binary_search(&x).is_ok()
    }

    pub fn eval(&self, x: &PointSet) -> bool {
        self.eval_mask(x.mask())
    }

    fn ensure_dense(&self, cap: u32) -> Result<()> {
        if self.n > cap {
            return Err(Error::DenseCapExceeded { n: self.n, cap });
        }
        Ok(())
    }
}

/// `f^(w)` evaluated directly as a signed count over the support.
pub fn walsh_at(f: &BooleanFunction, w: &PointSet) -> Result<i64> {
    if w.n() != f.n() {
        return Err(Error::SizeMismatch {
            expected: f.n(),
            actual: w.n(),
        });
    }
    Ok(walsh_at_mask(f, w.mask()))
}

pub(crate) fn walsh_at_mask(f: &BooleanFunction, w: u64) -> i64 {
    f.support
        .iter()
        .map(|&x| if (x & w).count_ones() & 1 == 0 { 1 } else { -1 })
        .sum()
}

/// Dense Walsh spectrum indexed by mask value.
///
/// Values are held as `i32`: `|f^(w)| <= 2^n` and `n` never exceeds the
/// dense cap, so every entry is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn from_values(n: u32, values: Vec<i64>) -> Result<Self> {
        check_ambient(n)?;
        if n > 30 || values.len() != 1usize << n {
            return Err(Error::Precondition(format!(
                "dense spectrum for n = {n} needs 2^{n} values, got {}",
                values.len()
            )));
        }
        let values = values
            .into_iter()
            .map(|v| {
                i32::try_from(v).map_err(|_| {
                    Error::Precondition(format!("spectrum value {v} exceeds the dense range"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, w: u64) -> i64 {
        self.values[w as usize] as i64
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().map(|&v| v as i64)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> ExactInt {
        self.values.iter().map(|&v| v as i64).sum::<i64>().into()
    }

    pub fn sum_of_squares(&self) -> ExactInt {
        self.values
            .iter()
            .map(|&v| (v as i128) * (v as i128))
            .sum::<i128>()
            .into()
    }

    pub fn by_weight(&self) -> SpectrumByWeight {
        let mut out = SpectrumByWeight::new(self.n);
        for (w, &v) in self.values.iter().enumerate() {
            out.add(w.count_ones(), ExactInt::from(v), ExactInt::one());
        }
        out
    }
}

/// In-place unnormalised Walsh-Hadamard butterfly.
fn butterfly<T>(data: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let len = data.len();
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

pub fn walsh_full(f: &BooleanFunction) -> Result<WalshSpectrum> {
    walsh_full_with_cap(f, DEFAULT_DENSE_CAP)
}

/// Dense spectrum via the `(-1)^f` butterfly `F^`, bridged back with
/// `f^(w) = (2^n [w = 0] - F^(w)) / 2`.
pub fn walsh_full_with_cap(f: &BooleanFunction, cap: u32) -> Result<WalshSpectrum> {
    f.ensure_dense(cap.min(29))?;
    let size = 1usize << f.n;
    let mut signed = vec![1i32; size];
    for &x in &f.support {
        signed[x as usize] = -1;
    }
    butterfly(&mut signed);
    signed[0] = (size as i32) - signed[0];
    for v in signed.iter_mut().skip(1) {
        *v = -*v;
    }
    for v in signed.iter_mut() {
        debug_assert!(*v % 2 == 0);
        *v /= 2;
    }
    Ok(WalshSpectrum {
        n: f.n,
        values: signed,
    })
}

/// Recovers `f` from a dense spectrum: `2^n f(x) = sum_w f^(w) (-1)^(w.x)`.
pub fn inverse_walsh(spectrum: &WalshSpectrum) -> Result<BooleanFunction> {
    let n = spectrum.n;
    let mut acc: Vec<i64> = spectrum.values().collect();
    butterfly(&mut acc);
    let scale = 1i64 << n;
    let mut support = Vec::new();
    for (x, &v) in acc.iter().enumerate() {
        if v == scale {
            support.push(x as u64);
        } else if v != 0 {
            let reason = if v % scale == 0 {
                format!("inverse value {} is not 0 or 1", v / scale)
            } else {
                format!("2^n f(x) = {v} is not divisible by 2^{n}")
            };
            return Err(Error::NotBoolean { x: x as u64, reason });
        }
    }
    BooleanFunction::from_masks(n, support)
}

/// Walsh values grouped by Hamming weight of `w`: for each weight, a
/// multiset `value -> multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumByWeight {
    n: u32,
    classes: Vec<BTreeMap<ExactInt, ExactInt>>,
}

impl SpectrumByWeight {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            classes: vec![BTreeMap::new(); n as usize + 1],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add(&mut self, weight: u32, value: ExactInt, multiplicity: ExactInt) {
        if multiplicity.is_zero() {
            return;
        }
        *self.classes[weight as usize]
            .entry(value)
            .or_insert_with(ExactInt::zero) += multiplicity;
    }

    pub fn class(&self, weight: u32) -> &BTreeMap<ExactInt, ExactInt> {
        &self.classes[weight as usize]
    }

    /// Restricts to weights `<= max_weight`.
    pub fn truncated(&self, max_weight: u32) -> Self {
        let mut out = self.clone();
        for (h, class) in out.classes.iter_mut().enumerate() {
            if h as u32 > max_weight {
                class.clear();
            }
        }
        out
    }

    /// `(weight, value, multiplicity)` sorted by weight then value.
    pub fn rows(&self) -> impl Iterator<Item = (u32, &ExactInt, &ExactInt)> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(h, class)| class.iter().map(move |(v, m)| (h as u32, v, m)))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,value,multiplicity\n");
        for (h, v, m) in self.rows() {
            let _ = writeln!(out, "{h},{v},{m}");
        }
        out
    }
}

/// Weight classes `0..=max_weight` evaluated point by point with
/// [`walsh_at`]; no dense table is built.
pub fn walsh_by_weight(f: &BooleanFunction, max_weight: u32) -> SpectrumByWeight {
    let mut out = SpectrumByWeight::new(f.n);
    for h in 0..=max_weight.min(f.n) {
        for w in masks_of_weight(f.n, h) {
            out.add(h, ExactInt::from(walsh_at_mask(f, w)), ExactInt::one());
        }
    }
    out
}

/// The algebraic normal form: the set of monomials (each named by its
/// variable set) whose GF(2) sum equals `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicNormalForm {
    n: u32,
    terms: Vec<PointSet>,
    degree_histogram: BTreeMap<u32, u64>,
}

fn term_order(a: &PointSet, b: &PointSet) -> Ordering {
    a.weight()
        .cmp(&b.weight())
        .then_with(|| a.points().cmp(&b.points()))
}

impl AlgebraicNormalForm {
    pub fn from_terms<I: IntoIterator<Item = PointSet>>(n: u32, terms: I) -> Self {
        let mut terms: Vec<PointSet> = terms.into_iter().collect();
        terms.sort_by(term_order);
        terms.dedup();
        let mut degree_histogram = BTreeMap::new();
        for t in &terms {
            *degree_histogram.entry(t.weight()).or_insert(0) += 1;
        }
        Self {
            n,
            terms,
            degree_histogram,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Terms ordered by degree, then lexicographically on their ascending
    /// variable indices.
    pub fn terms(&self) -> &[PointSet] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_histogram(&self) -> &BTreeMap<u32, u64> {
        &self.degree_histogram
    }

    pub fn terms_of_degree(&self, d: u32) -> impl Iterator<Item = &PointSet> {
        self.terms.iter().filter(move |t| t.weight() == d)
    }

    pub fn contains(&self, term: &PointSet) -> bool {
        self.terms
            .binary_search_by(|probe| term_order(probe, term))
            .is_ok()
    }

    /// Evaluates the polynomial over GF(2) at `x`.
    pub fn evaluate(&self, x: u64) -> bool {
        self.terms
            .iter()
            .filter(|t| t.mask() & !x == 0)
            .count()
            % 2
            == 1
    }

    /// One term per line, `x_i*x_j*...`, constant term as `1`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.terms {
            out.push_str(&render_term(t));
            out.push('\n');
        }
        out
    }
}

pub fn render_term(t: &PointSet) -> String {
    if t.weight() == 0 {
        return "1".to_string();
    }
    t.points()
        .iter()
        .map(|i| format!("x_{i}"))
        .collect::<Vec<_>>()
        .join("*")
}

pub fn anf(f: &BooleanFunction) -> Result<AlgebraicNormalForm> {
    anf_with_cap(f, DEFAULT_DENSE_CAP)
}

/// GF(2) Moebius transform over the subset lattice on a bit-packed table.
pub fn anf_with_cap(f: &BooleanFunction, cap: u32) -> Result<AlgebraicNormalForm> {
    f.ensure_dense(cap)?;
    let n = f.n;
    let words = (1usize << n).div_ceil(64);
    let mut table = vec![0u64; words];
    for &x in &f.support {
        table[(x >> 6) as usize] |= 1u64 << (x & 63);
    }
    // positions whose bit i is clear, for in-word strides 1..32
    const LOW: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0F0F_0F0F_0F0F_0F0F,
        0x00FF_00FF_00FF_00FF,
        0x0000_FFFF_0000_FFFF,
        0x0000_0000_FFFF_FFFF,
    ];
    for i in 0..n.min(6) {
        let shift = 1u32 << i;
        for word in table.iter_mut() {
            *word ^= (*word & LOW[i as usize]) << shift;
        }
    }
    for i in 6..n {
        let stride = 1usize << (i - 6);
        for block in table.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                *b ^= *a;
            }
        }
    }
    let mut terms = Vec::new();
    for (wi, &word) in table.iter().enumerate() {
        let mut m = word;
        while m != 0 {
            let bit = m.trailing_zeros() as u64;
            terms.push(PointSet::from_mask_unchecked(n, ((wi as u64) << 6) | bit));
            m &= m - 1;
        }
    }
    Ok(AlgebraicNormalForm::from_terms(n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fano_fn() -> BooleanFunction {
        fixtures::fano().characteristic_function()
    }

    #[test]
    fn walsh_at_fano_and_empty() {
        let f = fano_fn();
        assert_eq!(walsh_at(&f, &PointSet::empty(7).unwrap()).unwrap(), 7);
        for p in 1..=7 {
            let w = PointSet::from_points(7, &[p]).unwrap();
            assert_eq!(walsh_at(&f, &w).unwrap(), 1);
        }
        let z = BooleanFunction::zero(7).unwrap();
        assert_eq!(walsh_at(&z, &PointSet::full(7).unwrap()).unwrap(), 0);
        assert!(walsh_at(&f, &PointSet::empty(6).unwrap()).is_err());
    }

    #[test]
    fn walsh_full_single_point() {
        let f = BooleanFunction::from_masks(1, [1]).unwrap();
        let s = walsh_full(&f).unwrap();
        assert_eq!(s.value(0), 1);
        assert_eq!(s.value(1), -1);
    }

    #[test]
    fn walsh_full_fano_by_weight() {
        let s = walsh_full(&fano_fn()).unwrap();
        for w in 0..128u64 {
            let direct = walsh_at_mask(&fano_fn(), w);
            assert_eq!(s.value(w), direct);
        }
        let bw = s.by_weight();
        let class = |h: u32| -> Vec<(i64, i64)> {
            bw.class(h)
                .iter()
                .map(|(v, m)| (v.try_into().unwrap(), m.try_into().unwrap()))
                .collect()
        };
        assert_eq!(class(0), vec![(7, 1)]);
        assert_eq!(class(1), vec![(1, 7)]);
        assert_eq!(class(2), vec![(-1, 21)]);
        assert_eq!(class(3), vec![(-7, 7), (1, 28)]);
        assert_eq!(class(4), vec![(-1, 28), (7, 7)]);
        assert_eq!(class(5), vec![(1, 21)]);
        assert_eq!(class(6), vec![(-1, 7)]);
        assert_eq!(class(7), vec![(-7, 1)]);
    }

    #[test]
    fn dense_cap_enforced() {
        let f = BooleanFunction::zero(12).unwrap();
        assert!(matches!(
            walsh_full_with_cap(&f, 10),
            Err(Error::DenseCapExceeded { n: 12, cap: 10 })
        ));
        assert!(anf_with_cap(&f, 10).is_err());
    }

    #[test]
    fn inverse_walsh_cases() {
        let zero = WalshSpectrum::from_values(3, vec![0; 8]).unwrap();
        assert_eq!(inverse_walsh(&zero).unwrap().weight(), 0);
        let f = fano_fn();
        assert_eq!(inverse_walsh(&walsh_full(&f).unwrap()).unwrap(), f);
        let bad = WalshSpectrum::from_values(1, vec![3, 0]).unwrap();
        match inverse_walsh(&bad) {
            Err(Error::NotBoolean { x, .. }) => assert_eq!(x, 0),
            other => panic!("expected NotBoolean, got {other:?}"),
        }
        // 2^n f(x) = 4 at x = 0 for n = 1: integral but not 0/1
        let two = WalshSpectrum::from_values(1, vec![2, 2]).unwrap();
        assert!(matches!(inverse_walsh(&two), Err(Error::NotBoolean { x: 0, .. })));
    }

    #[test]
    fn anf_fano_matches_listing() {
        let a = anf(&fano_fn()).unwrap();
        let hist: Vec<(u32, u64)> = a.degree_histogram().iter().map(|(d, c)| (*d, *c)).collect();
        assert_eq!(hist, vec![(3, 7), (4, 28), (7, 1)]);
        let lines: Vec<Vec<u32>> = a.terms_of_degree(3).map(|t| t.points()).collect();
        assert_eq!(
            lines,
            vec![
                vec![1, 2, 3],
                vec![1, 4, 5],
                vec![1, 6, 7],
                vec![2, 4, 7],
                vec![2, 5, 6],
                vec![3, 4, 6],
                vec![3, 5, 7]
            ]
        );
        // the 7 missing degree-4 monomials are the complements of the lines
        for line in a.terms_of_degree(3) {
            assert!(!a.contains(&line.complement()));
        }
        let rendered = a.render();
        assert!(rendered.starts_with("x_1*x_2*x_3\nx_1*x_4*x_5\n"));
        assert!(rendered.ends_with("x_1*x_2*x_3*x_4*x_5*x_6*x_7\n"));
    }

    #[test]
    fn anf_zero_and_constant() {
        assert!(anf(&BooleanFunction::zero(5).unwrap()).unwrap().is_empty());
        let all = BooleanFunction::from_masks(3, 0..8).unwrap();
        let a = anf(&all).unwrap();
        assert_eq!(a.render(), "1\n");
    }

    /// Literal expansion of `f(x) = sum_v prod_j (x_j + v_j + 1)`: the
    /// coefficient of the monomial over `S` is the number of support points
    /// `v` with `v_j = 0` for every `j` outside `S`, mod 2.
    fn anf_by_expansion(f: &BooleanFunction) -> Vec<u64> {
        let n = f.n();
        (0..1u64 << n)
            .filter(|&s| f.support_masks().iter().filter(|&&v| v & !s == 0).count() % 2 == 1)
            .collect()
    }

    #[test]
    fn anf_agrees_with_literal_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8u32 {
            for _ in 0..20 {
                let masks: Vec<u64> = (0..1u64 << n).filter(|_| rng.gen_bool(0.4)).collect();
                let f = BooleanFunction::from_masks(n, masks).unwrap();
                let mut got: Vec<u64> = anf(&f).unwrap().terms().iter().map(|t| t.mask()).collect();
                got.sort_unstable();
                assert_eq!(got, anf_by_expansion(&f));
            }
        }
    }

    #[test]
    fn csv_rendering_sorted() {
        let s = walsh_full(&fano_fn()).unwrap().by_weight();
        let csv = s.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("weight,value,multiplicity"));
        assert_eq!(lines.next(), Some("0,7,1"));
        assert!(csv.contains("3,-7,7\n3,1,28\n"));
        let partial = walsh_by_weight(&fano_fn(), 2);
        assert_eq!(partial, s.truncated(2));
    }
}
