//! Spectral characterisation of `t`-designs.
//!
//! A `k`-uniform structure `D` on `[1..n]` is a `t-(n, k, lambda)` design
//! iff, for every `w` of weight `h <= t`,
//!
//! ```text
//! f_D^(w) = lambda P_k(h) / C(n - t, k - t).
//! ```
//!
//! The module also assembles the complete Walsh spectrum that any
//! `(n-2)/2-(n, n/2, 1)` Steiner system must have, by three independent
//! routes for the values on weight `n/2`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::boolfn::{anf, walsh_at_mask, SpectrumByWeight};
use crate::design::{complement_lambda, lambda_table, DesignParameters, IncidenceStructure};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, krawtchouk, pow2, ExactInt, ExactRational};
use crate::pointset::{masks_of_weight, PointSet};

/// Default cap on `sum_{h <= t} C(n, h) * b`, the work done by
/// [`verify_spectral`].
pub const DEFAULT_SPECTRAL_BUDGET: u128 = 100_000_000;

/// The value a design's Walsh spectrum must take on a weight class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectedWalsh {
    Integral(ExactInt),
    /// Not an integer, so no design with these parameters exists.
    NonIntegral(ExactRational),
}

impl ExpectedWalsh {
    fn from_rational(r: ExactRational) -> Self {
        if r.is_integer() {
            Self::Integral(r.to_integer())
        } else {
            Self::NonIntegral(r)
        }
    }

    pub fn integral(&self) -> Option<&ExactInt> {
        match self {
            Self::Integral(v) => Some(v),
            Self::NonIntegral(_) => None,
        }
    }

    pub fn as_rational(&self) -> ExactRational {
        match self {
            Self::Integral(v) => ExactRational::from_integer(v.clone()),
            Self::NonIntegral(r) => r.clone(),
        }
    }
}

fn check_tkn(t: u32, n: u32, k: u32) -> Result<()> {
    if t == 0 || t > k || k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= t <= k <= n, got t = {t}, k = {k}, n = {n}"
        )));
    }
    Ok(())
}

fn expected_rational(t: u32, n: u32, k: u32, lambda: &ExactRational, h: u32) -> Result<ExactRational> {
    let p = krawtchouk(n, k, h)?;
    let den = binomial((n - t) as u64, (k - t) as i64);
    Ok(lambda * ExactRational::new(p, den))
}

/// `lambda P_k(h) / C(n-t, k-t)` for `0 <= h <= t`.
pub fn expected_walsh(t: u32, n: u32, k: u32, lambda: &ExactInt, h: u32) -> Result<ExpectedWalsh> {
    check_tkn(t, n, k)?;
    if h > t {
        return Err(Error::OutOfRange {
            what: "h",
            value: h as i64,
            range: format!("[0, {t}]"),
        });
    }
    let lambda = ExactRational::from_integer(lambda.clone());
    Ok(ExpectedWalsh::from_rational(expected_rational(t, n, k, &lambda, h)?))
}

/// A point of the spectrum that disagrees with the design prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralViolation {
    pub w: PointSet,
    pub expected: ExactRational,
    pub actual: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralVerdict {
    pub is_design: bool,
    pub t: u32,
    pub lambda: Option<ExactInt>,
    pub first_violation: Option<SpectralViolation>,
}

pub fn verify_spectral(d: &IncidenceStructure, t: u32) -> Result<SpectralVerdict> {
    verify_spectral_with_budget(d, t, DEFAULT_SPECTRAL_BUDGET)
}

/// Checks the spectral condition on every `w` with `wt(w) <= t`, inferring
/// `lambda` from `f^(0) = b`. The reported violation is the one with the
/// smallest mask value.
pub fn verify_spectral_with_budget(d: &IncidenceStructure, t: u32, budget: u128) -> Result<SpectralVerdict> {
    let (n, k) = (d.n(), d.k());
    if t == 0 || t > k {
        return Err(Error::Precondition(format!(
            "strength t = {t} must satisfy 1 <= t <= k = {k}"
        )));
    }
    let points: ExactInt = (0..=t).map(|h| binomial(n as u64, h as i64)).sum();
    let work = u128::try_from(&(points * d.b())).unwrap_or(u128::MAX);
    if work > budget {
        return Err(Error::BudgetExceeded { required: work, budget });
    }

    let b = ExactInt::from(d.b());
    let lambda = ExactRational::new(
        &b * binomial(k as u64, t as i64),
        binomial(n as u64, t as i64),
    );
    let f = d.characteristic_function();
    let mut first: Option<SpectralViolation> = None;
    for h in 0..=t {
        let expected = expected_rational(t, n, k, &lambda, h)?;
        let target = expected.is_integer().then(|| expected.to_integer());
        for w in masks_of_weight(n, h) {
            if first.as_ref().is_some_and(|v| v.w.mask() < w) {
                break;
            }
            let actual = walsh_at_mask(&f, w);
            if target.as_ref() != Some(&ExactInt::from(actual)) {
                first = Some(SpectralViolation {
                    w: PointSet::new(n, w)?,
                    expected: expected.clone(),
                    actual,
                });
                break;
            }
        }
    }
    if first.is_none() && !lambda.is_integer() {
        return Err(Error::Inconsistency(format!(
            "spectrum matched a non-integral lambda = {lambda}"
        )));
    }
    Ok(SpectralVerdict {
        is_design: first.is_none(),
        t,
        lambda: first.is_none().then(|| lambda.to_integer()),
        first_violation: first,
    })
}

/// Which statement about the ANF of a design's characteristic function
/// failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnfRule {
    /// No monomial of degree below `k`.
    NoLowDegree,
    /// The degree-`k` monomials are exactly the blocks.
    BlocksAtDegreeK,
    /// Degree `n - h`, `1 <= h <= t`: all or none, present iff lambda-bar_h odd.
    ComplementParity,
    /// The degree-`n` monomial is present iff `b` is odd.
    TopDegree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfViolation {
    pub rule: AnfRule,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfStructureReport {
    pub degree_histogram: BTreeMap<u32, u64>,
    pub violations: Vec<AnfViolation>,
}

impl AnfStructureReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares the ANF of `f_D` against the structure forced by the design
/// parameters. Any violation means the implementation is wrong.
pub fn anf_structure_check(d: &IncidenceStructure, params: &DesignParameters) -> Result<AnfStructureReport> {
    if params.n != d.n() || params.k != d.k() || params.b != ExactInt::from(d.b()) {
        return Err(Error::Precondition(format!(
            "parameters {}-({}, {}, {}) do not describe a structure with n = {}, k = {}, b = {}",
            params.t,
            params.n,
            params.k,
            params.lambda,
            d.n(),
            d.k(),
            d.b()
        )));
    }
    let (n, k) = (d.n(), d.k());
    let form = anf(&d.characteristic_function())?;
    let hist = form.degree_histogram().clone();
    let mut violations = Vec::new();
    let mut fail = |rule, detail: String| violations.push(AnfViolation { rule, detail });

    let low: u64 = hist.range(..k).map(|(_, c)| *c).sum();
    if low != 0 {
        fail(AnfRule::NoLowDegree, format!("{low} terms of degree < {k}"));
    }

    let deg_k: Vec<u64> = form.terms_of_degree(k).map(PointSet::mask).collect();
    let blocks: Vec<u64> = d.blocks().iter().map(PointSet::mask).collect();
    let mut sorted_k = deg_k.clone();
    sorted_k.sort_unstable();
    if sorted_k != blocks {
        fail(
            AnfRule::BlocksAtDegreeK,
            format!("{} degree-{k} terms vs {} blocks", deg_k.len(), blocks.len()),
        );
    }

    for h in 1..=params.t.min(n) {
        let degree = n - h;
        let present = hist.get(&degree).copied().unwrap_or(0);
        let all = binomial(n as u64, degree as i64);
        let odd = complement_lambda(params, h)?.is_odd();
        let expected = if odd { all.clone() } else { ExactInt::zero() };
        if ExactInt::from(present) != expected {
            fail(
                AnfRule::ComplementParity,
                format!("degree {degree}: {present} of {all} terms present, lambda-bar_{h} odd = {odd}"),
            );
        }
    }

    let top = hist.get(&n).copied().unwrap_or(0) == 1;
    if top != params.b.is_odd() {
        fail(
            AnfRule::TopDegree,
            format!("degree-{n} term present = {top}, b = {}", params.b),
        );
    }
    Ok(AnfStructureReport {
        degree_histogram: hist,
        violations,
    })
}

/// For a `t-(n, n/2, lambda)` structure: every odd weight `1 <= wt(w) <= t`
/// has `f^(w) = 0`.
pub fn zero_odd_weights_check(d: &IncidenceStructure, t: u32) -> Result<bool> {
    if d.n() % 2 != 0 || 2 * d.k() != d.n() {
        return Err(Error::Precondition(format!(
            "requires even n and k = n/2, got n = {}, k = {}",
            d.n(),
            d.k()
        )));
    }
    let f = d.characteristic_function();
    Ok((1..=t.min(d.n()))
        .step_by(2)
        .all(|h| masks_of_weight(d.n(), h).all(|w| walsh_at_mask(&f, w) == 0)))
}

fn check_steiner_n(n: u32) -> Result<()> {
    if n % 4 != 0 || n < 8 {
        return Err(Error::Precondition(format!(
            "Steiner spectrum needs n = 0 mod 4 and n >= 8, got {n}"
        )));
    }
    Ok(())
}

fn exact_quotient(num: ExactInt, den: ExactInt, what: &str) -> Result<ExactInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!("{what}: {num} / {den} is not exact")));
    }
    Ok(q)
}

/// `lambda_0 .. lambda_{(n-2)/2}` for `(n-2)/2-(n, n/2, 1)`.
pub fn steiner_lambdas(n: u32) -> Result<Vec<ExactInt>> {
    check_steiner_n(n)?;
    lambda_table((n - 2) / 2, n, n / 2, &ExactInt::one())?
        .map(|p| p.lambda_s)
        .ok_or_else(|| Error::Inconsistency(format!("lambda_s not integral for n = {n}")))
}

/// `sum_{l=0}^{h-1} (-1)^l C((n+2)/2, l+1)`.
pub fn steiner_inner_sum(n: u32, h: u32) -> ExactInt {
    let m = (n as u64 + 2) / 2;
    let mut acc = ExactInt::zero();
    for l in 0..h {
        let term = binomial(m, l as i64 + 1);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Walsh value on a block of an `(n-2)/2-(n, n/2, 1)` design:
/// `a = 2^(n/2) - 2 sum_{h=1}^{n/2} C(n/2, h) S(h) / (n+2)`.
pub fn steiner_a(n: u32) -> Result<ExactInt> {
    check_steiner_n(n)?;
    let half = n / 2;
    let total: ExactInt = (1..=half)
        .map(|h| binomial(half as u64, h as i64) * steiner_inner_sum(n, h))
        .sum();
    let correction = exact_quotient(total * 2, ExactInt::from(n + 2), "steiner a")?;
    Ok(pow2(half) - correction)
}

/// Walsh value on a weight-`n/2` non-block: `-2 (a - P_{n/2}(n/2)) / n`.
pub fn steiner_a_tilde(n: u32) -> Result<ExactInt> {
    let a = steiner_a(n)?;
    let p = krawtchouk(n, n / 2, n / 2)?;
    exact_quotient((a - p) * -2, ExactInt::from(n), "steiner a-tilde")
}

/// Solution of the intersection-count system for a weight-`n/2` set `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionCounts {
    /// `y_i`: number of blocks meeting `B` in exactly `i` points.
    pub y: Vec<ExactInt>,
    /// `sum_i (-1)^i y_i`, the Walsh value at `B`.
    pub walsh_value: ExactInt,
}

/// Back-substitutes `sum_{i=r}^{n/2} C(i, r) y_i = C(n/2, r) lambda_r` from
/// `r = (n-2)/2` down to 1 with `y_0 = y_{n/2} = [B is a block]`, then checks
/// the `r = 0` row and that every `y_i` is a nonnegative integer.
pub fn steiner_nonblock_system(n: u32, is_block: bool) -> Result<IntersectionCounts> {
    let lambdas = steiner_lambdas(n)?;
    let half = n / 2;
    let edge = if is_block { ExactInt::one() } else { ExactInt::zero() };
    let mut y = vec![ExactInt::zero(); half as usize + 1];
    y[0] = edge.clone();
    y[half as usize] = edge;
    let row_lhs = |y: &[ExactInt], r: u32, from: u32| -> ExactInt {
        (from..=half)
            .map(|i| binomial(i as u64, r as i64) * &y[i as usize])
            .sum()
    };
    for r in (1..half).rev() {
        let rhs = binomial(half as u64, r as i64) * &lambdas[r as usize];
        y[r as usize] = rhs - row_lhs(&y, r, r + 1);
    }
    let b = &lambdas[0];
    if &row_lhs(&y, 0, 0) != b {
        return Err(Error::Inconsistency(format!(
            "intersection counts for n = {n} do not sum to b = {b}"
        )));
    }
    if let Some((i, v)) = y.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::Inconsistency(format!("y_{i} = {v} is negative for n = {n}")));
    }
    let walsh_value = y
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v })
        .sum();
    Ok(IntersectionCounts { y, walsh_value })
}

/// `sum_{r=0}^{(n-2)/2} (-1)^r C(n/2, r) lambda_r`, which vanishes for
/// `(n-2)/2-(n, n/2, 1)` parameters.
pub fn steiner_alternating_lambda_sum(n: u32) -> Result<ExactInt> {
    let lambdas = steiner_lambdas(n)?;
    let half = (n / 2) as u64;
    Ok(lambdas
        .iter()
        .enumerate()
        .map(|(r, l)| {
            let term = binomial(half, r as i64) * l;
            if r % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum())
}

/// The Walsh spectrum every `(n-2)/2-(n, n/2, 1)` Steiner system must have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSpectrum {
    pub n: u32,
    /// Value on weight-`n/2` vectors whose support is a block.
    pub a: ExactInt,
    /// Value on weight-`n/2` vectors whose support is not a block.
    pub a_tilde: ExactInt,
    /// Number of blocks, `lambda_0`.
    pub b: ExactInt,
    /// Constant value on weight `h`, for `h != n/2` (`None` at `n/2`).
    pub by_weight: Vec<Option<ExactInt>>,
}

impl SteinerSpectrum {
    pub fn to_spectrum_by_weight(&self) -> SpectrumByWeight {
        let n = self.n;
        let half = n / 2;
        let mut out = SpectrumByWeight::new(n);
        for h in 0..=n {
            let mult = binomial(n as u64, h as i64);
            match &self.by_weight[h as usize] {
                Some(v) => out.add(h, v.clone(), mult),
                None => {
                    out.add(half, self.a.clone(), self.b.clone());
                    out.add(half, self.a_tilde.clone(), mult - &self.b);
                }
            }
        }
        out
    }
}

/// Assembles the spectrum and checks the sum and sum-of-squares identities
/// on weight `n/2` plus Parseval over the whole space.
pub fn steiner_full_spectrum(n: u32) -> Result<SteinerSpectrum> {
    check_steiner_n(n)?;
    let t = (n - 2) / 2;
    let k = n / 2;
    let one = ExactInt::one();
    let mut by_weight = vec![None; n as usize + 1];
    for h in 0..=t {
        let v = expected_walsh(t, n, k, &one, h)?
            .integral()
            .cloned()
            .ok_or_else(|| Error::Inconsistency(format!("non-integral Walsh value at weight {h}")))?;
        // complement symmetry with (-1)^(n/2) = 1
        by_weight[(n - h) as usize] = Some(v.clone());
        by_weight[h as usize] = Some(v);
    }
    let spectrum = SteinerSpectrum {
        n,
        a: steiner_a(n)?,
        a_tilde: steiner_a_tilde(n)?,
        b: steiner_lambdas(n)?[0].clone(),
        by_weight,
    };
    if !sum_identities_hold(n, &spectrum.a, &spectrum.a_tilde, &spectrum.b)? {
        return Err(Error::Inconsistency(format!(
            "assembled Steiner spectrum for n = {n} fails its sum identities"
        )));
    }
    let by_weight = spectrum.to_spectrum_by_weight();
    let parseval: ExactInt = by_weight.rows().map(|(_, v, m)| v * v * m).sum();
    if parseval != pow2(n) * &spectrum.b {
        return Err(Error::Inconsistency(format!("Parseval fails for n = {n}")));
    }
    Ok(spectrum)
}

/// Checks, for the spectrum of `(n-2)/2-(n, n/2, 1)` with `b` blocks,
///
/// ```text
/// sum_{wt w = n/2} f^(w)   = -4/(n+2)       sum_{h<n/2} C(n,h) P_{n/2}(h)
/// sum_{wt w = n/2} f^(w)^2 = 2^n b - 8/(n+2)^2 sum_{h<n/2} C(n,h) P_{n/2}(h)^2
/// ```
pub fn check_sum_identities(n: u32, b: &ExactInt) -> Result<bool> {
    check_steiner_n(n)?;
    sum_identities_hold(n, &steiner_a(n)?, &steiner_a_tilde(n)?, b)
}

fn sum_identities_hold(n: u32, a: &ExactInt, a_tilde: &ExactInt, b: &ExactInt) -> Result<bool> {
    let half = n / 2;
    let classes = binomial(n as u64, half as i64);
    let non_blocks = &classes - b;
    let sum = b * a + &non_blocks * a_tilde;
    let squares = b * a * a + &non_blocks * a_tilde * a_tilde;

    let mut p_sum = ExactInt::zero();
    let mut p_sq = ExactInt::zero();
    for h in 0..half {
        let c = binomial(n as u64, h as i64);
        let p = krawtchouk(n, half, h)?;
        p_sum += &c * &p;
        p_sq += c * &p * &p;
    }
    let n2 = ExactInt::from(n + 2);
    let rhs_sum = ExactRational::new(p_sum * -4, n2.clone());
    let rhs_sq = ExactRational::from_integer(pow2(n) * b) - ExactRational::new(p_sq * 8, &n2 * &n2);
    Ok(ExactRational::from_integer(sum) == rhs_sum && ExactRational::from_integer(squares) == rhs_sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::verify_bruteforce;
    use crate::fixtures;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn expected_values() {
        let one = int(1);
        let vals: Vec<ExactInt> = (0..=2)
            .map(|h| expected_walsh(2, 7, 3, &one, h).unwrap().integral().unwrap().clone())
            .collect();
        assert_eq!(vals, vec![int(7), int(1), int(-1)]);
        assert_eq!(expected_walsh(5, 12, 6, &one, 2).unwrap(), ExpectedWalsh::Integral(int(-12)));
        assert_eq!(expected_walsh(5, 12, 6, &one, 1).unwrap(), ExpectedWalsh::Integral(int(0)));
        // 2-(8,3,1): P_3(0) = 56 over C(6,1) = 6 is not integral
        assert!(expected_walsh(2, 8, 3, &one, 0).unwrap().integral().is_none());
        assert!(expected_walsh(2, 7, 3, &one, 3).is_err());
    }

    #[test]
    fn spectral_verdicts() {
        let v = verify_spectral(&fixtures::fano(), 2).unwrap();
        assert!(v.is_design);
        assert_eq!(v.lambda, Some(int(1)));
        assert!(v.first_violation.is_none());

        let v = verify_spectral(&fixtures::fano_minus_one(), 2).unwrap();
        assert!(!v.is_design);
        let w = v.first_violation.unwrap();
        assert!(w.w.weight() <= 2);
        assert_ne!(ExactRational::from_integer(int(w.actual)), w.expected);

        let s = fixtures::generate_s5612().unwrap();
        let v = verify_spectral(&s, 5).unwrap();
        assert!(v.is_design);
        assert_eq!(v.lambda, Some(int(1)));
    }

    #[test]
    fn spectral_budget() {
        assert!(matches!(
            verify_spectral_with_budget(&fixtures::fano(), 2, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn anf_structure_examples() {
        let fano = fixtures::fano();
        let p = verify_bruteforce(&fano, 2).unwrap().unwrap();
        let r = anf_structure_check(&fano, &p).unwrap();
        assert!(r.holds(), "{:?}", r.violations);
        assert_eq!(r.degree_histogram.get(&5), None);
        assert_eq!(r.degree_histogram.get(&6), None);

        let s = fixtures::generate_s5612().unwrap();
        let p = verify_bruteforce(&s, 5).unwrap().unwrap();
        let r = anf_structure_check(&s, &p).unwrap();
        assert!(r.holds(), "{:?}", r.violations);
        let hist: Vec<(u32, u64)> = r.degree_histogram.into_iter().collect();
        assert_eq!(hist, vec![(6, 132), (7, 792)]);

        let c = fixtures::complete_design(4, 2).unwrap();
        let p = verify_bruteforce(&c, 1).unwrap().unwrap();
        let r = anf_structure_check(&c, &p).unwrap();
        assert!(r.holds());
        assert_eq!(r.degree_histogram.get(&2), Some(&6));

        let wrong = lambda_table(2, 7, 3, &int(2)).unwrap().unwrap();
        assert!(anf_structure_check(&fano, &wrong).is_err());
    }

    #[test]
    fn zero_odd_weights() {
        let s = fixtures::generate_s5612().unwrap();
        assert!(zero_odd_weights_check(&s, 5).unwrap());
        let c = fixtures::complete_design(4, 2).unwrap();
        assert!(zero_odd_weights_check(&c, 1).unwrap());
        assert!(zero_odd_weights_check(&fixtures::fano(), 2).is_err());
    }

    #[test]
    fn steiner_values_n12() {
        let sums: Vec<ExactInt> = (1..=6).map(|h| steiner_inner_sum(12, h)).collect();
        assert_eq!(sums, vec![int(7), int(-14), int(21), int(-14), int(7), int(0)]);
        let weighted: ExactInt = (1..=6u32).map(|h| binomial(6, h as i64) * steiner_inner_sum(12, h)).sum();
        assert_eq!(weighted, int(84));
        assert_eq!(steiner_a(12).unwrap(), int(52));
        assert_eq!(steiner_a_tilde(12).unwrap(), int(-12));
        assert_eq!(steiner_nonblock_system(12, true).unwrap().walsh_value, int(52));
        assert_eq!(steiner_nonblock_system(12, false).unwrap().walsh_value, int(-12));
        assert!(steiner_a(10).is_err());
        assert!(steiner_a(4).is_err());
    }

    #[test]
    fn steiner_values_n8() {
        // 3-(8,4,1): a block meets its complement in 0 points and the other
        // 12 blocks in 2 points; a non-block 4-set meets 4 + 6 + 4 blocks in
        // 1, 2, 3 points
        let block = steiner_nonblock_system(8, true).unwrap();
        assert_eq!(block.y, vec![int(1), int(0), int(12), int(0), int(1)]);
        let non = steiner_nonblock_system(8, false).unwrap();
        assert_eq!(non.y, vec![int(0), int(4), int(6), int(4), int(0)]);
        assert_eq!(steiner_a(8).unwrap(), int(14));
        assert_eq!(steiner_a_tilde(8).unwrap(), int(-2));
        assert_eq!(block.walsh_value, int(14));
        assert_eq!(non.walsh_value, int(-2));
        for n in [8, 12] {
            assert_eq!(steiner_alternating_lambda_sum(n).unwrap(), int(0));
        }
    }

    #[test]
    fn steiner_spectrum_n12_values() {
        let s = steiner_full_spectrum(12).unwrap();
        let bw = s.to_spectrum_by_weight();
        let rows: Vec<(u32, i64, i64)> = bw
            .rows()
            .map(|(h, v, m)| (h, v.try_into().unwrap(), m.try_into().unwrap()))
            .collect();
        let expected = vec![
            (0, 132, 1),
            (1, 0, 12),
            (2, -12, 66),
            (3, 0, 220),
            (4, 4, 495),
            (5, 0, 792),
            (6, -12, 792),
            (6, 52, 132),
            (7, 0, 792),
            (8, 4, 495),
            (9, 0, 220),
            (10, -12, 66),
            (11, 0, 12),
            (12, 132, 1),
        ];
        assert_eq!(rows, expected);
        assert!(check_sum_identities(12, &int(132)).unwrap());
        assert!(!check_sum_identities(12, &int(131)).unwrap());
        // both sides of the weight-6 sum identity
        assert_eq!(int(132 * 52 + 792 * -12), int(-2640));
    }

    #[test]
    fn steiner_spectrum_matches_generated_design() {
        let d = fixtures::generate_s5612().unwrap();
        let dense = crate::boolfn::walsh_full(&d.characteristic_function()).unwrap();
        assert_eq!(dense.by_weight(), steiner_full_spectrum(12).unwrap().to_spectrum_by_weight());
    }
}
