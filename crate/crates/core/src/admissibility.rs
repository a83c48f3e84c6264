//! Necessary conditions for the existence of `t-(n, k, lambda)` designs and
//! the admissible `(n-2)/2-(n, n/2, 1)` parameters.

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, gcd, is_prime, krawtchouk, lcm_range, ExactInt};

/// Result of a single filter. A failure carries named witness values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Vec<(&'static str, ExactInt)>),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    fn fail(witness: &[(&'static str, ExactInt)]) -> Self {
        Outcome::Fail(witness.to_vec())
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

/// `C(k-i, t-i)` divides `lambda C(n-i, t-i)` for `0 <= i <= t`; the
/// witness is the first failing `i`.
pub fn filter_divisibility(t: u32, n: u32, k: u32, lambda: &ExactInt) -> Result<Outcome> {
    check_tkn(t, n, k)?;
    for i in 0..=t {
        let num = lambda * binomial((n - i) as u64, (t - i) as i64);
        let den = binomial((k - i) as u64, (t - i) as i64);
        if !num.is_multiple_of(&den) {
            return Ok(Outcome::fail(&[("i", i.into()), ("divisor", den), ("dividend", num)]));
        }
    }
    Ok(Outcome::Pass)
}

/// `C(n-t, k-t)` divides `lambda P_k(h)` for `0 <= h <= t`; the witness is
/// the first failing `h`.
pub fn filter_spectral_divisibility(t: u32, n: u32, k: u32, lambda: &ExactInt) -> Result<Outcome> {
    check_tkn(t, n, k)?;
    let den = binomial((n - t) as u64, (k - t) as i64);
    for h in 0..=t {
        let num = lambda * krawtchouk(n, k, h)?;
        if !num.is_multiple_of(&den) {
            return Ok(Outcome::fail(&[("h", h.into()), ("divisor", den), ("dividend", num)]));
        }
    }
    Ok(Outcome::Pass)
}

/// `gcd(n - t, lcm(1, ..., t+1)) = 1`, the condition for `t-(n, t+1, 1)`.
pub fn filter_gcd(t: u32, n: u32) -> Result<Outcome> {
    if t == 0 || t >= n {
        return Err(Error::Precondition(format!("need 1 <= t < n, got t = {t}, n = {n}")));
    }
    let l = lcm_range(t);
    let g = gcd(&ExactInt::from(n - t), &l);
    Ok(if g.is_one() {
        Outcome::Pass
    } else {
        Outcome::fail(&[("gcd", g), ("lcm", l)])
    })
}

/// Evaluates `floor(a_0 / d_0 floor(a_1 / d_1 floor(...)))` innermost first.
/// An empty tower is 1.
fn floor_tower(terms: impl Iterator<Item = (u64, u64)>) -> ExactInt {
    terms.fold(ExactInt::one(), |v, (num, den)| (v * num).div_floor(&ExactInt::from(den)))
}

/// `C(k, m) (k - t) / (n - k - 1) <= tower`, compared by cross-multiplying.
fn johnson_bound(n: u32, k: u32, t: u32, m: u32, tower: ExactInt) -> Outcome {
    if n <= k + 1 {
        return Outcome::Pass;
    }
    let lhs = binomial(k as u64, m as i64) * (k - t);
    let rhs = &tower * (n - k - 1);
    if lhs <= rhs {
        Outcome::Pass
    } else {
        Outcome::fail(&[("lhs_numerator", lhs), ("lhs_denominator", (n - k - 1).into()), ("bound", tower)])
    }
}

/// The three Johnson-type bounds for Steiner systems `t-(n, k, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonOutcome {
    /// `C(k, t-1)(k-t)/(n-k-1) <= floor(k/(t-1) floor((k-1)/(t-2) ... floor((k-t+3)/2)))`
    pub filter2: Outcome,
    /// `C(k, k-t+1)(k-t)/(n-k-1) <= floor(k/(k-t+1) floor((k-1)/(k-t) ... floor((t+1)/2)))`
    pub filter3: Outcome,
    /// `C(n, t) >= (n/k)^delta C(n - delta, h) C(k, t)` with `t = 2h + delta`
    pub filter4: Outcome,
}

impl JohnsonOutcome {
    pub fn passed(&self) -> bool {
        self.filter2.passed() && self.filter3.passed() && self.filter4.passed()
    }
}

pub fn filter_johnson(t: u32, n: u32, k: u32) -> Result<JohnsonOutcome> {
    check_tkn(t, n, k)?;
    let k64 = k as u64;
    let tower2 = floor_tower((0..t.saturating_sub(2) as u64).rev().map(|j| (k64 - j, (t - 1) as u64 - j)));
    let tower3 = floor_tower((0..(k - t) as u64).rev().map(|j| (k64 - j, (k - t + 1) as u64 - j)));
    let filter2 = johnson_bound(n, k, t, t - 1, tower2);
    let filter3 = johnson_bound(n, k, t, k - t + 1, tower3);

    let (h, delta) = (t / 2, t % 2);
    let lhs = ExactInt::from(k).pow(delta) * binomial(n as u64, t as i64);
    let rhs = ExactInt::from(n).pow(delta) * binomial((n - delta) as u64, h as i64) * binomial(k64, t as i64);
    let filter4 = if lhs >= rhs {
        Outcome::Pass
    } else {
        Outcome::fail(&[("lhs", lhs), ("rhs", rhs)])
    };
    Ok(JohnsonOutcome {
        filter2,
        filter3,
        filter4,
    })
}

/// `n = 0 mod 4` and `(n+2)/2` prime, necessary for `(n-2)/2-(n, n/2, 1)`.
pub fn filter_steiner_half(n: u32) -> Outcome {
    if n % 4 != 0 {
        return Outcome::fail(&[("n_mod_4", (n % 4).into())]);
    }
    let q = (n as u64 + 2) / 2;
    if !is_prime(q) {
        return Outcome::fail(&[("half_plus_one", q.into())]);
    }
    debug_assert_eq!(n % 4, 0);
    Outcome::Pass
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub lambda: ExactInt,
    pub passed: Vec<&'static str>,
    pub failed: Vec<(&'static str, Vec<(&'static str, ExactInt)>)>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.failed.is_empty()
    }

    fn record(&mut self, name: &'static str, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.passed.push(name),
            Outcome::Fail(w) => self.failed.push((name, w)),
        }
    }
}

/// Runs every filter that applies to the parameters. The gcd and Johnson
/// filters need `lambda = 1`; the gcd filter also needs `k = t + 1`; the
/// prime filter applies to `(n-2)/2-(n, n/2, 1)`.
pub fn assess(t: u32, n: u32, k: u32, lambda: &ExactInt) -> Result<AdmissibilityReport> {
    let mut report = AdmissibilityReport {
        n,
        k,
        t,
        lambda: lambda.clone(),
        passed: Vec::new(),
        failed: Vec::new(),
    };
    report.record("divisibility", filter_divisibility(t, n, k, lambda)?);
    report.record("spectral-divisibility", filter_spectral_divisibility(t, n, k, lambda)?);
    if lambda.is_one() {
        if k == t + 1 && t < n {
            report.record("gcd", filter_gcd(t, n)?);
        }
        let j = filter_johnson(t, n, k)?;
        report.record("johnson-filter2", j.filter2);
        report.record("johnson-filter3", j.filter3);
        report.record("johnson-filter4", j.filter4);
        if n % 2 == 0 && 2 * k == n && 2 * t + 2 == n {
            report.record("steiner-half", filter_steiner_half(n));
        }
    }
    Ok(report)
}

fn check_range(min_n: u32) -> Result<()> {
    if min_n < 8 {
        return Err(Error::Precondition(format!("min_n = {min_n} must be at least 8")));
    }
    Ok(())
}

/// Reports for `((n-2)/2, n, n/2, 1)` for every even `n` in `[min_n, max_n]`.
pub fn steiner_half_reports(min_n: u32, max_n: u32) -> Result<Vec<AdmissibilityReport>> {
    check_range(min_n)?;
    (min_n..=max_n)
        .filter(|n| n % 2 == 0)
        .map(|n| assess((n - 2) / 2, n, n / 2, &ExactInt::one()))
        .collect()
}

/// Even `n` in `[min_n, max_n]` passing every filter for `((n-2)/2, n, n/2, 1)`.
pub fn enumerate_admissible(min_n: u32, max_n: u32) -> Result<Vec<u32>> {
    Ok(steiner_half_reports(min_n, max_n)?
        .into_iter()
        .filter(AdmissibilityReport::admissible)
        .map(|r| r.n)
        .collect())
}

/// Parameters where the two divisibility filters disagree.
pub fn divisibility_disagreements<I>(params: I) -> Result<Vec<(u32, u32, u32, ExactInt)>>
where
    I: IntoIterator<Item = (u32, u32, u32, ExactInt)>,
{
    let mut out = Vec::new();
    for (t, n, k, lambda) in params {
        let a = filter_divisibility(t, n, k, &lambda)?.passed();
        let b = filter_spectral_divisibility(t, n, k, &lambda)?.passed();
        if a != b {
            out.push((t, n, k, lambda));
        }
    }
    Ok(out)
}

impl Outcome {
    /// Witness value by name.
    pub fn witness(&self, name: &str) -> Option<&ExactInt> {
        match self {
            Outcome::Pass => None,
            Outcome::Fail(w) => w.iter().find(|(k, _)| *k == name).map(|(_, v)| v),
        }
    }
}

impl JohnsonOutcome {
    pub fn outcomes(&self) -> [(&'static str, &Outcome); 3] {
        [
            ("johnson-filter2", &self.filter2),
            ("johnson-filter3", &self.filter3),
            ("johnson-filter4", &self.filter4),
        ]
    }
}
