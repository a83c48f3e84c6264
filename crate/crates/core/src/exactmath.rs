//! Exact integer combinatorics.
//!
//! Every quantity here is an [`ExactInt`]; nothing is ever rounded. The
//! Krawtchouk polynomials are evaluated from their defining alternating sum
//!
//! ```text
//! P_k(x) = sum_{j=0}^{k} (-1)^j C(x, j) C(n - x, k - j)
//! ```
//!
//! and the Eberlein polynomials of the Johnson scheme `J(n, k)` from
//!
//! ```text
//! Q_l(x) = sum_{j=0}^{l} (-1)^j C(x, j) C(k - x, l - j) C(n - k - x, l - j).
//! ```

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every combinatorial quantity.
pub type ExactInt = BigInt;

/// Exact rational, used where a quotient may legitimately fail to be integral.
pub type ExactRational = num_rational::BigRational;

/// `C(n, k)`, with the convention that it vanishes for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a signed top argument; a negative top yields zero. Only used
/// for sums whose free ranges may step outside `[0, n]`.
pub(crate) fn binomial_signed(n: i64, k: i64) -> ExactInt {
    if n < 0 {
        ExactInt::zero()
    } else {
        binomial(n as u64, k)
    }
}

pub fn pow2(e: u32) -> ExactInt {
    ExactInt::one() << e
}

fn check_range(what: &'static str, value: u32, hi: u32) -> Result<()> {
    if value > hi {
        return Err(Error::OutOfRange {
            what,
            value: value as i64,
            range: format!("[0, {hi}]"),
        });
    }
    Ok(())
}

/// Evaluates the Krawtchouk polynomial `P_k(x)` for ambient length `n`.
pub fn krawtchouk(n: u32, k: u32, x: u32) -> Result<ExactInt> {
    check_range("k", k, n)?;
    check_range("x", x, n)?;
    let mut acc = ExactInt::zero();
    for j in 0..=k {
        let term = binomial(x as u64, j as i64) * binomial((n - x) as u64, (k - j) as i64);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The full `(n+1) x (n+1)` matrix of Krawtchouk values, row `k`, column `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    n: u32,
    values: Vec<Vec<ExactInt>>,
}

impl KrawtchoukTable {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                value: 0,
                range: "[1, inf)".into(),
            });
        }
        let values = (0..=n)
            .map(|k| (0..=n).map(|x| krawtchouk(n, k, x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `P_k(x)`. Panics if `k` or `x` exceeds `n`.
    pub fn get(&self, k: u32, x: u32) -> &ExactInt {
        &self.values[k as usize][x as usize]
    }

    pub fn row(&self, k: u32) -> &[ExactInt] {
        &self.values[k as usize]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInt]> {
        self.values.iter().map(Vec::as_slice)
    }
}

pub fn krawtchouk_table(n: u32) -> Result<KrawtchoukTable> {
    KrawtchoukTable::new(n)
}

/// Eberlein polynomial `Q_l(x)` of the Johnson scheme on `k`-subsets of an
/// `n`-set. Requires `1 <= k <= n/2`, `l <= k` and `x <= k`.
pub fn eberlein(n: u32, k: u32, l: u32, x: u32) -> Result<ExactInt> {
    if k == 0 || 2 * k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            range: format!("[1, {}]", n / 2),
        });
    }
    check_range("l", l, k)?;
    check_range("x", x, k)?;
    let (n, k, l, x) = (n as i64, k as i64, l as i64, x as i64);
    let mut acc = ExactInt::zero();
    for j in 0..=l {
        let term = binomial(x as u64, j)
            * binomial_signed(k - x, l - j)
            * binomial_signed(n - k - x, l - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Deterministic trial division.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m < 4 {
        return true;
    }
    if m % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    a.gcd(b)
}

/// `lcm(1, 2, ..., t + 1)`.
pub fn lcm_range(t: u32) -> ExactInt {
    (1..=t as u64 + 1).fold(ExactInt::one(), |acc, i| acc.lcm(&ExactInt::from(i)))
}
