//! Exact rational evaluation of the closed-form extremal bounds.
//!
//! No floating point appears here. Comparisons against integer
//! observations are done on the rationals themselves.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cliques::CliqueProfile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bound domain error: {0}")]
pub struct BoundError(pub String);

fn domain<T>(msg: impl Into<String>) -> Result<T, BoundError> {
    Err(BoundError(msg.into()))
}

/// A normalized rational with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundValue(BigRational);

impl BoundValue {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        BoundValue(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        BoundValue(BigRational::from_integer(v.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Orders an integer observation against the bound.
    pub fn compare_integer(&self, observed: &BigInt) -> Ordering {
        BigRational::from_integer(observed.clone()).cmp(&self.0)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for BoundValue {
    /// Always `num/den`, e.g. `18/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for BoundValue {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, BoundError> {
        let (num, den) = s.split_once('/').unwrap_or((s, "1"));
        let num: BigInt = num.trim().parse().map_err(|_| BoundError(format!("bad numerator in {s:?}")))?;
        let den: BigInt = den.trim().parse().map_err(|_| BoundError(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return domain("zero denominator");
        }
        Ok(BoundValue::new(num, den))
    }
}

impl Serialize for BoundValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BoundValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `C(a, b)` with the conventions `C(a, b) = 0` for `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `f_s(n,k,c) = C(c-k, s) + C(k, s-1)·(n - (c-k))`, the number of `K_s`
/// in `H(n,k,c)`.
pub fn f_s(n: i64, k: i64, c: i64, s: i64) -> Result<BoundValue, BoundError> {
    let core = c - k;
    if k < 0 || core < 0 || n < core || s < 1 {
        return domain(format!("f_s needs n >= c-k >= 0, k >= 0, s >= 1; got n={n}, k={k}, c={c}, s={s}"));
    }
    Ok(BoundValue::integer(binomial(core, s) + binomial(k, s - 1) * BigInt::from(n - core)))
}

/// `(l-1)(n-1)/2`, the edge bound for graphs without cycles of length ≥ l.
pub fn eg_cycle_bound(n: i64, l: i64) -> Result<BoundValue, BoundError> {
    if l < 3 || n < 1 {
        return domain(format!("cycle bound needs l >= 3, n >= 1; got n={n}, l={l}"));
    }
    Ok(BoundValue::new((l - 1) * (n - 1), 2))
}

/// `(l-2)n/2`, the edge bound for `P_l`-free graphs.
pub fn eg_path_bound(n: i64, l: i64) -> Result<BoundValue, BoundError> {
    if l < 2 || n < 1 {
        return domain(format!("path bound needs l >= 2, n >= 1; got n={n}, l={l}"));
    }
    Ok(BoundValue::new((l - 2) * n, 2))
}

/// `(cycle bound, path bound)`; requires `l ≥ 3`.
pub fn eg_bounds(n: i64, l: i64) -> Result<(BoundValue, BoundValue), BoundError> {
    Ok((eg_cycle_bound(n, l)?, eg_path_bound(n, l)?))
}

/// `(n-1)/(l-2) · C(l-1, s)`.
pub fn luo_cycle_bound(n: i64, s: i64, l: i64) -> Result<BoundValue, BoundError> {
    if s < 2 || l < 3 || n < 1 {
        return domain(format!("Luo cycle bound needs s >= 2, l >= 3, n >= 1; got n={n}, s={s}, l={l}"));
    }
    Ok(BoundValue(
        BigRational::new(BigInt::from(n - 1), BigInt::from(l - 2)) * BigRational::from_integer(binomial(l - 1, s)),
    ))
}

/// `n/(l-1) · C(l-1, s)`.
pub fn luo_path_bound(n: i64, s: i64, l: i64) -> Result<BoundValue, BoundError> {
    if s < 2 || l < 2 || n < 1 {
        return domain(format!("Luo path bound needs s >= 2, l >= 2, n >= 1; got n={n}, s={s}, l={l}"));
    }
    Ok(BoundValue(
        BigRational::new(BigInt::from(n), BigInt::from(l - 1)) * BigRational::from_integer(binomial(l - 1, s)),
    ))
}

/// `(cycle bound, path bound)`; requires `l ≥ 3`.
pub fn luo_bounds(n: i64, s: i64, l: i64) -> Result<(BoundValue, BoundValue), BoundError> {
    Ok((luo_cycle_bound(n, s, l)?, luo_path_bound(n, s, l)?))
}

/// `(s+1)·N_{s+1}/N_s + s - 1`, reading `N_{ω+1}` as 0.
pub fn extended_eg_bound(profile: &CliqueProfile, s: usize) -> Result<BoundValue, BoundError> {
    if s < 1 || s > profile.omega() {
        return domain(format!("s must satisfy 1 <= s <= omega = {}, got {s}", profile.omega()));
    }
    let to_int = |u: BigUint| BigInt::from(u);
    let ratio = BigRational::new(BigInt::from(s + 1) * to_int(profile.count(s + 1)), to_int(profile.count(s)));
    Ok(BoundValue(ratio + BigRational::from_integer(BigInt::from(s as i64 - 1))))
}

/// `max{f_s(n,k,c), f_s(n,⌊(c-1)/2⌋,c)}`.
pub fn kopylov_cycle_bound(n: i64, k: i64, c: i64, s: i64) -> Result<BoundValue, BoundError> {
    if !(n >= c && c >= 5 && s >= 2 && k >= 2) {
        return domain(format!("cycle family bound needs n >= c >= 5, s >= 2, k >= 2; got n={n}, k={k}, c={c}, s={s}"));
    }
    let t = Integer::div_floor(&(c - 1), &2);
    Ok(f_s(n, k, c, s)?.max(f_s(n, t, c, s)?))
}

/// `max{f_s(n,k,l-1), f_s(n,⌊l/2⌋-1,l-1)}`.
pub fn kopylov_path_bound(n: i64, k: i64, l: i64, s: i64) -> Result<BoundValue, BoundError> {
    if !(n >= l && l >= 4 && s >= 2 && k >= 1) {
        return domain(format!("path family bound needs n >= l >= 4, s >= 2, k >= 1; got n={n}, k={k}, l={l}, s={s}"));
    }
    let t = Integer::div_floor(&l, &2) - 1;
    Ok(f_s(n, k, l - 1, s)?.max(f_s(n, t, l - 1, s)?))
}
