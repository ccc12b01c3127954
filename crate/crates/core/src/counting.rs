//! Closed-form counts: Euler's totient, binomials, Catalan numbers, the
//! necklace count for star trees, and the mutation-class sizes of types
//! A_n and D_n.
//!
//! Everything is computed in `BigUint`. Divisions that the formulas promise
//! to be exact are checked, and a remainder panics: it can only mean a bug
//! in the formula code, never bad input.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Number of `1 <= j <= m` coprime to `m`.
pub fn euler_phi(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("euler_phi(0) is undefined".into()));
    }
    let mut rest = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `n choose k` by the multiplicative formula; each partial product is itself
/// a binomial coefficient, so every division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        let (q, r) = acc.div_rem(&BigUint::from(i));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division {num} / {den}");
    q
}

/// Catalan number `C(i) = binom(2i, i) / (i + 1)`.
pub fn catalan(i: u64) -> BigUint {
    exact_div(binomial(2 * i, i), &BigUint::from(i + 1))
}

/// Cyclic classes of plane trees with `n` edges, equivalently rotation
/// classes of star trees with `n` leaves:
/// `sum_{d | n} phi(n/d) binom(2d, d) / (2n)`.
pub fn necklace_count(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("necklace_count needs n >= 1".into()));
    }
    let mut sum = BigUint::zero();
    for d in divisors(n) {
        sum += binomial(2 * d, d) * euler_phi(n / d)?;
    }
    Ok(exact_div(sum, &BigUint::from(2 * n)))
}

/// Number of quivers in the mutation class of type D_n.
///
/// For `n = 4` the necklace formula gives 10 and the true value is 6. For
/// `n = 3` the value is that of A_3, which is what the formula returns.
pub fn d_count(n: u64) -> Result<BigUint> {
    match n {
        0..=2 => Err(Error::InvalidArgument(format!(
            "d_count needs n >= 3, got {n}"
        ))),
        4 => Ok(BigUint::from(6u32)),
        _ => necklace_count(n),
    }
}

/// Number of quivers in the mutation class of type A_n:
/// `C(n+1)/(n+3) + C((n+1)/2)/2 + 2 C(n/3)/3`, the last two terms present
/// only when the argument is integral.
pub fn a_count(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("a_count needs n >= 1".into()));
    }
    // scaled by 6(n+3) to stay in integers
    let mut num = catalan(n + 1) * 6u32;
    if n % 2 == 1 {
        num += catalan(n.div_ceil(2)) * (3 * (n + 3));
    }
    if n.is_multiple_of(3) {
        num += catalan(n / 3) * (4 * (n + 3));
    }
    Ok(exact_div(num, &BigUint::from(6 * (n + 3))))
}
