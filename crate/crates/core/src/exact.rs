//! Exact rational arithmetic and the special-value zoo.
//!
//! All values are `BigRational` in canonical form (positive denominator,
//! reduced); there is no floating point anywhere in this crate. Factorials
//! and Bernoulli numbers are memoized in growing tables behind mutexes, so
//! results are bit-identical regardless of thread interleaving.

use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Rat;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact fraction `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes a rational as `"p/q"` (or `"p"` when the denominator is 1),
/// base 10, with the sign on the numerator only.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `"p/q"` / `"p"` format produced by [`rat_to_string`].
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| format!("invalid rational {s:?}: {e}"))
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` as an exact integer-valued rational; memoized.
pub fn factorial(n: u32) -> Rat {
    let mut cache = FACTORIALS.lock().unwrap();
    if cache.is_empty() {
        cache.push(BigInt::one());
    }
    while cache.len() <= n as usize {
        let next = cache.last().unwrap() * BigInt::from(cache.len());
        cache.push(next);
    }
    Rat::from_integer(cache[n as usize].clone())
}

/// The odd double factorial `(2k-1)!! = 1*3*...*(2k-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: u32) -> Rat {
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= BigInt::from(2 * i - 1);
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> Rat {
    if k < 0 || k > i64::from(n) {
        return Rat::zero();
    }
    let k = k as u32;
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Multinomial coefficient `n!/(a! b! c!)`; requires `a + b + c = n`.
pub fn multinomial(n: u32, a: u32, b: u32, c: u32) -> Rat {
    assert_eq!(a + b + c, n, "multinomial parts must sum to n");
    factorial(n) / (factorial(a) * factorial(b) * factorial(c))
}

/// Rising factorial (Pochhammer symbol) `[z]_k = z(z+1)...(z+k-1)`.
pub fn pochhammer(z: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= z + rat_int(i64::from(i));
    }
    acc
}

static BERNOULLI: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// Bernoulli number in the modern convention (`B_1 = -1/2`, generating
/// function `x/(e^x - 1)`), computed by the defining recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`; memoized.
pub fn bernoulli_modern(n: u32) -> Rat {
    let mut cache = BERNOULLI.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n as usize {
        let m = cache.len() as u32;
        let mut sum = Rat::zero();
        for (j, b) in cache.iter().enumerate() {
            sum += binomial(m + 1, j as i64) * b;
        }
        let next = -sum / rat_int(i64::from(m) + 1);
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// The unsigned Bernoulli convention used in the Todd expansion:
/// `B_k = (-1)^(k-1) * bernoulli_modern(2k) = |bernoulli_modern(2k)| > 0`.
pub fn bernoulli_unsigned(k: u32) -> Rat {
    assert!(k >= 1, "bernoulli_unsigned requires k >= 1");
    let b = bernoulli_modern(2 * k);
    if k % 2 == 1 {
        b
    } else {
        -b
    }
}

/// Coefficient `b_n` of the Todd series `x/(1 - e^(-x))`:
/// `b_0 = 1`, `b_1 = 1/2`, `b_{2k+1} = 0` for `k >= 1`, and
/// `b_{2k} = (-1)^(k-1) bernoulli_unsigned(k)/(2k)!`.
pub fn todd_coefficient(n: u32) -> Rat {
    match n {
        0 => Rat::one(),
        1 => rat(1, 2),
        _ if n % 2 == 1 => Rat::zero(),
        _ => {
            let k = n / 2;
            let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
            sign * bernoulli_unsigned(k) / factorial(n)
        }
    }
}

/// `zeta(1 - 2k) = -B_{2k}/(2k)` (modern Bernoulli), exact.
pub fn zeta_negative_odd(k: u32) -> Rat {
    assert!(k >= 1, "zeta_negative_odd requires k >= 1");
    -bernoulli_modern(2 * k) / rat_int(2 * i64::from(k))
}

/// `2^e` for a possibly negative exponent.
pub fn pow2(e: i64) -> Rat {
    let base = BigInt::from(2);
    if e >= 0 {
        Rat::from_integer(base.pow(e as u32))
    } else {
        Rat::new(BigInt::one(), base.pow((-e) as u32))
    }
}

/// `(-1)^e`.
pub fn sign(e: u32) -> Rat {
    if e % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// True iff `r` is a (nonnegative) integer; used by sanity checks.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}
