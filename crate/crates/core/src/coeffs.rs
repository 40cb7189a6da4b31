//! The named coefficient families, each with two independent evaluation
//! paths: the `C_g^{a,b}` pushforward coefficients (defining sum vs. Gamma
//! closed form), the Todd-pair coefficients `b_{n,m}` (double sum vs.
//! Bernoulli closed form), and the level-cover multiplicity ratios that
//! certify the constants 1/2, 1/8 and 1/12 of the three-term decomposition.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{
    double_factorial_odd, factorial, pow2, sign, todd_coefficient, bernoulli_unsigned, rat_int,
};
use crate::Rat;

/// `Gamma(1/2 + n)` as an exact rational multiple of `sqrt(pi)`. Only ratios,
/// where the `sqrt(pi)` cancels, are ever exposed as rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfIntGamma {
    /// The argument is `1/2 + n`; `n` may be negative.
    pub n: i64,
}

impl HalfIntGamma {
    pub fn new(n: i64) -> Self {
        HalfIntGamma { n }
    }

    /// The rational `r` with `Gamma(1/2 + n) = r * sqrt(pi)`:
    /// `(2n-1)!!/2^n` for `n >= 0` and `(-2)^|n|/(2|n|-1)!!` for `n < 0`.
    pub fn rational_part(&self) -> Rat {
        if self.n >= 0 {
            let n = self.n as u32;
            double_factorial_odd(n) / pow2(self.n)
        } else {
            let m = (-self.n) as u32;
            let num = pow2(i64::from(m)) * sign(m);
            num / double_factorial_odd(m)
        }
    }

    /// Exact ratio of two half-integer Gamma values.
    pub fn ratio(&self, other: &HalfIntGamma) -> Rat {
        self.rational_part() / other.rational_part()
    }
}

/// `C_g^{a,b}` by its defining sum
/// `(-1)^(a+b+g) (g-2)! sum_i (-4)^i (a-1)!(b-1)!(2g-4-2i)! /
///  (i!(a-1-i)!(b-1-i)!(g-2-i)!)` for `a+b <= 2g-1`, and 0 otherwise.
pub fn c_coeff(g: u32, a: u32, b: u32) -> Rat {
    assert!(g >= 2 && a >= 1 && b >= 1);
    if a + b > 2 * g - 1 {
        return Rat::zero();
    }
    let mut sum = Rat::zero();
    let mut minus4_pow = Rat::one();
    for i in 0..=(a - 1).min(b - 1) {
        sum += &minus4_pow * factorial(a - 1) * factorial(b - 1) * factorial(2 * g - 4 - 2 * i)
            / (factorial(i) * factorial(a - 1 - i) * factorial(b - 1 - i) * factorial(g - 2 - i));
        minus4_pow *= rat_int(-4);
    }
    sign(a + b + g) * factorial(g - 2) * sum
}

/// `C_g^{a,b}` by the Gamma closed form
/// `(-1)^(a+b+g) (2g-4)! G(5/2-g) G(1/2+a+b-g) / (G(3/2+a-g) G(3/2+b-g))`,
/// evaluated through exact half-integer Gamma ratios. Requires
/// `a + b <= 2g - 1`; all four arguments are odd half-integers, never poles.
pub fn c_coeff_gamma(g: u32, a: u32, b: u32) -> Rat {
    assert!(g >= 2 && a >= 1 && b >= 1 && a + b <= 2 * g - 1);
    let g = i64::from(g);
    let (a, b) = (i64::from(a), i64::from(b));
    let num = HalfIntGamma::new(2 - g).rational_part()
        * HalfIntGamma::new(a + b - g).rational_part();
    let den = HalfIntGamma::new(1 + a - g).rational_part()
        * HalfIntGamma::new(1 + b - g).rational_part();
    sign((a + b + g) as u32 % 2) * factorial((2 * g - 4) as u32) * num / den
}

/// `b_{n,m}` by its defining double sum over Todd coefficients.
pub fn todd_pair_coeff(n: u32, m: u32) -> Rat {
    let mut sum = Rat::zero();
    for i in 0..=n {
        for j in 0..=m {
            let term = sign(n + m - i - j) * todd_coefficient(i) * todd_coefficient(j)
                / (rat_int(i64::from(n + m - i - j) + 1) * factorial(n - i) * factorial(m - j));
            sum += term;
        }
    }
    sum
}

/// `b_{n,m}` by the closed form: `(-1)^((n-m)/2) B_{(n+m)/2} / (n+m)!` when
/// `n+m` is even and `n*m != 0` (unsigned-convention Bernoulli), 1 when
/// `n = m = 0`, and 0 otherwise.
pub fn todd_pair_closed(n: u32, m: u32) -> Rat {
    if n == 0 && m == 0 {
        return Rat::one();
    }
    if (n + m) % 2 != 0 || n == 0 || m == 0 {
        return Rat::zero();
    }
    let half_diff = (i64::from(n) - i64::from(m)) / 2;
    let s = if half_diff.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
    s * bernoulli_unsigned((n + m) / 2) / factorial(n + m)
}

/// Which of the three boundary terms a level-cover ratio certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelTerm {
    I,
    II,
    III,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LevelRatioError {
    #[error("level must be a prime >= 3, got {0}")]
    BadLevel(u64),
    #[error("genus {g} too small for term {which:?} (needs the corank-2 cover)")]
    GenusTooSmall { which: LevelTerm, g: u32 },
}

/// Degree of the level-`l` cover: `l^(g(2g+1)) prod_{k=1}^g (1 - l^(-2k))`.
fn cover_degree(g: u32, ell: u64) -> Rat {
    let l = Rat::from_integer(BigInt::from(ell));
    let mut acc = pow_rat(&l, u64::from(g) * (2 * u64::from(g) + 1));
    for k in 1..=g {
        acc *= Rat::one() - Rat::one() / pow_rat(&l, 2 * u64::from(k));
    }
    acc
}

/// Number of irreducible boundary components: `l^(2g)(1 - l^(-2g))/2`.
fn boundary_components(g: u32, ell: u64) -> Rat {
    let l = Rat::from_integer(BigInt::from(ell));
    pow_rat(&l, 2 * u64::from(g)) * (Rat::one() - Rat::one() / pow_rat(&l, 2 * u64::from(g)))
        / rat_int(2)
}

fn pow_rat(x: &Rat, e: u64) -> Rat {
    let mut acc = Rat::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// The level-cover multiplicity ratio for one of the three boundary terms.
/// Independent of the level; evaluates to 1/2, 1/8 and 1/12 respectively.
pub fn level_ratio(which: LevelTerm, g: u32, ell: u64) -> Result<Rat, LevelRatioError> {
    if ell < 3 {
        return Err(LevelRatioError::BadLevel(ell));
    }
    let min_g = match which {
        LevelTerm::I => 2,
        LevelTerm::II | LevelTerm::III => 3,
    };
    if g < min_g {
        return Err(LevelRatioError::GenusTooSmall { which, g });
    }
    let l = Rat::from_integer(BigInt::from(ell));
    let nu_g = cover_degree(g, ell);
    let d_g = boundary_components(g, ell);
    Ok(match which {
        LevelTerm::I => {
            let e_i = cover_degree(g - 1, ell) * pow_rat(&l, 2 * u64::from(g) - 2);
            &l * d_g * e_i / nu_g
        }
        LevelTerm::II => {
            let d_ii = &l * &d_g * boundary_components(g - 1, ell) / rat_int(2);
            let e_ii = &l * cover_degree(g - 2, ell) * pow_rat(&l, 4 * (u64::from(g) - 2));
            pow_rat(&l, 2) * d_ii * e_ii / nu_g
        }
        LevelTerm::III => {
            let d_iii = &l * &d_g * boundary_components(g - 1, ell) / rat_int(3);
            let e_iii = cover_degree(g - 2, ell) * pow_rat(&l, 4 * (u64::from(g) - 2));
            pow_rat(&l, 3) * d_iii * e_iii / nu_g
        }
    })
}
