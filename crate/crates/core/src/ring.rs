//! The symbolic engine: polynomials on the corank-2 stratum `Delta` and on
//! the `P^1`-bundle `Y` over it, together with the shift operator and the
//! pushforward maps down to the base.
//!
//! Ring arithmetic is generic over the coefficient scalar (any commutative
//! ring exposed through `num-traits`); the pushforward maps, which produce
//! factorial-valued multiplicities, are implemented for exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

use crate::exact::{factorial, rat, sign};
use crate::{DeltaPoly, Rat, YPoly};

/// Exponents of a monomial `T1^i T2^j P^k` on `Delta`.
pub type DeltaExp = [u32; 3];

/// Exponents of a monomial `xi^e (f*T1)^i (f*T2)^j (f*P)^k` on `Y`.
pub type YExp = [u32; 4];

/// A multivariate polynomial with exponent-tuple keys. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<K, T> {
    terms: BTreeMap<K, T>,
}

/// Polynomial in the generators `T1, T2, P` of the divisor classes on `Delta`.
pub type DeltaPolynomial<T> = Polynomial<DeltaExp, T>;

/// Polynomial in `xi` and the pullbacks `f*T1, f*T2, f*P` on `Y`.
pub type YPolynomial<T> = Polynomial<YExp, T>;

impl<K: Ord + Copy, T: Zero + Clone> Polynomial<K, T> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn monomial(exp: K, coeff: T) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Accumulates `coeff` onto the monomial `exp`, dropping the entry if the
    /// sum cancels.
    pub fn add_term(&mut self, exp: K, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(T::zero);
        *entry = std::mem::replace(entry, T::zero()) + coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &T) -> Self
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
    {
        let mut out = Self::zero();
        for (exp, coeff) in &self.terms {
            out.add_term(*exp, coeff * c);
        }
        out
    }
}

impl<K, T> Polynomial<K, T>
where
    K: Ord + Copy + ExpAdd,
    T: Zero + Clone,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.exp_add(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self
    where
        T: One,
    {
        let mut acc = Self::monomial(K::exp_zero(), T::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Componentwise exponent addition for monomial keys.
pub trait ExpAdd {
    fn exp_add(&self, other: &Self) -> Self;
    fn exp_zero() -> Self;
}

impl ExpAdd for DeltaExp {
    fn exp_add(&self, o: &Self) -> Self {
        [self[0] + o[0], self[1] + o[1], self[2] + o[2]]
    }
    fn exp_zero() -> Self {
        [0; 3]
    }
}

impl ExpAdd for YExp {
    fn exp_add(&self, o: &Self) -> Self {
        [self[0] + o[0], self[1] + o[1], self[2] + o[2], self[3] + o[3]]
    }
    fn exp_zero() -> Self {
        [0; 4]
    }
}

impl<K, T> Add for &Polynomial<K, T>
where
    K: Ord + Copy,
    T: Zero + Clone,
{
    type Output = Polynomial<K, T>;
    fn add(self, other: Self) -> Polynomial<K, T> {
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.add_term(*exp, coeff.clone());
        }
        out
    }
}

impl<K, T> Sub for &Polynomial<K, T>
where
    K: Ord + Copy,
    T: Zero + Clone + Neg<Output = T>,
{
    type Output = Polynomial<K, T>;
    fn sub(self, other: Self) -> Polynomial<K, T> {
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.add_term(*exp, -coeff.clone());
        }
        out
    }
}

impl<K: Ord + Copy + fmt::Debug, T: fmt::Debug> fmt::Debug for Polynomial<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<T: Zero + One + Clone> DeltaPolynomial<T> {
    pub fn t1() -> Self {
        Self::monomial([1, 0, 0], T::one())
    }
    pub fn t2() -> Self {
        Self::monomial([0, 1, 0], T::one())
    }
    pub fn p() -> Self {
        Self::monomial([0, 0, 1], T::one())
    }
    pub fn constant(c: T) -> Self {
        Self::monomial([0, 0, 0], c)
    }
}

impl<T: Zero + One + Clone> YPolynomial<T> {
    pub fn xi() -> Self {
        Self::monomial([1, 0, 0, 0], T::one())
    }
    pub fn ft1() -> Self {
        Self::monomial([0, 1, 0, 0], T::one())
    }
    pub fn ft2() -> Self {
        Self::monomial([0, 0, 1, 0], T::one())
    }
    pub fn fp() -> Self {
        Self::monomial([0, 0, 0, 1], T::one())
    }
    pub fn constant(c: T) -> Self {
        Self::monomial([0, 0, 0, 0], c)
    }

    /// Pullback `f*` of a polynomial on `Delta`.
    pub fn pullback(p: &DeltaPolynomial<T>) -> Self {
        let mut out = Self::zero();
        for (&[i, j, k], c) in p.terms() {
            out.add_term([0, i, j, k], c.clone());
        }
        out
    }
}

/// Rewrites `xi^e -> xi (f*P)^(e-1)` for `e >= 2` until every monomial has
/// `xi`-exponent at most 1. This is the relation `xi (xi - f*P) = 0`: the
/// 0-section and the infinity-section of `Y` do not intersect.
pub fn y_canonicalize<T: Zero + Clone>(p: &YPolynomial<T>) -> YPolynomial<T> {
    let mut out = YPolynomial::zero();
    for (&[e, i, j, k], c) in p.terms() {
        if e >= 2 {
            out.add_term([1, i, j, k + e - 1], c.clone());
        } else {
            out.add_term([e, i, j, k], c.clone());
        }
    }
    out
}

/// Pullback under the `n`-th power of the shift operator `s(z, b) = (z+b, b)`:
/// the ring homomorphism `T1 -> T1 + n^2 T2 + n P`, `T2 -> T2`,
/// `P -> 2n T2 + P`, applied multiplicatively to every monomial.
pub fn shift_pullback<T>(p: &DeltaPolynomial<T>, n: u32) -> DeltaPolynomial<T>
where
    T: Zero + One + Clone + FromPrimitive,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    assert!(n >= 1, "shift_pullback requires n >= 1");
    let st1 = {
        let mut q = DeltaPolynomial::t1();
        q.add_term([0, 1, 0], T::from_u64(u64::from(n) * u64::from(n)).unwrap());
        q.add_term([0, 0, 1], T::from_u32(n).unwrap());
        q
    };
    let sp = {
        let mut q = DeltaPolynomial::p();
        q.add_term([0, 1, 0], T::from_u32(2 * n).unwrap());
        q
    };

    // Powers of the substituted generators, grown on demand.
    let max_i = p.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
    let max_k = p.terms().map(|(e, _)| e[2]).max().unwrap_or(0);
    let mut st1_pows = vec![DeltaPolynomial::constant(T::one())];
    for _ in 0..max_i {
        st1_pows.push(st1_pows.last().unwrap().mul(&st1));
    }
    let mut sp_pows = vec![DeltaPolynomial::constant(T::one())];
    for _ in 0..max_k {
        sp_pows.push(sp_pows.last().unwrap().mul(&sp));
    }

    let mut out = DeltaPolynomial::zero();
    for (&[i, j, k], c) in p.terms() {
        let img = st1_pows[i as usize].mul(&sp_pows[k as usize]);
        for (&[a, b, d], cc) in img.terms() {
            out.add_term([a, b + j, d], c * cc);
        }
    }
    out
}

/// Value of `h_*` on a single monomial `T1^l T2^m P^n`: zero unless `l = m`
/// and `l + m + n = 2g - 4`; for `l = m = g-2-k`, `n = 2k` the multiplicity is
/// `(-1)^k (g-2)! (2k)! (g-2-k)! / k!`.
fn h_push_monomial(l: u32, m: u32, n: u32, g: u32) -> Option<Rat> {
    debug_assert!(g >= 2);
    if l != m || l + m + n != 2 * g - 4 {
        return None;
    }
    debug_assert!(n % 2 == 0);
    let k = n / 2;
    Some(sign(k) * factorial(g - 2) * factorial(2 * k) * factorial(g - 2 - k) / factorial(k))
}

/// Pushforward `h_*` to the base, i.e. the total coefficient of the
/// fundamental class of `A_{g-2}`, extended linearly from the monomial rule.
pub fn h_push(p: &DeltaPoly, g: u32) -> Rat {
    let mut acc = Rat::zero();
    for (&[l, m, n], c) in p.terms() {
        if let Some(v) = h_push_monomial(l, m, n, g) {
            acc += v * c;
        }
    }
    acc
}

/// `h_*` of the product `p * q * P^extra_p` without materializing the product
/// polynomial. Equal to `h_push(&p.mul(q).mul(&P^extra_p), g)`; this is the
/// hot path of the term sums, where `p` and `q` are cached binomial powers.
pub fn h_push_product(p: &DeltaPoly, q: &DeltaPoly, extra_p: u32, g: u32) -> Rat {
    let mut acc = Rat::zero();
    for (&[l1, m1, n1], c1) in p.terms() {
        for (&[l2, m2, n2], c2) in q.terms() {
            if let Some(v) = h_push_monomial(l1 + l2, m1 + m2, n1 + n2 + extra_p, g) {
                acc += v * c1 * c2;
            }
        }
    }
    acc
}

/// Pushforward `f_*` from `Y` down to `Delta`. Expects a canonicalized input:
/// `xi`-free monomials die for fiber-dimension reasons, and `xi * f*m` maps
/// to `m`.
pub fn f_push(p: &YPoly) -> DeltaPoly {
    let mut out = DeltaPoly::zero();
    for (&[e, i, j, k], c) in p.terms() {
        debug_assert!(e <= 1, "f_push expects a canonicalized polynomial");
        if e == 1 {
            out.add_term([i, j, k], c.clone());
        }
    }
    out
}

/// The composite pushforward `pi_* = h_* . f_*` from `Y` to the base,
/// canonicalizing first.
pub fn y_pi_push(p: &YPoly, g: u32) -> Rat {
    h_push(&f_push(&y_canonicalize(p)), g)
}

/// The symmetric theta divisor restricted to `Delta`: `T1 + P/2`.
pub fn theta_on_delta() -> DeltaPoly {
    let mut p = DeltaPoly::t1();
    p.add_term([0, 0, 1], rat(1, 2));
    p
}

/// The symmetric theta divisor pulled back to `Y`: `xi + f*T1 - f*P/2`.
pub fn theta_on_y() -> YPoly {
    let mut p = YPoly::xi();
    p.add_term([0, 1, 0, 0], Rat::one());
    p.add_term([0, 0, 0, 1], rat(-1, 2));
    p
}
