//! Assembly of the intersection numbers `a_N^(g)`: the two proportionality
//! values (`N = 0` and `N = g`), the vanishing ranges, and the three boundary
//! terms computed through the symbolic pushforward engine for `N >= 2g - 1`.
//! The printed closed forms of terms (I) and (III) are also evaluated, as
//! informational cross-checks only (see [`reported_closed_forms`]).

use num_traits::{One, Zero};

use crate::coeffs::todd_pair_closed;
use crate::exact::{
    binomial, double_factorial_odd, factorial, multinomial, pochhammer, pow2, rat, rat_int, sign,
    todd_coefficient, zeta_negative_odd,
};
use crate::ring::{h_push_product, y_pi_push, DeltaPolynomial};
use crate::{DeltaPoly, Rat, YPoly};

/// Method tag on a computed record: whether the three-term engine pipeline
/// ran, or the value came from a closed-form / vanishing branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Engine,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Engine => "engine",
            Method::ClosedForm => "closed-form",
        }
    }
}

/// One computed intersection number with its term breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermBreakdown {
    pub genus: u32,
    pub n: u32,
    /// `G = g(g+1)/2`, the dimension of the moduli space.
    pub big_g: u32,
    /// `(I, II, III)`; present only when the three-term pipeline ran.
    pub terms: Option<(Rat, Rat, Rat)>,
    pub total: Rat,
    /// Set iff `N >= 3g - 3` (only the genus-2, `N = 3` record).
    pub formal: bool,
    pub method: Method,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("N={n} out of range for genus {g}: need N < 3g-3 = {limit} (genus 2 also admits N=3)")]
    OutOfRange { g: u32, n: u32, limit: u32 },
}

fn check_three_term_range(g: u32, n: u32) -> Result<(), DomainError> {
    if g < 2 {
        return Err(DomainError::GenusTooSmall(g));
    }
    let ok = n >= 2 * g - 1 && (n < 3 * g - 3 || (g == 2 && n == 3));
    if ok {
        Ok(())
    } else {
        Err(DomainError::OutOfRange { g, n, limit: 3 * g - 3 })
    }
}

/// Top self-intersection of the Hodge class,
/// `a_0^(g) = (-1)^G 2^(-g) G! prod_{k=1}^g zeta(1-2k)/(2k-1)!!`.
pub fn hodge_top(g: u32) -> Rat {
    let big_g = g * (g + 1) / 2;
    let mut acc = sign(big_g) * factorial(big_g) / pow2(i64::from(g));
    for k in 1..=g {
        acc *= zeta_negative_odd(k) / double_factorial_odd(k);
    }
    acc
}

/// `a_g^(g) = (1/2)(-2)^(g-1) (g-1)! a_0^(g-1)`.
pub fn boundary_first(g: u32) -> Rat {
    assert!(g >= 1, "boundary_first requires g >= 1");
    let neg2_pow = sign(g - 1) * pow2(i64::from(g) - 1);
    rat(1, 2) * neg2_pow * factorial(g - 1) * hodge_top(g - 1)
}

/// Values of `a_N^(g)` that never need the three-term pipeline; valid for
/// `g >= 1`, `N <= 2g - 2`. Used by the term-(I) recursion one genus down.
fn a_low(g: u32, n: u32) -> Rat {
    debug_assert!(g >= 1 && n <= 2 * g - 2 + u32::from(g == 1));
    if n == 0 {
        hodge_top(g)
    } else if n == g {
        boundary_first(g)
    } else {
        Rat::zero()
    }
}

/// Incrementally computed powers `base^0 .. base^max`.
fn power_table(base: &DeltaPoly, max: u32) -> Vec<DeltaPoly> {
    let mut pows = vec![DeltaPolynomial::constant(Rat::one())];
    for _ in 0..max {
        pows.push(pows.last().unwrap().mul(base));
    }
    pows
}

fn neg2_t2_minus_p() -> DeltaPoly {
    let mut q = DeltaPoly::t2().scale(&rat_int(-2));
    q.add_term([0, 0, 1], -Rat::one());
    q
}

fn neg2_t1_minus_p() -> DeltaPoly {
    let mut q = DeltaPoly::t1().scale(&rat_int(-2));
    q.add_term([0, 0, 1], -Rat::one());
    q
}

/// Term (III): the triple-boundary contribution
/// `(1/12) a_0^(g-2) sum_{a+b+c=N} C(N;a,b,c)
///  h_*((-2T2-P)^(a-1) (-2T1-P)^(b-1) P^(c-1))`.
pub fn term_iii(g: u32, n: u32) -> Result<Rat, DomainError> {
    check_three_term_range(g, n)?;
    let pow_a = power_table(&neg2_t2_minus_p(), n.saturating_sub(2));
    let pow_b = power_table(&neg2_t1_minus_p(), n.saturating_sub(2));
    let mut sum = Rat::zero();
    for a in 1..=(n - 2) {
        for b in 1..=(n - 1 - a) {
            let c = n - a - b;
            let pushed = h_push_product(&pow_a[(a - 1) as usize], &pow_b[(b - 1) as usize], c - 1, g);
            if !pushed.is_zero() {
                sum += multinomial(n, a, b, c) * pushed;
            }
        }
    }
    // The degree filter forces N = 2g - 1 whenever the sum is non-zero, so
    // pairing with the top Hodge power one step down is legitimate here.
    Ok(rat(1, 12) * hodge_top(g - 2) * sum)
}

fn y_integrand_t2() -> YPoly {
    let mut q = YPoly::xi().scale(&rat_int(-2));
    q.add_term([0, 0, 1, 0], rat_int(-2));
    q.add_term([0, 0, 0, 1], Rat::one());
    q
}

fn y_integrand_t1() -> YPoly {
    let mut q = YPoly::xi().scale(&rat_int(-2));
    q.add_term([0, 1, 0, 0], rat_int(-2));
    q.add_term([0, 0, 0, 1], Rat::one());
    q
}

/// Canonicalized powers of a `Y`-class; canonicalizing at every step keeps
/// each power at O(exponent) monomials.
fn y_power_table(base: &YPoly, max: u32) -> Vec<YPoly> {
    let mut pows = vec![YPoly::constant(Rat::one())];
    for _ in 0..max {
        pows.push(crate::ring::y_canonicalize(&pows.last().unwrap().mul(base)));
    }
    pows
}

/// Term (II): the double-boundary contribution
/// `(1/8) a_0^(g-2) sum_{a+b=N} C(N,a)
///  pi_*((-2xi-2f*T2+f*P)^(a-1) (-2xi-2f*T1+f*P)^(b-1))`.
pub fn term_ii(g: u32, n: u32) -> Result<Rat, DomainError> {
    check_three_term_range(g, n)?;
    let pow_a = y_power_table(&y_integrand_t2(), n - 1);
    let pow_b = y_power_table(&y_integrand_t1(), n - 1);
    let mut sum = Rat::zero();
    for a in 1..=(n - 1) {
        let b = n - a;
        let pushed = y_pi_push(&pow_a[(a - 1) as usize].mul(&pow_b[(b - 1) as usize]), g);
        if !pushed.is_zero() {
            sum += binomial(n, i64::from(a)) * pushed;
        }
    }
    Ok(rat(1, 8) * hodge_top(g - 2) * sum)
}

/// Closed form of term (II) at `N = 2g - 1`:
/// `-a_0^(g-2)/(64(2g-1)) * (2^(4g) (g-1)!(g-2)! + 32 (-1)^g (2g-3)!)`.
pub fn term_ii_closed(g: u32) -> Rat {
    assert!(g >= 2);
    let bracket = pow2(4 * i64::from(g)) * factorial(g - 1) * factorial(g - 2)
        + rat_int(32) * sign(g) * factorial(2 * g - 3);
    -hodge_top(g - 2) / (rat_int(64) * rat_int(2 * i64::from(g) - 1)) * bracket
}

/// Term (I): the single-boundary contribution, computed through the
/// Todd-class master equation:
/// `(-1)^(N-1) 2^(N-2) (N-1)! [ a_(N-g)^(g-1) / (8^(N-g) (N-g)!)
///   - sum_{k,n} b_{n,k-n}/(N-1-k)! * (1/2)
///     h_*((T1+P/2)^(N-1-k) P^(n-1) (-2T2-P)^(k-n-1)) a_0^(g-2) ]`.
pub fn term_i(g: u32, n_exp: u32) -> Result<Rat, DomainError> {
    check_three_term_range(g, n_exp)?;
    let n = n_exp;

    // a_(N-g) one genus down; always in a closed-branch range here.
    let boundary_part = a_low(g - 1, n - g)
        / (pow2(3 * (i64::from(n) - i64::from(g))) * factorial(n - g));

    let theta_pows = power_table(&crate::ring::theta_on_delta(), n.saturating_sub(2));
    let f_pows = power_table(&neg2_t2_minus_p(), n.saturating_sub(2));
    let hodge = hodge_top(g - 2);

    let mut correction = Rat::zero();
    for k in 2..n {
        for m in 1..k {
            let b_pair = todd_pair_closed(m, k - m);
            if b_pair.is_zero() {
                continue;
            }
            let pushed = h_push_product(
                &theta_pows[(n - 1 - k) as usize],
                &f_pows[(k - m - 1) as usize],
                m - 1,
                g,
            );
            if pushed.is_zero() {
                continue;
            }
            correction += b_pair / factorial(n - 1 - k) * rat(1, 2) * pushed * &hodge;
        }
    }

    let prefactor = sign(n - 1) * pow2(i64::from(n) - 2) * factorial(n - 1);
    Ok(prefactor * (boundary_part - correction))
}

/// The literal evaluations of the historically published closed forms for terms (III)
/// and (I). These are informational: desk checks show the printed forms
/// disagree with the engine (and with the published table) at small genus, so
/// they are reported and diffed but never used as ground truth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportedClosedForms {
    /// The Pochhammer double-sum closed form printed for term (III).
    pub formula_iii: Rat,
    /// The generating-function closed form printed for term (I).
    pub corollary_i: Rat,
    /// The Bernoulli single-sum form printed for term (I).
    pub proposition_i: Rat,
}

pub fn reported_closed_forms(g: u32) -> ReportedClosedForms {
    assert!(g >= 2);
    let gi = i64::from(g);

    // (III) closed form: two leading fractions plus a double Pochhammer sum.
    let lead1 = sign(g + 1) * rat_int(4 * gi * gi - 8 * gi + 7) * factorial(2 * g - 4)
        / (rat_int(12) * rat_int(2 * gi - 1));
    let lead2 = pow2(4 * gi) * factorial(g - 2) * factorial(g - 1)
        / (rat_int(192) * rat_int(2 * gi - 1));
    let mut double_sum = Rat::zero();
    for a in 1..=(2 * g - 3) {
        for k in 1..=(2 * g - 2 - a) {
            let num = sign(g + a + k + 1) * pochhammer(&rat(3 - 2 * gi + 2 * i64::from(a), 2), k);
            let den = rat_int(i64::from(k) + 1)
                * factorial(2 * g - a - k - 2)
                * factorial(a)
                * pochhammer(&rat(5 - 2 * gi, 2), k);
            double_sum += num / den;
        }
    }
    let formula_iii =
        lead1 + lead2 + factorial(2 * g - 1) * factorial(2 * g - 4) / rat_int(12) * double_sum;

    // (I) closed forms share the leading boundary part.
    let lead_i = factorial(2 * g - 2) / (pow2(gi) * factorial(g - 1)) * a_low(g - 1, g - 1);

    // Coefficient of x^(2g-1) in (2x/(1-e^(-2x)) - 1 - x)(e^x - 1)/x.
    let deg = 2 * g - 1;
    let mut coeff = Rat::zero();
    for k in 2..=deg {
        // series A = sum_{k>=2} b_k 2^k x^k; series B = sum_j x^j/(j+1)!.
        coeff += todd_coefficient(k) * pow2(i64::from(k)) / factorial(deg - k + 1);
    }
    let corollary_i = lead_i.clone()
        - sign(g) * pow2(2 - 2 * gi) * factorial(2 * g - 3) * hodge_top(g - 2) * coeff;

    let mut bern_sum = Rat::zero();
    for m in 1..=(g - 1) {
        bern_sum += sign(m) * pow2(2 * i64::from(m) + 2 - 2 * gi)
            * crate::exact::bernoulli_unsigned(m)
            / (factorial(2 * g - 2 * m - 1) * factorial(2 * m));
    }
    let proposition_i = lead_i + sign(g) * factorial(2 * g - 3) * hodge_top(g - 2) * bern_sum;

    ReportedClosedForms { formula_iii, corollary_i, proposition_i }
}

/// Computes `a_N^(g)` with its term breakdown. Valid for `g >= 2` and
/// `0 <= N < 3g - 3`, plus the formal genus-2 record at `N = 3`.
pub fn assemble(g: u32, n: u32) -> Result<TermBreakdown, DomainError> {
    if g < 2 {
        return Err(DomainError::GenusTooSmall(g));
    }
    if !(n < 3 * g - 3 || (g == 2 && n == 3)) {
        return Err(DomainError::OutOfRange { g, n, limit: 3 * g - 3 });
    }
    let big_g = g * (g + 1) / 2;
    let formal = n >= 3 * g - 3;
    if n <= 2 * g - 2 {
        return Ok(TermBreakdown {
            genus: g,
            n,
            big_g,
            terms: None,
            total: a_low(g, n),
            formal,
            method: Method::ClosedForm,
        });
    }
    let i = term_i(g, n)?;
    let ii = term_ii(g, n)?;
    let iii = term_iii(g, n)?;
    let total = &i + &ii + &iii;
    Ok(TermBreakdown {
        genus: g,
        n,
        big_g,
        terms: Some((i, ii, iii)),
        total,
        formal,
        method: Method::Engine,
    })
}

/// Largest valid `N` for a genus: `3g - 4`, except genus 2 where the formal
/// `N = 3` record is included.
pub fn max_n(g: u32) -> u32 {
    if g == 2 {
        3
    } else {
        3 * g - 4
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::c_coeff;

    #[test]
    fn hodge_top_values() {
        assert_eq!(hodge_top(0), Rat::one());
        assert_eq!(hodge_top(2), rat(1, 2880));
        assert_eq!(hodge_top(3), rat(1, 181440));
    }

    #[test]
    fn boundary_first_values() {
        assert_eq!(boundary_first(1), rat(1, 2));
        assert_eq!(boundary_first(2), rat(-1, 24));
        assert_eq!(boundary_first(4), rat(-1, 7560));
    }

    #[test]
    fn boundary_first_direct_product_form() {
        // a_g^(g) = (1/2)(-1)^(G-1) (g-1)! (G-g)! prod_{k<g} zeta(1-2k)/(2k-1)!!
        for g in 1..=15u32 {
            let big_g = g * (g + 1) / 2;
            let mut direct = rat(1, 2) * sign(big_g - 1) * factorial(g - 1) * factorial(big_g - g);
            for k in 1..g {
                direct *= zeta_negative_odd(k) / double_factorial_odd(k);
            }
            assert_eq!(boundary_first(g), direct, "g={g}");
        }
    }

    #[test]
    fn term_iii_values() {
        assert_eq!(term_iii(2, 3).unwrap(), rat(1, 2));
        assert_eq!(term_iii(3, 5).unwrap(), rat(5, 24));
        assert_eq!(term_iii(4, 8).unwrap(), Rat::zero());
    }

    #[test]
    fn term_ii_values() {
        assert_eq!(term_ii(2, 3).unwrap(), rat(-3, 2));
        assert_eq!(term_ii(3, 5).unwrap(), rat(-25, 24));
        assert_eq!(term_ii(7, 13).unwrap(), rat(-4194073, 189));
    }

    #[test]
    fn term_ii_closed_values() {
        assert_eq!(term_ii_closed(2), rat(-3, 2));
        assert_eq!(term_ii_closed(3), rat(-25, 24));
        assert_eq!(term_ii_closed(4), rat(-49, 80));
    }

    #[test]
    fn term_i_values() {
        assert_eq!(term_i(2, 3).unwrap(), rat(1, 12));
        assert_eq!(term_i(3, 5).unwrap(), rat(-1, 80));
        assert_eq!(term_i(5, 10).unwrap(), Rat::zero());
    }

    #[test]
    fn range_errors() {
        assert!(matches!(term_iii(4, 6), Err(DomainError::OutOfRange { .. })));
        assert!(matches!(term_iii(3, 6), Err(DomainError::OutOfRange { .. })));
        assert!(matches!(assemble(3, 6), Err(DomainError::OutOfRange { .. })));
        assert!(matches!(assemble(1, 0), Err(DomainError::GenusTooSmall(1))));
        assert!(assemble(2, 3).is_ok());
    }

    #[test]
    fn assemble_examples() {
        assert_eq!(assemble(4, 4).unwrap().total, rat(-1, 7560));
        assert_eq!(assemble(4, 7).unwrap().total, rat(-1759, 3360));
        assert_eq!(assemble(5, 3).unwrap().total, Rat::zero());
        assert_eq!(assemble(2, 0).unwrap().total, rat(1, 2880));

        let formal = assemble(2, 3).unwrap();
        assert!(formal.formal);
        assert_eq!(formal.method, Method::Engine);
        let regular = assemble(3, 5).unwrap();
        assert!(!regular.formal);

        let closed = assemble(4, 4).unwrap();
        assert_eq!(closed.method, Method::ClosedForm);
        assert!(closed.terms.is_none());
    }

    #[test]
    fn breakdown_totals_are_consistent() {
        for g in 2..=5u32 {
            let n = 2 * g - 1;
            let b = assemble(g, n).unwrap();
            let (i, ii, iii) = b.terms.clone().unwrap();
            assert_eq!(b.total, i + ii + iii);
        }
    }

    #[test]
    fn term_iii_matches_coefficient_route() {
        // sum C(N;a,b,c) h_*(...) == sum C(N;a,b,c) C_g^{a,b} at N = 2g - 1
        for g in 2..=8u32 {
            let n = 2 * g - 1;
            let mut coeff_sum = Rat::zero();
            for a in 1..=(n - 2) {
                for b in 1..=(n - 1 - a) {
                    let c = n - a - b;
                    coeff_sum += multinomial(n, a, b, c) * c_coeff(g, a, b);
                }
            }
            let expected = rat(1, 12) * hodge_top(g - 2) * coeff_sum;
            assert_eq!(term_iii(g, n).unwrap(), expected, "g={g}");
        }
    }

    #[test]
    fn reported_closed_forms_examples() {
        let r2 = reported_closed_forms(2);
        // The printed (I) forms evaluate to 1/6 and 5/24 at genus 2, against
        // the engine/table value 1/12; reported, not asserted equal.
        assert_eq!(r2.proposition_i, rat(1, 6));
        assert_eq!(r2.corollary_i, rat(5, 24));
        assert_ne!(r2.corollary_i, term_i(2, 3).unwrap());

        let r3 = reported_closed_forms(3);
        assert_ne!(r3.formula_iii, term_iii(3, 5).unwrap());
    }

    #[test]
    fn vanishing_pattern_matches_dimension_condition() {
        // Non-zero only when G - N is a triangular number k(k+1)/2.
        let triangular: Vec<u32> = (0..20u32).map(|k| k * (k + 1) / 2).collect();
        for g in 2..=9u32 {
            let big_g = g * (g + 1) / 2;
            for n in 0..=max_n(g) {
                let v = assemble(g, n).unwrap().total;
                if !v.is_zero() {
                    assert!(
                        triangular.contains(&(big_g - n)),
                        "non-zero at g={g}, N={n} but G-N={} not triangular",
                        big_g - n
                    );
                }
            }
        }
    }
}
