//! Closed forms for `kappa(G(Z_n))`, the bounds `xi1`/`xi2`, and the explicit
//! separating sets of the reduced graph.
//!
//! Primes are indexed `p_1 < ... < p_r` in ascending order, `k` is 1-based.

use super::TheoremError;
use crate::numtheory::{self, euler_phi, factorize, Factorization};
use crate::powergraph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KappaCase {
    PrimePower,
    TwoDistinctPrimes,
    TwoPrimePowers,
    ThreeDistinctPrimes,
    NoClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaFormula {
    pub n: u64,
    pub case: KappaCase,
    pub value: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum XiOrder {
    Equal,
    Xi2Less,
    Xi2Greater,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiComparison {
    pub n: u64,
    pub xi1: u64,
    pub xi2: u64,
    pub predicted: XiOrder,
    pub observed: XiOrder,
}

fn factor_at_least_two(n: u64) -> Result<Factorization, TheoremError> {
    if n < 2 {
        return Err(TheoremError::TooSmall(n));
    }
    Ok(factorize(n)?)
}

/// Factorization with at least two distinct primes.
fn multi_prime(n: u64) -> Result<Factorization, TheoremError> {
    let f = factor_at_least_two(n)?;
    if f.distinct() < 2 {
        return Err(TheoremError::PrimePower(n));
    }
    Ok(f)
}

/// Factorization with at least two distinct primes and `n != pq`.
fn eligible(n: u64) -> Result<Factorization, TheoremError> {
    let f = multi_prime(n)?;
    if f.is_two_distinct_primes() {
        return Err(TheoremError::TwoDistinctPrimes(n));
    }
    Ok(f)
}

fn prime_at(f: &Factorization, k: usize) -> Result<(u64, u32), TheoremError> {
    if k == 0 || k > f.distinct() {
        return Err(TheoremError::IndexOutOfRange { k, r: f.distinct() });
    }
    Ok(f.factors()[k - 1])
}

fn phi(n: u64) -> u64 {
    euler_phi(n).expect("positive argument")
}

pub fn kappa_closed_form(n: u64) -> Result<KappaFormula, TheoremError> {
    let f = factor_at_least_two(n)?;
    let (case, value) = match f.factors() {
        [_] => (KappaCase::PrimePower, Some(n - 1)),
        &[(_, 1), (_, 1)] => (KappaCase::TwoDistinctPrimes, Some(phi(n) + 1)),
        &[(p, a), (q, b)] => (KappaCase::TwoPrimePowers, Some(phi(n) + p.pow(a - 1) * q.pow(b - 1))),
        &[(p, 1), (q, 1), (_, 1)] => (KappaCase::ThreeDistinctPrimes, Some(phi(n) + p + q - 1)),
        _ => (KappaCase::NoClosedForm, None),
    };
    Ok(KappaFormula { n, case, value })
}

/// `xi1(n) = phi(n) + n/p_r - p_r^(a_r - 1) phi(n / p_r^a_r)`.
pub fn xi1(n: u64) -> Result<u64, TheoremError> {
    let f = multi_prime(n)?;
    let &(p, a) = f.factors().last().unwrap();
    let top = p.pow(a);
    Ok(phi(n) + n / p - p.pow(a - 1) * phi(n / top))
}

/// `xi2(n) = phi(n) + n/p_r^a_r + phi(n / p_r^a_r) (p_r^(a_r - 1) - 2)`.
pub fn xi2(n: u64) -> Result<u64, TheoremError> {
    let f = eligible(n)?;
    let &(p, a) = f.factors().last().unwrap();
    let top = p.pow(a);
    let value = (phi(n) + n / top) as i128 + phi(n / top) as i128 * (p.pow(a - 1) as i128 - 2);
    Ok(u64::try_from(value).expect("xi2 is positive"))
}

fn classify(diff: i128) -> XiOrder {
    match diff.cmp(&0) {
        std::cmp::Ordering::Less => XiOrder::Xi2Less,
        std::cmp::Ordering::Equal => XiOrder::Equal,
        std::cmp::Ordering::Greater => XiOrder::Xi2Greater,
    }
}

/// Predicted order of `xi2` against `xi1` from the factorization alone.
///
/// `prod_{i<r} (1 - 1/p_i)` is compared with `1/2` by cross-multiplying
/// integers.
pub fn predict_xi_order(f: &Factorization) -> XiOrder {
    let factors = f.factors();
    let &(_, a_r) = factors.last().unwrap();
    if a_r == 1 || (factors.len() == 2 && factors[0].0 == 2) {
        return XiOrder::Equal;
    }
    let (num, den) = factors[..factors.len() - 1]
        .iter()
        .fold((1u128, 1u128), |(num, den), &(p, _)| (num * (p as u128 - 1), den * p as u128));
    classify(2 * num as i128 - den as i128)
}

pub fn compare_xi(n: u64) -> Result<XiComparison, TheoremError> {
    let f = eligible(n)?;
    let (x1, x2) = (xi1(n)?, xi2(n)?);
    Ok(XiComparison {
        n,
        xi1: x1,
        xi2: x2,
        predicted: predict_xi_order(&f),
        observed: classify(x2 as i128 - x1 as i128),
    })
}

/// `T_k`: the union of `<p_i p_k>` over `i != k`, without 0. Ascending residues.
pub fn construct_tk(n: u64, k: usize) -> Result<Vec<usize>, TheoremError> {
    let f = eligible(n)?;
    let (pk, _) = prime_at(&f, k)?;
    let moduli: Vec<u64> = f.primes().filter(|&p| p != pk).map(|p| p * pk).collect();
    Ok((1..n)
        .filter(|x| moduli.iter().any(|m| x % m == 0))
        .map(|x| x as usize)
        .collect())
}

/// `|T_k| + 1 = n/p_k - p_k^(a_k - 1) phi(n / p_k^a_k)`.
pub fn card_tk(n: u64, k: usize) -> Result<u64, TheoremError> {
    let f = eligible(n)?;
    let (p, a) = prime_at(&f, k)?;
    Ok(n / p - p.pow(a - 1) * phi(n / p.pow(a)))
}

/// `N~([p_k^a_k])` in the reduced graph, ascending residues.
pub fn construct_nbd_sepset(n: u64, k: usize) -> Result<Vec<usize>, TheoremError> {
    let f = eligible(n)?;
    let (p, a) = prime_at(&f, k)?;
    Ok(powergraph::reduced_class_neighborhood(n, p.pow(a))?)
}

/// `|N~([p_k^a_k])| = n/p_k^a_k + (p_k^(a_k - 1) - 2) phi(n / p_k^a_k) - 1`.
pub fn card_nbd_sepset(n: u64, k: usize) -> Result<u64, TheoremError> {
    let f = eligible(n)?;
    let (p, a) = prime_at(&f, k)?;
    let top = p.pow(a);
    let value = (n / top) as i128 + (p.pow(a - 1) as i128 - 2) * phi(n / top) as i128 - 1;
    Ok(u64::try_from(value).expect("a separating set is nonempty"))
}

/// Number of components of `G*(G)` for an abelian `p`-group with `r` cyclic factors.
pub fn abelian_p_component_formula(p: u64, r: u32) -> Result<u64, TheoremError> {
    if !numtheory::is_prime(p) {
        return Err(TheoremError::NotPrime(p));
    }
    if r == 0 {
        return Err(TheoremError::ZeroRank);
    }
    let pr = numtheory::checked_pow(p, r)?;
    Ok((pr - 1) / (p - 1))
}
