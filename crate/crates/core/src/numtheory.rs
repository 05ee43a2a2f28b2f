//! Integer arithmetic used throughout the crate: trial-division factorization,
//! divisor lists, Euler's totient, gcd and lcm.
//!
//! Everything works on `u64`. Inputs stay at desk scale, so trial division is
//! enough. Overflow is reported as an error instead of wrapping.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("64-bit overflow while computing {0}")]
    Overflow(&'static str),
}

/// Ordered prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with primes strictly ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors.
    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// True for `p^m` with `m >= 1`. The integer 1 is not a prime power.
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// True when `n = p q` for distinct primes `p`, `q`.
    pub fn is_two_distinct_primes(&self) -> bool {
        self.factors.len() == 2 && self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Number of divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    /// Totient from the product formula `prod (p^e - p^(e-1))`.
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    /// Recomputes `n` from the factor list.
    pub fn product(&self) -> Result<u64, NumError> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            checked_pow(p, e).and_then(|q| acc.checked_mul(q).ok_or(NumError::Overflow("product")))
        })
    }
}

pub fn factorize(n: u64) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn euler_phi(n: u64) -> Result<u64, NumError> {
    Ok(factorize(n)?.phi())
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>, NumError> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in f.factors() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64, NumError> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(NumError::Overflow("lcm"))
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64, NumError> {
    base.checked_pow(exp).ok_or(NumError::Overflow("power"))
}
