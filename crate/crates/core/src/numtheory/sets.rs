use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::factor::{factor, is_prime};
use super::residue::sqrt_mod_prime;
use crate::error::{domain, Error, Result};
use crate::Rational;

/// Integer sets whose densities are studied by the residue obstructions.
///
/// * `S`: every odd prime dividing `n² + 1` is `1 mod 8`.
/// * `Sprime`: no prime dividing `n − 1` is `3 mod 4`, or no prime dividing `n + 1` is.
/// * `Sk(k)`: `n² ≢ −1` modulo each of the first `k` primes `≡ 5 (mod 8)`; contains `S`.
/// * `Tk(k)`: `n` divisible by none of the first `k` primes `≡ 3 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResiduePredicateSet {
    All,
    S,
    Sprime,
    Sk(usize),
    Tk(usize),
}

impl ResiduePredicateSet {
    pub fn contains(&self, n: i64) -> Result<bool> {
        match *self {
            Self::All => Ok(n >= 1),
            Self::S => in_s(n),
            // S′ is a subset of {n >= 2}
            Self::Sprime => if n < 2 { Ok(false) } else { in_sprime(n) },
            Self::Sk(k) => Ok(in_sk(n, &primes_5_mod_8(k))),
            Self::Tk(k) => Ok(in_tk(n, &primes_3_mod_4(k))),
        }
    }
}

impl fmt::Display for ResiduePredicateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => write!(f, "All"),
            Self::S => write!(f, "S"),
            Self::Sprime => write!(f, "Sprime"),
            Self::Sk(k) => write!(f, "Sk:{k}"),
            Self::Tk(k) => write!(f, "Tk:{k}"),
        }
    }
}

impl FromStr for ResiduePredicateSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 1, msg: format!("unknown set {s:?}; expected S, Sprime, Sk:k, Tk:k or All") };
        match s {
            "All" | "all" => return Ok(Self::All),
            "S" => return Ok(Self::S),
            "Sprime" | "S'" => return Ok(Self::Sprime),
            _ => {}
        }
        let (kind, k) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        match kind {
            "Sk" => Ok(Self::Sk(k)),
            "Tk" => Ok(Self::Tk(k)),
            _ => Err(bad()),
        }
    }
}

/// Whether every odd prime divisor of `n² + 1` is `1 mod 8`.
pub fn in_s(n: i64) -> Result<bool> {
    if n < 1 {
        return domain(format!("in_S needs n >= 1, got {n}"));
    }
    let value = (n as i128) * (n as i128) + 1;
    if value > u64::MAX as i128 {
        return Err(Error::Range(format!("{n}^2 + 1 exceeds 64 bits")));
    }
    Ok(factor(value)?.primes().all(|p| p == 2 || p % 8 == 1))
}

fn no_prime_3_mod_4(m: i64) -> Result<bool> {
    Ok(factor(m as i128)?.primes().all(|p| p % 4 != 3))
}

/// Whether no prime divisor of `n − 1`, or no prime divisor of `n + 1`, is `3 mod 4`.
pub fn in_sprime(n: i64) -> Result<bool> {
    if n < 2 {
        return domain(format!("in_Sprime needs n >= 2, got {n}"));
    }
    if n == i64::MAX {
        return Err(Error::Range(format!("{n} + 1 overflows")));
    }
    Ok(no_prime_3_mod_4(n - 1)? || no_prime_3_mod_4(n + 1)?)
}

fn first_primes_where(k: usize, keep: impl Fn(u64) -> bool) -> Vec<u64> {
    (2u64..).filter(|&p| keep(p) && is_prime(p)).take(k).collect()
}

/// The first `k` primes congruent to 5 mod 8: 5, 13, 29, 37, ...
pub fn primes_5_mod_8(k: usize) -> Vec<u64> {
    first_primes_where(k, |p| p % 8 == 5)
}

/// The first `k` primes congruent to 3 mod 4: 3, 7, 11, 19, ...
pub fn primes_3_mod_4(k: usize) -> Vec<u64> {
    first_primes_where(k, |p| p % 4 == 3)
}

/// Membership in `S_k` given its defining primes.
pub fn in_sk(n: i64, primes: &[u64]) -> bool {
    primes.iter().all(|&p| {
        let r = (n as i128).rem_euclid(p as i128);
        (r * r + 1) % p as i128 != 0
    })
}

/// Membership in `T_k` given its defining primes.
pub fn in_tk(n: i64, primes: &[u64]) -> bool {
    primes.iter().all(|&p| (n as i128).rem_euclid(p as i128) != 0)
}

/// `|{1..=limit} ∩ set| / limit` as a reduced fraction.
pub fn density(set: ResiduePredicateSet, limit: i64) -> Result<Rational> {
    if limit < 1 {
        return domain(format!("density needs limit >= 1, got {limit}"));
    }
    let count: i64 = match set {
        ResiduePredicateSet::S => count_s_by_sieve(limit)?,
        ResiduePredicateSet::Sk(k) => {
            let primes = primes_5_mod_8(k);
            (1..=limit).filter(|&n| in_sk(n, &primes)).count() as i64
        }
        ResiduePredicateSet::Tk(k) => {
            let primes = primes_3_mod_4(k);
            (1..=limit).filter(|&n| in_tk(n, &primes)).count() as i64
        }
        other => {
            let mut c = 0;
            for n in 1..=limit {
                if other.contains(n)? {
                    c += 1;
                }
            }
            c
        }
    };
    Ok(Rational::new(count as i128, limit as i128))
}

/// `|S ∩ {1..=limit}|` by sieving `n² + 1` with the primes up to `limit`.
///
/// Every odd prime divisor of `n² + 1` is `1 mod 4` and equals one of the two square roots of
/// `−1` modulo it; after dividing out all primes `<= limit`, any cofactor `> 1` is a single
/// prime, since `n² + 1 < (limit + 1)²`.
pub fn count_s_by_sieve(limit: i64) -> Result<i64> {
    if limit < 1 {
        return domain(format!("limit must be positive, got {limit}"));
    }
    if (limit as i128) * (limit as i128) + 1 > u64::MAX as i128 {
        return Err(Error::Range(format!("{limit}^2 + 1 exceeds 64 bits")));
    }
    let n = limit as usize;
    let mut rest: Vec<u64> = (0..=n as u64).map(|i| i * i + 1).collect();
    let mut good = vec![true; n + 1];
    let mut composite = vec![false; n + 1];
    // n odd gives n² + 1 ≡ 2 (mod 4)
    for i in (1..=n).step_by(2) {
        rest[i] /= 2;
    }
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        let mut j = p * p;
        while j <= n {
            composite[j] = true;
            j += p;
        }
        let p64 = p as u64;
        if p % 4 != 1 {
            continue;
        }
        let r = sqrt_mod_prime(p64 - 1, p64).expect("-1 is a residue mod p = 1 (mod 4)") as usize;
        for start in [r, p - r] {
            let mut i = start;
            while i <= n {
                if p % 8 != 1 {
                    good[i] = false;
                }
                while rest[i] % p64 == 0 {
                    rest[i] /= p64;
                }
                i += p;
            }
        }
    }
    Ok((1..=n).filter(|&i| good[i] && (rest[i] == 1 || rest[i] % 8 == 1)).count() as i64)
}

/// Which family of primes an asymptotic density bound runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    /// `∏ (1 − 2/p)` over the first `k` primes `≡ 5 (mod 8)`.
    Sk,
    /// `∏ (1 − 1/p)` over the first `k` primes `≡ 3 (mod 4)`.
    Tk,
}

/// The exact limiting density of `S_k` or `T_k`.
pub fn product_bound(kind: BoundKind, k: usize) -> Rational {
    let (primes, removed) = match kind {
        BoundKind::Sk => (primes_5_mod_8(k), 2),
        BoundKind::Tk => (primes_3_mod_4(k), 1),
    };
    primes
        .into_iter()
        .fold(Rational::from_integer(1), |acc, p| acc * Rational::new(p as i128 - removed, p as i128))
}

/// `(period, |S_k ∩ {1..=period}|)` with `period = p₁⋯p_k`.
pub fn sk_period_count(k: usize) -> (i64, i64) {
    let primes = primes_5_mod_8(k);
    let period: i64 = primes.iter().map(|&p| p as i64).product();
    let count = (1..=period).filter(|&n| in_sk(n, &primes)).count() as i64;
    (period, count)
}
