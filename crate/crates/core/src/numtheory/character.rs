use num_integer::Integer;

use super::factor::is_prime;
use super::residue::legendre;
use crate::error::{domain, Error, Result};

/// Default upper bound on the prime searched for by [`chi8m`].
pub const DEFAULT_CHI_PRIME_CAP: u64 = 10_000_000;

/// The character `χ_{8m}` on units modulo `8m`, `m` odd and positive.
///
/// `χ_{8m}(a)` is the Legendre symbol `(2m/p)` for the smallest prime `p ≡ a (mod 8m)`.
pub fn chi8m(a: i64, m: i64) -> Result<i8> {
    chi8m_with_cap(a, m, DEFAULT_CHI_PRIME_CAP)
}

/// [`chi8m`] with an explicit bound on the prime search.
pub fn chi8m_with_cap(a: i64, m: i64, cap: u64) -> Result<i8> {
    if m < 1 || m % 2 == 0 {
        return domain(format!("chi8m needs an odd positive m, got {m}"));
    }
    let modulus = 8 * m as i128;
    if (a as i128).gcd(&modulus) != 1 {
        return domain(format!("{a} is not a unit modulo {modulus}"));
    }
    let mut p = (a as i128).rem_euclid(modulus);
    while p as u128 <= cap as u128 {
        // gcd(p, 8m) = 1 already rules out p | 2m.
        if is_prime(p as u64) {
            return legendre(2 * m as i128, p);
        }
        p += modulus;
    }
    Err(Error::Resource(format!(
        "no prime congruent to {a} mod {modulus} below {cap}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(chi8m(3, 1).unwrap(), -1);
        assert_eq!(chi8m(1, 1).unwrap(), 1);
        assert_eq!(chi8m(11, 3).unwrap(), -1);
        // (2/17) = +1 by direct search for a square root of 2 mod 17
        assert!((0..17u64).any(|x| x * x % 17 == 2));
    }

    #[test]
    fn errors() {
        assert!(matches!(chi8m(2, 1), Err(Error::Domain(_))));
        assert!(matches!(chi8m(3, 2), Err(Error::Domain(_))));
        assert!(matches!(chi8m(3, 3), Err(Error::Domain(_))));
        assert!(matches!(chi8m_with_cap(1, 1, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn well_defined_across_primes() {
        // (2m/p) = (2m/q) whenever p ≡ q (mod 8m)
        let primes: Vec<i128> = (3..10_000).filter(|&p| is_prime(p as u64)).collect();
        for m in (1..=30i128).step_by(2) {
            let modulus = 8 * m;
            let mut first: std::collections::HashMap<i128, i8> = Default::default();
            for &p in &primes {
                if (2 * m) % p == 0 {
                    continue;
                }
                let s = legendre(2 * m, p).unwrap();
                let prev = *first.entry(p % modulus).or_insert(s);
                assert_eq!(prev, s, "m={m} p={p}");
            }
        }
    }
}
