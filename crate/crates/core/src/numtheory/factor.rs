use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Primes below this bound are removed by trial division before Miller–Rabin and Pollard rho.
const TRIAL_BOUND: u64 = 1 << 12;

/// Complete prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Prime powers `p^e`, in increasing order of `p`.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u32, u64)> + '_ {
        self.factors.iter().map(|&(p, e)| (p, e, p.pow(e)))
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u64);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin; the first twelve prime bases are exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant with batched gcds. `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard rho exhausted every polynomial")
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Complete prime factorization of `n`, for `1 <= n <= u64::MAX`.
pub fn factor(n: i128) -> Result<Factorization> {
    if n < 1 || n > u64::MAX as i128 {
        return Err(Error::Range(format!("cannot factor {n}: need 1 <= n <= 2^64 - 1")));
    }
    let value = n as u64;
    let mut rest = value;
    let mut found: Vec<u64> = Vec::new();
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        while rest % p == 0 {
            found.push(p);
            rest /= p;
        }
    }
    if rest > 1 {
        if rest < TRIAL_BOUND * TRIAL_BOUND {
            // No factor below TRIAL_BOUND remains, so the cofactor is prime.
            found.push(rest);
        } else {
            split_into(rest, &mut found);
        }
    }
    found.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in found {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { value, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(factor(226).unwrap().factors(), &[(2, 1), (113, 1)]);
        assert!(factor(1).unwrap().factors().is_empty());
        assert_eq!(factor(37).unwrap().factors(), &[(37, 1)]);
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 1..20_000u64 {
            assert_eq!(factor(n as i128).unwrap().factors(), trial_division(n).as_slice(), "n = {n}");
        }
    }

    #[test]
    fn large_semiprimes_and_range() {
        let p = 4_294_967_291u64; // largest prime below 2^32
        let q = 4_294_967_279u64;
        let f = factor((p as i128) * (q as i128)).unwrap();
        assert_eq!(f.factors(), &[(q, 1), (p, 1)]);
        let f = factor(u64::MAX as i128).unwrap();
        assert_eq!(f.primes().product::<u64>(), u64::MAX);
        assert!(f.primes().all(is_prime));
        assert!(matches!(factor(0), Err(Error::Range(_))));
        assert!(matches!(factor(1i128 << 64), Err(Error::Range(_))));
    }

    #[test]
    fn miller_rabin_small() {
        let sieve: Vec<u64> = (0..5000).filter(|&n| trial_division(n).len() == 1 && trial_division(n)[0].1 == 1 && n > 1).collect();
        let mr: Vec<u64> = (0..5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, mr);
        // strong pseudoprime to bases 2..=37 would be > 3.3e24; check a Carmichael number
        assert!(!is_prime(3_215_031_751));
    }
}
