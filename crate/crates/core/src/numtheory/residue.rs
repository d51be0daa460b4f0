use super::factor::{factor, is_prime};
use super::rem_euclid;
use crate::error::{domain, Error, Result};

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` for `m >= 1`.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    r
}

/// Inverse of `a` modulo `m`, in `[0, m)`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m < 1 {
        return None;
    }
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1 || m == 1).then(|| old_s.rem_euclid(m))
}

/// Legendre symbol `(a/p)` for an odd prime `p`, computed by Euler's criterion.
pub fn legendre(a: i128, p: i128) -> Result<i8> {
    if p < 3 || p > u64::MAX as i128 || !is_prime(p as u64) {
        return domain(format!("legendre symbol needs an odd prime modulus, got {p}"));
    }
    let p = p as u64;
    let a = rem_euclid(a, p);
    if a == 0 {
        return Ok(0);
    }
    Ok(if mod_pow(a, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// A square root of `a` modulo the odd prime `p` (Tonelli–Shanks), or `None` for a non-residue.
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, (p + 1) / 4, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p).find(|&z| mod_pow(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

// Roots y of y^2 = u (mod p^k), u a unit, p odd: Hensel lifting of the mod-p root.
fn unit_roots_odd(u: u64, p: u64, k: u32) -> Option<Vec<u64>> {
    let modulus = p.pow(k);
    let mut y = sqrt_mod_prime(u % p, p)?;
    let mut pk = p;
    for _ in 1..k {
        let next = pk * p;
        // y <- y - (y^2 - u) / (2y) mod next
        let y2 = mul_mod(y, y, next);
        let diff = (y2 as i128 - (u % next) as i128).rem_euclid(next as i128) as u64;
        let inv = mod_inverse(2 * y as i128, next as i128).expect("2y is a unit") as u64;
        y = (y as i128 - mul_mod(diff, inv, next) as i128).rem_euclid(next as i128) as u64;
        pk = next;
    }
    let mut roots = vec![y % modulus, (modulus - y % modulus) % modulus];
    roots.sort_unstable();
    roots.dedup();
    Some(roots)
}

// Roots y of y^2 = u (mod 2^k), u odd.
fn unit_roots_two(u: u64, k: u32) -> Option<Vec<u64>> {
    match k {
        0 => Some(vec![0]),
        1 => Some(vec![1]),
        2 => (u % 4 == 1).then(|| vec![1, 3]),
        _ => {
            if u % 8 != 1 {
                return None;
            }
            let mut y: u64 = 1;
            for j in 3..k {
                // y^2 = u mod 2^j; fix the next bit.
                let m = 1u64 << (j + 1);
                if mul_mod(y, y, m) != u % m {
                    y += 1 << (j - 1);
                }
            }
            let modulus = 1u64 << k;
            let half = 1u64 << (k - 1);
            let mut roots: Vec<u64> = [y, modulus - y, (y + half) % modulus, (modulus - y + half) % modulus]
                .into_iter()
                .map(|r| r % modulus)
                .collect();
            roots.sort_unstable();
            roots.dedup();
            Some(roots)
        }
    }
}

// Roots of x^2 = a (mod p^e), at most MAX_ROOT_COMBINATIONS of them, smallest first. None means
// no root.
fn prime_power_roots(a: u64, p: u64, e: u32) -> Option<Vec<u64>> {
    let modulus = p.pow(e);
    let a = a % modulus;
    if a == 0 {
        // x = p^ceil(e/2)·t
        let step = p.pow(e.div_ceil(2));
        return Some((0..modulus / step).take(MAX_ROOT_COMBINATIONS).map(|t| t * step).collect());
    }
    let mut v = 0u32;
    let mut u = a;
    while u % p == 0 {
        u /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return None;
    }
    let k = e - v;
    let ys = if p == 2 { unit_roots_two(u, k)? } else { unit_roots_odd(u, p, k)? };
    // x = p^(v/2)·y' with y' ≡ y (mod p^k) and y' taken mod p^(e − v/2)
    let scale = p.pow(v / 2);
    let pk = p.pow(k);
    let mut roots: Vec<u64> = ys
        .into_iter()
        .flat_map(|y| (0..scale).map(move |t| mul_mod(y + t * pk, scale, modulus)))
        .take(MAX_ROOT_COMBINATIONS)
        .collect();
    roots.sort_unstable();
    roots.dedup();
    Some(roots)
}

fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    // m1, m2 coprime; result mod m1*m2
    let m = m1 as u128 * m2 as u128;
    let inv = mod_inverse(m1 as i128, m2 as i128).expect("coprime moduli") as u128;
    let diff = (r2 as i128 - (r1 % m2) as i128).rem_euclid(m2 as i128) as u128;
    let t = (diff * inv) % m2 as u128;
    ((r1 as u128 + m1 as u128 * t) % m) as u64
}

const MAX_ROOT_COMBINATIONS: usize = 4096;

/// A square root of `a` modulo `n` when one exists.
///
/// The decision goes through the factorization of `n`: odd prime powers use Tonelli–Shanks
/// with Hensel lifting, the power of two uses the 2-adic criteria (`u` odd is a square mod 2
/// always, mod 4 iff `u ≡ 1 (mod 4)`, mod `2^k`, `k >= 3`, iff `u ≡ 1 (mod 8)`). The returned
/// witness is the smallest root modulo `n` unless the roots number more than 4096, in which
/// case it is some root.
pub fn sqrt_mod(a: i128, n: i128) -> Result<Option<u64>> {
    if n < 1 {
        return domain(format!("modulus must be positive, got {n}"));
    }
    if n > u64::MAX as i128 {
        return Err(Error::Range(format!("modulus {n} exceeds 64 bits")));
    }
    let n = n as u64;
    let a = rem_euclid(a, n);
    let f = factor(n as i128)?;
    let mut per_power = Vec::new();
    for (p, e, pe) in f.prime_powers() {
        match prime_power_roots(a, p, e) {
            Some(roots) => per_power.push((roots, pe)),
            None => return Ok(None),
        }
    }
    let combos: usize = per_power.iter().map(|(r, _)| r.len()).fold(1usize, |acc, l| acc.saturating_mul(l));
    let mut partial: Vec<u64> = vec![0];
    let mut modulus = 1u64;
    for (roots, pe) in per_power {
        let roots = if combos > MAX_ROOT_COMBINATIONS { vec![roots[0]] } else { roots };
        let mut next = Vec::with_capacity(partial.len() * roots.len());
        for &x in &partial {
            for &r in &roots {
                next.push(crt_pair(x, modulus, r, pe));
            }
        }
        partial = next;
        modulus *= pe;
    }
    Ok(partial.into_iter().min())
}

/// Whether `a` is a square modulo `n`.
pub fn is_square_mod(a: i128, n: i128) -> Result<bool> {
    Ok(sqrt_mod(a, n)?.is_some())
}
