//! Exact integer number theory.
//!
//! Everything here works on machine integers with 128-bit intermediates; inputs that would
//! overflow are rejected with [`Error::Range`](crate::Error::Range) instead of wrapping.

mod character;
mod factor;
mod residue;
mod sets;

pub use character::{chi8m, chi8m_with_cap, DEFAULT_CHI_PRIME_CAP};
pub use factor::{factor, is_prime, Factorization};
pub use residue::{is_square_mod, legendre, mod_inverse, mod_pow, sqrt_mod, sqrt_mod_prime};
pub use sets::{
    count_s_by_sieve, density, in_s, in_sprime, in_sk, in_tk, primes_3_mod_4, primes_5_mod_8,
    product_bound, sk_period_count, BoundKind, ResiduePredicateSet,
};

/// Reduce `a` into `[0, m)`.
pub(crate) fn rem_euclid(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}
