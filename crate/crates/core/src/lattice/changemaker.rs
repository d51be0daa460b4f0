use serde::Serialize;

use crate::error::{domain, Result};

/// A nondecreasing vector of nonnegative integers with `σᵢ <= σ₀ + ... + σᵢ₋₁ + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Changemaker(Vec<i64>);

impl Changemaker {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if !is_changemaker(&entries) {
            return domain(format!("{entries:?} is not a changemaker"));
        }
        Ok(Changemaker(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ σᵢ²`, i.e. `|⟨σ, σ⟩|`.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn l1_norm(&self) -> i64 {
        self.0.iter().sum()
    }
}

pub fn is_changemaker(entries: &[i64]) -> bool {
    let mut prefix = 0i64;
    let mut prev = 0i64;
    for &s in entries {
        if s < prev || s > prefix + 1 {
            return false;
        }
        prefix += s;
        prev = s;
    }
    true
}

/// `(4^len − 1) / 3`, the largest norm a changemaker of this length can have.
pub fn max_changemaker_norm(len: usize) -> i128 {
    if len >= 63 {
        return i128::MAX;
    }
    ((1i128 << (2 * len)) - 1) / 3
}

/// All changemakers of the given length and norm, in increasing lexicographic order.
pub fn enumerate_changemakers(len: usize, norm: i64) -> Vec<Changemaker> {
    let mut out = Vec::new();
    if len == 0 || norm < 1 || norm as i128 > max_changemaker_norm(len) {
        return out;
    }
    let mut current = Vec::with_capacity(len);
    extend(len, norm, 0, 0, &mut current, &mut out);
    out
}

// Largest norm reachable by appending `slots` entries after a prefix summing to `prefix`.
fn max_tail_norm(prefix: i64, slots: usize) -> i128 {
    let mut s = prefix as i128;
    let mut total = 0i128;
    for _ in 0..slots {
        let next = s + 1;
        total += next * next;
        s += next;
        if total > i64::MAX as i128 {
            return total;
        }
    }
    total
}

fn extend(len: usize, remaining: i64, prefix: i64, prev: i64, current: &mut Vec<i64>, out: &mut Vec<Changemaker>) {
    let slots = len - current.len();
    if slots == 0 {
        if remaining == 0 {
            out.push(Changemaker(current.clone()));
        }
        return;
    }
    if max_tail_norm(prefix, slots) < remaining as i128 {
        return;
    }
    for s in prev..=prefix + 1 {
        // every later entry is at least s
        if (s as i128) * (s as i128) * (slots as i128) > remaining as i128 {
            break;
        }
        current.push(s);
        extend(len, remaining - s * s, prefix + s, s, current, out);
        current.pop();
    }
}

/// `(Σσᵢ² − Σσᵢ) / 2`, the genus forced on a knot whose surgery yields this changemaker.
pub fn genus_from_changemaker(sigma: &Changemaker) -> i64 {
    (sigma.norm() - sigma.l1_norm()) / 2
}
