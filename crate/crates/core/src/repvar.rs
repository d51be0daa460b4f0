//! Exact witnesses that toroidal surgeries on `k(l, m, 0, p)` admit irreducible SU(2)
//! representations, and the SU(2)-abelian criterion for small Seifert fibered spaces.
//!
//! Angles are stored as the rational `φ/π`; nothing here evaluates a trigonometric function.

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::domain;
use crate::numtheory::mod_inverse;
use crate::{Rational, Result};

/// Orders of the two singular fibers of the Seifert fibered piece cut off by the essential torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingularOrders {
    pub alpha1: u64,
    pub alpha2: u64,
}

/// `(|l|, |(1 − lm)(2p − 1) + pl|)`.
pub fn x1_singular_orders(l: i64, m: i64, p: i64) -> SingularOrders {
    let (l, m, p) = (l as i128, m as i128, p as i128);
    let alpha2 = (1 - l * m) * (2 * p - 1) + p * l;
    SingularOrders { alpha1: l.unsigned_abs() as u64, alpha2: alpha2.unsigned_abs() as u64 }
}

fn ratio_str<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// A representation angle `φ` that extends over the whole manifold, with the data it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepWitness {
    /// `gcd(l, 2p − 1)`.
    pub g: u64,
    /// `|2p − 1| / g`, odd and at least 3.
    pub d: u64,
    /// `|l| / g`.
    pub a: u64,
    /// `((D + 1)/2)·A⁻¹ mod D`, lifted into `[1, 2D]` with the parity of `α₂`.
    pub q: u64,
    #[serde(serialize_with = "ratio_str")]
    pub phi_over_pi: Rational,
    /// `(v₁, v₂, w)` for the chosen lift.
    pub v1_v2_w: (i64, i64, i64),
    /// `|2m − 1|`.
    pub twist: u64,
    pub orders: SingularOrders,
}

impl IrrepWitness {
    /// `1/3 ≤ φ/π ≤ 2/3`.
    pub fn in_middle_third(&self) -> bool {
        Rational::new(1, 3) <= self.phi_over_pi && self.phi_over_pi <= Rational::new(2, 3)
    }

    /// `1/(2|k|) < φ/π < 1 − 1/(2|k|)` with `|k| = |2m − 1|`, the condition for the
    /// representation to extend across the remaining solid torus.
    pub fn extends(&self) -> bool {
        let edge = Rational::new(1, 2 * self.twist as i128);
        edge < self.phi_over_pi && self.phi_over_pi < Rational::from_integer(1) - edge
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IrrepVerdict {
    Cyclic,
    Witness(IrrepWitness),
}

/// Decides SU(2)-cyclicity of the toroidal surgery on `k(l, m, 0, p)`: cyclic exactly when
/// `2p − 1` divides `l`, and otherwise an explicit angle is produced.
pub fn irrep_witness(l: i64, m: i64, p: i64) -> Result<IrrepVerdict> {
    if matches!(m, 0 | 1) {
        return domain(format!("m = {m} is excluded in the n = 0 family"));
    }
    if [l, m, p].iter().any(|x| x.abs() > 1 << 30) {
        return Err(crate::Error::Range("parameters must be below 2^30 in magnitude".into()));
    }
    let det = 2 * p - 1;
    let g = l.gcd(&det);
    let d = det.abs() / g;
    if d == 1 {
        return Ok(IrrepVerdict::Cyclic);
    }
    let a = l.abs() / g;
    let orders = x1_singular_orders(l, m, p);
    let inv = mod_inverse(a as i128, d as i128).expect("A and D are coprime") as i64;
    let base = ((d + 1) / 2 * inv).rem_euclid(d);
    let q = if base % 2 == (orders.alpha2 % 2) as i64 { base } else { base + d };
    let phi = Rational::new(a as i128 * q as i128, d as i128);
    let phi_over_pi = phi - phi.floor();
    Ok(IrrepVerdict::Witness(IrrepWitness {
        g: g as u64,
        d: d as u64,
        a: a as u64,
        q: q as u64,
        phi_over_pi,
        v1_v2_w: (0, (q - orders.alpha2 as i64) / 2, 0),
        twist: (2 * m - 1).unsigned_abs(),
        orders,
    }))
}

/// Whether a Seifert fibered space over `S²` with three singular fibers is SU(2)-abelian: its
/// base must be `S²(2,4,4)`, or `S²(3,3,3)` with `|H₁|` even or infinite. The orders may be
/// given in any order.
pub fn small_sfs_su2_abelian(orders: [u64; 3], h1_even_or_infinite: bool) -> bool {
    let mut o = orders;
    o.sort_unstable();
    o == [2, 4, 4] || (o == [3, 3, 3] && h1_even_or_infinite)
}
