use std::fmt;

use serde::Serialize;

use super::torus::{Slope, Splice, TorusKnot};
use crate::error::{domain, Error, Result};
use crate::Rational;

/// Eudave-Muñoz knot `k(l, m, n, p)`; at most one of `n`, `p` is nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EmKnot {
    pub l: i64,
    pub m: i64,
    pub n: i64,
    pub p: i64,
}

impl EmKnot {
    pub fn new(l: i64, m: i64, n: i64, p: i64) -> Result<Self> {
        if n != 0 && p != 0 {
            return domain(format!("k({l},{m},{n},{p}) needs n = 0 or p = 0"));
        }
        let bound = 1 << 20;
        if [l, m, n, p].iter().any(|x| x.abs() > bound) {
            return Err(Error::Range(format!("k({l},{m},{n},{p}) parameters exceed {bound}")));
        }
        Ok(EmKnot { l, m, n, p })
    }

    /// The mirror image, `k(−l, −m, 1−n, 0)`, defined for the `p = 0` family.
    pub fn mirror(&self) -> Result<Self> {
        if self.p != 0 {
            return domain("mirror formula is only available when p = 0");
        }
        EmKnot::new(-self.l, -self.m, 1 - self.n, 0)
    }

    /// Parameters near the sporadic exclusions, where the construction may degenerate to a torus
    /// knot or the unknot. These tuples are still computed, only flagged.
    pub fn possibly_degenerate(&self) -> bool {
        matches!(self.l, -1..=1)
            || matches!(self.m, 0 | 1)
            || (self.l, self.m, self.n, self.p) == (-2, -1, 0, 0)
    }
}

impl fmt::Display for EmKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k({},{},{},{})", self.l, self.m, self.n, self.p)
    }
}

/// The half-integral toroidal slope
/// `l(2m−1)(1−lm) − 1/2 + n(2lm−1)² + p(2lm−l−1)²`.
pub fn em_slope(k: &EmKnot) -> Slope {
    let (l, m, n, p) = (k.l as i128, k.m as i128, k.n as i128, k.p as i128);
    let sq = |x: i128| x * x;
    let whole = l * (2 * m - 1) * (1 - l * m) + n * sq(2 * l * m - 1) + p * sq(2 * l * m - l - 1);
    Slope::from_rational(Rational::from_integer(whole) - Rational::new(1, 2))
}

/// Whether the toroidal surgery is SU(2)-cyclic: `p = 0` and `n ∈ {0, 1}`, or `n = 0` and
/// `(2p − 1) | l`.
pub fn em_su2_cyclic(k: &EmKnot) -> bool {
    (k.p == 0 && matches!(k.n, 0 | 1)) || (k.n == 0 && k.l % (2 * k.p - 1) == 0)
}

/// The splice the toroidal surgery produces, up to orientation, or `None` for the cyclic
/// `k(l, m, 0, p)` with `p ∉ {0, 1}`, whose surgery is not of that shape.
pub fn em_splice_form(k: &EmKnot) -> Result<Option<Splice>> {
    if !em_su2_cyclic(k) {
        return domain(format!("{k} is not SU(2)-cyclic"));
    }
    let (l, m) = (k.l, k.m);
    let pair = match (k.n, k.p) {
        (0, 0) => ((l, l * m - 1), (2, -(2 * m - 1))),
        (1, 0) => ((-l, l * m - 1), (2, 2 * m + 1)),
        (0, 1) => ((-l, m * l - l - 1), (2, 2 * m - 1)),
        _ => return Ok(None),
    };
    let ((a, b), (c, d)) = pair;
    Splice::new(TorusKnot::new(a, b)?, TorusKnot::new(c, d)?).map(Some)
}

/// A positive braid together with its twisted-torus-knot parameters `T(p, q, r, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistedTorusBraid {
    pub strands: u32,
    /// Generator indices, `i` standing for `σ_i`.
    pub word: Vec<u32>,
    pub torus_parameters: [u64; 4],
}

/// Largest `q` accepted by [`twisted_torus_braid`]; the word length grows like `36q³`.
pub const MAX_BRAID_TWIST: u32 = 32;

/// `(σ_{6q+3} ⋯ σ_1)^{6q²+6q+1} (σ_{2q+1} ⋯ σ_1)²` on `6q + 4` strands, whose closure is
/// `k(2q+1, −1, 0, −q)`.
pub fn twisted_torus_braid(q: u32) -> Result<TwistedTorusBraid> {
    if q < 1 {
        return domain("the twist parameter must be at least 1");
    }
    if q > MAX_BRAID_TWIST {
        return Err(Error::Range(format!("q = {q} exceeds {MAX_BRAID_TWIST}")));
    }
    let long = 6 * q + 3;
    let reps = 6 * q * q + 6 * q + 1;
    let short = 2 * q + 1;
    let mut word = Vec::with_capacity((long * reps + 2 * short) as usize);
    for _ in 0..reps {
        word.extend((1..=long).rev());
    }
    for _ in 0..2 {
        word.extend((1..=short).rev());
    }
    Ok(TwistedTorusBraid {
        strands: 6 * q + 4,
        word,
        torus_parameters: [long as u64 + 1, reps as u64, short as u64 + 1, 2],
    })
}

/// The knot `k(2q+1, −1, 0, −q)` presented by [`twisted_torus_braid`].
pub fn twisted_torus_knot(q: u32) -> Result<EmKnot> {
    let q = q as i64;
    EmKnot::new(2 * q + 1, -1, 0, -q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(l: i64, m: i64, n: i64, p: i64) -> EmKnot {
        EmKnot::new(l, m, n, p).unwrap()
    }

    #[test]
    fn slopes() {
        assert_eq!(em_slope(&k(2, 2, 0, 0)).to_string(), "-37/2");
        assert_eq!(em_slope(&k(3, -1, 0, -1)).to_string(), "-273/2");
        assert_eq!(em_slope(&k(2, 2, 1, 0)).to_string(), "61/2");
        assert!(EmKnot::new(2, 2, 1, 1).is_err());
    }

    #[test]
    fn cyclicity() {
        assert!(em_su2_cyclic(&k(3, 2, 0, 2)));
        assert!(!em_su2_cyclic(&k(2, 2, 2, 0)));
        assert!(em_su2_cyclic(&k(2, 2, 1, 0)));
        assert!(!em_su2_cyclic(&k(5, 2, 0, 2)));
    }

    #[test]
    fn splice_forms() {
        let y = em_splice_form(&k(2, 2, 0, 0)).unwrap().unwrap();
        assert!(y.equivalent(&Splice::from_ints(2, 3, 2, -3).unwrap()));
        let y = em_splice_form(&k(2, 2, 1, 0)).unwrap().unwrap();
        assert!(y.equivalent(&Splice::from_ints(-2, 3, 2, 5).unwrap()));
        assert_eq!(y.h1_order(), 61);
        let y = em_splice_form(&k(3, 2, 0, 1)).unwrap().unwrap();
        assert_eq!(y.h1_order(), 37);
        assert_eq!(em_splice_form(&k(3, 2, 0, 2)).unwrap(), None);
        assert!(em_splice_form(&k(2, 2, 2, 0)).is_err());
    }

    #[test]
    fn braid() {
        let b = twisted_torus_braid(1).unwrap();
        assert_eq!(b.strands, 10);
        assert_eq!(b.word.len(), 123);
        assert_eq!(b.torus_parameters, [10, 13, 4, 2]);
        assert_eq!(&b.word[..9], &[9, 8, 7, 6, 5, 4, 3, 2, 1]);
        assert_eq!(&b.word[117..], &[3, 2, 1, 3, 2, 1]);
        assert!(twisted_torus_braid(0).is_err());
        assert_eq!(em_slope(&twisted_torus_knot(1).unwrap()).to_string(), "-273/2");
    }

    #[test]
    fn mirror_negates_slope() {
        let a = k(3, 2, 1, 0);
        assert_eq!(em_slope(&a.mirror().unwrap()), -em_slope(&a));
        assert!(k(3, 2, 0, 1).mirror().is_err());
    }
}
