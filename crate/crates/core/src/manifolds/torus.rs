use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::Rational;

/// The torus knot `T_{p,q}`, displayed as given; equality and hashing use [`TorusKnot::canonical`].
#[derive(Debug, Clone, Copy)]
pub struct TorusKnot {
    p: i64,
    q: i64,
}

impl TorusKnot {
    /// Requires `gcd(p, q) = 1`; trivial knots are allowed here and rejected by [`Splice`].
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return domain(format!("T({p},{q}) needs coprime parameters"));
        }
        Ok(TorusKnot { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_trivial(&self) -> bool {
        self.p.abs() <= 1 || self.q.abs() <= 1
    }

    /// Representative under `T_{p,q} = T_{q,p} = T_{−p,−q}`: `(sign(pq)·max, min)` of the
    /// absolute values, so the second entry is positive and at most the first in magnitude.
    pub fn canonical(&self) -> (i64, i64) {
        let (a, b) = (self.p.abs(), self.q.abs());
        let sign = self.p.signum() * self.q.signum();
        (sign * a.max(b), a.min(b))
    }

    /// Mirror image `T_{−p,q}`.
    pub fn mirror(&self) -> Self {
        TorusKnot { p: -self.p, q: self.q }
    }

    /// `pq`, the slope of the Seifert fiber on the boundary.
    pub fn fiber_slope(&self) -> i128 {
        self.p as i128 * self.q as i128
    }
}

impl PartialEq for TorusKnot {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for TorusKnot {}

impl std::hash::Hash for TorusKnot {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.canonical().hash(h)
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

impl Serialize for TorusKnot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Y(T_{a,b}, T_{c,d})`: the two exteriors glued meridian to Seifert fiber both ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Splice {
    first: TorusKnot,
    second: TorusKnot,
}

impl Splice {
    pub fn new(first: TorusKnot, second: TorusKnot) -> Result<Self> {
        for k in [first, second] {
            if k.is_trivial() {
                return domain(format!("{k} is a trivial torus knot"));
            }
        }
        let s = Splice { first, second };
        if s.signed_order() > u64::MAX as i128 {
            return Err(Error::Range(format!("|H_1| of {s} exceeds 64 bits")));
        }
        Ok(s)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Splice::new(TorusKnot::new(a, b)?, TorusKnot::new(c, d)?)
    }

    pub fn first(&self) -> TorusKnot {
        self.first
    }

    pub fn second(&self) -> TorusKnot {
        self.second
    }

    /// `abcd − 1`, whose absolute value is the order of `H_1`.
    pub fn signed_order(&self) -> i128 {
        self.first.fiber_slope() * self.second.fiber_slope() - 1
    }

    /// `|abcd − 1|`.
    pub fn h1_order(&self) -> u64 {
        self.signed_order().unsigned_abs() as u64
    }

    /// Self-linking of the two meridians, `(−cd/(abcd−1), −ab/(abcd−1))`, each reduced into `[0, 1)`.
    pub fn linking_self(&self) -> (Rational, Rational) {
        let n = self.signed_order();
        let frac = |x: i128| {
            let r = Rational::new(-x, n);
            r - r.floor()
        };
        (frac(self.second.fiber_slope()), frac(self.first.fiber_slope()))
    }

    pub fn swapped(&self) -> Self {
        Splice { first: self.second, second: self.first }
    }

    /// Both factors mirrored at once.
    pub fn mirror(&self) -> Self {
        Splice { first: self.first.mirror(), second: self.second.mirror() }
    }

    /// Smallest canonical pair over factor swap and mirror; equal keys mean the splices are
    /// related by those symmetries.
    pub fn symmetry_key(&self) -> ((i64, i64), (i64, i64)) {
        [*self, self.swapped(), self.mirror(), self.mirror().swapped()]
            .iter()
            .map(|s| (s.first.canonical(), s.second.canonical()))
            .min()
            .expect("nonempty")
    }

    /// Related by factor swap, the torus-knot identities, and global mirror. The mirror reverses
    /// orientation, so this is homeomorphism up to sign.
    pub fn equivalent(&self, other: &Splice) -> bool {
        self.symmetry_key() == other.symmetry_key()
    }

    /// Related by factor swap and the torus-knot identities only.
    pub fn equivalent_oriented(&self, other: &Splice) -> bool {
        let key = |s: &Splice| {
            let (x, z) = (s.first.canonical(), s.second.canonical());
            (x.min(z), x.max(z))
        };
        key(self) == key(other)
    }
}

impl fmt::Display for Splice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y({}, {})", self.first, self.second)
    }
}

impl Serialize for Splice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A surgery coefficient `num/den` in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope(Rational);

impl Slope {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den.is_zero() {
            return domain("the meridian slope 1/0 is not a surgery coefficient here");
        }
        Ok(Slope(Rational::new(num, den)))
    }

    pub fn integer(n: i128) -> Self {
        Slope(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Slope(r)
    }

    pub fn value(&self) -> Rational {
        self.0
    }

    pub fn numerator(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i128 {
        *self.0.denom()
    }

    /// `Δ(p₁/q₁, p₂/q₂) = |p₁q₂ − p₂q₁|`.
    pub fn distance(&self, other: &Slope) -> u128 {
        (self.numerator() * other.denominator() - other.numerator() * self.denominator()).unsigned_abs()
    }

    pub fn abs(&self) -> Slope {
        Slope(self.0.abs())
    }
}

impl std::ops::Neg for Slope {
    type Output = Slope;
    fn neg(self) -> Slope {
        Slope(-self.0)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Slope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 1, msg: format!("bad slope {s:?}") };
        match s.trim().split_once('/') {
            Some((n, d)) => Slope::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
            None => Ok(Slope::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Symbolic description of a closed 3-manifold, with lens parameters exactly as produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Manifold {
    /// `L(p, q)`, the `p/q` surgery on the unknot.
    Lens { p: i128, q: i128 },
    ConnectedSum(Vec<Manifold>),
    /// Seifert fibered over `S²` with three exceptional fibers.
    SeifertFibered { orders: [u64; 3], h1: u128 },
}

impl Manifold {
    pub fn rp3() -> Self {
        Manifold::Lens { p: 2, q: 1 }
    }

    /// Order of the first homology.
    pub fn h1_order(&self) -> u128 {
        match self {
            Manifold::Lens { p, .. } => p.unsigned_abs(),
            Manifold::ConnectedSum(parts) => parts.iter().map(Manifold::h1_order).product(),
            Manifold::SeifertFibered { h1, .. } => *h1,
        }
    }
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Manifold::Lens { p: 2, q: 1 } => write!(f, "RP³"),
            Manifold::Lens { p, q } => write!(f, "L({p},{q})"),
            Manifold::ConnectedSum(parts) => {
                let s: Vec<String> = parts.iter().map(|m| m.to_string()).collect();
                write!(f, "{}", s.join("#"))
            }
            Manifold::SeifertFibered { orders: [a, b, c], h1 } => write!(f, "SFS(S²({a},{b},{c}), |H1|={h1})"),
        }
    }
}

impl Serialize for Manifold {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Moser's description of `r`-surgery on `T_{p,q}`, with `Δ = Δ(r, pq)`:
/// `Δ = 0` gives `L(p,q) # L(q,p)`, `Δ = 1` gives `L(mpq+1, mq²)` for `r = pq + 1/m`, and
/// `Δ >= 2` a Seifert fibered space over `S²(|p|,|q|,Δ)`.
pub fn torus_knot_surgery(p: i64, q: i64, r: Slope) -> Result<Manifold> {
    let k = TorusKnot::new(p, q)?;
    if k.is_trivial() {
        return domain(format!("{k} is trivial"));
    }
    let (p, q) = (p as i128, q as i128);
    let pq = p * q;
    let delta = r.distance(&Slope::integer(pq));
    Ok(match delta {
        0 => Manifold::ConnectedSum(vec![Manifold::Lens { p, q }, Manifold::Lens { p: q, q: p }]),
        1 => {
            // num − pq·den = ±1, so r = pq + 1/m with m = ±den
            let m = (r.numerator() - pq * r.denominator()) * r.denominator();
            Manifold::Lens { p: m * pq + 1, q: m * q * q }
        }
        _ => Manifold::SeifertFibered {
            orders: [p.unsigned_abs() as u64, q.unsigned_abs() as u64, delta as u64],
            h1: r.numerator().unsigned_abs(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(a: i64, b: i64, c: i64, d: i64) -> Splice {
        Splice::from_ints(a, b, c, d).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(TorusKnot::new(2, 3).unwrap().canonical(), (3, 2));
        assert_eq!(TorusKnot::new(-3, -2).unwrap().canonical(), (3, 2));
        assert_eq!(TorusKnot::new(2, -3).unwrap().canonical(), (-3, 2));
        assert!(TorusKnot::new(2, 4).is_err());
        assert!(TorusKnot::new(2, 1).unwrap().is_trivial());
        assert!(Splice::from_ints(2, 1, 2, 3).is_err());
    }

    #[test]
    fn orders_and_linking() {
        assert_eq!(y(2, 3, 2, -3).h1_order(), 37);
        assert_eq!(y(2, 3, 2, 3).h1_order(), 35);
        assert_eq!(y(3, 5, -3, 5).h1_order(), 226);
        let (l1, l2) = y(2, 3, 2, 5).linking_self();
        assert_eq!((l1, l2), (Rational::new(49, 59), Rational::new(53, 59)));
        // abcd − 1 = −37 here, so −cd/(abcd − 1) = 6/(−37)
        let (l1, l2) = y(2, 3, 2, -3).linking_self();
        assert_eq!((l1, l2), (Rational::new(31, 37), Rational::new(6, 37)));
        let (s1, s2) = y(2, 5, 2, 3).linking_self();
        assert_eq!((s1, s2), (l2_of(2, 3, 2, 5), l1_of(2, 3, 2, 5)));
    }

    fn l1_of(a: i64, b: i64, c: i64, d: i64) -> Rational {
        y(a, b, c, d).linking_self().0
    }

    fn l2_of(a: i64, b: i64, c: i64, d: i64) -> Rational {
        y(a, b, c, d).linking_self().1
    }

    #[test]
    fn symmetry_group() {
        assert!(y(2, 3, 2, -3).equivalent(&y(-3, 2, 3, 2)));
        assert!(y(3, 5, -3, 5).equivalent(&y(3, 5, -3, 5).mirror()));
        assert!(!y(2, 3, 2, 3).equivalent(&y(2, 3, 2, -3)));
        assert!(y(2, 3, 2, 3).equivalent(&y(-2, 3, -3, 2)));
    }

    #[test]
    fn slopes() {
        let a: Slope = "37/2".parse().unwrap();
        assert_eq!(a.distance(&Slope::integer(18)), 1);
        assert_eq!(a.distance(&a), 0);
        assert_eq!(Slope::new(4, -6).unwrap().to_string(), "-2/3");
        assert!(Slope::new(1, 0).is_err());
    }

    #[test]
    fn moser_examples() {
        assert_eq!(torus_knot_surgery(2, 3, Slope::integer(7)).unwrap(), Manifold::Lens { p: 7, q: 9 });
        assert_eq!(torus_knot_surgery(2, 3, Slope::integer(6)).unwrap().to_string(), "L(2,3)#L(3,2)");
        let m = torus_knot_surgery(2, 5, Slope::integer(8)).unwrap();
        assert_eq!(m, Manifold::SeifertFibered { orders: [2, 5, 2], h1: 8 });
        assert_eq!(torus_knot_surgery(2, 3, Slope::integer(5)).unwrap().h1_order(), 5);
        assert_eq!(torus_knot_surgery(2, 3, Slope::new(13, 2).unwrap()).unwrap(), Manifold::Lens { p: 13, q: 18 });
        assert!(torus_knot_surgery(1, 3, Slope::integer(5)).is_err());
    }
}
