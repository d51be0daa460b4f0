use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::torus::{Manifold, Slope, TorusKnot};
use crate::error::{domain, Error, Result};

/// An iterated torus knot: a nontrivial torus knot followed by a sequence of cables.
///
/// Text form lists the outermost cable first, e.g. `C(13,2);T(2,3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedTorusKnot {
    base: TorusKnot,
    /// Innermost first.
    cables: Vec<(i64, i64)>,
}

impl IteratedTorusKnot {
    /// Signs are normalized so every second parameter is positive; then each second parameter
    /// must be at least 2, the base must have `|p| ≠ 1`, and every pair must be coprime.
    pub fn new(base: (i64, i64), cables_inner_first: Vec<(i64, i64)>) -> Result<Self> {
        let norm = |(p, q): (i64, i64)| if q < 0 { (-p, -q) } else { (p, q) };
        let (p, q) = norm(base);
        if q < 2 || p.abs() < 2 {
            return domain(format!("T({},{}) must be a nontrivial torus knot", base.0, base.1));
        }
        let base = TorusKnot::new(p, q)?;
        let mut cables = Vec::with_capacity(cables_inner_first.len());
        for c in cables_inner_first {
            let (cp, cq) = norm(c);
            if cq < 2 || cp.gcd(&cq) != 1 {
                return domain(format!("cable C({},{}) needs coprime parameters with q >= 2", c.0, c.1));
            }
            cables.push((cp, cq));
        }
        Ok(IteratedTorusKnot { base, cables })
    }

    pub fn base(&self) -> TorusKnot {
        self.base
    }

    pub fn cables(&self) -> &[(i64, i64)] {
        &self.cables
    }

    /// Number of torus-knot operations: 1 for a torus knot, 2 for a cable of one, etc.
    pub fn depth(&self) -> usize {
        self.cables.len() + 1
    }
}

impl fmt::Display for IteratedTorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, q) in self.cables.iter().rev() {
            write!(f, "C({p},{q});")?;
        }
        write!(f, "{}", self.base)
    }
}

impl Serialize for IteratedTorusKnot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for IteratedTorusKnot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let pair = |tok: &str, tag: char| -> Result<(i64, i64)> {
            let inner = tok
                .strip_prefix(tag)
                .and_then(|t| t.trim().strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad(format!("expected {tag}(p,q), got {tok:?}")))?;
            let (a, b) = inner.split_once(',').ok_or_else(|| bad(format!("missing comma in {tok:?}")))?;
            let num = |x: &str| x.trim().parse::<i64>().map_err(|_| bad(format!("bad integer {x:?} in {tok:?}")));
            Ok((num(a)?, num(b)?))
        };
        let tokens: Vec<&str> = s.split(';').map(str::trim).collect();
        let (last, outer) = tokens.split_last().expect("split yields one token");
        let base = pair(last, 'T')?;
        let mut cables = outer.iter().map(|t| pair(t, 'C')).collect::<Result<Vec<_>>>()?;
        cables.reverse();
        IteratedTorusKnot::new(base, cables)
    }
}

/// Slopes reported by [`cable_su2_cyclic_slopes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeFamily {
    Single(Slope),
    /// `base + 1/m` for every nonzero integer `m`.
    Reciprocal { base: i128 },
}

impl SlopeFamily {
    pub fn at(&self, m: i128) -> Result<Slope> {
        match *self {
            SlopeFamily::Single(s) => Ok(s),
            SlopeFamily::Reciprocal { .. } if m == 0 => domain("the family parameter must be nonzero"),
            SlopeFamily::Reciprocal { base } => Slope::new(base * m + 1, m),
        }
    }
}

impl fmt::Display for SlopeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeFamily::Single(s) => write!(f, "{s}"),
            SlopeFamily::Reciprocal { base } => write!(f, "{base}+1/m"),
        }
    }
}

/// One row of the SU(2)-cyclic surgery table for an iterated torus knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSurgery {
    pub slopes: SlopeFamily,
    kind: Outcome,
}

// How the surgered manifold depends on the family parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Fixed(Manifold),
    // L(m·pq + 1, m·q²)
    LensFamily { pq: i128, q_sq: i128 },
}

impl CyclicSurgery {
    /// Slope and manifold at family parameter `m` (ignored for single slopes).
    pub fn at(&self, m: i128) -> Result<(Slope, Manifold)> {
        let slope = self.slopes.at(m)?;
        let manifold = match &self.kind {
            Outcome::Fixed(man) => man.clone(),
            Outcome::LensFamily { pq, q_sq } => Manifold::Lens { p: m * pq + 1, q: m * q_sq },
        };
        Ok((slope, manifold))
    }

    pub fn manifold_text(&self) -> String {
        match &self.kind {
            Outcome::Fixed(m) => m.to_string(),
            Outcome::LensFamily { pq, q_sq } => format!("L({pq}m+1,{q_sq}m)"),
        }
    }

    pub fn is_family(&self) -> bool {
        matches!(self.slopes, SlopeFamily::Reciprocal { .. })
    }
}

impl Serialize for CyclicSurgery {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CyclicSurgery", 2)?;
        st.serialize_field("slope", &self.slopes.to_string())?;
        st.serialize_field("manifold", &self.manifold_text())?;
        st.end()
    }
}

// L(2, odd) is RP³, otherwise kept as produced.
fn lens_mod_two(p: i128, q: i128) -> Manifold {
    if p.abs() == 2 {
        Manifold::rp3()
    } else {
        Manifold::Lens { p, q }
    }
}

/// Nontrivial SU(2)-cyclic surgeries on an iterated torus knot.
///
/// A torus knot `T(p,q)` has the lens-space family `pq + 1/m` and, when one parameter is `±2`,
/// the reducible slope `pq`. A cable of `T(p,q)` only has them when it is the
/// `(2pq ± 1, 2)`-cable; deeper iterations have none.
pub fn cable_su2_cyclic_slopes(k: &IteratedTorusKnot) -> Vec<CyclicSurgery> {
    let (p, q) = (k.base.p() as i128, k.base.q() as i128);
    let pq = p * q;
    match k.cables.as_slice() {
        [] => {
            let mut rows = vec![CyclicSurgery {
                slopes: SlopeFamily::Reciprocal { base: pq },
                kind: Outcome::LensFamily { pq, q_sq: q * q },
            }];
            if p.abs() == 2 || q == 2 {
                rows.push(CyclicSurgery {
                    slopes: SlopeFamily::Single(Slope::integer(pq)),
                    kind: Outcome::Fixed(Manifold::ConnectedSum(vec![lens_mod_two(p, q), lens_mod_two(q, p)])),
                });
            }
            rows
        }
        &[(cp, 2)] if (cp as i128 - 2 * pq).abs() == 1 => {
            let eps = cp as i128 - 2 * pq;
            vec![
                CyclicSurgery {
                    slopes: SlopeFamily::Single(Slope::integer(4 * pq + eps)),
                    kind: Outcome::Fixed(Manifold::Lens { p: 4 * pq + eps, q: 4 * q * q }),
                },
                CyclicSurgery {
                    slopes: SlopeFamily::Single(Slope::integer(4 * pq + 2 * eps)),
                    kind: Outcome::Fixed(Manifold::ConnectedSum(vec![
                        Manifold::Lens { p: 2 * pq + eps, q: 2 * q * q },
                        Manifold::rp3(),
                    ])),
                },
            ]
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(s: &str) -> Vec<(String, String)> {
        let k: IteratedTorusKnot = s.parse().unwrap();
        cable_su2_cyclic_slopes(&k).iter().map(|r| (r.slopes.to_string(), r.manifold_text())).collect()
    }

    #[test]
    fn trefoil_rows() {
        let r = rows("T(2,3)");
        assert_eq!(r[0], ("6+1/m".into(), "L(6m+1,9m)".into()));
        assert_eq!(r[1], ("6".into(), "RP³#L(3,2)".into()));
        assert_eq!(r.len(), 2);
        assert_eq!(rows("T(3,5)").len(), 1);
    }

    #[test]
    fn cable_rows() {
        let r = rows("C(13,2);T(2,3)");
        assert_eq!(r, vec![("25".into(), "L(25,36)".into()), ("26".into(), "L(13,18)#RP³".into())]);
        assert_eq!(rows("C(11,2);T(2,3)")[0].0, "23");
        assert!(rows("C(15,2);T(2,3)").is_empty());
        assert!(rows("C(5,2);C(13,2);T(2,3)").is_empty());
    }

    #[test]
    fn family_instances() {
        let k: IteratedTorusKnot = "T(2,3)".parse().unwrap();
        let fam = &cable_su2_cyclic_slopes(&k)[0];
        let (s, m) = fam.at(1).unwrap();
        assert_eq!((s, m), (Slope::integer(7), Manifold::Lens { p: 7, q: 9 }));
        let (s, m) = fam.at(-2).unwrap();
        assert_eq!(s.to_string(), "11/2");
        assert_eq!(m, Manifold::Lens { p: -11, q: -18 });
        assert!(fam.at(0).is_err());
    }

    #[test]
    fn grammar() {
        let k: IteratedTorusKnot = " C(5, 2) ; C(13,2);T(2,3)".parse().unwrap();
        assert_eq!(k.to_string(), "C(5,2);C(13,2);T(2,3)");
        assert_eq!(k.depth(), 3);
        assert_eq!("T(3,-2)".parse::<IteratedTorusKnot>().unwrap().to_string(), "T(-3,2)");
        for bad in ["T(1,3)", "T(2,4)", "C(4,2);T(2,3)", "C(3,1);T(2,3)", "X(2,3)", "T(2,3", ""] {
            assert!(bad.parse::<IteratedTorusKnot>().is_err(), "{bad}");
        }
        assert!(matches!("T(2,x)".parse::<IteratedTorusKnot>(), Err(Error::Parse { .. })));
    }
}
