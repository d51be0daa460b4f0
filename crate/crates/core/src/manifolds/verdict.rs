use serde::Serialize;

use super::em::{em_slope, EmKnot};
use super::torus::{Slope, Splice, TorusKnot};
use super::ratio_pair;
use crate::goeritz::{builtin_diagram, goeritz_matrix};
use crate::lattice::{changemaker_obstruction, ChangemakerVerdict, Embedding, GramMatrix, ObstructionOptions};
use crate::numtheory::{in_s, in_sprime, sqrt_mod};
use crate::{Rational, Result};

/// Outcome of the linking-form test for one integral slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResidueVerdict {
    Obstructed,
    /// The linking form is consistent with the slope; `witness² ≡ residue (mod |H₁|)`.
    Inconclusive { residue: u64, witness: u64 },
}

impl ResidueVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, ResidueVerdict::Obstructed)
    }
}

/// Whether `sign·|H₁|` surgery on a knot could produce `y`, judged by the linking form.
///
/// `S³_{±n}(K)` has self-linking values `∓x²/n`; matching them against `−cd/(abcd−1)` asks
/// whether `±sgn(abcd−1)·cd` (and, equivalently, the same multiple of `ab`) is a square mod `n`.
pub fn integral_obstruction(y: &Splice, sign: i8) -> Result<ResidueVerdict> {
    let n = y.h1_order() as i128;
    let s = sign.signum() as i128 * y.signed_order().signum();
    let via_first = sqrt_mod(s * y.first().fiber_slope(), n)?;
    let via_second = sqrt_mod(s * y.second().fiber_slope(), n)?;
    assert_eq!(via_first.is_some(), via_second.is_some(), "ab and cd are inverse mod {n}");
    Ok(match via_first {
        None => ResidueVerdict::Obstructed,
        Some(w) => ResidueVerdict::Inconclusive { residue: (s * y.first().fiber_slope()).rem_euclid(n) as u64, witness: w },
    })
}

/// A match of `y` with `±Y(T_{l,lm−1}, T_{2,−(2m−1)})`, the half-integral surgery on `k(l,m,0,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NonintegralMatch {
    pub l: i64,
    pub m: i64,
    /// `+1` when `y` matched the pattern itself, `−1` when it matched after mirroring both factors.
    pub orientation: i8,
    /// `|H₁|/2`; the sign depends on the orientation convention and is not claimed.
    pub slope: Slope,
}

/// Searches the symmetry images of `y` for the shape `Y(T_{l,lm−1}, T_{2,−(2m−1)})`.
pub fn nonintegral_classification(y: &Splice) -> Option<NonintegralMatch> {
    for (x, z) in [(y.first(), y.second()), (y.second(), y.first())] {
        for orientation in [1i8, -1] {
            let (x, z) = if orientation == 1 { (x, z) } else { (x.mirror(), z.mirror()) };
            let (k, two) = z.canonical();
            if two != 2 || k % 2 == 0 || k.abs() < 3 {
                continue;
            }
            let m = (1 - k) / 2;
            let (p, q) = x.canonical();
            for l in [q, -q, p.abs(), -p.abs()] {
                let Some(other) = l.checked_mul(m).and_then(|lm| lm.checked_sub(1)) else { continue };
                if TorusKnot::new(l, other).is_ok_and(|t| t == x) {
                    let slope = Slope::from_rational(Rational::new(y.h1_order() as i128, 2));
                    return Some(NonintegralMatch { l, m, orientation, slope });
                }
            }
        }
    }
    None
}

/// The `k(l, m, 0, 0)` behind a match, whose toroidal slope realizes `y` up to orientation.
pub fn matched_em_knot(found: &NonintegralMatch) -> Result<EmKnot> {
    EmKnot::new(found.l, found.m, 0, 0)
}

/// A negative-definite form bounded by a builtin branched double cover, usable against one
/// integral slope sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltinForm {
    pub diagram: String,
    pub gram: GramMatrix,
}

// Forms bounded by y itself: the white graph for positive surgery, the black graph for negative.
fn direct_form(y: &Splice, sign: i8) -> Option<String> {
    let l35 = Splice::from_ints(3, 5, -3, 5).expect("valid splice");
    if sign > 0 && y.equivalent_oriented(&l35) {
        return Some("L35-white".into());
    }
    if sign < 0 {
        let split = |k: TorusKnot| {
            let (p, q) = k.canonical();
            (p > q && p % q == 1).then(|| ((p - 1) / q, q))
        };
        if let (Some((a0, a1)), Some((b0, b1))) = (split(y.first()), split(y.second())) {
            return Some(format!("fig3-black({a0},{a1},{b0},{b1})"));
        }
    }
    None
}

/// A builtin form serving the slope `sign·|H₁|` on `y`. A form for `−y` at the opposite sign
/// serves too, since `−y` is the global mirror.
pub fn builtin_form(y: &Splice, sign: i8) -> Result<Option<BuiltinForm>> {
    let Some(name) = direct_form(y, sign).or_else(|| direct_form(&y.mirror(), -sign)) else {
        return Ok(None);
    };
    let graph = builtin_diagram(&name).expect("registry names resolve");
    Ok(Some(BuiltinForm { gram: goeritz_matrix(&graph, 0)?, diagram: name }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChangemakerCheck {
    NotRequested,
    NoFormAvailable,
    Obstructed { diagram: String },
    Witness { diagram: String, embedding: Embedding },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralVerdict {
    pub slope: Slope,
    pub residue: ResidueVerdict,
    pub changemaker: ChangemakerCheck,
    pub obstructed: bool,
}

/// `in_S(ab)` for `Y(T_{a,b}, T_{−a,b})`, and `in_S′(ab)` for `Y(T_{a,b}, T_{a,b})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shortcuts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror_pair: Option<MirrorPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal_pair: Option<EqualPair>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MirrorPair {
    pub ab: i64,
    pub in_s: bool,
    /// Both `|a|, |b| > 2`; with `ab ∉ S` the residue tests rule out every integral slope.
    pub both_above_two: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualPair {
    pub ab: i64,
    pub in_sprime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Overall {
    HalfIntegralSurgery { slope: Slope },
    NotAnySurgery,
    Undecided { open_slopes: Vec<Slope> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpliceVerdict {
    pub splice: Splice,
    pub h1_order: u64,
    #[serde(serialize_with = "ratio_pair")]
    pub linking: (Rational, Rational),
    pub nonintegral: Option<NonintegralMatch>,
    pub integral_plus: IntegralVerdict,
    pub integral_minus: IntegralVerdict,
    pub shortcuts: Shortcuts,
    pub overall: Overall,
    /// Hypotheses the verdict depends on beyond the computations above.
    pub assumptions: Vec<String>,
}

fn integral_verdict(y: &Splice, sign: i8, with_changemaker: bool) -> Result<IntegralVerdict> {
    let residue = integral_obstruction(y, sign)?;
    let changemaker = if !with_changemaker {
        ChangemakerCheck::NotRequested
    } else {
        match builtin_form(y, sign)? {
            None => ChangemakerCheck::NoFormAvailable,
            Some(form) => {
                let p = y.h1_order() as i64;
                match changemaker_obstruction(&form.gram, p, ObstructionOptions::default())?.0 {
                    ChangemakerVerdict::Obstructed => ChangemakerCheck::Obstructed { diagram: form.diagram },
                    ChangemakerVerdict::Witness(mut found) => {
                        ChangemakerCheck::Witness { diagram: form.diagram, embedding: found.swap_remove(0) }
                    }
                }
            }
        }
    };
    let obstructed = residue.is_obstructed() || matches!(changemaker, ChangemakerCheck::Obstructed { .. });
    let slope = Slope::integer(sign as i128 * y.h1_order() as i128);
    Ok(IntegralVerdict { slope, residue, changemaker, obstructed })
}

fn shortcuts(y: &Splice) -> Result<Shortcuts> {
    let (x, z) = (y.first(), y.second());
    let ab = x.fiber_slope().unsigned_abs() as i64;
    let mirror_pair = if z == x.mirror() {
        Some(MirrorPair { ab, in_s: in_s(ab)?, both_above_two: x.p().abs() > 2 && x.q().abs() > 2 })
    } else {
        None
    };
    let equal_pair = if z == x { Some(EqualPair { ab, in_sprime: in_sprime(ab)? }) } else { None };
    Ok(Shortcuts { mirror_pair, equal_pair })
}

/// Every obstruction this crate knows, combined into a verdict on whether `y` is surgery on a
/// knot in S³.
///
/// A non-integral realization exists exactly for the half-integral shape; otherwise only the
/// integral slopes `±|H₁|` remain, and each is ruled out by the linking form or, when requested
/// and a builtin form is available, by the changemaker search.
pub fn not_surgery_verdict(y: &Splice, with_changemaker: bool) -> Result<SpliceVerdict> {
    let nonintegral = nonintegral_classification(y);
    let integral_plus = integral_verdict(y, 1, with_changemaker)?;
    let integral_minus = integral_verdict(y, -1, with_changemaker)?;
    let mut assumptions = Vec::new();
    let overall = match nonintegral {
        Some(found) => {
            debug_assert_eq!(em_slope(&matched_em_knot(&found)?).abs(), found.slope);
            Overall::HalfIntegralSurgery { slope: found.slope }
        }
        None => {
            assumptions.push(
                "homeomorphisms between splices are only searched among factor swaps, torus-knot \
                 identities and the global mirror"
                    .to_string(),
            );
            let open: Vec<Slope> =
                [&integral_plus, &integral_minus].iter().filter(|v| !v.obstructed).map(|v| v.slope).collect();
            if open.is_empty() {
                Overall::NotAnySurgery
            } else {
                Overall::Undecided { open_slopes: open }
            }
        }
    };
    if [&integral_plus, &integral_minus].iter().any(|v| !matches!(v.changemaker, ChangemakerCheck::NotRequested)) {
        assumptions.push("changemaker checks use the sharp 4-manifold bounded by the builtin diagram".to_string());
    }
    Ok(SpliceVerdict {
        splice: *y,
        h1_order: y.h1_order(),
        linking: y.linking_self(),
        nonintegral,
        integral_plus,
        integral_minus,
        shortcuts: shortcuts(y)?,
        overall,
        assumptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(a: i64, b: i64, c: i64, d: i64) -> Splice {
        Splice::from_ints(a, b, c, d).unwrap()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(integral_obstruction(&y(2, 3, 2, -3), 1).unwrap(), ResidueVerdict::Obstructed);
        assert_eq!(integral_obstruction(&y(2, 3, 2, 3), 1).unwrap(), ResidueVerdict::Obstructed);
        let ResidueVerdict::Inconclusive { residue, witness } = integral_obstruction(&y(2, 3, 2, 3), -1).unwrap() else {
            panic!("expected a residue witness");
        };
        assert_eq!(residue, 29);
        assert_eq!(witness * witness % 35, 29);
        assert_eq!(22 * 22 % 35, 29);
    }

    #[test]
    fn nonintegral_examples() {
        let found = nonintegral_classification(&y(2, 3, 2, -3)).unwrap();
        assert_eq!((found.l, found.m), (2, 2));
        assert_eq!(found.slope.to_string(), "37/2");
        assert_eq!(nonintegral_classification(&y(3, 5, -3, 5)), None);
        assert_eq!(nonintegral_classification(&y(2, 3, 2, 3)), None);
        // symmetry images of the same manifold
        for s in [y(-3, 2, 3, 2), y(2, -3, 2, 3), y(3, -2, -2, -3)] {
            assert!(nonintegral_classification(&s).is_some(), "{s}");
        }
    }

    #[test]
    fn pipeline_examples() {
        let v = not_surgery_verdict(&y(3, 4, -3, 4), false).unwrap();
        assert_eq!(v.overall, Overall::NotAnySurgery);
        let m = v.shortcuts.mirror_pair.unwrap();
        assert_eq!((m.ab, m.in_s, m.both_above_two), (12, false, true));

        let v = not_surgery_verdict(&y(2, 3, 2, -3), false).unwrap();
        assert!(matches!(v.overall, Overall::HalfIntegralSurgery { .. }));

        let v = not_surgery_verdict(&y(2, 3, 2, 3), true).unwrap();
        assert_eq!(v.shortcuts.equal_pair.unwrap().ab, 6);
        assert!(matches!(v.integral_minus.changemaker, ChangemakerCheck::Witness { .. }));
        assert_eq!(v.integral_plus.changemaker, ChangemakerCheck::NoFormAvailable);
    }

    #[test]
    fn registry() {
        assert_eq!(builtin_form(&y(3, 5, -3, 5), 1).unwrap().unwrap().diagram, "L35-white");
        assert_eq!(builtin_form(&y(-3, 5, 3, 5), -1).unwrap().unwrap().diagram, "L35-white");
        assert_eq!(builtin_form(&y(5, 2, 3, 2), -1).unwrap().unwrap().diagram, "fig3-black(2,2,1,2)");
        assert_eq!(builtin_form(&y(-5, 2, -3, 2), 1).unwrap().unwrap().diagram, "fig3-black(2,2,1,2)");
        assert!(builtin_form(&y(5, 2, 3, 2), 1).unwrap().is_none());
        assert!(builtin_form(&y(3, 4, -3, 4), -1).unwrap().is_none());
    }
}
