//! Torus knots, splices of torus-knot exteriors, Eudave-Muñoz knots, iterated cables, and the
//! combined verdict on whether a splice is surgery on a knot.

mod cable;
mod em;
mod torus;
mod verdict;

pub use cable::{cable_su2_cyclic_slopes, CyclicSurgery, IteratedTorusKnot, SlopeFamily};
pub use em::{
    em_slope, em_splice_form, em_su2_cyclic, twisted_torus_braid, twisted_torus_knot, EmKnot, TwistedTorusBraid,
    MAX_BRAID_TWIST,
};
pub use torus::{torus_knot_surgery, Manifold, Slope, Splice, TorusKnot};
pub use verdict::{
    builtin_form, integral_obstruction, matched_em_knot, nonintegral_classification, not_surgery_verdict, BuiltinForm,
    ChangemakerCheck, EqualPair, IntegralVerdict, MirrorPair, NonintegralMatch, Overall, ResidueVerdict, Shortcuts,
    SpliceVerdict,
};

use crate::Rational;

pub(crate) fn ratio_pair<S: serde::Serializer>(pair: &(Rational, Rational), s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&pair.0.to_string())?;
    t.serialize_element(&pair.1.to_string())?;
    t.end()
}
