use dehn_obstruct::goeritz::{goeritz_matrix, CheckerboardGraph};
use dehn_obstruct::lattice::{
    embed_in_complement, embed_in_complement_naive, enumerate_changemakers, GramMatrix,
};
use dehn_obstruct::manifolds::{
    em_slope, em_splice_form, integral_obstruction, matched_em_knot, nonintegral_classification,
    torus_knot_surgery, EmKnot, Manifold, Slope, Splice,
};
use dehn_obstruct::numtheory::{is_prime, is_square_mod, legendre, sqrt_mod};
use dehn_obstruct::repvar::{irrep_witness, small_sfs_su2_abelian, IrrepVerdict};
use dehn_obstruct::Rational;
use num_integer::Integer;
use proptest::prelude::*;

fn odd_prime() -> impl Strategy<Value = i128> {
    (3u64..5000).prop_filter("odd prime", |&p| p % 2 == 1 && is_prime(p)).prop_map(|p| p as i128)
}

proptest! {
    #[test]
    fn quadratic_reciprocity(p in odd_prime(), q in odd_prime()) {
        prop_assume!(p != q);
        let sign = if (p % 4 == 3) && (q % 4 == 3) { -1 } else { 1 };
        prop_assert_eq!(legendre(p, q).unwrap() * legendre(q, p).unwrap(), sign);
    }

    #[test]
    fn sqrt_mod_matches_brute_force(n in 1i128..3000, a in -10_000i128..10_000) {
        let target = a.rem_euclid(n);
        let smallest = (0..n).find(|x| x * x % n == target);
        let got = sqrt_mod(a, n).unwrap();
        prop_assert_eq!(got.map(|x| x as i128), smallest);
        prop_assert_eq!(is_square_mod(a, n).unwrap(), smallest.is_some());
    }

    #[test]
    fn slope_distance_is_a_symmetric_pairing(a in -500i128..500, b in 1i128..50, c in -500i128..500, d in 1i128..50) {
        let (r, s) = (Slope::new(a, b).unwrap(), Slope::new(c, d).unwrap());
        prop_assert_eq!(r.distance(&s), s.distance(&r));
        prop_assert_eq!(r.distance(&r), 0);
        prop_assert_eq!((-r).distance(&-s), r.distance(&s));
        let round: Slope = r.to_string().parse().unwrap();
        prop_assert_eq!(round, r);
    }

    #[test]
    fn linking_form_swaps_with_factors(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -9i64..=9) {
        let Ok(y) = Splice::from_ints(a, b, c, d) else { return Ok(()) };
        let (x, z) = y.linking_self();
        let (z2, x2) = y.swapped().linking_self();
        prop_assert_eq!((x, z), (x2, z2));
        prop_assert_eq!(y.h1_order(), y.mirror().h1_order());
    }

    #[test]
    fn integral_tests_agree_on_both_factors(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -9i64..=9) {
        let Ok(y) = Splice::from_ints(a, b, c, d) else { return Ok(()) };
        let order = y.signed_order();
        let n = order.abs();
        for sign in [1i8, -1] {
            let s = sign as i128 * order.signum();
            let first = is_square_mod(s * (a * b) as i128, n).unwrap();
            let second = is_square_mod(s * (c * d) as i128, n).unwrap();
            prop_assert_eq!(first, second);
            prop_assert_eq!(integral_obstruction(&y, sign).unwrap().is_obstructed(), !first);
        }
    }

    #[test]
    fn em_mirror_negates_slope(l in -10i64..=10, m in -10i64..=10, n in -10i64..=10) {
        let k = EmKnot::new(l, m, n, 0).unwrap();
        prop_assert_eq!(em_slope(&k.mirror().unwrap()), -em_slope(&k));
    }

    #[test]
    fn em_slope_numerator_is_splice_homology(l in -12i64..=12, m in -12i64..=12, n in 0i64..=1, p in 0i64..=1) {
        prop_assume!(n * p == 0);
        let k = EmKnot::new(l, m, n, p).unwrap();
        prop_assume!(!k.possibly_degenerate());
        if let Ok(Some(y)) = em_splice_form(&k) {
            prop_assert_eq!(em_slope(&k).numerator().unsigned_abs(), y.h1_order() as u128);
        }
    }

    #[test]
    fn irrep_angle_closed_form(l in -40i64..=40, m in 2i64..=20, p in -20i64..=20, negate in any::<bool>()) {
        let m = if negate { -m } else { m };
        match irrep_witness(l, m, p).unwrap() {
            IrrepVerdict::Cyclic => prop_assert_eq!(l % (2 * p - 1), 0),
            IrrepVerdict::Witness(w) => {
                prop_assert_eq!(w.phi_over_pi, Rational::new(1, 2) + Rational::new(1, 2 * w.d as i128));
                prop_assert!(w.in_middle_third() && w.extends());
                prop_assert_eq!(w.g * w.d, (2 * p - 1).unsigned_abs());
            }
        }
    }

    #[test]
    fn gram_text_round_trip(diag in proptest::collection::vec(-9i64..=-4, 1..5), off in proptest::collection::vec(-1i64..=1, 10)) {
        let n = diag.len();
        let mut rows = vec![vec![0i64; n]; n];
        let mut it = off.iter();
        for i in 0..n {
            rows[i][i] = diag[i];
            for j in 0..i {
                let v = *it.next().unwrap();
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let g = GramMatrix::new(rows).unwrap();
        let back: GramMatrix = g.to_text().parse().unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn goeritz_determinant_ignores_basepoint(
        parents in proptest::collection::vec(any::<prop::sample::Index>(), 1..6),
        extra in proptest::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..6),
    ) {
        let n = parents.len() + 1;
        let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, ix)| (i + 1, ix.index(i + 1))).collect();
        edges.extend(extra.iter().map(|(u, v)| (u.index(n), v.index(n))).filter(|(u, v)| u != v));
        let g = CheckerboardGraph::new(n, edges).unwrap();
        let back: CheckerboardGraph = g.to_text().parse().unwrap();
        prop_assert_eq!(&back, &g);
        let dets: Vec<u128> = (0..n).map(|b| goeritz_matrix(&g, b).unwrap().determinant().unsigned_abs()).collect();
        prop_assert!(dets.iter().all(|&d| d == dets[0]));
    }

    #[test]
    fn pruned_search_agrees_with_naive(diag in proptest::collection::vec(-6i64..=-2, 1..=3), off in proptest::collection::vec(-1i64..=1, 3), norm in 1i64..=30) {
        let n = diag.len();
        let mut rows = vec![vec![0i64; n]; n];
        let mut it = off.iter();
        for i in 0..n {
            rows[i][i] = diag[i];
            for j in 0..i {
                let v = *it.next().unwrap();
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let Ok(g) = GramMatrix::new(rows) else { return Ok(()) };
        for sigma in enumerate_changemakers(n + 1, norm) {
            let pruned = embed_in_complement(&g, &sigma).unwrap();
            let naive = embed_in_complement_naive(&g, &sigma).unwrap();
            prop_assert_eq!(pruned.is_some(), naive.is_some(), "σ = {:?}", sigma.entries());
            if let Some(e) = pruned {
                prop_assert!(e.verify(&g).is_ok());
            }
        }
    }
}

#[test]
fn nonintegral_round_trip() {
    for l in 2..=6i64 {
        for m in 2..=5i64 {
            let k = EmKnot::new(l, m, 0, 0).unwrap();
            let y = em_splice_form(&k).unwrap().unwrap();
            for image in [y.clone(), y.swapped(), y.mirror(), y.mirror().swapped()] {
                let found = nonintegral_classification(&image).unwrap_or_else(|| panic!("{k}: {image} unmatched"));
                let back = matched_em_knot(&found).unwrap();
                assert_eq!(em_slope(&back).abs(), em_slope(&k).abs(), "{k}");
                assert_eq!(found.slope, em_slope(&k).abs(), "{k}");
            }
        }
    }
}

#[test]
fn torus_surgeries_are_never_su2_abelian_seifert() {
    for p in -12i64..=12 {
        for q in 2i64..=12 {
            if p.abs() < 2 || p.gcd(&q) != 1 {
                continue;
            }
            let pq = (p * q) as i128;
            for den in 1i128..=12 {
                for delta in 2i128..=12 {
                    if delta.gcd(&den) != 1 {
                        continue;
                    }
                    for num in [pq * den + delta, pq * den - delta] {
                        let r = Slope::new(num, den).unwrap();
                        match torus_knot_surgery(p, q, r).unwrap() {
                            Manifold::SeifertFibered { orders, h1 } => {
                                assert_eq!(h1, num.unsigned_abs());
                                assert!(!small_sfs_su2_abelian(orders, true), "T({p},{q}) at {r}: {orders:?}");
                            }
                            other => panic!("T({p},{q}) at {r} gave {other}"),
                        }
                    }
                }
            }
        }
    }
}
