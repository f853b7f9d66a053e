mod common;

use std::sync::Arc;

use affine_bezout::bounds::baby_chain;
use affine_bezout::degrees::{Degree, IterationStep, SemidegreeChain, WeightedDegree};
use affine_bezout::expr::{gcd, parse, resultant, AmbientRing, Monomial, Polynomial, Rational};
use affine_bezout::oracle::fiber_count;
use affine_bezout::polytope::{minkowski_sum, mixed_volume, newton_polygon, Point2, Polygon};
use common::{baby_curve_degree, q, recentred_degree, weighted_degree};
use proptest::prelude::*;

fn ring() -> Arc<AmbientRing> {
    AmbientRing::new(&["x1", "x2"]).unwrap()
}

fn build(terms: &[(u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(&ring(), terms.iter().map(|&(a, b, c)| (Monomial::new(vec![a, b]), q(c))))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..=4, 0u32..=4, -5i64..=5), 1..5).prop_map(|t| build(&t))
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("non-zero", |p| !p.is_zero())
}

/// Sums of `c·x1^i·x2^j·(x1² − x2³)^k`, which exercise cancellation.
fn cusp_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..=2, 0u32..=2, 0u32..=3, -3i64..=3), 1..4).prop_map(|t| {
        let r = ring();
        let h = parse("x1^2 - x2^3", &r).unwrap();
        t.iter().fold(Polynomial::zero(&r), |acc, &(i, j, k, c)| {
            let m = Polynomial::monomial(&r, Monomial::new(vec![i, j]), q(c));
            &acc + &(&m * &h.pow(k))
        })
    })
}

fn any_poly() -> impl Strategy<Value = Polynomial> {
    prop_oneof![poly(), cusp_poly()]
}

fn point_set() -> impl Strategy<Value = Polygon> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 1..7)
        .prop_map(|v| Polygon::hull(v.into_iter().map(|(x, y)| Point2::from_ints(x, y))).unwrap())
}

fn naive_sum(p: &Polygon, q: &Polygon) -> Polygon {
    let mut pts = Vec::new();
    for a in p.vertices() {
        for b in q.vertices() {
            pts.push(Point2::new(&a.x + &b.x, &a.y + &b.y));
        }
    }
    Polygon::hull(pts).unwrap()
}

fn recentred_chain() -> SemidegreeChain {
    let r = ring();
    SemidegreeChain::new(
        WeightedDegree::new(&r, vec![4, 4]).unwrap(),
        vec![IterationStep::new(parse("x1", &r).unwrap(), 2), IterationStep::new(parse("x1 + 1", &r).unwrap(), 1)],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn empty_chain_is_weighted(p in poly(), w1 in 1i64..6, w2 in 1i64..6) {
        let d = WeightedDegree::new(&ring(), vec![w1, w2]).unwrap();
        let c = SemidegreeChain::weighted(d.clone());
        prop_assert_eq!(c.eval(&p).unwrap(), d.eval(&p).unwrap());
        prop_assert_eq!(d.eval(&p).unwrap().finite(), weighted_degree(&p, &[w1, w2]));
    }

    #[test]
    fn dominance(p in any_poly()) {
        let c = baby_chain();
        prop_assert!(c.eval(&p).unwrap() <= c.base().eval(&p).unwrap());
    }

    #[test]
    fn matches_curve_degree(p in any_poly()) {
        prop_assert_eq!(baby_chain().eval(&p).unwrap().finite(), baby_curve_degree(&p));
    }

    #[test]
    fn print_parse_round_trip(p in poly()) {
        prop_assert_eq!(parse(&p.to_string(), &ring()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn multiplicative(p in any_poly(), r in any_poly()) {
        let c = baby_chain();
        let (dp, dr) = (c.eval(&p).unwrap(), c.eval(&r).unwrap());
        prop_assert_eq!(c.eval(&(&p * &r)).unwrap(), dp.add(dr));
        prop_assert!(c.eval(&(&p + &r)).unwrap() <= dp.max(dr));
    }

    #[test]
    fn two_step_chain_is_recentred_weighting(p in poly()) {
        prop_assert_eq!(recentred_chain().eval(&p).unwrap().finite(), recentred_degree(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn agreement_off_the_ideal(p in nonzero_poly()) {
        let c = baby_chain();
        let lf = c.base().leading_form(&p).unwrap().form;
        let h = parse("x1^2 - x2^3", &ring()).unwrap();
        if lf.div_exact(&h).is_none() {
            prop_assert_eq!(c.eval(&p).unwrap(), c.base().eval(&p).unwrap());
        }
    }

    #[test]
    fn powers_of_the_step(k in 1u32..6) {
        let h = parse("x1^2 - x2^3", &ring()).unwrap();
        prop_assert_eq!(baby_chain().eval(&h.pow(k)).unwrap(), Degree::Finite(i64::from(k)));
    }

    #[test]
    fn minkowski_matches_pairwise_sums(a in point_set(), b in point_set(), c in point_set()) {
        let ab = minkowski_sum(&a, &b);
        prop_assert_eq!(&ab, &naive_sum(&a, &b));
        prop_assert_eq!(&ab, &minkowski_sum(&b, &a));
        prop_assert_eq!(minkowski_sum(&ab, &c), minkowski_sum(&a, &minkowski_sum(&b, &c)));
    }

    #[test]
    fn area_scales_quadratically(a in point_set(), l in 2i64..=3) {
        prop_assert_eq!(a.dilate(&q(l)).area(), a.area() * q(l * l));
    }

    #[test]
    fn mixed_volume_is_symmetric_and_additive(a in point_set(), b in point_set(), c in point_set()) {
        prop_assert_eq!(mixed_volume(&a, &c), mixed_volume(&c, &a));
        prop_assert_eq!(mixed_volume(&minkowski_sum(&a, &b), &c), mixed_volume(&a, &c) + mixed_volume(&b, &c));
        prop_assert_eq!(mixed_volume(&a, &a), a.area() * q(2));
    }

    #[test]
    fn hull_is_idempotent(p in nonzero_poly()) {
        let np = newton_polygon(&p).unwrap();
        let again = Polygon::hull(np.vertices().to_vec()).unwrap();
        prop_assert_eq!(np, again);
    }

    #[test]
    fn gcd_divides(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd(&ac, &bc).unwrap();
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.primitive_normalized()).is_some());
    }

    #[test]
    fn resultant_is_multiplicative(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let deg = |p: &Polynomial| p.degree_in(1).unwrap_or(0);
        prop_assume!(deg(&a) > 0 && deg(&b) > 0 && deg(&c) > 0);
        let lhs = resultant(&(&a * &b), &c, 1).unwrap();
        let rhs = &resultant(&a, &c, 1).unwrap() * &resultant(&b, &c, 1).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_translation_covariance(a in nonzero_poly(), b in nonzero_poly(), s in -5i64..5, t in 1i64..5) {
        let shift = [Rational::new(s.into(), t.into()), q(t)];
        let r = ring();
        let moved = [&a - &Polynomial::constant(&r, shift[0].clone()), &b - &Polynomial::constant(&r, shift[1].clone())];
        let lhs = fiber_count(&[a.clone(), b.clone()], &shift).map(|c| c.count);
        let rhs = fiber_count(&moved, &[q(0), q(0)]).map(|c| c.count);
        prop_assert_eq!(lhs, rhs);
    }
}
