use super::{MonomialValuation, Point2, Polygon, PolytopeError};
use crate::degrees::SemidegreeChain;
use crate::expr::Rational;

/// Inner approximation of the Okounkov polygon `Δ` together with the data it
/// was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OkounkovPolygon {
    pub polygon: Polygon,
    pub d: i64,
    pub cutoff: u32,
    /// Number of generator products enumerated.
    pub products: usize,
}

impl OkounkovPolygon {
    /// `2·area(Δ)`, which equals `D / dⁿ` for `n = 2`.
    pub fn twice_area(&self) -> Rational {
        self.polygon.area() * Rational::from_integer(2.into())
    }
}

/// Every product `m` of the chain's generators with total exponent at most
/// `cutoff` lies in the `k`-th graded piece for `δ(m) ≤ k·d`; it contributes
/// `ν(m)/k` for the least such `k ≥ 1`. Values of products are added up from
/// the generators, which is valid since `δ` is a semidegree and `ν` a
/// valuation. The hull is accepted once the cutoffs `c − 2`, `c − 1` and `c`
/// give the same polygon.
pub fn okounkov_polygon(
    chain: &SemidegreeChain,
    nu: &MonomialValuation,
    d: i64,
    cutoff: u32,
) -> Result<OkounkovPolygon, PolytopeError> {
    let arity = chain.ambient().arity();
    if arity != 2 {
        return Err(PolytopeError::UnsupportedArity(arity));
    }
    if d < 1 {
        return Err(PolytopeError::InvalidInput(format!("d = {d} must be positive")));
    }
    if cutoff < 2 {
        return Err(PolytopeError::CutoffTooSmall { cutoff });
    }
    let gens = chain.generators();
    let mut values = Vec::with_capacity(gens.len());
    for g in &gens {
        let delta = chain.eval(g)?.finite().expect("generators are non-zero");
        let v = nu.eval(g)?;
        values.push((delta, [i64::from(v[0]), i64::from(v[1])]));
    }

    // layers[t] holds the points of products with total exponent t.
    let mut layers: Vec<Vec<Point2>> = vec![Vec::new(); cutoff as usize + 1];
    let mut products = 0;
    let mut exps = vec![0u32; gens.len()];
    enumerate(&mut exps, 0, cutoff, &mut |e| {
        products += 1;
        let (mut delta, mut v) = (0i64, [0i64; 2]);
        for (k, &(dg, vg)) in e.iter().zip(&values) {
            let k = i64::from(*k);
            delta += k * dg;
            v[0] += k * vg[0];
            v[1] += k * vg[1];
        }
        let k = if delta > 0 { (delta + d - 1) / d } else { 1 };
        let k = Rational::from_integer(k.into());
        let t: u32 = e.iter().sum();
        layers[t as usize].push(Point2::new(
            Rational::from_integer(v[0].into()) / &k,
            Rational::from_integer(v[1].into()) / &k,
        ));
    });

    let hull_upto = |c: u32| Polygon::hull(layers[..=c as usize].iter().flatten().cloned());
    let last = hull_upto(cutoff)?;
    if hull_upto(cutoff - 1)? != last || hull_upto(cutoff - 2)? != last {
        return Err(PolytopeError::CutoffTooSmall { cutoff });
    }
    Ok(OkounkovPolygon { polygon: last, d, cutoff, products })
}

fn enumerate(exps: &mut Vec<u32>, i: usize, budget: u32, f: &mut impl FnMut(&[u32])) {
    if i == exps.len() {
        f(exps);
        return;
    }
    for e in 0..=budget {
        exps[i] = e;
        enumerate(exps, i + 1, budget - e, f);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::{IterationStep, WeightedDegree};
    use crate::expr::{parse, AmbientRing};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn weighted(w: Vec<i64>) -> SemidegreeChain {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        SemidegreeChain::weighted(WeightedDegree::new(&r, w).unwrap())
    }

    #[test]
    fn standard_simplex() {
        let ok = okounkov_polygon(&weighted(vec![1, 1]), &MonomialValuation::lex(2), 1, 8).unwrap();
        assert_eq!(ok.polygon.vertices(), &[Point2::from_ints(0, 0), Point2::from_ints(1, 0), Point2::from_ints(0, 1)]);
        assert_eq!(ok.twice_area(), q(1));
    }

    #[test]
    fn weighted_closed_form() {
        for (w, d) in [((1, 1), 1), ((3, 2), 6), ((2, 5), 10), ((2, 5), 20)] {
            let ok = okounkov_polygon(&weighted(vec![w.0, w.1]), &MonomialValuation::lex(2), d, 12).unwrap();
            assert_eq!(ok.twice_area(), Rational::new((d * d).into(), (w.0 * w.1).into()), "{w:?}");
        }
    }

    #[test]
    fn baby_chain() {
        let r = AmbientRing::new(&["x1", "x2"]).unwrap();
        let c = SemidegreeChain::new(
            WeightedDegree::new(&r, vec![3, 2]).unwrap(),
            vec![IterationStep::new(parse("x1^2 - x2^3", &r).unwrap(), 1)],
        )
        .unwrap();
        let ok = okounkov_polygon(&c, &MonomialValuation::lex(2), 6, 18).unwrap();
        assert_eq!(ok.twice_area(), q(36));
    }

    #[test]
    fn small_cutoff_is_reported() {
        assert_eq!(
            okounkov_polygon(&weighted(vec![1, 1]), &MonomialValuation::lex(2), 1, 1),
            Err(PolytopeError::CutoffTooSmall { cutoff: 1 })
        );
        assert_eq!(
            okounkov_polygon(&weighted(vec![1, 1]), &MonomialValuation::lex(2), 3, 3),
            Err(PolytopeError::CutoffTooSmall { cutoff: 3 })
        );
    }
}
