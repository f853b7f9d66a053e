//! Exact planar polygons: Newton polygons, Minkowski sums, areas, mixed
//! areas, and the Okounkov polygon of a semidegree with respect to a
//! monomial valuation.

mod okounkov;
mod valuation;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::degrees::DegreeError;
use crate::expr::{rational_to_string, Polynomial, Rational};

pub use okounkov::{okounkov_polygon, OkounkovPolygon};
pub use valuation::MonomialValuation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("the zero polynomial has no Newton polygon")]
    ZeroPolynomial,
    #[error("polygons need exactly two variables, got {0}")]
    UnsupportedArity(usize),
    #[error("hull still growing at cutoff {cutoff}")]
    CutoffTooSmall { cutoff: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Degree(#[from] DegreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2 { x: Rational::from_integer(x.into()), y: Rational::from_integer(y.into()) }
    }

    fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x - &o.x, &self.y - &o.y)
    }

    fn add(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x + &o.x, &self.y + &o.y)
    }

    fn scale(&self, c: &Rational) -> Point2 {
        Point2::new(&self.x * c, &self.y * c)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", rational_to_string(&self.x), rational_to_string(&self.y))
    }
}

/// `(b − a) × (c − a)`.
fn cross(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    let (u, v) = (b.sub(a), c.sub(a));
    &u.x * &v.y - &u.y * &v.x
}

/// Convex polygon with vertices in counterclockwise order, starting at the
/// lexicographically smallest vertex, with no three collinear. A single
/// vertex is a point and two vertices a segment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    /// Convex hull (Andrew's monotone chain).
    pub fn hull<I: IntoIterator<Item = Point2>>(points: I) -> Result<Polygon, PolytopeError> {
        let mut pts: Vec<Point2> = points.into_iter().collect();
        pts.sort();
        pts.dedup();
        if pts.is_empty() {
            return Err(PolytopeError::InvalidInput("hull of no points".into()));
        }
        if pts.len() <= 2 {
            return Ok(Polygon { vertices: pts });
        }
        let mut lower: Vec<Point2> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point2> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Ok(Polygon { vertices: lower })
    }

    pub fn point(p: Point2) -> Polygon {
        Polygon { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Euclidean area (shoelace formula).
    pub fn area(&self) -> Rational {
        let n = self.vertices.len();
        let mut twice = Rational::zero();
        for i in 0..n {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            twice += &a.x * &b.y - &a.y * &b.x;
        }
        (twice / Rational::from_integer(2.into())).abs()
    }

    /// `λP` for `λ ≥ 0`.
    pub fn dilate(&self, lambda: &Rational) -> Polygon {
        assert!(!lambda.is_negative(), "dilation factor must be non-negative");
        if lambda.is_zero() {
            return Polygon::point(Point2::from_ints(0, 0));
        }
        Polygon { vertices: self.vertices.iter().map(|p| p.scale(lambda)).collect() }
    }

    pub fn translate(&self, t: &Point2) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|p| p.add(t)).collect() }
    }

    /// One `x y` line per vertex.
    pub fn dump(&self) -> String {
        self.vertices.iter().map(|p| format!("{p}\n")).collect()
    }

    /// Inverse of [`Polygon::dump`]; the points are re-hulled.
    pub fn parse_dump(s: &str) -> Result<Polygon, PolytopeError> {
        let mut pts = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut it = line.split_whitespace().map(crate::expr::parse_rational);
            match (it.next(), it.next(), it.next()) {
                (Some(Some(x)), Some(Some(y)), None) => pts.push(Point2::new(x, y)),
                _ => return Err(PolytopeError::InvalidInput(format!("bad polygon line `{line}`"))),
            }
        }
        Polygon::hull(pts)
    }

    fn edges(&self) -> Vec<Point2> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n).map(|i| self.vertices[(i + 1) % n].sub(&self.vertices[i])).collect()
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Convex hull of the exponent vectors of a bivariate polynomial.
pub fn newton_polygon(p: &Polynomial) -> Result<Polygon, PolytopeError> {
    if p.arity() != 2 {
        return Err(PolytopeError::UnsupportedArity(p.arity()));
    }
    if p.is_zero() {
        return Err(PolytopeError::ZeroPolynomial);
    }
    Polygon::hull(p.terms().map(|(m, _)| {
        let e = m.exponents();
        Point2::from_ints(i64::from(e[0]), i64::from(e[1]))
    }))
}

/// Orders edge directions counterclockwise, starting just after straight
/// down, which is the order in which they leave the lexicographic minimum.
fn edge_order(a: &Point2, b: &Point2) -> Ordering {
    let half = |p: &Point2| {
        if p.x.is_positive() || (p.x.is_zero() && p.y.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = &a.x * &b.y - &a.y * &b.x;
        Rational::zero().cmp(&c)
    })
}

/// `P + Q` by merging edge sequences.
pub fn minkowski_sum(p: &Polygon, q: &Polygon) -> Polygon {
    let start = p.vertices[0].add(&q.vertices[0]);
    let mut edges = p.edges();
    edges.extend(q.edges());
    edges.sort_by(edge_order);
    let mut pts = Vec::with_capacity(edges.len() + 1);
    let mut cur = start;
    pts.push(cur.clone());
    for e in &edges {
        cur = cur.add(e);
        pts.push(cur.clone());
    }
    Polygon::hull(pts).expect("non-empty")
}

/// `M(P, Q) = area(P + Q) − area(P) − area(Q)`.
pub fn mixed_volume(p: &Polygon, q: &Polygon) -> Rational {
    minkowski_sum(p, q).area() - p.area() - q.area()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, AmbientRing};

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::hull(pts.iter().map(|&(x, y)| pt(x, y))).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ring() -> std::sync::Arc<AmbientRing> {
        AmbientRing::new(&["x1", "x2"]).unwrap()
    }

    /// Hull of all pairwise vertex sums.
    fn naive_sum(p: &Polygon, q: &Polygon) -> Polygon {
        Polygon::hull(p.vertices().iter().flat_map(|a| q.vertices().iter().map(move |b| a.add(b)))).unwrap()
    }

    #[test]
    fn hull_is_canonical() {
        let p = poly(&[(0, 6), (2, 3), (4, 0), (0, 0), (1, 0), (1, 1)]);
        assert_eq!(p.vertices(), &[pt(0, 0), pt(4, 0), pt(0, 6)]);
        assert_eq!(poly(&[(3, 3), (1, 1), (2, 2)]).vertices(), &[pt(1, 1), pt(3, 3)]);
        assert_eq!(poly(&[(5, 5), (5, 5)]).vertices(), &[pt(5, 5)]);
        let sq = poly(&[(1, 1), (0, 1), (1, 0), (0, 0)]);
        assert_eq!(sq.vertices(), &[pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]);
        assert!(Polygon::hull(Vec::new()).is_err());
    }

    #[test]
    fn newton_polygons() {
        let r = ring();
        let np = newton_polygon(&parse("x1 + (x1^2 - x2^3)^2 - 1", &r).unwrap()).unwrap();
        assert_eq!(np.vertices(), &[pt(0, 0), pt(4, 0), pt(0, 6)]);
        let np = newton_polygon(&parse("x1^2 - x2^3 - 1", &r).unwrap()).unwrap();
        assert_eq!(np.vertices(), &[pt(0, 0), pt(2, 0), pt(0, 3)]);
        assert_eq!(newton_polygon(&parse("5", &r).unwrap()).unwrap().vertices(), &[pt(0, 0)]);
        assert_eq!(newton_polygon(&parse("0", &r).unwrap()), Err(PolytopeError::ZeroPolynomial));
        let r3 = AmbientRing::new(&["a", "b", "c"]).unwrap();
        assert_eq!(newton_polygon(&parse("a", &r3).unwrap()), Err(PolytopeError::UnsupportedArity(3)));
    }

    #[test]
    fn minkowski_examples() {
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(minkowski_sum(&tri, &Polygon::point(pt(0, 0))), tri);
        assert_eq!(minkowski_sum(&tri, &tri), tri.dilate(&q(2)));
        let p = poly(&[(0, 0), (4, 0), (0, 6)]);
        let qq = poly(&[(0, 0), (2, 0), (0, 3)]);
        let s = minkowski_sum(&p, &qq);
        assert_eq!(s, naive_sum(&p, &qq));
        assert_eq!(s.area(), q(27));
        let seg = poly(&[(0, 0), (1, 2)]);
        let seg2 = poly(&[(0, 0), (2, -1)]);
        let par = minkowski_sum(&seg, &seg2);
        assert_eq!(par, naive_sum(&seg, &seg2));
        assert_eq!(par.area(), q(5));
        let vert = poly(&[(0, 0), (0, 1)]);
        assert_eq!(minkowski_sum(&vert, &seg2), naive_sum(&vert, &seg2));
        assert_eq!(minkowski_sum(&vert, &vert), vert.dilate(&q(2)));
    }

    #[test]
    fn areas_and_mixed_volumes() {
        assert_eq!(poly(&[(0, 0), (4, 0), (0, 6)]).area(), q(12));
        assert_eq!(poly(&[(0, 0), (4, 0), (0, 3 * 2)]).area(), q(3 * 4));
        assert_eq!(Polygon::point(pt(3, 4)).area(), q(0));
        let p = poly(&[(0, 0), (4, 0), (0, 6)]);
        let qq = poly(&[(0, 0), (2, 0), (0, 3)]);
        assert_eq!(mixed_volume(&p, &qq), q(12));
        assert_eq!(mixed_volume(&p, &Polygon::point(pt(1, 1))), q(0));
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(mixed_volume(&sq, &sq), q(2));
    }

    #[test]
    fn dump_round_trip() {
        let p = Polygon::hull(vec![
            Point2::new(Rational::new(1.into(), 2.into()), q(0)),
            pt(0, 0),
            pt(0, 3),
        ])
        .unwrap();
        assert_eq!(p.dump(), "0 0\n1/2 0\n0 3\n");
        assert_eq!(Polygon::parse_dump(&p.dump()).unwrap(), p);
        assert!(Polygon::parse_dump("1 2 3").is_err());
    }
}
