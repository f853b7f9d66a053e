//! Newton polygons and mixed areas of the shifted f_k systems.

use affine_bezout::bounds::fk_system;
use affine_bezout::expr::{Polynomial, Rational};
use affine_bezout::polytope::{mixed_volume, newton_polygon};

fn main() {
    for k in 1..=5 {
        let sys = fk_system(k);
        let one = Polynomial::constant(sys[0].ambient(), Rational::from_integer(1.into()));
        let p = newton_polygon(&(&sys[0] - &one)).unwrap();
        let q = newton_polygon(&(&sys[1] - &one)).unwrap();
        println!("k = {k}: vol(P) = {}, vol(Q) = {}, M(P, Q) = {}", p.area(), q.area(), mixed_volume(&p, &q));
    }
}
