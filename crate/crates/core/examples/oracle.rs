//! Counting fiber points by elimination, including a degenerate fiber.

use affine_bezout::expr::{parse, AmbientRing, Rational};
use affine_bezout::oracle::{fiber_count, probe_points, random_points};

fn main() {
    let r = AmbientRing::new(&["x1", "x2"]).unwrap();
    let sys = vec![parse("x1*x2 - 1", &r).unwrap(), parse("x1^2 + x2^2 - 4", &r).unwrap()];
    let zero = vec![Rational::from_integer(0.into()); 2];
    let c = fiber_count(&sys, &zero).unwrap();
    println!("hyperbola meets circle in {} points", c.count);
    for e in &c.eliminations {
        println!("  {e}");
    }

    let degenerate = vec![parse("x1*x2", &r).unwrap(), parse("x1", &r).unwrap()];
    let mut points = random_points(4, 1);
    points.insert(0, zero);
    print!("{}", probe_points(&degenerate, &points).unwrap());
}
