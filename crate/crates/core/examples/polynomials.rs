//! Parsing, arithmetic, gcd and resultants over exact rationals.

use affine_bezout::expr::{gcd, parse, resultant_in, AmbientRing};

fn main() {
    let r = AmbientRing::new(&["x", "y"]).unwrap();
    let f = parse("(x - y)(x + y) + 1/2", &r).unwrap();
    let g = parse("x^2 - 2*x*y + y^2", &r).unwrap();
    println!("f = {f}");
    println!("g = {g}");
    println!("f*g = {}", &f * &g);
    println!("gcd(x^2 - y^2, g) = {}", gcd(&parse("x^2 - y^2", &r).unwrap(), &g).unwrap());
    println!("Res_y(f, g) = {}", resultant_in(&f, &g, "y").unwrap());
    match parse("x + * y", &r) {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
}
