//! Weighted degrees and leading forms.

use affine_bezout::degrees::WeightedDegree;
use affine_bezout::expr::{parse, AmbientRing};

fn main() {
    let r = AmbientRing::new(&["x1", "x2"]).unwrap();
    let delta = WeightedDegree::new(&r, vec![3, 2]).unwrap();
    for src in ["x1^2 - x2^3", "x1 + (x1^2 - x2^3)^2", "5", "0"] {
        let p = parse(src, &r).unwrap();
        let d = delta.eval(&p).unwrap();
        match delta.leading_form(&p) {
            Ok(lf) => println!("delta({src}) = {d}, leading form {}", lf.form),
            Err(_) => println!("delta({src}) = {d}"),
        }
    }
    let h = parse("x1^2 - x2^3", &r).unwrap();
    println!("leading form of {h} prime: {}", delta.step_primality(&h).unwrap());
}
