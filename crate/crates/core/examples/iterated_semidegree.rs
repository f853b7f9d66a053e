//! Builds the chain (3,2) -> (x1^2 - x2^3, weight 1) and evaluates it.

use affine_bezout::degrees::{IterationStep, SemidegreeChain, WeightedDegree};
use affine_bezout::expr::{parse, AmbientRing};

fn main() {
    let r = AmbientRing::new(&["x1", "x2"]).unwrap();
    let h = parse("x1^2 - x2^3", &r).unwrap();
    let chain = SemidegreeChain::new(WeightedDegree::new(&r, vec![3, 2]).unwrap(), vec![IterationStep::new(h, 1)]).unwrap();
    for src in ["x1", "x2", "x1^2 - x2^3", "(x1^2 - x2^3)^3", "x1 + (x1^2 - x2^3)^2", "x2^3"] {
        let p = parse(src, &r).unwrap();
        println!("{src:>22}: base {}  iterated {}", chain.base().eval(&p).unwrap(), chain.eval(&p).unwrap());
    }

    // A step whose leading form factors is refused.
    let bad = SemidegreeChain::new(
        WeightedDegree::new(&r, vec![1, 1]).unwrap(),
        vec![IterationStep::new(parse("x1^2 - x2^2", &r).unwrap(), 1)],
    );
    println!("{}", bad.unwrap_err());
}
