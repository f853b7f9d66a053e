//! Random checks of the degree-like axioms.

use affine_bezout::bounds::baby_chain;
use affine_bezout::degrees::{axiom_check, SemidegreeChain, Subdegree, WeightedDegree};

fn main() {
    let chain = baby_chain();
    let rep = axiom_check(&chain, 300, 7).unwrap();
    println!("iterated: passed {}, strict products {}", rep.passed(), rep.strict_products);

    let r = chain.ambient().clone();
    let max = Subdegree::new(vec![
        SemidegreeChain::weighted(WeightedDegree::new(&r, vec![1, 2]).unwrap()),
        SemidegreeChain::weighted(WeightedDegree::new(&r, vec![2, 1]).unwrap()),
    ])
    .unwrap();
    let rep = axiom_check(&max, 300, 7).unwrap();
    println!("max of two weights: passed {}, strict products {}", rep.passed(), rep.strict_products);
    if let Some(c) = rep.first_counterexample {
        println!("  e.g. f = {}, g = {}: {} < {}", c.f, c.g, c.lhs, c.rhs);
    }
}
