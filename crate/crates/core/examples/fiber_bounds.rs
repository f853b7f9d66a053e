//! Three bounds on |f_k^{-1}(a)| next to the exact count.

use affine_bezout::bounds::{baby_chain, bkk_bound, fk_system, iterated_bound, weighted_bound};
use affine_bezout::expr::Rational;
use affine_bezout::oracle::generic_probe;

fn main() {
    let chain = baby_chain();
    let one = [Rational::from_integer(1.into()), Rational::from_integer(1.into())];
    println!("k  weighted  bkk  iterated  count");
    for k in 1..=3 {
        let sys = fk_system(k);
        let w = weighted_bound(chain.base(), &sys).unwrap();
        let b = bkk_bound(&sys, &one).unwrap();
        let i = iterated_bound(&chain, &sys).unwrap();
        let c = generic_probe(&sys, 5, u64::from(k)).unwrap();
        println!("{k}  {:>8}  {:>3}  {:>8}  {:>5}", w.value, b.value, i.value, c.consensus);
    }
    println!("{}", iterated_bound(&chain, &fk_system(1)).unwrap().to_json());
}
