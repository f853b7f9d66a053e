//! Okounkov polygons of weighted and iterated degrees.

use affine_bezout::bounds::baby_chain;
use affine_bezout::degrees::{SemidegreeChain, WeightedDegree};
use affine_bezout::polytope::{okounkov_polygon, MonomialValuation};

fn main() {
    let r = baby_chain().ambient().clone();
    let nu = MonomialValuation::lex(2);
    for (w, d) in [((1, 1), 1), ((3, 2), 6), ((2, 5), 10)] {
        let chain = SemidegreeChain::weighted(WeightedDegree::new(&r, vec![w.0, w.1]).unwrap());
        let ok = okounkov_polygon(&chain, &nu, d, 12).unwrap();
        println!("weights {w:?}, d = {d}: 2*area = {}", ok.twice_area());
    }
    let ok = okounkov_polygon(&baby_chain(), &nu, 6, 18).unwrap();
    print!("{}", ok.polygon.dump());
    println!("iterated, d = 6: 2*area = {} from {} products", ok.twice_area(), ok.products);
}
