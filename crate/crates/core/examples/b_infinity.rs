//! Following one element of B(∞) through the alcove model: folding
//! positions, weight, string data and its projections to B(kρ).

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::rootsys::RootSystem;

fn main() -> alcove_crystals::Result<()> {
    let a3 = Arc::new(RootSystem::from_type("A3")?);
    let binf = AlcoveCrystal::infinity(&a3);

    let word = [2, 1, 3, 2, 2, 1, 3, 2];
    let b = binf.f_string(&AlcoveElement::empty(), &word).expect("f is never 0 on B(∞)");
    println!("b        = {}", binf.render(&b));
    println!("indices  = {b}");
    println!("wt(b)    = {}", binf.weight(&b));
    for i in 1..=3 {
        println!("ε_{i} = {}, φ_{i} = {}", binf.epsilon(&b, i), binf.phi(&b, i));
    }

    let (top, string) = binf.to_highest_weight(&b);
    println!("e-string to the top: {string:?} (reaches ∅: {})", top.is_empty());

    let (k, target, p) = binf.minimal_projection(&b)?;
    println!("smallest k = {k}: {}", target.render(&p));
    for k in 3..=4 {
        let target = binf.projection_target(k)?;
        let p = binf.project(&target, &b, k).expect("k is large enough");
        println!("in Al({k}ρ): {}", target.render(&p));
    }
    Ok(())
}
