//! The dual alcove model: reversing the chain gives a crystal whose graph is
//! the primal one with arrows reversed and weights negated.

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::crystalgraph::{enumerate, Direction};
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    let a3 = Arc::new(RootSystem::from_type("A3")?);
    let lambda = Weight::from_ints(&[2, 0, 0]);
    let primal = AlcoveCrystal::highest_weight(&a3, &lambda)?;
    let dual = AlcoveCrystal::dual_highest_weight(&a3, &lambda)?;

    let low = dual.e_string(&AlcoveElement::empty(), &[1, 2]).expect("nonzero");
    println!("e2 e1 ∅ in Al∨(2Λ1) = {}  wt {}", dual.render(&low), dual.weight(&low));

    let gp = enumerate(&primal, &[AlcoveElement::empty()], Direction::Down, None)?.graph;
    let gd = enumerate(&dual, &[AlcoveElement::empty()], Direction::Up, None)?.graph;
    match gp.dualize().is_isomorphic(&gd)? {
        Some(map) => println!("Al∨(2Λ1) ≅ Al(2Λ1)∨ via {map:?}"),
        None => println!("not isomorphic"),
    }

    let binf = AlcoveCrystal::dual_infinity(&a3);
    let j = binf.e_string(&AlcoveElement::empty(), &[2, 1, 3, 2]).expect("e is never 0 here");
    println!("Al∨(∞): {}  wt {}", binf.render(&j), binf.weight(&j));
    Ok(())
}
