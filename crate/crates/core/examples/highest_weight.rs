//! The alcove model of a highest weight crystal: enumerate it, list its
//! folding sets and compare with the Weyl dimension formula.

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::crystalgraph::{enumerate, weyl_dimension, Direction};
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    let a3 = Arc::new(RootSystem::from_type("A3")?);
    let lambda = Weight::from_ints(&[2, 0, 0]);
    let c = AlcoveCrystal::highest_weight(&a3, &lambda)?;

    let en = enumerate(&c, &[AlcoveElement::empty()], Direction::Down, None)?;
    let mut sets: Vec<_> = en.elements.iter().collect();
    sets.sort_by(|a, b| (a.len(), a.indices()).cmp(&(b.len(), b.indices())));
    for j in sets {
        println!("{:<12} {:<48} wt {}", j.to_string(), c.render(j), c.weight(j));
    }
    println!("{} elements, dim V(λ) = {}", en.len(), weyl_dimension(&a3, &lambda)?);

    // the lowest element, reached by a string of f's
    let low = c.f_string(&AlcoveElement::empty(), &[1, 2, 3, 1, 2, 3]).expect("nonzero");
    println!("f3 f2 f1 f3 f2 f1 ∅ = {}", c.render(&low));

    assert!(!c.is_admissible(&AlcoveElement::new(vec![1, 2]))?);
    let report = en.graph.check_axioms();
    println!("axioms: {report}");
    Ok(())
}
