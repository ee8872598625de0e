//! Littelmann path operators on straight-line, extended and co-extended paths.

use std::sync::Arc;

use alcove_crystals::crystalgraph::{enumerate, Direction};
use alcove_crystals::littelmann::{PLPath, PathCrystal};
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    let a2 = Arc::new(RootSystem::from_type("A2")?);

    let pi = PLPath::straight(&Weight::from_ints(&[1, 1]));
    let p = pi.f(&a2, 1).and_then(|x| x.f(&a2, 2)).expect("nonzero");
    println!("f2 f1 π_ρ = {p}  wt {}", p.weight());
    println!("dual      = {}", p.dualize());
    for i in 1..=2 {
        assert_eq!(p.f(&a2, i).map(|x| x.dualize()), p.dualize().e(&a2, i));
    }

    let c = PathCrystal::finite(&a2, &Weight::from_ints(&[2, 1]))?;
    let en = enumerate(&c, &[c.generator().clone()], Direction::Down, None)?;
    println!("Π(2Λ1+Λ2) has {} paths", en.len());

    // on extended paths f never vanishes
    let binf = PathCrystal::infinity(&a2);
    let mut x = binf.generator().clone();
    for i in [1, 1, 2, 1, 2, 2] {
        x = x.f(&a2, i).expect("total on Π(∞)");
        println!("f{i}: {x}  wt {}  ε = ({}, {})", x.weight(), x.epsilon(1), x.epsilon(2));
    }
    println!("dual: {}", x.dualize());
    println!("json: {}", x.to_json());
    Ok(())
}
