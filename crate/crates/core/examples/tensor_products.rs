//! Tensor products of crystals, including the one-element crystals T_μ.

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::crystalgraph::{enumerate, Crystal, Direction, TCrystal, Tensor};
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    let a2 = Arc::new(RootSystem::from_type("A2")?);
    let v1 = AlcoveCrystal::highest_weight(&a2, &Weight::from_ints(&[1, 0]))?;

    // B(Λ1) ⊗ B(Λ1) splits as B(2Λ1) ⊕ B(Λ2)
    let sq = Tensor::new(&v1, &v1);
    let all: Vec<_> = enumerate(&v1, &[AlcoveElement::empty()], Direction::Down, None)?.elements;
    let pairs: Vec<_> = all.iter().flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let en = enumerate(&sq, &pairs, Direction::Both, None)?;
    for h in en.graph.highest() {
        let (a, b) = &en.elements[h];
        println!("highest: {} ⊗ {}  wt {}", v1.render(a), v1.render(b), sq.weight(&en.elements[h]));
    }
    println!("axioms: {}", en.graph.check_axioms());

    // T_{-ρ} ⊗ B(ρ) shifts weights and keeps the arrows
    let t = TCrystal::new(&a2, -&Weight::rho(2));
    let rho = AlcoveCrystal::highest_weight(&a2, &Weight::rho(2))?;
    let shifted = Tensor::new(t, &rho);
    let top = ((), AlcoveElement::empty());
    println!("wt(t ⊗ ∅) = {}, ε_1 = {}, φ_1 = {}", shifted.weight(&top), shifted.epsilon(&top, 1), shifted.phi(&top, 1));
    let en = enumerate(&shifted, &[top], Direction::Down, None)?;
    println!("{} elements", en.len());
    Ok(())
}
