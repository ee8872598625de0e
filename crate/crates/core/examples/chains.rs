//! Lex λ-chains, their duals, and concatenation.

use std::sync::Arc;

use alcove_crystals::chains::LambdaChain;
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    let a2 = Arc::new(RootSystem::from_type("A2")?);
    let rho = Weight::rho(2);

    let chain = LambdaChain::lex(&a2, &rho)?;
    println!("Γ(ρ)      = {}", chain.render());
    println!("Γ∨(ρ)     = {}", chain.dual().render());

    let twice = chain.concat(&chain)?;
    println!("Γ(ρ)*Γ(ρ) = {}  valid: {}", twice.render(), twice.validate());
    let lex = LambdaChain::lex(&a2, &Weight::from_ints(&[2, 2]))?;
    assert_eq!(lex.entries(), twice.entries());

    // a sequence of roots that is not a chain
    let bad = LambdaChain::from_roots(&a2, &rho, &[2, 2, 0, 1]);
    println!("{}  valid: {}", bad.render(), bad.validate());

    let g2 = Arc::new(RootSystem::from_type("G2")?);
    let c = LambdaChain::lex(&g2, &Weight::from_ints(&[1, 0]))?;
    println!("G2 Γ(Λ1) has {} entries: {}", c.len(), c.render());
    Ok(())
}
