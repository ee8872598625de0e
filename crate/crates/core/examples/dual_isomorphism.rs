//! The maps ϖ from alcove models to path models. They are dual crystal
//! isomorphisms: e and f trade places, ε and φ swap, and weights change sign.

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::crystalgraph::{enumerate, Direction};
use alcove_crystals::limits::{varpi, varpi_dual_infinity, varpi_infinity, verify_dual_iso};
use alcove_crystals::littelmann::PathCrystal;
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    let a2 = Arc::new(RootSystem::from_type("A2")?);
    let rho = Weight::rho(2);

    let al = AlcoveCrystal::highest_weight(&a2, &rho)?;
    let elements = enumerate(&al, &[AlcoveElement::empty()], Direction::Down, None)?.elements;
    for j in elements.iter().take(4) {
        println!("{:<28} ↦ {}", al.render(j), varpi(&al, j)?);
    }
    let target = PathCrystal::finite(&a2, &-&rho)?;
    println!("Al(ρ) → Π(-ρ): {}", verify_dual_iso(&al, &elements, |j| varpi(&al, j), &target));

    let binf = AlcoveCrystal::infinity(&a2);
    let elements = enumerate(&binf, &[AlcoveElement::empty()], Direction::Down, Some(4))?.elements;
    let j = binf.f_string(&AlcoveElement::empty(), &[1]).expect("nonzero");
    println!("{} ↦ {}", binf.render(&j), varpi_infinity(&binf, &j)?);
    let target = PathCrystal::dual_infinity(&a2);
    let report = verify_dual_iso(&binf, &elements, |j| varpi_infinity(&binf, j), &target);
    println!("Al(∞) → Π∨(∞), depth 4: {report}");

    let dual = AlcoveCrystal::dual_infinity(&a2);
    let elements = enumerate(&dual, &[AlcoveElement::empty()], Direction::Up, Some(4))?.elements;
    let target = PathCrystal::infinity(&a2);
    let report = verify_dual_iso(&dual, &elements, |j| varpi_dual_infinity(&dual, j), &target);
    println!("Al∨(∞) → Π(∞), depth 4: {report}");
    Ok(())
}
