//! Write the first four levels of Al(∞) in type A2 as Graphviz DOT.
//! `cargo run --example export_dot | dot -Tsvg > binf.svg`

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::crystalgraph::{enumerate, Direction};
use alcove_crystals::rootsys::RootSystem;

fn main() -> alcove_crystals::Result<()> {
    let a2 = Arc::new(RootSystem::from_type("A2")?);
    let binf = AlcoveCrystal::infinity(&a2);
    let en = enumerate(&binf, &[AlcoveElement::empty()], Direction::Down, Some(4))?;
    eprintln!("{} nodes, {} edges", en.len(), en.graph.edges().len());
    print!("{}", en.graph.to_dot());
    Ok(())
}
