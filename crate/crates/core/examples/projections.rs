//! Al(∞) as a limit: the projections to Al(kρ) commute with the crystal
//! operators, and including back recovers the element.

use std::sync::Arc;

use alcove_crystals::alcove::{AlcoveCrystal, AlcoveElement};
use alcove_crystals::crystalgraph::{enumerate, Direction};
use alcove_crystals::rootsys::RootSystem;

fn main() -> alcove_crystals::Result<()> {
    let a2 = Arc::new(RootSystem::from_type("A2")?);
    let binf = AlcoveCrystal::infinity(&a2);
    let en = enumerate(&binf, &[AlcoveElement::empty()], Direction::Down, Some(3))?;

    let k = 4;
    let target = binf.projection_target(k)?;
    println!("{:<40} Al({k}ρ)", "Al(∞)");
    let mut checked = 0;
    for j in &en.elements {
        let p = binf.project(&target, j, k).expect("depth 3 fits in 4ρ");
        println!("{:<40} {}", binf.render(j), target.render(&p));
        assert_eq!(&binf.include(&target, &p, k)?, j);
        for i in 1..=2 {
            let down = binf.f(j, i).and_then(|x| binf.project(&target, &x, k));
            if let Some(x) = down {
                assert_eq!(Some(x), target.f(&p, i));
                checked += 1;
            }
        }
    }
    println!("{checked} squares commute");

    // too small a k loses the element
    let j = binf.f_string(&AlcoveElement::empty(), &[1, 1, 1]).expect("nonzero");
    let small = binf.projection_target(1)?;
    println!("f1^3 ∅ at k = 1: {:?}", binf.project(&small, &j, 1).map(|p| small.render(&p)));
    Ok(())
}
