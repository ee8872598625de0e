//! Run every verification suite for a few root systems.

use std::sync::Arc;

use alcove_crystals::cli::{run_suites, Suite};
use alcove_crystals::rootsys::{RootSystem, Weight};

fn main() -> alcove_crystals::Result<()> {
    for (ty, weight) in [("A2", Some(vec![1, 1])), ("B2", Some(vec![1, 1])), ("G2", Some(vec![1, 0])), ("A3", None)] {
        let rs = Arc::new(RootSystem::from_type(ty)?);
        let lambda = weight.map(|c| Weight::from_ints(&c));
        let label = lambda.as_ref().map_or("∞".to_string(), |l| l.to_string());
        println!("{ty} {label}");
        for r in run_suites(&rs, lambda.as_ref(), 4, Suite::All)? {
            println!("  {}", r.line());
        }
    }
    Ok(())
}
