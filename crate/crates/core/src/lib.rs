//! Alcove path, dual alcove and Littelmann path models of the crystals
//! `B(λ)` and `B(∞)`, with the explicit dual isomorphisms between them.

pub mod alcove;
pub mod chains;
pub mod cli;
pub mod crystalgraph;
pub mod error;
pub mod limits;
pub mod littelmann;
pub mod rootsys;

pub use error::{Error, Result};
