//! Exact hyperspace and fuzzy-set dynamics over rational metric spaces.

pub mod compacta;
pub mod dynamics;
pub mod error;
pub mod fuzzy;
pub mod ground;
pub mod io;
pub mod random;
pub mod checks;
pub mod cli;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
