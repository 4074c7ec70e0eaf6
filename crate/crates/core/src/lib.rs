//! Combinatorics on the Fibonacci word: finite words and morphisms, exact
//! golden-ratio arithmetic, the mechanical (Beatty) construction, derived
//! word families, the free algebra on words, and a registry of checked claims.

pub mod claims;
pub mod cli;
pub mod decimal;
pub mod derived;
pub mod error;
pub mod freealg;
pub mod golden;
pub mod mechanical;
pub mod morphism;
pub mod words;

pub use error::{Error, Result};
