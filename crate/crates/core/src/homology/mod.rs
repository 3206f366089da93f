//! Tor over based algebras and the maps between them.

pub mod bar;
pub mod morphism;
pub mod tor;

pub use bar::{AugmentationIdeal, BarComplex};
pub use morphism::{composite_is_identity, BarChainMap, InducedMap};
pub use tor::{coinvariants, tor, tor_checked, tor_complex, uct_consistent, uct_prediction, TorReport};
