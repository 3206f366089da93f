//! Rook–Brauer and Motzkin diagram algebras and the homology of their
//! trivial modules.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod induced;
pub mod linalg;
pub mod link_state;
pub mod module;
pub mod par;
pub mod resolution;
pub mod ring;
pub mod submodule;
pub mod summands;
pub mod verify;

pub use algebra::{AlgebraMorphism, BasedAlgebra, Family};
pub use diagram::{Diagram, ScaledDiagram};
pub use error::{Error, Result};
pub use link_state::{IntervalPartition, LinkState};
pub use ring::{Elem, Integer, Params, Ring};
pub use submodule::SubmoduleSpec;
pub use module::{BasedModule, ModuleMap};
pub use induced::BoxDiagram;
