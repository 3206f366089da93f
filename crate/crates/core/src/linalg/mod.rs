//! Exact linear algebra over `Z`, `Q` and prime fields.

pub mod cokernel;
pub mod complex;
pub mod dense;
pub mod domain;
pub mod elim;
pub mod homology_basis;
pub mod sparse;

pub use cokernel::{Cokernel, RingCokernel};
pub use complex::{
    image_basis, invariant_factors, kernel_basis, rank, ChainComplex, ColumnFn, Differential,
    HomologyGroup,
};
pub use dense::{smith, IntMatrix, SmithForm};
pub use domain::{Domain, Engine, Fp, Qq, Zz};
pub use elim::{Elimination, Reducer, Sweep};
pub use sparse::{SparseMatrix, SparseVec};
pub use homology_basis::HomologyBasis;
