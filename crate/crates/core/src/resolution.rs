//! The inductive resolution `0 → 𝒜_{X,x} ⊕ ℬ_{X,x} → A/J_{X−{x}} → A/J_X → 0`
//! and its image under `t ⊗_A −`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, HomologyGroup, RingCokernel, SparseMatrix, SparseVec};
use crate::module::{BasedModule, ModuleMap};
use crate::ring::Elem;

/// The three modules (degrees 1, 0, −1) and the two maps between them.
pub struct ResolutionComplex {
    pub modules: [BasedModule; 3],
    pub d1: ModuleMap,
    pub d0: ModuleMap,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub set: Vec<usize>,
    pub x: usize,
    /// Ranks in degrees 1, 0, −1.
    pub ranks: [usize; 3],
    pub equivariant: bool,
    /// Homology of the complex in degrees 1, 0, −1.
    pub homology: Vec<HomologyGroup>,
    /// `t ⊗` ranks in degrees 1, 0, −1 (free parts).
    pub tensored_ranks: [usize; 3],
    /// Every `t ⊗` term is free.
    pub tensored_free: bool,
    pub tensored_homology: Vec<HomologyGroup>,
}

impl ResolutionReport {
    pub fn exact(&self) -> bool {
        self.homology.iter().all(HomologyGroup::is_zero)
    }

    /// `0 → 0 → t → t → 0` with an isomorphism in the middle.
    pub fn tensored_is_identity(&self) -> bool {
        self.tensored_free
            && self.tensored_ranks == [0, 1, 1]
            && self.tensored_homology.iter().all(HomologyGroup::is_zero)
    }

    pub fn passes(&self) -> bool {
        self.equivariant && self.exact() && self.tensored_is_identity()
    }
}

impl ResolutionComplex {
    pub fn new(algebra: &Arc<BasedAlgebra>, set: &[usize], x: usize) -> Result<Self> {
        if !set.contains(&x) {
            return Err(Error::Precondition(format!("need x ∈ X (x = {x})")));
        }
        let rest: Vec<usize> = set.iter().copied().filter(|&v| v != x).collect();
        let a = BasedModule::script_a(algebra, set, x)?;
        let b = BasedModule::script_b(algebra, set, x)?;
        let middle = BasedModule::quotient_by_j(algebra, &rest)?;
        let bottom = BasedModule::quotient_by_j(algebra, set)?;
        let d1 = ModuleMap::hstack(&[
            &ModuleMap::induced_by_inclusion(&a, &middle)?,
            &ModuleMap::induced_by_inclusion(&b, &middle)?,
        ])?;
        let d0 = ModuleMap::induced_by_inclusion(&middle, &bottom)?;
        let top = BasedModule::direct_sum(format!("{} ⊕ {}", a.name(), b.name()), &[&a, &b])?;
        Ok(ResolutionComplex { modules: [top, middle, bottom], d1, d0 })
    }

    /// Degrees −1, 0, 1.
    pub fn complex(&self) -> Result<ChainComplex> {
        let [top, middle, bottom] = &self.modules;
        ChainComplex::from_matrices(
            top.ring(),
            -1,
            vec![bottom.rank(), middle.rank(), top.rank()],
            vec![self.d0.matrix.clone(), self.d1.matrix.clone()],
        )
    }

    pub fn equivariant(&self) -> bool {
        let [top, middle, bottom] = &self.modules;
        self.d1.check_equivariant(top, middle).is_ok() && self.d0.check_equivariant(middle, bottom).is_ok()
    }

    /// `t ⊗_A` of the complex on the free parts of the coinvariants, with a
    /// flag saying whether every term was free.
    pub fn tensored(&self) -> Result<(ChainComplex, bool)> {
        let ring = self.modules[0].ring();
        let mut cokernels = self
            .modules
            .iter()
            .map(BasedModule::coinvariants)
            .collect::<Result<Vec<RingCokernel>>>()?;
        let free = cokernels.iter().all(RingCokernel::is_free);
        let mut push = |map: &ModuleMap, from: usize, to: usize| -> SparseMatrix<Elem> {
            let cols: Vec<SparseVec<Elem>> = (0..cokernels[from].free_rank())
                .map(|k| {
                    let image = map.apply(&cokernels[from].lift(k), ring);
                    cokernels[to]
                        .project(&image)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !ring.is_zero(c))
                        .collect()
                })
                .collect();
            SparseMatrix::from_sorted_columns(cokernels[to].free_rank(), cols)
        };
        let t1 = push(&self.d1, 0, 1);
        let t0 = push(&self.d0, 1, 2);
        let dims = vec![cokernels[2].free_rank(), cokernels[1].free_rank(), cokernels[0].free_rank()];
        Ok((ChainComplex::from_matrices(ring, -1, dims, vec![t0, t1])?, free))
    }
}

/// Builds the complex and checks equivariance, exactness and the tensored image.
pub fn check_resolution(algebra: &Arc<BasedAlgebra>, set: &[usize], x: usize) -> Result<ResolutionReport> {
    let r = ResolutionComplex::new(algebra, set, x)?;
    let c = r.complex()?;
    let homology = [1, 0, -1].iter().map(|&k| c.homology_at(k)).collect::<Result<Vec<_>>>()?;
    let (t, tensored_free) = r.tensored()?;
    let tensored_homology = [1, 0, -1].iter().map(|&k| t.homology_at(k)).collect::<Result<Vec<_>>>()?;
    Ok(ResolutionReport {
        set: set.to_vec(),
        x,
        ranks: [c.dim(1), c.dim(0), c.dim(-1)],
        equivariant: r.equivariant(),
        homology,
        tensored_ranks: [t.dim(1), t.dim(0), t.dim(-1)],
        tensored_free,
        tensored_homology,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Family;
    use crate::ring::Ring;

    #[test]
    fn exact_at_n2() {
        for fam in [Family::RookBrauer, Family::Motzkin] {
            let a = BasedAlgebra::with_ints(fam, 2, Ring::Integers, 2, 1).unwrap();
            for (set, x) in [(vec![1], 1), (vec![1, 2], 1), (vec![1, 2], 2), (vec![2], 2)] {
                let r = check_resolution(&a, &set, x).unwrap();
                assert!(r.passes(), "{fam:?} {set:?} {x}: {r:?}");
            }
        }
    }

    #[test]
    fn dropping_b_breaks_exactness() {
        let a = BasedAlgebra::with_ints(Family::RookBrauer, 2, Ring::Integers, 2, 1).unwrap();
        let mut r = ResolutionComplex::new(&a, &[1, 2], 1).unwrap();
        let rank_a = BasedModule::script_a(&a, &[1, 2], 1).unwrap().rank();
        let cols = (0..r.d1.source_rank)
            .map(|j| if j < rank_a { r.d1.matrix.column_vec(j) } else { Vec::new() })
            .collect();
        r.d1 = ModuleMap::from_columns(r.d1.source_rank, r.d1.target_rank, cols).unwrap();
        let c = r.complex().unwrap();
        assert!(!c.homology_at(0).unwrap().is_zero());
    }
}
