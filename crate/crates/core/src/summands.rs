//! Idempotent direct summands of `A/J` and the decompositions of `ℬ_{X,x}`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{BasedAlgebra, Family};
use crate::diagram::{generator_t, generator_v, Diagram};
use crate::error::{Error, Result};
use crate::linalg::RingCokernel;
use crate::link_state::IntervalPartition;
use crate::module::{BasedModule, ModuleMap};
use crate::ring::Elem;
use crate::submodule::set_string;

/// Which summand of which `A/J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summand {
    /// `𝒜_{X,x}` in `A/J_{X−{x}}` via `ε^{−1}T_x`.
    A { set: Vec<usize>, x: usize },
    /// `ℳ_{X,{a,b}}` in `A/J_{X−{a,b}}` via `ε^{−1}T_aV_{ab}` (Rook–Brauer).
    M { set: Vec<usize>, a: usize, b: usize },
    /// `𝕐_{P,{x,y}}` in `M_n/J_{X'}`, `X' = X − [x, y]`, via `ε^{−k₀}γ` (Motzkin).
    Y { set: Vec<usize>, partition: IntervalPartition },
}

impl std::fmt::Display for Summand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Summand::A { set, x } => write!(f, "A X={} x={x}", set_string(set)),
            Summand::M { set, a, b } => write!(f, "M X={} {{{a},{b}}}", set_string(set)),
            Summand::Y { set, partition } => {
                let blocks: Vec<String> = partition.blocks().iter().map(|b| set_string(b)).collect();
                write!(f, "Y X={} P={{{}}}", set_string(set), blocks.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandReport {
    pub summand: String,
    pub source_rank: usize,
    pub target_rank: usize,
    /// `e² = e` in the algebra.
    pub idempotent: bool,
    /// Cokernel of the projection is zero.
    pub surjective: bool,
    /// Projection after the inclusion-induced splitting is the identity.
    pub splits: bool,
    pub equivariant: bool,
}

impl SummandReport {
    pub fn passes(&self) -> bool {
        self.idempotent && self.surjective && self.splits && self.equivariant
    }
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|mask| (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect())
        .collect()
}

/// Every summand instance for this algebra's family and `n`.
pub fn summand_instances(algebra: &BasedAlgebra) -> Vec<Summand> {
    let n = algebra.n();
    let mut out = Vec::new();
    for set in subsets(n) {
        for &x in &set {
            out.push(Summand::A { set: set.clone(), x });
        }
        match algebra.family() {
            Family::RookBrauer => {
                for &a in &set {
                    for &b in &set {
                        if a != b {
                            out.push(Summand::M { set: set.clone(), a, b });
                        }
                    }
                }
            }
            Family::Motzkin => {
                for &x in &set {
                    for &y in set.iter().filter(|&&y| y > x) {
                        for p in IntervalPartition::enumerate_with_outer_pair(x, y) {
                            if p.link_state(n).is_some() {
                                out.push(Summand::Y { set: set.clone(), partition: p });
                            }
                        }
                    }
                }
            }
            Family::SymGroupAlgebra => {}
        }
    }
    out
}

fn scaled(algebra: &BasedAlgebra, d: &Diagram, eps_power: u32) -> Result<Vec<(usize, Elem)>> {
    let ring = algebra.ring();
    let inv = ring.inverse(&algebra.params().epsilon)?;
    let i = algebra
        .index_of(d)
        .ok_or_else(|| Error::Precondition(format!("{d} is not in {}", algebra.family().name())))?;
    Ok(vec![(i, ring.pow(&inv, eps_power))])
}

fn minus(set: &[usize], remove: impl Fn(usize) -> bool) -> Vec<usize> {
    set.iter().copied().filter(|&v| !remove(v)).collect()
}

/// The ambient module, the summand, and the idempotent for one instance.
pub fn summand_data(
    algebra: &Arc<BasedAlgebra>,
    summand: &Summand,
) -> Result<(BasedModule, BasedModule, Vec<(usize, Elem)>)> {
    if !algebra.params().epsilon_invertible(algebra.ring()) {
        return Err(Error::EpsilonNotUnit(algebra.ring().to_string()));
    }
    let n = algebra.n();
    match summand {
        Summand::A { set, x } => {
            let source = BasedModule::quotient_by_j(algebra, &minus(set, |v| v == *x))?;
            let target = BasedModule::script_a(algebra, set, *x)?;
            let e = scaled(algebra, &generator_t(n, *x)?, 1)?;
            Ok((source, target, e))
        }
        Summand::M { set, a, b } => {
            let source = BasedModule::quotient_by_j(algebra, &minus(set, |v| v == *a || v == *b))?;
            let target = BasedModule::script_m(algebra, set, *a, *b)?;
            let tv = generator_t(n, *a)?.multiply(&generator_v(n, *a, *b)?)?;
            if (tv.r, tv.s) != (0, 0) {
                return Err(Error::Precondition("T_a V_ab picked up a scalar".into()));
            }
            let e = scaled(algebra, &tv.gamma, 1)?;
            Ok((source, target, e))
        }
        Summand::Y { set, partition } => {
            let (x, y) = partition.bounds();
            let source = BasedModule::quotient_by_j(algebra, &minus(set, |v| (x..=y).contains(&v)))?;
            let target = BasedModule::script_y(algebra, set, partition)?;
            let e = scaled(algebra, &partition.gamma(n)?, partition.block_count() as u32)?;
            Ok((source, target, e))
        }
    }
}

/// `e² = e`, the projection `source → target` given by right multiplication
/// by `e` is well defined, surjective and equivariant, and composing it with
/// the inclusion-induced map `target → source` gives the identity.
pub fn summand_check(algebra: &Arc<BasedAlgebra>, summand: &Summand) -> Result<SummandReport> {
    let (source, target, e) = summand_data(algebra, summand)?;
    let ring = algebra.ring();
    let idempotent = algebra.multiply(&e, &e) == e;
    // A zero summand (a block of P inside X − {x, y}) splits off trivially.
    let (p, s) = if target.rank() == 0 {
        (
            ModuleMap::from_columns(source.rank(), 0, vec![Vec::new(); source.rank()])?,
            ModuleMap::from_columns(0, source.rank(), Vec::new())?,
        )
    } else {
        (
            ModuleMap::right_multiplication(&source, &target, &e)?,
            ModuleMap::induced_by_inclusion(&target, &source)?,
        )
    };
    let columns: Vec<_> = (0..p.source_rank).map(|j| p.matrix.column_vec(j)).collect();
    let coker = RingCokernel::new(ring, target.rank(), &columns)?;
    let surjective = coker.free_rank() == 0 && coker.is_free();
    let splits = p.after(&s, ring)?.is_identity(ring);
    let equivariant = p.check_equivariant(&source, &target).is_ok() && s.check_equivariant(&target, &source).is_ok();
    Ok(SummandReport {
        summand: summand.to_string(),
        source_rank: source.rank(),
        target_rank: target.rank(),
        idempotent,
        surjective,
        splits,
        equivariant,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub set: Vec<usize>,
    pub x: usize,
    /// Name and rank of each summand.
    pub summands: Vec<(String, usize)>,
    pub target_rank: usize,
    /// Basis diagrams go bijectively to basis diagrams.
    pub bijective: bool,
    pub equivariant: bool,
}

impl DecompositionReport {
    pub fn passes(&self) -> bool {
        self.bijective && self.equivariant
    }
}

/// The summands of `ℬ_{X,x}`: `ℳ_{X,{x,x₀}}` over `x₀ ∈ X − {x}` for
/// Rook–Brauer, `𝕐_{P,{x,y}}` over `y ∈ X − {x}` and partitions `P` of the
/// interval between them with `{x, y}` a block for Motzkin.
pub fn b_summands(algebra: &Arc<BasedAlgebra>, set: &[usize], x: usize) -> Result<Vec<BasedModule>> {
    let mut parts = Vec::new();
    for &other in set.iter().filter(|&&v| v != x) {
        match algebra.family() {
            Family::RookBrauer => parts.push(BasedModule::script_m(algebra, set, x, other)?),
            Family::Motzkin => {
                let (lo, hi) = (x.min(other), x.max(other));
                for p in IntervalPartition::enumerate_with_outer_pair(lo, hi) {
                    parts.push(BasedModule::script_y(algebra, set, &p)?);
                }
            }
            Family::SymGroupAlgebra => {
                return Err(Error::Precondition("no B decomposition for the group algebra".into()));
            }
        }
    }
    Ok(parts)
}

/// The sum of inclusion-induced maps `⊕ summands → ℬ_{X,x}`.
pub fn decompose_b(algebra: &Arc<BasedAlgebra>, set: &[usize], x: usize) -> Result<DecompositionReport> {
    if !set.contains(&x) {
        return Err(Error::Precondition(format!("need x ∈ X (x = {x})")));
    }
    let target = BasedModule::script_b(algebra, set, x)?;
    let parts = b_summands(algebra, set, x)?;
    let maps = parts
        .iter()
        .map(|p| ModuleMap::induced_by_inclusion(p, &target))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&ModuleMap> = maps.iter().collect();
    let total = ModuleMap::hstack(&refs)?;
    let ring = algebra.ring();
    let bijective = total.source_rank == total.target_rank && {
        let mut hit = vec![false; total.target_rank];
        (0..total.source_rank).all(|j| match total.matrix.column_vec(j).as_slice() {
            [(i, c)] if ring.is_one(c) && !hit[*i] => {
                hit[*i] = true;
                true
            }
            _ => false,
        })
    };
    let equivariant = if parts.is_empty() {
        target.rank() == 0
    } else {
        let part_refs: Vec<&BasedModule> = parts.iter().collect();
        let sum = BasedModule::direct_sum("⊕", &part_refs)?;
        total.check_equivariant(&sum, &target).is_ok()
    };
    Ok(DecompositionReport {
        set: set.to_vec(),
        x,
        summands: parts.iter().map(|p| (p.name().to_string(), p.rank())).collect(),
        target_rank: target.rank(),
        bijective,
        equivariant,
    })
}

/// All `(X, x)` with `x ∈ X ⊆ [n]`.
pub fn pointed_subsets(n: usize) -> Vec<(Vec<usize>, usize)> {
    subsets(n).into_iter().flat_map(|s| s.clone().into_iter().map(move |x| (s.clone(), x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn summands_at_n2() {
        for fam in [Family::RookBrauer, Family::Motzkin] {
            let a = BasedAlgebra::with_ints(fam, 2, Ring::Integers, 2, -1).unwrap();
            let inst = summand_instances(&a);
            assert!(!inst.is_empty());
            for s in inst {
                let r = summand_check(&a, &s).unwrap();
                assert!(r.passes(), "{r:?}");
            }
        }
    }

    #[test]
    fn non_unit_epsilon_is_refused() {
        let a = BasedAlgebra::with_ints(Family::RookBrauer, 2, Ring::Integers, 1, 2).unwrap();
        let s = Summand::A { set: vec![1], x: 1 };
        assert_eq!(summand_check(&a, &s).unwrap_err(), Error::EpsilonNotUnit("Z".into()));
    }

    #[test]
    fn b_at_rbr2_is_a_single_m() {
        let a = BasedAlgebra::with_ints(Family::RookBrauer, 2, Ring::Integers, 0, 1).unwrap();
        let r = decompose_b(&a, &[1, 2], 1).unwrap();
        assert_eq!(r.summands.len(), 1);
        assert!(r.passes());
    }
}
