//! The induced module `A_n ⊗_{A_m} t` with its box-diagram basis, and a
//! brute-force presentation used as an oracle.
//!
//! The subalgebra `A_m` acts on the strands `n−m+1 ..= n`. A diagram `g`
//! represents a box basis element when every one of those right nodes is
//! joined to a node outside them; the box remembers only the set of those
//! partners, since permuting the acting strands does not change the class.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{BasedAlgebra, Family};
use crate::diagram::{parse_blocks, Diagram};
use crate::error::{Error, Result};
use crate::linalg::{RingCokernel, SparseVec};
use crate::module::BasedModule;
use crate::ring::{Elem, Params, Ring};
use crate::submodule::set_string;

/// A box diagram: blocks on the left nodes and the right nodes `1..=n−m`,
/// plus the set of nodes joined to the box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxDiagram {
    n: usize,
    m: usize,
    blocks: Vec<Vec<i64>>,
    boxed: Vec<i64>,
}

impl BoxDiagram {
    /// The box form of `g` for the acting strands `n−m+1..=n`, or `None` when
    /// an acting node is a singleton or joined to another acting node.
    pub fn of(g: &Diagram, m: usize) -> Option<BoxDiagram> {
        let n = g.n();
        if m > n {
            return None;
        }
        let first = (n - m + 1) as i64;
        let mut boxed = Vec::with_capacity(m);
        for a in first..=n as i64 {
            match g.partner(a) {
                Some(p) if p < first => boxed.push(p),
                _ => return None,
            }
        }
        boxed.sort_unstable();
        let blocks = g
            .blocks()
            .into_iter()
            .filter(|b| b.iter().all(|&l| l < first && !boxed.contains(&l)))
            .collect();
        Some(BoxDiagram { n, m, blocks, boxed })
    }

    /// The representative joining the boxed nodes, in increasing order, to
    /// the acting strands in order.
    pub fn representative(&self) -> Diagram {
        let first = (self.n - self.m + 1) as i64;
        let mut blocks = self.blocks.clone();
        for (i, &p) in self.boxed.iter().enumerate() {
            blocks.push(vec![p, first + i as i64]);
        }
        Diagram::new(self.n, &blocks).expect("box diagrams are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn boxed(&self) -> &[i64] {
        &self.boxed
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }
}

impl fmt::Display for BoxDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let parts: Vec<String> = b.iter().map(i64::to_string).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        let boxed: Vec<String> = self.boxed.iter().map(i64::to_string).collect();
        write!(f, "{};{}; {} | box:{{{}}}", self.n, self.m, blocks.join(","), boxed.join(","))
    }
}

impl FromStr for BoxDiagram {
    type Err = Error;

    /// Parses `n;m; blocks | box:{i,j,k}`.
    fn from_str(s: &str) -> Result<BoxDiagram> {
        let bad = || Error::Parse(format!("not a box diagram: {s:?}"));
        let (head, boxed) = s.split_once('|').ok_or_else(bad)?;
        let mut parts = head.splitn(3, ';');
        let n: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let m: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let blocks = parse_blocks(parts.next().ok_or_else(bad)?)?;
        let inner = boxed
            .trim()
            .strip_prefix("box:")
            .ok_or_else(bad)?
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut boxed: Vec<i64> = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        boxed.sort_unstable();
        if m > n || boxed.len() != m {
            return Err(Error::Parse(format!("the box must be joined to exactly {m} nodes")));
        }
        let first = (n - m + 1) as i64;
        if blocks.iter().flatten().chain(&boxed).any(|&l| l >= first) {
            return Err(Error::Parse(format!("right nodes {first}..={n} belong to the box")));
        }
        let b = BoxDiagram { n, m, blocks, boxed };
        let rep = b.representative_checked()?;
        BoxDiagram::of(&rep, m).ok_or_else(bad)
    }
}

impl BoxDiagram {
    fn representative_checked(&self) -> Result<Diagram> {
        let first = (self.n - self.m + 1) as i64;
        let mut blocks = self.blocks.clone();
        for (i, &p) in self.boxed.iter().enumerate() {
            blocks.push(vec![p, first + i as i64]);
        }
        Diagram::new(self.n, &blocks)
    }
}

fn check_family(family: Family) -> Result<()> {
    match family {
        Family::Motzkin => Err(Error::Precondition(
            "induced modules are built for rook-brauer and sym-group-algebra".into(),
        )),
        _ => Ok(()),
    }
}

/// `A_n ⊗_{A_m} t` over the given algebra, with the box basis.
pub fn induced_module(algebra: &Arc<BasedAlgebra>, m: usize) -> Result<(BasedModule, Vec<BoxDiagram>)> {
    check_family(algebra.family())?;
    let n = algebra.n();
    if m > n {
        return Err(Error::IndexOutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    let ring = algebra.ring();
    let mut boxes: Vec<BoxDiagram> = Vec::new();
    let mut index: HashMap<BoxDiagram, usize> = HashMap::new();
    for g in algebra.basis() {
        if let Some(b) = BoxDiagram::of(g, m) {
            if !index.contains_key(&b) {
                index.insert(b.clone(), boxes.len());
                boxes.push(b);
            }
        }
    }
    let reps: Vec<usize> = boxes
        .iter()
        .map(|b| algebra.index_of(&b.representative()).expect("representative in basis"))
        .collect();
    let action = crate::par::map_range(algebra.dim(), |a| {
        reps.iter()
            .map(|&g| {
                let (k, c) = algebra.product(a, g);
                if ring.is_zero(&c) {
                    return Vec::new();
                }
                match BoxDiagram::of(algebra.diagram(k), m) {
                    None => Vec::new(),
                    Some(b) => vec![(index[&b], c)],
                }
            })
            .collect()
    });
    let labels = boxes.iter().map(BoxDiagram::to_string).collect();
    let name = format!("{}_{n} ⊗ {}_{m} t", short(algebra.family()), short(algebra.family()));
    let module = BasedModule::from_action(algebra.clone(), name, labels, action)?;
    Ok((module, boxes))
}

fn short(f: Family) -> &'static str {
    match f {
        Family::RookBrauer => "RBr",
        Family::Motzkin => "M",
        Family::SymGroupAlgebra => "RS",
    }
}

/// Result of comparing the box module with the brute-force presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedComparison {
    pub box_rank: usize,
    pub oracle_free_rank: usize,
    pub oracle_torsion: Vec<String>,
    /// `g ↦ box(g)` kills every relation.
    pub well_defined: bool,
    /// `g ↦ box(g)` commutes with the left action.
    pub equivariant: bool,
}

impl InducedComparison {
    pub fn isomorphic(&self) -> bool {
        self.well_defined
            && self.equivariant
            && self.oracle_torsion.is_empty()
            && self.box_rank == self.oracle_free_rank
    }
}

/// Free module on all diagrams of `A_n` modulo `g·h − ε̄(h)·g` for every
/// basis element `h` of `A_m`.
pub fn induced_module_oracle(algebra: &Arc<BasedAlgebra>, m: usize) -> Result<RingCokernel> {
    let ring = algebra.ring();
    let sub = algebra.subalgebra_indices(m)?;
    let mut rels: Vec<SparseVec<Elem>> = Vec::new();
    for g in 0..algebra.dim() {
        for &h in &sub {
            let (k, c) = algebra.product(g, h);
            let mut v = vec![(k, c)];
            if algebra.is_permutation(h) {
                v.push((g, ring.neg(&ring.one())));
            }
            let v = crate::linalg::sparse::normalize_column(v, |a, b| ring.add(a, b), |a| ring.is_zero(a));
            if !v.is_empty() {
                rels.push(v);
            }
        }
    }
    RingCokernel::new(ring, algebra.dim(), &rels)
}

/// Builds both sides and compares them through `g ↦ box(g)`.
pub fn compare_induced(algebra: &Arc<BasedAlgebra>, m: usize) -> Result<InducedComparison> {
    let ring = algebra.ring();
    let (module, boxes) = induced_module(algebra, m)?;
    let oracle = induced_module_oracle(algebra, m)?;
    let index: HashMap<&BoxDiagram, usize> = boxes.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let phi = |g: usize| -> Option<usize> { BoxDiagram::of(algebra.diagram(g), m).map(|b| index[&b]) };
    let sub = algebra.subalgebra_indices(m)?;
    let mut well_defined = true;
    'outer: for g in 0..algebra.dim() {
        for &h in &sub {
            let (k, c) = algebra.product(g, h);
            let mut acc: Vec<(usize, Elem)> = Vec::new();
            if let Some(i) = phi(k) {
                acc.push((i, c));
            }
            if algebra.is_permutation(h) {
                if let Some(i) = phi(g) {
                    acc.push((i, ring.neg(&ring.one())));
                }
            }
            let v = crate::linalg::sparse::normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a));
            if !v.is_empty() {
                well_defined = false;
                break 'outer;
            }
        }
    }
    let equivariant = crate::par::map_range(algebra.dim(), |a| {
        (0..algebra.dim()).all(|g| {
            let (k, c) = algebra.product(a, g);
            let lhs: SparseVec<Elem> = match phi(k) {
                Some(i) if !ring.is_zero(&c) => vec![(i, c)],
                _ => Vec::new(),
            };
            let rhs = match phi(g) {
                Some(i) => module.act(a, i).clone(),
                None => Vec::new(),
            };
            lhs == rhs
        })
    })
    .into_iter()
    .all(|b| b);
    Ok(InducedComparison {
        box_rank: module.rank(),
        oracle_free_rank: oracle.free_rank(),
        oracle_torsion: oracle.torsion().iter().map(|t| t.to_string()).collect(),
        well_defined,
        equivariant,
    })
}

/// Convenience constructor from raw parameters.
pub fn induced_module_for(
    family: Family,
    n: usize,
    m: usize,
    ring: Ring,
    params: Params,
) -> Result<(BasedModule, Vec<BoxDiagram>)> {
    let alg = BasedAlgebra::new(family, n, ring, params)?;
    induced_module(&alg, m)
}

/// The orbits of the right `S_m` action on the basis of `A_n / J_m`, as
/// lists of module coordinates. Fails if some orbit is not free.
pub fn free_orbits_of_quotient_by_jm(algebra: &Arc<BasedAlgebra>, m: usize) -> Result<Vec<Vec<usize>>> {
    let n = algebra.n();
    let quotient = BasedModule::quotient_by_j(algebra, &(n - m.min(n) + 1..=n).collect::<Vec<_>>())?;
    let perms: Vec<usize> = crate::diagram::enumerate_permutations(m)
        .iter()
        .map(|p| algebra.index_of(&p.embed(n, n - m).expect("m ≤ n")).expect("permutation in basis"))
        .collect();
    let factorial: usize = (1..=m).product();
    let mut seen = vec![false; quotient.rank()];
    let mut orbits = Vec::new();
    for start in 0..quotient.rank() {
        if seen[start] {
            continue;
        }
        let g = quotient.basis_diagrams()[start];
        let mut orbit = Vec::with_capacity(perms.len());
        for &s in &perms {
            let (k, c) = algebra.product(g, s);
            let pos = quotient.position_of(k).filter(|_| algebra.ring().is_one(&c)).ok_or_else(|| {
                Error::Precondition(format!("{} · σ leaves the basis of A/J_{m}", algebra.diagram(g)))
            })?;
            orbit.push(pos);
        }
        orbit.sort_unstable();
        orbit.dedup();
        if orbit.len() != factorial {
            return Err(Error::Precondition(format!(
                "S_{m} orbit of {} has size {} instead of {factorial}",
                algebra.diagram(g),
                orbit.len()
            )));
        }
        for &o in &orbit {
            if seen[o] {
                return Err(Error::Precondition("orbits overlap".into()));
            }
            seen[o] = true;
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Checks `A_n/J_m ⊗_{RS_m} t ≅ A_n ⊗_{A_m} t`: the coinvariants of the right
/// `S_m` action are free on the orbits, and `orbit ↦ box` is a bijection
/// commuting with the left action.
pub fn check_quotient_tensor_iso(algebra: &Arc<BasedAlgebra>, m: usize) -> Result<()> {
    let n = algebra.n();
    let ring = algebra.ring();
    let quotient = BasedModule::quotient_by_j(algebra, &(n - m.min(n) + 1..=n).collect::<Vec<_>>())?;
    let orbits = free_orbits_of_quotient_by_jm(algebra, m)?;
    let (module, boxes) = induced_module(algebra, m)?;
    if orbits.len() != boxes.len() {
        return Err(Error::Precondition(format!(
            "{} orbits but {} box diagrams",
            orbits.len(),
            boxes.len()
        )));
    }
    let index: HashMap<&BoxDiagram, usize> = boxes.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut orbit_box = vec![usize::MAX; quotient.rank()];
    let mut hit = vec![false; boxes.len()];
    for orbit in &orbits {
        let mut target = None;
        for &x in orbit {
            let d = algebra.diagram(quotient.basis_diagrams()[x]);
            let b = BoxDiagram::of(d, m).ok_or_else(|| Error::Precondition(format!("{d} has no box form")))?;
            let i = index[&b];
            if target.replace(i).is_some_and(|t| t != i) {
                return Err(Error::Precondition("an orbit meets two boxes".into()));
            }
            orbit_box[x] = i;
        }
        let t = target.expect("orbits are nonempty");
        if std::mem::replace(&mut hit[t], true) {
            return Err(Error::Precondition("two orbits share a box".into()));
        }
    }
    for a in 0..algebra.dim() {
        for x in 0..quotient.rank() {
            let lhs: SparseVec<Elem> = quotient.act(a, x).iter().map(|(r, c)| (orbit_box[*r], c.clone())).collect();
            let lhs = crate::linalg::sparse::normalize_column(lhs, |u, v| ring.add(u, v), |u| ring.is_zero(u));
            if &lhs != module.act(a, orbit_box[x]) {
                return Err(Error::Precondition(format!(
                    "orbit-to-box map fails to commute with {}",
                    algebra.diagram(a)
                )));
            }
        }
    }
    Ok(())
}

/// `{…}` rendering of the boxed set.
pub fn boxed_string(b: &BoxDiagram) -> String {
    let v: Vec<usize> = b.boxed.iter().map(|&l| l.unsigned_abs() as usize).collect();
    set_string(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rbr(n: usize, ring: Ring) -> Arc<BasedAlgebra> {
        BasedAlgebra::with_ints(Family::RookBrauer, n, ring, 2, 1).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let g: Diagram = "3; {-3,2},{-2},{-1,3},{1}".parse().unwrap();
        let b = BoxDiagram::of(&g, 2).unwrap();
        assert_eq!(b.to_string(), "3;2; {-2},{1} | box:{-3,-1}");
        assert_eq!(b.to_string().parse::<BoxDiagram>().unwrap(), b);
        assert!("3;2; {-2},{1} | box:{-3}".parse::<BoxDiagram>().is_err());
        assert!("3;2; {-2},{3} | box:{-3,-1}".parse::<BoxDiagram>().is_err());
    }

    #[test]
    fn extreme_ranks() {
        for n in 0..=3 {
            let a = rbr(n, Ring::Integers);
            assert_eq!(induced_module(&a, n).unwrap().0.rank(), 1);
            assert_eq!(induced_module(&a, 0).unwrap().0.rank(), a.dim());
        }
    }

    #[test]
    fn oracle_agrees() {
        for n in 0..=2 {
            for m in 0..=n {
                let a = rbr(n, Ring::Integers);
                let c = compare_induced(&a, m).unwrap();
                assert!(c.isomorphic(), "n={n} m={m}: {c:?}");
            }
        }
    }

    #[test]
    fn box_basis_does_not_need_a_unit_epsilon() {
        for (d, e) in [(0, 2), (2, 0), (0, 0)] {
            for n in 1..=3 {
                for m in 1..=n {
                    let a = BasedAlgebra::with_ints(Family::RookBrauer, n, Ring::Integers, d, e).unwrap();
                    let c = compare_induced(&a, m).unwrap();
                    assert!(c.isomorphic(), "δ={d} ε={e} n={n} m={m}: {c:?}");
                }
            }
        }
    }

    #[test]
    fn orbits_are_free() {
        for n in 1..=3 {
            for m in 0..=n {
                let a = rbr(n, Ring::Integers);
                let orbits = free_orbits_of_quotient_by_jm(&a, m).unwrap();
                check_quotient_tensor_iso(&a, m).unwrap();
                assert_eq!(orbits.len(), induced_module(&a, m).unwrap().0.rank());
            }
        }
    }
}
