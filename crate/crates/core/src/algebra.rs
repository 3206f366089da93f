//! Diagram algebras as based algebras with structure constants.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagram::{enumerate_motzkin, enumerate_permutations, enumerate_rook_brauer, Diagram};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::ring::{Elem, Params, Ring};

/// Which diagrams span the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    RookBrauer,
    Motzkin,
    SymGroupAlgebra,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::RookBrauer => "rook-brauer",
            Family::Motzkin => "motzkin",
            Family::SymGroupAlgebra => "sym-group-algebra",
        }
    }

    pub fn enumerate(&self, n: usize) -> Vec<Diagram> {
        match self {
            Family::RookBrauer => enumerate_rook_brauer(n),
            Family::Motzkin => enumerate_motzkin(n),
            Family::SymGroupAlgebra => enumerate_permutations(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "rook-brauer" | "rbr" => Ok(Family::RookBrauer),
            "motzkin" => Ok(Family::Motzkin),
            "sym-group-algebra" | "sym" => Ok(Family::SymGroupAlgebra),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?} (expected rook-brauer, motzkin or sym-group-algebra)"
            ))),
        }
    }
}

/// One structure constant: `b_i b_j = δ^r ε^s b_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Product {
    pub index: u32,
    pub r: u8,
    pub s: u8,
}

/// Above this dimension products are computed on demand instead of tabulated.
const TABLE_LIMIT: usize = 1000;

/// A diagram algebra over a ring with its diagram basis.
pub struct BasedAlgebra {
    family: Family,
    n: usize,
    ring: Ring,
    params: Params,
    basis: Vec<Diagram>,
    index: HashMap<Diagram, u32>,
    table: Option<Vec<Product>>,
    /// `scalars[r][s] = δ^r ε^s`.
    scalars: Vec<Vec<Elem>>,
    identity: usize,
    permutation: Vec<bool>,
}

impl fmt::Debug for BasedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasedAlgebra({} n={} over {}, dim {})", self.family, self.n, self.ring, self.dim())
    }
}

impl BasedAlgebra {
    pub fn new(family: Family, n: usize, ring: Ring, params: Params) -> Result<Arc<BasedAlgebra>> {
        let params = Params {
            delta: ring.coerce(&params.delta)?,
            epsilon: ring.coerce(&params.epsilon)?,
        };
        let basis = family.enumerate(n);
        let index: HashMap<Diagram, u32> =
            basis.iter().enumerate().map(|(i, d)| (d.clone(), i as u32)).collect();
        let identity = index[&Diagram::identity(n)] as usize;
        let permutation = basis.iter().map(Diagram::is_permutation).collect();
        let scalars = (0..=2 * n as u32 + 1)
            .map(|r| (0..=2 * n as u32 + 1).map(|s| params.scalar(ring, r, s)).collect())
            .collect();
        let mut alg = BasedAlgebra {
            family,
            n,
            ring,
            params,
            basis,
            index,
            table: None,
            scalars,
            identity,
            permutation,
        };
        let d = alg.dim();
        if d <= TABLE_LIMIT {
            let rows = crate::par::map_range(d, |i| (0..d).map(|j| alg.compute_product(i, j)).collect::<Vec<_>>());
            alg.table = Some(rows.into_iter().flatten().collect());
        }
        Ok(Arc::new(alg))
    }

    /// Shorthand with integer parameters.
    pub fn with_ints(family: Family, n: usize, ring: Ring, delta: i64, epsilon: i64) -> Result<Arc<BasedAlgebra>> {
        Self::new(family, n, ring, Params::new(ring, delta, epsilon))
    }

    fn compute_product(&self, i: usize, j: usize) -> Product {
        let p = self.basis[i].multiply_unchecked(&self.basis[j]);
        let index = *self
            .index
            .get(&p.gamma)
            .unwrap_or_else(|| panic!("{} family not closed under products", self.family));
        Product { index, r: p.r as u8, s: p.s as u8 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Diagram] {
        &self.basis
    }

    pub fn diagram(&self, i: usize) -> &Diagram {
        &self.basis[i]
    }

    pub fn index_of(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).map(|&i| i as usize)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_permutation(&self, i: usize) -> bool {
        self.permutation[i]
    }

    /// `ε̄(b_i)`: one on permutation diagrams, zero elsewhere.
    pub fn augmentation(&self, i: usize) -> Elem {
        if self.permutation[i] {
            self.ring.one()
        } else {
            self.ring.zero()
        }
    }

    pub fn structure(&self, i: usize, j: usize) -> Product {
        match &self.table {
            Some(t) => t[i * self.dim() + j],
            None => self.compute_product(i, j),
        }
    }

    pub fn scalar(&self, r: u8, s: u8) -> &Elem {
        &self.scalars[r as usize][s as usize]
    }

    /// `b_i b_j` as `(k, coefficient)`; the coefficient may be zero.
    pub fn product(&self, i: usize, j: usize) -> (usize, Elem) {
        let p = self.structure(i, j);
        (p.index as usize, self.scalar(p.r, p.s).clone())
    }

    /// Product of two algebra elements given in the diagram basis.
    pub fn multiply(&self, a: &[(usize, Elem)], b: &[(usize, Elem)]) -> SparseVec<Elem> {
        let ring = self.ring;
        let mut acc = Vec::with_capacity(a.len() * b.len());
        for (i, x) in a {
            for (j, y) in b {
                let (k, c) = self.product(*i, *j);
                acc.push((k, ring.mul(&ring.mul(x, y), &c)));
            }
        }
        crate::linalg::sparse::normalize_column(acc, |u, v| ring.add(u, v), |u| ring.is_zero(u))
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on the given triples.
    pub fn check_associativity_on(&self, triples: &[(usize, usize, usize)]) -> Result<()> {
        let bad = crate::par::map(triples, |&(i, j, k)| {
            let one = |x: usize| vec![(x, self.ring.one())];
            let left = self.multiply(&self.multiply(&one(i), &one(j)), &one(k));
            let right = self.multiply(&one(i), &self.multiply(&one(j), &one(k)));
            (left != right).then_some((i, j, k))
        });
        match bad.into_iter().flatten().next() {
            None => Ok(()),
            Some((i, j, k)) => Err(Error::Precondition(format!(
                "associativity fails on ({}, {}, {})",
                self.basis[i], self.basis[j], self.basis[k]
            ))),
        }
    }

    /// Associativity on every basis triple.
    pub fn check_associativity(&self) -> Result<()> {
        let d = self.dim();
        let triples: Vec<_> = (0..d)
            .flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k))))
            .collect();
        self.check_associativity_on(&triples)
    }

    /// `ε̄(b_i b_j) = ε̄(b_i) ε̄(b_j)` on all pairs, and the identity is neutral.
    pub fn check_augmentation(&self) -> Result<()> {
        let ring = self.ring;
        for i in 0..self.dim() {
            if self.product(self.identity, i) != (i, ring.one()) || self.product(i, self.identity) != (i, ring.one()) {
                return Err(Error::Precondition(format!("identity is not neutral on {}", self.basis[i])));
            }
            for j in 0..self.dim() {
                let (k, c) = self.product(i, j);
                let lhs = ring.mul(&c, &self.augmentation(k));
                let rhs = ring.mul(&self.augmentation(i), &self.augmentation(j));
                if lhs != rhs {
                    return Err(Error::NotMultiplicative(format!(
                        "augmentation on ({}, {})",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Indices of the diagrams of the `m`-strand algebra of the same family,
    /// placed on strands `n−m+1 ..= n` with through-lines elsewhere.
    pub fn subalgebra_indices(&self, m: usize) -> Result<Vec<usize>> {
        if m > self.n {
            return Err(Error::IndexOutOfRange(format!("m = {m} exceeds n = {}", self.n)));
        }
        self.family
            .enumerate(m)
            .iter()
            .map(|d| {
                let e = d.embed(self.n, self.n - m)?;
                self.index_of(&e)
                    .ok_or_else(|| Error::Precondition(format!("{e} is not a basis diagram")))
            })
            .collect()
    }
}

/// Builds an algebra (the `build_algebra` entry point).
pub fn build_algebra(family: Family, n: usize, ring: Ring, params: Params) -> Result<Arc<BasedAlgebra>> {
    BasedAlgebra::new(family, n, ring, params)
}

/// An algebra map sending each basis diagram to a multiple of a basis diagram
/// (or to zero).
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub source: Arc<BasedAlgebra>,
    pub target: Arc<BasedAlgebra>,
    pub images: Vec<Option<(usize, Elem)>>,
}

impl AlgebraMorphism {
    /// Validates multiplicativity and compatibility with augmentations.
    pub fn new(source: Arc<BasedAlgebra>, target: Arc<BasedAlgebra>, images: Vec<Option<(usize, Elem)>>) -> Result<Self> {
        let f = AlgebraMorphism { source, target, images };
        f.check()?;
        Ok(f)
    }

    /// `ι: RS_n → A`, the inclusion of permutation diagrams.
    pub fn inclusion(sym: Arc<BasedAlgebra>, target: Arc<BasedAlgebra>) -> Result<Self> {
        if sym.family() != Family::SymGroupAlgebra || sym.n() != target.n() || sym.ring() != target.ring() {
            return Err(Error::Precondition("inclusion needs RS_n and an n-strand algebra over the same ring".into()));
        }
        let ring = sym.ring();
        let images = sym
            .basis()
            .iter()
            .map(|d| target.index_of(d).map(|k| (k, ring.one())))
            .collect::<Vec<_>>();
        if images.iter().any(Option::is_none) {
            return Err(Error::Precondition(format!("{} does not contain S_{}", target.family(), sym.n())));
        }
        Self::new(sym, target, images)
    }

    /// `π: A → RS_n`, identity on permutations and zero elsewhere.
    pub fn projection(source: Arc<BasedAlgebra>, sym: Arc<BasedAlgebra>) -> Result<Self> {
        if sym.family() != Family::SymGroupAlgebra || sym.n() != source.n() || sym.ring() != source.ring() {
            return Err(Error::Precondition("projection needs an n-strand algebra and RS_n over the same ring".into()));
        }
        let ring = sym.ring();
        let images = source
            .basis()
            .iter()
            .map(|d| if d.is_permutation() { sym.index_of(d).map(|k| (k, ring.one())) } else { None })
            .collect();
        Self::new(source, sym, images)
    }

    fn image(&self, i: usize) -> SparseVec<Elem> {
        match &self.images[i] {
            Some((k, c)) if !self.target.ring().is_zero(c) => vec![(*k, c.clone())],
            _ => Vec::new(),
        }
    }

    /// `f(b_i b_j) = f(b_i) f(b_j)` for all basis pairs.
    pub fn check_multiplicative(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let ring = t.ring();
        let d = s.dim();
        let bad = crate::par::map_range(d, |i| {
            (0..d).find(|&j| {
                let (k, c) = s.product(i, j);
                let lhs: SparseVec<Elem> = self
                    .image(k)
                    .into_iter()
                    .map(|(x, v)| (x, ring.mul(&v, &c)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect();
                lhs != t.multiply(&self.image(i), &self.image(j))
            })
            .map(|j| (i, j))
        });
        match bad.into_iter().flatten().next() {
            None => Ok(()),
            Some((i, j)) => Err(Error::NotMultiplicative(format!("on ({}, {})", s.diagram(i), s.diagram(j)))),
        }
    }

    /// `ε̄_target ∘ f = ε̄_source` and `f(1) = 1`.
    pub fn check_augmentation(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let ring = t.ring();
        for i in 0..s.dim() {
            let img = self.image(i);
            let aug = img
                .iter()
                .fold(ring.zero(), |acc, (k, c)| ring.add(&acc, &ring.mul(c, &t.augmentation(*k))));
            if aug != s.augmentation(i) {
                return Err(Error::NotMultiplicative(format!("augmentation not preserved at {}", s.diagram(i))));
            }
        }
        if self.image(s.identity()) != vec![(t.identity(), ring.one())] {
            return Err(Error::NotMultiplicative("identity not preserved".into()));
        }
        Ok(())
    }

    pub fn check(&self) -> Result<()> {
        if self.images.len() != self.source.dim() {
            return Err(Error::Dimension("one image per source basis element".into()));
        }
        self.check_multiplicative()?;
        self.check_augmentation()
    }

    /// `g ∘ f`.
    pub fn then(&self, g: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        let ring = self.target.ring();
        let images = (0..self.source.dim())
            .map(|i| match &self.images[i] {
                Some((k, c)) => g.images[*k].as_ref().map(|(k2, c2)| (*k2, ring.mul(c, c2))),
                None => None,
            })
            .collect();
        AlgebraMorphism::new(self.source.clone(), g.target.clone(), images)
    }

    /// Same basis on both sides and every basis element fixed.
    pub fn is_identity(&self) -> bool {
        let ring = self.target.ring();
        self.source.basis() == self.target.basis()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, im)| matches!(im, Some((k, c)) if *k == i && ring.is_one(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let z = Ring::Integers;
        assert_eq!(BasedAlgebra::with_ints(Family::RookBrauer, 2, z, 0, 1).unwrap().dim(), 10);
        let q = Ring::Rationals;
        assert_eq!(BasedAlgebra::with_ints(Family::Motzkin, 2, q, 7, 1).unwrap().dim(), 9);
        assert_eq!(BasedAlgebra::with_ints(Family::SymGroupAlgebra, 3, z, 0, 1).unwrap().dim(), 6);
    }

    #[test]
    fn associative_and_augmented_small() {
        for fam in [Family::RookBrauer, Family::Motzkin, Family::SymGroupAlgebra] {
            for n in 0..=2 {
                let a = BasedAlgebra::with_ints(fam, n, Ring::Integers, 2, -1).unwrap();
                a.check_associativity().unwrap();
                a.check_augmentation().unwrap();
            }
        }
    }

    #[test]
    fn generator_relations() {
        use crate::diagram::{generator_t, generator_v};
        let a = BasedAlgebra::with_ints(Family::RookBrauer, 2, Ring::Integers, 3, 5).unwrap();
        let t1 = a.index_of(&generator_t(2, 1).unwrap()).unwrap();
        assert_eq!(a.product(t1, t1), (t1, Elem::int(5)));
        let v = a.index_of(&generator_v(2, 1, 2).unwrap()).unwrap();
        assert_eq!(a.product(v, v), (v, Elem::int(3)));
    }

    #[test]
    fn inclusion_and_projection() {
        let z = Ring::Integers;
        let rbr = BasedAlgebra::with_ints(Family::RookBrauer, 2, z, 0, 1).unwrap();
        let sym = BasedAlgebra::with_ints(Family::SymGroupAlgebra, 2, z, 0, 1).unwrap();
        let iota = AlgebraMorphism::inclusion(sym.clone(), rbr.clone()).unwrap();
        let pi = AlgebraMorphism::projection(rbr.clone(), sym.clone()).unwrap();
        let comp = iota.then(&pi).unwrap();
        for (i, img) in comp.images.iter().enumerate() {
            assert_eq!(img, &Some((i, z.one())));
        }
        // A map sending T_1 to the identity is not multiplicative.
        let mut bad = pi.images.clone();
        let t1 = rbr.index_of(&crate::diagram::generator_t(2, 1).unwrap()).unwrap();
        bad[t1] = Some((sym.identity(), z.one()));
        assert!(AlgebraMorphism::new(rbr, sym, bad).is_err());
    }

    #[test]
    fn subalgebra_embedding() {
        let a = BasedAlgebra::with_ints(Family::RookBrauer, 3, Ring::Integers, 1, 1).unwrap();
        let sub = a.subalgebra_indices(1).unwrap();
        assert_eq!(sub.len(), 2);
        let t3 = crate::diagram::generator_t(3, 3).unwrap();
        assert!(sub.contains(&a.index_of(&t3).unwrap()));
        assert_eq!(a.subalgebra_indices(0).unwrap(), vec![a.identity()]);
    }
}
