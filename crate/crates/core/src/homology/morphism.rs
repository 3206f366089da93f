//! Chain maps between bar complexes induced by algebra morphisms, and the
//! maps they induce on `Tor`.

use std::sync::Arc;

use crate::algebra::AlgebraMorphism;
use crate::error::{Error, Result};
use crate::linalg::sparse::normalize_column;
use crate::linalg::{rank, ChainComplex, HomologyBasis, SparseMatrix, SparseVec};
use crate::module::{BasedModule, ModuleMap};
use crate::ring::{Elem, Ring};

use super::bar::BarComplex;

/// `f^{⊗k} ⊗ g` from the bar complex of `(A, N)` to that of `(B, N')`.
pub struct BarChainMap {
    source: BarComplex,
    target: BarComplex,
    /// `f(I_u) = λ I_v`, or zero.
    ideal_images: Vec<Option<(usize, Elem)>>,
    g: ModuleMap,
}

impl BarChainMap {
    /// `g: N → N'` must satisfy `g(b·x) = f(b)·g(x)`.
    pub fn new(f: &AlgebraMorphism, source: &BasedModule, target: &BasedModule, g: ModuleMap, top: usize) -> Result<Self> {
        if !Arc::ptr_eq(source.algebra(), &f.source) || !Arc::ptr_eq(target.algebra(), &f.target) {
            return Err(Error::Precondition("modules are not over the morphism's algebras".into()));
        }
        if g.source_rank != source.rank() || g.target_rank != target.rank() {
            return Err(Error::Dimension("module map shape".into()));
        }
        f.check()?;
        let ring = source.ring();
        for b in 0..f.source.dim() {
            for x in 0..source.rank() {
                let lhs = g.apply(source.act(b, x), ring);
                let gx = g.matrix.column_vec(x);
                let rhs: SparseVec<Elem> = match &f.images[b] {
                    Some((k, c)) => normalize_column(
                        target.act_on(*k, &gx).into_iter().map(|(r, v)| (r, ring.mul(&v, c))).collect(),
                        |a, b| ring.add(a, b),
                        |a| ring.is_zero(a),
                    ),
                    None => Vec::new(),
                };
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "module map is not compatible with the morphism at {}",
                        f.source.diagram(b)
                    )));
                }
            }
        }
        let source_bar = BarComplex::new(source, top)?;
        let target_bar = BarComplex::new(target, top)?;
        let (si, ti) = (source_bar.ideal(), target_bar.ideal());
        let ideal_images = (0..si.dim())
            .map(|u| match &f.images[si.diagram(u)] {
                Some((k, c)) if !ring.is_zero(c) => ti.position(*k).map(|v| (v, c.clone())),
                _ => None,
            })
            .collect();
        Ok(BarChainMap {
            source: source_bar,
            target: target_bar,
            ideal_images,
            g,
        })
    }

    pub fn source(&self) -> &BarComplex {
        &self.source
    }

    pub fn target(&self) -> &BarComplex {
        &self.target
    }

    fn ring(&self) -> Ring {
        self.source.ring()
    }

    /// Image of the `j`-th degree-`k` basis element.
    pub fn column(&self, k: usize, j: usize) -> SparseVec<Elem> {
        let ring = self.ring();
        let (us, x) = self.source.decode(k, j);
        let mut coeff = ring.one();
        let mut vs = Vec::with_capacity(k);
        for u in us {
            match &self.ideal_images[u] {
                Some((v, c)) => {
                    coeff = ring.mul(&coeff, c);
                    vs.push(*v);
                }
                None => return Vec::new(),
            }
        }
        let out: Vec<(usize, Elem)> = self
            .g
            .matrix
            .column(x)
            .map(|(y, c)| (self.target.encode(&vs, y), ring.mul(&coeff, c)))
            .collect();
        normalize_column(out, |a, b| ring.add(a, b), |a| ring.is_zero(a))
    }

    /// The degree-`k` component as a matrix.
    pub fn matrix(&self, k: usize) -> SparseMatrix<Elem> {
        let cols = crate::par::map_range(self.source.dim(k), |j| self.column(k, j));
        SparseMatrix::from_sorted_columns(self.target.dim(k), cols)
    }

    /// `d ∘ F = F ∘ d` on every degree-`k` column (`k ≥ 1`).
    pub fn check_commutes(&self, k: usize) -> Result<()> {
        let ring = self.ring();
        let ok = crate::par::map_range(self.source.dim(k), |j| {
            let mut lhs = Vec::new();
            for (i, c) in self.column(k, j) {
                for (r, v) in self.target.column(k, i) {
                    lhs.push((r, ring.mul(&c, &v)));
                }
            }
            let mut rhs = Vec::new();
            for (i, c) in self.source.column(k, j) {
                for (r, v) in self.column(k - 1, i) {
                    rhs.push((r, ring.mul(&c, &v)));
                }
            }
            let add = |a: &Elem, b: &Elem| ring.add(a, b);
            let zero = |a: &Elem| ring.is_zero(a);
            normalize_column(lhs, add, zero) == normalize_column(rhs, add, zero)
        });
        if ok.into_iter().all(|b| b) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("chain map does not commute with d_{k}")))
        }
    }

    /// Matrix of the induced map `H_k → H_k` in chosen homology bases
    /// (`dim H_k(target)` rows). Fields only.
    pub fn induced(&self, source: &ChainComplex, target: &ChainComplex, k: usize) -> Result<InducedMap> {
        let src = HomologyBasis::new(source, k as i64)?;
        let mut tgt = HomologyBasis::new(target, k as i64)?;
        let ring = self.ring();
        let mut columns = Vec::with_capacity(src.dim());
        for z in src.representatives() {
            let mut acc = Vec::new();
            for (j, c) in z {
                for (r, v) in self.column(k, *j) {
                    acc.push((r, ring.mul(c, &v)));
                }
            }
            let image = normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a));
            let coords = tgt.coordinates(&image)?;
            columns.push(coords.into_iter().enumerate().filter(|(_, x)| !ring.is_zero(x)).collect());
        }
        Ok(InducedMap {
            ring,
            degree: k,
            matrix: SparseMatrix::from_sorted_columns(tgt.dim(), columns),
            source_basis: src,
            target_basis: tgt,
        })
    }
}

/// An induced map on homology with the bases it is written in.
pub struct InducedMap {
    pub ring: Ring,
    pub degree: usize,
    pub matrix: SparseMatrix<Elem>,
    pub source_basis: HomologyBasis,
    pub target_basis: HomologyBasis,
}

impl InducedMap {
    pub fn is_isomorphism(&self) -> Result<bool> {
        let (r, c) = (self.matrix.rows(), self.matrix.cols());
        Ok(r == c && rank(&self.matrix, self.ring)? == r)
    }
}

/// `g ∘ f` on homology, expressed in `f`'s source basis: pushes `f`'s source
/// representatives through both chain maps and reads coordinates back in the
/// starting complex. Returns whether the composite is the identity.
pub fn composite_is_identity(
    f: &BarChainMap,
    g: &BarChainMap,
    start: &ChainComplex,
    k: usize,
) -> Result<bool> {
    let ring = f.ring();
    let mut basis = HomologyBasis::new(start, k as i64)?;
    let reps: Vec<SparseVec<Elem>> = basis.representatives().to_vec();
    for (i, z) in reps.iter().enumerate() {
        let push = |m: &BarChainMap, v: &SparseVec<Elem>| -> SparseVec<Elem> {
            let mut acc = Vec::new();
            for (j, c) in v {
                for (r, x) in m.column(k, *j) {
                    acc.push((r, ring.mul(c, &x)));
                }
            }
            normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
        };
        let back = push(g, &push(f, z));
        let coords = basis.coordinates(&back)?;
        for (j, x) in coords.iter().enumerate() {
            let want = if i == j { ring.one() } else { ring.zero() };
            if *x != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BasedAlgebra, Family};

    fn setup(ring: Ring) -> (BarChainMap, BarChainMap, ChainComplex, ChainComplex) {
        let rbr = BasedAlgebra::with_ints(Family::RookBrauer, 2, ring, 1, 1).unwrap();
        let sym = BasedAlgebra::with_ints(Family::SymGroupAlgebra, 2, ring, 1, 1).unwrap();
        let iota = AlgebraMorphism::inclusion(sym.clone(), rbr.clone()).unwrap();
        let pi = AlgebraMorphism::projection(rbr.clone(), sym.clone()).unwrap();
        let (ts, tr) = (BasedModule::trivial(&sym), BasedModule::trivial(&rbr));
        let id = ModuleMap::from_columns(1, 1, vec![vec![(0, ring.one())]]).unwrap();
        let i = BarChainMap::new(&iota, &ts, &tr, id.clone(), 4).unwrap();
        let p = BarChainMap::new(&pi, &tr, &ts, id, 4).unwrap();
        let cs = i.source().complex().unwrap();
        let cr = i.target().complex().unwrap();
        (i, p, cs, cr)
    }

    #[test]
    fn iota_and_pi_are_chain_maps() {
        let (i, p, _, _) = setup(Ring::Integers);
        for k in 1..=3 {
            i.check_commutes(k).unwrap();
            p.check_commutes(k).unwrap();
        }
    }

    #[test]
    fn pi_after_iota_is_identity_on_tor() {
        for ring in [Ring::prime_field(2).unwrap(), Ring::prime_field(3).unwrap(), Ring::Rationals] {
            let (i, p, cs, cr) = setup(ring);
            for k in 0..=3 {
                assert!(composite_is_identity(&i, &p, &cs, k).unwrap());
                let m = i.induced(&cs, &cr, k).unwrap();
                assert!(m.is_isomorphism().unwrap(), "ι_* in degree {k} over {ring}");
            }
        }
    }
}
