//! Explicit bases of `H_k` over a field and coordinates of cycles in them.

use super::complex::{kernel_basis, ChainComplex};
use super::domain::{Domain, Engine, Fp, Qq};
use super::elim::Reducer;
use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// Tracking coordinates sit in rows `0..h`; chain coordinates are shifted by `h`.
struct Inner<D: Domain> {
    dom: D,
    reducer: Reducer<D>,
    shift: usize,
    dim: usize,
}

impl<D: Domain> Inner<D> {
    fn new(dom: D, rows: usize, boundaries: &[SparseVec<Elem>], cycles: &[SparseVec<Elem>]) -> (Self, Vec<usize>) {
        let shift = cycles.len();
        let mut reducer = Reducer::new(dom.clone(), rows + shift);
        let conv = |v: &SparseVec<Elem>, tag: Option<usize>| -> SparseVec<D::E> {
            let mut w: SparseVec<D::E> = tag.map(|t| (t, dom.one())).into_iter().collect();
            w.extend(v.iter().map(|(r, x)| (r + shift, dom.from_elem(x))).filter(|(_, x)| !dom.is_zero(x)));
            w.sort_by_key(|e| e.0);
            w
        };
        for b in boundaries {
            reducer.sweep(&conv(b, None), true);
        }
        let mut chosen = Vec::new();
        for (i, z) in cycles.iter().enumerate() {
            let tag = chosen.len();
            let rest = reducer.reduce(&conv(z, Some(tag)));
            if rest.last().is_some_and(|&(r, _)| r >= shift) {
                reducer.sweep(&rest, true);
                chosen.push(i);
            }
        }
        let dim = chosen.len();
        (Inner { dom, reducer, shift, dim }, chosen)
    }

    fn coordinates(&mut self, z: &SparseVec<Elem>) -> Option<Vec<Elem>> {
        let dom = self.dom.clone();
        let mut w: SparseVec<D::E> =
            z.iter().map(|(r, x)| (r + self.shift, dom.from_elem(x))).filter(|(_, x)| !dom.is_zero(x)).collect();
        w.sort_by_key(|e| e.0);
        let rest = self.reducer.reduce(&w);
        if rest.iter().any(|&(r, _)| r >= self.shift) {
            return None;
        }
        let mut out = vec![dom.to_elem(&dom.zero()); self.dim];
        for (r, x) in rest {
            if r < self.dim {
                out[r] = dom.to_elem(&dom.neg(&x));
            }
        }
        Some(out)
    }
}

enum Dispatch {
    Prime(Inner<Fp>),
    Rationals(Inner<Qq>),
}

/// A basis of `H_k(C)` over a field, given by cycle representatives.
pub struct HomologyBasis {
    ring: Ring,
    representatives: Vec<SparseVec<Elem>>,
    inner: Dispatch,
}

impl HomologyBasis {
    pub fn new(c: &ChainComplex, k: i64) -> Result<HomologyBasis> {
        let ring = c.ring();
        let dim = c.dim(k);
        let cycles: Vec<SparseVec<Elem>> = match c.differential(k) {
            Some(d) => kernel_basis(&d.materialize(), ring)?
                .into_iter()
                .map(|v| v.into_iter().enumerate().filter(|(_, x)| !ring.is_zero(x)).collect())
                .collect(),
            None => (0..dim).map(|i| vec![(i, ring.one())]).collect(),
        };
        let boundaries: Vec<SparseVec<Elem>> = match c.differential(k + 1) {
            Some(d) => (0..d.cols()).map(|j| d.column(j)).collect(),
            None => Vec::new(),
        };
        let (inner, chosen) = match Engine::for_ring(ring)? {
            Engine::PrimeField(p) => {
                let (i, ch) = Inner::new(Fp::new(p)?, dim, &boundaries, &cycles);
                (Dispatch::Prime(i), ch)
            }
            Engine::Rationals => {
                let (i, ch) = Inner::new(Qq, dim, &boundaries, &cycles);
                (Dispatch::Rationals(i), ch)
            }
            Engine::Integers => {
                return Err(Error::UnsupportedRing { needed: "a field", ring: ring.to_string() });
            }
        };
        let representatives = chosen.into_iter().map(|i| cycles[i].clone()).collect();
        Ok(HomologyBasis { ring, representatives, inner })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[SparseVec<Elem>] {
        &self.representatives
    }

    /// Coordinates of the class of a cycle. Fails if `z` is not a cycle.
    pub fn coordinates(&mut self, z: &SparseVec<Elem>) -> Result<Vec<Elem>> {
        let r = match &mut self.inner {
            Dispatch::Prime(i) => i.coordinates(z),
            Dispatch::Rationals(i) => i.coordinates(z),
        };
        r.ok_or_else(|| Error::Precondition("vector is not a cycle".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::sparse::SparseMatrix;
    use super::*;

    #[test]
    fn circle_over_f2() {
        // Z^2 ←(1 1; 1 1)− Z^2: H_0 and H_1 one-dimensional over F2.
        let ring = Ring::prime_field(2).unwrap();
        let d = SparseMatrix::from_triplets(
            ring,
            2,
            2,
            [(0, 0, ring.one()), (1, 0, ring.one()), (0, 1, ring.one()), (1, 1, ring.one())],
        )
        .unwrap();
        let c = ChainComplex::from_matrices(ring, 0, vec![2, 2], vec![d]).unwrap();
        let mut h1 = HomologyBasis::new(&c, 1).unwrap();
        assert_eq!(h1.dim(), 1);
        let z = vec![(0, ring.one()), (1, ring.one())];
        assert_eq!(h1.coordinates(&z).unwrap(), vec![ring.one()]);
        assert!(h1.coordinates(&vec![(0, ring.one())]).is_err());
        let mut h0 = HomologyBasis::new(&c, 0).unwrap();
        assert_eq!(h0.dim(), 1);
        let a = h0.coordinates(&vec![(0, ring.one())]).unwrap();
        let b = h0.coordinates(&vec![(1, ring.one())]).unwrap();
        assert_eq!(a, b);
        assert!(h0.coordinates(&z).unwrap().iter().all(|x| ring.is_zero(x)));
    }

    #[test]
    fn coordinates_over_q_have_the_right_sign() {
        let ring = Ring::Rationals;
        let d = SparseMatrix::from_triplets(ring, 1, 2, [(0, 0, ring.one()), (0, 1, ring.one())]).unwrap();
        let c = ChainComplex::from_matrices(ring, 0, vec![1, 2], vec![d]).unwrap();
        let mut h1 = HomologyBasis::new(&c, 1).unwrap();
        let rep = h1.representatives()[0].clone();
        let three: SparseVec<Elem> = rep.iter().map(|(r, x)| (*r, ring.mul(x, &ring.from_i64(3)))).collect();
        assert_eq!(h1.coordinates(&three).unwrap(), vec![ring.from_i64(3)]);
        let minus: SparseVec<Elem> = rep.iter().map(|(r, x)| (*r, ring.neg(x))).collect();
        assert_eq!(h1.coordinates(&minus).unwrap(), vec![ring.from_i64(-1)]);
    }
}
