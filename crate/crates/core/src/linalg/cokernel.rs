//! Quotients `R^rows / span(relations)` with explicit coordinates.

use super::dense::{normalize_diagonal, smith, SmithForm};
use super::domain::{Domain, Engine, Fp, Qq, Zz};
use super::elim::{residual_dense, Elimination};
use super::sparse::SparseVec;
use crate::error::Result;
use crate::ring::{Elem, Integer, Ring};

/// A cokernel with a chosen decomposition into a free part and cyclic torsion
/// summands. Free coordinates are exact; torsion coordinates are residues.
pub struct Cokernel<D: Domain> {
    elim: Elimination<D>,
    /// Rows without a pivot, ascending. Their unit vectors span the quotient.
    free_rows: Vec<usize>,
    /// Dense stage over `free_rows` coordinates, only over `Z` with residuals.
    smith: Option<SmithForm>,
}

impl<D: Domain> Cokernel<D> {
    pub fn new(dom: D, rows: usize, relations: Vec<SparseVec<D::E>>) -> Self {
        let elim = Elimination::from_columns(dom.clone(), rows, relations);
        let free_rows: Vec<usize> = (0..rows).filter(|&r| !elim.reducer.is_pivot_row(r)).collect();
        let smith = if elim.residual.is_empty() {
            None
        } else {
            let m = residual_dense(&elim, &free_rows, |x| {
                dom.to_integer(x).expect("residuals only occur over Z")
            });
            Some(smith(m, true, false))
        };
        Cokernel {
            elim,
            free_rows,
            smith,
        }
    }

    pub fn domain(&self) -> &D {
        self.elim.reducer.domain()
    }

    pub fn ambient_rank(&self) -> usize {
        self.elim.reducer.rows()
    }

    /// Rank of the relation span.
    pub fn relation_rank(&self) -> usize {
        self.elim.reducer.rank() + self.smith.as_ref().map_or(0, SmithForm::rank)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rows.len() - self.smith.as_ref().map_or(0, SmithForm::rank)
    }

    /// Nontrivial invariant factors of the torsion part.
    pub fn torsion(&self) -> Vec<Integer> {
        match &self.smith {
            None => Vec::new(),
            Some(s) => normalize_diagonal(&s.diagonal)
                .into_iter()
                .filter(|d| !d.is_unit())
                .collect(),
        }
    }

    pub fn is_free(&self) -> bool {
        self.torsion().is_empty()
    }

    fn smith_offset(&self) -> usize {
        self.smith.as_ref().map_or(0, SmithForm::rank)
    }

    /// Free coordinates of the class of `v`.
    pub fn project(&mut self, v: &[(usize, D::E)]) -> Vec<D::E> {
        let dom = self.elim.reducer.domain().clone();
        let reduced = self.elim.reducer.reduce(v);
        let k = self.free_rank();
        let mut out = vec![dom.zero(); k];
        match &self.smith {
            None => {
                for (r, x) in reduced {
                    let i = self.free_rows.binary_search(&r).expect("reduced row");
                    out[i] = x;
                }
            }
            Some(s) => {
                let mut y = vec![Integer::ZERO; self.free_rows.len()];
                for (r, x) in &reduced {
                    let i = self.free_rows.binary_search(r).expect("reduced row");
                    y[i] = dom.to_integer(x).expect("integer entry");
                }
                let z = s.u.as_ref().expect("u tracked").mul_vec(&y);
                let off = self.smith_offset();
                for (i, zi) in z.into_iter().skip(off).enumerate() {
                    out[i] = dom.from_integer(&zi);
                }
            }
        }
        out
    }

    /// Torsion coordinates of the class of `v`, paired with their orders.
    pub fn project_torsion(&mut self, v: &[(usize, D::E)]) -> Vec<(Integer, Integer)> {
        let Some(s) = &self.smith else {
            return Vec::new();
        };
        let dom = self.elim.reducer.domain().clone();
        let reduced = self.elim.reducer.reduce(v);
        let mut y = vec![Integer::ZERO; self.free_rows.len()];
        for (r, x) in &reduced {
            let i = self.free_rows.binary_search(r).expect("reduced row");
            y[i] = dom.to_integer(x).expect("integer entry");
        }
        let z = s.u.as_ref().expect("u tracked").mul_vec(&y);
        s.diagonal
            .iter()
            .zip(z)
            .filter(|(d, _)| !d.is_unit())
            .map(|(d, zi)| {
                let m = d.abs();
                let (_, r) = zi.div_rem(&m);
                let r = if r.is_negative() { &r + &m } else { r };
                (m, r)
            })
            .collect()
    }

    /// A representative of the `k`-th free basis vector.
    pub fn lift(&self, k: usize) -> SparseVec<D::E> {
        let dom = self.elim.reducer.domain();
        match &self.smith {
            None => vec![(self.free_rows[k], dom.one())],
            Some(s) => {
                let ui = s.u_inv.as_ref().expect("u tracked");
                let col = ui.column(self.smith_offset() + k);
                col.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (self.free_rows[i], dom.from_integer(&x)))
                    .collect()
            }
        }
    }
}

/// A cokernel over a runtime-chosen ring.
pub enum RingCokernel {
    Integers(Cokernel<Zz>),
    Rationals(Cokernel<Qq>),
    Prime(Cokernel<Fp>),
}

macro_rules! dispatch {
    ($self:expr, $c:ident => $body:expr) => {
        match $self {
            RingCokernel::Integers($c) => $body,
            RingCokernel::Rationals($c) => $body,
            RingCokernel::Prime($c) => $body,
        }
    };
}

impl RingCokernel {
    /// `R^rows / span(relations)` for relation columns over `ring`.
    pub fn new(ring: Ring, rows: usize, relations: &[SparseVec<Elem>]) -> Result<Self> {
        fn conv<D: Domain>(dom: &D, rels: &[SparseVec<Elem>]) -> Vec<SparseVec<D::E>> {
            rels.iter()
                .map(|c| {
                    let mut v: SparseVec<D::E> = c
                        .iter()
                        .map(|(r, x)| (*r, dom.from_elem(x)))
                        .filter(|(_, x)| !dom.is_zero(x))
                        .collect();
                    v.sort_by_key(|e| e.0);
                    v
                })
                .collect()
        }
        Ok(match Engine::for_ring(ring)? {
            Engine::Integers => RingCokernel::Integers(Cokernel::new(Zz, rows, conv(&Zz, relations))),
            Engine::Rationals => RingCokernel::Rationals(Cokernel::new(Qq, rows, conv(&Qq, relations))),
            Engine::PrimeField(p) => {
                let f = Fp::new(p)?;
                RingCokernel::Prime(Cokernel::new(f, rows, conv(&f, relations)))
            }
        })
    }

    pub fn free_rank(&self) -> usize {
        dispatch!(self, c => c.free_rank())
    }

    pub fn torsion(&self) -> Vec<Integer> {
        dispatch!(self, c => c.torsion())
    }

    pub fn is_free(&self) -> bool {
        self.torsion().is_empty()
    }

    pub fn relation_rank(&self) -> usize {
        dispatch!(self, c => c.relation_rank())
    }

    /// Free coordinates of the class of `v`, as ring elements.
    pub fn project(&mut self, v: &[(usize, Elem)]) -> Vec<Elem> {
        fn go<D: Domain>(c: &mut Cokernel<D>, v: &[(usize, Elem)]) -> Vec<Elem> {
            let dom = c.domain().clone();
            let mut w: SparseVec<D::E> = v.iter().map(|(r, x)| (*r, dom.from_elem(x))).collect();
            w.sort_by_key(|e| e.0);
            c.project(&w).iter().map(|x| dom.to_elem(x)).collect()
        }
        dispatch!(self, c => go(c, v))
    }

    /// Representative of the `k`-th free basis vector.
    pub fn lift(&self, k: usize) -> SparseVec<Elem> {
        fn go<D: Domain>(c: &Cokernel<D>, k: usize) -> SparseVec<Elem> {
            let dom = c.domain().clone();
            c.lift(k).iter().map(|(r, x)| (*r, dom.to_elem(x))).collect()
        }
        dispatch!(self, c => go(c, k))
    }
}

#[cfg(test)]
mod tests {
    use super::super::domain::{Fp, Zz};
    use super::*;

    fn ints(v: &[(usize, i64)]) -> SparseVec<Integer> {
        v.iter().map(|&(r, x)| (r, Integer::from(x))).collect()
    }

    #[test]
    fn free_quotient_over_field() {
        let f = Fp::new(3).unwrap();
        // Z/3^3 / span(e0 - e1)
        let mut c = Cokernel::new(f, 3, vec![vec![(0, 1), (1, 2)]]);
        assert_eq!(c.free_rank(), 2);
        let a = c.project(&[(0, 1)]);
        let b = c.project(&[(1, 1)]);
        assert_eq!(a, b);
        for k in 0..2 {
            let l = c.lift(k);
            let mut e = vec![0; 2];
            e[k] = 1;
            assert_eq!(c.project(&l), e);
        }
    }

    #[test]
    fn torsion_over_z() {
        // Z^2 / span((2, 0)) = Z/2 ⊕ Z
        let mut c = Cokernel::new(Zz, 2, vec![ints(&[(0, 2)])]);
        assert_eq!(c.free_rank(), 1);
        assert_eq!(c.torsion(), vec![Integer::from(2)]);
        let t = c.project_torsion(&ints(&[(0, 3)]));
        assert_eq!(t, vec![(Integer::from(2), Integer::from(1))]);
        let l = c.lift(0);
        assert_eq!(c.project(&l), vec![Integer::ONE]);
        assert!(c.project(&ints(&[(0, 4)])).iter().all(Integer::is_zero));
    }

    #[test]
    fn mixed_pivots_and_residual() {
        // relations (1,1,0), (0,2,2): quotient Z^3 / ... = Z ⊕ Z/2
        let mut c = Cokernel::new(Zz, 3, vec![ints(&[(0, 1), (1, 1)]), ints(&[(1, 2), (2, 2)])]);
        assert_eq!(c.relation_rank(), 2);
        assert_eq!(c.free_rank(), 1);
        assert_eq!(c.torsion(), vec![Integer::from(2)]);
        let l = c.lift(0);
        assert_eq!(c.project(&l), vec![Integer::ONE]);
    }
}
