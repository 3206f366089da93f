//! Sparse column elimination with unit pivots.
//!
//! Columns are swept from the highest row downwards. A column whose leading
//! surviving entry is a unit becomes a pivot for that row; over a field this
//! is every nonzero column. Over `Z` a column whose leading entry is not ±1
//! is fully reduced against the existing pivots and parked as a *residual*.
//! Residuals are re-swept until no new pivot appears, and what remains is
//! handed to the dense Smith stage.

use std::collections::BinaryHeap;

use super::dense::{smith, IntMatrix};
use super::domain::Domain;
use super::sparse::SparseVec;
use crate::ring::Integer;

const NONE: u32 = u32::MAX;

/// Outcome of sweeping one column.
#[derive(Clone, Debug, PartialEq)]
pub enum Sweep<E> {
    Zero,
    /// The column became the pivot of this row.
    Pivot(usize),
    /// Fully reduced leftover whose leading entry is not a unit.
    Residual(SparseVec<E>),
}

/// Incremental echelon basis of a column space.
pub struct Reducer<D: Domain> {
    dom: D,
    rows: usize,
    pivot_of_row: Vec<u32>,
    /// Pivot vectors, normalized so the leading entry is one.
    pivots: Vec<SparseVec<D::E>>,
    acc: Vec<D::E>,
    mark: Vec<bool>,
    heap: BinaryHeap<usize>,
}

impl<D: Domain> Reducer<D> {
    pub fn new(dom: D, rows: usize) -> Self {
        Reducer {
            rows,
            pivot_of_row: vec![NONE; rows],
            pivots: Vec::new(),
            acc: vec![dom.zero(); rows],
            mark: vec![false; rows],
            heap: BinaryHeap::new(),
            dom,
        }
    }

    pub fn domain(&self) -> &D {
        &self.dom
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot_row(&self, r: usize) -> bool {
        self.pivot_of_row[r] != NONE
    }

    /// Pivot vectors in insertion order.
    pub fn pivots(&self) -> &[SparseVec<D::E>] {
        &self.pivots
    }

    fn load(&mut self, v: &[(usize, D::E)]) {
        for (r, x) in v {
            if self.mark[*r] {
                self.acc[*r] = self.dom.add(&self.acc[*r], x);
            } else {
                self.mark[*r] = true;
                self.acc[*r] = x.clone();
                self.heap.push(*r);
            }
        }
    }

    fn drain_rest(&mut self, out: &mut SparseVec<D::E>) {
        while let Some(r) = self.heap.pop() {
            self.mark[r] = false;
            let x = std::mem::replace(&mut self.acc[r], self.dom.zero());
            if !self.dom.is_zero(&x) {
                out.push((r, x));
            }
        }
    }

    fn eliminate_row(&mut self, r: usize, a: &D::E) {
        let p = self.pivot_of_row[r] as usize;
        // Leading entry of the pivot is one, so the multiplier is `a`.
        for k in 0..self.pivots[p].len() {
            let (row, ref val) = self.pivots[p][k];
            if row == r {
                continue;
            }
            if self.mark[row] {
                self.acc[row] = self.dom.sub_mul(&self.acc[row], a, val);
            } else {
                self.mark[row] = true;
                self.acc[row] = self.dom.neg(&self.dom.mul(a, val));
                self.heap.push(row);
            }
        }
    }

    /// Sweeps `v`. With `insert`, a unit leading entry creates a new pivot.
    /// Without it the vector is reduced to normal form and returned as a
    /// residual (possibly with a unit leading entry).
    pub fn sweep(&mut self, v: &[(usize, D::E)], insert: bool) -> Sweep<D::E> {
        self.load(v);
        let mut kept: SparseVec<D::E> = Vec::new();
        while let Some(r) = self.heap.pop() {
            self.mark[r] = false;
            let a = std::mem::replace(&mut self.acc[r], self.dom.zero());
            if self.dom.is_zero(&a) {
                continue;
            }
            if self.pivot_of_row[r] != NONE {
                self.eliminate_row(r, &a);
                continue;
            }
            if insert && kept.is_empty() && self.dom.is_unit(&a) {
                let mut vec = vec![(r, self.dom.one())];
                let mut rest = Vec::new();
                self.drain_rest(&mut rest);
                vec.extend(rest.into_iter().map(|(row, x)| (row, self.dom.div_unit(&x, &a))));
                vec.sort_by_key(|e| e.0);
                self.pivot_of_row[r] = self.pivots.len() as u32;
                self.pivots.push(vec);
                return Sweep::Pivot(r);
            }
            kept.push((r, a));
        }
        if kept.is_empty() {
            Sweep::Zero
        } else {
            kept.reverse();
            Sweep::Residual(kept)
        }
    }

    /// Normal form of `v` modulo the pivots: entries only at non-pivot rows.
    pub fn reduce(&mut self, v: &[(usize, D::E)]) -> SparseVec<D::E> {
        match self.sweep(v, false) {
            Sweep::Residual(w) => w,
            _ => Vec::new(),
        }
    }
}

/// Result of eliminating a set of columns.
pub struct Elimination<D: Domain> {
    pub reducer: Reducer<D>,
    /// Leftover columns, reduced against every pivot.
    pub residual: Vec<SparseVec<D::E>>,
    /// True when elimination stopped early at the rank bound.
    pub stopped_early: bool,
}

impl<D: Domain> Elimination<D> {
    /// Processes columns one chunk at a time. `next_chunk` yields `None` when
    /// exhausted. Elimination stops once `rank_bound` pivots exist and no
    /// residual is pending, since every later column then reduces to zero.
    pub fn run(
        dom: D,
        rows: usize,
        mut next_chunk: impl FnMut() -> Option<Vec<SparseVec<D::E>>>,
        rank_bound: Option<usize>,
    ) -> Self {
        let mut red = Reducer::new(dom, rows);
        let mut residual: Vec<SparseVec<D::E>> = Vec::new();
        let mut stopped_early = false;
        'outer: while let Some(chunk) = next_chunk() {
            for col in chunk {
                match red.sweep(&col, true) {
                    Sweep::Residual(w) => residual.push(w),
                    Sweep::Zero | Sweep::Pivot(_) => {}
                }
                if let Some(b) = rank_bound {
                    if red.rank() >= b {
                        if !residual.is_empty() {
                            resweep(&mut red, &mut residual);
                        }
                        if residual.is_empty() {
                            stopped_early = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        resweep(&mut red, &mut residual);
        Elimination {
            reducer: red,
            residual,
            stopped_early,
        }
    }

    pub fn from_columns(dom: D, rows: usize, cols: Vec<SparseVec<D::E>>) -> Self {
        let mut once = Some(cols);
        Self::run(dom, rows, move || once.take(), None)
    }

    /// Non-pivot rows that carry residual entries, ascending.
    pub fn residual_rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.residual.iter().flatten().map(|e| e.0).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }
}

/// Re-sweeps residual columns until no new pivot appears.
fn resweep<D: Domain>(red: &mut Reducer<D>, residual: &mut Vec<SparseVec<D::E>>) {
    loop {
        let before = red.rank();
        let old = std::mem::take(residual);
        for v in old {
            if let Sweep::Residual(w) = red.sweep(&v, true) {
                residual.push(w);
            }
        }
        if red.rank() == before {
            return;
        }
    }
}

/// Dense integer matrix of the residual restricted to `rows`.
pub(crate) fn residual_dense<D: Domain>(
    elim: &Elimination<D>,
    rows: &[usize],
    to_int: impl Fn(&D::E) -> Integer,
) -> IntMatrix {
    let mut m = IntMatrix::zero(rows.len(), elim.residual.len());
    for (j, col) in elim.residual.iter().enumerate() {
        for (r, v) in col {
            let i = rows.binary_search(r).expect("residual row");
            m.set(i, j, to_int(v));
        }
    }
    m
}

/// Nonzero invariant factors (absolute values, ascending divisibility) of the
/// integer matrix whose columns were eliminated.
pub fn invariant_factors_of<D: Domain>(
    elim: &Elimination<D>,
    to_int: impl Fn(&D::E) -> Integer,
) -> Vec<Integer> {
    let mut out = vec![Integer::ONE; elim.reducer.rank()];
    if !elim.residual.is_empty() {
        let rows = elim.residual_rows();
        let m = residual_dense(elim, &rows, to_int);
        out.extend(smith(m, false, false).invariant_factors());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::domain::{Fp, Zz};
    use super::*;

    fn ints(v: &[(usize, i64)]) -> SparseVec<Integer> {
        v.iter().map(|&(r, x)| (r, Integer::from(x))).collect()
    }

    #[test]
    fn field_rank() {
        let f = Fp::new(5).unwrap();
        let cols = vec![
            vec![(0, 1u64), (2, 3)],
            vec![(1, 2u64)],
            vec![(0, 2u64), (1, 2), (2, 1)],
        ];
        let e = Elimination::from_columns(f, 3, cols);
        // third = 2·first + second (2·3 = 6 ≡ 1 mod 5)
        assert_eq!(e.reducer.rank(), 2);
        assert!(e.residual.is_empty());
    }

    #[test]
    fn integer_residual_smith() {
        // [[2,0],[0,3]] has invariant factors 1, 6.
        let cols = vec![ints(&[(0, 2)]), ints(&[(1, 3)])];
        let e = Elimination::from_columns(Zz, 2, cols);
        assert_eq!(e.reducer.rank(), 0);
        let f = invariant_factors_of(&e, |x| x.clone());
        assert_eq!(f, vec![Integer::from(1), Integer::from(6)]);
    }

    #[test]
    fn residual_reduced_by_later_pivot() {
        // col0 = (2, 1) leading 2 at row 1? rows are swept from the top index.
        let cols = vec![ints(&[(0, 1), (1, 2)]), ints(&[(1, 1)])];
        let e = Elimination::from_columns(Zz, 2, cols);
        assert_eq!(e.reducer.rank(), 2);
        assert!(e.residual.is_empty());
    }

    #[test]
    fn early_stop_at_bound() {
        let f = Fp::new(2).unwrap();
        let mut chunks = vec![vec![vec![(0usize, 1u64)]], vec![vec![(1usize, 1u64)]]].into_iter();
        let e = Elimination::run(f, 2, move || chunks.next(), Some(1));
        assert!(e.stopped_early);
        assert_eq!(e.reducer.rank(), 1);
    }
}
