//! Dense integer Smith normal form and dense field row reduction.

use super::domain::Domain;
use crate::ring::Integer;

/// Row-major dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Integer>>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![Integer::ZERO; cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i][i] = Integer::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Integer>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols));
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Integer) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Vec<Integer> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] = &out.data[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Integer]) -> Vec<Integer> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Integer::ZERO, |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row[dst] -= q · row[src]
    fn row_axpy(&mut self, dst: usize, q: &Integer, src: usize) {
        if q.is_zero() {
            return;
        }
        let (s, d) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = self.data.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        for (x, y) in d.iter_mut().zip(s.iter()) {
            if !y.is_zero() {
                *x = &*x - &(q * y);
            }
        }
    }

    /// col[dst] -= q · col[src]
    fn col_axpy(&mut self, dst: usize, q: &Integer, src: usize) {
        if q.is_zero() {
            return;
        }
        for r in &mut self.data {
            if !r[src].is_zero() {
                let t = q * &r[src];
                r[dst] = &r[dst] - &t;
            }
        }
    }
}

/// A diagonalization `U·A·V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries `D[i][i]`, `i < rank`, in position order.
    pub diagonal: Vec<Integer>,
    pub rows: usize,
    pub cols: usize,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors `d_1 | d_2 | …`, positive.
    pub fn invariant_factors(&self) -> Vec<Integer> {
        normalize_diagonal(&self.diagonal)
    }
}

/// Turns any diagonal into the divisibility chain with the same cokernel.
pub fn normalize_diagonal(diag: &[Integer]) -> Vec<Integer> {
    let mut d: Vec<Integer> = diag.iter().map(Integer::abs).collect();
    let k = d.len();
    for i in 0..k {
        for j in i + 1..k {
            if d[j].divides(&d[i]) && !d[i].divides(&d[j]) {
                d.swap(i, j);
            }
            if !d[i].divides(&d[j]) {
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d.sort();
    d
}

/// Diagonalizes `a` by unimodular row and column operations, optionally
/// recording the transforms.
pub fn smith(mut a: IntMatrix, want_u: bool, want_v: bool) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut u = want_u.then(|| IntMatrix::identity(m));
    let mut u_inv = want_u.then(|| IntMatrix::identity(m));
    let mut v = want_v.then(|| IntMatrix::identity(n));
    let mut v_inv = want_v.then(|| IntMatrix::identity(n));

    macro_rules! row_swap {
        ($i:expr, $j:expr) => {
            if $i != $j {
                a.swap_rows($i, $j);
                if let Some(u) = u.as_mut() {
                    u.swap_rows($i, $j);
                }
                if let Some(ui) = u_inv.as_mut() {
                    ui.swap_cols($i, $j);
                }
            }
        };
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {
            if $i != $j {
                a.swap_cols($i, $j);
                if let Some(v) = v.as_mut() {
                    v.swap_cols($i, $j);
                }
                if let Some(vi) = v_inv.as_mut() {
                    vi.swap_rows($i, $j);
                }
            }
        };
    }
    // row[dst] -= q row[src]
    macro_rules! row_op {
        ($dst:expr, $q:expr, $src:expr) => {
            a.row_axpy($dst, $q, $src);
            if let Some(u) = u.as_mut() {
                u.row_axpy($dst, $q, $src);
            }
            if let Some(ui) = u_inv.as_mut() {
                ui.col_axpy($src, &-$q, $dst);
            }
        };
    }
    // col[dst] -= q col[src]
    macro_rules! col_op {
        ($dst:expr, $q:expr, $src:expr) => {
            a.col_axpy($dst, $q, $src);
            if let Some(v) = v.as_mut() {
                v.col_axpy($dst, $q, $src);
            }
            if let Some(vi) = v_inv.as_mut() {
                vi.row_axpy($src, &-$q, $dst);
            }
        };
    }

    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &a.data[i][j];
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj)| x.cmp_abs(&a.data[bi][bj]).is_lt())
                {
                    best = Some((i, j));
                    if x.is_unit() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| a.data[bi][bj].is_unit()) {
                break;
            }
        }
        let Some((bi, bj)) = best else { break };
        row_swap!(t, bi);
        col_swap!(t, bj);
        loop {
            let p = a.data[t][t].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if !a.data[i][t].is_zero() {
                    let q = a.data[i][t].div_round(&p);
                    row_op!(i, &q, t);
                    dirty |= !a.data[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a.data[t][j].is_zero() {
                    let q = a.data[t][j].div_round(&p);
                    col_op!(j, &q, t);
                    dirty |= !a.data[t][j].is_zero();
                }
            }
            if !dirty {
                break;
            }
            // Move the smallest remaining entry of row/column t to the pivot.
            let mut bi = t;
            let mut bj = t;
            for i in t + 1..m {
                if !a.data[i][t].is_zero() && a.data[i][t].cmp_abs(&a.data[bi][bj]).is_lt() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t + 1..n {
                if !a.data[t][j].is_zero() && a.data[t][j].cmp_abs(&a.data[bi][bj]).is_lt() {
                    (bi, bj) = (t, j);
                }
            }
            row_swap!(t, bi);
            col_swap!(t, bj);
        }
        diagonal.push(a.data[t][t].clone());
        t += 1;
    }
    SmithForm {
        diagonal,
        rows: m,
        cols: n,
        u,
        u_inv,
        v,
        v_inv,
    }
}

/// Reduced row echelon form over a field domain. Returns the pivot columns.
pub fn rref<D: Domain>(dom: &D, a: &mut [Vec<D::E>]) -> Vec<usize> {
    debug_assert!(dom.is_field());
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !dom.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv_lead = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = dom.div_unit(x, &inv_lead);
        }
        for i in 0..m {
            if i != r && !dom.is_zero(&a[i][c]) {
                let f = a[i][c].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !dom.is_zero(s) {
                        *d = dom.sub_mul(d, &f, s);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the null space of a dense matrix over a field.
pub fn kernel_dense<D: Domain>(dom: &D, a: &[Vec<D::E>], cols: usize) -> Vec<Vec<D::E>> {
    let mut m: Vec<Vec<D::E>> = a.to_vec();
    let pivots = rref(dom, &mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![dom.zero(); cols];
            v[f] = dom.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = dom.neg(&m[row][f]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::domain::Fp;
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn known_smith_forms() {
        let a = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith(a, false, false).invariant_factors(), ints(&[2, 6, 12]));
        let b = IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith(b, false, false).invariant_factors(), ints(&[1, 6]));
        let z = IntMatrix::zero(3, 2);
        assert!(smith(z, true, true).diagonal.is_empty());
    }

    #[test]
    fn kernel_over_f3() {
        let f = Fp::new(3).unwrap();
        let a = vec![vec![1u64, 2, 0], vec![2, 1, 0]];
        let k = kernel_dense(&f, &a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let s = row.iter().zip(v).fold(0, |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
                assert_eq!(s, 0);
            }
        }
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(m, n)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..7, n), m)
        })
    }

    fn diag_matrix(f: &SmithForm) -> IntMatrix {
        let mut d = IntMatrix::zero(f.rows, f.cols);
        for (i, x) in f.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }

    proptest! {
        #[test]
        fn transforms_reconstruct(rows in small_matrix()) {
            let a = IntMatrix::from_i64(&rows);
            let f = smith(a.clone(), true, true);
            let (u, ui, v, vi) = (f.u.clone().unwrap(), f.u_inv.clone().unwrap(), f.v.clone().unwrap(), f.v_inv.clone().unwrap());
            prop_assert_eq!(u.mul(&ui), IntMatrix::identity(a.rows()));
            prop_assert_eq!(v.mul(&vi), IntMatrix::identity(a.cols()));
            prop_assert_eq!(u.mul(&a).mul(&v), diag_matrix(&f));
        }

        #[test]
        fn invariant_factors_divide(rows in small_matrix()) {
            let f = smith(IntMatrix::from_i64(&rows), false, false).invariant_factors();
            for w in f.windows(2) {
                prop_assert!(w[0].divides(&w[1]));
            }
        }

        #[test]
        fn normalization_keeps_product(d in proptest::collection::vec(1i64..40, 0..5)) {
            let di = ints(&d);
            let nf = normalize_diagonal(&di);
            let p1 = di.iter().fold(Integer::ONE, |a, b| &a * b);
            let p2 = nf.iter().fold(Integer::ONE, |a, b| &a * b);
            prop_assert_eq!(p1, p2);
        }
    }
}
