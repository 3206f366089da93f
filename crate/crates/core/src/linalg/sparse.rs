//! Compressed sparse column matrices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// A sparse column vector: `(row, value)` sorted by row, no explicit zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// Column-compressed sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
    vals: Vec<T>,
}

impl<T: Clone> SparseMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            col_ptr: vec![0; cols + 1],
            row_idx: Vec::new(),
            vals: Vec::new(),
        }
    }

    /// Builds from columns whose entries are already sorted, deduplicated and nonzero.
    pub fn from_sorted_columns(rows: usize, columns: Vec<SparseVec<T>>) -> Self {
        let cols = columns.len();
        let nnz = columns.iter().map(Vec::len).sum();
        let mut col_ptr = Vec::with_capacity(cols + 1);
        let mut row_idx = Vec::with_capacity(nnz);
        let mut vals = Vec::with_capacity(nnz);
        col_ptr.push(0);
        for col in columns {
            for (r, v) in col {
                debug_assert!(r < rows);
                row_idx.push(r);
                vals.push(v);
            }
            col_ptr.push(row_idx.len());
        }
        SparseMatrix {
            rows,
            cols,
            col_ptr,
            row_idx,
            vals,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// Entries of column `j`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &T)> + '_ {
        let (a, b) = (self.col_ptr[j], self.col_ptr[j + 1]);
        self.row_idx[a..b].iter().copied().zip(self.vals[a..b].iter())
    }

    pub fn column_vec(&self, j: usize) -> SparseVec<T> {
        self.column(j).map(|(r, v)| (r, v.clone())).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        let (a, b) = (self.col_ptr[j], self.col_ptr[j + 1]);
        self.row_idx[a..b]
            .binary_search(&i)
            .ok()
            .map(|k| &self.vals[a + k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        (0..self.cols).flat_map(move |j| self.column(j).map(move |(i, v)| (i, j, v)))
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            col_ptr: self.col_ptr.clone(),
            row_idx: self.row_idx.clone(),
            vals: self.vals.iter().map(&mut f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut counts = vec![0usize; self.rows + 1];
        for &r in &self.row_idx {
            counts[r + 1] += 1;
        }
        for i in 0..self.rows {
            counts[i + 1] += counts[i];
        }
        let col_ptr = counts.clone();
        let mut next = counts;
        let mut row_idx = vec![0; self.nnz()];
        let mut vals: Vec<Option<T>> = vec![None; self.nnz()];
        for j in 0..self.cols {
            for (i, v) in self.column(j) {
                let slot = next[i];
                next[i] += 1;
                row_idx[slot] = j;
                vals[slot] = Some(v.clone());
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            col_ptr,
            row_idx,
            vals: vals.into_iter().map(Option::unwrap).collect(),
        }
    }

    /// Submatrix of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_sorted_columns(self.rows, cols.iter().map(|&j| self.column_vec(j)).collect())
    }
}

/// Sorts entries by row and merges duplicates with `add`, dropping zeros.
pub fn normalize_column<T>(
    mut entries: Vec<(usize, T)>,
    add: impl Fn(&T, &T) -> T,
    is_zero: impl Fn(&T) -> bool,
) -> SparseVec<T> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<T> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = add(lv, &v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !is_zero(v));
    out
}

impl SparseMatrix<Elem> {
    /// Builds a matrix over `ring` from unsorted triplets; duplicates are summed.
    pub fn from_triplets(
        ring: Ring,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Elem)>,
    ) -> Result<Self> {
        let mut columns: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::Dimension(format!(
                    "entry ({i},{j}) outside {rows}x{cols}"
                )));
            }
            columns[j].push((i, ring.coerce(&v)?));
        }
        let columns = columns
            .into_iter()
            .map(|c| normalize_column(c, |a, b| ring.add(a, b), |a| ring.is_zero(a)))
            .collect();
        Ok(Self::from_sorted_columns(rows, columns))
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::from_sorted_columns(n, (0..n).map(|i| vec![(i, ring.one())]).collect())
    }

    /// `self · other` over `ring`.
    pub fn mul(&self, other: &Self, ring: Ring) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let columns = crate::par::map_range(other.cols, |j| {
            let mut acc = Vec::new();
            for (k, b) in other.column(j) {
                for (i, a) in self.column(k) {
                    acc.push((i, ring.mul(a, b)));
                }
            }
            normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
        });
        Ok(Self::from_sorted_columns(self.rows, columns))
    }

    pub fn is_zero_matrix(&self, ring: Ring) -> bool {
        self.vals.iter().all(|v| ring.is_zero(v))
    }

    pub fn to_dense(&self, ring: Ring) -> Vec<Vec<Elem>> {
        let mut out = vec![vec![ring.zero(); self.cols]; self.rows];
        for (i, j, v) in self.iter() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn from_dense(ring: Ring, dense: &[Vec<Elem>], cols: usize) -> Result<Self> {
        let rows = dense.len();
        let trips = dense.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !ring.is_zero(v))
                .map(move |(j, v)| (i, j, v.clone()))
        });
        Self::from_triplets(ring, rows, cols, trips)
    }

    /// Text dump: header `rows cols ring`, then one `row col value` line per nonzero.
    pub fn dump(&self, ring: Ring) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, ring);
        for (i, j, v) in self.iter() {
            let _ = writeln!(s, "{i} {j} {v}");
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<(Ring, Self)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix dump".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("bad matrix header `{header}`")));
        }
        let num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::Parse(format!("bad number `{s}`")))
        };
        let (rows, cols) = (num(parts[0])?, num(parts[1])?);
        let ring: Ring = parts[2].parse()?;
        let mut trips = Vec::new();
        for line in lines {
            let p: Vec<&str> = line.split_whitespace().collect();
            if p.len() != 3 {
                return Err(Error::Parse(format!("bad matrix entry `{line}`")));
            }
            trips.push((num(p[0])?, num(p[1])?, ring.parse_elem(p[2])?));
        }
        Ok((ring, Self::from_triplets(ring, rows, cols, trips)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ring: Ring, rows: usize, cols: usize, t: &[(usize, usize, i64)]) -> SparseMatrix<Elem> {
        SparseMatrix::from_triplets(ring, rows, cols, t.iter().map(|&(i, j, v)| (i, j, Elem::int(v))))
            .unwrap()
    }

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let a = m(Ring::Integers, 2, 2, &[(0, 0, 1), (0, 0, -1), (1, 1, 3), (1, 1, 2)]);
        assert_eq!(a.nnz(), 1);
        assert_eq!(a.get(1, 1), Some(&Elem::int(5)));
        assert_eq!(a.get(0, 0), None);
    }

    #[test]
    fn product_and_transpose() {
        let r = Ring::Integers;
        let a = m(r, 2, 3, &[(0, 0, 1), (0, 2, 2), (1, 1, -1)]);
        let b = a.transpose();
        assert_eq!((b.rows(), b.cols()), (3, 2));
        assert_eq!(b.get(2, 0), Some(&Elem::int(2)));
        let p = a.mul(&b, r).unwrap();
        assert_eq!(p.to_dense(r), vec![vec![Elem::int(5), Elem::int(0)], vec![Elem::int(0), Elem::int(1)]]);
        assert!(a.mul(&a, r).is_err());
    }

    #[test]
    fn dump_roundtrip() {
        let r = Ring::integers_mod(7).unwrap();
        let a = m(r, 3, 2, &[(2, 1, 9), (0, 0, 3)]);
        let text = a.dump(r);
        assert!(text.starts_with("3 2 Fp:7\n"));
        let (r2, b) = SparseMatrix::parse_dump(&text).unwrap();
        assert_eq!(r2, r);
        assert_eq!(a, b);
    }
}
