//! Chain complexes of finite free modules and their homology.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Serialize, Serializer};

use super::dense::{smith, IntMatrix};
use super::domain::{Domain, Engine, Fp, Qq, Zz};
use super::elim::{invariant_factors_of, Elimination};
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::ring::{Elem, Integer, Ring};

/// Columns generated on demand.
pub type ColumnFn = Arc<dyn Fn(usize) -> SparseVec<Elem> + Send + Sync>;

/// A differential, either stored or generated column by column.
#[derive(Clone)]
pub enum Differential {
    Matrix(SparseMatrix<Elem>),
    Lazy {
        rows: usize,
        cols: usize,
        column: ColumnFn,
    },
}

impl Differential {
    pub fn rows(&self) -> usize {
        match self {
            Differential::Matrix(m) => m.rows(),
            Differential::Lazy { rows, .. } => *rows,
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            Differential::Matrix(m) => m.cols(),
            Differential::Lazy { cols, .. } => *cols,
        }
    }

    pub fn column(&self, j: usize) -> SparseVec<Elem> {
        match self {
            Differential::Matrix(m) => m.column_vec(j),
            Differential::Lazy { column, .. } => column(j),
        }
    }

    pub fn materialize(&self) -> SparseMatrix<Elem> {
        match self {
            Differential::Matrix(m) => m.clone(),
            Differential::Lazy { rows, cols, column } => {
                SparseMatrix::from_sorted_columns(*rows, crate::par::map_range(*cols, |j| column(j)))
            }
        }
    }
}

impl fmt::Debug for Differential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Differential({}x{})", self.rows(), self.cols())
    }
}

/// Rank data of one differential.
#[derive(Clone, Debug)]
struct RankInfo {
    rank: usize,
    /// Non-unit invariant factors (integers only).
    torsion: Vec<Integer>,
}

/// `C_lo ← C_{lo+1} ← … ← C_hi` over a ring.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: Ring,
    lowest_degree: i64,
    dims: Vec<usize>,
    /// `diffs[i]: C_{lo+i+1} → C_{lo+i}`.
    diffs: Vec<Differential>,
    info: Vec<OnceLock<RankInfo>>,
}

/// Columns to sample when checking `d∘d = 0` on generated differentials.
const LAZY_CHECK_COLUMNS: usize = 4096;
const CHUNK: usize = 4096;

impl ChainComplex {
    /// Validates shapes and `d∘d = 0`.
    pub fn new(ring: Ring, lowest_degree: i64, dims: Vec<usize>, diffs: Vec<Differential>) -> Result<Self> {
        let c = Self::new_unchecked(ring, lowest_degree, dims, diffs)?;
        for i in 1..c.diffs.len() {
            c.check_square_zero(i)?;
        }
        Ok(c)
    }

    /// Validates shapes only.
    pub fn new_unchecked(
        ring: Ring,
        lowest_degree: i64,
        dims: Vec<usize>,
        diffs: Vec<Differential>,
    ) -> Result<Self> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} modules need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.rows() != dims[i] || d.cols() != dims[i + 1] {
                return Err(Error::Dimension(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    lowest_degree + i as i64 + 1,
                    d.rows(),
                    d.cols(),
                    dims[i],
                    dims[i + 1]
                )));
            }
        }
        let info = (0..diffs.len()).map(|_| OnceLock::new()).collect();
        Ok(ChainComplex {
            ring,
            lowest_degree,
            dims,
            diffs,
            info,
        })
    }

    /// Builds from stored matrices.
    pub fn from_matrices(ring: Ring, lowest_degree: i64, dims: Vec<usize>, mats: Vec<SparseMatrix<Elem>>) -> Result<Self> {
        Self::new(ring, lowest_degree, dims, mats.into_iter().map(Differential::Matrix).collect())
    }

    fn check_square_zero(&self, i: usize) -> Result<()> {
        let (lower, upper) = (&self.diffs[i - 1], &self.diffs[i]);
        let ring = self.ring;
        let cols = upper.cols();
        let sample: Vec<usize> = match upper {
            Differential::Matrix(_) => (0..cols).collect(),
            Differential::Lazy { .. } => {
                let step = cols.div_ceil(LAZY_CHECK_COLUMNS).max(1);
                (0..cols).step_by(step).collect()
            }
        };
        let lower_m = match lower {
            Differential::Matrix(m) => Some(m),
            Differential::Lazy { .. } => None,
        };
        let bad = crate::par::map(&sample, |&j| {
            let mut acc: Vec<(usize, Elem)> = Vec::new();
            for (k, b) in upper.column(j) {
                let col = match lower_m {
                    Some(m) => m.column_vec(k),
                    None => lower.column(k),
                };
                for (r, a) in col {
                    acc.push((r, ring.mul(&a, &b)));
                }
            }
            !super::sparse::normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a)).is_empty()
        });
        if bad.into_iter().any(|b| b) {
            return Err(Error::NotAComplex(self.lowest_degree + i as i64 + 1));
        }
        Ok(())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn lowest_degree(&self) -> i64 {
        self.lowest_degree
    }

    pub fn highest_degree(&self) -> i64 {
        self.lowest_degree + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, k: i64) -> usize {
        if k < self.lowest_degree || k > self.highest_degree() {
            0
        } else {
            self.dims[(k - self.lowest_degree) as usize]
        }
    }

    /// `d_k: C_k → C_{k-1}`, if both ends lie in range.
    pub fn differential(&self, k: i64) -> Option<&Differential> {
        if k <= self.lowest_degree || k > self.highest_degree() {
            None
        } else {
            Some(&self.diffs[(k - self.lowest_degree - 1) as usize])
        }
    }

    fn rank_info(&self, k: i64, bound: Option<usize>) -> Result<RankInfo> {
        let Some(d) = self.differential(k) else {
            return Ok(RankInfo { rank: 0, torsion: Vec::new() });
        };
        let idx = (k - self.lowest_degree - 1) as usize;
        if let Some(info) = self.info[idx].get() {
            return Ok(info.clone());
        }
        let info = compute_rank_info(self.ring, d, bound)?;
        let _ = self.info[idx].set(info.clone());
        Ok(info)
    }

    /// `H_k`. Uses SNF of `d_{k+1}` for torsion and ranks for the free part.
    pub fn homology_at(&self, k: i64) -> Result<HomologyGroup> {
        Engine::for_ring(self.ring)?;
        let dim = self.dim(k);
        let lower = self.rank_info(k, None)?;
        let upper = self.rank_info(k + 1, Some(dim - lower.rank))?;
        let free = dim
            .checked_sub(lower.rank + upper.rank)
            .ok_or(Error::NotAComplex(k + 1))?;
        Ok(HomologyGroup {
            ring: self.ring,
            free_rank: free,
            torsion: upper.torsion,
        })
    }

    /// Homology in every degree from the lowest to `max` (inclusive).
    pub fn homology_upto(&self, max: i64) -> Result<Vec<HomologyGroup>> {
        (self.lowest_degree..=max).map(|k| self.homology_at(k)).collect()
    }

    pub fn is_exact(&self, k: i64) -> Result<bool> {
        Ok(self.homology_at(k)?.is_zero())
    }

    /// Exact in every degree.
    pub fn is_acyclic(&self) -> Result<bool> {
        for k in self.lowest_degree..=self.highest_degree() {
            if !self.is_exact(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `H_k` through an explicit kernel basis (dense; integers and fields).
    /// Slow; kept as an independent route for cross-checking.
    pub fn homology_at_dense(&self, k: i64) -> Result<HomologyGroup> {
        let dim = self.dim(k);
        let to_int = |m: &SparseMatrix<Elem>| -> Result<IntMatrix> {
            let mut out = IntMatrix::zero(m.rows(), m.cols());
            for (i, j, v) in m.iter() {
                out.set(i, j, v.as_integer().cloned().ok_or_else(|| Error::UnsupportedRing {
                    needed: "integer entries",
                    ring: self.ring.to_string(),
                })?);
            }
            Ok(out)
        };
        match self.ring {
            Ring::Integers => {
                let dk = self.differential(k).map(Differential::materialize);
                // Kernel of d_k: last columns of V.
                let (kernel_rank, vinv) = match &dk {
                    None => (dim, IntMatrix::identity(dim)),
                    Some(m) => {
                        let f = smith(to_int(m)?, false, true);
                        (dim - f.rank(), f.v_inv.expect("v tracked"))
                    }
                };
                let offset = dim - kernel_rank;
                let Some(up) = self.differential(k + 1).map(Differential::materialize) else {
                    return Ok(HomologyGroup { ring: self.ring, free_rank: kernel_rank, torsion: Vec::new() });
                };
                // Coordinates of im d_{k+1} in the kernel basis.
                let up = to_int(&up)?;
                let coords = vinv.mul(&up);
                let mut b = IntMatrix::zero(kernel_rank, up.cols());
                for i in 0..kernel_rank {
                    for j in 0..up.cols() {
                        b.set(i, j, coords.get(offset + i, j).clone());
                    }
                }
                let f = smith(b, false, false);
                Ok(HomologyGroup {
                    ring: self.ring,
                    free_rank: kernel_rank - f.rank(),
                    torsion: f.invariant_factors().into_iter().filter(|d| !d.is_unit()).collect(),
                })
            }
            _ => {
                let rank = |d: Option<&Differential>| -> Result<usize> {
                    match d {
                        None => Ok(0),
                        Some(d) => dense_field_rank(self.ring, &d.materialize()),
                    }
                };
                let r = rank(self.differential(k))? + rank(self.differential(k + 1))?;
                Ok(HomologyGroup { ring: self.ring, free_rank: dim - r, torsion: Vec::new() })
            }
        }
    }
}

fn dense_field_rank(ring: Ring, m: &SparseMatrix<Elem>) -> Result<usize> {
    fn go<D: Domain>(dom: D, m: &SparseMatrix<Elem>) -> usize {
        let mut a = vec![vec![dom.zero(); m.cols()]; m.rows()];
        for (i, j, v) in m.iter() {
            a[i][j] = dom.from_elem(v);
        }
        super::dense::rref(&dom, &mut a).len()
    }
    Ok(match Engine::for_ring(ring)? {
        Engine::PrimeField(p) => go(Fp::new(p)?, m),
        Engine::Rationals => go(Qq, m),
        Engine::Integers => {
            return Err(Error::UnsupportedRing { needed: "a field", ring: ring.to_string() })
        }
    })
}

fn eliminate<D: Domain>(dom: D, d: &Differential, bound: Option<usize>) -> Elimination<D> {
    let cols = d.cols();
    let mut start = 0;
    let conv = dom.clone();
    Elimination::run(
        dom,
        d.rows(),
        move || {
            if start >= cols {
                return None;
            }
            let end = (start + CHUNK).min(cols);
            let chunk = crate::par::map_range(end - start, |j| {
                d.column(start + j)
                    .iter()
                    .map(|(r, v)| (*r, conv.from_elem(v)))
                    .filter(|(_, v)| !conv.is_zero(v))
                    .collect::<SparseVec<D::E>>()
            });
            start = end;
            Some(chunk)
        },
        bound,
    )
}

fn compute_rank_info(ring: Ring, d: &Differential, bound: Option<usize>) -> Result<RankInfo> {
    Ok(match Engine::for_ring(ring)? {
        Engine::PrimeField(p) => {
            let e = eliminate(Fp::new(p)?, d, bound);
            RankInfo { rank: e.reducer.rank(), torsion: Vec::new() }
        }
        Engine::Rationals => {
            let e = eliminate(Qq, d, bound);
            RankInfo { rank: e.reducer.rank(), torsion: Vec::new() }
        }
        Engine::Integers => {
            let e = eliminate(Zz, d, bound);
            let f = invariant_factors_of(&e, Integer::clone);
            RankInfo {
                rank: f.len(),
                torsion: f.into_iter().filter(|x| !x.is_unit()).collect(),
            }
        }
    })
}

/// Rank of a matrix over a field, or over `Q` for an integer matrix.
pub fn rank(m: &SparseMatrix<Elem>, ring: Ring) -> Result<usize> {
    Ok(compute_rank_info(ring, &Differential::Matrix(m.clone()), None)?.rank)
}

/// Nonzero invariant factors of an integer matrix, ascending.
pub fn invariant_factors(m: &SparseMatrix<Elem>) -> Result<Vec<Integer>> {
    let cols: Vec<SparseVec<Integer>> = (0..m.cols())
        .map(|j| {
            m.column(j)
                .map(|(r, v)| {
                    v.as_integer().cloned().map(|x| (r, x)).ok_or_else(|| Error::UnsupportedRing {
                        needed: "integer entries",
                        ring: "Q".into(),
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let e = Elimination::from_columns(Zz, m.rows(), cols);
    Ok(invariant_factors_of(&e, Integer::clone))
}

/// Null-space basis over a field (dense).
pub fn kernel_basis(m: &SparseMatrix<Elem>, ring: Ring) -> Result<Vec<Vec<Elem>>> {
    fn go<D: Domain>(dom: D, m: &SparseMatrix<Elem>) -> Vec<Vec<Elem>> {
        let mut a = vec![vec![dom.zero(); m.cols()]; m.rows()];
        for (i, j, v) in m.iter() {
            a[i][j] = dom.from_elem(v);
        }
        super::dense::kernel_dense(&dom, &a, m.cols())
            .into_iter()
            .map(|v| v.iter().map(|x| dom.to_elem(x)).collect())
            .collect()
    }
    match Engine::for_ring(ring)? {
        Engine::PrimeField(p) => Ok(go(Fp::new(p)?, m)),
        Engine::Rationals => Ok(go(Qq, m)),
        Engine::Integers => Err(Error::UnsupportedRing { needed: "a field", ring: ring.to_string() }),
    }
}

/// Indices of columns forming a basis of the column space over a field.
pub fn image_basis(m: &SparseMatrix<Elem>, ring: Ring) -> Result<Vec<usize>> {
    fn go<D: Domain>(dom: D, m: &SparseMatrix<Elem>) -> Vec<usize> {
        let mut red = super::elim::Reducer::new(dom.clone(), m.rows());
        (0..m.cols())
            .filter(|&j| {
                let col: SparseVec<D::E> = m.column(j).map(|(r, v)| (r, dom.from_elem(v))).collect();
                matches!(red.sweep(&col, true), super::elim::Sweep::Pivot(_))
            })
            .collect()
    }
    match Engine::for_ring(ring)? {
        Engine::PrimeField(p) => Ok(go(Fp::new(p)?, m)),
        Engine::Rationals => Ok(go(Qq, m)),
        Engine::Integers => Err(Error::UnsupportedRing { needed: "a field", ring: ring.to_string() }),
    }
}

/// A finitely generated module over `Z` or a field: free part plus torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub ring: Ring,
    pub free_rank: usize,
    /// Invariant factors `> 1`, ascending by divisibility.
    pub torsion: Vec<Integer>,
}

impl HomologyGroup {
    pub fn zero(ring: Ring) -> Self {
        HomologyGroup { ring, free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(ring: Ring, rank: usize) -> Self {
        HomologyGroup { ring, free_rank: rank, torsion: Vec::new() }
    }

    pub fn with_torsion(ring: Ring, rank: usize, torsion: &[i64]) -> Self {
        HomologyGroup { ring, free_rank: rank, torsion: torsion.iter().map(|&t| Integer::from(t)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Dimension over a field; for `Z`, the free rank.
    pub fn rank(&self) -> usize {
        self.free_rank
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let base = match self.ring {
            Ring::Integers => "Z".to_string(),
            Ring::Rationals => "Q".to_string(),
            Ring::IntegersMod(m) => format!("F{m}"),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(base),
            r => parts.push(format!("{base}^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(ring: Ring, rows: usize, cols: usize, t: &[(usize, usize, i64)]) -> SparseMatrix<Elem> {
        SparseMatrix::from_triplets(ring, rows, cols, t.iter().map(|&(i, j, v)| (i, j, ring.from_i64(v)))).unwrap()
    }

    /// Cellular chains of RP^2: Z ←0− Z ←2− Z.
    fn rp2(ring: Ring) -> ChainComplex {
        ChainComplex::from_matrices(
            ring,
            0,
            vec![1, 1, 1],
            vec![mat(ring, 1, 1, &[]), mat(ring, 1, 1, &[(0, 0, 2)])],
        )
        .unwrap()
    }

    #[test]
    fn rp2_homology() {
        let c = rp2(Ring::Integers);
        assert_eq!(c.homology_at(0).unwrap(), HomologyGroup::free(Ring::Integers, 1));
        assert_eq!(c.homology_at(1).unwrap(), HomologyGroup::with_torsion(Ring::Integers, 0, &[2]));
        assert_eq!(c.homology_at(2).unwrap(), HomologyGroup::zero(Ring::Integers));
        for k in 0..3 {
            assert_eq!(c.homology_at(k).unwrap(), c.homology_at_dense(k).unwrap());
        }
        let f2 = Ring::prime_field(2).unwrap();
        let c2 = rp2(f2);
        assert_eq!(c2.homology_upto(2).unwrap().iter().map(HomologyGroup::rank).collect::<Vec<_>>(), vec![1, 1, 1]);
        let q = rp2(Ring::Rationals);
        assert_eq!(q.homology_upto(2).unwrap().iter().map(HomologyGroup::rank).collect::<Vec<_>>(), vec![1, 0, 0]);
        assert_eq!(c.homology_at(1).unwrap().to_string(), "Z/2");
    }

    #[test]
    fn rejects_non_complex() {
        let r = Ring::Integers;
        let err = ChainComplex::from_matrices(r, 0, vec![1, 1, 1], vec![mat(r, 1, 1, &[(0, 0, 1)]), mat(r, 1, 1, &[(0, 0, 1)])]);
        assert_eq!(err.unwrap_err(), Error::NotAComplex(2));
        let bad_shape = ChainComplex::from_matrices(r, 0, vec![1, 2], vec![mat(r, 1, 1, &[])]);
        assert!(matches!(bad_shape, Err(Error::Dimension(_))));
    }

    #[test]
    fn composite_modulus_rejected() {
        let r = Ring::integers_mod(6).unwrap();
        let c = ChainComplex::from_matrices(r, 0, vec![1, 1], vec![mat(r, 1, 1, &[(0, 0, 2)])]).unwrap();
        assert!(matches!(c.homology_at(0), Err(Error::UnsupportedRing { .. })));
    }

    #[test]
    fn kernel_and_image_bases() {
        let r = Ring::Rationals;
        let m = mat(r, 2, 3, &[(0, 0, 1), (0, 1, 2), (1, 2, 1), (1, 0, 1), (1, 1, 2)]);
        assert_eq!(rank(&m, r).unwrap(), 2);
        let k = kernel_basis(&m, r).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(image_basis(&m, r).unwrap(), vec![0, 2]);
        let z = mat(Ring::Integers, 2, 2, &[(0, 0, 2), (1, 1, 4)]);
        assert_eq!(invariant_factors(&z).unwrap(), vec![Integer::from(2), Integer::from(4)]);
    }
}
