//! The normalized bar complex `t ⊗_A B̄(A) ⊗_A N`.
//!
//! The augmentation ideal `Ā` has basis `I_u = d_u − ε̄(d_u)·1` for the
//! non-identity diagrams `d_u`. Degree `k` has basis `[u_1|…|u_k] ⊗ x`,
//! indexed in mixed radix `((u_1·D + u_2)·D + …)·rank N + x`.

use std::sync::Arc;

use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::sparse::normalize_column;
use crate::linalg::{ChainComplex, Differential, SparseVec};
use crate::module::BasedModule;
use crate::ring::{Elem, Ring};

/// The augmentation-ideal basis and its multiplication.
#[derive(Clone, Debug)]
pub struct AugmentationIdeal {
    algebra: Arc<BasedAlgebra>,
    /// Algebra index of `I_u`.
    diagram: Vec<usize>,
    /// `I` index of each algebra index (`None` for the identity).
    position: Vec<Option<usize>>,
}

impl AugmentationIdeal {
    pub fn new(algebra: &Arc<BasedAlgebra>) -> Self {
        let e = algebra.identity();
        let diagram: Vec<usize> = (0..algebra.dim()).filter(|&i| i != e).collect();
        let mut position = vec![None; algebra.dim()];
        for (u, &d) in diagram.iter().enumerate() {
            position[d] = Some(u);
        }
        AugmentationIdeal {
            algebra: algebra.clone(),
            diagram,
            position,
        }
    }

    pub fn algebra(&self) -> &Arc<BasedAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.diagram.len()
    }

    pub fn diagram(&self, u: usize) -> usize {
        self.diagram[u]
    }

    pub fn position(&self, algebra_index: usize) -> Option<usize> {
        self.position[algebra_index]
    }

    fn is_permutation(&self, u: usize) -> bool {
        self.algebra.is_permutation(self.diagram[u])
    }

    /// `I_u I_v = κ·I_k − c_v I_u − c_u I_v`, where `d_u d_v = κ d_k`, the
    /// first term is dropped when `d_k` is the identity, and `c = ε̄(d)`.
    pub fn product(&self, u: usize, v: usize) -> SparseVec<Elem> {
        let ring = self.algebra.ring();
        let (k, kappa) = self.algebra.product(self.diagram[u], self.diagram[v]);
        let mut acc = Vec::with_capacity(3);
        if let Some(w) = self.position[k] {
            acc.push((w, kappa));
        }
        let minus_one = ring.neg(&ring.one());
        if self.is_permutation(v) {
            acc.push((u, minus_one.clone()));
        }
        if self.is_permutation(u) {
            acc.push((v, minus_one));
        }
        normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
    }

    /// `I_u · v = d_u · v − c_u v`.
    pub fn act(&self, module: &BasedModule, u: usize, x: usize) -> SparseVec<Elem> {
        let ring = self.algebra.ring();
        let mut v = module.act(self.diagram[u], x).clone();
        if self.is_permutation(u) {
            v.push((x, ring.neg(&ring.one())));
            v = normalize_column(v, |a, b| ring.add(a, b), |a| ring.is_zero(a));
        }
        v
    }
}

/// Shape data for one bar complex.
#[derive(Clone)]
pub struct BarComplex {
    ideal: Arc<AugmentationIdeal>,
    module: Arc<BasedModule>,
    top: usize,
}

impl BarComplex {
    /// Degrees `0..=top`.
    pub fn new(module: &BasedModule, top: usize) -> Result<Self> {
        let ideal = AugmentationIdeal::new(module.algebra());
        let d = ideal.dim() as u128;
        let size = d.checked_pow(top as u32).map(|p| p * module.rank() as u128);
        if size.is_none_or(|s| s > usize::MAX as u128 / 4) {
            return Err(Error::Dimension(format!("bar degree {top} is too large")));
        }
        Ok(BarComplex {
            ideal: Arc::new(ideal),
            module: Arc::new(module.clone()),
            top,
        })
    }

    pub fn ideal(&self) -> &AugmentationIdeal {
        &self.ideal
    }

    pub fn module(&self) -> &BasedModule {
        &self.module
    }

    pub fn ring(&self) -> Ring {
        self.module.ring()
    }

    /// `(dim A − 1)^k · rank N`.
    pub fn dim(&self, k: usize) -> usize {
        self.ideal.dim().pow(k as u32) * self.module.rank()
    }

    /// Splits a degree-`k` index into `(u_1, …, u_k)` and `x`.
    pub fn decode(&self, k: usize, mut j: usize) -> (Vec<usize>, usize) {
        let r = self.module.rank();
        let d = self.ideal.dim();
        let x = j % r;
        j /= r;
        let mut us = vec![0; k];
        for slot in us.iter_mut().rev() {
            *slot = j % d;
            j /= d;
        }
        (us, x)
    }

    pub fn encode(&self, us: &[usize], x: usize) -> usize {
        let d = self.ideal.dim();
        us.iter().fold(0, |acc, &u| acc * d + u) * self.module.rank() + x
    }

    /// Column `j` of `d_k` (`k ≥ 1`).
    pub fn column(&self, k: usize, j: usize) -> SparseVec<Elem> {
        let ring = self.ring();
        let (us, x) = self.decode(k, j);
        let mut acc: Vec<(usize, Elem)> = Vec::new();
        let mut buf: Vec<usize> = Vec::with_capacity(k);
        for i in 0..k.saturating_sub(1) {
            let sign_neg = i % 2 == 0; // (−1)^{i+1}
            for (w, c) in self.ideal.product(us[i], us[i + 1]) {
                buf.clear();
                buf.extend_from_slice(&us[..i]);
                buf.push(w);
                buf.extend_from_slice(&us[i + 2..]);
                let c = if sign_neg { ring.neg(&c) } else { c };
                acc.push((self.encode(&buf, x), c));
            }
        }
        let neg = k % 2 == 1;
        for (y, c) in self.ideal.act(&self.module, us[k - 1], x) {
            let c = if neg { ring.neg(&c) } else { c };
            acc.push((self.encode(&us[..k - 1], y), c));
        }
        normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
    }

    /// The complex in degrees `0..=top`, with lazily generated differentials.
    pub fn complex(&self) -> Result<ChainComplex> {
        let dims: Vec<usize> = (0..=self.top).map(|k| self.dim(k)).collect();
        let diffs = (1..=self.top)
            .map(|k| {
                let me = self.clone();
                Differential::Lazy {
                    rows: self.dim(k - 1),
                    cols: self.dim(k),
                    column: Arc::new(move |j| me.column(k, j)),
                }
            })
            .collect();
        ChainComplex::new(self.ring(), 0, dims, diffs)
    }
}
