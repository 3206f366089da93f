//! Left modules over a based algebra, given by action matrices on a basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::BasedAlgebra;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::linalg::sparse::normalize_column;
use crate::linalg::{RingCokernel, SparseMatrix, SparseVec};
use crate::link_state::IntervalPartition;
use crate::ring::{Elem, Ring};
use crate::submodule::{set_string, SubmoduleSpec};

/// Numerator and denominator of a diagram-span quotient `N / (N ∩ D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramQuotient {
    pub numerator: SubmoduleSpec,
    pub denominator: SubmoduleSpec,
}

impl DiagramQuotient {
    /// Class of a basis diagram: `Some(true)` if it is a basis vector,
    /// `Some(false)` if it is zero, `None` if it lies outside the numerator.
    pub fn classify(&self, d: &Diagram) -> Option<bool> {
        if !self.numerator.contains(d) {
            None
        } else {
            Some(!self.denominator.contains(d))
        }
    }
}

/// A left module, free over the ring, with basis labels and action matrices.
#[derive(Clone)]
pub struct BasedModule {
    algebra: Arc<BasedAlgebra>,
    name: String,
    labels: Vec<String>,
    quotient: Option<DiagramQuotient>,
    /// Algebra basis index of each module basis element, for diagram quotients.
    diagrams: Vec<usize>,
    position: HashMap<usize, usize>,
    /// `action[b][x] = b · e_x`.
    action: Vec<Vec<SparseVec<Elem>>>,
}

impl fmt::Debug for BasedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasedModule({} over {:?}, rank {})", self.name, self.algebra, self.rank())
    }
}

impl BasedModule {
    /// A module from explicit action columns; checks shapes only.
    pub fn from_action(
        algebra: Arc<BasedAlgebra>,
        name: impl Into<String>,
        labels: Vec<String>,
        action: Vec<Vec<SparseVec<Elem>>>,
    ) -> Result<BasedModule> {
        let r = labels.len();
        if action.len() != algebra.dim() || action.iter().any(|cols| cols.len() != r) {
            return Err(Error::Dimension(format!(
                "action needs {} x {} columns",
                algebra.dim(),
                r
            )));
        }
        if action.iter().flatten().flatten().any(|&(i, _)| i >= r) {
            return Err(Error::Dimension("action entry out of range".into()));
        }
        Ok(BasedModule {
            algebra,
            name: name.into(),
            labels,
            quotient: None,
            diagrams: Vec::new(),
            position: HashMap::new(),
            action,
        })
    }

    /// The trivial module `t`: permutation diagrams act by one, all others by zero.
    pub fn trivial(algebra: &Arc<BasedAlgebra>) -> BasedModule {
        let ring = algebra.ring();
        let action = (0..algebra.dim())
            .map(|b| {
                if algebra.is_permutation(b) {
                    vec![vec![(0, ring.one())]]
                } else {
                    vec![Vec::new()]
                }
            })
            .collect();
        BasedModule {
            algebra: algebra.clone(),
            name: "t".into(),
            labels: vec!["1".into()],
            quotient: None,
            diagrams: Vec::new(),
            position: HashMap::new(),
            action,
        }
    }

    /// The left regular module.
    pub fn regular(algebra: &Arc<BasedAlgebra>) -> BasedModule {
        Self::diagram_quotient(algebra, SubmoduleSpec::Whole, SubmoduleSpec::Zero)
            .expect("the whole algebra is a left module")
    }

    /// `N / (N ∩ D)` for diagram-span left submodules `N`, `D`.
    /// Fails if `N` is not closed under left multiplication.
    pub fn diagram_quotient(
        algebra: &Arc<BasedAlgebra>,
        numerator: SubmoduleSpec,
        denominator: SubmoduleSpec,
    ) -> Result<BasedModule> {
        let q = DiagramQuotient { numerator, denominator };
        let name = match (&q.numerator, &q.denominator) {
            (n, SubmoduleSpec::Zero) => n.to_string(),
            (SubmoduleSpec::Whole, d) => format!("A/{d}"),
            (n, d) => format!("{n}/({n} ∩ {d})"),
        };
        Self::from_quotient(algebra, q, name)
    }

    fn from_quotient(algebra: &Arc<BasedAlgebra>, q: DiagramQuotient, name: String) -> Result<BasedModule> {
        let ring = algebra.ring();
        let mut diagrams = Vec::new();
        let mut position = HashMap::new();
        for (i, d) in algebra.basis().iter().enumerate() {
            if q.classify(d) == Some(true) {
                position.insert(i, diagrams.len());
                diagrams.push(i);
            }
        }
        let rows = crate::par::map_range(algebra.dim(), |b| {
            diagrams
                .iter()
                .map(|&x| {
                    let (k, c) = algebra.product(b, x);
                    if ring.is_zero(&c) {
                        return Ok(Vec::new());
                    }
                    match q.classify(algebra.diagram(k)) {
                        None => Err(Error::InvalidSubmodule(format!(
                            "{} · {} = {} leaves {}",
                            algebra.diagram(b),
                            algebra.diagram(x),
                            algebra.diagram(k),
                            q.numerator
                        ))),
                        Some(false) => Ok(Vec::new()),
                        Some(true) => Ok(vec![(position[&k], c)]),
                    }
                })
                .collect::<Result<Vec<_>>>()
        });
        let action = rows.into_iter().collect::<Result<Vec<_>>>()?;
        let labels = diagrams.iter().map(|&i| algebra.diagram(i).to_string()).collect();
        Ok(BasedModule {
            algebra: algebra.clone(),
            name,
            labels,
            quotient: Some(q),
            diagrams,
            position,
            action,
        })
    }

    /// `A / J_X`.
    pub fn quotient_by_j(algebra: &Arc<BasedAlgebra>, set: &[usize]) -> Result<BasedModule> {
        let j = SubmoduleSpec::j(algebra.n(), set)?;
        Self::diagram_quotient(algebra, SubmoduleSpec::Whole, j)
    }

    /// `𝒜_{X,x} = A_x / (A_x ∩ J_{X−{x}})`.
    pub fn script_a(algebra: &Arc<BasedAlgebra>, set: &[usize], x: usize) -> Result<BasedModule> {
        let n = algebra.n();
        let rest = minus(set, &[x], x)?;
        let q = DiagramQuotient {
            numerator: SubmoduleSpec::a(n, x)?,
            denominator: SubmoduleSpec::j(n, &rest)?,
        };
        Self::from_quotient(algebra, q, format!("𝒜_{},{x}", set_string(&sorted(set))))
    }

    /// `ℬ_{X,x} = B_{X,x} / (B_{X,x} ∩ J_{X−{x}})`.
    pub fn script_b(algebra: &Arc<BasedAlgebra>, set: &[usize], x: usize) -> Result<BasedModule> {
        let n = algebra.n();
        let rest = minus(set, &[x], x)?;
        let q = DiagramQuotient {
            numerator: SubmoduleSpec::b(n, set, x)?,
            denominator: SubmoduleSpec::j(n, &rest)?,
        };
        Self::from_quotient(algebra, q, format!("ℬ_{},{x}", set_string(&sorted(set))))
    }

    /// `ℳ_{X,{a,b}} = M_{a,b} / (M_{a,b} ∩ J_{X−{a,b}})`.
    pub fn script_m(algebra: &Arc<BasedAlgebra>, set: &[usize], a: usize, b: usize) -> Result<BasedModule> {
        let n = algebra.n();
        let rest = minus(set, &[a, b], a)?;
        if !set.contains(&b) {
            return Err(Error::InvalidSubmodule(format!("{b} is not in X")));
        }
        let q = DiagramQuotient {
            numerator: SubmoduleSpec::m(n, a, b)?,
            denominator: SubmoduleSpec::j(n, &rest)?,
        };
        Self::from_quotient(
            algebra,
            q,
            format!("ℳ_{},{{{},{}}}", set_string(&sorted(set)), a.min(b), a.max(b)),
        )
    }

    /// `𝕐_{P,{x,y}} = 𝕐_P / (𝕐_P ∩ J_{X−{x,y}})`; `P` partitions `[x, y]`
    /// (in either order) and has `{x, y}` as a block.
    pub fn script_y(
        algebra: &Arc<BasedAlgebra>,
        set: &[usize],
        partition: &IntervalPartition,
    ) -> Result<BasedModule> {
        let n = algebra.n();
        let (x, y) = partition.bounds();
        if !partition.pairs().contains(&(x, y)) {
            return Err(Error::InvalidSubmodule(format!("{{{x},{y}}} is not a block of P")));
        }
        if !set.contains(&y) {
            return Err(Error::InvalidSubmodule(format!("{y} is not in X")));
        }
        let rest = minus(set, &[x, y], x)?;
        let numerator = SubmoduleSpec::y(n, partition.clone())?;
        let name = format!("𝕐_{},{{{x},{y}}}", numerator.to_string().trim_start_matches("Y_"));
        let q = DiagramQuotient {
            numerator,
            denominator: SubmoduleSpec::j(n, &rest)?,
        };
        Self::from_quotient(algebra, q, name)
    }

    /// Direct sum; basis is the concatenation of the summands' bases.
    pub fn direct_sum(name: impl Into<String>, parts: &[&BasedModule]) -> Result<BasedModule> {
        let Some(first) = parts.first() else {
            return Err(Error::Dimension("empty direct sum".into()));
        };
        let algebra = first.algebra.clone();
        if parts.iter().any(|p| !Arc::ptr_eq(&p.algebra, &algebra)) {
            return Err(Error::Precondition("summands over different algebras".into()));
        }
        let mut labels = Vec::new();
        let mut offsets = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            offsets.push(labels.len());
            labels.extend(p.labels.iter().map(|l| format!("[{i}] {l}")));
        }
        let action = (0..algebra.dim())
            .map(|b| {
                parts
                    .iter()
                    .zip(&offsets)
                    .flat_map(|(p, &off)| {
                        p.action[b]
                            .iter()
                            .map(move |col| col.iter().map(|(r, c)| (r + off, c.clone())).collect())
                    })
                    .collect()
            })
            .collect();
        Ok(BasedModule {
            algebra,
            name: name.into(),
            labels,
            quotient: None,
            diagrams: Vec::new(),
            position: HashMap::new(),
            action,
        })
    }

    pub fn algebra(&self) -> &Arc<BasedAlgebra> {
        &self.algebra
    }

    pub fn ring(&self) -> Ring {
        self.algebra.ring()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn quotient(&self) -> Option<&DiagramQuotient> {
        self.quotient.as_ref()
    }

    /// Algebra basis indices of the basis diagrams (diagram quotients only).
    pub fn basis_diagrams(&self) -> &[usize] {
        &self.diagrams
    }

    /// Module coordinate of an algebra basis diagram, if it is a basis element.
    pub fn position_of(&self, algebra_index: usize) -> Option<usize> {
        self.position.get(&algebra_index).copied()
    }

    /// `b · e_x`.
    pub fn act(&self, b: usize, x: usize) -> &SparseVec<Elem> {
        &self.action[b][x]
    }

    /// `b · v`.
    pub fn act_on(&self, b: usize, v: &[(usize, Elem)]) -> SparseVec<Elem> {
        let ring = self.ring();
        let mut acc = Vec::new();
        for (x, c) in v {
            for (r, a) in &self.action[b][*x] {
                acc.push((*r, ring.mul(a, c)));
            }
        }
        normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
    }

    /// `a · v` for an algebra element `a`.
    pub fn act_element(&self, a: &[(usize, Elem)], v: &[(usize, Elem)]) -> SparseVec<Elem> {
        let ring = self.ring();
        let mut acc = Vec::new();
        for (b, c) in a {
            for (r, x) in self.act_on(*b, v) {
                acc.push((r, ring.mul(c, &x)));
            }
        }
        normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
    }

    /// Action matrix of the basis element `b`.
    pub fn action_matrix(&self, b: usize) -> SparseMatrix<Elem> {
        SparseMatrix::from_sorted_columns(self.rank(), self.action[b].clone())
    }

    /// Checks that the identity acts trivially and `(b_i b_j) · e_x = b_i · (b_j · e_x)`.
    /// All triples are checked up to `limit`; beyond that a deterministic
    /// spread of `limit` triples.
    pub fn check_action(&self, limit: usize) -> Result<()> {
        let ring = self.ring();
        let alg = &self.algebra;
        let e = alg.identity();
        for x in 0..self.rank() {
            if self.action[e][x] != vec![(x, ring.one())] {
                return Err(Error::Precondition(format!("identity moves {}", self.labels[x])));
            }
        }
        let (d, r) = (alg.dim(), self.rank());
        let total = d * d * r;
        let count = total.min(limit);
        if count == 0 {
            return Ok(());
        }
        let bad = crate::par::map_range(count, |t| {
            let idx = if total <= limit { t } else { spread(t, count, total) };
            let (i, j, x) = (idx / (d * r), (idx / r) % d, idx % r);
            let (k, c) = alg.product(i, j);
            let lhs: SparseVec<Elem> = normalize_column(
                self.action[k][x].iter().map(|(row, a)| (*row, ring.mul(a, &c))).collect(),
                |a, b| ring.add(a, b),
                |a| ring.is_zero(a),
            );
            let rhs = self.act_on(i, &self.action[j][x]);
            (lhs != rhs).then_some((i, j, x))
        });
        match bad.into_iter().flatten().next() {
            None => Ok(()),
            Some((i, j, x)) => Err(Error::Precondition(format!(
                "action of {} is not associative on ({}, {}, {})",
                self.name,
                alg.diagram(i),
                alg.diagram(j),
                self.labels[x]
            ))),
        }
    }

    /// Relations `(b − ε̄(b)) · e_x` spanning the kernel of `M → t ⊗_A M`.
    pub fn coinvariant_relations(&self) -> Vec<SparseVec<Elem>> {
        let ring = self.ring();
        let alg = &self.algebra;
        let cols = crate::par::map_range(alg.dim(), |b| {
            if b == alg.identity() {
                return Vec::new();
            }
            (0..self.rank())
                .filter_map(|x| {
                    let mut v = self.action[b][x].clone();
                    if alg.is_permutation(b) {
                        v.push((x, ring.neg(&ring.one())));
                        v = normalize_column(v, |a, b| ring.add(a, b), |a| ring.is_zero(a));
                    }
                    (!v.is_empty()).then_some(v)
                })
                .collect::<Vec<_>>()
        });
        cols.into_iter().flatten().collect()
    }

    /// `t ⊗_A M` as a cokernel with explicit coordinates.
    pub fn coinvariants(&self) -> Result<RingCokernel> {
        RingCokernel::new(self.ring(), self.rank(), &self.coinvariant_relations())
    }

    /// One basis label per line.
    pub fn dump_basis(&self) -> String {
        let mut s = String::new();
        for l in &self.labels {
            s.push_str(l);
            s.push('\n');
        }
        s
    }
}

/// The `t`-th of `count` indices spread evenly over `0..total`.
fn spread(t: usize, count: usize, total: usize) -> usize {
    ((t as u128 * total as u128) / count as u128) as usize
}

fn sorted(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// `X − remove`, after checking `x ∈ X`.
fn minus(set: &[usize], remove: &[usize], x: usize) -> Result<Vec<usize>> {
    if !set.contains(&x) {
        return Err(Error::InvalidSubmodule(format!("{x} is not in X")));
    }
    Ok(sorted(set).into_iter().filter(|v| !remove.contains(v)).collect())
}

/// A linear map between based modules, stored as a `target × source` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source_rank: usize,
    pub target_rank: usize,
    pub matrix: SparseMatrix<Elem>,
}

impl ModuleMap {
    pub fn from_columns(source_rank: usize, target_rank: usize, columns: Vec<SparseVec<Elem>>) -> Result<ModuleMap> {
        if columns.len() != source_rank {
            return Err(Error::Dimension(format!("{} columns for rank {source_rank}", columns.len())));
        }
        Ok(ModuleMap {
            source_rank,
            target_rank,
            matrix: SparseMatrix::from_sorted_columns(target_rank, columns),
        })
    }

    pub fn identity(m: &BasedModule) -> ModuleMap {
        ModuleMap {
            source_rank: m.rank(),
            target_rank: m.rank(),
            matrix: SparseMatrix::identity(m.ring(), m.rank()),
        }
    }

    /// The map `source → target` sending each basis diagram `d` to
    /// `Σ c · class(d · a)` for the algebra element `a = Σ c b` (right
    /// multiplication). Checks it is well defined on the quotient.
    pub fn right_multiplication(source: &BasedModule, target: &BasedModule, a: &[(usize, Elem)]) -> Result<ModuleMap> {
        let (sq, tq) = diagram_quotients(source, target)?;
        let alg = source.algebra.clone();
        let ring = alg.ring();
        let image = |d: usize| -> Result<SparseVec<Elem>> {
            let mut acc = Vec::new();
            for (b, c) in a {
                let (k, s) = alg.product(d, *b);
                let s = ring.mul(&s, c);
                if ring.is_zero(&s) {
                    continue;
                }
                match tq.classify(alg.diagram(k)) {
                    None => {
                        return Err(Error::InvalidSubmodule(format!(
                            "{} · a = {} is outside {}",
                            alg.diagram(d),
                            alg.diagram(k),
                            tq.numerator
                        )))
                    }
                    Some(false) => {}
                    Some(true) => acc.push((target.position[&k], s)),
                }
            }
            Ok(normalize_column(acc, |x, y| ring.add(x, y), |x| ring.is_zero(x)))
        };
        // The numerator ∩ denominator of the source must go to zero.
        for (d, dia) in alg.basis().iter().enumerate() {
            if sq.classify(dia) == Some(false) && !image(d)?.is_empty() {
                return Err(Error::Precondition(format!(
                    "right multiplication does not kill {dia} in {}",
                    source.name
                )));
            }
        }
        let columns = source.diagrams.iter().map(|&d| image(d)).collect::<Result<Vec<_>>>()?;
        Self::from_columns(source.rank(), target.rank(), columns)
    }

    /// The map induced by the identity on diagrams (inclusion of numerators
    /// and denominators). Checks it is well defined.
    pub fn induced_by_inclusion(source: &BasedModule, target: &BasedModule) -> Result<ModuleMap> {
        let alg = &source.algebra;
        let e = vec![(alg.identity(), alg.ring().one())];
        Self::right_multiplication(source, target, &e)
    }

    /// `[f_1 | f_2 | …]` out of a direct sum.
    pub fn hstack(maps: &[&ModuleMap]) -> Result<ModuleMap> {
        let target = maps.first().map_or(0, |m| m.target_rank);
        if maps.iter().any(|m| m.target_rank != target) {
            return Err(Error::Dimension("hstack targets differ".into()));
        }
        let columns: Vec<SparseVec<Elem>> =
            maps.iter().flat_map(|m| (0..m.source_rank).map(|j| m.matrix.column_vec(j))).collect();
        Self::from_columns(columns.len(), target, columns)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap, ring: Ring) -> Result<ModuleMap> {
        Ok(ModuleMap {
            source_rank: first.source_rank,
            target_rank: self.target_rank,
            matrix: self.matrix.mul(&first.matrix, ring)?,
        })
    }

    pub fn apply(&self, v: &[(usize, Elem)], ring: Ring) -> SparseVec<Elem> {
        let mut acc = Vec::new();
        for (j, c) in v {
            for (i, a) in self.matrix.column(*j) {
                acc.push((i, ring.mul(a, c)));
            }
        }
        normalize_column(acc, |a, b| ring.add(a, b), |a| ring.is_zero(a))
    }

    pub fn is_identity(&self, ring: Ring) -> bool {
        self.source_rank == self.target_rank
            && self.matrix == SparseMatrix::identity(ring, self.source_rank)
    }

    pub fn is_zero(&self, ring: Ring) -> bool {
        self.matrix.is_zero_matrix(ring)
    }

    /// `f(b · e_x) = b · f(e_x)` for every algebra basis element `b`.
    pub fn check_equivariant(&self, source: &BasedModule, target: &BasedModule) -> Result<()> {
        let ring = source.ring();
        let bad = crate::par::map_range(source.algebra.dim(), |b| {
            (0..source.rank()).find(|&x| {
                let lhs = self.apply(source.act(b, x), ring);
                let rhs = target.act_on(b, &self.matrix.column_vec(x));
                lhs != rhs
            })
            .map(|x| (b, x))
        });
        match bad.into_iter().flatten().next() {
            None => Ok(()),
            Some((b, x)) => Err(Error::Precondition(format!(
                "map {} → {} fails to commute with {} on {}",
                source.name,
                target.name,
                source.algebra.diagram(b),
                source.labels[x]
            ))),
        }
    }
}

fn diagram_quotients<'a>(
    source: &'a BasedModule,
    target: &'a BasedModule,
) -> Result<(&'a DiagramQuotient, &'a DiagramQuotient)> {
    if !Arc::ptr_eq(&source.algebra, &target.algebra) {
        return Err(Error::Precondition("modules over different algebras".into()));
    }
    match (&source.quotient, &target.quotient) {
        (Some(s), Some(t)) => Ok((s, t)),
        _ => Err(Error::Precondition("maps need diagram-quotient modules".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Family;

    fn rbr(n: usize) -> Arc<BasedAlgebra> {
        BasedAlgebra::with_ints(Family::RookBrauer, n, Ring::Integers, 2, 1).unwrap()
    }

    #[test]
    fn trivial_and_regular_actions() {
        let a = rbr(2);
        let t = BasedModule::trivial(&a);
        t.check_action(usize::MAX).unwrap();
        let r = BasedModule::regular(&a);
        assert_eq!(r.rank(), 10);
        r.check_action(usize::MAX).unwrap();
    }

    #[test]
    fn quotient_by_jn_is_permutation_module() {
        let a = rbr(2);
        let q = BasedModule::quotient_by_j(&a, &[1, 2]).unwrap();
        assert_eq!(q.rank(), 2);
        q.check_action(usize::MAX).unwrap();
        let c = q.coinvariants().unwrap();
        assert_eq!(c.free_rank(), 1);
        assert!(c.is_free());
    }

    #[test]
    fn script_modules_are_modules_with_trivial_coinvariants() {
        let a = rbr(3);
        let all = [1, 2, 3];
        for x in 1..=3 {
            for m in [
                BasedModule::script_a(&a, &all, x).unwrap(),
                BasedModule::script_b(&a, &all, x).unwrap(),
            ] {
                m.check_action(20_000).unwrap();
                let c = m.coinvariants().unwrap();
                assert_eq!((c.free_rank(), c.is_free()), (0, true), "{}", m.name());
            }
        }
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let a = rbr(2);
        let m = ModuleMap::induced_by_inclusion(
            &BasedModule::quotient_by_j(&a, &[1]).unwrap(),
            &BasedModule::quotient_by_j(&a, &[]).unwrap(),
        );
        assert!(m.is_err(), "A/J_1 → A is not well defined");
    }

    #[test]
    fn inclusion_induced_map_is_equivariant() {
        let a = rbr(2);
        let s = BasedModule::quotient_by_j(&a, &[1]).unwrap();
        let t = BasedModule::quotient_by_j(&a, &[1, 2]).unwrap();
        let f = ModuleMap::induced_by_inclusion(&s, &t).unwrap();
        f.check_equivariant(&s, &t).unwrap();
    }
}
