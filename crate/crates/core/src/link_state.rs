//! Link states (half diagrams) and the splice/deletion moves on them.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// A column of `n` nodes, each a defect, a singleton, or paired with another
/// node. Pairs are stored as `(a, b)` with `a < b`, all lists sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkState {
    n: usize,
    pairs: Vec<(usize, usize)>,
    singletons: Vec<usize>,
    defects: Vec<usize>,
}

impl LinkState {
    pub fn new(
        n: usize,
        pairs: Vec<(usize, usize)>,
        singletons: Vec<usize>,
        defects: Vec<usize>,
    ) -> Result<LinkState> {
        let mut seen = vec![false; n + 1];
        let mut mark = |v: usize| -> Result<()> {
            if v == 0 || v > n {
                return Err(Error::LabelOutOfRange { label: v as i64, n });
            }
            if seen[v] {
                return Err(Error::DuplicateLabel(v as i64));
            }
            seen[v] = true;
            Ok(())
        };
        for &(a, b) in &pairs {
            mark(a)?;
            mark(b)?;
        }
        for &v in singletons.iter().chain(&defects) {
            mark(v)?;
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::Parse(format!("node {v} is not assigned in link state")));
        }
        Ok(Self::from_parts_unchecked(n, pairs, singletons, defects))
    }

    pub(crate) fn from_parts_unchecked(
        n: usize,
        pairs: Vec<(usize, usize)>,
        mut singletons: Vec<usize>,
        mut defects: Vec<usize>,
    ) -> LinkState {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        singletons.sort_unstable();
        defects.sort_unstable();
        LinkState { n, pairs, singletons, defects }
    }

    /// Every node a defect.
    pub fn all_defects(n: usize) -> LinkState {
        LinkState { n, pairs: vec![], singletons: vec![], defects: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
    pub fn singletons(&self) -> &[usize] {
        &self.singletons
    }
    pub fn defects(&self) -> &[usize] {
        &self.defects
    }

    pub fn is_defect(&self, v: usize) -> bool {
        self.defects.binary_search(&v).is_ok()
    }

    /// Noncrossing pairs with no defect nested under a pair. A defect runs off
    /// to the other column, so an arc over it would have to cross it.
    pub fn is_planar(&self) -> bool {
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            for &(c, d) in &self.pairs[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return false;
                }
            }
            if self.defects.iter().any(|&v| a < v && v < b) {
                return false;
            }
        }
        true
    }

    /// Joins defects `i` and `j` into a pair.
    pub fn splice(&self, i: usize, j: usize) -> Result<LinkState> {
        for v in [i, j] {
            if !self.is_defect(v) {
                return Err(Error::NotADefect(v));
            }
        }
        if i == j {
            return Err(Error::NotADefect(i));
        }
        let mut pairs = self.pairs.clone();
        pairs.push((i.min(j), i.max(j)));
        let defects = self.defects.iter().copied().filter(|&v| v != i && v != j).collect();
        let next = Self::from_parts_unchecked(self.n, pairs, self.singletons.clone(), defects);
        if !next.is_planar() {
            return Err(Error::PlanarityViolation(i.min(j), i.max(j)));
        }
        Ok(next)
    }

    /// Turns defect `i` into a singleton.
    pub fn delete_defect(&self, i: usize) -> Result<LinkState> {
        if !self.is_defect(i) {
            return Err(Error::NotADefect(i));
        }
        let mut singletons = self.singletons.clone();
        singletons.push(i);
        let defects = self.defects.iter().copied().filter(|&v| v != i).collect();
        Ok(Self::from_parts_unchecked(self.n, self.pairs.clone(), singletons, defects))
    }

    /// Every state one move away.
    pub fn moves(&self) -> Vec<LinkState> {
        let mut out = Vec::new();
        for &i in &self.defects {
            out.push(self.delete_defect(i).expect("defect"));
            for &j in &self.defects {
                if i < j {
                    if let Ok(s) = self.splice(i, j) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

/// Whether `target` can be reached from `source` by splices and deletions.
///
/// Closed form: pairs and singletons of `source` survive unchanged, each
/// defect of `source` stays a defect, becomes a singleton, or is paired with
/// another `source` defect, and `target` is planar.
pub fn link_state_reachable(target: &LinkState, source: &LinkState) -> bool {
    if target.n != source.n {
        return false;
    }
    if !source.pairs.iter().all(|p| target.pairs.binary_search(p).is_ok()) {
        return false;
    }
    if !source.singletons.iter().all(|v| target.singletons.binary_search(v).is_ok()) {
        return false;
    }
    // Everything new in `target` must be built from source defects.
    let new_pairs_ok = target
        .pairs
        .iter()
        .filter(|p| source.pairs.binary_search(p).is_err())
        .all(|&(a, b)| source.is_defect(a) && source.is_defect(b));
    let new_singletons_ok = target
        .singletons
        .iter()
        .filter(|v| source.singletons.binary_search(v).is_err())
        .all(|&v| source.is_defect(v));
    let defects_ok = target.defects.iter().all(|&v| source.is_defect(v));
    new_pairs_ok && new_singletons_ok && defects_ok && target.is_planar()
}

/// Breadth-first search over move sequences.
pub fn link_state_reachable_bfs(target: &LinkState, source: &LinkState) -> bool {
    if target.n != source.n {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([source.clone()]);
    seen.insert(source.clone());
    while let Some(s) = queue.pop_front() {
        if &s == target {
            return true;
        }
        for nxt in s.moves() {
            if seen.insert(nxt.clone()) {
                queue.push_back(nxt);
            }
        }
    }
    false
}

/// All link states on `n` nodes (planar or not).
pub fn enumerate_link_states(n: usize) -> Vec<LinkState> {
    fn rec(v: usize, n: usize, kind: &mut Vec<i64>, out: &mut Vec<LinkState>) {
        if v > n {
            let mut pairs = Vec::new();
            let mut singles = Vec::new();
            let mut defects = Vec::new();
            for u in 1..=n {
                match kind[u] {
                    -1 => singles.push(u),
                    -2 => defects.push(u),
                    p if (p as usize) > u => pairs.push((u, p as usize)),
                    _ => {}
                }
            }
            out.push(LinkState::from_parts_unchecked(n, pairs, singles, defects));
            return;
        }
        if kind[v] != 0 {
            return rec(v + 1, n, kind, out);
        }
        for k in [-1, -2] {
            kind[v] = k;
            rec(v + 1, n, kind, out);
        }
        for w in v + 1..=n {
            if kind[w] == 0 {
                kind[v] = w as i64;
                kind[w] = v as i64;
                rec(v + 1, n, kind, out);
                kind[w] = 0;
            }
        }
        kind[v] = 0;
    }
    let mut out = Vec::new();
    rec(1, n, &mut vec![0; n + 1], &mut out);
    out
}

/// A partition of the interval `[a, b]` into blocks of size one or two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalPartition {
    a: usize,
    b: usize,
    pairs: Vec<(usize, usize)>,
    singletons: Vec<usize>,
}

impl IntervalPartition {
    pub fn new(a: usize, b: usize, blocks: &[Vec<usize>]) -> Result<IntervalPartition> {
        if a == 0 || a >= b {
            return Err(Error::InvalidSubmodule(format!("interval [{a},{b}] needs 1 ≤ a < b")));
        }
        let mut seen = vec![false; b + 1];
        let mut pairs = Vec::new();
        let mut singletons = Vec::new();
        for block in blocks {
            for &v in block {
                if v < a || v > b {
                    return Err(Error::LabelOutOfRange { label: v as i64, n: b });
                }
                if seen[v] {
                    return Err(Error::DuplicateLabel(v as i64));
                }
                seen[v] = true;
            }
            match block[..] {
                [v] => singletons.push(v),
                [u, v] => pairs.push((u.min(v), u.max(v))),
                _ => return Err(Error::BlockTooLarge(block.len())),
            }
        }
        if let Some(v) = (a..=b).find(|&v| !seen[v]) {
            return Err(Error::InvalidSubmodule(format!("{v} not covered by the partition")));
        }
        pairs.sort_unstable();
        singletons.sort_unstable();
        Ok(IntervalPartition { a, b, pairs, singletons })
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.a, self.b)
    }
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
    pub fn singletons(&self) -> &[usize] {
        &self.singletons
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.pairs.len() + self.singletons.len()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.pairs.iter().map(|&(u, v)| vec![u, v]).collect();
        out.extend(self.singletons.iter().map(|&v| vec![v]));
        out.sort();
        out
    }

    /// The link state with the partition's blocks on `[a, b]` and defects
    /// elsewhere, or `None` when that state is not planar.
    pub fn link_state(&self, n: usize) -> Option<LinkState> {
        if self.b > n {
            return None;
        }
        let defects = (1..=n).filter(|&v| v < self.a || v > self.b).collect();
        let l = LinkState::from_parts_unchecked(n, self.pairs.clone(), self.singletons.clone(), defects);
        l.is_planar().then_some(l)
    }

    /// The diagram `γ` with right link state `Y_P` whose defects run straight
    /// across; the left nodes of `[a, b]` are singletons. `γγ = ε^{k₀}γ` with
    /// `k₀` the number of blocks.
    pub fn gamma(&self, n: usize) -> Result<Diagram> {
        if self.b > n {
            return Err(Error::IndexOutOfRange(format!("[{}, {}] does not fit in n = {n}", self.a, self.b)));
        }
        let mut blocks: Vec<Vec<i64>> = self.blocks().iter().map(|b| b.iter().map(|&v| v as i64).collect()).collect();
        for v in 1..=n as i64 {
            if (self.a as i64..=self.b as i64).contains(&v) {
                blocks.push(vec![-v]);
            } else {
                blocks.push(vec![-v, v]);
            }
        }
        Diagram::new(n, &blocks)
    }

    /// All partitions of `[a, b]` into blocks of size ≤ 2 that contain the
    /// block `{a, b}`.
    pub fn enumerate_with_outer_pair(a: usize, b: usize) -> Vec<IntervalPartition> {
        let inner: Vec<usize> = (a + 1..b).collect();
        let mut out = Vec::new();
        fn rec(rest: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            let Some((&first, tail)) = rest.split_first() else {
                out.push(acc.clone());
                return;
            };
            acc.push(vec![first]);
            rec(tail, acc, out);
            acc.pop();
            for (k, &other) in tail.iter().enumerate() {
                let mut remaining = tail.to_vec();
                remaining.remove(k);
                acc.push(vec![first, other]);
                rec(&remaining, acc, out);
                acc.pop();
            }
        }
        let mut raw = Vec::new();
        rec(&inner, &mut Vec::new(), &mut raw);
        for mut blocks in raw {
            blocks.push(vec![a, b]);
            out.push(IntervalPartition::new(a, b, &blocks).expect("valid by construction"));
        }
        out
    }
}

impl fmt::Display for LinkState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pairs {:?} singletons {:?} defects {:?}", self.pairs, self.singletons, self.defects)
    }
}

impl fmt::Debug for LinkState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkState[{}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splice_and_delete_examples() {
        let l = LinkState::all_defects(3).splice(1, 2).unwrap();
        assert_eq!(l.pairs(), &[(1, 2)]);
        assert_eq!(l.defects(), &[3]);

        let yp = IntervalPartition::new(1, 5, &[vec![1, 5], vec![2, 3], vec![4]])
            .unwrap()
            .link_state(6)
            .unwrap();
        assert_eq!(yp.defects(), &[6]);
        let deleted = yp.delete_defect(6).unwrap();
        assert!(deleted.defects().is_empty());
        assert_eq!(deleted.singletons(), &[4, 6]);

        let crossing = LinkState::new(4, vec![(2, 4)], vec![], vec![1, 3]).unwrap();
        assert_eq!(crossing.splice(1, 3), Err(Error::PlanarityViolation(1, 3)));
        assert_eq!(LinkState::all_defects(3).splice(1, 1), Err(Error::NotADefect(1)));
        assert_eq!(yp.delete_defect(4), Err(Error::NotADefect(4)));
        // An arc over a defect would cross its through-strand.
        assert!(LinkState::all_defects(3).splice(1, 3).is_err());
    }

    #[test]
    fn reachability_examples() {
        let y = LinkState::all_defects(2);
        assert!(link_state_reachable(&y, &y));
        let paired = LinkState::new(2, vec![(1, 2)], vec![], vec![]).unwrap();
        assert!(link_state_reachable(&paired, &y));
        let y3 = LinkState::new(3, vec![(1, 2)], vec![], vec![3]).unwrap();
        let l3 = LinkState::new(3, vec![(2, 3)], vec![1], vec![]).unwrap();
        assert!(!link_state_reachable(&l3, &y3));
        assert!(!link_state_reachable_bfs(&l3, &y3));
    }

    #[test]
    fn closed_form_matches_bfs() {
        for n in 1..=5 {
            let all = enumerate_link_states(n);
            let planar: Vec<&LinkState> = all.iter().filter(|l| l.is_planar()).collect();
            for y in &planar {
                for l in &all {
                    assert_eq!(
                        link_state_reachable(l, y),
                        link_state_reachable_bfs(l, y),
                        "n={n} y={y:?} l={l:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn interval_partitions() {
        let ps = IntervalPartition::enumerate_with_outer_pair(1, 3);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].blocks(), vec![vec![1, 3], vec![2]]);
        // Inner {2,3,4}: 4 partitions into blocks of size ≤ 2.
        assert_eq!(IntervalPartition::enumerate_with_outer_pair(1, 5).len(), 4);
        assert!(IntervalPartition::new(2, 2, &[vec![2]]).is_err());
        assert!(IntervalPartition::new(1, 3, &[vec![1, 3]]).is_err());
        let crossing = IntervalPartition::new(1, 4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert!(crossing.link_state(4).is_none());
    }

    #[test]
    fn gamma_of_the_worked_partition() {
        let p = IntervalPartition::new(1, 3, &[vec![1, 3], vec![2]]).unwrap();
        let g = p.gamma(5).unwrap();
        assert_eq!(g.to_string(), "5; {-5,5},{-4,4},{-3},{-2},{-1},{1,3},{2}");
        let sq = g.multiply(&g).unwrap();
        assert_eq!((sq.r, sq.s), (0, 2));
        assert_eq!(sq.gamma, g);
    }
}
