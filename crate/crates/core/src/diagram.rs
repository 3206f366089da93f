//! Rook–Brauer diagrams: partial matchings of the node set `{−n..−1} ∪ {1..n}`.
//!
//! A diagram is stored as a partner table over `2n` node slots. Slot `i − 1`
//! holds the left node `−i`, slot `n + i − 1` the right node `i`; a slot that
//! is its own partner is a singleton. The table is unique for each partition,
//! so derived equality and hashing are equality of canonical forms.
//!
//! Node 1 is the top strand and node `n` the bottom one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::link_state::LinkState;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    mate: Vec<u8>,
}

/// `δ^r ε^s · γ`, the result of multiplying two diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScaledDiagram {
    /// Number of closed loops removed from the middle column.
    pub r: u32,
    /// Number of contractible middle components (paths with no outer endpoint).
    pub s: u32,
    pub gamma: Diagram,
}

/// Largest supported strand count (slots are stored as `u8`).
pub const MAX_STRANDS: usize = 127;

impl Diagram {
    #[inline]
    fn slot(n: usize, label: i64) -> usize {
        if label < 0 {
            (-label) as usize - 1
        } else {
            n + label as usize - 1
        }
    }

    #[inline]
    fn label_of(n: usize, slot: usize) -> i64 {
        if slot < n {
            -(slot as i64 + 1)
        } else {
            (slot - n) as i64 + 1
        }
    }

    /// Builds a diagram from blocks of one or two labels. Labels not mentioned
    /// in any block are rejected: every node must be listed, singletons included.
    pub fn new(n: usize, blocks: &[Vec<i64>]) -> Result<Diagram> {
        if n > MAX_STRANDS {
            return Err(Error::IndexOutOfRange(format!("n = {n} exceeds {MAX_STRANDS}")));
        }
        let mut mate: Vec<Option<u8>> = vec![None; 2 * n];
        for block in blocks {
            if block.is_empty() || block.len() > 2 {
                return Err(Error::BlockTooLarge(block.len()));
            }
            let mut slots = Vec::with_capacity(2);
            for &label in block {
                if label == 0 || label.unsigned_abs() as usize > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
                let s = Self::slot(n, label);
                if mate[s].is_some() || slots.contains(&s) {
                    return Err(Error::DuplicateLabel(label));
                }
                slots.push(s);
            }
            match slots[..] {
                [a] => mate[a] = Some(a as u8),
                [a, b] => {
                    mate[a] = Some(b as u8);
                    mate[b] = Some(a as u8);
                }
                _ => unreachable!(),
            }
        }
        let mut out = Vec::with_capacity(2 * n);
        for (s, m) in mate.iter().enumerate() {
            match m {
                Some(v) => out.push(*v),
                None => {
                    return Err(Error::Parse(format!(
                        "label {} is not in any block",
                        Self::label_of(n, s)
                    )))
                }
            }
        }
        Ok(Diagram { n, mate: out })
    }

    /// Builds a diagram where unlisted labels become singletons.
    pub fn with_singletons(n: usize, blocks: &[Vec<i64>]) -> Result<Diagram> {
        let mut seen = vec![false; 2 * n];
        for b in blocks {
            for &l in b {
                if l != 0 && (l.unsigned_abs() as usize) <= n {
                    seen[Self::slot(n, l)] = true;
                }
            }
        }
        let mut all: Vec<Vec<i64>> = blocks.to_vec();
        for (s, seen) in seen.iter().enumerate() {
            if !seen {
                all.push(vec![Self::label_of(n, s)]);
            }
        }
        Self::new(n, &all)
    }

    pub fn identity(n: usize) -> Diagram {
        let mut mate = vec![0u8; 2 * n];
        for i in 0..n {
            mate[i] = (n + i) as u8;
            mate[n + i] = i as u8;
        }
        Diagram { n, mate }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partner of `label`, or `None` if it is a singleton.
    pub fn partner(&self, label: i64) -> Option<i64> {
        let s = Self::slot(self.n, label);
        let m = self.mate[s] as usize;
        (m != s).then(|| Self::label_of(self.n, m))
    }

    pub fn is_singleton(&self, label: i64) -> bool {
        self.partner(label).is_none()
    }

    /// Canonical block list: each block ascending, blocks ordered by their
    /// first (smallest signed) label.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut out = Vec::new();
        // Slots in ascending signed-label order: −n..−1 then 1..n.
        let order = (0..n).rev().chain(n..2 * n);
        let mut done = vec![false; 2 * n];
        for s in order {
            if done[s] {
                continue;
            }
            let m = self.mate[s] as usize;
            done[s] = true;
            done[m] = true;
            let a = Self::label_of(n, s);
            if m == s {
                out.push(vec![a]);
            } else {
                let b = Self::label_of(n, m);
                out.push(if a < b { vec![a, b] } else { vec![b, a] });
            }
        }
        out
    }

    /// All left nodes joined to right nodes (a bijection).
    pub fn is_permutation(&self) -> bool {
        (0..self.n).all(|i| (self.mate[i] as usize) >= self.n)
    }

    /// The permutation `σ` with `−i` joined to `σ(i)` (1-based values), if any.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation()
            .then(|| (0..self.n).map(|i| self.mate[i] as usize - self.n + 1).collect())
    }

    pub fn from_permutation(perm: &[usize]) -> Result<Diagram> {
        let n = perm.len();
        let blocks: Vec<Vec<i64>> = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| vec![-(i as i64 + 1), j as i64])
            .collect();
        Self::new(n, &blocks)
    }

    /// Position of a slot on the rectangle boundary read as
    /// `−1, −2, …, −n, n, n−1, …, 1`.
    #[inline]
    fn boundary_position(n: usize, slot: usize) -> usize {
        if slot < n {
            slot
        } else {
            // right node i (slot n+i−1) sits at 2n − i
            2 * n - (slot - n + 1)
        }
    }

    /// True iff no two blocks cross when drawn inside the rectangle.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let arcs: Vec<(usize, usize)> = (0..2 * n)
            .filter_map(|s| {
                let m = self.mate[s] as usize;
                (m > s).then(|| {
                    let (a, b) = (Self::boundary_position(n, s), Self::boundary_position(n, m));
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        for (i, &(a, b)) in arcs.iter().enumerate() {
            for &(c, d) in &arcs[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    /// Conjoins `self` (left) with `other` (right) and reads off `δ^r ε^s γ`.
    pub fn multiply(&self, other: &Diagram) -> Result<ScaledDiagram> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &Diagram) -> ScaledDiagram {
        let n = self.n;
        let a = &self.mate;
        let b = &other.mate;
        let mut out = vec![0u8; 2 * n];
        let mut visited = vec![false; n];

        // Walk from an outer node into the middle column until the path leaves
        // through an outer node (returned as an output slot) or dead-ends.
        // `k` is the middle node just entered; `from_left` says which side we
        // arrived from.
        let walk = |mut k: usize, mut from_left: bool, visited: &mut Vec<bool>| -> Option<usize> {
            loop {
                visited[k] = true;
                if from_left {
                    // leave through β's left node −(k+1)
                    let m = b[k] as usize;
                    if m == k {
                        return None;
                    } else if m >= n {
                        return Some(m);
                    } else {
                        k = m;
                        from_left = false;
                        visited[k] = true;
                    }
                } else {
                    // leave through α's right node k+1
                    let m = a[n + k] as usize;
                    if m == n + k {
                        return None;
                    } else if m < n {
                        return Some(m);
                    } else {
                        k = m - n;
                        from_left = true;
                        visited[k] = true;
                    }
                }
            }
        };

        let mut assigned = vec![false; 2 * n];
        // Outer left nodes come from α's left column.
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let m = a[i] as usize;
            let end = if m == i {
                None
            } else if m < n {
                Some(m)
            } else {
                walk(m - n, true, &mut visited)
            };
            assigned[i] = true;
            match end {
                None => out[i] = i as u8,
                Some(e) => {
                    assigned[e] = true;
                    out[i] = e as u8;
                    out[e] = i as u8;
                }
            }
        }
        // Outer right nodes come from β's right column.
        for j in n..2 * n {
            if assigned[j] {
                continue;
            }
            let m = b[j] as usize;
            let end = if m == j {
                None
            } else if m >= n {
                Some(m)
            } else {
                walk(m, false, &mut visited)
            };
            assigned[j] = true;
            match end {
                None => out[j] = j as u8,
                Some(e) => {
                    assigned[e] = true;
                    out[j] = e as u8;
                    out[e] = j as u8;
                }
            }
        }

        // Whatever is left in the middle is closed off from the outer columns.
        let (mut r, mut s) = (0u32, 0u32);
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut stack = vec![start];
            visited[start] = true;
            let mut is_cycle = true;
            while let Some(k) = stack.pop() {
                let ma = a[n + k] as usize;
                let mb = b[k] as usize;
                let next_a = if ma == n + k { None } else { Some(ma - n) };
                let next_b = if mb == k { None } else { Some(mb) };
                if next_a.is_none() || next_b.is_none() {
                    is_cycle = false;
                }
                for nxt in [next_a, next_b].into_iter().flatten() {
                    if !visited[nxt] {
                        visited[nxt] = true;
                        stack.push(nxt);
                    }
                }
            }
            if is_cycle {
                r += 1;
            } else {
                s += 1;
            }
        }
        ScaledDiagram { r, s, gamma: Diagram { n, mate: out } }
    }

    /// The right link state: right-right pairs, right singletons, and
    /// right nodes joined to the left column (defects).
    pub fn right_link_state(&self) -> LinkState {
        let n = self.n;
        let mut pairs = Vec::new();
        let mut singletons = Vec::new();
        let mut defects = Vec::new();
        for i in 0..n {
            let s = n + i;
            let m = self.mate[s] as usize;
            if m == s {
                singletons.push(i + 1);
            } else if m < n {
                defects.push(i + 1);
            } else if m > s {
                pairs.push((i + 1, m - n + 1));
            }
        }
        LinkState::from_parts_unchecked(n, pairs, singletons, defects)
    }

    /// The left link state, with left node `−i` recorded as `i`.
    pub fn left_link_state(&self) -> LinkState {
        self.flip().right_link_state()
    }

    /// Mirror image exchanging the two columns (the anti-involution `α ↦ α*`).
    pub fn flip(&self) -> Diagram {
        let n = self.n;
        let swap = |s: usize| if s < n { s + n } else { s - n };
        let mut mate = vec![0u8; 2 * n];
        for s in 0..2 * n {
            mate[swap(s)] = swap(self.mate[s] as usize) as u8;
        }
        Diagram { n, mate }
    }

    /// Embeds into `n_total` strands: this diagram occupies strands
    /// `offset+1 ..= offset+n`, every other strand is a through-line.
    pub fn embed(&self, n_total: usize, offset: usize) -> Result<Diagram> {
        if offset + self.n > n_total {
            return Err(Error::IndexOutOfRange(format!(
                "cannot place {} strands at offset {offset} inside {n_total}",
                self.n
            )));
        }
        let mut blocks = Vec::new();
        for i in 1..=n_total {
            if i <= offset || i > offset + self.n {
                blocks.push(vec![-(i as i64), i as i64]);
            }
        }
        let shift = |l: i64| if l < 0 { l - offset as i64 } else { l + offset as i64 };
        for b in self.blocks() {
            blocks.push(b.into_iter().map(shift).collect());
        }
        Diagram::new(n_total, &blocks)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; ", self.n)?;
        let blocks = self.blocks();
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match b[..] {
                [a] => write!(f, "{{{a}}}")?,
                [a, c] => write!(f, "{{{a},{c}}}")?,
                _ => unreachable!(),
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({self})")
    }
}

/// Parses `"{a,b},{c},..."` into blocks.
pub(crate) fn parse_blocks(s: &str) -> Result<Vec<Vec<i64>>> {
    let mut blocks = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('{')
            .ok_or_else(|| Error::Parse(format!("expected '{{' at {rest:?}")))?;
        let close = open
            .find('}')
            .ok_or_else(|| Error::Parse("unterminated block".into()))?;
        let inner = &open[..close];
        let block: Vec<i64> = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad label {t:?}")))
            })
            .collect::<Result<_>>()?;
        blocks.push(block);
        rest = open[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        }
    }
    Ok(blocks)
}

impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Diagram> {
        let (n, body) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `n; blocks`, got {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {n:?}")))?;
        Diagram::new(n, &parse_blocks(body)?)
    }
}

impl ScaledDiagram {
    pub fn unscaled(gamma: Diagram) -> ScaledDiagram {
        ScaledDiagram { r: 0, s: 0, gamma }
    }
}

impl fmt::Display for ScaledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta^{} epsilon^{} * {}", self.r, self.s, self.gamma)
    }
}

/// `S_i`: the transposition of strands `i` and `i+1`.
pub fn generator_s(n: usize, i: usize) -> Result<Diagram> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("S_{i} needs 1 ≤ i ≤ n−1 (n = {n})")));
    }
    let (i, j) = (i as i64, i as i64 + 1);
    let mut blocks = vec![vec![-j, i], vec![-i, j]];
    for k in 1..=n as i64 {
        if k != i && k != j {
            blocks.push(vec![-k, k]);
        }
    }
    Diagram::new(n, &blocks)
}

/// `T_i`: identity except that `−i` and `i` are singletons.
pub fn generator_t(n: usize, i: usize) -> Result<Diagram> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("T_{i} needs 1 ≤ i ≤ n (n = {n})")));
    }
    let i = i as i64;
    let mut blocks = vec![vec![-i], vec![i]];
    for k in 1..=n as i64 {
        if k != i {
            blocks.push(vec![-k, k]);
        }
    }
    Diagram::new(n, &blocks)
}

/// `V_ij`: identity except for the pairs `{−i,−j}` and `{i,j}`.
pub fn generator_v(n: usize, i: usize, j: usize) -> Result<Diagram> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::IndexOutOfRange(format!("V_{{{i},{j}}} needs 1 ≤ i ≠ j ≤ n (n = {n})")));
    }
    let (i, j) = (i as i64, j as i64);
    let mut blocks = vec![vec![-i, -j], vec![i, j]];
    for k in 1..=n as i64 {
        if k != i && k != j {
            blocks.push(vec![-k, k]);
        }
    }
    Diagram::new(n, &blocks)
}

/// Every Rook–Brauer `n`-diagram, lexicographic in the canonical block list.
pub fn enumerate_rook_brauer(n: usize) -> Vec<Diagram> {
    // Slots in ascending signed-label order.
    let order: Vec<usize> = (0..n).rev().chain(n..2 * n).collect();
    let mut out = Vec::new();
    let mut mate = vec![u8::MAX; 2 * n];
    fn rec(pos: usize, order: &[usize], mate: &mut Vec<u8>, n: usize, out: &mut Vec<Diagram>) {
        let Some(idx) = (pos..order.len()).find(|&p| mate[order[p]] == u8::MAX) else {
            out.push(Diagram { n, mate: mate.clone() });
            return;
        };
        let s = order[idx];
        mate[s] = s as u8;
        rec(idx + 1, order, mate, n, out);
        for q in idx + 1..order.len() {
            let t = order[q];
            if mate[t] == u8::MAX {
                mate[s] = t as u8;
                mate[t] = s as u8;
                rec(idx + 1, order, mate, n, out);
                mate[t] = u8::MAX;
            }
        }
        mate[s] = u8::MAX;
    }
    rec(0, &order, &mut mate, n, &mut out);
    out
}

/// The planar (Motzkin) diagrams, in the same order.
pub fn enumerate_motzkin(n: usize) -> Vec<Diagram> {
    enumerate_rook_brauer(n).into_iter().filter(Diagram::is_planar).collect()
}

/// The permutation diagrams, in the same order.
pub fn enumerate_permutations(n: usize) -> Vec<Diagram> {
    enumerate_rook_brauer(n).into_iter().filter(Diagram::is_permutation).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn sample_diagram() -> Diagram {
        Diagram::new(5, &[vec![-5, -3], vec![-4, 2], vec![-1, 3], vec![1, 5], vec![-2], vec![4]]).unwrap()
    }

    #[test]
    fn make_diagram_examples() {
        let fig = sample_diagram();
        assert_eq!(fig.to_string(), "5; {-5,-3},{-4,2},{-2},{-1,3},{1,5},{4}");
        assert_eq!(Diagram::new(1, &[vec![-1, 1]]).unwrap(), Diagram::identity(1));
        assert_eq!(
            Diagram::new(2, &[vec![-1, 1], vec![-1, 2]]),
            Err(Error::DuplicateLabel(-1))
        );
        assert!(matches!(Diagram::new(2, &[vec![-3, 1]]), Err(Error::LabelOutOfRange { .. })));
        assert_eq!(Diagram::new(2, &[vec![-1, 1, 2]]), Err(Error::BlockTooLarge(3)));
        assert!(Diagram::new(2, &[vec![-1, 1]]).is_err());
    }

    #[test]
    fn text_format_round_trips() {
        for dg in enumerate_rook_brauer(3) {
            let s = dg.to_string();
            assert_eq!(d(&s), dg);
            assert_eq!(d(&s).to_string(), s);
        }
        // Non-canonical input is accepted and canonicalized.
        assert_eq!(d("2; {2,1} , {-2,-1}").to_string(), "2; {-2,-1},{1,2}");
        assert!("2 {1,2}".parse::<Diagram>().is_err());
        assert!("2; {1,2".parse::<Diagram>().is_err());
        assert_eq!(Diagram::identity(0).to_string(), "0; ");
        assert_eq!(d("0; "), Diagram::identity(0));
    }

    #[test]
    fn product_with_a_loop_and_a_path() {
        let alpha = Diagram::new(5, &[vec![-1, 4], vec![-2, -3], vec![-4, 2], vec![1, 3], vec![-5], vec![5]]).unwrap();
        let beta = Diagram::new(5, &[vec![-1, -3], vec![-2, 1], vec![-4, 5], vec![3, 4], vec![-5], vec![2]]).unwrap();
        let p = alpha.multiply(&beta).unwrap();
        let gamma = Diagram::new(5, &[vec![-1, 5], vec![-2, -3], vec![-4, 1], vec![3, 4], vec![-5], vec![2]]).unwrap();
        assert_eq!(p, ScaledDiagram { r: 1, s: 1, gamma });
    }

    #[test]
    fn small_products() {
        let t1 = generator_t(2, 1).unwrap();
        assert_eq!(t1.multiply(&t1).unwrap(), ScaledDiagram { r: 0, s: 1, gamma: t1.clone() });
        let v = generator_v(2, 1, 2).unwrap();
        assert_eq!(v.multiply(&v).unwrap(), ScaledDiagram { r: 1, s: 0, gamma: v.clone() });
        let s1 = generator_s(2, 1).unwrap();
        assert_eq!(s1.multiply(&s1).unwrap(), ScaledDiagram::unscaled(Diagram::identity(2)));
        assert!(t1.multiply(&generator_t(3, 1).unwrap()).is_err());
        for a in enumerate_rook_brauer(3) {
            let id = Diagram::identity(3);
            assert_eq!(id.multiply(&a).unwrap(), ScaledDiagram::unscaled(a.clone()));
            assert_eq!(a.multiply(&id).unwrap(), ScaledDiagram::unscaled(a.clone()));
        }
    }

    #[test]
    fn t_times_v_is_epsilon_idempotent() {
        let ta = generator_t(2, 1).unwrap();
        let v = generator_v(2, 1, 2).unwrap();
        let tv = ta.multiply(&v).unwrap();
        assert_eq!((tv.r, tv.s), (0, 0));
        let sq = tv.gamma.multiply(&tv.gamma).unwrap();
        assert_eq!(sq, ScaledDiagram { r: 0, s: 1, gamma: tv.gamma.clone() });
    }

    #[test]
    fn generator_shapes() {
        assert_eq!(
            generator_s(4, 2).unwrap(),
            Diagram::new(4, &[vec![-1, 1], vec![-3, 2], vec![-2, 3], vec![-4, 4]]).unwrap()
        );
        assert_eq!(
            generator_v(4, 1, 3).unwrap(),
            Diagram::new(4, &[vec![-1, -3], vec![1, 3], vec![-2, 2], vec![-4, 4]]).unwrap()
        );
        assert_eq!(
            generator_t(4, 3).unwrap(),
            Diagram::new(4, &[vec![-1, 1], vec![-2, 2], vec![-4, 4], vec![-3], vec![3]]).unwrap()
        );
        assert!(generator_s(4, 4).is_err());
        assert!(generator_s(4, 0).is_err());
        assert!(generator_t(4, 5).is_err());
        assert!(generator_v(4, 2, 2).is_err());
    }

    #[test]
    fn permutation_and_planarity() {
        assert!(generator_s(4, 2).unwrap().is_permutation());
        assert!(!generator_t(4, 3).unwrap().is_permutation());
        assert!(Diagram::identity(1).is_permutation());
        let fig4 = Diagram::new(4, &[vec![-1, 2], vec![-4, -2], vec![3, 4], vec![-3], vec![1]]).unwrap();
        assert!(fig4.is_planar());
        assert!(!generator_s(2, 1).unwrap().is_planar());
        assert!(!sample_diagram().is_planar());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_rook_brauer(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 10, 76, 764]);
        let m: Vec<usize> = (0..=3).map(|n| enumerate_motzkin(n).len()).collect();
        assert_eq!(m, vec![1, 2, 9, 51]);
        let all = enumerate_rook_brauer(3);
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        let keys: Vec<Vec<Vec<i64>>> = all.iter().map(Diagram::blocks).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(enumerate_permutations(3).len(), 6);
    }

    #[test]
    fn right_link_states() {
        let fig4 = Diagram::new(4, &[vec![-1, 2], vec![-4, -2], vec![3, 4], vec![-3], vec![1]]).unwrap();
        let l = fig4.right_link_state();
        assert_eq!(l.pairs(), &[(3, 4)]);
        assert_eq!(l.singletons(), &[1]);
        assert_eq!(l.defects(), &[2]);
        let id = Diagram::identity(3).right_link_state();
        assert_eq!(id.defects(), &[1, 2, 3]);
        let t2 = generator_t(3, 2).unwrap().right_link_state();
        assert_eq!(t2.singletons(), &[2]);
        assert_eq!(t2.defects(), &[1, 3]);
    }

    #[test]
    fn embedding_places_strands() {
        let s1 = generator_s(2, 1).unwrap();
        assert_eq!(s1.embed(4, 2).unwrap(), generator_s(4, 3).unwrap());
        assert_eq!(s1.embed(4, 0).unwrap(), generator_s(4, 1).unwrap());
        assert!(s1.embed(2, 1).is_err());
    }

    #[test]
    fn flip_is_involution() {
        for a in enumerate_rook_brauer(2) {
            assert_eq!(a.flip().flip(), a);
        }
        let t = generator_t(3, 1).unwrap().multiply(&generator_v(3, 1, 2).unwrap()).unwrap().gamma;
        assert_eq!(t.flip().right_link_state(), t.left_link_state());
    }
}
