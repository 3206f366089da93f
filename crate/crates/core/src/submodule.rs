//! Diagram-span left submodules of a diagram algebra.
//!
//! Every submodule here is spanned by the diagrams satisfying a condition on
//! the right-hand column, and such conditions are stable under left
//! multiplication.

use std::fmt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::link_state::{link_state_reachable, IntervalPartition, LinkState};

/// Description of a diagram-span left submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmoduleSpec {
    Whole,
    Zero,
    /// Some right node of `X` is a singleton or joined to another right node of `X`.
    J(Vec<usize>),
    /// Right node `x` is a singleton.
    A(usize),
    /// Right node `x` is joined to another right node of `X`.
    B { set: Vec<usize>, x: usize },
    /// Right nodes `a` and `b` are joined.
    M(usize, usize),
    /// Right link state reachable from `Y_P` (empty when `Y_P` is not planar).
    Y { n: usize, partition: IntervalPartition, state: Option<LinkState> },
}

fn right_partner(d: &Diagram, x: usize) -> Option<i64> {
    d.partner(x as i64)
}

impl SubmoduleSpec {
    pub fn j(n: usize, set: &[usize]) -> Result<SubmoduleSpec> {
        check_set(n, set)?;
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        Ok(SubmoduleSpec::J(s))
    }

    /// `J_m = J_{{n−m+1..n}}`.
    pub fn j_m(n: usize, m: usize) -> Result<SubmoduleSpec> {
        if m > n {
            return Err(Error::IndexOutOfRange(format!("m = {m} exceeds n = {n}")));
        }
        Ok(SubmoduleSpec::J((n - m + 1..=n).collect()))
    }

    pub fn a(n: usize, x: usize) -> Result<SubmoduleSpec> {
        check_set(n, &[x])?;
        Ok(SubmoduleSpec::A(x))
    }

    pub fn b(n: usize, set: &[usize], x: usize) -> Result<SubmoduleSpec> {
        check_set(n, set)?;
        if !set.contains(&x) {
            return Err(Error::InvalidSubmodule(format!("x = {x} is not in X")));
        }
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        Ok(SubmoduleSpec::B { set: s, x })
    }

    pub fn m(n: usize, a: usize, b: usize) -> Result<SubmoduleSpec> {
        check_set(n, &[a, b])?;
        if a == b {
            return Err(Error::InvalidSubmodule("M_{a,b} needs a ≠ b".into()));
        }
        Ok(SubmoduleSpec::M(a.min(b), a.max(b)))
    }

    pub fn y(n: usize, partition: IntervalPartition) -> Result<SubmoduleSpec> {
        let (_, b) = partition.bounds();
        if b > n {
            return Err(Error::IndexOutOfRange(format!("partition reaches {b} > n = {n}")));
        }
        let state = partition.link_state(n);
        Ok(SubmoduleSpec::Y { n, partition, state })
    }

    /// Membership of a basis diagram.
    pub fn contains(&self, d: &Diagram) -> bool {
        match self {
            SubmoduleSpec::Whole => true,
            SubmoduleSpec::Zero => false,
            SubmoduleSpec::J(set) => set.iter().any(|&x| match right_partner(d, x) {
                None => true,
                Some(p) => p > 0 && set.contains(&(p as usize)),
            }),
            SubmoduleSpec::A(x) => right_partner(d, *x).is_none(),
            SubmoduleSpec::B { set, x } => {
                matches!(right_partner(d, *x), Some(p) if p > 0 && set.contains(&(p as usize)))
            }
            SubmoduleSpec::M(a, b) => right_partner(d, *a) == Some(*b as i64),
            SubmoduleSpec::Y { state, .. } => match state {
                None => false,
                Some(src) => link_state_reachable(&d.right_link_state(), src),
            },
        }
    }

    /// The right-column set `X` for `J`, if any.
    pub fn set(&self) -> Option<&[usize]> {
        match self {
            SubmoduleSpec::J(s) | SubmoduleSpec::B { set: s, .. } => Some(s),
            _ => None,
        }
    }
}

fn check_set(n: usize, set: &[usize]) -> Result<()> {
    for &x in set {
        if x == 0 || x > n {
            return Err(Error::IndexOutOfRange(format!("{x} is not in [1, {n}]")));
        }
    }
    Ok(())
}

/// `{1,2}` style rendering of a label set.
pub fn set_string(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for SubmoduleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubmoduleSpec::Whole => write!(f, "A"),
            SubmoduleSpec::Zero => write!(f, "0"),
            SubmoduleSpec::J(s) => write!(f, "J_{}", set_string(s)),
            SubmoduleSpec::A(x) => write!(f, "A_{x}"),
            SubmoduleSpec::B { set, x } => write!(f, "B_{},{x}", set_string(set)),
            SubmoduleSpec::M(a, b) => write!(f, "M_{{{a},{b}}}"),
            SubmoduleSpec::Y { partition, .. } => {
                let blocks: Vec<String> = partition.blocks().iter().map(|b| set_string(b)).collect();
                write!(f, "Y_{{{}}}", blocks.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_motzkin, enumerate_rook_brauer};

    fn count(diagrams: &[Diagram], s: &SubmoduleSpec) -> usize {
        diagrams.iter().filter(|d| s.contains(d)).count()
    }

    #[test]
    fn basis_counts_n2() {
        let ds = enumerate_rook_brauer(2);
        assert_eq!(count(&ds, &SubmoduleSpec::j(2, &[1, 2]).unwrap()), 8);
        assert_eq!(count(&ds, &SubmoduleSpec::j(2, &[]).unwrap()), 0);
        assert_eq!(count(&ds, &SubmoduleSpec::b(2, &[1, 2], 1).unwrap()), 2);
        assert_eq!(count(&ds, &SubmoduleSpec::m(2, 1, 2).unwrap()), 2);
        let one = enumerate_rook_brauer(1);
        let j1: Vec<_> = one.iter().filter(|d| SubmoduleSpec::j(1, &[1]).unwrap().contains(d)).collect();
        assert_eq!(j1.len(), 1);
        assert_eq!(*j1[0], crate::diagram::generator_t(1, 1).unwrap());
    }

    #[test]
    fn a_and_b_are_disjoint() {
        for n in 1..=3 {
            for d in enumerate_rook_brauer(n) {
                for x in 1..=n {
                    let all: Vec<usize> = (1..=n).collect();
                    let a = SubmoduleSpec::a(n, x).unwrap();
                    let b = SubmoduleSpec::b(n, &all, x).unwrap();
                    assert!(!(a.contains(&d) && b.contains(&d)));
                }
            }
        }
    }

    #[test]
    fn y_p_for_a_three_point_partition() {
        let p = IntervalPartition::new(1, 3, &[vec![1, 3], vec![2]]).unwrap();
        let y = SubmoduleSpec::y(5, p).unwrap();
        let ds = enumerate_motzkin(5);
        let members: Vec<&Diagram> = ds.iter().filter(|d| y.contains(d)).collect();
        assert!(!members.is_empty());
        for d in members {
            assert_eq!(d.partner(1), Some(3));
            assert!(d.is_singleton(2));
        }
        let bad = IntervalPartition::new(1, 4, &[vec![1, 4], vec![2, 3]]).unwrap();
        assert!(SubmoduleSpec::y(5, bad).unwrap().contains(&"5; {-5,5},{-4},{-3},{-2},{-1},{1,4},{2,3}".parse().unwrap()));
    }
}
