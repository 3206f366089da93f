use diagram_homology::diagram::{enumerate_motzkin, enumerate_permutations, enumerate_rook_brauer};
use diagram_homology::{Diagram, Family, SubmoduleSpec};
use proptest::prelude::*;

/// A rook–Brauer diagram: shuffle the `2n` labels, then cut the sequence into
/// consecutive pairs, each kept as a block or split into two singletons.
fn rook_brauer(n: usize) -> impl Strategy<Value = Diagram> {
    let labels: Vec<i64> = (1..=n as i64).flat_map(|i| [-i, i]).collect();
    (Just(labels).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(move |(labels, keep)| {
        let mut blocks = Vec::new();
        for (pair, k) in labels.chunks(2).zip(keep) {
            if k {
                blocks.push(pair.to_vec());
            } else {
                blocks.push(vec![pair[0]]);
                blocks.push(vec![pair[1]]);
            }
        }
        Diagram::new(n, &blocks).unwrap()
    })
}

fn triple(max_n: usize) -> impl Strategy<Value = (Diagram, Diagram, Diagram)> {
    (1..=max_n).prop_flat_map(|n| (rook_brauer(n), rook_brauer(n), rook_brauer(n)))
}

fn motzkin_pair() -> impl Strategy<Value = (Diagram, Diagram)> {
    (1..=4usize).prop_flat_map(|n| {
        let all = enumerate_motzkin(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

fn subset_of(n: usize, mask: u32) -> Vec<usize> {
    (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

fn double_factorial_odd(k: u64) -> u64 {
    (1..=k).map(|i| 2 * i - 1).product()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Partial matchings of `2n` points: choose the `2k` matched points, then match them.
fn rook_brauer_count(n: u64) -> u64 {
    (0..=n).map(|k| binomial(2 * n, 2 * k) * double_factorial_odd(k)).sum()
}

/// Motzkin numbers `M_j` by `(j+3) M_{j+1} = (2j+3) M_j + 3j M_{j−1}`.
fn motzkin_number(j: u64) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for i in 1..j {
        let next = ((2 * i + 3) * cur + 3 * i * prev) / (i + 3);
        prev = cur;
        cur = next;
    }
    if j == 0 { 1 } else { cur }
}

#[test]
fn enumeration_counts_match_closed_forms() {
    for n in 0..=5 {
        assert_eq!(enumerate_rook_brauer(n).len() as u64, rook_brauer_count(n as u64), "RBr_{n}");
        assert_eq!(enumerate_motzkin(n).len() as u64, motzkin_number(2 * n as u64), "M_{n}");
        assert_eq!(enumerate_permutations(n).len() as u64, (1..=n as u64).product::<u64>(), "S_{n}");
    }
    assert_eq!(Family::RookBrauer.enumerate(3).len(), 76);
    assert_eq!(Family::Motzkin.enumerate(3).len(), 51);
}

#[test]
fn enumerations_have_no_duplicates_and_the_right_shape() {
    for n in 0..=4 {
        let rbr = enumerate_rook_brauer(n);
        let mut sorted = rbr.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), rbr.len());
        let planar: Vec<_> = rbr.iter().filter(|d| d.is_planar()).cloned().collect();
        let mut motzkin = enumerate_motzkin(n);
        motzkin.sort();
        let mut planar_sorted = planar;
        planar_sorted.sort();
        assert_eq!(motzkin, planar_sorted, "Motzkin diagrams are the planar rook–Brauer diagrams");
        assert_eq!(rbr.iter().filter(|d| d.is_permutation()).count(), enumerate_permutations(n).len());
    }
}

#[test]
fn products_of_permutations_compose() {
    let perms = enumerate_permutations(3);
    for a in &perms {
        for b in &perms {
            let p = a.multiply(b).unwrap();
            assert_eq!((p.r, p.s), (0, 0));
            assert!(p.gamma.is_permutation());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn multiplication_is_associative_with_scalars((a, b, c) in triple(5)) {
        let ab = a.multiply(&b).unwrap();
        let left = ab.gamma.multiply(&c).unwrap();
        let bc = b.multiply(&c).unwrap();
        let right = a.multiply(&bc.gamma).unwrap();
        prop_assert_eq!(&left.gamma, &right.gamma);
        prop_assert_eq!(ab.r + left.r, bc.r + right.r);
        prop_assert_eq!(ab.s + left.s, bc.s + right.s);
    }

    #[test]
    fn identity_is_neutral(d in (1..=6usize).prop_flat_map(rook_brauer)) {
        let one = Diagram::identity(d.n());
        let l = one.multiply(&d).unwrap();
        let r = d.multiply(&one).unwrap();
        prop_assert_eq!((l.r, l.s, &l.gamma), (0, 0, &d));
        prop_assert_eq!((r.r, r.s, &r.gamma), (0, 0, &d));
    }

    #[test]
    fn text_format_round_trips(d in (0..=7usize).prop_flat_map(rook_brauer)) {
        let back: Diagram = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn flip_reverses_products((a, b, _) in triple(4)) {
        let ab = a.multiply(&b).unwrap();
        let ba = b.flip().multiply(&a.flip()).unwrap();
        prop_assert_eq!((ab.r, ab.s, ab.gamma.flip()), (ba.r, ba.s, ba.gamma));
    }

    #[test]
    fn planar_diagrams_are_closed_under_products((a, b) in motzkin_pair()) {
        prop_assert!(a.multiply(&b).unwrap().gamma.is_planar());
    }

    /// Right singletons and right–right pairs of `b` survive in `a·b`, so each
    /// `J_X` spans a left ideal.
    #[test]
    fn j_x_is_a_left_ideal((a, b, _) in triple(5), mask in any::<u32>()) {
        let n = a.n();
        let set = subset_of(n, mask);
        let j = SubmoduleSpec::j(n, &set).unwrap();
        if j.contains(&b) {
            prop_assert!(j.contains(&a.multiply(&b).unwrap().gamma));
        }
    }

    #[test]
    fn j_x_grows_with_x(d in (1..=5usize).prop_flat_map(rook_brauer), mask in any::<u32>(), extra in any::<u32>()) {
        let n = d.n();
        let small = subset_of(n, mask);
        let big = subset_of(n, mask | extra);
        if SubmoduleSpec::j(n, &small).unwrap().contains(&d) {
            prop_assert!(SubmoduleSpec::j(n, &big).unwrap().contains(&d));
        }
    }

    /// `J_X = J_{X−x} ∪ A_x ∪ B_{X,x}` on basis diagrams, with `A_x` and `B_{X,x}` disjoint.
    #[test]
    fn j_x_splits_at_a_point(d in (1..=5usize).prop_flat_map(rook_brauer), mask in 1u32..32, pick in any::<usize>()) {
        let n = d.n();
        let set = subset_of(n, mask);
        prop_assume!(!set.is_empty());
        let x = set[pick % set.len()];
        let rest: Vec<usize> = set.iter().copied().filter(|&y| y != x).collect();
        let in_j = SubmoduleSpec::j(n, &set).unwrap().contains(&d);
        let in_rest = SubmoduleSpec::j(n, &rest).unwrap().contains(&d);
        let in_a = SubmoduleSpec::a(n, x).unwrap().contains(&d);
        let in_b = SubmoduleSpec::b(n, &set, x).unwrap().contains(&d);
        prop_assert!(!(in_a && in_b));
        prop_assert_eq!(in_j, in_rest || in_a || in_b);
    }
}
