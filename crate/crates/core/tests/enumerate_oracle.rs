use wsbound_core::enumerate::*;
use wsbound_core::NumericalSemigroup;

fn gap_sets(v: impl IntoIterator<Item = NumericalSemigroup>) -> Vec<Vec<u64>> {
    v.into_iter().map(|s| s.gaps()).collect()
}

#[test]
fn tree_equals_census_up_to_genus_nine() {
    for g in 0..=9 {
        let tree = gap_sets(semigroups_of_genus(g).unwrap());
        let census = gap_sets(brute_force_census(g).unwrap());
        assert_eq!(tree, census, "genus {g}");
    }
}

#[test]
fn known_counts_and_invariants() {
    let counts: Vec<usize> = (0..=14)
        .map(|g| semigroups_of_genus(g).unwrap().count())
        .collect();
    assert_eq!(
        counts,
        vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693]
    );
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    for g in 0..=12 {
        for s in semigroups_of_genus(g).unwrap() {
            assert_eq!(s.genus(), g as u64);
            assert!(s.conductor() <= 2 * s.genus());
            assert_eq!(s.generators(), s.minimal_generators().as_slice());
        }
    }
}

#[test]
fn children_step_genus_by_one() {
    let mut frontier = vec![GenusTreeNode::root()];
    for g in 1..=7u64 {
        frontier = frontier.iter().flat_map(|n| n.children()).collect();
        assert!(frontier.iter().all(|n| n.semigroup.genus() == g));
        let listed = gap_sets(semigroups_of_genus(g as u32).unwrap());
        let mut from_children = gap_sets(frontier.iter().map(|n| n.semigroup.clone()));
        from_children.sort();
        assert_eq!(from_children, listed);
    }
}
