//! Exhaustive structural properties of the cataloged pairs.

use sphmin::pair::{catalog, Family, Pair};
use sphmin::weyl::{enumerate_weyl, WeylElem};

fn roster() -> Vec<Pair> {
    let mut pairs = Vec::new();
    for n in 2..=4 {
        pairs.push(catalog(Family::SlSp { n }).unwrap());
    }
    for n in 4..=6 {
        pairs.push(catalog(Family::SpinSpin { n }).unwrap());
    }
    pairs.push(catalog(Family::E6F4).unwrap());
    pairs.push(catalog(Family::B3G2).unwrap());
    pairs.push(catalog(Family::Diagonal(sphmin::weyl::TypeLabel::A(2))).unwrap());
    pairs.push(catalog(Family::Diagonal(sphmin::weyl::TypeLabel::A(3))).unwrap());
    pairs
}

/// Every root restricts to a root, and the fiber partition is by
/// construction; spot-check the exposed accessors over the whole root
/// system.
#[test]
fn folding_maps_roots_to_roots() {
    for pair in roster() {
        for (bi, _) in pair.big.roots().iter().enumerate() {
            let si = pair.restrict_root(bi);
            assert!(pair.root_fiber(si).contains(&bi));
            assert!(matches!(pair.fiber_class(bi), 1 | 2));
        }
    }
}

/// Reflections through a fiber: a singleton fiber gives the same
/// reflection as its image; a doubled fiber gives a commuting pair
/// whose product is the lifted small reflection.
#[test]
fn lifted_reflections_exhaustive() {
    for pair in roster() {
        for (si, _) in pair.small.positive_roots() {
            let small_refl = pair.small.reflection_in_root(si);
            let lift_word = pair
                .lift_reduced_word(small_refl.reduced_word())
                .expect("reflection words are reduced");
            let lifted = WeylElem::from_word(&pair.big, &lift_word);
            let fiber = pair.root_fiber(si).to_vec();
            match fiber.as_slice() {
                [beta] => {
                    assert_eq!(
                        pair.big.reflection_in_root(*beta),
                        lifted,
                        "{}: singleton fiber reflection mismatch",
                        pair.family
                    );
                }
                [_, _] => {
                    let (p, n) = pair.label_pn(si).unwrap();
                    let sp = pair.big.reflection_in_root(p);
                    let sn = pair.big.reflection_in_root(n);
                    assert_eq!(sp.compose(&sn), sn.compose(&sp));
                    assert_eq!(
                        sp.compose(&sn),
                        lifted,
                        "{}: doubled fiber reflection mismatch",
                        pair.family
                    );
                }
                _ => unreachable!(),
            }
        }
    }
}

/// Brute-force cross-check of the small-Weyl membership test on the
/// pairs whose big Weyl group is small enough to enumerate.
#[test]
fn small_weyl_membership_brute_force() {
    for family in [
        Family::SlSp { n: 2 },
        Family::B3G2,
        Family::SpinSpin { n: 4 },
    ] {
        let pair = catalog(family).unwrap();
        let members: std::collections::HashSet<_> =
            pair.small_weyl_elements().iter().cloned().collect();
        let all = enumerate_weyl(&pair.big, 1_000).unwrap();
        for w in &all {
            assert_eq!(
                pair.in_small_weyl(w),
                members.contains(w),
                "{}: membership disagrees at {w:?}",
                pair.family
            );
        }
        assert_eq!(members.len() as u128, pair.small.label.weyl_order());
    }
}

/// The descended action of a lifted word reproduces the small word.
#[test]
fn lift_preserves_length_sums() {
    for pair in roster() {
        // the length of a lift is the sum of the fiber sizes
        for ih in 1..=pair.small.rank {
            let lift = pair.lift_reduced_word(&[ih]).unwrap();
            let si = pair
                .small
                .root_lookup(&pair.small.simple_root(ih))
                .unwrap();
            assert_eq!(lift.len(), pair.root_fiber(si).len());
        }
        let w0 = sphmin::weyl::longest_element(&pair.small);
        let lift = pair.lift_reduced_word(w0.reduced_word()).unwrap();
        assert!(sphmin::weyl::is_reduced(&pair.big, &lift));
    }
}

/// The distinguished twist element: the fiber-sign condition holds and
/// `y = z⁻¹` exactly.
#[test]
fn twist_element_properties() {
    for pair in roster() {
        assert!(pair.y.compose(&pair.z).is_identity());
        for (si, root) in pair.small.positive_roots() {
            if pair.root_fiber(si).len() == 2 {
                let (p, n) = pair.label_pn(si).unwrap();
                assert!(pair.big.roots()[pair.z.act_on_root(p)].positive);
                assert!(!pair.big.roots()[pair.z.act_on_root(n)].positive);
            }
            let _ = root;
        }
    }
}
