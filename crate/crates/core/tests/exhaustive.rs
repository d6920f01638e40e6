//! Exhaustive checks of the structural invariants over bounded families.

use std::collections::BTreeMap;

use fence_lattice::chains::{DDividedPoset, ThreeSegmentFence};
use fence_lattice::composition::Composition;
use fence_lattice::conjecture::{
    check_centered, check_shape, check_unimodal, composition_family, CenteredStrategy, Verdict,
};
use fence_lattice::lattice::build_lattice;
use fence_lattice::polynomial::shape_classify_counts;
use fence_lattice::poset::{build_d_divided, build_fence, enumerate_ideals, LabeledPoset, Word};

const LIMIT: usize = 24;

fn all_compositions_up_to(total: u32) -> Vec<Composition> {
    composition_family(total as usize, total, Some(total))
}

#[test]
fn fences_are_paths_with_the_right_size() {
    for alpha in all_compositions_up_to(12) {
        let fence = build_fence(&alpha);
        assert_eq!(fence.n(), alpha.element_count(), "{alpha}");
        assert!(fence.hasse_is_path(), "{alpha}");
    }
}

#[test]
fn built_in_labelings_are_linear_extensions() {
    for n in 1..=16usize {
        for d in 1..=6usize {
            let p = build_d_divided(n, d).unwrap();
            assert!(p.labeling_is_linear_extension(), "P({n},{d})");
        }
    }
    for a in 1..=5u32 {
        for b in 1..=5u32 {
            for c in 1..=5u32 {
                let p = fence_lattice::poset::label_three_segment(a, b, c).unwrap();
                assert!(p.labeling_is_linear_extension(), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn ideal_cardinalities_reverse_for_odd_segment_counts() {
    for alpha in all_compositions_up_to(10) {
        if alpha.segment_count() % 2 == 0 {
            continue;
        }
        let n = alpha.element_count();
        let forward = enumerate_ideals(&build_fence(&alpha), LIMIT).unwrap();
        let backward = enumerate_ideals(&build_fence(&alpha.reversed()), LIMIT).unwrap();
        let mut complemented: Vec<usize> = forward.iter().map(|i| n - i.size()).collect();
        complemented.sort_unstable();
        let mut reversed: Vec<usize> = backward.iter().map(|i| i.size()).collect();
        reversed.sort_unstable();
        assert_eq!(complemented, reversed, "{alpha}");
    }
}

#[test]
fn rank_sequences_agree_for_even_segment_counts() {
    for alpha in all_compositions_up_to(10) {
        if alpha.segment_count() % 2 == 1 {
            continue;
        }
        let forward = build_lattice(&build_fence(&alpha), LIMIT)
            .unwrap()
            .rank_sequence();
        let backward = build_lattice(&build_fence(&alpha.reversed()), LIMIT)
            .unwrap()
            .rank_sequence();
        assert_eq!(forward, backward, "{alpha}");
    }
}

#[test]
fn lattice_covers_are_exactly_one_element_extensions() {
    let mut posets: Vec<(String, LabeledPoset)> = all_compositions_up_to(8)
        .into_iter()
        .map(|alpha| (alpha.to_string(), build_fence(&alpha)))
        .collect();
    for (n, d) in [(6, 2), (7, 3), (10, 4), (9, 2)] {
        posets.push((format!("P({n},{d})"), build_d_divided(n, d).unwrap()));
    }
    for (name, poset) in posets {
        let lattice = build_lattice(&poset, LIMIT).unwrap();
        for (i, a) in lattice.ideals().iter().enumerate() {
            for (j, b) in lattice.ideals().iter().enumerate() {
                let listed = lattice.covers_up(i).contains(&j);
                let is_cover = a.size() + 1 == b.size() && a.is_subset_of(*b);
                assert_eq!(listed, is_cover, "{name}: {:?} vs {:?}", a, b);
            }
        }
    }
}

/// Flips the leftmost free zero (or rightmost free one) of the word,
/// returning the new word.
fn flip_free(word: &Word, free: &[usize], leftmost_zero: bool) -> Option<Word> {
    let pos = if leftmost_zero {
        *free.iter().find(|&&p| !word.get(p))?
    } else {
        *free.iter().rev().find(|&&p| word.get(p))?
    };
    let mut out = word.clone();
    out.set(pos, !out.get(pos));
    Some(out)
}

#[test]
fn three_segment_core_is_stable_under_free_flips() {
    for a in 1..=5u32 {
        for b in 1..=5u32 {
            for c in 1..=a.min(5) {
                let fence = ThreeSegmentFence::new(a, b, c).unwrap();
                let poset = fence.poset();
                let n = poset.n();
                for ideal in enumerate_ideals(poset, LIMIT).unwrap() {
                    let core = fence.core(ideal).unwrap();
                    let word = poset.word_of(ideal);
                    let free = core.free_positions(n);
                    for leftmost_zero in [true, false] {
                        if let Some(next) = flip_free(&word, &free, leftmost_zero) {
                            let flipped = poset.ideal_from_word(&next);
                            assert!(
                                poset.is_ideal(flipped),
                                "({a},{b},{c}) {word} -> {next} left an ideal"
                            );
                            assert_eq!(
                                fence.core(flipped).unwrap(),
                                core,
                                "({a},{b},{c}) {word} -> {next} changed the core"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn d_divided_core_is_stable_under_free_flips() {
    for n in 1..=14usize {
        for d in 1..=5usize {
            let dd = DDividedPoset::new(n, d).unwrap();
            let poset = dd.poset();
            for ideal in enumerate_ideals(poset, LIMIT).unwrap() {
                let core = dd.core(ideal).unwrap();
                let word = poset.word_of(ideal);
                let free = core.free_positions(n);
                for leftmost_zero in [true, false] {
                    if let Some(next) = flip_free(&word, &free, leftmost_zero) {
                        let flipped = poset.ideal_from_word(&next);
                        assert!(
                            poset.is_ideal(flipped),
                            "({n},{d}) {word} -> {next} left an ideal"
                        );
                        assert_eq!(
                            dd.core(flipped).unwrap(),
                            core,
                            "({n},{d}) {word} -> {next} changed the core"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn shape_pass_implies_unimodal_pass() {
    for alpha in composition_family(4, 4, None) {
        let shape = check_shape(&alpha);
        let unimodal = check_unimodal(&alpha);
        if shape.verdict == Verdict::Pass {
            assert_eq!(unimodal.verdict, Verdict::Pass, "{alpha}");
        }
    }
}

#[test]
fn centered_pass_matches_rank_shape() {
    let mut passes = 0usize;
    for alpha in composition_family(4, 4, None) {
        let r = check_centered(&alpha, CenteredStrategy::Construct, LIMIT);
        // up to three segments a construction always applies
        if alpha.segment_count() <= 3 {
            assert_eq!(r.verdict, Verdict::Pass, "{alpha}");
        }
        if r.verdict != Verdict::Pass {
            assert_eq!(r.verdict, Verdict::Inconclusive, "{alpha}");
            continue;
        }
        passes += 1;
        let class = r.witness.unwrap()["classification"]
            .as_str()
            .unwrap()
            .to_string();
        let ranks = build_lattice(&build_fence(&alpha), LIMIT)
            .unwrap()
            .rank_sequence();
        let flags = shape_classify_counts(&ranks);
        match class.as_str() {
            "symmetric" => assert!(flags.symmetric, "{alpha}"),
            "bottom_centered" => assert!(flags.bottom_interlacing, "{alpha}"),
            "top_centered" => assert!(flags.top_interlacing, "{alpha}"),
            other => panic!("{alpha}: unexpected classification {other}"),
        }
    }
    assert!(passes >= 84, "only {passes} constructed certificates");
}

#[test]
fn ideal_counts_by_three_independent_routes() {
    use fence_lattice::polynomial::rank_poly_recursive;
    use fence_lattice::poset::path_ideal_count;
    use num_bigint::BigUint;
    for alpha in all_compositions_up_to(10) {
        let fence = build_fence(&alpha);
        let by_enum = enumerate_ideals(&fence, LIMIT).unwrap().len() as u128;
        let by_walk = path_ideal_count(&fence).unwrap();
        let by_poly = rank_poly_recursive(&alpha).eval_one();
        assert_eq!(by_enum, by_walk, "{alpha}");
        assert_eq!(BigUint::from(by_enum), by_poly, "{alpha}");
    }
}

#[test]
fn core_grouping_partitions_every_lattice() {
    // grouping ideals by core tiles each lattice by the flip chains; the
    // group sizes therefore sum to the ideal count and each group has one
    // more member than it has free positions
    for a in 1..=4u32 {
        for b in 1..=4u32 {
            for c in 1..=a.min(4) {
                let fence = ThreeSegmentFence::new(a, b, c).unwrap();
                let poset = fence.poset();
                let ideals = enumerate_ideals(poset, LIMIT).unwrap();
                let mut groups: BTreeMap<_, usize> = BTreeMap::new();
                for &ideal in &ideals {
                    *groups.entry(fence.core(ideal).unwrap()).or_default() += 1;
                }
                let total: usize = groups.values().sum();
                assert_eq!(total, ideals.len());
                for (core, size) in groups {
                    assert_eq!(size, core.free_positions(poset.n()).len() + 1);
                }
            }
        }
    }
}
