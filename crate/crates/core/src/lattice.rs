//! The distributive lattice of order ideals, rank sequences, and the
//! long-segment plateau and matching machinery.

use std::collections::{BTreeMap, HashMap};

use crate::composition::Composition;
use crate::error::Error;
use crate::poset::{build_fence, enumerate_ideals, Ideal, LabeledPoset};
use crate::Result;

/// The lattice `L(P)` of all order ideals of `P`, ranked by cardinality.
/// Ideals are indexed in (rank, mask) order; covers add a single element.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    poset: LabeledPoset,
    ideals: Vec<Ideal>,
    index: HashMap<u64, usize>,
    covers_up: Vec<Vec<usize>>,
}

impl IdealLattice {
    pub fn poset(&self) -> &LabeledPoset {
        &self.poset
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Rank of the lattice, i.e. the element count of the poset.
    pub fn top_rank(&self) -> usize {
        self.poset.n()
    }

    pub fn index_of(&self, ideal: Ideal) -> Option<usize> {
        self.index.get(&ideal.mask()).copied()
    }

    pub fn contains(&self, ideal: Ideal) -> bool {
        self.index.contains_key(&ideal.mask())
    }

    /// Indices of the ideals covering `ideals()[i]`.
    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.covers_up[i]
    }

    /// True when `j` covers `i` in the lattice (one added element).
    pub fn is_cover(&self, i: Ideal, j: Ideal) -> bool {
        i.size() + 1 == j.size() && i.is_subset_of(j)
    }

    /// Entry `k` counts the ideals of cardinality `k`; length `n + 1`.
    pub fn rank_sequence(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.top_rank() + 1];
        for i in &self.ideals {
            counts[i.size()] += 1;
        }
        counts
    }
}

/// Materializes `L(P)` with ranks and upward cover lists.
pub fn build_lattice(p: &LabeledPoset, limit: usize) -> Result<IdealLattice> {
    let ideals = enumerate_ideals(p, limit)?;
    let index: HashMap<u64, usize> = ideals
        .iter()
        .enumerate()
        .map(|(i, id)| (id.mask(), i))
        .collect();
    let mut covers_up = vec![Vec::new(); ideals.len()];
    for (i, id) in ideals.iter().enumerate() {
        for e in 1..=p.n() {
            if !id.contains(e) && p.downset(e) & !id.mask() == 1 << (e - 1) {
                let j = index[&id.with(e).mask()];
                covers_up[i].push(j);
            }
        }
        covers_up[i].sort_unstable();
    }
    Ok(IdealLattice {
        poset: p.clone(),
        ideals,
        index,
        covers_up,
    })
}

/// Outcome of the plateau computation for a composition with a strictly
/// dominant segment: the maximum rank size and the rank interval on which it
/// is attained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlateauInfo {
    /// Maximum size of a rank, equal to the ideal count of the fence with
    /// the dominant segment removed.
    pub size: u64,
    /// First rank of the plateau, `m + 1` where `m` counts the remaining
    /// elements.
    pub lo: usize,
    /// Last rank of the plateau, `n - m - 1`.
    pub hi: usize,
}

fn dominant_segment_checked(alpha: &Composition, t: usize) -> Result<()> {
    let s = alpha.segment_count();
    if t == 0 || t > s {
        return Err(Error::SegmentIndex { t, s });
    }
    let part = alpha.parts()[t - 1];
    let rest: u32 = alpha.total() - part;
    if part <= rest {
        return Err(Error::DominanceRequired { t });
    }
    Ok(())
}

/// Bitmask of the elements of segment `t` of the fence of `alpha`.
pub fn segment_mask(alpha: &Composition, t: usize) -> u64 {
    let start = alpha.segment_start(t);
    let len = alpha.parts()[t - 1] as usize + 1;
    let mut mask = 0u64;
    for e in start..start + len {
        mask |= 1 << (e - 1);
    }
    mask
}

/// Elements of segment `t` listed bottom to top along the chain.
pub fn segment_chain(alpha: &Composition, t: usize) -> Vec<usize> {
    let start = alpha.segment_start(t);
    let end = start + alpha.parts()[t - 1] as usize;
    if t % 2 == 1 {
        (start..=end).collect()
    } else {
        (start..=end).rev().collect()
    }
}

/// Computes the maximum rank size of `L(alpha)` and verifies that it equals
/// the ideal count of the fence with segment `t` deleted, attained on every
/// rank of `[m+1, n-m-1]`.
pub fn rank_plateau(alpha: &Composition, t: usize, limit: usize) -> Result<PlateauInfo> {
    dominant_segment_checked(alpha, t)?;
    let fence = build_fence(alpha);
    let n = fence.n();
    let removed = segment_mask(alpha, t);
    let rest = fence.induced(fence.full_mask() & !removed);
    let m = rest.n();
    let ell = enumerate_ideals(&rest, limit)?.len() as u64;
    let lattice = build_lattice(&fence, limit)?;
    let ranks = lattice.rank_sequence();
    let max = *ranks.iter().max().expect("nonempty rank sequence");
    let (lo, hi) = (m + 1, n - m - 1);
    if max != ell || !(lo..=hi).all(|k| ranks[k] == ell) {
        return Err(Error::ConstructionFailed {
            reason: format!(
                "plateau mismatch for {alpha} at segment {t}: max {max}, expected {ell} on [{lo}, {hi}]"
            ),
        });
    }
    Ok(PlateauInfo { size: ell, lo, hi })
}

/// Direction of the rank-to-rank matching along a dominant segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchDirection {
    /// Maps each ideal of size at most `m` to a cover, by inserting the
    /// lowest segment element missing from it.
    Up,
    /// Maps each ideal of size at least `n - m` to an ideal it covers, by
    /// removing the highest segment element present.
    Down,
}

/// The injective matching certifying unimodality around a dominant segment.
pub fn matching_long_segment(
    alpha: &Composition,
    t: usize,
    direction: MatchDirection,
    limit: usize,
) -> Result<BTreeMap<Ideal, Ideal>> {
    dominant_segment_checked(alpha, t)?;
    let fence = build_fence(alpha);
    let n = fence.n();
    let m = n - (alpha.parts()[t - 1] as usize + 1);
    let chain = segment_chain(alpha, t);
    let lattice = build_lattice(&fence, limit)?;
    let mut map = BTreeMap::new();
    for &ideal in lattice.ideals() {
        match direction {
            MatchDirection::Up => {
                if ideal.size() > m {
                    continue;
                }
                let y = *chain
                    .iter()
                    .find(|&&e| !ideal.contains(e))
                    .expect("an ideal of size <= m misses a segment element");
                let image = ideal.with(y);
                if !fence.is_ideal(image) {
                    return Err(Error::ConstructionFailed {
                        reason: format!(
                            "up-matching image of {:?} is not an ideal",
                            ideal.elements()
                        ),
                    });
                }
                map.insert(ideal, image);
            }
            MatchDirection::Down => {
                if ideal.size() < n - m {
                    continue;
                }
                let x = *chain
                    .iter()
                    .rev()
                    .find(|&&e| ideal.contains(e))
                    .expect("an ideal of size >= n-m meets the segment");
                let image = ideal.without(x);
                if !fence.is_ideal(image) {
                    return Err(Error::ConstructionFailed {
                        reason: format!(
                            "down-matching image of {:?} is not an ideal",
                            ideal.elements()
                        ),
                    });
                }
                map.insert(ideal, image);
            }
        }
    }
    Ok(map)
}
