//! Chain decompositions of ideal lattices: cores, the grid construction for
//! two segments, core grouping for three segments and d-divided posets, the
//! greedy lexicographic decomposition, and lifting along a long segment.
//!
//! A word's *core* is its maximal nested pairing of zeros with later ones,
//! possibly extended by frozen letters (three segments) or a self-paired
//! letter (d-divided).  Ideals sharing a core form one saturated chain:
//! start from the word with every free letter zero and flip free zeros to
//! ones left to right.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::composition::Composition;
use crate::error::Error;
use crate::lattice::{build_lattice, segment_chain, IdealLattice};
use crate::polynomial::shape_classify_counts;
use crate::poset::{build_d_divided, build_fence, label_three_segment, Ideal, LabeledPoset, Word};
use crate::Result;

/// A saturated ascending chain of ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub ideals: Vec<Ideal>,
}

impl Chain {
    /// Twice the center: rank of the bottom plus rank of the top.
    pub fn center2(&self) -> usize {
        self.ideals.first().map_or(0, |i| i.size()) + self.ideals.last().map_or(0, |i| i.size())
    }

    /// Rank interval `[rk bottom, rk top]`.
    pub fn interval(&self) -> (usize, usize) {
        (
            self.ideals.first().map_or(0, |i| i.size()),
            self.ideals.last().map_or(0, |i| i.size()),
        )
    }
}

/// Classification of a chain decomposition, strongest applicable kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CdClass {
    /// Partition into saturated chains with no further structure.
    Plain,
    /// Rank intervals pairwise nested.
    Nested,
    /// Every doubled center is `n` or `n - 1`.
    BottomCentered,
    /// Every doubled center is `n` or `n + 1`.
    TopCentered,
    /// Every doubled center is exactly `n`.
    Symmetric,
}

impl CdClass {
    pub fn is_nested(self) -> bool {
        !matches!(self, CdClass::Plain)
    }

    pub fn is_centered(self) -> bool {
        matches!(
            self,
            CdClass::BottomCentered | CdClass::TopCentered | CdClass::Symmetric
        )
    }
}

impl fmt::Display for CdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CdClass::Plain => "plain",
            CdClass::Nested => "nested",
            CdClass::BottomCentered => "bottom_centered",
            CdClass::TopCentered => "top_centered",
            CdClass::Symmetric => "symmetric",
        };
        write!(f, "{s}")
    }
}

/// A partition of an ideal lattice into saturated chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Chain>,
    pub classification: CdClass,
}

/// The core of an ideal's word: matched pairs, frozen letters with their
/// values, and at most one self-paired letter (d-divided posets only).
/// Letters in none of these are free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Core {
    /// Nested pairs `(i, j)` with `w_i = 0`, `w_j = 1`, `i < j`.
    pub pairs: Vec<(usize, usize)>,
    /// Frozen positions with their letter values.
    pub frozen: Vec<(usize, bool)>,
    /// Self-paired position, carrying the letter value one.
    pub self_paired: Option<usize>,
}

impl Core {
    pub fn empty() -> Core {
        Core {
            pairs: Vec::new(),
            frozen: Vec::new(),
            self_paired: None,
        }
    }

    pub fn frozen_positions(&self) -> Vec<usize> {
        self.frozen.iter().map(|&(p, _)| p).collect()
    }

    /// Positions of `1..=n` in no pair, not frozen, and not self-paired.
    pub fn free_positions(&self, n: usize) -> Vec<usize> {
        let mut used = vec![false; n + 1];
        for &(i, j) in &self.pairs {
            used[i] = true;
            used[j] = true;
        }
        for &(f, _) in &self.frozen {
            used[f] = true;
        }
        if let Some(p) = self.self_paired {
            used[p] = true;
        }
        (1..=n).filter(|&p| !used[p]).collect()
    }

    /// The word with core values in place and every free letter zero: the
    /// bottom of this core's chain.
    pub fn bottom_word(&self, n: usize) -> Word {
        let mut bits = vec![false; n];
        for &(_, j) in &self.pairs {
            bits[j - 1] = true;
        }
        for &(f, v) in &self.frozen {
            bits[f - 1] = v;
        }
        if let Some(p) = self.self_paired {
            bits[p - 1] = true;
        }
        Word::new(bits)
    }
}

/// The maximal nested pairing of the word: repeatedly match a zero to a
/// later one with everything strictly between already matched.  Computed by
/// a single bracket-matching scan.
pub fn gk_core(w: &Word) -> Vec<(usize, usize)> {
    gk_core_with_self(w, None)
}

/// Bracket matching that treats `self_paired` (if any) as an already
/// matched one-letter block, transparent to the pairs forming around it.
fn gk_core_with_self(w: &Word, self_paired: Option<usize>) -> Vec<(usize, usize)> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for i in 1..=w.len() {
        if Some(i) == self_paired {
            continue;
        }
        if !w.get(i) {
            stack.push(i);
        } else if let Some(j) = stack.pop() {
            pairs.push((j, i));
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Pairs of the maximal nested matching restricted to positions
/// `from..=w.len()`, reported with absolute positions.
fn gk_core_suffix(w: &Word, from: usize) -> Vec<(usize, usize)> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for i in from..=w.len() {
        if !w.get(i) {
            stack.push(i);
        } else if let Some(j) = stack.pop() {
            pairs.push((j, i));
        }
    }
    pairs.sort_unstable();
    pairs
}

/// The three-segment fence `F(a, b, c)` with its chain-grouping labeling.
pub struct ThreeSegmentFence {
    a: u32,
    c: u32,
    poset: LabeledPoset,
}

impl ThreeSegmentFence {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        let poset = label_three_segment(a, b, c)?;
        Ok(ThreeSegmentFence { a, c, poset })
    }

    pub fn poset(&self) -> &LabeledPoset {
        &self.poset
    }

    /// Matched pairs of the ideal's word plus the frozen letters: unmatched
    /// positions forced by a pair through the poset order.
    pub fn core(&self, ideal: Ideal) -> Result<Core> {
        if self.a < self.c {
            return Err(Error::FirstSegmentShorter {
                a: self.a,
                c: self.c,
            });
        }
        if !self.poset.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let n = self.poset.n();
        let w = self.poset.word_of(ideal);
        let pairs = gk_core(&w);
        let mut matched = vec![false; n + 1];
        for &(i, j) in &pairs {
            matched[i] = true;
            matched[j] = true;
        }
        let mut frozen = Vec::new();
        for f in 1..=n {
            if matched[f] {
                continue;
            }
            let ef = self.poset.element_with_label(f);
            let freezes = pairs.iter().any(|&(i, j)| {
                let ei = self.poset.element_with_label(i);
                let ej = self.poset.element_with_label(j);
                self.poset.lt(ei, ef) || self.poset.lt(ef, ej)
            });
            if freezes {
                frozen.push((f, w.get(f)));
            }
        }
        Ok(Core {
            pairs,
            frozen,
            self_paired: None,
        })
    }
}

/// Convenience wrapper building the fence per call.
pub fn core_three_segment(a: u32, b: u32, c: u32, ideal: Ideal) -> Result<Core> {
    ThreeSegmentFence::new(a, b, c)?.core(ideal)
}

/// The d-divided poset with its core computation.
pub struct DDividedPoset {
    n: usize,
    poset: LabeledPoset,
    /// Lowest element of the right-most chain of `d` elements, when one
    /// exists.
    chain_bottom: Option<usize>,
}

impl DDividedPoset {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let poset = build_d_divided(n, d)?;
        let q = n / d;
        let chain_bottom = (q >= 1).then(|| (q - 1) * d + 1);
        Ok(DDividedPoset {
            n,
            poset,
            chain_bottom,
        })
    }

    pub fn poset(&self) -> &LabeledPoset {
        &self.poset
    }

    /// Plain matched pairs, unless the final element is matched within the
    /// suffix starting at the last full chain's bottom `p`; then `w_p` pairs
    /// with itself and the matching re-forms around it.
    pub fn core(&self, ideal: Ideal) -> Result<Core> {
        if !self.poset.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let w = self.poset.word_of(ideal);
        if let Some(p) = self.chain_bottom {
            let suffix_pairs = gk_core_suffix(&w, p);
            if suffix_pairs.iter().any(|&(_, j)| j == self.n) {
                debug_assert!(w.get(p), "a matched final one forces w_p = 1");
                return Ok(Core {
                    pairs: gk_core_with_self(&w, Some(p)),
                    frozen: Vec::new(),
                    self_paired: Some(p),
                });
            }
        }
        Ok(Core {
            pairs: gk_core(&w),
            frozen: Vec::new(),
            self_paired: None,
        })
    }
}

/// Convenience wrapper building the poset per call.
pub fn core_d_divided(n: usize, d: usize, ideal: Ideal) -> Result<Core> {
    DDividedPoset::new(n, d)?.core(ideal)
}

/// Groups the lattice's ideals by core and builds each group's chain by
/// flipping free zeros to ones left to right from the core's bottom word.
fn chains_from_cores<F>(
    poset: &LabeledPoset,
    lattice: &IdealLattice,
    core_of: F,
) -> Result<Vec<Chain>>
where
    F: Fn(Ideal) -> Result<Core>,
{
    let n = poset.n();
    let mut cores = BTreeSet::new();
    for &ideal in lattice.ideals() {
        cores.insert(core_of(ideal)?);
    }
    let mut chains = Vec::with_capacity(cores.len());
    for core in cores {
        let mut word = core.bottom_word(n);
        let mut ideals = Vec::new();
        let ideal = poset.ideal_from_word(&word);
        if !lattice.contains(ideal) {
            return Err(Error::ConstructionFailed {
                reason: format!("chain bottom {word} is not an ideal"),
            });
        }
        ideals.push(ideal);
        for free in core.free_positions(n) {
            word.set(free, true);
            let ideal = poset.ideal_from_word(&word);
            if !lattice.contains(ideal) {
                return Err(Error::ConstructionFailed {
                    reason: format!("chain step {word} is not an ideal"),
                });
            }
            ideals.push(ideal);
        }
        chains.push(Chain { ideals });
    }
    chains.sort_by_key(|c| c.ideals[0]);
    Ok(chains)
}

fn doubled_centers(chains: &[Chain]) -> BTreeSet<usize> {
    chains.iter().map(|c| c.center2()).collect()
}

/// Validates a constructed decomposition: doubled centers restricted to
/// `allowed`, symmetry exactly as promised, and a full partition into
/// nested saturated chains.
fn validated_core_cd(
    lattice: &IdealLattice,
    chains: Vec<Chain>,
    allowed: &[usize],
    expect_symmetric: bool,
    what: &str,
) -> Result<ChainDecomposition> {
    let n = lattice.top_rank();
    let centers = doubled_centers(&chains);
    if !centers.iter().all(|c| allowed.contains(c)) {
        return Err(Error::ConstructionFailed {
            reason: format!("{what}: centers {centers:?} outside {allowed:?}"),
        });
    }
    let classification = if centers.iter().all(|&c| c == n) {
        CdClass::Symmetric
    } else if centers.iter().all(|&c| c == n || c == n + 1) {
        CdClass::TopCentered
    } else {
        CdClass::BottomCentered
    };
    if expect_symmetric != (classification == CdClass::Symmetric) {
        return Err(Error::ConstructionFailed {
            reason: format!(
                "{what}: expected symmetric = {expect_symmetric}, got {classification}"
            ),
        });
    }
    let cd = ChainDecomposition {
        chains,
        classification,
    };
    let report = validate_cd(lattice, &cd);
    if !report.is_valid_ncd() {
        return Err(Error::ConstructionFailed {
            reason: format!("{what}: {}", report.violations.join("; ")),
        });
    }
    Ok(cd)
}

/// Chain decomposition of `L(a, b, c)` by core grouping.  For `a >= c` the
/// chains are grouped directly and the result is bottom centered, symmetric
/// exactly when `a = c`; for `a < c` the decomposition is built on the
/// reversed composition and carried through complementation, giving a top
/// centered result.
pub fn cd_three_segment(a: u32, b: u32, c: u32, limit: usize) -> Result<ChainDecomposition> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidThreeSegment { a, b, c });
    }
    if a >= c {
        let fence = ThreeSegmentFence::new(a, b, c)?;
        let lattice = build_lattice(fence.poset(), limit)?;
        let chains = chains_from_cores(fence.poset(), &lattice, |i| fence.core(i))?;
        let n = fence.poset().n();
        validated_core_cd(&lattice, chains, &[n - 1, n], a == c, "three-segment")
    } else {
        let reversed = cd_three_segment(c, b, a, limit)?;
        let alpha = Composition::new(vec![a, b, c])?;
        let fence = build_fence(&alpha);
        let n = fence.n();
        let full = fence.full_mask();
        let mut chains: Vec<Chain> = reversed
            .chains
            .iter()
            .map(|chain| Chain {
                ideals: chain
                    .ideals
                    .iter()
                    .rev()
                    .map(|i| {
                        // complement in the dual, read through path reversal
                        let complement = full & !i.mask();
                        Ideal::from_mask(complement.reverse_bits() >> (64 - n))
                    })
                    .collect(),
            })
            .collect();
        chains.sort_by_key(|chain| chain.ideals[0]);
        let lattice = build_lattice(&fence, limit)?;
        validated_core_cd(
            &lattice,
            chains,
            &[n, n + 1],
            false,
            "three-segment reflected",
        )
    }
}

/// Chain decomposition of `L(a, b)`: the symmetric decomposition of the
/// product of two chains (everything except the full fence), with the top
/// appended to the chain through the product's bottom and top.  Bottom
/// centered.
pub fn cd_two_segment(a: u32, b: u32, limit: usize) -> Result<ChainDecomposition> {
    if a < 1 || b < 1 {
        return Err(Error::ZeroPart {
            index: if a < 1 { 1 } else { 2 },
        });
    }
    let alpha = Composition::new(vec![a, b])?;
    let fence = build_fence(&alpha);
    let lattice = build_lattice(&fence, limit)?;
    let (a, b) = (a as usize, b as usize);
    let n = fence.n();
    // grid point (i, j): first i elements of the first segment (minus the
    // shared maximum) plus the bottom j elements of the second
    let grid_ideal = |i: usize, j: usize| -> Ideal {
        let mut ideal = Ideal::empty();
        for e in 1..=i {
            ideal = ideal.with(e);
        }
        for k in 0..j {
            ideal = ideal.with(n - k);
        }
        ideal
    };
    let mut chains = Vec::new();
    for k in 0..=a.min(b) {
        let mut ideals: Vec<Ideal> = (0..=a - k).map(|i| grid_ideal(i, k)).collect();
        ideals.extend((k + 1..=b).map(|j| grid_ideal(a - k, j)));
        if k == 0 {
            ideals.push(Ideal::from_mask(fence.full_mask()));
        }
        chains.push(Chain { ideals });
    }
    chains.sort_by_key(|chain| chain.ideals[0]);
    validated_core_cd(&lattice, chains, &[n - 1, n], false, "two-segment")
}

/// Chain decomposition of the d-divided poset's lattice by core grouping:
/// top centered, symmetric exactly when every chain has `d` elements
/// (`d | n`, or degenerately `n < d` where the poset is a bare chain).
pub fn cd_d_divided(n: usize, d: usize, limit: usize) -> Result<ChainDecomposition> {
    let dd = DDividedPoset::new(n, d)?;
    let lattice = build_lattice(dd.poset(), limit)?;
    let chains = chains_from_cores(dd.poset(), &lattice, |i| dd.core(i))?;
    let expect_symmetric = n.is_multiple_of(d) || n < d;
    validated_core_cd(&lattice, chains, &[n, n + 1], expect_symmetric, "d-divided")
}

/// Order used to compare ideals as subsets of `1..=n` via their labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetOrder {
    /// Lexicographic on the sorted element lists, shorter-is-less on
    /// exhaustion.
    SortedList,
    /// Membership words compared position by position with `1 < 0`.
    MembershipWord,
}

/// Compares two label masks under the chosen subset order.
pub fn subset_cmp(order: SubsetOrder, a: u64, b: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let diff = a ^ b;
    if diff == 0 {
        return Equal;
    }
    let low = diff & diff.wrapping_neg();
    let a_has = a & low != 0;
    match order {
        SubsetOrder::MembershipWord => {
            if a_has {
                Less
            } else {
                Greater
            }
        }
        SubsetOrder::SortedList => {
            let above = !(low | (low - 1));
            if a_has {
                if b & above == 0 {
                    Greater
                } else {
                    Less
                }
            } else if a & above == 0 {
                Less
            } else {
                Greater
            }
        }
    }
}

/// Greedy chain decomposition: each chain starts at the minimum-rank,
/// lexicographically least remaining ideal and repeatedly extends by the
/// lexicographically least remaining cover.  Always a partition into
/// saturated chains; nestedness is whatever the classification reports.
pub fn lex_cd(p: &LabeledPoset, order: SubsetOrder, limit: usize) -> Result<ChainDecomposition> {
    let lattice = build_lattice(p, limit)?;
    let label_masks: Vec<u64> = lattice.ideals().iter().map(|&i| p.label_mask(i)).collect();
    let mut remaining = vec![true; lattice.len()];
    let mut remaining_count = lattice.len();
    let mut chains = Vec::new();
    while remaining_count > 0 {
        let start = (0..lattice.len())
            .filter(|&i| remaining[i])
            .min_by(|&x, &y| {
                lattice.ideals()[x]
                    .size()
                    .cmp(&lattice.ideals()[y].size())
                    .then(subset_cmp(order, label_masks[x], label_masks[y]))
            })
            .expect("nonempty remainder");
        let mut chain = Vec::new();
        let mut cur = start;
        loop {
            remaining[cur] = false;
            remaining_count -= 1;
            chain.push(lattice.ideals()[cur]);
            let next = lattice
                .covers_up(cur)
                .iter()
                .copied()
                .filter(|&j| remaining[j])
                .min_by(|&x, &y| subset_cmp(order, label_masks[x], label_masks[y]));
            match next {
                Some(j) => cur = j,
                None => break,
            }
        }
        chains.push(Chain { ideals: chain });
    }
    let mut cd = ChainDecomposition {
        chains,
        classification: CdClass::Plain,
    };
    cd.classification = validate_cd(&lattice, &cd).classification;
    Ok(cd)
}

/// Lifts a nested chain decomposition of `L(alpha)` to one of `L(beta)`,
/// where `beta` grows the strictly dominant segment `t` by one.  The parts
/// below and above the middle transport through the two contraction
/// bijections; the new middle rank is filled by inserting the lowest
/// missing segment element.  Classification is preserved.
pub fn lift_ncd(
    alpha: &Composition,
    t: usize,
    ncd: &ChainDecomposition,
    limit: usize,
) -> Result<ChainDecomposition> {
    let s = alpha.segment_count();
    if t == 0 || t > s {
        return Err(Error::SegmentIndex { t, s });
    }
    let part = alpha.parts()[t - 1];
    if part <= alpha.total() - part {
        return Err(Error::DominanceRequired { t });
    }
    let fence = build_fence(alpha);
    let lattice = build_lattice(&fence, limit)?;
    let report = validate_cd(&lattice, ncd);
    if !report.is_valid_ncd() {
        return Err(Error::NotAnNcd {
            reason: report.violations.join("; "),
        });
    }

    let beta = alpha.with_part(t, part + 1)?;
    let grown = build_fence(&beta);
    let grown_lattice = build_lattice(&grown, limit)?;

    let n = fence.n();
    let m = n - (part as usize + 1);
    let mid = n - m - 1;
    let seg_start = alpha.segment_start(t);
    let seg_end = seg_start + part as usize;
    let ascending = t % 2 == 1;
    // index of the segment's top (below which the new element is inserted)
    // and of its bottom, in the grown fence
    let top_lo = if ascending { seg_end } else { seg_start };
    let bottom_lo = if ascending { seg_start } else { seg_end };
    let grown_segment = segment_chain(&beta, t);

    // ideals of rank <= mid avoid the segment's top; the bijection inserts
    // an empty slot where the grown fence's extra top element sits
    let below = |mask: u64| -> u64 {
        debug_assert_eq!(mask >> (top_lo - 1) & 1, 0);
        let keep = mask & ((1u64 << (top_lo - 1)) - 1);
        let shift = mask & !((1u64 << (top_lo - 1)) - 1);
        keep | shift << 1
    };
    // ideals of rank >= mid + 1 contain the segment's bottom; the bijection
    // duplicates it into the grown fence's extra bottom element
    let above = |mask: u64| -> u64 {
        debug_assert_eq!(mask >> (bottom_lo - 1) & 1, 1);
        let keep = mask & ((1u64 << bottom_lo) - 1);
        let shift = mask & !((1u64 << bottom_lo) - 1);
        keep | shift << 1 | 1 << bottom_lo
    };

    let mut chains = Vec::with_capacity(ncd.chains.len());
    for chain in &ncd.chains {
        let mut ideals: Vec<Ideal> = chain
            .ideals
            .iter()
            .filter(|i| i.size() <= mid)
            .map(|i| Ideal::from_mask(below(i.mask())))
            .collect();
        if chain.ideals.iter().any(|i| i.size() == mid) {
            let last = *ideals.last().expect("chain reaches the middle rank");
            let insert = *grown_segment
                .iter()
                .find(|&&e| !last.contains(e))
                .expect("the segment is never full at the middle rank");
            ideals.push(last.with(insert));
        }
        ideals.extend(
            chain
                .ideals
                .iter()
                .filter(|i| i.size() > mid)
                .map(|i| Ideal::from_mask(above(i.mask()))),
        );
        chains.push(Chain { ideals });
    }
    chains.sort_by_key(|chain| chain.ideals[0]);
    let lifted = ChainDecomposition {
        chains,
        classification: ncd.classification,
    };
    let lifted_report = validate_cd(&grown_lattice, &lifted);
    if !lifted_report.is_valid_ncd() {
        return Err(Error::ConstructionFailed {
            reason: format!("lift: {}", lifted_report.violations.join("; ")),
        });
    }
    let preserved = match ncd.classification {
        CdClass::Plain | CdClass::Nested => lifted_report.classification.is_nested(),
        class => lifted_report.classification == class,
    };
    if !preserved {
        return Err(Error::ConstructionFailed {
            reason: format!(
                "lift changed classification from {} to {}",
                ncd.classification, lifted_report.classification
            ),
        });
    }
    Ok(ChainDecomposition {
        classification: lifted_report.classification,
        ..lifted
    })
}

/// Full validation report for a chain decomposition against its lattice.
#[derive(Clone, Debug)]
pub struct CdReport {
    /// Every ideal of the lattice appears in exactly one chain.
    pub partition: bool,
    /// Consecutive chain entries are covers in the lattice.
    pub saturated: bool,
    /// Rank intervals are pairwise nested.
    pub nested: bool,
    /// Strongest classification that holds (Plain when not even a valid CD).
    pub classification: CdClass,
    /// The lattice's own rank sequence is unimodal.
    pub rank_unimodal: bool,
    /// Centered implies nested implies rank-unimodal, on this instance.
    pub implication_ok: bool,
    pub violations: Vec<String>,
}

impl CdReport {
    pub fn is_valid_cd(&self) -> bool {
        self.partition && self.saturated
    }

    pub fn is_valid_ncd(&self) -> bool {
        self.is_valid_cd() && self.nested
    }
}

/// Checks partition, saturation, nestedness, and centered type, plus the
/// implication chain centered => nested => rank-unimodal on this instance.
pub fn validate_cd(lattice: &IdealLattice, cd: &ChainDecomposition) -> CdReport {
    let n = lattice.top_rank();
    let mut violations = Vec::new();

    let mut seen = vec![0usize; lattice.len()];
    let mut unknown = 0usize;
    for chain in &cd.chains {
        for ideal in &chain.ideals {
            match lattice.index_of(*ideal) {
                Some(i) => seen[i] += 1,
                None => unknown += 1,
            }
        }
    }
    let partition = unknown == 0 && seen.iter().all(|&c| c == 1);
    if !partition {
        let missing = seen.iter().filter(|&&c| c == 0).count();
        let repeated = seen.iter().filter(|&&c| c > 1).count();
        violations.push(format!(
            "not a partition: {unknown} unknown, {missing} missing, {repeated} repeated ideals"
        ));
    }

    let mut saturated = true;
    for (ci, chain) in cd.chains.iter().enumerate() {
        if chain.ideals.is_empty() {
            saturated = false;
            violations.push(format!("chain {ci} is empty"));
            continue;
        }
        for w in chain.ideals.windows(2) {
            if !lattice.is_cover(w[0], w[1]) {
                saturated = false;
                violations.push(format!(
                    "chain {ci}: {:?} to {:?} is not a cover",
                    w[0].elements(),
                    w[1].elements()
                ));
            }
        }
    }

    let mut intervals: Vec<(usize, usize)> = cd.chains.iter().map(|c| c.interval()).collect();
    intervals.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let nested = intervals.windows(2).all(|w| w[1].1 <= w[0].1);
    if !nested {
        violations.push("rank intervals are not pairwise nested".into());
    }

    let centers = doubled_centers(&cd.chains);
    let classification = if !(partition && saturated) {
        CdClass::Plain
    } else if centers.iter().all(|&c| c == n) {
        CdClass::Symmetric
    } else if centers.iter().all(|&c| c == n || c == n + 1) {
        CdClass::TopCentered
    } else if centers.iter().all(|&c| c == n || c + 1 == n) {
        CdClass::BottomCentered
    } else if nested {
        CdClass::Nested
    } else {
        CdClass::Plain
    };

    let rank_unimodal = shape_classify_counts(&lattice.rank_sequence()).unimodal;
    let mut implication_ok = true;
    if classification.is_centered() && !nested {
        implication_ok = false;
        violations.push("centered decomposition is not nested".into());
    }
    if partition && saturated && nested && !rank_unimodal {
        implication_ok = false;
        violations.push("nested decomposition over a non-unimodal rank sequence".into());
    }

    CdReport {
        partition,
        saturated,
        nested,
        classification,
        rank_unimodal,
        implication_ok,
        violations,
    }
}
