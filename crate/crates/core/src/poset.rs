//! Labeled posets, fences, d-divided posets, and order-ideal enumeration.
//!
//! Elements are the integers `1..=n`.  A poset carries its cover relations
//! plus a labeling (a bijection onto `1..=n`).  Fences built from a
//! composition use the identity labeling; the three-segment and d-divided
//! constructions install the labelings their chain decompositions need.
//! Subsets are stored as dense bitmasks, so an ideal *is* its membership
//! word once read in label order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::Error;
use crate::{Result, MASK_LIMIT};

/// A subset of the elements `1..=n`, stored as a bitmask (bit `e-1` for
/// element `e`).  Downward closure is a property checked against a poset.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ideal(u64);

impl Ideal {
    pub fn empty() -> Ideal {
        Ideal(0)
    }

    pub fn from_mask(mask: u64) -> Ideal {
        Ideal(mask)
    }

    pub fn from_elements(elements: &[usize]) -> Ideal {
        let mut mask = 0u64;
        for &e in elements {
            mask |= 1 << (e - 1);
        }
        Ideal(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: usize) -> Ideal {
        Ideal(self.0 | 1 << (e - 1))
    }

    pub fn without(self, e: usize) -> Ideal {
        Ideal(self.0 & !(1 << (e - 1)))
    }

    /// Cardinality; equals the ideal's rank in the lattice of ideals.
    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Ideal) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn elements(self) -> Vec<usize> {
        (1..=64).filter(|&e| self.0 >> (e - 1) & 1 == 1).collect()
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ideals order by cardinality first, so sorting a chain sorts by rank.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), self.0).cmp(&(other.size(), other.0))
    }
}

/// A zero-one word `w_1 .. w_n`.  For an ideal `I` of a labeled poset,
/// `w_i = 1` exactly when the element with label `i` lies in `I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    bits: Vec<bool>,
}

impl Word {
    pub fn new(bits: Vec<bool>) -> Word {
        Word { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Value at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i - 1] = value;
    }

    /// Positions holding ones, ascending.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i)).collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::ParseComposition {
                        position: i + 1,
                        token: ch.to_string(),
                    })
                }
            }
        }
        Ok(Word { bits })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A finite poset on `1..=n` given by its cover relations, together with a
/// labeling.  Covers are validated to be acyclic and irredundant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledPoset {
    n: usize,
    covers: Vec<(usize, usize)>,
    labels: Vec<usize>,
    label_to_element: Vec<usize>,
    /// `down[e-1]` is the bitmask of `{ x : x ⊴ e }`, including `e` itself.
    down: Vec<u64>,
}

impl LabeledPoset {
    /// Builds a poset from covers `(lower, upper)` and a labeling.
    pub fn new(n: usize, mut covers: Vec<(usize, usize)>, labels: Vec<usize>) -> Result<Self> {
        if n > MASK_LIMIT {
            return Err(Error::EnumerationLimit {
                n,
                limit: MASK_LIMIT,
            });
        }
        for &(l, u) in &covers {
            if l == 0 || u == 0 || l > n || u > n || l == u {
                return Err(Error::InvalidCover {
                    lower: l,
                    upper: u,
                    n,
                });
            }
        }
        covers.sort_unstable();
        covers.dedup();

        // Kahn's algorithm both checks acyclicity and gives the order in
        // which down-sets can be accumulated.
        let mut lower_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut upper_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(l, u) in &covers {
            lower_covers[u - 1].push(l);
            upper_covers[l - 1].push(u);
        }
        let mut indegree: Vec<usize> = lower_covers.iter().map(|v| v.len()).collect();
        let mut queue: Vec<usize> = (1..=n).filter(|&e| indegree[e - 1] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(e) = queue.pop() {
            topo.push(e);
            for &u in &upper_covers[e - 1] {
                indegree[u - 1] -= 1;
                if indegree[u - 1] == 0 {
                    queue.push(u);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CyclicCovers);
        }

        let mut down = vec![0u64; n];
        for &e in &topo {
            let mut mask = 1u64 << (e - 1);
            for &l in &lower_covers[e - 1] {
                mask |= down[l - 1];
            }
            down[e - 1] = mask;
        }

        // A cover (l, u) is redundant when some other lower cover of u
        // already sits above l.
        for &(l, u) in &covers {
            for &w in &lower_covers[u - 1] {
                if w != l && down[w - 1] >> (l - 1) & 1 == 1 {
                    return Err(Error::RedundantCover { lower: l, upper: u });
                }
            }
        }

        if labels.len() != n {
            return Err(Error::InvalidLabels { n });
        }
        let mut label_to_element = vec![0usize; n];
        for (e0, &lab) in labels.iter().enumerate() {
            if lab == 0 || lab > n || label_to_element[lab - 1] != 0 {
                return Err(Error::InvalidLabels { n });
            }
            label_to_element[lab - 1] = e0 + 1;
        }

        Ok(LabeledPoset {
            n,
            covers,
            labels,
            label_to_element,
            down,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn label_of(&self, e: usize) -> usize {
        self.labels[e - 1]
    }

    pub fn element_with_label(&self, label: usize) -> usize {
        self.label_to_element[label - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Bitmask of `{ x : x ⊴ e }`, including `e`.
    pub fn downset(&self, e: usize) -> u64 {
        self.down[e - 1]
    }

    /// True when `x ⊴ y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.down[y - 1] >> (x - 1) & 1 == 1
    }

    /// True when `x ⊲ y` strictly.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Downward-closure test for an arbitrary subset.
    pub fn is_ideal(&self, subset: Ideal) -> bool {
        for e in 1..=self.n {
            if subset.contains(e) && self.down[e - 1] & !subset.mask() != 0 {
                return false;
            }
        }
        true
    }

    /// Same poset with all covers reversed; labels are kept.
    pub fn dual(&self) -> LabeledPoset {
        let covers = self.covers.iter().map(|&(l, u)| (u, l)).collect();
        LabeledPoset::new(self.n, covers, self.labels.clone())
            .expect("reversing covers preserves validity")
    }

    /// Same covers with a replacement labeling.
    pub fn relabeled(&self, labels: Vec<usize>) -> Result<LabeledPoset> {
        LabeledPoset::new(self.n, self.covers.clone(), labels)
    }

    /// Checks `x ⊴ y  ⇒  label(x) ≤ label(y)`.
    pub fn labeling_is_linear_extension(&self) -> bool {
        self.covers
            .iter()
            .all(|&(l, u)| self.labels[l - 1] < self.labels[u - 1])
    }

    /// One topological order of the elements (used to enumerate each ideal
    /// exactly once).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut lower_counts = vec![0usize; self.n];
        let mut upper_covers: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(l, u) in &self.covers {
            lower_counts[u - 1] += 1;
            upper_covers[l - 1].push(u);
        }
        let mut ready: Vec<usize> = (1..=self.n).filter(|&e| lower_counts[e - 1] == 0).collect();
        ready.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Vec::with_capacity(self.n);
        while let Some(e) = ready.pop() {
            out.push(e);
            for &u in &upper_covers[e - 1] {
                lower_counts[u - 1] -= 1;
                if lower_counts[u - 1] == 0 {
                    // keep the ready stack sorted descending so the smallest
                    // element is popped next
                    let pos = ready.binary_search_by(|x| u.cmp(x)).unwrap_or_else(|p| p);
                    ready.insert(pos, u);
                }
            }
        }
        out
    }

    /// All linear extensions, each as the element sequence `e_1, .., e_n`
    /// listed bottom to top.  Deterministic (lexicographic on sequences).
    pub fn all_linear_extensions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.n);
        let mut placed = 0u64;
        self.extensions_rec(&mut current, &mut placed, &mut out);
        out
    }

    fn extensions_rec(
        &self,
        current: &mut Vec<usize>,
        placed: &mut u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == self.n {
            out.push(current.clone());
            return;
        }
        for e in 1..=self.n {
            let bit = 1u64 << (e - 1);
            if *placed & bit == 0 && self.down[e - 1] & !*placed == bit {
                *placed |= bit;
                current.push(e);
                self.extensions_rec(current, placed, out);
                current.pop();
                *placed &= !bit;
            }
        }
    }

    /// Induced subposet on the elements of `keep`, renumbered to `1..=m` in
    /// ascending element order.  Covers are re-extracted from the restricted
    /// order, so chains through removed elements survive as new covers.
    pub fn induced(&self, keep: u64) -> LabeledPoset {
        let kept: Vec<usize> = (1..=self.n).filter(|&e| keep >> (e - 1) & 1 == 1).collect();
        let m = kept.len();
        let pos: HashMap<usize, usize> =
            kept.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
        let mut covers = Vec::new();
        for (i, &x) in kept.iter().enumerate() {
            for &y in &kept {
                if x != y && self.lt(x, y) {
                    // cover in the restriction: nothing kept strictly between
                    let between = kept
                        .iter()
                        .any(|&w| w != x && w != y && self.lt(x, w) && self.lt(w, y));
                    if !between {
                        covers.push((i + 1, pos[&y]));
                    }
                }
            }
        }
        // labels: relative order of the original labels
        let mut by_label: Vec<usize> = (0..m).collect();
        by_label.sort_by_key(|&i| self.labels[kept[i] - 1]);
        let mut labels = vec![0usize; m];
        for (rank, &i) in by_label.iter().enumerate() {
            labels[i] = rank + 1;
        }
        LabeledPoset::new(m, covers, labels).expect("induced order is valid")
    }

    /// Membership word of `subset` read in label order.
    pub fn word_of(&self, subset: Ideal) -> Word {
        let bits = (1..=self.n)
            .map(|lab| subset.contains(self.label_to_element[lab - 1]))
            .collect();
        Word::new(bits)
    }

    /// Inverse of [`word_of`](Self::word_of).
    pub fn ideal_from_word(&self, word: &Word) -> Ideal {
        let mut mask = 0u64;
        for lab in 1..=self.n {
            if word.get(lab) {
                mask |= 1 << (self.label_to_element[lab - 1] - 1);
            }
        }
        Ideal::from_mask(mask)
    }

    /// Label word of `subset` as a bitmask over label positions.
    pub fn label_mask(&self, subset: Ideal) -> u64 {
        let mut mask = 0u64;
        for e in 1..=self.n {
            if subset.contains(e) {
                mask |= 1 << (self.labels[e - 1] - 1);
            }
        }
        mask
    }

    /// True when the Hasse diagram, viewed as an undirected graph, is a path
    /// (or a single vertex).
    pub fn hasse_is_path(&self) -> bool {
        self.path_walk().is_some()
    }

    /// If the Hasse diagram is a path, returns the elements in path order
    /// together with the up/down orientation of each step, normalized to
    /// start ascending whenever any step exists.
    pub fn path_walk(&self) -> Option<(Vec<usize>, Vec<bool>)> {
        if self.n == 0 {
            return None;
        }
        if self.n == 1 {
            return Some((vec![1], vec![]));
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(l, u) in &self.covers {
            adj[l - 1].push(u);
            adj[u - 1].push(l);
        }
        if self.covers.len() != self.n - 1 {
            return None;
        }
        let ends: Vec<usize> = (1..=self.n).filter(|&e| adj[e - 1].len() == 1).collect();
        if ends.len() != 2 || adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        let walk_from = |start: usize| -> Option<(Vec<usize>, Vec<bool>)> {
            let mut walk = vec![start];
            let mut ups = Vec::new();
            let mut prev = 0usize;
            let mut cur = start;
            while walk.len() < self.n {
                let next = *adj[cur - 1].iter().find(|&&x| x != prev)?;
                ups.push(self.covers.binary_search(&(cur, next)).is_ok());
                walk.push(next);
                prev = cur;
                cur = next;
            }
            Some((walk, ups))
        };
        let (w, u) = walk_from(ends[0])?;
        if u.first() == Some(&true) {
            return Some((w, u));
        }
        walk_from(ends[1])
    }

    /// Reads a fence composition off the Hasse path, if the poset is a path
    /// whose orientation sequence starts ascending.
    pub fn path_composition(&self) -> Option<(Composition, Vec<usize>)> {
        let (walk, ups) = self.path_walk()?;
        if ups.is_empty() || !ups[0] {
            return None;
        }
        let mut parts = Vec::new();
        let mut run = 1u32;
        for i in 1..ups.len() {
            if ups[i] == ups[i - 1] {
                run += 1;
            } else {
                parts.push(run);
                run = 1;
            }
        }
        parts.push(run);
        Some((Composition::new(parts).ok()?, walk))
    }
}

/// Builds the fence of a composition: segment `i` is a maximal chain of
/// length `parts[i-1]`, consecutive segments alternate ascending/descending
/// and share an endpoint.  Elements use the identity labeling.
pub fn build_fence(alpha: &Composition) -> LabeledPoset {
    let n = alpha.element_count();
    let mut covers = Vec::with_capacity(n - 1);
    let mut pos = 1usize;
    for (i, &part) in alpha.parts().iter().enumerate() {
        for j in 0..part as usize {
            let (x, y) = (pos + j, pos + j + 1);
            if i % 2 == 0 {
                covers.push((x, y));
            } else {
                covers.push((y, x));
            }
        }
        pos += part as usize;
    }
    LabeledPoset::new(n, covers, (1..=n).collect()).expect("fence covers form a path")
}

/// Builds the d-divided poset on `1..=n`: descending chains of `d` elements
/// joined bottom-to-next-top, ending with an `r`-element chain where
/// `n = qd + r`.  The identity labeling is a linear extension.
pub fn build_d_divided(n: usize, d: usize) -> Result<LabeledPoset> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidDDivided { n, d });
    }
    let q = n / d;
    let r = n % d;
    let mut covers = Vec::new();
    for k in 1..=q {
        let lo = (k - 1) * d + 1;
        for e in lo..k * d {
            covers.push((e, e + 1));
        }
    }
    for e in q * d + 1..n {
        covers.push((e, e + 1));
    }
    for k in 1..q {
        covers.push(((k - 1) * d + 1, (k + 1) * d));
    }
    if r > 0 && q >= 1 {
        covers.push(((q - 1) * d + 1, n));
    }
    LabeledPoset::new(n, covers, (1..=n).collect())
}

/// Builds the three-segment fence `F(a, b, c)` with the chain-grouping
/// labeling: the middle segment minus its maximum gets `1..=b` bottom to
/// top, the third segment minus its minimum gets `b+1..=b+c`, and the first
/// segment gets the rest.  The labeling is a linear extension.
pub fn label_three_segment(a: u32, b: u32, c: u32) -> Result<LabeledPoset> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidThreeSegment { a, b, c });
    }
    let alpha = Composition::new(vec![a, b, c])?;
    let fence = build_fence(&alpha);
    let (a, b, c) = (a as usize, b as usize, c as usize);
    let n = fence.n();
    let mut labels = vec![0usize; n];
    for (offset, x) in (a + 2..=a + b + 1).rev().enumerate() {
        labels[x - 1] = offset + 1;
    }
    for (offset, x) in (a + b + 2..=n).enumerate() {
        labels[x - 1] = b + offset + 1;
    }
    for (offset, x) in (1..=a + 1).enumerate() {
        labels[x - 1] = b + c + offset + 1;
    }
    let labeled = fence.relabeled(labels)?;
    debug_assert!(labeled.labeling_is_linear_extension());
    Ok(labeled)
}

/// Enumerates every order ideal of `p` exactly once.
///
/// Depth-first extension: elements are added in increasing topological
/// position, and a candidate must be a minimal element of the complement,
/// so each ideal is generated along its unique sorted insertion order.
pub fn enumerate_ideals(p: &LabeledPoset, limit: usize) -> Result<Vec<Ideal>> {
    let cap = limit.min(MASK_LIMIT);
    if p.n() > cap {
        return Err(Error::EnumerationLimit {
            n: p.n(),
            limit: cap,
        });
    }
    let order = p.linear_extension();
    let mut out = Vec::new();
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((mask, from)) = stack.pop() {
        out.push(Ideal::from_mask(mask));
        for (pos, &e) in order.iter().enumerate().skip(from) {
            let bit = 1u64 << (e - 1);
            if mask & bit == 0 && p.downset(e) & !mask == bit {
                stack.push((mask | bit, pos + 1));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Ideal count of a poset whose Hasse diagram is a path, by a linear scan.
/// Independent of [`enumerate_ideals`], so the two can cross-check.
pub fn path_ideal_count(p: &LabeledPoset) -> Option<u128> {
    if p.n() == 0 {
        return Some(1);
    }
    let (walk, ups) = p.path_walk()?;
    // state: number of ideals with the previous walk vertex out/in
    let (mut out_count, mut in_count) = (1u128, 1u128);
    for i in 1..walk.len() {
        // step i-1 joins walk[i-1] and walk[i]; ups[i-1] says lower -> upper
        let (new_out, new_in) = if ups[i - 1] {
            // walk[i-1] ◁ walk[i]: forbid (out, in)
            (out_count + in_count, in_count)
        } else {
            // walk[i-1] ▷ walk[i]: forbid (in, out)
            (out_count, out_count + in_count)
        };
        out_count = new_out;
        in_count = new_in;
    }
    Some(out_count + in_count)
}
