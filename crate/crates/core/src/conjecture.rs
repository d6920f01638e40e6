//! Executable checks for the rank-sequence conjectures: unimodality, the
//! interlacing-shape trichotomy, existence of centered chain
//! decompositions, and nestedness of lexicographic decompositions, plus a
//! sweep runner over bounded composition families.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::chains::{
    cd_d_divided, cd_three_segment, cd_two_segment, lex_cd, lift_ncd, validate_cd, CdClass, Chain,
    ChainDecomposition, SubsetOrder,
};
use crate::composition::Composition;
use crate::error::Error;
use crate::lattice::{build_lattice, IdealLattice};
use crate::polynomial::{rank_poly_recursive, ShapeFlags};
use crate::poset::{build_d_divided, build_fence, Ideal};
use crate::Result;

/// Sum-of-parts cap for checks that only need the polynomial recursion.
pub const RECURSION_SUM_CAP: u32 = 64;

/// Largest lattice the exhaustive centered-decomposition search accepts.
pub const SEARCH_CAP: usize = 200;

/// The shape the trichotomy predicts for a rank sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictedShape {
    AllOnes,
    Symmetric,
    TopInterlacing,
    BottomInterlacing,
}

impl PredictedShape {
    /// The all-ones sequence counts as symmetric wherever shapes compare.
    pub fn normalized(self) -> PredictedShape {
        match self {
            PredictedShape::AllOnes => PredictedShape::Symmetric,
            other => other,
        }
    }

    /// The centered-decomposition class this shape corresponds to.
    pub fn centered_class(self) -> CdClass {
        match self.normalized() {
            PredictedShape::Symmetric => CdClass::Symmetric,
            PredictedShape::TopInterlacing => CdClass::TopCentered,
            PredictedShape::BottomInterlacing => CdClass::BottomCentered,
            PredictedShape::AllOnes => unreachable!("normalized"),
        }
    }
}

impl fmt::Display for PredictedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PredictedShape::AllOnes => "all_ones",
            PredictedShape::Symmetric => "symmetric",
            PredictedShape::TopInterlacing => "top_interlacing",
            PredictedShape::BottomInterlacing => "bottom_interlacing",
        };
        write!(f, "{s}")
    }
}

/// Predicts the rank-sequence shape of a composition: single segments give
/// the all-ones sequence, even segment counts are bottom interlacing, and
/// odd counts compare the end parts, recursing on the interior (with top
/// and bottom swapping) when they tie.
pub fn predict_shape(alpha: &Composition) -> PredictedShape {
    let parts = alpha.parts();
    let s = parts.len();
    if s == 1 {
        return PredictedShape::AllOnes;
    }
    if s.is_multiple_of(2) {
        return PredictedShape::BottomInterlacing;
    }
    if parts[0] > parts[s - 1] {
        PredictedShape::BottomInterlacing
    } else if parts[0] < parts[s - 1] {
        PredictedShape::TopInterlacing
    } else {
        let interior =
            Composition::new(parts[1..s - 1].to_vec()).expect("interior of an odd composition");
        match predict_shape(&interior).normalized() {
            PredictedShape::Symmetric => PredictedShape::Symmetric,
            PredictedShape::TopInterlacing => PredictedShape::BottomInterlacing,
            PredictedShape::BottomInterlacing => PredictedShape::TopInterlacing,
            PredictedShape::AllOnes => unreachable!("normalized"),
        }
    }
}

/// Classifies a computed rank sequence into the trichotomy, symmetric
/// taking precedence over the interlacing shapes.
pub fn trichotomy(flags: &ShapeFlags) -> Option<PredictedShape> {
    if flags.symmetric {
        Some(PredictedShape::Symmetric)
    } else if flags.bottom_interlacing {
        Some(PredictedShape::BottomInterlacing)
    } else if flags.top_interlacing {
        Some(PredictedShape::TopInterlacing)
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// One check outcome; failures always carry a reproducible witness.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub target: CheckKind,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Rank sequence is unimodal.
    Unimodal,
    /// Rank sequence matches the predicted trichotomy shape.
    Shape,
    /// A centered chain decomposition of the predicted type exists.
    Centered,
    /// Some labeling in scope yields a nested lexicographic decomposition.
    Lex,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckKind::Unimodal => "unimodal",
            CheckKind::Shape => "shape",
            CheckKind::Centered => "centered",
            CheckKind::Lex => "lex",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckKind> {
        match s {
            "unimodal" => Ok(CheckKind::Unimodal),
            "shape" => Ok(CheckKind::Shape),
            "centered" => Ok(CheckKind::Centered),
            "lex" => Ok(CheckKind::Lex),
            other => Err(Error::ParseComposition {
                position: 1,
                token: other.to_string(),
            }),
        }
    }
}

fn ranks_json(poly: &crate::polynomial::RankPolynomial) -> serde_json::Value {
    match poly.coeffs_u64() {
        Some(v) => json!(v),
        None => json!(poly
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()),
    }
}

/// Checks rank unimodality via the polynomial recursion; failures carry the
/// sequence and the position of the dip.
pub fn check_unimodal(alpha: &Composition) -> ConjectureReport {
    if alpha.total() > RECURSION_SUM_CAP {
        return ConjectureReport {
            target: CheckKind::Unimodal,
            instance: alpha.to_string(),
            verdict: Verdict::Inconclusive,
            witness: None,
            detail: Some(format!(
                "sum of parts exceeds recursion cap {RECURSION_SUM_CAP}"
            )),
        };
    }
    let poly = rank_poly_recursive(alpha);
    let coeffs = poly.coeffs();
    let mut dip = None;
    let mut falling = false;
    for k in 1..coeffs.len() {
        if coeffs[k] < coeffs[k - 1] {
            falling = true;
        } else if falling && coeffs[k] > coeffs[k - 1] {
            dip = Some(k - 1);
            break;
        }
    }
    ConjectureReport {
        target: CheckKind::Unimodal,
        instance: alpha.to_string(),
        verdict: if dip.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witness: Some(json!({ "ranks": ranks_json(&poly), "dip_at": dip })),
        detail: None,
    }
}

/// Checks the trichotomy: the computed rank sequence, classified with
/// symmetric taking precedence, must match the predicted shape.
pub fn check_shape(alpha: &Composition) -> ConjectureReport {
    if alpha.total() > RECURSION_SUM_CAP {
        return ConjectureReport {
            target: CheckKind::Shape,
            instance: alpha.to_string(),
            verdict: Verdict::Inconclusive,
            witness: None,
            detail: Some(format!(
                "sum of parts exceeds recursion cap {RECURSION_SUM_CAP}"
            )),
        };
    }
    let poly = rank_poly_recursive(alpha);
    let predicted = predict_shape(alpha);
    let actual = trichotomy(&poly.shape());
    let pass = actual == Some(predicted.normalized());
    ConjectureReport {
        target: CheckKind::Shape,
        instance: alpha.to_string(),
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        witness: Some(json!({
            "ranks": ranks_json(&poly),
            "predicted": predicted,
            "actual": actual,
        })),
        detail: None,
    }
}

/// How `check_centered` certifies existence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenteredStrategy {
    /// Use the applicable construction (two/three segments, d-divided dual,
    /// lifting, lexicographic fallback).
    Construct,
    /// Exhaustive backtracking over all centered decompositions of the
    /// predicted type; ground truth for small lattices.
    Search,
}

/// Exhaustive backtracking search for a decomposition whose doubled chain
/// centers all lie in `allowed`.  Complete: chains are built in increasing
/// order of their bottom ideals, and the least uncovered ideal must start
/// one.
pub fn search_centered_cd(
    lattice: &IdealLattice,
    allowed: &[usize],
) -> Result<Option<ChainDecomposition>> {
    if lattice.len() > SEARCH_CAP {
        return Err(Error::SearchTooLarge {
            size: lattice.len(),
            cap: SEARCH_CAP,
        });
    }
    let mut remaining = vec![true; lattice.len()];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    fn extend(
        lattice: &IdealLattice,
        remaining: &mut Vec<bool>,
        left: usize,
        chains: &mut Vec<Vec<usize>>,
        allowed: &[usize],
        path: &mut Vec<usize>,
        end_rank: usize,
    ) -> bool {
        let cur = *path.last().expect("nonempty path");
        if lattice.ideals()[cur].size() == end_rank {
            chains.push(path.clone());
            if solve(lattice, remaining, left, chains, allowed) {
                return true;
            }
            chains.pop();
            return false;
        }
        for &next in lattice.covers_up(cur) {
            if remaining[next] {
                remaining[next] = false;
                path.push(next);
                if extend(
                    lattice,
                    remaining,
                    left - 1,
                    chains,
                    allowed,
                    path,
                    end_rank,
                ) {
                    return true;
                }
                path.pop();
                remaining[next] = true;
            }
        }
        false
    }
    fn solve(
        lattice: &IdealLattice,
        remaining: &mut Vec<bool>,
        left: usize,
        chains: &mut Vec<Vec<usize>>,
        allowed: &[usize],
    ) -> bool {
        let Some(start) = (0..lattice.len()).find(|&i| remaining[i]) else {
            return true;
        };
        let start_rank = lattice.ideals()[start].size();
        remaining[start] = false;
        for &c2 in allowed {
            let Some(end_rank) = c2.checked_sub(start_rank) else {
                continue;
            };
            if end_rank < start_rank {
                continue;
            }
            let mut path = vec![start];
            if extend(
                lattice,
                remaining,
                left - 1,
                chains,
                allowed,
                &mut path,
                end_rank,
            ) {
                remaining[start] = true;
                return true;
            }
        }
        remaining[start] = true;
        false
    }
    let found = solve(lattice, &mut remaining, lattice.len(), &mut chains, allowed);
    if !found {
        return Ok(None);
    }
    let mut built: Vec<Chain> = chains
        .into_iter()
        .map(|idxs| Chain {
            ideals: idxs.into_iter().map(|i| lattice.ideals()[i]).collect(),
        })
        .collect();
    built.sort_by_key(|c| c.ideals[0]);
    let mut cd = ChainDecomposition {
        chains: built,
        classification: CdClass::Plain,
    };
    cd.classification = validate_cd(lattice, &cd).classification;
    Ok(Some(cd))
}

fn allowed_centers(n: usize, class: CdClass) -> Vec<usize> {
    match class {
        CdClass::Symmetric => vec![n],
        CdClass::TopCentered => vec![n + 1, n],
        CdClass::BottomCentered => vec![n, n - 1],
        _ => vec![n],
    }
}

/// The fence composition isomorphic to the dual of the d-divided poset,
/// with the path walk realizing the isomorphism.
fn d_divided_dual(n: usize, d: usize) -> Option<(Composition, Vec<usize>)> {
    build_d_divided(n, d).ok()?.dual().path_composition()
}

/// Constructions tried directly: the single chain for one segment, the
/// grid decomposition for two, core grouping for three, and the d-divided
/// dual detected by matching path shapes.
fn base_construct(
    alpha: &Composition,
    limit: usize,
) -> Result<Option<(ChainDecomposition, String)>> {
    let s = alpha.segment_count();
    let parts = alpha.parts();
    match s {
        1 => {
            let cd = lex_cd(&build_fence(alpha), SubsetOrder::SortedList, limit)?;
            return Ok(Some((cd, "single-chain".into())));
        }
        2 => {
            let cd = cd_two_segment(parts[0], parts[1], limit)?;
            return Ok(Some((cd, "two-segment".into())));
        }
        3 => {
            let cd = cd_three_segment(parts[0], parts[1], parts[2], limit)?;
            return Ok(Some((cd, "three-segment".into())));
        }
        _ => {}
    }
    let n = alpha.element_count();
    for d in 2..n {
        let Some((comp, walk)) = d_divided_dual(n, d) else {
            continue;
        };
        if comp != *alpha {
            continue;
        }
        let cd = cd_d_divided(n, d, limit)?;
        let poset = build_d_divided(n, d)?;
        let full = poset.full_mask();
        let mut chains: Vec<Chain> = cd
            .chains
            .iter()
            .map(|chain| Chain {
                ideals: chain
                    .ideals
                    .iter()
                    .rev()
                    .map(|i| {
                        // complements of ideals are ideals of the dual,
                        // carried along the path isomorphism
                        let complement = full & !i.mask();
                        let mut mask = 0u64;
                        for (pos, &el) in walk.iter().enumerate() {
                            if complement >> (el - 1) & 1 == 1 {
                                mask |= 1 << pos;
                            }
                        }
                        Ideal::from_mask(mask)
                    })
                    .collect(),
            })
            .collect();
        chains.sort_by_key(|c| c.ideals[0]);
        let fence = build_fence(alpha);
        let lattice = build_lattice(&fence, limit)?;
        let mut mapped = ChainDecomposition {
            chains,
            classification: CdClass::Plain,
        };
        let report = validate_cd(&lattice, &mapped);
        if !report.is_valid_ncd() {
            return Err(Error::ConstructionFailed {
                reason: format!("d-divided dual mapping: {}", report.violations.join("; ")),
            });
        }
        mapped.classification = report.classification;
        return Ok(Some((mapped, format!("d-divided dual ({n},{d})"))));
    }
    Ok(None)
}

fn search_for(alpha: &Composition, limit: usize) -> Result<Option<ChainDecomposition>> {
    let lattice = build_lattice(&build_fence(alpha), limit)?;
    if lattice.len() > SEARCH_CAP {
        return Ok(None);
    }
    let target = predict_shape(alpha).centered_class();
    search_centered_cd(&lattice, &allowed_centers(lattice.top_rank(), target))
}

/// Builds a centered decomposition by shrinking a strictly dominant
/// segment down to one more than the rest, obtaining a seed decomposition
/// there (by construction or search), and lifting it back up.
pub fn construct_by_lifting(
    alpha: &Composition,
    limit: usize,
) -> Result<Option<(ChainDecomposition, String)>> {
    let parts = alpha.parts();
    let total = alpha.total();
    let Some(t) = (1..=parts.len()).find(|&t| parts[t - 1] > total - parts[t - 1]) else {
        return Ok(None);
    };
    let rest = total - parts[t - 1];
    let seed = alpha.with_part(t, rest + 1)?;
    let seed_cd = if seed == *alpha {
        search_for(&seed, limit)?
    } else {
        match base_construct(&seed, limit)? {
            Some((cd, _)) => Some(cd),
            None => search_for(&seed, limit)?,
        }
    };
    let Some(mut cd) = seed_cd else {
        return Ok(None);
    };
    let mut cur = seed.clone();
    while cur.parts()[t - 1] < parts[t - 1] {
        cd = lift_ncd(&cur, t, &cd, limit)?;
        cur = cur.with_part(t, cur.parts()[t - 1] + 1)?;
    }
    Ok(Some((cd, format!("lift from {seed} at segment {t}"))))
}

/// Tries every applicable construction for a centered decomposition of
/// `L(alpha)`: direct constructions, then lifting along a strictly
/// dominant segment from a constructed or searched seed, then the
/// lexicographic decomposition as an opportunistic fallback.
pub fn construct_centered(
    alpha: &Composition,
    limit: usize,
) -> Result<Option<(ChainDecomposition, String)>> {
    if let Some(found) = base_construct(alpha, limit)? {
        return Ok(Some(found));
    }
    if let Some(found) = construct_by_lifting(alpha, limit)? {
        return Ok(Some(found));
    }
    let fence = build_fence(alpha);
    let cd = lex_cd(&fence, SubsetOrder::SortedList, limit)?;
    if cd.classification == predict_shape(alpha).centered_class() {
        return Ok(Some((cd, "lexicographic".into())));
    }
    Ok(None)
}

/// Checks that a centered chain decomposition of the predicted type exists,
/// by construction or by exhaustive search.  No applicable construction
/// yields an inconclusive verdict, never a silent pass.
pub fn check_centered(
    alpha: &Composition,
    strategy: CenteredStrategy,
    limit: usize,
) -> ConjectureReport {
    let instance = alpha.to_string();
    let expected = predict_shape(alpha).centered_class();
    let outcome: Result<ConjectureReport> = (|| match strategy {
        CenteredStrategy::Construct => {
            let Some((cd, route)) = construct_centered(alpha, limit)? else {
                return Ok(ConjectureReport {
                    target: CheckKind::Centered,
                    instance: instance.clone(),
                    verdict: Verdict::Inconclusive,
                    witness: None,
                    detail: Some("no applicable construction".into()),
                });
            };
            let pass = cd.classification == expected;
            Ok(ConjectureReport {
                target: CheckKind::Centered,
                instance: instance.clone(),
                verdict: if pass { Verdict::Pass } else { Verdict::Fail },
                witness: Some(json!({
                    "route": route,
                    "classification": cd.classification,
                    "expected": expected,
                    "chains": cd.chains.len(),
                })),
                detail: None,
            })
        }
        CenteredStrategy::Search => {
            let lattice = build_lattice(&build_fence(alpha), limit)?;
            let allowed = allowed_centers(lattice.top_rank(), expected);
            let found = search_centered_cd(&lattice, &allowed)?;
            Ok(match found {
                Some(cd) => ConjectureReport {
                    target: CheckKind::Centered,
                    instance: instance.clone(),
                    verdict: Verdict::Pass,
                    witness: Some(json!({
                        "route": "search",
                        "classification": cd.classification,
                        "expected": expected,
                        "chains": cd.chains.len(),
                    })),
                    detail: None,
                },
                None => ConjectureReport {
                    target: CheckKind::Centered,
                    instance: instance.clone(),
                    verdict: Verdict::Fail,
                    witness: Some(json!({
                        "route": "search",
                        "expected": expected,
                        "exhausted": true,
                    })),
                    detail: Some("exhaustive search found no centered decomposition".into()),
                },
            })
        }
    })();
    outcome.unwrap_or_else(|err| ConjectureReport {
        target: CheckKind::Centered,
        instance,
        verdict: Verdict::Inconclusive,
        witness: None,
        detail: Some(err.to_string()),
    })
}

/// Which labelings the lexicographic check ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LexScope {
    /// The element order itself.
    Natural,
    /// All linear extensions.
    LinearExtensions,
    /// All bijective labelings.
    All,
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Existential check: does some labeling in scope make the lexicographic
/// decomposition nested?  The witness records the first labeling found.
pub fn check_lex(
    alpha: &Composition,
    scope: LexScope,
    order: SubsetOrder,
    limit: usize,
) -> Result<ConjectureReport> {
    let fence = build_fence(alpha);
    let n = fence.n();
    let cap = match scope {
        LexScope::All => 8,
        LexScope::LinearExtensions => 10,
        LexScope::Natural => limit,
    };
    if n > cap {
        return Err(Error::ScopeTooLarge { n, cap });
    }
    let labelings: Vec<Vec<usize>> = match scope {
        LexScope::Natural => vec![(1..=n).collect()],
        LexScope::LinearExtensions => fence
            .all_linear_extensions()
            .into_iter()
            .map(|ext| {
                let mut labels = vec![0usize; n];
                for (pos, &e) in ext.iter().enumerate() {
                    labels[e - 1] = pos + 1;
                }
                labels
            })
            .collect(),
        LexScope::All => {
            let mut labels: Vec<usize> = (1..=n).collect();
            let mut out = vec![labels.clone()];
            while next_permutation(&mut labels) {
                out.push(labels.clone());
            }
            out
        }
    };
    let mut tried = 0usize;
    for labels in labelings {
        tried += 1;
        let relabeled = fence.relabeled(labels.clone())?;
        let cd = lex_cd(&relabeled, order, limit)?;
        if cd.classification.is_nested() {
            return Ok(ConjectureReport {
                target: CheckKind::Lex,
                instance: alpha.to_string(),
                verdict: Verdict::Pass,
                witness: Some(json!({
                    "labels": labels,
                    "classification": cd.classification,
                    "chains": cd.chains.len(),
                    "tried": tried,
                })),
                detail: None,
            });
        }
    }
    Ok(ConjectureReport {
        target: CheckKind::Lex,
        instance: alpha.to_string(),
        verdict: Verdict::Fail,
        witness: Some(json!({ "tried": tried, "scope_exhausted": true })),
        detail: Some("no labeling in scope yields a nested decomposition".into()),
    })
}

/// Family and checks for a sweep.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub max_segments: usize,
    pub max_part: u32,
    pub max_sum: Option<u32>,
    pub checks: Vec<CheckKind>,
    pub centered_strategy: CenteredStrategy,
    pub lex_scope: LexScope,
    pub subset_order: SubsetOrder,
    /// Resume point: compositions up to and including this one are skipped.
    pub cursor: Option<Composition>,
    /// Worker threads; 1 runs sequentially.
    pub jobs: usize,
    pub limit: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            max_segments: 3,
            max_part: 4,
            max_sum: None,
            checks: vec![CheckKind::Unimodal, CheckKind::Shape],
            centered_strategy: CenteredStrategy::Construct,
            lex_scope: LexScope::Natural,
            subset_order: SubsetOrder::SortedList,
            cursor: None,
            jobs: 1,
            limit: crate::DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub reports: Vec<ConjectureReport>,
    pub summary: SweepSummary,
}

impl SweepOutcome {
    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }
}

/// Every composition with at most `max_segments` parts, each at most
/// `max_part`, optionally bounded in total; ordered by segment count, then
/// lexicographically.
pub fn composition_family(
    max_segments: usize,
    max_part: u32,
    max_sum: Option<u32>,
) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(
        parts: &mut Vec<u32>,
        max_segments: usize,
        max_part: u32,
        max_sum: Option<u32>,
        out: &mut Vec<Composition>,
    ) {
        if parts.len() == max_segments {
            return;
        }
        for p in 1..=max_part {
            if let Some(cap) = max_sum {
                if parts.iter().sum::<u32>() + p > cap {
                    break;
                }
            }
            parts.push(p);
            out.push(Composition::new(parts.clone()).expect("positive parts"));
            rec(parts, max_segments, max_part, max_sum, out);
            parts.pop();
        }
    }
    rec(&mut parts, max_segments, max_part, max_sum, &mut out);
    out.sort_by(|a, b| {
        a.segment_count()
            .cmp(&b.segment_count())
            .then_with(|| a.parts().cmp(b.parts()))
    });
    out
}

fn family_key(alpha: &Composition) -> (usize, Vec<u32>) {
    (alpha.segment_count(), alpha.parts().to_vec())
}

fn run_checks(alpha: &Composition, spec: &SweepSpec) -> Vec<ConjectureReport> {
    spec.checks
        .iter()
        .map(|check| match check {
            CheckKind::Unimodal => check_unimodal(alpha),
            CheckKind::Shape => check_shape(alpha),
            CheckKind::Centered => check_centered(alpha, spec.centered_strategy, spec.limit),
            CheckKind::Lex => check_lex(alpha, spec.lex_scope, spec.subset_order, spec.limit)
                .unwrap_or_else(|err| ConjectureReport {
                    target: CheckKind::Lex,
                    instance: alpha.to_string(),
                    verdict: Verdict::Inconclusive,
                    witness: None,
                    detail: Some(err.to_string()),
                }),
        })
        .collect()
}

/// Runs the selected checks over the family, in deterministic instance
/// order regardless of parallelism.
pub fn sweep(spec: &SweepSpec) -> SweepOutcome {
    let mut family = composition_family(spec.max_segments, spec.max_part, spec.max_sum);
    if let Some(cursor) = &spec.cursor {
        let key = family_key(cursor);
        family.retain(|alpha| family_key(alpha) > key);
    }
    let reports: Vec<ConjectureReport> = if spec.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            family
                .par_iter()
                .map(|alpha| run_checks(alpha, spec))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        })
    } else {
        family
            .iter()
            .flat_map(|alpha| run_checks(alpha, spec))
            .collect()
    };
    let mut summary = SweepSummary {
        instances: family.len(),
        ..Default::default()
    };
    for r in &reports {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Inconclusive => summary.inconclusive += 1,
        }
    }
    SweepOutcome { reports, summary }
}
