//! Rank polynomials: nonnegative integer coefficient sequences, the segment
//! recursion, the odd-segment explicit formula, and sequence-shape
//! predicates.
//!
//! Coefficients are arbitrary-precision; ideal counts grow like powers of
//! Fibonacci numbers and overflow machine words for long compositions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::composition::Composition;
use crate::error::Error;
use crate::Result;

/// A polynomial with nonnegative integer coefficients, stored low to high
/// with no trailing zero (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RankPolynomial {
    coeffs: Vec<BigUint>,
}

impl RankPolynomial {
    pub fn zero() -> RankPolynomial {
        RankPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> RankPolynomial {
        RankPolynomial {
            coeffs: vec![BigUint::from(1u32)],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> RankPolynomial {
        let mut p = RankPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_u64_coeffs(coeffs: &[u64]) -> RankPolynomial {
        RankPolynomial::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficients as `u64`, if they all fit.
    pub fn coeffs_u64(&self) -> Option<Vec<u64>> {
        self.coeffs
            .iter()
            .map(u64::try_from)
            .map(|r| r.ok())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == BigUint::ZERO) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &RankPolynomial) -> RankPolynomial {
        let mut coeffs = vec![BigUint::ZERO; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RankPolynomial::from_coeffs(coeffs)
    }

    /// Multiplication by `q^k`.
    pub fn shifted(&self, k: usize) -> RankPolynomial {
        if self.is_zero() {
            return RankPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::ZERO; k];
        coeffs.extend(self.coeffs.iter().cloned());
        RankPolynomial { coeffs }
    }

    pub fn mul(&self, other: &RankPolynomial) -> RankPolynomial {
        if self.is_zero() || other.is_zero() {
            return RankPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RankPolynomial { coeffs }
    }

    /// Value at `q = 1`: the coefficient sum.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Coefficient sequence reversed.
    pub fn reversed(&self) -> RankPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RankPolynomial::from_coeffs(coeffs)
    }

    pub fn shape(&self) -> ShapeFlags {
        shape_classify(&self.coeffs)
    }
}

impl fmt::Display for RankPolynomial {
    /// Coefficient list low to high, e.g. `[1,2,2,2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q` is zero.
pub fn q_integer(n: u32) -> RankPolynomial {
    RankPolynomial {
        coeffs: vec![BigUint::from(1u32); n as usize],
    }
}

/// One application of the segment recursion: the two summands whose sum is
/// the rank polynomial, recorded as actually added (shift included).
#[derive(Clone, Debug)]
pub struct RecursionStep {
    pub composition: Vec<u32>,
    pub left: RankPolynomial,
    pub right: RankPolynomial,
}

fn normalized(parts: &[u32]) -> Vec<u32> {
    let mut v = parts.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rank_poly_rec(
    parts: Vec<u32>,
    memo: &mut HashMap<Vec<u32>, RankPolynomial>,
    steps: &mut Option<&mut Vec<RecursionStep>>,
) -> RankPolynomial {
    let parts = normalized(&parts);
    if let Some(hit) = memo.get(&parts) {
        return hit.clone();
    }
    let s = parts.len();
    let result = if s <= 1 {
        // a single segment (or nothing) is a chain with a + 2 ideals
        let a = parts.first().copied().unwrap_or(0);
        q_integer(a + 2)
    } else if s % 2 == 1 {
        // toggle on the last element of the final, ascending segment
        let mut without = parts.clone();
        without[s - 1] -= 1;
        let mut collapsed = parts[..s - 1].to_vec();
        collapsed[s - 2] -= 1;
        let left = rank_poly_rec(without, memo, steps);
        let right = rank_poly_rec(collapsed, memo, steps).shifted(parts[s - 1] as usize + 1);
        if let Some(tr) = steps.as_deref_mut() {
            tr.push(RecursionStep {
                composition: parts.clone(),
                left: left.clone(),
                right: right.clone(),
            });
        }
        left.add(&right)
    } else {
        // final segment descends, so its last element is minimal
        let mut collapsed = parts[..s - 1].to_vec();
        collapsed[s - 2] -= 1;
        let mut without = parts.clone();
        without[s - 1] -= 1;
        let left = rank_poly_rec(collapsed, memo, steps);
        let right = rank_poly_rec(without, memo, steps).shifted(1);
        if let Some(tr) = steps.as_deref_mut() {
            tr.push(RecursionStep {
                composition: parts.clone(),
                left: left.clone(),
                right: right.clone(),
            });
        }
        left.add(&right)
    };
    memo.insert(parts, result.clone());
    result
}

/// Rank polynomial of `L(alpha)` by the two-case segment recursion,
/// memoized per call.
pub fn rank_poly_recursive(alpha: &Composition) -> RankPolynomial {
    let mut memo = HashMap::new();
    rank_poly_rec(alpha.parts().to_vec(), &mut memo, &mut None)
}

/// Same as [`rank_poly_recursive`], returning every recursion step taken
/// (one per distinct subcomposition).
pub fn rank_poly_recursive_traced(alpha: &Composition) -> (RankPolynomial, Vec<RecursionStep>) {
    let mut memo = HashMap::new();
    let mut steps = Vec::new();
    let poly = rank_poly_rec(alpha.parts().to_vec(), &mut memo, &mut Some(&mut steps));
    (poly, steps)
}

/// Rank polynomial of `L(alpha)` for an odd segment count, by summing over
/// subsets of the fence's maxima.  Each maximum toggled "in" contributes a
/// power of `q`; each one left "out" contributes a q-integer factor.
pub fn rank_poly_explicit(alpha: &Composition) -> Result<RankPolynomial> {
    let s = alpha.segment_count();
    if s.is_multiple_of(2) {
        return Err(Error::EvenSegmentCount { s });
    }
    let parts = alpha.parts();
    let u = s.div_ceil(2);
    let mut total = RankPolynomial::zero();
    for z in 0u32..1 << u {
        let mut shift = z.count_ones() as usize;
        let mut term = RankPolynomial::one();
        if z & 1 != 0 {
            shift += parts[0] as usize;
        } else {
            term = term.mul(&q_integer(parts[0] + 1));
        }
        for i in 2..=u {
            let prev_in = z >> (i - 2) & 1 != 0;
            let this_in = z >> (i - 1) & 1 != 0;
            let even_part = parts[2 * i - 3];
            let odd_part = parts[2 * i - 2];
            match (prev_in, this_in) {
                (true, true) => shift += (even_part + odd_part) as usize - 1,
                (true, false) => {
                    shift += even_part as usize;
                    term = term.mul(&q_integer(odd_part));
                }
                (false, true) => {
                    shift += odd_part as usize;
                    term = term.mul(&q_integer(even_part));
                }
                (false, false) => {
                    let f = RankPolynomial::one()
                        .add(&q_integer(even_part).mul(&q_integer(odd_part)).shifted(1));
                    term = term.mul(&f);
                }
            }
        }
        total = total.add(&term.shifted(shift));
    }
    Ok(total)
}

/// The set of indices where the coefficient maximum is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximaIndices {
    pub indices: Vec<usize>,
}

impl MaximaIndices {
    /// The maxima as an interval, when they are contiguous.
    pub fn as_interval(&self) -> Option<(usize, usize)> {
        let (&lo, &hi) = (self.indices.first()?, self.indices.last()?);
        (hi - lo + 1 == self.indices.len()).then_some((lo, hi))
    }
}

/// Argmax set of the coefficients; errors on the zero polynomial.
pub fn maxima_indices(f: &RankPolynomial) -> Result<MaximaIndices> {
    let max = f.coeffs().iter().max().ok_or(Error::ZeroPolynomial)?;
    Ok(MaximaIndices {
        indices: (0..f.coeffs().len())
            .filter(|&k| f.coeffs()[k] == *max)
            .collect(),
    })
}

/// Shape predicates evaluated on a coefficient sequence `a_0 .. a_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ShapeFlags {
    /// Weakly rises then weakly falls.
    pub unimodal: bool,
    /// `a_k = a_{n-k}` for all k.
    pub symmetric: bool,
    /// `a_k <= a_{n-k}` for `k < n/2`.
    pub top_heavy: bool,
    /// `a_k >= a_{n-k}` for `k < n/2`.
    pub bottom_heavy: bool,
    /// `a_0 <= a_n <= a_1 <= a_{n-1} <= ...`
    pub top_interlacing: bool,
    /// `a_n <= a_0 <= a_{n-1} <= a_1 <= ...`
    pub bottom_interlacing: bool,
}

fn is_unimodal(seq: &[BigUint]) -> bool {
    let fall = seq.windows(2).position(|w| w[1] < w[0]);
    match fall {
        None => true,
        Some(k) => seq[k..].windows(2).all(|w| w[1] <= w[0]),
    }
}

fn nondecreasing_along(seq: &[BigUint], order: &[usize]) -> bool {
    order.windows(2).all(|w| seq[w[0]] <= seq[w[1]])
}

/// Index order `0, n, 1, n-1, ...` for the top-interlacing chain.
fn top_order(n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n + 1);
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        out.push(lo);
        out.push(hi);
        lo += 1;
        hi -= 1;
    }
    if lo == hi {
        out.push(lo);
    }
    out
}

/// Index order `n, 0, n-1, 1, ...` for the bottom-interlacing chain.
fn bottom_order(n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n + 1);
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        out.push(hi);
        out.push(lo);
        lo += 1;
        hi -= 1;
    }
    if lo == hi {
        out.push(lo);
    }
    out
}

/// Evaluates each shape flag by its literal chain of inequalities.
pub fn shape_classify(seq: &[BigUint]) -> ShapeFlags {
    if seq.len() <= 1 {
        return ShapeFlags {
            unimodal: true,
            symmetric: true,
            top_heavy: true,
            bottom_heavy: true,
            top_interlacing: true,
            bottom_interlacing: true,
        };
    }
    let n = seq.len() - 1;
    let mut symmetric = true;
    let mut top_heavy = true;
    let mut bottom_heavy = true;
    for k in 0..n.div_ceil(2) {
        if seq[k] != seq[n - k] {
            symmetric = false;
        }
        if seq[k] > seq[n - k] {
            top_heavy = false;
        }
        if seq[k] < seq[n - k] {
            bottom_heavy = false;
        }
    }
    ShapeFlags {
        unimodal: is_unimodal(seq),
        symmetric,
        top_heavy,
        bottom_heavy,
        top_interlacing: nondecreasing_along(seq, &top_order(n)),
        bottom_interlacing: nondecreasing_along(seq, &bottom_order(n)),
    }
}

/// Shape flags for a plain count sequence.
pub fn shape_classify_counts(seq: &[u64]) -> ShapeFlags {
    let coeffs: Vec<BigUint> = seq.iter().map(|&c| BigUint::from(c)).collect();
    shape_classify(&coeffs)
}

/// Verifies that the sum of two unimodal polynomials with intersecting
/// maxima sets is unimodal with the intersection as its maxima set.
/// Precondition failures are reported as errors, not assertion results.
pub fn check_mi_addition(f: &RankPolynomial, g: &RankPolynomial) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::MiPrecondition {
            reason: "zero polynomial".into(),
        });
    }
    if !is_unimodal(f.coeffs()) || !is_unimodal(g.coeffs()) {
        return Err(Error::MiPrecondition {
            reason: "summand not unimodal".into(),
        });
    }
    let mi_f = maxima_indices(f)?.indices;
    let mi_g = maxima_indices(g)?.indices;
    let inter: Vec<usize> = mi_f.iter().copied().filter(|k| mi_g.contains(k)).collect();
    if inter.is_empty() {
        return Err(Error::MiPrecondition {
            reason: format!("maxima sets {mi_f:?} and {mi_g:?} are disjoint"),
        });
    }
    let sum = f.add(g);
    Ok(is_unimodal(sum.coeffs()) && maxima_indices(&sum)?.indices == inter)
}

/// The predicted maxima interval of the rank polynomial when one end part
/// weakly dominates: `[sum of the rest, first part]` when the first part
/// dominates, reflected through the top degree when the last part does.
/// A single segment gives the all-ones polynomial, whose maxima fill
/// `[0, a+1]`.
pub fn predicted_maxima_interval(alpha: &Composition) -> Option<(usize, usize)> {
    let parts = alpha.parts();
    let s = parts.len();
    if s == 1 {
        return Some((0, parts[0] as usize + 1));
    }
    let rest_of_first: u32 = parts[1..].iter().sum();
    if parts[0] >= rest_of_first {
        return Some((rest_of_first as usize, parts[0] as usize));
    }
    let rest_of_last: u32 = parts[..s - 1].iter().sum();
    if parts[s - 1] >= rest_of_last {
        if s.is_multiple_of(2) {
            // reversing an even composition leaves the lattice unchanged
            return Some((rest_of_last as usize, parts[s - 1] as usize));
        }
        // odd: the dual reverses coefficients, reflecting the interval
        let n = alpha.element_count();
        return Some((n - parts[s - 1] as usize, n - rest_of_last as usize));
    }
    None
}
