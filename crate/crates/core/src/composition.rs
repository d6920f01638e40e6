//! Compositions: the segment-length sequences that generate fences.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::Result;

/// A sequence of positive integers recording segment lengths.
///
/// A fence built from `(a, b, c, ...)` has `1 + a + b + c + ...` elements.
/// Trailing zeros are stripped on construction (a zero-length final segment
/// contributes nothing); zeros anywhere else are rejected.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { index: pos + 1 });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn segment_count(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts, one less than the fence's element count.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of elements of the fence built from this composition.
    pub fn element_count(&self) -> usize {
        self.total() as usize + 1
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Returns a copy with part `t` (1-based) replaced by `value`.
    pub fn with_part(&self, t: usize, value: u32) -> Result<Composition> {
        if t == 0 || t > self.parts.len() {
            return Err(Error::SegmentIndex {
                t,
                s: self.parts.len(),
            });
        }
        let mut parts = self.parts.clone();
        parts[t - 1] = value;
        Composition::new(parts)
    }

    /// First element index (1-based) of segment `t`; the segment spans
    /// `x_p .. x_{p + parts[t-1]}`.
    pub fn segment_start(&self, t: usize) -> usize {
        1 + self.parts[..t - 1].iter().sum::<u32>() as usize
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses comma-separated positive integers, e.g. `"2,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut parts = Vec::new();
        for (i, token) in s.split(',').enumerate() {
            let token = token.trim();
            match token.parse::<u32>() {
                Ok(v) => parts.push(v),
                Err(_) => {
                    return Err(Error::ParseComposition {
                        position: i + 1,
                        token: token.to_string(),
                    })
                }
            }
        }
        Composition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_stripped() {
        let a = Composition::new(vec![2, 3, 0]).unwrap();
        assert_eq!(a, Composition::new(vec![2, 3]).unwrap());
        let b = Composition::new(vec![2, 0, 0]).unwrap();
        assert_eq!(b.parts(), &[2]);
    }

    #[test]
    fn interior_zero_rejected() {
        assert_eq!(
            Composition::new(vec![2, 0, 3]),
            Err(Error::ZeroPart { index: 2 })
        );
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(Composition::new(vec![]), Err(Error::EmptyComposition));
        assert_eq!(Composition::new(vec![0, 0]), Err(Error::EmptyComposition));
        assert_eq!("".parse::<Composition>(), Err(Error::EmptyComposition));
    }

    #[test]
    fn parse_reports_position() {
        let err = "2,x,1".parse::<Composition>().unwrap_err();
        assert_eq!(
            err,
            Error::ParseComposition {
                position: 2,
                token: "x".into()
            }
        );
        let err = "2,-1".parse::<Composition>().unwrap_err();
        assert!(matches!(err, Error::ParseComposition { position: 2, .. }));
    }

    #[test]
    fn parse_round_trip() {
        let a: Composition = "2,3,1".parse().unwrap();
        assert_eq!(a.parts(), &[2, 3, 1]);
        assert_eq!(a.to_string(), "2,3,1");
        assert_eq!(a.element_count(), 7);
        assert_eq!(a.reversed().parts(), &[1, 3, 2]);
    }

    #[test]
    fn segment_starts() {
        let a: Composition = "2,3,1".parse().unwrap();
        assert_eq!(a.segment_start(1), 1);
        assert_eq!(a.segment_start(2), 3);
        assert_eq!(a.segment_start(3), 6);
    }
}
