//! Pushforward splittings for the 2:1 elliptic cover of the projective
//! line.
//!
//! For an elliptic curve X with a degree-2 map to P¹ and a semistable
//! bundle E on X, the splitting type of f_*E is pinned down case by case:
//! indecomposable E of degree −1, 0, or 1 in any rank, indecomposable of
//! rank 2 and degree 2, and sums of two line bundles of equal degree 0 or
//! 1. The table encodes the conclusions of that case analysis; inputs
//! outside it fail loudly, because no general strategy covers them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::BgType;
use crate::tower::pushforward_degree;

/// Shape of the bundle on the elliptic curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleShape {
    Indecomposable,
    DecomposableLineSum,
}

/// A semistable bundle on the elliptic curve, described by the data the
/// splitting table needs.
///
/// `h0` is required exactly for an indecomposable bundle of degree zero,
/// where both values occur. A decomposable bundle is a sum of two line
/// bundles of equal degree; for degree zero each line carries its own h⁰.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EllipticBundleSpec {
    pub rank: u32,
    pub degree: i64,
    pub shape: BundleShape,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_degrees: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_h0: Option<(u8, u8)>,
}

/// A computed splitting f_*E ≅ O(a₁)⊕…⊕O(a₂ₙ).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SplittingResult {
    pub bg: BgType,
    /// Σaᵢ, which must equal deg E − 2·rank E.
    pub degree_check: i64,
}

impl SplittingResult {
    fn from_parts(mut parts: Vec<i64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let degree_check = parts.iter().sum();
        SplittingResult {
            bg: BgType::new(parts).expect("sorted splitting"),
            degree_check,
        }
    }
}

/// h⁰ vanishing for an indecomposable bundle on the elliptic curve:
/// negative degree forces h⁰ = 0. Degree zero stays open (0 or 1), which is
/// why the table asks for it.
pub fn h0_vanishing(degree: i64) -> bool {
    degree < 0
}

impl EllipticBundleSpec {
    pub fn indecomposable(rank: u32, degree: i64, h0: Option<u8>) -> Self {
        EllipticBundleSpec {
            rank,
            degree,
            shape: BundleShape::Indecomposable,
            h0,
            line_degrees: None,
            line_h0: None,
        }
    }

    pub fn decomposable(line_degrees: (i64, i64), line_h0: Option<(u8, u8)>) -> Self {
        EllipticBundleSpec {
            rank: 2,
            degree: line_degrees.0 + line_degrees.1,
            shape: BundleShape::DecomposableLineSum,
            h0: None,
            line_degrees: Some(line_degrees),
            line_h0,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidBundleSpec(msg.to_owned()));
        if self.rank < 1 {
            return bad("rank must be positive");
        }
        match self.shape {
            BundleShape::Indecomposable => {
                if self.line_degrees.is_some() || self.line_h0.is_some() {
                    return bad("line data only applies to decomposable bundles");
                }
                match (self.degree, self.h0) {
                    (0, Some(0 | 1)) => Ok(()),
                    (0, _) => bad("degree-zero indecomposable bundles need h0 of 0 or 1"),
                    (_, Some(_)) => bad("h0 is determined unless the degree is zero"),
                    (_, None) => Ok(()),
                }
            }
            BundleShape::DecomposableLineSum => {
                if self.rank != 2 {
                    return bad("a decomposable line sum has rank 2");
                }
                if self.h0.is_some() {
                    return bad("per-line h0 goes in line_h0");
                }
                let Some((d1, d2)) = self.line_degrees else {
                    return bad("decomposable bundles need their line degrees");
                };
                if d1 != d2 {
                    return bad("semistability requires equal line degrees");
                }
                if d1 + d2 != self.degree {
                    return bad("line degrees must sum to the degree");
                }
                match (d1, self.line_h0) {
                    (0, Some((0 | 1, 0 | 1))) => Ok(()),
                    (0, _) => bad("degree-zero lines need line_h0 values of 0 or 1"),
                    (_, Some(_)) => bad("line_h0 only applies to degree-zero lines"),
                    (_, None) => Ok(()),
                }
            }
        }
    }
}

/// Splitting of the pushforward of a degree-0 or ±1 line-type answer in a
/// given rank; `None` when outside the table.
fn indecomposable_parts(n: u32, degree: i64, h0: Option<u8>) -> Option<Vec<i64>> {
    let n = n as usize;
    match (degree, h0) {
        (0, Some(0)) => Some(vec![-1; 2 * n]),
        (0, Some(1)) => {
            let mut parts = vec![0];
            parts.extend(std::iter::repeat(-1).take(2 * n - 2));
            parts.push(-2);
            Some(parts)
        }
        (1, None) => {
            let mut parts = vec![0];
            parts.extend(std::iter::repeat(-1).take(2 * n - 1));
            Some(parts)
        }
        (-1, None) => {
            let mut parts = vec![-2];
            parts.extend(std::iter::repeat(-1).take(2 * n - 1));
            Some(parts)
        }
        (2, None) if n == 2 => Some(vec![0, 0, -1, -1]),
        _ => None,
    }
}

/// The Birkhoff–Grothendieck splitting of f_*E for the covered table.
pub fn pushforward_splitting(spec: &EllipticBundleSpec) -> Result<SplittingResult> {
    spec.validate()?;
    let parts = match spec.shape {
        BundleShape::Indecomposable => {
            indecomposable_parts(spec.rank, spec.degree, spec.h0)
                .ok_or(Error::OutsideEllipticTable)?
        }
        BundleShape::DecomposableLineSum => {
            let (d1, d2) = spec.line_degrees.expect("validated");
            let (h1, h2) = match spec.line_h0 {
                Some((a, b)) => (Some(a), Some(b)),
                None => (None, None),
            };
            let mut parts = indecomposable_parts(1, d1, h1)
                .ok_or(Error::OutsideEllipticTable)?;
            parts.extend(
                indecomposable_parts(1, d2, h2).ok_or(Error::OutsideEllipticTable)?,
            );
            parts
        }
    };
    let result = SplittingResult::from_parts(parts);
    let expected = pushforward_degree(spec.degree, spec.rank as i64, 1, 0, 2);
    assert_eq!(
        result.degree_check, expected,
        "splitting must carry the pushforward degree"
    );
    Ok(result)
}

/// The four splittings arising from sums of two line bundles of equal
/// degree 0 or 1 on the elliptic curve.
pub fn decomposable_menu() -> Vec<SplittingResult> {
    vec![
        pushforward_splitting(&EllipticBundleSpec::decomposable((0, 0), Some((1, 0))))
            .expect("tabled"),
        pushforward_splitting(&EllipticBundleSpec::decomposable((0, 0), Some((1, 1))))
            .expect("tabled"),
        pushforward_splitting(&EllipticBundleSpec::decomposable((0, 0), Some((0, 0))))
            .expect("tabled"),
        pushforward_splitting(&EllipticBundleSpec::decomposable((1, 1), None))
            .expect("tabled"),
    ]
}
