//! Global sections of O(k) on the projective line.
//!
//! A section of O(k) is carried by a polynomial of degree ≤ k on the first
//! affine chart; the second-chart representative is z^k·s(1/z), i.e. the
//! coefficient vector reversed within length k+1. A deficit k − deg(s)
//! shows up as a zero of that order at infinity, which is how every zero
//! count here reaches the full total k.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// A global section of O(k), as its first-chart polynomial representative.
#[derive(Clone, PartialEq, Eq)]
pub struct Section {
    twist: i64,
    rep: Poly,
}

/// Zeros of a section over the whole projective line.
///
/// Rational zeros are listed exactly; zeros with irrational (or complex)
/// coordinates are aggregated per multiplicity as the degree of the
/// corresponding squarefree factor. Multiplicities always add up to the
/// twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroProfile {
    /// Multiplicity of the zero at infinity (the chart-degree deficit).
    pub at_infinity: usize,
    /// Rational zeros with multiplicities, ascending.
    pub rational: Vec<(Rational, usize)>,
    /// Aggregated remaining zeros as (squarefree-factor degree, multiplicity).
    pub irrational: Vec<(usize, usize)>,
}

impl ZeroProfile {
    /// Total zero count with multiplicity; equals the twist.
    pub fn total(&self) -> usize {
        self.at_infinity
            + self.rational.iter().map(|(_, m)| m).sum::<usize>()
            + self.irrational.iter().map(|(d, m)| d * m).sum::<usize>()
    }

    /// True when every zero on the projective line is simple.
    pub fn all_distinct(&self) -> bool {
        self.at_infinity <= 1
            && self.rational.iter().all(|(_, m)| *m == 1)
            && self.irrational.iter().all(|(_, m)| *m == 1)
    }
}

impl Section {
    /// A section of O(k); fails if `rep` exceeds the degree bound k.
    pub fn new(twist: i64, rep: Poly) -> Result<Self> {
        if twist < 0 {
            return Err(Error::NegativeTwist(twist));
        }
        if let Some(d) = rep.degree() {
            if d as i64 > twist {
                return Err(Error::SectionDegreeBound {
                    twist,
                    degree: d as i64,
                });
            }
        }
        Ok(Section { twist, rep })
    }

    pub fn zero(twist: i64) -> Self {
        Section {
            twist: twist.max(0),
            rep: Poly::zero(),
        }
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The second-chart representative z^k·s(1/z): the coefficient vector
    /// reversed within length k+1. Applying it twice gives back `rep`.
    pub fn flip_chart(&self) -> Poly {
        let k = self.twist as usize;
        let coeffs = (0..=k).rev().map(|i| self.rep.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    /// The same section viewed from the other chart.
    pub fn flipped(&self) -> Section {
        Section {
            twist: self.twist,
            rep: self.flip_chart(),
        }
    }

    /// Zeros over the projective line: multiplicity k − deg at infinity,
    /// rational zeros exactly, the rest aggregated by squarefree filtration.
    pub fn zero_profile(&self) -> Result<ZeroProfile> {
        if self.is_zero() {
            return Err(Error::ZeroSection);
        }
        let at_infinity = self.twist as usize - self.rep.degree().unwrap_or(0);
        let mut rational = Vec::new();
        let mut irrational = Vec::new();
        for (factor, mult) in self.rep.squarefree_decomposition()? {
            let mut remaining = factor.clone();
            for (root, root_mult) in factor.rational_roots() {
                debug_assert_eq!(root_mult, 1, "squarefree factor");
                remaining = remaining.exact_div(&Poly::linear_root(&root));
                rational.push((root, mult));
            }
            if let Some(d) = remaining.degree() {
                if d > 0 {
                    irrational.push((d, mult));
                }
            }
        }
        rational.sort_by(|a, b| a.0.cmp(&b.0));
        let profile = ZeroProfile {
            at_infinity,
            rational,
            irrational,
        };
        debug_assert_eq!(profile.total(), self.twist as usize);
        Ok(profile)
    }

    /// True when all k zeros on the projective line are distinct: the
    /// representative is squarefree and the degree deficit is at most one.
    pub fn is_generic(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let deficit = self.twist - self.rep.degree().unwrap_or(0) as i64;
        if deficit > 1 {
            return false;
        }
        self.rep
            .gcd_squarefree()
            .map(|(sf, _)| sf)
            .unwrap_or(false)
    }

    /// Product of sections; twists add.
    pub fn mul(&self, other: &Section) -> Section {
        Section {
            twist: self.twist + other.twist,
            rep: &self.rep * &other.rep,
        }
    }

    pub fn pow(&self, exp: u32) -> Section {
        Section {
            twist: self.twist * exp as i64,
            rep: self.rep.pow(exp as usize),
        }
    }

    pub fn scale(&self, c: &Rational) -> Section {
        Section {
            twist: self.twist,
            rep: self.rep.scale(c),
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({}): {}", self.twist, self.rep)
    }
}

impl fmt::Debug for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- Wire format: {"k": int, "coeffs": ["p/q", ...]} ----

#[derive(Serialize, Deserialize)]
struct SectionWire {
    k: i64,
    coeffs: Vec<Rational>,
}

impl Serialize for Section {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SectionWire {
            k: self.twist,
            coeffs: self.rep.coeffs().to_vec(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Section {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = SectionWire::deserialize(de)?;
        Section::new(wire.k, Poly::from_coeffs(wire.coeffs)).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    fn sec(k: i64, coeffs: &[i64]) -> Section {
        Section::new(k, p(coeffs)).unwrap()
    }

    #[test]
    fn flip_examples() {
        // k=2, s=x: z^2 * (1/z) = z
        assert_eq!(sec(2, &[0, 1]).flip_chart(), Poly::x());
        // k=3, s=1: z^3
        assert_eq!(sec(3, &[1]).flip_chart(), p(&[0, 0, 0, 1]));
        // k=4, s=x^4: 1
        assert_eq!(sec(4, &[0, 0, 0, 0, 1]).flip_chart(), Poly::one());
    }

    #[test]
    fn flip_is_involution() {
        let s = sec(5, &[3, 0, -2, 7]);
        assert_eq!(s.flipped().flipped(), s);
    }

    #[test]
    fn degree_bound_enforced() {
        assert!(Section::new(2, p(&[0, 0, 0, 1])).is_err());
        assert!(Section::new(-1, Poly::zero()).is_err());
    }

    #[test]
    fn zero_profile_fully_split() {
        // k=4, x(x-1)(x-2)(x-3): four simple finite zeros, none at infinity
        let s = Section::new(
            4,
            &(&(&Poly::x() * &p(&[-1, 1])) * &p(&[-2, 1])) * &p(&[-3, 1]),
        )
        .unwrap();
        let profile = s.zero_profile().unwrap();
        assert_eq!(profile.at_infinity, 0);
        assert_eq!(profile.rational.len(), 4);
        assert!(profile.rational.iter().all(|(_, m)| *m == 1));
        assert_eq!(profile.total(), 4);
    }

    #[test]
    fn zero_profile_with_infinity() {
        // k=4, x^3 - x: three simple finite zeros plus a simple zero at infinity
        let s = sec(4, &[0, -1, 0, 1]);
        let profile = s.zero_profile().unwrap();
        assert_eq!(profile.at_infinity, 1);
        assert_eq!(profile.rational.len(), 3);
        assert_eq!(profile.total(), 4);
    }

    #[test]
    fn zero_profile_double_at_origin_and_infinity() {
        // k=4, x^2: multiplicity 2 at 0 and 2 at infinity
        let s = sec(4, &[0, 0, 1]);
        let profile = s.zero_profile().unwrap();
        assert_eq!(profile.at_infinity, 2);
        assert_eq!(profile.rational, vec![(Rational::zero(), 2)]);
        assert_eq!(profile.total(), 4);
    }

    #[test]
    fn zero_profile_aggregates_irrational() {
        // k=6, (x^2-2)^2 (x^2+1): squarefree filtration splits by multiplicity
        let s = Section::new(6, &p(&[-2, 0, 1]).pow(2) * &p(&[1, 0, 1])).unwrap();
        let profile = s.zero_profile().unwrap();
        assert_eq!(profile.at_infinity, 0);
        assert!(profile.rational.is_empty());
        assert_eq!(profile.irrational, vec![(2, 1), (2, 2)]);
        assert_eq!(profile.total(), 6);
    }

    #[test]
    fn generic_examples() {
        assert!(sec(4, &[0, -1, 0, 1]).is_generic()); // x^3 - x, deficit 1
        assert!(!sec(4, &[-1, 0, 1]).is_generic()); // x^2 - 1, deficit 2
        let repeated = Section::new(4, &p(&[0, 0, 1]) * &p(&[-1, 0, 1])).unwrap();
        assert!(!repeated.is_generic()); // x^2 (x-1)(x+1)
        assert!(!Section::zero(4).is_generic());
    }

    #[test]
    fn genericity_matches_zero_profile_oracle() {
        for (k, coeffs) in [
            (4i64, vec![0i64, -1, 0, 1]),
            (4, vec![-1, 0, 1]),
            (3, vec![2, 1]),
            (5, vec![1, 0, 0, 0, 0, 2]),
            (4, vec![1, 2, 3, 4, 1]),
        ] {
            let s = sec(k, &coeffs);
            assert_eq!(
                s.is_generic(),
                s.zero_profile().unwrap().all_distinct(),
                "k={k} coeffs={coeffs:?}"
            );
        }
    }

    #[test]
    fn flip_preserves_genericity_and_swaps_origin_with_infinity() {
        let s = sec(4, &[0, -1, 0, 1]); // zero at 0, deficit 1 at infinity
        let flipped = s.flipped();
        assert_eq!(s.is_generic(), flipped.is_generic());
        let p0 = s.zero_profile().unwrap();
        let p1 = flipped.zero_profile().unwrap();
        let mult_at_zero = |prof: &ZeroProfile| {
            prof.rational
                .iter()
                .find(|(root, _)| root.is_zero())
                .map_or(0, |(_, m)| *m)
        };
        assert_eq!(p0.at_infinity, mult_at_zero(&p1));
        assert_eq!(p1.at_infinity, mult_at_zero(&p0));
    }

    #[test]
    fn wire_roundtrip() {
        let s = sec(4, &[0, -1, 0, 1]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"k":4,"coeffs":["0","-1","0","1"]}"#);
        let back: Section = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Section>(r#"{"k":1,"coeffs":["1","1","1"]}"#).is_err());
    }
}
