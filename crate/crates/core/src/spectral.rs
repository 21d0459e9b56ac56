//! Spectral-curve analysis for a point of the Hitchin base.
//!
//! For a tuple s = (s₁, …, s_r) the spectral curve is the zero locus of
//! λʳ + s₁λ^{r−1} + … + s_r inside the total space of O(t). The branch
//! locus on the base is cut out by the resultant of the spectral polynomial
//! and its λ-derivative, a section of O(t·r(r−1)); the curve sits in the
//! smooth locus exactly when that section has distinct zeros. The genus
//! comes out of the Euler characteristic of the pushed-forward structure
//! sheaf, and for cyclic covers independently out of the Hurwitz count of
//! tr ramification points of multiplicity r.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lambda::LambdaPoly;
use crate::pairs::HitchinTuple;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::section::Section;

/// Integrality verdict for a spectral curve.
///
/// `No` carries a certified factorization of the spectral polynomial into
/// two monic spectral factors. `Undecided` is an honest "not certified
/// either way", never a guess.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Integrality {
    Yes,
    No {
        factor_left: LambdaPoly,
        factor_right: LambdaPoly,
    },
    Undecided,
}

impl Integrality {
    pub fn as_str(&self) -> &'static str {
        match self {
            Integrality::Yes => "yes",
            Integrality::No { .. } => "no",
            Integrality::Undecided => "undecided",
        }
    }
}

/// Everything the analysis of one spectral curve produces.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub t: i64,
    pub r: usize,
    pub discriminant: Section,
    /// The discriminant vanished identically (nilpotent-cone style point).
    pub degenerate: bool,
    pub is_smooth_locus: bool,
    pub is_integral: String,
    pub euler_char: i64,
    pub genus: i64,
    /// Ramification profile as (multiplicity, count) pairs, when known.
    pub ramification: Vec<(usize, usize)>,
}

/// Res_λ(p, p′) for the spectral polynomial p of the tuple, wrapped as a
/// section of O(t·r(r−1)). The zero section is allowed (degenerate tuples);
/// rank 1 has no branch data at all.
pub fn discriminant_section(s: &HitchinTuple) -> Result<Section> {
    let r = s.rank();
    if r < 2 {
        return Err(Error::NoBranchData);
    }
    let p = s.spectral_poly();
    let res = LambdaPoly::resultant(&p, &p.lambda_derivative())?;
    let twist = s.t() * (r as i64) * (r as i64 - 1);
    Ok(Section::new(twist, res).expect("resultant degree bounded by its twist"))
}

/// Is the tuple in the smooth locus: does the discriminant section have
/// all-distinct zeros on the projective line? A vanishing discriminant
/// (non-reduced branch divisor) fails the test outright.
pub fn smooth_locus_check(s: &HitchinTuple) -> Result<bool> {
    Ok(discriminant_section(s)?.is_generic())
}

/// Integrality of the cyclic spectral curve λʳ − s, decided exactly where a
/// certificate exists.
///
/// - generic s (distinct zeros): integral;
/// - a simple rational zero of s on either chart: integral, the zero is an
///   Eisenstein prime for λʳ − s;
/// - s a perfect d-th power uᵈ with d | r, d > 1: not integral, with the
///   explicit factor λ^{r/d} − u;
/// - otherwise undecided.
pub fn cyclic_integrality(t: i64, r: usize, s: &Section) -> Result<Integrality> {
    if t < 1 {
        return Err(Error::NonPositiveTwist(t));
    }
    if s.is_zero() {
        return Err(Error::ZeroSection);
    }
    if s.twist() != t * r as i64 {
        return Err(Error::SectionDegreeBound {
            twist: t * r as i64,
            degree: s.twist(),
        });
    }
    if s.is_generic()
        || s.rep().simple_rational_root().is_some()
        || s.flip_chart().simple_rational_root().is_some()
    {
        return Ok(Integrality::Yes);
    }
    for d in 2..=r as u32 {
        if r as u32 % d != 0 {
            continue;
        }
        if let Some(u) = s.rep().nth_root_exact(d) {
            let e = r / d as usize;
            // λʳ − uᵈ = (λᵉ − u) · Σ_{j<d} λ^{e(d−1−j)} uʲ
            let mut left = LambdaPoly::monomial(Poly::one(), e);
            left = &left - &LambdaPoly::constant(u.clone());
            let mut right = LambdaPoly::zero();
            let mut u_pow = Poly::one();
            for j in 0..d {
                right = &right
                    + &LambdaPoly::monomial(u_pow.clone(), e * (d - 1 - j) as usize);
                u_pow = &u_pow * &u;
            }
            debug_assert_eq!(
                &left * &right,
                &LambdaPoly::monomial(Poly::one(), r) - &LambdaPoly::constant(s.rep().clone())
            );
            return Ok(Integrality::No {
                factor_left: left,
                factor_right: right,
            });
        }
    }
    Ok(Integrality::Undecided)
}

/// Euler characteristic and genus of the (rank r, twist t) spectral curve:
/// χ = −t·r(r−1)/2 + r and g = 1 − χ.
pub fn genus_formula(t: i64, r: usize) -> (i64, i64) {
    assert!(t >= 1 && r >= 1);
    let r = r as i64;
    let euler = -t * r * (r - 1) / 2 + r;
    (euler, 1 - euler)
}

/// Genus of a cyclic spectral curve by the Hurwitz count: tr ramification
/// points of multiplicity r give 2g − 2 = tr(r−1) − 2r, so
/// g = (tr − 2)(r − 1)/2.
pub fn genus_hurwitz_cyclic(t: i64, r: usize) -> i64 {
    assert!(t >= 1 && r >= 2);
    let r = r as i64;
    let doubled = t * r * (r - 1) - 2 * r + 2;
    debug_assert_eq!(doubled % 2, 0);
    doubled / 2
}

/// Full analysis of one Hitchin-base point.
pub fn spectral_report(s: &HitchinTuple) -> Result<SpectralReport> {
    let r = s.rank();
    let t = s.t();
    let discriminant = discriminant_section(s)?;
    let degenerate = discriminant.is_zero();
    let is_smooth_locus = discriminant.is_generic();
    let is_integral = if s.is_cyclic_shape() {
        let minus_s = s.sections()[r - 1].scale(&Rational::from_int(-1));
        if minus_s.is_zero() {
            Integrality::Undecided
        } else {
            cyclic_integrality(t, r, &minus_s)?
        }
    } else {
        Integrality::Undecided
    };
    let (euler_char, genus) = genus_formula(t, r);
    let ramification = ramification_profile(s, is_smooth_locus);
    Ok(SpectralReport {
        t,
        r,
        discriminant,
        degenerate,
        is_smooth_locus,
        is_integral: is_integral.as_str().to_owned(),
        euler_char,
        genus,
        ramification,
    })
}

/// Ramification data where the tuple determines it: a generic cyclic cover
/// has tr points of multiplicity r; a smooth-locus curve has t·r(r−1)
/// simple branch points. Anything else is left unreported.
fn ramification_profile(s: &HitchinTuple, smooth: bool) -> Vec<(usize, usize)> {
    let r = s.rank();
    let t = s.t() as usize;
    if s.is_cyclic_shape() && s.sections()[r - 1].is_generic() {
        return vec![(r, t * r)];
    }
    if smooth {
        return vec![(2, t * r * (r - 1))];
    }
    Vec::new()
}
