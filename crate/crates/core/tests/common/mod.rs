//! Shared generators for the randomized suites. Everything is seeded, so
//! failures reproduce.
#![allow(dead_code)] // each test binary uses its own subset

use p1spec::{BgType, HitchinTuple, Poly, Rational, Section, TwistedPair};
use rand::rngs::StdRng;
use rand::Rng;

pub fn rng(seed: u64) -> StdRng {
    use rand::SeedableRng;
    StdRng::seed_from_u64(seed)
}

/// Random polynomial of degree at most `max_deg` (possibly zero), small
/// integer coefficients.
pub fn random_poly(rng: &mut StdRng, max_deg: i64) -> Poly {
    if max_deg < 0 {
        return Poly::zero();
    }
    let deg = rng.random_range(0..=max_deg) as usize;
    let coeffs: Vec<Rational> = (0..=deg)
        .map(|_| Rational::from_int(rng.random_range(-4..=4)))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Random nonzero polynomial of degree exactly `deg`.
pub fn random_poly_exact_degree(rng: &mut StdRng, deg: usize) -> Poly {
    let mut coeffs: Vec<Rational> = (0..deg)
        .map(|_| Rational::from_int(rng.random_range(-4..=4)))
        .collect();
    let lead = loop {
        let c = rng.random_range(-4..=4);
        if c != 0 {
            break c;
        }
    };
    coeffs.push(Rational::from_int(lead));
    Poly::from_coeffs(coeffs)
}

/// Random non-increasing splitting type with entries in [-3, 3].
pub fn random_bg(rng: &mut StdRng, rank: usize) -> BgType {
    let mut m: Vec<i64> = (0..rank).map(|_| rng.random_range(-3..=3)).collect();
    m.sort_unstable_by(|a, b| b.cmp(a));
    BgType::new(m).unwrap()
}

/// Random twisted pair: entries bounded by min(entry twist, max_entry_deg).
pub fn random_pair(rng: &mut StdRng, rank: usize, t: i64, max_entry_deg: i64) -> TwistedPair {
    let bg = random_bg(rng, rank);
    let m = bg.numbers().to_vec();
    let phi: Vec<Vec<Poly>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let twist = m[i] - m[j] + t;
                    if twist < 0 {
                        Poly::zero()
                    } else {
                        random_poly(rng, twist.min(max_entry_deg))
                    }
                })
                .collect()
        })
        .collect();
    TwistedPair::new(t, bg, phi).expect("entries generated within bounds")
}

/// Random Hitchin tuple with sections of full allowed degree range.
pub fn random_tuple(rng: &mut StdRng, rank: usize, t: i64) -> HitchinTuple {
    let s = (1..=rank as i64)
        .map(|i| Section::new(t * i, random_poly(rng, t * i)).unwrap())
        .collect();
    HitchinTuple::new(t, s).expect("twists match by construction")
}

/// Random generic section of O(k): all k zeros distinct on the projective
/// line. Rejection-samples, which terminates fast since genericity is the
/// typical case.
pub fn random_generic_section(rng: &mut StdRng, k: i64) -> Section {
    assert!(k >= 1);
    loop {
        let deg = if rng.random_bool(0.5) { k } else { k - 1 };
        let s = Section::new(k, random_poly_exact_degree(rng, deg as usize)).unwrap();
        if s.is_generic() {
            return s;
        }
    }
}
