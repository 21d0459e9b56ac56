//! Cyclic chains: the constructive pairs with characteristic polynomial
//! λʳ − s.
//!
//! A chain on E = O(m₁)⊕…⊕O(m_r) places sections u₁, …, u_{r−1} on the
//! subdiagonal and u_r in the upper-right corner, so the only nonzero
//! Leibniz term of det(λ·1 − φ) besides λʳ is the full cycle and the
//! characteristic polynomial collapses to λʳ − u_r·u₁⋯u_{r−1}. Building a
//! chain for a prescribed determinant section is a packing problem: the
//! factors of s must be distributed into slots of capacity mᵢ₊₁ − mᵢ + t
//! (and m₁ − m_r + t for the corner). The packer fills slots in index
//! order and backtracks, so it fails only when no distribution exists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::{BgType, TwistedPair};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::section::Section;

/// A nonzero section of O(k) in factored form: a unit times monic factors
/// with multiplicities. The degree deficit k − Σ deg·mult is the zero order
/// at infinity. Factors are treated as atoms by the packer; callers supply
/// them irreducible.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "FactoredWire", into = "FactoredWire")]
pub struct FactoredSection {
    k: i64,
    unit: Rational,
    factors: Vec<(Poly, usize)>,
}

#[derive(Serialize, Deserialize)]
struct FactorWire {
    coeffs: Vec<Rational>,
    mult: usize,
}

#[derive(Serialize, Deserialize)]
struct FactoredWire {
    k: i64,
    unit: Rational,
    factors: Vec<FactorWire>,
}

impl TryFrom<FactoredWire> for FactoredSection {
    type Error = Error;
    fn try_from(w: FactoredWire) -> Result<Self> {
        FactoredSection::new(
            w.k,
            w.unit,
            w.factors
                .into_iter()
                .map(|f| (Poly::from_coeffs(f.coeffs), f.mult))
                .collect(),
        )
    }
}

impl From<FactoredSection> for FactoredWire {
    fn from(s: FactoredSection) -> FactoredWire {
        FactoredWire {
            k: s.k,
            unit: s.unit,
            factors: s
                .factors
                .into_iter()
                .map(|(p, mult)| FactorWire {
                    coeffs: p.coeffs().to_vec(),
                    mult,
                })
                .collect(),
        }
    }
}

impl FactoredSection {
    pub fn new(k: i64, unit: Rational, factors: Vec<(Poly, usize)>) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidFactoredSection(msg.to_owned());
        if k < 0 {
            return Err(Error::NegativeTwist(k));
        }
        if unit.is_zero() {
            return Err(bad("unit must be nonzero"));
        }
        let mut total = 0i64;
        for (factor, mult) in &factors {
            let Some(d) = factor.degree() else {
                return Err(bad("zero factor"));
            };
            if d == 0 {
                return Err(bad("constant factor belongs in the unit"));
            }
            if !factor.is_monic() {
                return Err(bad("factors must be monic"));
            }
            if *mult == 0 {
                return Err(bad("factor multiplicity must be positive"));
            }
            total += d as i64 * *mult as i64;
        }
        if total > k {
            return Err(bad("total factor degree exceeds the twist"));
        }
        Ok(FactoredSection { k, unit, factors })
    }

    /// Factor a section exactly over the rationals into rational linear
    /// factors and one residual factor left unsplit.
    ///
    /// The residual is squarefree-decomposed but not factored further;
    /// callers needing a complete irreducible factorization must supply it
    /// themselves.
    pub fn from_section_rational_split(s: &Section) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroSection);
        }
        let lc = s.rep().leading_coeff().unwrap().clone();
        let mut factors = Vec::new();
        let mut residual = s.rep().monic();
        for (root, mult) in s.rep().rational_roots() {
            let lin = Poly::linear_root(&root);
            for _ in 0..mult {
                residual = residual.exact_div(&lin);
            }
            factors.push((lin, mult));
        }
        if !residual.is_constant() {
            for (factor, mult) in residual.squarefree_decomposition()? {
                factors.push((factor, mult));
            }
        }
        FactoredSection::new(s.twist(), lc, factors)
    }

    pub fn twist(&self) -> i64 {
        self.k
    }

    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    pub fn factors(&self) -> &[(Poly, usize)] {
        &self.factors
    }

    /// Multiply the factorization back out.
    pub fn expand(&self) -> Section {
        let mut acc = Poly::constant(self.unit.clone());
        for (factor, mult) in &self.factors {
            acc = &acc * &factor.pow(*mult);
        }
        Section::new(self.k, acc).expect("degree bounded by construction")
    }
}

/// Stability verdict for a cyclic chain, following the chain rules only:
/// the invariant subbundles examined are the direct-summand spans.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    SemistableOnly,
    Unstable,
}

/// A cyclic chain: subdiagonal sections u₁,…,u_{r−1} and corner u_r.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicChain {
    t: i64,
    bg: BgType,
    u: Vec<Poly>,
}

impl CyclicChain {
    /// Validate entries against the chain's twist grid: u_i is a section of
    /// O(mᵢ₊₁ − mᵢ + t) for i < r and u_r one of O(m₁ − m_r + t).
    pub fn new(t: i64, bg: BgType, u: Vec<Poly>) -> Result<Self> {
        if t < 1 {
            return Err(Error::NonPositiveTwist(t));
        }
        let r = bg.rank();
        if u.len() != r {
            return Err(Error::MatrixShape);
        }
        let caps = capacities(&bg, t);
        for (i, (entry, cap)) in u.iter().zip(&caps).enumerate() {
            let ok = match entry.degree() {
                None => true,
                Some(d) => *cap >= 0 && (d as i64) <= *cap,
            };
            if !ok {
                return Err(Error::EntryDegreeBound {
                    row: i,
                    col: i,
                    twist: *cap,
                });
            }
        }
        Ok(CyclicChain { t, bg, u })
    }

    /// Distribute the factors of `s` into the chain slots.
    ///
    /// Slots are filled in index order with the remainder going to the
    /// corner; on a dead end the packer backtracks, so an error means no
    /// distribution at all can respect the capacities.
    pub fn build(bg: BgType, t: i64, s: &FactoredSection) -> Result<Self> {
        if t < 1 {
            return Err(Error::NonPositiveTwist(t));
        }
        let r = bg.rank();
        if s.twist() != t * r as i64 {
            return Err(Error::InvalidFactoredSection(format!(
                "determinant section must have twist t*r = {}, got {}",
                t * r as i64,
                s.twist()
            )));
        }
        let caps = capacities(&bg, t);
        if caps.iter().any(|&c| c < 0) {
            // A negative slot forces a zero entry and a zero determinant.
            return Err(Error::UnpackableFactorization);
        }

        // Items sorted by descending degree; ties keep input order.
        let mut items: Vec<&Poly> = Vec::new();
        for (factor, mult) in s.factors() {
            for _ in 0..*mult {
                items.push(factor);
            }
        }
        items.sort_by_key(|f| std::cmp::Reverse(f.degree()));

        let mut remaining: Vec<i64> = caps.clone();
        let mut assignment: Vec<Vec<&Poly>> = vec![Vec::new(); r];
        if !pack(&items, 0, &mut remaining, &mut assignment) {
            return Err(Error::UnpackableFactorization);
        }

        let mut u: Vec<Poly> = assignment
            .iter()
            .map(|fs| fs.iter().fold(Poly::one(), |acc, f| &acc * *f))
            .collect();
        u[r - 1] = u[r - 1].scale(s.unit());
        CyclicChain::new(t, bg, u)
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn bg(&self) -> &BgType {
        &self.bg
    }

    pub fn rank(&self) -> usize {
        self.bg.rank()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.u
    }

    /// Slot capacities (twists of the u_i).
    pub fn slot_twists(&self) -> Vec<i64> {
        capacities(&self.bg, self.t)
    }

    /// The chain as a twisted pair: u_i on the subdiagonal, u_r in the
    /// corner. In rank 1 the "corner" is the single entry.
    pub fn induced_pair(&self) -> TwistedPair {
        let r = self.rank();
        let mut phi = vec![vec![Poly::zero(); r]; r];
        if r == 1 {
            phi[0][0] = self.u[0].clone();
        } else {
            for i in 0..r - 1 {
                phi[i + 1][i] = self.u[i].clone();
            }
            phi[0][r - 1] = self.u[r - 1].clone();
        }
        TwistedPair::new(self.t, self.bg.clone(), phi)
            .expect("chain entries satisfy the pair twist grid")
    }

    /// det(φ) = (−1)^{r−1} · u_r·u₁⋯u_{r−1}, a section of O(tr).
    pub fn determinant(&self) -> Section {
        let r = self.rank();
        let mut acc = Poly::one();
        for entry in &self.u {
            acc = &acc * entry;
        }
        if (r - 1) % 2 == 1 {
            acc = -acc;
        }
        Section::new(self.t * r as i64, acc).expect("determinant degree bounded by slot sum")
    }

    /// Chain stability rules.
    ///
    /// A vanishing subdiagonal u_i makes the head O(m₁)⊕…⊕O(mᵢ) invariant;
    /// the verdict is unstable on a strict slope excess and at best
    /// semistable on equality. A vanishing corner leaves only the tails
    /// invariant, whose slopes never exceed the total slope: semistable.
    /// With every entry nonzero there is no proper invariant summand span
    /// and the chain is stable.
    pub fn stability(&self) -> Stability {
        let r = self.rank();
        if r == 1 {
            return Stability::Stable;
        }
        let m = self.bg.numbers();
        let mu = self.bg.slope();
        let mut head_equality = false;
        for i in 0..r - 1 {
            if self.u[i].is_zero() {
                let head_sum: i64 = m[..=i].iter().sum();
                let head_mu =
                    Rational::new(head_sum.into(), (i as i64 + 1).into()).unwrap();
                match head_mu.cmp(&mu) {
                    std::cmp::Ordering::Greater => return Stability::Unstable,
                    std::cmp::Ordering::Equal => head_equality = true,
                    std::cmp::Ordering::Less => unreachable!(
                        "a head of a sorted splitting cannot have slope below the mean"
                    ),
                }
            }
        }
        if head_equality {
            return Stability::SemistableOnly;
        }
        if self.u[r - 1].is_zero() {
            debug_assert!((1..r).all(|j| {
                let tail_sum: i64 = m[j..].iter().sum();
                Rational::new(tail_sum.into(), ((r - j) as i64).into()).unwrap() <= mu
            }));
            return Stability::SemistableOnly;
        }
        Stability::Stable
    }
}

fn capacities(bg: &BgType, t: i64) -> Vec<i64> {
    let m = bg.numbers();
    let r = m.len();
    if r == 1 {
        return vec![t];
    }
    let mut caps: Vec<i64> = (0..r - 1).map(|i| m[i + 1] - m[i] + t).collect();
    caps.push(m[0] - m[r - 1] + t);
    caps
}

fn pack<'a>(
    items: &[&'a Poly],
    idx: usize,
    remaining: &mut Vec<i64>,
    assignment: &mut Vec<Vec<&'a Poly>>,
) -> bool {
    if idx == items.len() {
        return true;
    }
    let need = items[idx].degree().unwrap() as i64;
    let mut tried: Vec<i64> = Vec::new();
    for slot in 0..remaining.len() {
        if remaining[slot] < need || tried.contains(&remaining[slot]) {
            continue;
        }
        tried.push(remaining[slot]);
        remaining[slot] -= need;
        assignment[slot].push(items[idx]);
        if pack(items, idx + 1, remaining, assignment) {
            return true;
        }
        assignment[slot].pop();
        remaining[slot] += need;
    }
    false
}

// ---- Wire format: {"t", "bg", "u": [Section...]} ----

#[derive(Serialize, Deserialize)]
struct ChainWire {
    t: i64,
    bg: BgType,
    u: Vec<Section>,
}

impl Serialize for CyclicChain {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let caps = self.slot_twists();
        let u = self
            .u
            .iter()
            .zip(&caps)
            .map(|(entry, &cap)| Section::new(cap.max(0), entry.clone()).expect("validated entry"))
            .collect();
        ChainWire {
            t: self.t,
            bg: self.bg.clone(),
            u,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CyclicChain {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = ChainWire::deserialize(de)?;
        let caps = capacities(&wire.bg, wire.t.max(1));
        for (i, (entry, cap)) in wire.u.iter().zip(&caps).enumerate() {
            if entry.twist() != cap.max(&0).to_owned() {
                return Err(serde::de::Error::custom(format!(
                    "chain entry {i} declares twist {}, expected {}",
                    entry.twist(),
                    cap.max(&0)
                )));
            }
        }
        CyclicChain::new(
            wire.t,
            wire.bg,
            wire.u.into_iter().map(|s| s.rep().clone()).collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}
