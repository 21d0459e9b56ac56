//! Twisted pairs on the projective line.
//!
//! A pair is a bundle E ≅ O(m₁)⊕…⊕O(m_r) together with a twisted
//! endomorphism φ: E → E⊗O(t), held as an r×r matrix whose (i,j) entry is a
//! section of O(mᵢ − mⱼ + t). The module computes the characteristic
//! coefficients of φ two independent ways — through the trace/Newton
//! determinant formula and through a direct expansion of det(λ·1 − φ) —
//! verifies the Cayley–Hamilton identity, builds companion pairs, and
//! carries the numeric side constraints (Grothendieck inequality, slope,
//! tangent-space dimension).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lambda::LambdaPoly;
use crate::linalg::determinant;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::section::Section;

// ---- Splitting type ----

/// A Birkhoff–Grothendieck splitting type: Grothendieck numbers sorted
/// non-increasing.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct BgType(Vec<i64>);

impl BgType {
    pub fn new(m: Vec<i64>) -> Result<Self> {
        if m.is_empty() || m.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::UnsortedSplitting);
        }
        Ok(BgType(m))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn numbers(&self) -> &[i64] {
        &self.0
    }

    /// deg / rank, exactly.
    pub fn slope(&self) -> Rational {
        Rational::new(self.degree().into(), (self.rank() as i64).into()).unwrap()
    }

    /// The necessary condition mᵢ ≤ mᵢ₊₁ + t for underlying a t-twisted
    /// semistable pair.
    pub fn grothendieck_constraint(&self, t: i64) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1] + t)
    }
}

impl TryFrom<Vec<i64>> for BgType {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        BgType::new(v)
    }
}

impl From<BgType> for Vec<i64> {
    fn from(bg: BgType) -> Vec<i64> {
        bg.0
    }
}

// ---- Poly matrices (module-private helpers) ----

type PolyMatrix = Vec<Vec<Poly>>;

fn mat_identity(r: usize) -> PolyMatrix {
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { Poly::one() } else { Poly::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let r = a.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut acc = Poly::zero();
                    for (k, aik) in a[i].iter().enumerate() {
                        if !aik.is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(aik * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn mat_trace(a: &PolyMatrix) -> Poly {
    let mut acc = Poly::zero();
    for (i, row) in a.iter().enumerate() {
        acc = &acc + &row[i];
    }
    acc
}

fn mat_add_scaled(acc: &mut PolyMatrix, m: &PolyMatrix, c: &Poly) {
    for (row_acc, row_m) in acc.iter_mut().zip(m) {
        for (e_acc, e_m) in row_acc.iter_mut().zip(row_m) {
            *e_acc = &*e_acc + &(e_m * c);
        }
    }
}

// ---- Twisted pairs ----

/// A t-twisted pair (E, φ) with E given by its splitting type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedPair {
    t: i64,
    bg: BgType,
    phi: PolyMatrix,
}

impl TwistedPair {
    /// Validate the matrix against the twist grid: entry (i,j) is a section
    /// of O(mᵢ − mⱼ + t) and must vanish where that twist is negative.
    pub fn new(t: i64, bg: BgType, phi: Vec<Vec<Poly>>) -> Result<Self> {
        if t < 1 {
            return Err(Error::NonPositiveTwist(t));
        }
        let r = bg.rank();
        if phi.len() != r || phi.iter().any(|row| row.len() != r) {
            return Err(Error::MatrixShape);
        }
        let m = bg.numbers();
        for (i, row) in phi.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let twist = m[i] - m[j] + t;
                let bound_ok = match entry.degree() {
                    None => true,
                    Some(d) => twist >= 0 && (d as i64) <= twist,
                };
                if !bound_ok {
                    return Err(Error::EntryDegreeBound { row: i, col: j, twist });
                }
            }
        }
        Ok(TwistedPair { t, bg, phi })
    }

    pub fn twist(&self) -> i64 {
        self.t
    }

    pub fn bg(&self) -> &BgType {
        &self.bg
    }

    pub fn rank(&self) -> usize {
        self.bg.rank()
    }

    pub fn entries(&self) -> &[Vec<Poly>] {
        &self.phi
    }

    pub fn entry_twist(&self, i: usize, j: usize) -> i64 {
        self.bg.numbers()[i] - self.bg.numbers()[j] + self.t
    }

    /// The same pair written on the second chart: every entry replaced by
    /// its flip within the entry's own twist.
    pub fn flipped(&self) -> TwistedPair {
        let m = self.bg.numbers();
        let phi = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, entry)| {
                        let twist = m[i] - m[j] + self.t;
                        if entry.is_zero() {
                            Poly::zero()
                        } else {
                            Section::new(twist, entry.clone()).unwrap().flip_chart()
                        }
                    })
                    .collect()
            })
            .collect();
        TwistedPair {
            t: self.t,
            bg: self.bg.clone(),
            phi,
        }
    }

    /// Characteristic coefficients through the trace formula: sᵢ =
    /// (−1)ⁱ tr(∧ⁱφ), with tr(∧ⁱφ) the i×i Newton determinant in the power
    /// traces tr(φ), …, tr(φⁱ), divided by i!.
    pub fn char_coefficients_newton(&self) -> HitchinTuple {
        let r = self.rank();
        let mut traces = Vec::with_capacity(r);
        let mut power = mat_identity(r);
        for _ in 0..r {
            power = mat_mul(&power, &self.phi);
            traces.push(mat_trace(&power));
        }
        let mut sections = Vec::with_capacity(r);
        let mut factorial = Rational::one();
        for i in 1..=r {
            factorial = factorial * Rational::from_int(i as i64);
            let mut newton = vec![vec![Poly::zero(); i]; i];
            for j in 0..i {
                for l in 0..=j {
                    newton[j][l] = traces[j - l].clone();
                }
                if j + 1 < i {
                    newton[j][j + 1] =
                        Poly::constant(Rational::from_int((i - 1 - j) as i64));
                }
            }
            let wedge_trace = determinant(&newton).scale(&factorial.recip().unwrap());
            let s = if i % 2 == 0 { wedge_trace } else { -wedge_trace };
            sections.push(self.coefficient_section(i, s));
        }
        HitchinTuple {
            t: self.t,
            s: sections,
        }
    }

    /// Characteristic coefficients through the expansion of det(λ·1 − φ).
    pub fn char_coefficients_det(&self) -> HitchinTuple {
        let r = self.rank();
        let m: Vec<Vec<LambdaPoly>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let mut entry = LambdaPoly::constant(-&self.phi[i][j]);
                        if i == j {
                            entry = &entry + &LambdaPoly::monomial(Poly::one(), 1);
                        }
                        entry
                    })
                    .collect()
            })
            .collect();
        let char_poly = determinant(&m);
        assert!(char_poly.is_monic() && char_poly.degree() == Some(r));
        let sections = (1..=r)
            .map(|i| self.coefficient_section(i, char_poly.coeff(r - i)))
            .collect();
        HitchinTuple {
            t: self.t,
            s: sections,
        }
    }

    fn coefficient_section(&self, i: usize, s: Poly) -> Section {
        // A characteristic coefficient is a global section of O(ti); the
        // bound is a theorem, so a breach is an internal invariant failure.
        Section::new(self.t * i as i64, s)
            .expect("characteristic coefficient exceeds its twist bound")
    }

    /// Does φ satisfy its own characteristic polynomial,
    /// φʳ + Σ sᵢ·φ^{r−i} = 0, with the sᵢ taken from the determinant route?
    pub fn cayley_hamilton_check(&self) -> bool {
        let r = self.rank();
        let s = self.char_coefficients_det();
        let mut powers = Vec::with_capacity(r + 1);
        powers.push(mat_identity(r));
        for k in 1..=r {
            powers.push(mat_mul(&powers[k - 1], &self.phi));
        }
        let mut acc = powers[r].clone();
        for i in 1..=r {
            mat_add_scaled(&mut acc, &powers[r - i], s.s[i - 1].rep());
        }
        acc.iter().all(|row| row.iter().all(Poly::is_zero))
    }
}

// ---- Wire format ----

#[derive(Serialize, Deserialize)]
struct PairWire {
    t: i64,
    bg: BgType,
    phi: Vec<Vec<Section>>,
}

impl Serialize for TwistedPair {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.bg.numbers();
        let phi = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, entry)| {
                        let twist = (m[i] - m[j] + self.t).max(0);
                        Section::new(twist, entry.clone()).expect("validated entry")
                    })
                    .collect()
            })
            .collect();
        PairWire {
            t: self.t,
            bg: self.bg.clone(),
            phi,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for TwistedPair {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = PairWire::deserialize(de)?;
        let m = wire.bg.numbers().to_vec();
        let mut phi = Vec::with_capacity(wire.phi.len());
        for (i, row) in wire.phi.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, entry) in row.iter().enumerate() {
                let expected = m
                    .get(i)
                    .zip(m.get(j))
                    .map(|(mi, mj)| (mi - mj + wire.t).max(0));
                if expected != Some(entry.twist()) {
                    return Err(serde::de::Error::custom(format!(
                        "entry ({i},{j}) declares twist {}, expected {:?}",
                        entry.twist(),
                        expected
                    )));
                }
                out.push(entry.rep().clone());
            }
            phi.push(out);
        }
        TwistedPair::new(wire.t, wire.bg, phi).map_err(serde::de::Error::custom)
    }
}

// ---- Hitchin tuples ----

/// A point of the Hitchin base: sections s₁, …, s_r with sᵢ ∈ H⁰(O(ti)).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "TupleWire", into = "TupleWire")]
pub struct HitchinTuple {
    t: i64,
    s: Vec<Section>,
}

#[derive(Serialize, Deserialize)]
struct TupleWire {
    t: i64,
    s: Vec<Section>,
}

impl TryFrom<TupleWire> for HitchinTuple {
    type Error = Error;
    fn try_from(w: TupleWire) -> Result<Self> {
        HitchinTuple::new(w.t, w.s)
    }
}

impl From<HitchinTuple> for TupleWire {
    fn from(h: HitchinTuple) -> TupleWire {
        TupleWire { t: h.t, s: h.s }
    }
}

impl HitchinTuple {
    pub fn new(t: i64, s: Vec<Section>) -> Result<Self> {
        if t < 1 {
            return Err(Error::NonPositiveTwist(t));
        }
        if s.is_empty() {
            return Err(Error::UnsortedSplitting);
        }
        for (index, section) in s.iter().enumerate() {
            let expected = t * (index as i64 + 1);
            if section.twist() != expected {
                return Err(Error::TupleTwistMismatch {
                    index,
                    expected,
                    got: section.twist(),
                });
            }
        }
        Ok(HitchinTuple { t, s })
    }

    /// The cyclic tuple (0, …, 0, −s) whose spectral polynomial is λʳ − s.
    pub fn cyclic(t: i64, r: usize, s: Section) -> Result<Self> {
        let mut sections: Vec<Section> = (1..r as i64)
            .map(|i| Section::zero(t * i))
            .collect();
        let neg = s.scale(&Rational::from_int(-1));
        sections.push(neg);
        HitchinTuple::new(t, sections)
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn rank(&self) -> usize {
        self.s.len()
    }

    pub fn sections(&self) -> &[Section] {
        &self.s
    }

    /// True when s₁ = … = s_{r−1} = 0, i.e. the spectral polynomial is
    /// λʳ + s_r.
    pub fn is_cyclic_shape(&self) -> bool {
        self.s[..self.s.len() - 1].iter().all(Section::is_zero)
    }

    /// The spectral polynomial λʳ + s₁λ^{r−1} + … + s_r on the first chart.
    pub fn spectral_poly(&self) -> LambdaPoly {
        let reps: Vec<Poly> = self.s.iter().map(|s| s.rep().clone()).collect();
        LambdaPoly::spectral(&reps)
    }

    /// The companion pair of the tuple, on E = O ⊕ O(−t) ⊕ … ⊕ O(−(r−1)t):
    /// ones on the subdiagonal, −s_r, …, −s₁ down the last column.
    pub fn companion(&self) -> TwistedPair {
        let r = self.rank();
        let bg = BgType::new((0..r as i64).map(|i| -i * self.t).collect()).unwrap();
        let mut phi = vec![vec![Poly::zero(); r]; r];
        for i in 1..r {
            phi[i][i - 1] = Poly::one();
        }
        for i in 0..r {
            phi[i][r - 1] = -self.s[r - 1 - i].rep();
        }
        TwistedPair::new(self.t, bg, phi).expect("companion satisfies its twist grid")
    }
}

// ---- Numeric side conditions ----

/// Dimension of the Zariski tangent space of the stable-pair moduli at a
/// smooth point: r²·deg(O(t)) + 1 + h¹(P¹, O(t)), and the h¹ term vanishes
/// for every positive twist.
pub fn nitsure_dimension(r: u32, t: i64) -> Result<i64> {
    if t < 1 {
        return Err(Error::OutsideTreatedCases);
    }
    assert!(r >= 1, "rank must be positive");
    Ok((r as i64) * (r as i64) * t + 1)
}
