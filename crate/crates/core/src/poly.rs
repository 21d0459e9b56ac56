//! Dense univariate polynomials with exact rational coefficients.
//!
//! `Poly` stores coefficients in ascending degree order. Invariant: the
//! vector is empty (zero polynomial) or its last element is nonzero, so
//! `degree` is `None` exactly for zero — the "minus infinity" degree.
//!
//! Everything downstream (chart representatives of sections, matrix entries
//! of twisted endomorphisms, spectral coefficients) is built on this type,
//! so the operations here are deliberately plain: ring arithmetic, exact
//! division, Euclidean gcd, squarefree analysis, and rational-root
//! enumeration.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A dense univariate polynomial over the rationals, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    // ---- Constructors ----

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Ascending integer coefficients, mostly for tests and literals.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// `x - root`.
    pub fn linear_root(root: &Rational) -> Self {
        Poly::from_coeffs(vec![-root, Rational::one()])
    }

    // ---- Queries ----

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    // ---- Arithmetic helpers ----

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul_xpow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_int(i as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division by a nonzero divisor: `self = q*div + r` with
    /// `deg r < deg div`.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        let d = div.degree().expect("division by zero polynomial");
        let lc_inv = div
            .leading_coeff()
            .unwrap()
            .recip()
            .expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.leading_coeff().unwrap() * &lc_inv;
            let term = Poly::monomial(c, rd - d);
            rem = &rem - &(&term * div);
            quot = &quot + &term;
        }
        (quot, rem)
    }

    /// Division known to be exact; panics on a nonzero remainder.
    pub fn exact_div(&self, div: &Poly) -> Poly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (Euclidean algorithm over the field
    /// of rationals, remainders renormalized each step).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Squarefree test via `gcd(self, self')`.
    ///
    /// Returns `(is_squarefree, gcd_with_derivative)`; the test is undefined
    /// for the zero polynomial.
    pub fn gcd_squarefree(&self) -> Result<(bool, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let squarefree = g.degree() == Some(0);
        Ok((squarefree, g))
    }

    /// Yun squarefree decomposition: pairs `(factor, multiplicity)` with the
    /// factors monic, squarefree, pairwise coprime, and
    /// `self = lc * prod factor_i^multiplicity_i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let a = self.monic();
        let g = a.gcd(&a.derivative());
        if g.degree() == Some(0) {
            return Ok(vec![(a, 1)]);
        }
        let mut out = Vec::new();
        let mut w = a.exact_div(&g);
        let mut z = &a.derivative().exact_div(&g) - &w.derivative();
        let mut mult = 1usize;
        while w.degree() > Some(0) {
            let h = w.gcd(&z);
            if h.degree() > Some(0) {
                out.push((h.clone(), mult));
            }
            w = w.exact_div(&h);
            z = &z.exact_div(&h) - &w.derivative();
            mult += 1;
        }
        Ok(out)
    }

    /// All rational roots with multiplicities, ascending by root.
    ///
    /// Complete over the rationals: candidates are enumerated from the
    /// divisors of the integerized constant and leading coefficients, so the
    /// call factors those two integers by trial division.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let Some(_) = self.degree() else {
            return Vec::new();
        };
        let mut work = self.clone();
        let mut out = Vec::new();

        // Root at zero first: strip the x^k factor.
        let zero_mult = work
            .coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        if zero_mult > 0 {
            work = Poly::from_coeffs(work.coeffs[zero_mult..].to_vec());
            out.push((Rational::zero(), zero_mult));
        }
        if work.is_constant() {
            out.sort_by(|a, b| a.0.cmp(&b.0));
            return out;
        }

        let ints = work.integerized();
        let lead = ints.last().unwrap().abs();
        let tail = ints.first().unwrap().abs();
        let ps = divisors(&tail);
        let qs = divisors(&lead);

        let mut candidates = Vec::new();
        for p in &ps {
            for q in &qs {
                if p.gcd(q).is_one() {
                    let pos = Rational::new(p.clone(), q.clone()).unwrap();
                    candidates.push(-&pos);
                    candidates.push(pos);
                }
            }
        }
        candidates.sort();
        candidates.dedup();

        for cand in candidates {
            let mut mult = 0usize;
            while !work.is_constant() && work.eval(&cand).is_zero() {
                work = work.exact_div(&Poly::linear_root(&cand));
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Does `self` have a rational root of multiplicity exactly one?
    ///
    /// Returns the smallest such root when one exists. A simple rational
    /// zero of a section certifies irreducibility of the cyclic spectral
    /// polynomial in that chart.
    pub fn simple_rational_root(&self) -> Option<Rational> {
        self.rational_roots()
            .into_iter()
            .find(|(_, mult)| *mult == 1)
            .map(|(root, _)| root)
    }

    /// Exact polynomial `d`-th root, if one exists.
    pub fn nth_root_exact(&self, d: u32) -> Option<Poly> {
        assert!(d >= 1);
        if d == 1 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let deg = self.degree().unwrap();
        if deg % d as usize != 0 {
            return None;
        }
        let lc_root = self.leading_coeff().unwrap().nth_root_exact(d)?;
        let target = self.monic();
        let half_deg = deg / d as usize;
        // Solve coefficient by coefficient from the top; each unknown enters
        // the matched coefficient linearly with factor d.
        let mut root = Poly::monomial(Rational::one(), half_deg);
        let d_rat = Rational::from_int(d as i64);
        for k in 1..=half_deg {
            let current = root.pow(d as usize);
            let delta = &target.coeff(deg - k) - &current.coeff(deg - k);
            let b = delta / d_rat.clone();
            if !b.is_zero() {
                root = &root + &Poly::monomial(b, half_deg - k);
            }
        }
        if root.pow(d as usize) == target {
            Some(root.scale(&lc_root))
        } else {
            None
        }
    }

    /// Primitive integer coefficient vector (ascending): denominators
    /// cleared, content divided out, for root-candidate enumeration.
    fn integerized(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numerator() * (&lcm / c.denominator()))
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if content.is_zero() || content.is_one() {
            ints
        } else {
            ints.iter().map(|v| v / &content).collect()
        }
    }
}

/// All positive divisors of `|n|`, `n != 0`, found by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero());
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            primes.push((p, e));
        }
    };
    let two = BigInt::from(2);
    let mut e = 0;
    while (&m).is_multiple_of(&two) {
        m /= &two;
        e += 1;
    }
    push(two, e);
    let mut d = BigInt::from(3);
    while &d * &d <= m {
        let mut e = 0;
        while (&m).is_multiple_of(&d) {
            m /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if !m.is_one() {
        push(m, 1);
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

// ---- Operator impls ----

macro_rules! poly_binop_forward {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

poly_binop_forward!(Add, add);
poly_binop_forward!(Sub, sub);
poly_binop_forward!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl num_traits::Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl num_traits::One for Poly {
    fn one() -> Self {
        Poly::one()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parse a comma-separated list of ascending rational coefficients.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<Vec<Rational>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}
