//! Polynomials in the spectral variable λ with `Poly` coefficients.
//!
//! A `LambdaPoly` is a polynomial in λ whose coefficients are rational
//! polynomials in the base coordinate x — the affine-chart form of a
//! spectral polynomial λⁿ + s₁λ^{n−1} + … + sₙ. The resultant of two such
//! polynomials eliminates λ and is the workhorse behind branch loci.
//!
//! The resultant is pinned to one convention once and for all: the
//! determinant of the Sylvester matrix with the rows of `f` first. It is
//! computed by evaluation and interpolation — evaluate the matrix at enough
//! base points where no λ-degree drops, take exact scalar determinants,
//! interpolate. The result is the Sylvester determinant as a polynomial
//! identity, with no intermediate expression swell.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::rational_determinant;
use crate::poly::Poly;
use crate::rational::Rational;

/// A polynomial in λ over the ring of rational polynomials in x.
#[derive(Clone, PartialEq, Eq)]
pub struct LambdaPoly {
    coeffs: Vec<Poly>,
}

impl LambdaPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Poly::is_zero) {
            self.coeffs.pop();
        }
    }

    // ---- Constructors ----

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPoly::constant(Poly::one())
    }

    pub fn constant(p: Poly) -> Self {
        let mut out = LambdaPoly { coeffs: vec![p] };
        out.normalize();
        out
    }

    /// `p * λ^deg`.
    pub fn monomial(p: Poly, deg: usize) -> Self {
        if p.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); deg + 1];
        coeffs[deg] = p;
        LambdaPoly { coeffs }
    }

    /// Ascending λ-coefficients.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        let mut out = LambdaPoly { coeffs };
        out.normalize();
        out
    }

    /// The monic spectral polynomial λⁿ + a₁λ^{n−1} + … + aₙ from the list
    /// `(a₁, …, aₙ)` ordered as characteristic coefficients.
    pub fn spectral(coefficients: &[Poly]) -> Self {
        let n = coefficients.len();
        let mut coeffs = vec![Poly::zero(); n + 1];
        coeffs[n] = Poly::one();
        for (i, a) in coefficients.iter().enumerate() {
            coeffs[n - 1 - i] = a.clone();
        }
        LambdaPoly::from_coeffs(coeffs)
    }

    // ---- Queries ----

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Poly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(&Poly::one())
    }

    /// Largest x-degree among the coefficients, `None` for zero.
    pub fn max_coeff_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    /// Formal derivative in λ.
    pub fn lambda_derivative(&self) -> LambdaPoly {
        if self.coeffs.len() <= 1 {
            return LambdaPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, p)| p.scale(&Rational::from_int(i as i64)))
            .collect();
        LambdaPoly::from_coeffs(coeffs)
    }

    /// Evaluate every coefficient at a base point, yielding a polynomial
    /// in λ over the rationals (ascending coefficients).
    pub fn eval_base(&self, x: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|p| p.eval(x)).collect()
    }

    /// The Sylvester matrix of `(f, g)` in λ with the rows of `f` first.
    ///
    /// For deg f = m and deg g = n the matrix is (m+n) × (m+n): n shifted
    /// rows of f-coefficients followed by m shifted rows of g-coefficients,
    /// each row listing coefficients from the leading one downward.
    pub fn sylvester_matrix(f: &LambdaPoly, g: &LambdaPoly) -> Result<Vec<Vec<Poly>>> {
        let (m, n) = match (f.degree(), g.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return Err(Error::ZeroResultantInput),
        };
        if m == 0 && n == 0 {
            return Err(Error::ConstantResultant);
        }
        let size = m + n;
        let mut rows = vec![vec![Poly::zero(); size]; size];
        for shift in 0..n {
            for (k, c) in f.coeffs.iter().rev().enumerate() {
                rows[shift][shift + k] = c.clone();
            }
        }
        for shift in 0..m {
            for (k, c) in g.coeffs.iter().rev().enumerate() {
                rows[n + shift][shift + k] = c.clone();
            }
        }
        Ok(rows)
    }

    /// Resultant of `f` and `g` with respect to λ: the determinant of
    /// [`LambdaPoly::sylvester_matrix`], computed by evaluation at
    /// degree-bound-many base points and exact interpolation.
    ///
    /// The resultant vanishes exactly when `f` and `g` share a common factor
    /// of positive λ-degree, and is multiplicative in each argument.
    pub fn resultant(f: &LambdaPoly, g: &LambdaPoly) -> Result<Poly> {
        let (m, n) = match (f.degree(), g.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return Err(Error::ZeroResultantInput),
        };
        if m == 0 && n == 0 {
            return Err(Error::ConstantResultant);
        }
        // A Leibniz term takes one entry from each row: n entries from f-rows
        // and m from g-rows, bounding the x-degree of the determinant.
        let bound = n * f.max_coeff_degree().unwrap() + m * g.max_coeff_degree().unwrap();

        let lc_f = f.leading_coeff().unwrap();
        let lc_g = g.leading_coeff().unwrap();
        let mut samples: Vec<(Rational, Rational)> = Vec::with_capacity(bound + 1);
        let mut next = 0i64;
        while samples.len() < bound + 1 {
            let x = Rational::from_int(next);
            // alternate 0, 1, -1, 2, -2, ...
            next = if next > 0 { -next } else { -next + 1 };
            if lc_f.eval(&x).is_zero() || lc_g.eval(&x).is_zero() {
                continue;
            }
            let fe = f.eval_base(&x);
            let ge = g.eval_base(&x);
            let det = rational_determinant(&scalar_sylvester(&fe, &ge));
            samples.push((x, det));
        }
        Ok(interpolate(&samples))
    }

    /// Discriminant of `f` in λ with the sign convention
    /// `(-1)^{d(d-1)/2} * Res(f, f') / lc(f)` for d = deg f.
    pub fn discriminant(f: &LambdaPoly) -> Result<Poly> {
        let d = f.degree().ok_or(Error::ZeroResultantInput)?;
        if d == 0 {
            return Err(Error::ConstantResultant);
        }
        let res = LambdaPoly::resultant(f, &f.lambda_derivative())?;
        let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
        Ok(signed.exact_div(f.leading_coeff().unwrap()))
    }
}

/// Scalar Sylvester matrix for evaluated coefficient lists (ascending).
fn scalar_sylvester(f: &[Rational], g: &[Rational]) -> Vec<Vec<Rational>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for shift in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            rows[shift][shift + k] = c.clone();
        }
    }
    for shift in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            rows[n + shift][shift + k] = c.clone();
        }
    }
    rows
}

/// Lagrange interpolation through distinct sample points, via the Newton
/// divided-difference form.
fn interpolate(samples: &[(Rational, Rational)]) -> Poly {
    let n = samples.len();
    let mut diffs: Vec<Rational> = samples.iter().map(|(_, y)| y.clone()).collect();
    // diffs[j] becomes the divided difference  [y_0, ..., y_j]
    for level in 1..n {
        for j in (level..n).rev() {
            let num = &diffs[j] - &diffs[j - 1];
            let den = &samples[j].0 - &samples[j - level].0;
            diffs[j] = num / den;
        }
    }
    let mut acc = Poly::zero();
    for j in (0..n).rev() {
        let root = Poly::linear_root(&samples[j].0);
        acc = &(&acc * &root) + &Poly::constant(diffs[j].clone());
    }
    acc
}

// ---- Operator impls ----

macro_rules! lambda_binop_forward {
    ($trait:ident, $method:ident) => {
        impl $trait for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: &LambdaPoly) -> LambdaPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LambdaPoly> for &LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

lambda_binop_forward!(Add, add);
lambda_binop_forward!(Sub, sub);
lambda_binop_forward!(Mul, mul);

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl num_traits::Zero for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LambdaPoly::is_zero(self)
    }
}

impl num_traits::One for LambdaPoly {
    fn one() -> Self {
        LambdaPoly::one()
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*L")?,
                _ => write!(f, "({p})*L^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
