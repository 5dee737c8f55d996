//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, and the distributional properties evaluated on them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial `c_0 + c_1 z + … + c_d z^d` over the integers.
///
/// Coefficients are stored lowest degree first with trailing zeros
/// stripped, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · z^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(1, BigInt::one())
    }

    /// Builds `Σ counts[k] · z^k` from a histogram.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.coeffs.iter().position(Signed::is_negative) {
            Some(index) => Err(Error::NegativeCoefficient {
                index,
                value: self.coeffs[index].to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return Err(Error::NegativeExponent(exp));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// `p(z^s)`.
    pub fn substitute_power(&self, s: usize) -> Self {
        assert!(s >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * s] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True iff `p_i = p_{m−i}` for all `0 ≤ i ≤ m` and `deg p ≤ m`.
    pub fn is_symmetric(&self, m: usize) -> bool {
        self.symmetry_violation(m).is_none()
    }

    fn symmetry_violation(&self, m: usize) -> Option<Error> {
        if let Some(d) = self.degree() {
            if d > m {
                return Some(Error::DegreeExceedsCenter {
                    degree: d,
                    center: m,
                });
            }
        }
        (0..=m / 2)
            .find(|&i| self.coeff(i) != self.coeff(m - i))
            .map(|i| Error::NotSymmetric {
                center: m,
                i,
                j: m - i,
            })
    }

    /// True iff some peak index `t` has `p_0 ≤ … ≤ p_t ≥ … ≥ p_d`.
    pub fn is_unimodal(&self) -> Result<bool> {
        self.check_nonnegative()?;
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        Ok(i + 1 >= c.len())
    }

    /// True iff `p_i² ≥ p_{i−1} p_{i+1}` at every internal index.
    pub fn is_log_concave(&self) -> Result<bool> {
        self.check_nonnegative()?;
        Ok(self
            .coeffs
            .windows(3)
            .all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
    }

    /// Expands a polynomial symmetric about `m` in the basis
    /// `z^i (1+z)^{m−2i}`, `0 ≤ i ≤ ⌊m/2⌋`.
    pub fn gamma_expansion(&self, m: usize) -> Result<GammaVector> {
        if let Some(err) = self.symmetry_violation(m) {
            return Err(err);
        }
        let one_plus_z = IntPolynomial::from_i64s(&[1, 1]);
        let mut rest = self.clone();
        let mut gammas = Vec::with_capacity(m / 2 + 1);
        for i in 0..=m / 2 {
            let g = rest.coeff(i);
            if !g.is_zero() {
                let basis = one_plus_z.pow((m - 2 * i) as i64)?.shift(i);
                rest -= basis.scale(&g);
            }
            gammas.push(g);
        }
        debug_assert!(rest.is_zero(), "symmetric remainder must vanish");
        Ok(GammaVector { gammas, center: m })
    }

    /// Splits `f` into the unique `f^(0), …, f^(s−1)` with
    /// `f(z) = Σ_ℓ z^ℓ f^(ℓ)(z^s)`.
    pub fn congruence_sections(&self, s: usize) -> Vec<IntPolynomial> {
        assert!(s >= 1, "section modulus must be positive");
        let mut parts: Vec<Vec<BigInt>> = vec![Vec::new(); s];
        for (i, c) in self.coeffs.iter().enumerate() {
            parts[i % s].push(c.clone());
        }
        parts.into_iter().map(IntPolynomial::new).collect()
    }

    /// Inverse of [`congruence_sections`](Self::congruence_sections).
    pub fn from_sections(sections: &[IntPolynomial]) -> Self {
        let s = sections.len();
        sections
            .iter()
            .enumerate()
            .map(|(l, f)| f.substitute_power(s).shift(l))
            .sum()
    }
}

/// Coordinates of a symmetric polynomial in the γ-basis
/// `{z^i (1+z)^{center−2i}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub gammas: Vec<BigInt>,
    pub center: usize,
}

impl GammaVector {
    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    pub fn reconstruct(&self) -> IntPolynomial {
        let one_plus_z = IntPolynomial::from_i64s(&[1, 1]);
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| {
                one_plus_z
                    .pow((self.center - 2 * i) as i64)
                    .expect("nonnegative exponent")
                    .shift(i)
                    .scale(g)
            })
            .sum()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}z^{i}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl AddAssign for IntPolynomial {
    fn add_assign(&mut self, rhs: IntPolynomial) {
        *self += &rhs;
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl SubAssign for IntPolynomial {
    fn sub_assign(&mut self, rhs: IntPolynomial) {
        *self -= &rhs;
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| acc + p)
    }
}

impl<'a> std::iter::Sum<&'a IntPolynomial> for IntPolynomial {
    fn sum<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}
