//! Dense integer-coefficient univariate polynomials and cyclotomic polynomials.
//!
//! `IntPoly` stores coefficients in ascending degree order as a `Vec<BigInt>`.
//! Invariant: the vector is either empty (the zero polynomial) or its last
//! element is nonzero. All arithmetic is exact; coefficients are
//! arbitrary-precision from the start.
//!
//! Cyclotomic polynomials are built by iterated exact division,
//! Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x), which stays in `Z[x]`
//! throughout. Small number-theoretic helpers (divisors, Moebius, primality
//! by trial division) live here as well since the divisor-product norm
//! formula needs them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Errors from exact polynomial arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// The divisor does not divide the dividend in `Z[x]`.
    #[error("inexact division")]
    InexactDivision,
}

/// A dense univariate polynomial with `BigInt` coefficients.
///
/// `coeffs[i]` is the coefficient of x^i. The representation is canonical:
/// empty for the zero polynomial, last element nonzero otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// A constant polynomial. Returns the zero polynomial if `c` is zero.
    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial c * x^deg.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    /// Construct from coefficients in ascending degree order, stripping
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from i64 coefficients (ascending order).
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^n - 1, the vanishing polynomial of all n-th roots of unity.
    pub fn x_pow_minus_one(n: u64) -> Self {
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial (the "minus infinity" case).
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Read-only access to the coefficient slice.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exact division: returns s with `divisor * s == self`.
    ///
    /// Fails with [`PolyError::InexactDivision`] if the remainder is nonzero
    /// or any intermediate quotient coefficient is non-integral.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is the zero polynomial.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        assert!(!divisor.is_zero(), "exact_div: division by zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Err(PolyError::InexactDivision);
        }
        let lc = divisor.leading().expect("divisor is nonzero");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let lead = std::mem::take(&mut rem[k + dn - 1]);
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(lc);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (j, dj) in divisor.coeffs.iter().enumerate().take(dn - 1) {
                rem[k + j] -= &q * dj;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Exact evaluation at an integer point by Horner's rule.
    pub fn eval_int(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
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
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "x")?;
                }
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The Moebius function, via trial-division factorization.
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius: n must be positive");
    let mut m = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Primality by trial division. Desk scale only; no certification needed here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut p = 5;
    while p * p <= n {
        if n.is_multiple_of(p) || n.is_multiple_of(p + 2) {
            return false;
        }
        p += 6;
    }
    true
}

/// The n-th cyclotomic polynomial Phi_n, monic of degree phi(n).
///
/// Computed by iterated exact division: for each divisor d of n in ascending
/// order, Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e. Every intermediate
/// step stays in `Z[x]`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic: n must be positive");
    let divs = divisors(n);
    let mut table: Vec<(u64, IntPoly)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut phi = IntPoly::x_pow_minus_one(d);
        for (e, phi_e) in &table {
            if d % e == 0 {
                phi = phi
                    .exact_div(phi_e)
                    .expect("cyclotomic construction divides exactly");
            }
        }
        table.push((d, phi));
    }
    table.pop().expect("divisor list is nonempty").1
}
