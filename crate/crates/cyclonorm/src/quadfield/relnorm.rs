//! Relative norms of 1 - zeta over the quadratic subfield of Q(zeta_p),
//! computed exactly by Gauss-period coset reduction.
//!
//! The product prod_{j in QR(p)} (1 - zeta^{kj}) is accumulated in the group
//! ring Z[x]/(x^p - 1), where multiplying by a binomial 1 - x^e is a sparse
//! O(p) step. Normalizing the constant term to zero (via 1 = -sum zeta^i)
//! must leave the coefficient vector constant on the two multiplicative
//! cosets; the value is then q eta + qbar etabar with eta, etabar the Gauss
//! periods. The canonical embedding is fixed once and for all: for
//! zeta = e^{2 pi i / p}, eta - etabar = sqrt(p) when p = 1 (mod 4) and
//! i sqrt(p) when p = 3 (mod 4), the classical Gauss sum evaluation. With
//! eta + etabar = -1 this rewrites the value as an exact QuadElem.

use super::classno::{class_number_imaginary, class_number_real, legendre};
use super::contfrac::fundamental_unit;
use super::{QuadElem, QuadError};
use crate::polyring::is_prime;
use num_bigint::BigInt;
use num_traits::Zero;

/// The exact relative norm N_{Q(zeta)/Q(sqrt(d*))}(1 - zeta) for
/// zeta = e^{2 pi i k / p}, with d* = p for p = 1 (mod 4) and -p for
/// p = 3 (mod 4).
///
/// Fails with [`QuadError::CosetConstancy`] only on an internal consistency
/// failure, which must never happen.
///
/// # Panics
///
/// Panics unless p is an odd prime and gcd(k, p) = 1.
pub fn gauss_period_relnorm(p: u64, k: u64) -> Result<QuadElem, QuadError> {
    assert!(
        p > 2 && is_prime(p),
        "gauss_period_relnorm: p must be an odd prime"
    );
    assert!(
        !k.is_multiple_of(p),
        "gauss_period_relnorm: k must be coprime to p"
    );
    let pu = p as usize;
    let mut v = vec![BigInt::zero(); pu];
    v[0] = BigInt::from(1);
    for j in 1..p {
        if legendre(j as i64, p) == 1 {
            let e = ((k % p) * j % p) as usize;
            // multiply by (1 - x^e) cyclically: w[i] = v[i] - v[i - e mod p]
            let mut w = vec![BigInt::zero(); pu];
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() {
                    w[i] += vi;
                    w[(i + e) % pu] -= vi;
                }
            }
            v = w;
        }
    }
    // zero the constant term: c_i = v_i - v_0 for i >= 1
    let v0 = v[0].clone();
    let mut q: Option<BigInt> = None;
    let mut qbar: Option<BigInt> = None;
    for i in 1..p {
        let c = &v[i as usize] - &v0;
        let slot = if legendre(i as i64, p) == 1 {
            &mut q
        } else {
            &mut qbar
        };
        match slot {
            None => *slot = Some(c),
            Some(prev) if *prev == c => {}
            Some(_) => return Err(QuadError::CosetConstancy { p, k }),
        }
    }
    let q = q.expect("p > 2 has quadratic residues");
    let qbar = qbar.expect("p > 2 has non-residues");
    // q eta + qbar etabar = (-(q + qbar) + (q - qbar) sqrt(d*)) / 2
    let dstar = if p % 4 == 1 { p as i64 } else { -(p as i64) };
    Ok(QuadElem::new(-(&q + &qbar), q - qbar, 2, dstar)
        .expect("Gauss periods are algebraic integers"))
}

/// Outcome of checking the relative norm against sqrt(p) eps^{+-h}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRelnormCheck {
    pub p: u64,
    /// The exact exponent with relnorm = +-sqrt(p) eps^m.
    pub m: i64,
    /// The analytic class number it is compared against.
    pub h: u32,
    /// The relative norm itself.
    pub relnorm: QuadElem,
    /// True iff |m| = h.
    pub ok: bool,
}

/// Verifies N_{Q(zeta)/Q(sqrt p)}(1 - zeta) = sqrt(p) eps^{+-h} for a prime
/// p = 1 (mod 4): divides the exact relative norm by sqrt(p), then finds the
/// integer m with the quotient equal to +-eps^m by repeated exact
/// multiplication or division. ok means |m| equals the class number.
///
/// The sign of the exponent depends on which conjugate of the period is
/// taken, so m is reported as data and only |m| is asserted.
pub fn verify_real_relnorm(p: u64) -> Result<RealRelnormCheck, QuadError> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(QuadError::Precondition(format!(
            "verify_real_relnorm requires a prime p = 1 (mod 4), got {p}"
        )));
    }
    let relnorm = gauss_period_relnorm(p, 1)?;
    let u = relnorm.div(&QuadElem::sqrt_dstar(p as i64))?;
    let h = class_number_real(p)?;
    let eps = fundamental_unit(p)?.to_quad_elem(p);
    let bound = 4 * h.max(1) as i64;
    let mut eps_pow = QuadElem::from_int(1, p as i64); // eps^m for m = 0, 1, ...
    for m in 0..=bound {
        if u == eps_pow || u == eps_pow.neg() {
            return Ok(RealRelnormCheck {
                p,
                m,
                h,
                relnorm,
                ok: m.unsigned_abs() == h as u64,
            });
        }
        let down = u.mul(&eps_pow); // u eps^m = +-1 iff u = +-eps^{-m}
        if down.is_one() || down.is_neg_one() {
            return Ok(RealRelnormCheck {
                p,
                m: -m,
                h,
                relnorm,
                ok: m.unsigned_abs() == h as u64,
            });
        }
        eps_pow = eps_pow.mul(&eps);
    }
    Err(QuadError::NotUnitMultiple(p))
}

/// Verifies the signed relative norm for a prime p = 3 (mod 4), p > 3:
/// N_{Q(zeta)/Q(sqrt -p)}(1 - zeta) = s i sqrt(p) with
/// s = (k | p) (-1)^{(h+1)/2}, h the class number of Q(sqrt(-p)).
pub fn verify_imag_relnorm(p: u64, k: u64) -> Result<bool, QuadError> {
    if p % 4 != 3 || p <= 3 || !is_prime(p) {
        return Err(QuadError::Precondition(format!(
            "verify_imag_relnorm requires a prime p = 3 (mod 4), p > 3, got {p}"
        )));
    }
    if k.is_multiple_of(p) {
        return Err(QuadError::Precondition(format!(
            "verify_imag_relnorm requires gcd(k, p) = 1, got k = {k}"
        )));
    }
    let value = gauss_period_relnorm(p, k)?;
    let h = class_number_imaginary(p)?;
    let s = legendre(k as i64, p) * if h.div_ceil(2) % 2 == 1 { -1 } else { 1 };
    let expected = QuadElem::new(0, s, 1, -(p as i64)).expect("s sqrt(-p) is integral");
    Ok(value == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relnorm_hand_examples() {
        // (1 - zeta)(1 - zeta^4) = 2 - (zeta + zeta^4) = (5 - sqrt 5)/2
        assert_eq!(
            gauss_period_relnorm(5, 1).unwrap(),
            QuadElem::new(5, -1, 2, 5).unwrap()
        );
        // (1 - zeta)(1 - zeta^2)(1 - zeta^4) = etabar - eta = -sqrt(-7)
        assert_eq!(
            gauss_period_relnorm(7, 1).unwrap(),
            QuadElem::new(0, -1, 1, -7).unwrap()
        );
        // conjugate orbit
        assert_eq!(
            gauss_period_relnorm(7, 3).unwrap(),
            QuadElem::new(0, 1, 1, -7).unwrap()
        );
        // single-factor case 1 - zeta for p = 3
        assert_eq!(
            gauss_period_relnorm(3, 1).unwrap(),
            QuadElem::new(3, -1, 2, -3).unwrap()
        );
        // sqrt(13) eps^-1 = (13 - 3 sqrt 13)/2
        assert_eq!(
            gauss_period_relnorm(13, 1).unwrap(),
            QuadElem::new(13, -3, 2, 13).unwrap()
        );
    }

    #[test]
    fn relnorm_times_conjugate_is_absolute_norm() {
        // the conjugate is the non-residue coset product, and the full
        // product over all k is N(1 - zeta) = p
        for p in (3..=199u64).filter(|&p| is_prime(p)) {
            let v = gauss_period_relnorm(p, 1).unwrap();
            assert_eq!(
                v.mul(&v.conj()),
                QuadElem::from_int(p, v.dstar()),
                "p = {p}"
            );
        }
    }

    #[test]
    fn relnorm_depends_only_on_coset() {
        for p in [7u64, 11, 13, 17] {
            let base = gauss_period_relnorm(p, 1).unwrap();
            for k in 2..p {
                let v = gauss_period_relnorm(p, k).unwrap();
                if legendre(k as i64, p) == 1 {
                    assert_eq!(v, base, "p = {p}, k = {k}");
                } else {
                    assert_eq!(v, base.conj(), "p = {p}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn real_relnorm_examples() {
        let c = verify_real_relnorm(5).unwrap();
        assert_eq!((c.m, c.h, c.ok), (-1, 1, true));
        assert_eq!(c.relnorm, QuadElem::new(5, -1, 2, 5).unwrap());

        let c = verify_real_relnorm(13).unwrap();
        assert_eq!((c.m.abs(), c.h, c.ok), (1, 1, true));

        let c = verify_real_relnorm(229).unwrap();
        assert_eq!((c.m.abs(), c.h, c.ok), (3, 3, true));
    }

    #[test]
    fn real_relnorm_rejects_bad_input() {
        assert!(matches!(
            verify_real_relnorm(7),
            Err(QuadError::Precondition(_))
        ));
    }

    #[test]
    fn imag_relnorm_examples() {
        // h(-7) = 1, s = (1|7)(-1)^1 = -1, value -sqrt(-7)
        assert_eq!(verify_imag_relnorm(7, 1), Ok(true));
        // s = (3|7)(-1)^1 = +1, value +sqrt(-7)
        assert_eq!(verify_imag_relnorm(7, 3), Ok(true));
        // h(-11) = 1, predicted -sqrt(-11)
        assert_eq!(verify_imag_relnorm(11, 1), Ok(true));
        assert!(matches!(
            verify_imag_relnorm(13, 1),
            Err(QuadError::Precondition(_))
        ));
        assert!(matches!(
            verify_imag_relnorm(3, 1),
            Err(QuadError::Precondition(_))
        ));
        assert!(matches!(
            verify_imag_relnorm(7, 14),
            Err(QuadError::Precondition(_))
        ));
    }
}
