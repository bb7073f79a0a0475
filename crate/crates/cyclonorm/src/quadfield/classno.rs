//! Class numbers of prime-discriminant quadratic fields.
//!
//! Imaginary fields (p = 3 mod 4) count reduced binary quadratic forms of
//! discriminant -p, an exact integer enumeration. Real fields (p = 1 mod 4)
//! use the Dirichlet class number formula
//! h = -sum_a (a|p) ln sin(pi a / p) / (2 ln eps), the one deliberately
//! floating-point computation in this crate. It runs at 16 + p bits of
//! working precision and must land within 0.01 of an integer, with a single
//! precision-doubling retry.

use super::contfrac::fundamental_unit;
use super::QuadError;
use crate::polyring::is_prime;
use astro_float::{BigFloat, Consts, Radix, RoundingMode};

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u128;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        exp >>= 1;
        b = b * b % m;
    }
    acc as u64
}

/// The Legendre symbol (a | p) in {-1, 0, 1} by Euler's criterion,
/// a^((p-1)/2) mod p.
///
/// # Panics
///
/// Panics unless p is an odd prime.
pub fn legendre(a: i64, p: u64) -> i32 {
    assert!(p > 2 && is_prime(p), "legendre: p must be an odd prime");
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let e = pow_mod(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        debug_assert_eq!(e, p - 1);
        -1
    }
}

/// The class number of Q(sqrt(-p)) for a prime p = 3 (mod 4), p > 3, as the
/// count of reduced primitive forms (A, B, C) with B^2 - 4AC = -p,
/// |B| <= A <= C, and B >= 0 on the boundary |B| = A or A = C.
pub fn class_number_imaginary(p: u64) -> Result<u32, QuadError> {
    if p % 4 != 3 || p <= 3 || !is_prime(p) {
        return Err(QuadError::Precondition(format!(
            "class_number_imaginary requires a prime p = 3 (mod 4), p > 3, got {p}"
        )));
    }
    let mut count = 0u32;
    let mut a = 1u64;
    while 3 * a * a <= p {
        let mut b = -(a as i64);
        while b <= a as i64 {
            // -p = B^2 - 4AC forces B odd
            if b.rem_euclid(2) == 1 {
                let num = (b * b) as u64 + p;
                if num.is_multiple_of(4 * a) {
                    let c = num / (4 * a);
                    if c >= a && !((b.unsigned_abs() == a || a == c) && b < 0) {
                        count += 1;
                    }
                }
            }
            b += 1;
        }
        a += 1;
    }
    Ok(count)
}

fn big_from_int(v: &num_bigint::BigInt, prec: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&v.to_string(), Radix::Dec, prec, RoundingMode::None, cc)
}

/// One evaluation of the analytic formula at `prec` bits. Returns the class
/// number if the pre-rounding value lies within 0.01 of an integer.
fn real_class_number_attempt(p: u64, prec: usize) -> Option<u32> {
    let rm = RoundingMode::None;
    let mut cc = Consts::new().expect("constants cache");
    let pi = cc.pi(prec, rm);
    let p_f = BigFloat::from_i64(p as i64, prec);
    let mut sum = BigFloat::from_i64(0, prec);
    for a in 1..p {
        let chi = legendre(a as i64, p);
        let angle = pi
            .mul(&BigFloat::from_i64(a as i64, prec), prec, rm)
            .div(&p_f, prec, rm);
        let term = angle.sin(prec, rm, &mut cc).ln(prec, rm, &mut cc);
        sum = if chi >= 0 {
            sum.add(&term, prec, rm)
        } else {
            sum.sub(&term, prec, rm)
        };
    }
    let unit = fundamental_unit(p).ok()?;
    let eps = big_from_int(&unit.x, prec, &mut cc)
        .add(
            &big_from_int(&unit.y, prec, &mut cc).mul(&p_f.sqrt(prec, rm), prec, rm),
            prec,
            rm,
        )
        .div(&BigFloat::from_i64(2, prec), prec, rm);
    let two_log_eps = eps
        .ln(prec, rm, &mut cc)
        .mul(&BigFloat::from_i64(2, prec), prec, rm);
    let ratio = sum.neg().div(&two_log_eps, prec, rm);
    let window = BigFloat::from_f64(0.01, prec);
    for h in 0..=p {
        let dist = ratio
            .sub(&BigFloat::from_i64(h as i64, prec), prec, rm)
            .abs();
        if matches!(dist.cmp(&window), Some(c) if c <= 0) {
            return Some(h as u32);
        }
    }
    None
}

/// The class number of Q(sqrt(p)) for a prime p = 1 (mod 4), by the
/// analytic formula. Fails with [`QuadError::AnalyticUnstable`] only if the
/// 0.01 integrality window is missed at both the base precision and one
/// doubled retry.
pub fn class_number_real(p: u64) -> Result<u32, QuadError> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(QuadError::Precondition(format!(
            "class_number_real requires a prime p = 1 (mod 4), got {p}"
        )));
    }
    let prec = std::cmp::max(64, 16 + p as usize);
    real_class_number_attempt(p, prec)
        .or_else(|| real_class_number_attempt(p, 2 * prec))
        .ok_or(QuadError::AnalyticUnstable(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 7), 1);
        assert_eq!(legendre(3, 7), -1); // squares mod 7 are {1, 2, 4}
        assert_eq!(legendre(2, 17), 1); // 6^2 = 36 = 2 (mod 17)
        assert_eq!(legendre(0, 7), 0);
        assert_eq!(legendre(-1, 7), -1); // p = 3 (mod 4)
        assert_eq!(legendre(-1, 13), 1); // p = 1 (mod 4)
    }

    #[test]
    fn legendre_multiplicative() {
        for p in [7u64, 11, 13, 17, 19, 23] {
            for a in 1..p as i64 {
                for b in 1..p as i64 {
                    assert_eq!(
                        legendre(a * b, p),
                        legendre(a, p) * legendre(b, p),
                        "a = {a}, b = {b}, p = {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn imaginary_class_numbers() {
        assert_eq!(class_number_imaginary(7).unwrap(), 1); // only (1,1,2)
        assert_eq!(class_number_imaginary(23).unwrap(), 3); // (1,1,6), (2,+-1,3)
        assert_eq!(class_number_imaginary(47).unwrap(), 5);
        // the classical h = 1 discriminants of prime absolute value
        for (p, h) in [
            (7, 1),
            (11, 1),
            (19, 1),
            (23, 3),
            (31, 3),
            (43, 1),
            (47, 5),
            (67, 1),
            (163, 1),
        ] {
            assert_eq!(class_number_imaginary(p).unwrap(), h, "p = {p}");
        }
    }

    #[test]
    fn imaginary_rejects_bad_input() {
        assert!(matches!(
            class_number_imaginary(3),
            Err(QuadError::Precondition(_))
        ));
        assert!(matches!(
            class_number_imaginary(13),
            Err(QuadError::Precondition(_))
        ));
        assert!(matches!(
            class_number_imaginary(15),
            Err(QuadError::Precondition(_))
        ));
    }

    #[test]
    fn real_class_numbers() {
        assert_eq!(class_number_real(5).unwrap(), 1);
        assert_eq!(class_number_real(13).unwrap(), 1);
        // smallest prime = 1 (mod 4) with h > 1
        assert_eq!(class_number_real(229).unwrap(), 3);
    }

    #[test]
    fn real_rejects_bad_input() {
        assert!(matches!(
            class_number_real(7),
            Err(QuadError::Precondition(_))
        ));
        assert!(matches!(
            class_number_real(21),
            Err(QuadError::Precondition(_))
        ));
    }
}
