//! Periodic continued fractions of square roots and fundamental units.

use super::{QuadElem, QuadError};
use num_bigint::BigInt;
use num_traits::Zero;

/// The periodic continued fraction of sqrt(d): [a0; period repeating].
///
/// The last period entry is 2*a0 and the period is palindromic apart from
/// that final entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    pub a0: u64,
    pub period: Vec<u64>,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Continued fraction of sqrt(d) by the integer-only (m, q, a) recurrence,
/// terminating at the first a = 2*a0.
///
/// Fails with [`QuadError::PerfectSquare`] when d is one.
pub fn cf_sqrt(d: u64) -> Result<CFExpansion, QuadError> {
    assert!(d >= 1, "cf_sqrt: d must be positive");
    let a0 = isqrt(d);
    if a0 * a0 == d {
        return Err(QuadError::PerfectSquare(d));
    }
    let mut period = Vec::new();
    let mut m = 0u64;
    let mut q = 1u64;
    let mut a = a0;
    loop {
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        period.push(a);
        if a == 2 * a0 {
            return Ok(CFExpansion { a0, period });
        }
    }
}

/// The fundamental unit epsilon = (x + y sqrt(p)) / 2 of the ring of
/// integers of Q(sqrt(p)), as the minimal positive solution of
/// x^2 - p y^2 = +-4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellUnit {
    pub x: BigInt,
    pub y: BigInt,
    /// The sign in x^2 - p y^2 = 4 * norm_sign.
    pub norm_sign: i32,
}

impl PellUnit {
    /// The unit as an exact field element.
    pub fn to_quad_elem(&self, p: u64) -> QuadElem {
        QuadElem::new(self.x.clone(), self.y.clone(), 2, p as i64)
            .expect("Pell solutions are ring elements")
    }
}

fn big_is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    if n.sign() == num_bigint::Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// The fundamental unit of Q(sqrt(p)) for a prime p = 1 (mod 4): the
/// minimal (x, y) with x, y > 0 and x^2 - p y^2 = +-4.
///
/// Candidates come from the convergents of the continued fraction of
/// sqrt(p) (which capture every solution once p > 16) together with the
/// explicit y = 1, 2 half-integer checks that cover the small cases.
pub fn fundamental_unit(p: u64) -> Result<PellUnit, QuadError> {
    if p % 4 != 1 || !crate::polyring::is_prime(p) {
        return Err(QuadError::Precondition(format!(
            "fundamental_unit requires a prime p = 1 (mod 4), got {p}"
        )));
    }
    for y in 1u64..=2 {
        // the -4 case first: for equal y it has the smaller x
        for sign in [-1i32, 1] {
            let t = BigInt::from(p) * y * y + 4 * sign;
            if let Some(x) = big_is_square(&t) {
                if !x.is_zero() {
                    return Ok(PellUnit {
                        x,
                        y: BigInt::from(y),
                        norm_sign: sign,
                    });
                }
            }
        }
    }

    // Walk convergents h_k / k_k of sqrt(p); the first with
    // h^2 - p k^2 in {+-1, +-4} yields the unit (scaled by 2 for +-1).
    let cf = cf_sqrt(p).expect("p = 1 mod 4 prime is not a square");
    let p_big = BigInt::from(p);
    let mut h_prev = BigInt::from(1);
    let mut h = BigInt::from(cf.a0);
    let mut k_prev = BigInt::from(0);
    let mut k = BigInt::from(1);
    let mut terms = cf.period.iter().cycle();
    // 4 periods is far beyond where the +-1 solution must appear
    for _ in 0..(4 * cf.period.len() + 8) {
        let v = &h * &h - &p_big * &k * &k;
        let vi = i64::try_from(&v).unwrap_or(i64::MAX);
        match vi {
            1 | -1 => {
                return Ok(PellUnit {
                    x: &h << 1,
                    y: &k << 1,
                    norm_sign: vi as i32,
                });
            }
            4 | -4 => {
                return Ok(PellUnit {
                    x: h,
                    y: k,
                    norm_sign: (vi / 4) as i32,
                });
            }
            _ => {}
        }
        let a = BigInt::from(*terms.next().expect("cycled iterator"));
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    unreachable!("continued fraction of sqrt({p}) yields a unit within four periods")
}
