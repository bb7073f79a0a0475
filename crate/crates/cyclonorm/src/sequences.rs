//! Lucas numbers and generalized quadratic power-sum traces.
//!
//! Both run in O(log n) big-integer multiplications: `lucas` by fast doubling
//! on Fibonacci pairs, `quad_trace` by 2x2 matrix exponentiation. The trace
//! t_n is the quantity appearing in Res(x^n - 1, ax^2 + bx + c) =
//! a^n + c^n - t_n; with (a, b, c) = (1, -1, -1) it reduces to the Lucas
//! sequence itself.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A Lucas number together with its index. L(0) = 2, L(1) = 1,
/// L(m) = L(m-1) + L(m-2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasValue {
    pub index: u64,
    pub value: BigInt,
}

impl LucasValue {
    pub fn new(index: u64) -> Self {
        LucasValue {
            index,
            value: lucas(index),
        }
    }
}

/// (F(m), F(m+1)) by iterative fast doubling, most significant bit first.
fn fib_pair(m: u64) -> (BigInt, BigInt) {
    let mut f = BigInt::zero(); // F(k)
    let mut g = BigInt::one(); // F(k+1)
    if m == 0 {
        return (f, g);
    }
    let bits = 64 - m.leading_zeros();
    for i in (0..bits).rev() {
        // F(2k) = F(k)*(2F(k+1) - F(k)),  F(2k+1) = F(k)^2 + F(k+1)^2
        let two_g_minus_f = (&g << 1) - &f;
        let even = &f * &two_g_minus_f;
        let odd = &f * &f + &g * &g;
        if (m >> i) & 1 == 1 {
            g = &even + &odd;
            f = odd;
        } else {
            f = even;
            g = odd;
        }
    }
    (f, g)
}

/// The m-th Lucas number, via L(m) = 2F(m+1) - F(m).
pub fn lucas(m: u64) -> BigInt {
    let (f, g) = fib_pair(m);
    (g << 1) - f
}

type Mat = [BigInt; 4]; // row major [m00, m01, m10, m11]

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

fn mat_pow(m: &Mat, mut e: u64) -> Mat {
    let mut result = [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    result
}

/// The scaled power-sum trace t_n of ax^2 + bx + c:
/// t_0 = 2, t_1 = -b, t_n = -b t_{n-1} - ac t_{n-2},
/// computed by 2x2 matrix fast exponentiation.
///
/// Writing r, s for the roots of the quadratic, t_n = a^n (r^n + s^n),
/// which is what makes Res(x^n - 1, ax^2 + bx + c) = a^n + c^n - t_n.
///
/// # Panics
///
/// Panics if `a` is zero.
pub fn quad_trace(a: &BigInt, b: &BigInt, c: &BigInt, n: u64) -> BigInt {
    assert!(
        !a.is_zero(),
        "quad_trace: leading coefficient must be nonzero"
    );
    if n == 0 {
        return BigInt::from(2);
    }
    let neg_b = -b;
    let neg_ac = -(a * c);
    let m: Mat = [neg_b.clone(), neg_ac, BigInt::one(), BigInt::zero()];
    let pw = mat_pow(&m, n - 1);
    // [t_n, t_{n-1}]^T = M^{n-1} [t_1, t_0]^T with t_1 = -b, t_0 = 2
    &pw[0] * &neg_b + &pw[1] * 2
}
