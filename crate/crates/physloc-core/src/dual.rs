//! Forward-mode dual numbers.
//!
//! A [`Dual<P>`] carries a primal value plus the partial derivatives with
//! respect to `P` seed parameters. Code written against the [`Scalar`] trait
//! runs unchanged on plain `f64` and on duals, so the derivative of a
//! computation is obtained by re-running it on seeded duals. The primal lane
//! of every dual operation performs exactly the same `f64` arithmetic as the
//! plain instantiation, which keeps derivative propagation consistent with
//! the realized computation.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arithmetic shared by `f64` and [`Dual`].
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Lift an ordinary number; its derivative with respect to every seed is zero.
    fn constant(x: f64) -> Self;
    /// The primal value. Branch decisions must read this, never the partials.
    fn value(self) -> f64;
    fn exp(self) -> Self;
    fn abs(self) -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn constant(x: f64) -> Self {
        x
    }
    #[inline]
    fn value(self) -> f64 {
        self
    }
    #[inline]
    fn exp(self) -> Self {
        f64::exp(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
}

/// Value plus partial derivatives with respect to `P` seed parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual<const P: usize> {
    pub val: f64,
    pub d: [f64; P],
}

impl<const P: usize> Dual<P> {
    /// A value that is the `seed`-th independent variable: d/d(seed) = 1.
    pub fn variable(val: f64, seed: usize) -> Self {
        let mut d = [0.0; P];
        d[seed] = 1.0;
        Dual { val, d }
    }
}

impl<const P: usize> Scalar for Dual<P> {
    #[inline]
    fn constant(x: f64) -> Self {
        Dual { val: x, d: [0.0; P] }
    }

    #[inline]
    fn value(self) -> f64 {
        self.val
    }

    #[inline]
    fn exp(self) -> Self {
        let e = self.val.exp();
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = self.d[i] * e;
        }
        Dual { val: e, d }
    }

    /// |x| with derivative sign(x); the subgradient at exactly zero is taken as 0.
    #[inline]
    fn abs(self) -> Self {
        let s = if self.val > 0.0 {
            1.0
        } else if self.val < 0.0 {
            -1.0
        } else {
            0.0
        };
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = self.d[i] * s;
        }
        Dual {
            val: self.val.abs(),
            d,
        }
    }
}

impl<const P: usize> Add for Dual<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = self.d[i] + rhs.d[i];
        }
        Dual {
            val: self.val + rhs.val,
            d,
        }
    }
}

impl<const P: usize> Sub for Dual<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = self.d[i] - rhs.d[i];
        }
        Dual {
            val: self.val - rhs.val,
            d,
        }
    }
}

impl<const P: usize> Mul for Dual<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = self.d[i] * rhs.val + self.val * rhs.d[i];
        }
        Dual {
            val: self.val * rhs.val,
            d,
        }
    }
}

impl<const P: usize> Div for Dual<P> {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        let inv = 1.0 / rhs.val;
        let val = self.val * inv;
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = (self.d[i] - val * rhs.d[i]) * inv;
        }
        Dual { val, d }
    }
}

impl<const P: usize> Neg for Dual<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        let mut d = [0.0; P];
        for i in 0..P {
            d[i] = -self.d[i];
        }
        Dual { val: -self.val, d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly<T: Scalar>(x: T) -> T {
        // f(x) = x^3 - 2x + 5, f'(x) = 3x^2 - 2
        x * x * x - T::constant(2.0) * x + T::constant(5.0)
    }

    #[test]
    fn derivative_of_polynomial() {
        let x = Dual::<1>::variable(1.7, 0);
        let y = poly(x);
        assert!((y.val - poly(1.7_f64)).abs() < 1e-15);
        assert!((y.d[0] - (3.0 * 1.7 * 1.7 - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn exp_and_div_chain_rule() {
        // f(x) = exp(-x) / (1 + exp(-x)) = sigmoid(-x) ... f'(x) = -s(1-s) with s = f
        let x = Dual::<1>::variable(0.3, 0);
        let e = (-x).exp();
        let f = e / (Dual::constant(1.0) + e);
        let s = f.val;
        assert!((f.d[0] - (-s * (1.0 - s))).abs() < 1e-14);
    }

    #[test]
    fn primal_lane_matches_f64_bitwise() {
        let xs = [0.12345, -3.25, 19.0, 1e-7];
        for &x in &xs {
            let plain = poly(x);
            let dual = poly(Dual::<3>::variable(x, 1));
            assert_eq!(plain.to_bits(), dual.val.to_bits());
        }
    }

    #[test]
    fn abs_subgradient_at_zero_is_zero() {
        let x = Dual::<1>::variable(0.0, 0);
        let y = x.abs();
        assert_eq!(y.val, 0.0);
        assert_eq!(y.d[0], 0.0);
    }

    #[test]
    fn two_seed_independence() {
        let x = Dual::<2>::variable(2.0, 0);
        let y = Dual::<2>::variable(3.0, 1);
        let f = x * y + y; // df/dx = y, df/dy = x + 1
        assert!((f.d[0] - 3.0).abs() < 1e-15);
        assert!((f.d[1] - 3.0).abs() < 1e-15);
    }
}
