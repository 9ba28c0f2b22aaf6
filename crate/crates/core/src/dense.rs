//! Dense coefficient vectors indexed by monoid element, and the product
//! kernels that run on them.
//!
//! Every kernel is generic over the coefficient type. The `i64`
//! implementation is checked and reports overflow as `None`; callers then
//! rerun the computation over `BigInt`, so results are always exact.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::Factor;
use crate::diagram::Sign;
use crate::monoid::HeckeMonoid;

pub(crate) trait Coeff: Clone + PartialEq + Send + Sync {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn add_assign(&mut self, other: &Self) -> Option<()>;
    fn sub_assign(&mut self, other: &Self) -> Option<()>;
    /// `self += a * b`
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()>;
    fn from_big(value: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn zero_value() -> Self {
        0
    }
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn add_assign(&mut self, other: &Self) -> Option<()> {
        *self = self.checked_add(*other)?;
        Some(())
    }
    #[inline]
    fn sub_assign(&mut self, other: &Self) -> Option<()> {
        *self = self.checked_sub(*other)?;
        Some(())
    }
    #[inline]
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self = self.checked_add(a.checked_mul(*b)?)?;
        Some(())
    }
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) -> Option<()> {
        *self += other;
        Some(())
    }
    fn sub_assign(&mut self, other: &Self) -> Option<()> {
        *self -= other;
        Some(())
    }
    fn mul_add(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self += a * b;
        Some(())
    }
    fn from_big(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// `x·π_i` or `x·(1-π_i)`.
pub(crate) fn mul_factor<C: Coeff>(m: &HeckeMonoid, x: &[C], factor: Factor) -> Option<Vec<C>> {
    let i = factor.generator;
    match factor.sign {
        Sign::Plus => {
            let mut y = vec![C::zero_value(); x.len()];
            for (s, c) in x.iter().enumerate() {
                if !c.is_zero_value() {
                    y[m.act_right(s, i)].add_assign(c)?;
                }
            }
            Some(y)
        }
        Sign::Minus => {
            let mut y = x.to_vec();
            for (s, c) in x.iter().enumerate() {
                if !c.is_zero_value() {
                    y[m.act_right(s, i)].sub_assign(c)?;
                }
            }
            Some(y)
        }
    }
}

pub(crate) fn mul_factors<C: Coeff>(m: &HeckeMonoid, x: &[C], factors: &[Factor]) -> Option<Vec<C>> {
    let mut y = x.to_vec();
    for &f in factors {
        y = mul_factor(m, &y, f)?;
    }
    Some(y)
}

/// `π_i·x` or `(1-π_i)·x`.
pub(crate) fn left_mul_factor<C: Coeff>(m: &HeckeMonoid, factor: Factor, x: &[C]) -> Option<Vec<C>> {
    let i = factor.generator;
    let mut y = match factor.sign {
        Sign::Plus => vec![C::zero_value(); x.len()],
        Sign::Minus => x.to_vec(),
    };
    for (s, c) in x.iter().enumerate() {
        if c.is_zero_value() {
            continue;
        }
        let t = m.act_left(i, s);
        match factor.sign {
            Sign::Plus => y[t].add_assign(c)?,
            Sign::Minus => y[t].sub_assign(c)?,
        }
    }
    Some(y)
}

/// General product `Σ_τ b_τ·(a ▹ word(τ))`.
pub(crate) fn multiply<C: Coeff>(m: &HeckeMonoid, a: &[C], b: &[C]) -> Option<Vec<C>> {
    let support: Vec<usize> = (0..a.len()).filter(|&s| !a[s].is_zero_value()).collect();
    let mut out = vec![C::zero_value(); a.len()];
    let mut image = Vec::with_capacity(support.len());
    for (t, bt) in b.iter().enumerate() {
        if bt.is_zero_value() {
            continue;
        }
        image.clear();
        image.extend_from_slice(&support);
        for &i in m.word(t).letters() {
            for s in image.iter_mut() {
                *s = m.act_right(*s, i);
            }
        }
        for (&src, &dst) in support.iter().zip(&image) {
            out[dst].mul_add(&a[src], bt)?;
        }
    }
    Some(out)
}
