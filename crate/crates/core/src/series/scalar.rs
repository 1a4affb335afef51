use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `a + b sqrt(2)` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RootTwoScalar {
    a: BigRational,
    b: BigRational,
}

impl RootTwoScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        RootTwoScalar { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        RootTwoScalar::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(q: BigRational) -> Self {
        RootTwoScalar::new(q, BigRational::zero())
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        RootTwoScalar::rational(BigRational::from_integer(v.into()))
    }

    pub fn sqrt2() -> Self {
        RootTwoScalar::from_ints(0, 1)
    }

    /// `1/sqrt(2) = sqrt(2)/2`
    pub fn inv_sqrt2() -> Self {
        RootTwoScalar::new(BigRational::zero(), BigRational::new(1.into(), 2.into()))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn root_two_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b sqrt(2)`
    pub fn conjugate(&self) -> Self {
        RootTwoScalar::new(self.a.clone(), -self.b.clone())
    }

    /// `a^2 - 2 b^2`, nonzero unless the element is zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(2.into())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("zero has no inverse".into()));
        }
        let norm = self.norm();
        Ok(RootTwoScalar::new(&self.a / &norm, -(&self.b / &norm)))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        RootTwoScalar::new(&self.a * q, &self.b * q)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = RootTwoScalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `num/den num/den` of the two parts.
    pub fn dump_parts(&self) -> String {
        format!("{}/{} {}/{}", self.a.numer(), self.a.denom(), self.b.numer(), self.b.denom())
    }
}

impl Zero for RootTwoScalar {
    fn zero() -> Self {
        RootTwoScalar::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for RootTwoScalar {
    fn one() -> Self {
        RootTwoScalar::new(BigRational::one(), BigRational::zero())
    }
}

impl fmt::Display for RootTwoScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {}*sqrt2", self.a, self.b.abs())
            }
        }
    }
}

impl Add<&RootTwoScalar> for &RootTwoScalar {
    type Output = RootTwoScalar;

    fn add(self, rhs: &RootTwoScalar) -> RootTwoScalar {
        RootTwoScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&RootTwoScalar> for &RootTwoScalar {
    type Output = RootTwoScalar;

    fn sub(self, rhs: &RootTwoScalar) -> RootTwoScalar {
        RootTwoScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&RootTwoScalar> for &RootTwoScalar {
    type Output = RootTwoScalar;

    fn mul(self, rhs: &RootTwoScalar) -> RootTwoScalar {
        let two = BigRational::from_integer(2.into());
        RootTwoScalar::new(&self.a * &rhs.a + &self.b * &rhs.b * two, &self.a * &rhs.b + &self.b * &rhs.a)
    }
}

impl Neg for &RootTwoScalar {
    type Output = RootTwoScalar;

    fn neg(self) -> RootTwoScalar {
        RootTwoScalar::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for RootTwoScalar {
    type Output = RootTwoScalar;

    fn neg(self) -> RootTwoScalar {
        RootTwoScalar::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RootTwoScalar {
            type Output = RootTwoScalar;

            fn $method(self, rhs: RootTwoScalar) -> RootTwoScalar {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&RootTwoScalar> for RootTwoScalar {
            type Output = RootTwoScalar;

            fn $method(self, rhs: &RootTwoScalar) -> RootTwoScalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&RootTwoScalar> for RootTwoScalar {
    fn add_assign(&mut self, rhs: &RootTwoScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&RootTwoScalar> for RootTwoScalar {
    fn sub_assign(&mut self, rhs: &RootTwoScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl From<i64> for RootTwoScalar {
    fn from(v: i64) -> Self {
        RootTwoScalar::integer(v)
    }
}

impl From<BigRational> for RootTwoScalar {
    fn from(q: BigRational) -> Self {
        RootTwoScalar::rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn scalar() -> impl Strategy<Value = RootTwoScalar> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, da, b, db)| RootTwoScalar::new(q(a, da), q(b, db)))
    }

    #[test]
    fn basics() {
        let r2 = RootTwoScalar::sqrt2();
        assert_eq!(&r2 * &r2, RootTwoScalar::integer(2));
        assert_eq!(&r2 * &RootTwoScalar::inv_sqrt2(), RootTwoScalar::one());
        let x = RootTwoScalar::from_ints(3, 2);
        assert_eq!(&x * &x.inverse().unwrap(), RootTwoScalar::one());
        assert!(RootTwoScalar::zero().inverse().is_err());
        assert_eq!(RootTwoScalar::new(q(1, 2), q(-3, 4)).dump_parts(), "1/2 -3/4");
        assert_eq!(RootTwoScalar::from_ints(1, -1).to_string(), "1 - 1*sqrt2");
    }

    proptest! {
        #[test]
        fn ring_laws(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &RootTwoScalar::one(), a.clone());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), RootTwoScalar::one());
            }
        }
    }
}
