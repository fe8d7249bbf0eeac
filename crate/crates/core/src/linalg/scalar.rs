use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are stored inline;
/// anything larger spills to an arbitrary-precision fraction. The split is
/// canonical, so structural equality is value equality.
#[derive(Clone)]
pub struct Scalar(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Small(n, 1))
    }

    /// `num / den`, or `None` when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::from_rational(BigRational::new(num, den)))
    }

    fn from_rational(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(r))),
        }
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    fn to_rational(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.0, Repr::Small(_, 1))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_rational(r.recip()),
        })
    }

    /// Residue modulo the prime `p`, or `None` if `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let p_big = BigInt::from(p);
        let num = self.numer().mod_floor(&p_big).to_u64()?;
        let den = self.denom().mod_floor(&p_big).to_u64()?;
        if den == 0 {
            return None;
        }
        let inv = super::modp::inv_mod(den, p)?;
        Some(super::modp::mul_mod(num, inv, p))
    }

    /// Bit-size estimate used to pick cheap pivots.
    pub(crate) fn weight(&self) -> u64 {
        match &self.0 {
            Repr::Small(n, d) => n.unsigned_abs().max(1).ilog2() as u64 + d.unsigned_abs().ilog2() as u64,
            Repr::Big(r) => r.numer().bits() + r.denom().bits(),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal {0:?}")]
pub struct ParseScalarError(pub String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        Scalar::from_big(num, den).ok_or_else(err)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar(Repr::Small(m, *d)),
                None => Scalar::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(r) => Scalar::from_rational(-(**r).clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_add(*c) {
                    return Scalar(Repr::Small(s, 1));
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if let Some(n) = (a * d).checked_add(c * b) {
                return Scalar::from_i128(n, b * d);
            }
        }
        Scalar::from_rational(self.to_rational() + rhs.to_rational())
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_sub(*c) {
                    return Scalar(Repr::Small(s, 1));
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if let Some(n) = (a * d).checked_sub(c * b) {
                return Scalar::from_i128(n, b * d);
            }
        }
        Scalar::from_rational(self.to_rational() - rhs.to_rational())
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if *b == 1 && *d == 1 {
                if let Some(p) = a.checked_mul(*c) {
                    return Scalar(Repr::Small(p, 1));
                }
            }
            return Scalar::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Scalar::from_rational(self.to_rational() * rhs.to_rational())
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            return Scalar::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128);
        }
        Scalar::from_rational(self.to_rational() / rhs.to_rational())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl Signed for Scalar {
    fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Scalar::zero()
        } else {
            self - other
        }
    }
    fn signum(&self) -> Self {
        if self.is_zero() {
            Scalar::zero()
        } else if self.is_negative() {
            Scalar::from_int(-1)
        } else {
            Scalar::one()
        }
    }
    fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(r) => r.is_positive(),
        }
    }
    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl num_traits::Num for Scalar {
    type FromStrRadixErr = ParseScalarError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseScalarError(s.to_string()));
        }
        s.parse()
    }
}

impl std::ops::Rem for Scalar {
    type Output = Scalar;
    /// Every nonzero element is a unit, so the remainder is always zero.
    fn rem(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "remainder by zero scalar");
        Scalar::zero()
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational literal \"p/q\" or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Scalar, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Scalar, E> {
                Ok(Scalar::from_int(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Scalar, E> {
                Scalar::from_big(BigInt::from(v), BigInt::one()).ok_or_else(|| E::custom("bad integer"))
            }
        }
        d.deserialize_any(Visitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, 7), Scalar::zero());
        assert_eq!(q(-4, -2).to_string(), "2");
        assert_eq!(q(1, 3).to_string(), "1/3");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-5", "7/3", "-12/35", "123456789012345678901234567891/7"] {
            let x: Scalar = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert_eq!("6/4".parse::<Scalar>().unwrap(), q(3, 2));
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let big = Scalar::from_int(i64::MAX);
        let s = &big + &big;
        assert_eq!(s.numer(), BigInt::from(i64::MAX) * 2);
        let back = &s - &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let p = &big * &big;
        assert_eq!(&p / &big, big);
        assert_eq!(-Scalar::from_int(i64::MIN), Scalar::from_big(-BigInt::from(i64::MIN), BigInt::one()).unwrap());
    }

    #[test]
    fn field_ops() {
        let a = q(3, 4);
        let b = q(-5, 6);
        assert_eq!(&a + &b, q(-1, 12));
        assert_eq!(&a - &b, q(19, 12));
        assert_eq!(&a * &b, q(-5, 8));
        assert_eq!(&a / &b, q(-9, 10));
        assert_eq!(a.recip().unwrap(), q(4, 3));
        assert!(Scalar::zero().recip().is_none());
    }

    #[test]
    fn residues() {
        assert_eq!(q(1, 2).mod_p(5), Some(3));
        assert_eq!(q(-1, 1).mod_p(7), Some(6));
        assert_eq!(q(1, 5).mod_p(5), None);
    }

    proptest::proptest! {
        #[test]
        fn sum_matches_bigrational(a in -1_000_000i64..1_000_000, b in 1i64..10_000, c in -1_000_000i64..1_000_000, d in 1i64..10_000) {
            let x = q(a, b);
            let y = q(c, d);
            let expect = BigRational::new(BigInt::from(a), BigInt::from(b)) + BigRational::new(BigInt::from(c), BigInt::from(d));
            let got = &x + &y;
            proptest::prop_assert_eq!(got.numer(), expect.numer().clone());
            proptest::prop_assert_eq!(got.denom(), expect.denom().clone());
            proptest::prop_assert_eq!(got.numer().gcd(&got.denom()), BigInt::one());
        }

        #[test]
        fn distributive(a in -500i64..500, b in 1i64..50, c in -500i64..500, d in 1i64..50, e in -500i64..500) {
            let x = q(a, b);
            let y = q(c, d);
            let z = Scalar::from_int(e);
            proptest::prop_assert_eq!(&z * &(&x + &y), &(&z * &x) + &(&z * &y));
        }
    }
}
