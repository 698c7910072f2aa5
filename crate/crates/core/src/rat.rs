//! Exact rationals with an inline fast path.
//!
//! Values whose reduced numerator and denominator fit in an `i64` are kept
//! inline; everything else is a boxed `BigRational`. The representation is
//! canonical, so structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub struct Rat(Repr);

#[derive(Clone)]
enum Repr {
    // numerator, denominator > 0, coprime, numerator != i64::MIN
    S(i64, i64),
    B(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub fn zero() -> Rat {
        Rat(Repr::S(0, 1))
    }

    pub fn one() -> Rat {
        Rat(Repr::S(1, 1))
    }

    pub fn int(n: i64) -> Rat {
        Rat::from_i128(n as i128, 1)
    }

    /// `n/d`; panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Rat {
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rat::zero();
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rat(Repr::S(n as i64, d as i64))
        } else {
            Rat(Repr::B(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))))
        }
    }

    pub fn from_big(r: BigRational) -> Rat {
        // BigRational::new reduces; new_raw inputs are assumed reduced here
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rat(Repr::S(n, d));
            }
        }
        Rat(Repr::B(Box::new(r)))
    }

    pub fn from_bigints(n: BigInt, d: BigInt) -> Rat {
        Rat::from_big(BigRational::new(n, d))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::S(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::B(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::S(n, _) => BigInt::from(*n),
            Repr::B(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::S(_, d) => BigInt::from(*d),
            Repr::B(b) => b.denom().clone(),
        }
    }

    /// Inline parts, if the value is small.
    pub fn small(&self) -> Option<(i64, i64)> {
        match &self.0 {
            Repr::S(n, d) => Some((*n, *d)),
            Repr::B(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::S(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::S(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::S(_, d) => *d == 1,
            Repr::B(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::S(n, _) => n.signum() as i32,
            Repr::B(b) => {
                if b.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn abs(&self) -> Rat {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Rat {
        match &self.0 {
            Repr::S(n, d) => {
                assert!(*n != 0, "inverse of zero");
                Rat::from_i128(*d as i128, *n as i128)
            }
            Repr::B(b) => Rat::from_big(b.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut r = Rat::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Rational square root, if there is one.
    pub fn sqrt(&self) -> Option<Rat> {
        if self.signum() < 0 {
            return None;
        }
        let (n, d) = (self.numer(), self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (&rn * &rn == n && &rd * &rd == d).then(|| Rat::from_bigints(rn, rd))
    }

    fn add_ref(&self, o: &Rat) -> Rat {
        match (&self.0, &o.0) {
            (Repr::S(a, b), Repr::S(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Rat::from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Rat::from_i128(a + c, b);
                }
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Rat::from_i128(s, z),
                        None => Rat::from_big(self.to_big() + o.to_big()),
                    },
                    _ => Rat::from_big(self.to_big() + o.to_big()),
                }
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul_ref(&self, o: &Rat) -> Rat {
        match (&self.0, &o.0) {
            (Repr::S(a, b), Repr::S(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Rat::zero();
                }
                if *b == 1 && *d == 1 {
                    return Rat::from_i128(*a as i128 * *c as i128, 1);
                }
                let g1 = gcd_u128(a.unsigned_abs() as u128, *d as u128) as i128;
                let g2 = gcd_u128(c.unsigned_abs() as u128, *b as u128) as i128;
                let n = (*a as i128 / g1) * (*c as i128 / g2);
                let m = (*b as i128 / g2) * (*d as i128 / g1);
                Rat::from_i128(n, m)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg_ref(&self) -> Rat {
        match &self.0 {
            Repr::S(n, d) => Rat(Repr::S(-n, *d)),
            Repr::B(b) => Rat::from_big(-(**b).clone()),
        }
    }
}

impl Default for Rat {
    fn default() -> Rat {
        Rat::zero()
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (&self.0, &o.0) {
            (Repr::S(a, b), Repr::S(c, d)) => a == c && b == d,
            (Repr::B(x), Repr::B(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match &self.0 {
            Repr::S(n, d) => {
                0u8.hash(h);
                n.hash(h);
                d.hash(h);
            }
            Repr::B(b) => {
                1u8.hash(h);
                b.numer().hash(h);
                b.denom().hash(h);
            }
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        match (&self.0, &o.0) {
            (Repr::S(a, b), Repr::S(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(n))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                $f(self, o)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                $f(self, &o)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                $f(&self, o)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                $f(&self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Rat, b: &Rat| a.add_ref(b));
binop!(Sub, sub, |a: &Rat, b: &Rat| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a: &Rat, b: &Rat| a.mul_ref(b));
binop!(Div, div, |a: &Rat, b: &Rat| a.mul_ref(&b.recip()));

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        self.neg_ref()
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        self.neg_ref()
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        *self = self.add_ref(o);
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, o: Rat) {
        *self = self.add_ref(&o);
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        *self = self.add_ref(&o.neg_ref());
    }
}

impl SubAssign<Rat> for Rat {
    fn sub_assign(&mut self, o: Rat) {
        *self = self.add_ref(&o.neg_ref());
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, o: &Rat) {
        *self = self.mul_ref(o);
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(it: I) -> Rat {
        let mut s = Rat::zero();
        for x in it {
            s += x;
        }
        s
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(it: I) -> Rat {
        let mut s = Rat::zero();
        for x in it {
            s += x;
        }
        s
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::S(n, 1) => write!(f, "{}", n),
            Repr::S(n, d) => write!(f, "{}/{}", n, d),
            Repr::B(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let t = s.trim();
        let bad = || ParseRatError(s.to_string());
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::from_bigints(n, d))
    }
}

/// Least common multiple of the denominators of `xs`, as a big integer.
pub fn lcm_denoms<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        if !x.is_integer() {
            l = l.lcm(&x.denom());
        }
    }
    l
}

/// `x * scale` as an `i64` when it is an integer fitting the bound.
pub fn scaled_i64(x: &Rat, scale: &BigInt, bound: i64) -> Option<i64> {
    let v = x.to_big() * BigRational::from_integer(scale.clone());
    if !v.is_integer() {
        return None;
    }
    let n = v.numer().to_i64()?;
    if n.abs() > bound {
        return None;
    }
    Some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_reduced() {
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat::new(1, 2));
        assert_eq!(Rat::new(1, 3) + Rat::new(1, 6), Rat::new(1, 2));
        assert_eq!(Rat::new(-3, -6), Rat::new(1, 2));
        assert_eq!(Rat::new(3, -6).to_string(), "-1/2");
        assert!((Rat::new(1, 2) - Rat::new(1, 2)).is_zero());
    }

    #[test]
    fn overflow_promotes() {
        let big = Rat::int(i64::MAX);
        let s = &big + &big;
        assert_eq!(s.to_string(), "18446744073709551614");
        assert_eq!(&s - &big, big);
        let p = &big * &big;
        assert_eq!(&p / &big, big);
        let m = Rat::int(i64::MIN + 1) - Rat::one();
        assert_eq!(m.to_string(), i64::MIN.to_string());
        assert_eq!(-&m + &m, Rat::zero());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-7", "3/4", "-12/5", "123456789012345678901234567891/2"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("6/4".parse::<Rat>().unwrap(), Rat::new(3, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }
}
