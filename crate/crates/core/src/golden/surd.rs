use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::isqrt;

/// Exact element `a + b√5` of ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    a: BigRational,
    b: BigRational,
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Surd {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Surd { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Surd::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// `(an/ad) + (bn/bd)√5`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        Surd::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
        )
    }

    pub fn rational(r: BigRational) -> Self {
        Surd::new(r, BigRational::zero())
    }

    pub fn integer(n: BigInt) -> Self {
        Surd::rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn one() -> Self {
        Surd::from_ints(1, 0)
    }

    pub fn sqrt5() -> Self {
        Surd::from_ints(0, 1)
    }

    /// Golden ratio `(1 + √5)/2`.
    pub fn phi() -> Self {
        Surd::from_ratios(1, 2, 1, 2)
    }

    /// Conjugate root `1 − φ = (1 − √5)/2`.
    pub fn phi_bar() -> Self {
        Surd::from_ratios(1, 2, -1, 2)
    }

    /// `1/φ = φ − 1`.
    pub fn inv_phi() -> Self {
        Surd::from_ratios(-1, 2, 1, 2)
    }

    /// `1/φ² = (3 − √5)/2`.
    pub fn inv_phi_sq() -> Self {
        Surd::from_ratios(3, 2, -1, 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of `a + b√5`, from comparing `a²` with `5b²`.
    pub fn sign(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: the larger magnitude wins
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b * BigInt::from(5);
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0, // unreachable for rational a, b ≠ 0
        }
    }

    pub fn abs(&self) -> Surd {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// `a − b√5`.
    pub fn conjugate(&self) -> Surd {
        Surd::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigInt::from(5)
    }

    pub fn recip(&self) -> Option<Surd> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Surd::new(c.a / &n, c.b / n))
    }

    pub fn scale(&self, r: &BigRational) -> Surd {
        Surd::new(&self.a * r, &self.b * r)
    }

    pub fn pow(&self, mut exp: u32) -> Surd {
        let mut base = self.clone();
        let mut acc = Surd::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact `⌊a + b√5⌋`.
    pub fn floor(&self) -> BigInt {
        // integer guess from isqrt, then settle with exact sign tests
        let a_floor = self.a.floor().to_integer();
        let (bn, bd) = (self.b.numer(), self.b.denom());
        let root = isqrt(&(bn * bn * BigInt::from(5))).expect("non-negative");
        let b_part = if bn.is_negative() {
            -(root.div_ceil(bd))
        } else {
            root.div_floor(bd)
        };
        let mut k = a_floor + b_part;
        let at = |k: &BigInt| (self - &Surd::integer(k.clone())).sign();
        while at(&k) < 0 {
            k -= 1;
        }
        while at(&(&k + 1)) >= 0 {
            k += 1;
        }
        k
    }

    /// Nearest integer to `self · 10^places`, ties to even.
    pub fn round_scaled(&self, places: u32) -> BigInt {
        let scale = BigRational::from_integer(BigInt::from(10).pow(places));
        let x = self.scale(&scale);
        let fl = x.floor();
        let rem = &x - &Surd::integer(fl.clone());
        let half = Surd::rational(BigRational::new(BigInt::one(), BigInt::from(2)));
        match (&rem - &half).sign() {
            1 => fl + 1,
            -1 => fl,
            _ => {
                if fl.is_even() {
                    fl
                } else {
                    fl + 1
                }
            }
        }
    }

    /// Fixed-point decimal rendering, rounded half-even. The leading sign
    /// follows the exact sign, so a tiny negative value prints as `-0.000…`.
    pub fn to_decimal(&self, places: u32) -> String {
        let scaled = self.abs().round_scaled(places);
        let body = crate::decimal::format_scaled(&scaled, places);
        if self.sign() < 0 {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Lossy conversion for display and sanity checks.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}√5", self.a, -&self.b)
                } else {
                    write!(f, "{} + {}√5", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}

impl<'a> Add<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        Surd::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        Surd::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let five = BigInt::from(5);
        Surd::new(
            &self.a * &rhs.a + &self.b * &rhs.b * five,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-&self.a, -&self.b)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Surd> for Surd {
            type Output = Surd;
            fn $m(self, rhs: Surd) -> Surd {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sign_examples() {
        assert_eq!(Surd::zero().sign(), 0);
        let phi = Surd::phi();
        let zero = &(&(&phi * &phi) - &phi) - &Surd::one();
        assert!(zero.is_zero());
        assert_eq!(zero.sign(), 0);
        assert_eq!(Surd::from_ratios(-11, 10, 1, 2).sign(), 1);
        assert_eq!(Surd::from_ratios(11, 10, -1, 2).sign(), -1);
        assert_eq!(Surd::from_ratios(-3, 1, 1, 1).sign(), -1);
    }

    #[test]
    fn golden_identities() {
        let phi = Surd::phi();
        assert_eq!(&phi * &Surd::inv_phi(), Surd::one());
        assert_eq!(phi.recip().unwrap(), Surd::inv_phi());
        assert_eq!(&Surd::inv_phi() + &Surd::inv_phi_sq(), Surd::one());
        assert_eq!(Surd::phi_bar(), &Surd::one() - &phi);
        assert_eq!(&phi * &Surd::phi_bar(), Surd::from_ints(-1, 0));
        assert!(Surd::zero().recip().is_none());
    }

    #[test]
    fn floor_and_rounding() {
        assert_eq!(Surd::phi().floor(), BigInt::from(1));
        assert_eq!((-Surd::phi()).floor(), BigInt::from(-2));
        assert_eq!(Surd::sqrt5().scale(&BigRational::from_integer(1000.into())).floor(), BigInt::from(2236));
        assert_eq!(Surd::from_ints(7, 0).floor(), BigInt::from(7));
        assert_eq!(Surd::inv_phi().to_decimal(6), "0.618034");
        assert_eq!(Surd::inv_phi_sq().to_decimal(6), "0.381966");
        assert_eq!((-Surd::inv_phi_sq()).to_decimal(3), "-0.382");
        // exact tie, half-even
        assert_eq!(Surd::from_ratios(1, 8, 0, 1).to_decimal(2), "0.12");
        assert_eq!(Surd::from_ratios(3, 8, 0, 1).to_decimal(2), "0.38");
    }

    #[test]
    fn sign_agrees_with_numeric_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 10_000 {
            let s = Surd::from_ratios(
                rng.gen_range(-1000..=1000),
                rng.gen_range(1..=50),
                rng.gen_range(-1000..=1000),
                rng.gen_range(1..=50),
            );
            let v = s.to_f64();
            if v.abs() < 1e-9 && !s.is_zero() {
                continue;
            }
            let expected = if s.is_zero() { 0 } else if v > 0.0 { 1 } else { -1 };
            assert_eq!(s.sign(), expected, "{s:?}");
            checked += 1;
        }
    }
}
