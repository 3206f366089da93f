//! Exact coefficient rings: the integers, the integers modulo `m`, and the
//! rationals, together with the algebra parameters δ and ε.
//!
//! Elements are plain values ([`Elem`]); every operation goes through a
//! [`Ring`] descriptor, which reduces modular residues and rejects division by
//! non-units.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision integer stored inline while it fits in an `i64`.
///
/// The `Big` variant is only used for values outside the `i64` range, so the
/// derived equality and hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(Box<BigInt>),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    pub fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(Box::new(b)),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => (**b).clone(),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    /// ±1.
    #[inline]
    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Truncated division with remainder (`self = q·d + r`, `|r| < |d|`,
    /// `r` has the sign of `self`).
    pub fn div_rem(&self, d: &Integer) -> (Integer, Integer) {
        assert!(!d.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let (q, r) = self.to_big().div_rem(&d.to_big());
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// Quotient rounded to the nearest integer, so the remainder satisfies
    /// `|r| ≤ |d|/2`.
    pub fn div_round(&self, d: &Integer) -> Integer {
        let (q, r) = self.div_rem(d);
        let twice = &r.abs() * &Integer::Small(2);
        if twice.cmp_abs(d) == Ordering::Greater {
            if r.signum() == d.signum() {
                &q + &Integer::ONE
            } else {
                &q - &Integer::ONE
            }
        } else {
            q
        }
    }

    /// Exact division; panics in debug builds if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Integer) -> Integer {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &Integer) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn gcd(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if *a != i64::MIN && *b != i64::MIN {
                return Integer::Small(a.gcd(b));
            }
        }
        Integer::from_big(self.to_big().gcd(&other.to_big()))
    }

    pub fn lcm(&self, other: &Integer) -> Integer {
        if self.is_zero() || other.is_zero() {
            return Integer::ZERO;
        }
        (&self.div_exact(&self.gcd(other)) * other).abs()
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·other = g ≥ 0`.
    pub fn extended_gcd(&self, other: &Integer) -> (Integer, Integer, Integer) {
        let e = self.to_big().extended_gcd(&other.to_big());
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            g = -g;
            s = -s;
            t = -t;
        }
        (Integer::from_big(g), Integer::from_big(s), Integer::from_big(t))
    }

    pub fn cmp_abs(&self, other: &Integer) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }

    /// Residue in `[0, m)`.
    pub fn rem_euclid_u64(&self, m: u64) -> u64 {
        match self {
            Integer::Small(v) => (*v as i128).rem_euclid(m as i128) as u64,
            Integer::Big(b) => {
                let r = b.mod_floor(&BigInt::from(m));
                r.to_u64().expect("residue fits")
            }
        }
    }

    pub fn pow(&self, e: u32) -> Integer {
        let mut acc = Integer::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer::from_big(v)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Integer {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        s.parse::<BigInt>()
            .map(Integer::from_big)
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
}

macro_rules! int_binop {
    ($trait:ident, $method:ident, $checked:ident, $op:tt) => {
        impl std::ops::$trait<&Integer> for &Integer {
            type Output = Integer;
            #[inline]
            fn $method(self, rhs: &Integer) -> Integer {
                if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Integer::Small(v);
                    }
                }
                Integer::from_big(self.to_big() $op rhs.to_big())
            }
        }
        impl std::ops::$trait for Integer {
            type Output = Integer;
            #[inline]
            fn $method(self, rhs: Integer) -> Integer {
                (&self).$method(&rhs)
            }
        }
    };
}

int_binop!(Add, add, checked_add, +);
int_binop!(Sub, sub, checked_sub, -);
int_binop!(Mul, mul, checked_mul, *);

impl std::ops::Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::from_big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-(**b).clone()),
        }
    }
}

impl std::ops::Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

/// Ring element. Residues modulo `m` are stored as `Int` in `[0, m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(Integer),
    Rat(Box<BigRational>),
}

impl Elem {
    pub fn int(v: i64) -> Elem {
        Elem::Int(Integer::Small(v))
    }

    pub fn as_integer(&self) -> Option<&Integer> {
        match self {
            Elem::Int(i) => Some(i),
            Elem::Rat(_) => None,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Elem::Int(i) => BigRational::from_integer(i.to_big()),
            Elem::Rat(r) => (**r).clone(),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(i) => write!(f, "{i}"),
            Elem::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficient ring descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
    Rationals,
}

pub(crate) fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn modinv(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

impl Ring {
    pub fn integers_mod(m: u64) -> Result<Ring> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Ring::IntegersMod(m))
    }

    /// The prime field with `p` elements.
    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring::IntegersMod(p))
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::Integers => false,
            Ring::Rationals => true,
            Ring::IntegersMod(m) => is_prime(*m),
        }
    }

    /// The characteristic when it is a prime.
    pub fn prime(&self) -> Option<u64> {
        match self {
            Ring::IntegersMod(m) if is_prime(*m) => Some(*m),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Rationals => Elem::Rat(Box::new(BigRational::zero())),
            _ => Elem::int(0),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_integer(&Integer::Small(v))
    }

    pub fn from_integer(&self, v: &Integer) -> Elem {
        match self {
            Ring::Integers => Elem::Int(v.clone()),
            Ring::IntegersMod(m) => Elem::int(v.rem_euclid_u64(*m) as i64),
            Ring::Rationals => Elem::Rat(Box::new(BigRational::from_integer(v.to_big()))),
        }
    }

    /// Brings an element produced elsewhere into canonical form for this ring.
    pub fn coerce(&self, e: &Elem) -> Result<Elem> {
        match (self, e) {
            (_, Elem::Int(i)) => Ok(self.from_integer(i)),
            (Ring::Rationals, Elem::Rat(_)) => Ok(e.clone()),
            (_, Elem::Rat(r)) if r.denom().is_one() => Ok(self.from_integer(&Integer::from_big(r.numer().clone()))),
            (_, Elem::Rat(r)) => Err(Error::Parse(format!("{r} is not an element of {self}"))),
        }
    }

    fn rat(e: &Elem) -> BigRational {
        e.to_rational()
    }

    fn residue(e: &Elem) -> u64 {
        match e {
            Elem::Int(Integer::Small(v)) => *v as u64,
            _ => unreachable!("modular elements are small"),
        }
    }

    fn int(e: &Elem) -> &Integer {
        match e {
            Elem::Int(i) => i,
            Elem::Rat(_) => unreachable!("integer ring element expected"),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(Self::int(a) + Self::int(b)),
            Ring::IntegersMod(m) => {
                Elem::int(((Self::residue(a) as u128 + Self::residue(b) as u128) % *m as u128) as i64)
            }
            Ring::Rationals => Elem::Rat(Box::new(Self::rat(a) + Self::rat(b))),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(-Self::int(a)),
            Ring::IntegersMod(m) => {
                let r = Self::residue(a);
                Elem::int(if r == 0 { 0 } else { (m - r) as i64 })
            }
            Ring::Rationals => Elem::Rat(Box::new(-Self::rat(a))),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(Self::int(a) * Self::int(b)),
            Ring::IntegersMod(m) => {
                Elem::int(((Self::residue(a) as u128 * Self::residue(b) as u128) % *m as u128) as i64)
            }
            Ring::Rationals => Elem::Rat(Box::new(Self::rat(a) * Self::rat(b))),
        }
    }

    pub fn pow(&self, a: &Elem, e: u32) -> Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(i) => i.is_zero(),
            Elem::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(i) => i.is_one(),
            Elem::Rat(r) => r.is_one(),
        }
    }

    pub fn is_invertible(&self, a: &Elem) -> bool {
        match self {
            Ring::Integers => Self::int(a).is_unit(),
            Ring::IntegersMod(m) => Self::residue(a).gcd(m) == 1,
            Ring::Rationals => !Self::rat(a).is_zero(),
        }
    }

    pub fn inverse(&self, a: &Elem) -> Result<Elem> {
        let fail = || Error::NotAUnit(a.to_string(), self.to_string());
        match self {
            Ring::Integers => {
                if Self::int(a).is_unit() {
                    Ok(a.clone())
                } else {
                    Err(fail())
                }
            }
            Ring::IntegersMod(m) => modinv(Self::residue(a), *m).map(|v| Elem::int(v as i64)).ok_or_else(fail),
            Ring::Rationals => {
                let r = Self::rat(a);
                if r.is_zero() {
                    Err(fail())
                } else {
                    Ok(Elem::Rat(Box::new(r.recip())))
                }
            }
        }
    }

    /// `a / b`, defined only when `b` is a unit.
    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inverse(b)?))
    }

    /// Parses an integer or (for the rationals) a fraction literal such as `1/3`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            if *self != Ring::Rationals {
                return Err(Error::Parse(format!("fraction {s:?} is only allowed over Q")));
            }
            let n: Integer = n.parse()?;
            let d: Integer = d.parse()?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            return Ok(Elem::Rat(Box::new(BigRational::new(n.to_big(), d.to_big()))));
        }
        let v: Integer = s.parse()?;
        Ok(self.from_integer(&v))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::IntegersMod(m) if is_prime(*m) => write!(f, "Fp:{m}"),
            Ring::IntegersMod(m) => write!(f, "Zmod:{m}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        let s = s.trim();
        match s {
            "Z" => return Ok(Ring::Integers),
            "Q" => return Ok(Ring::Rationals),
            _ => {}
        }
        let parse_mod = |rest: &str| {
            rest.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad modulus in ring spec {s:?}")))
        };
        if let Some(rest) = s.strip_prefix("Zmod:") {
            return Ring::integers_mod(parse_mod(rest)?);
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            return Ring::prime_field(parse_mod(rest)?);
        }
        Err(Error::Parse(format!("unknown ring spec {s:?} (expected Z, Q, Zmod:m or Fp:p)")))
    }
}

/// The parameters δ (loops) and ε (contractible middle components).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub delta: Elem,
    pub epsilon: Elem,
}

impl Params {
    pub fn new(ring: Ring, delta: i64, epsilon: i64) -> Params {
        Params { delta: ring.from_i64(delta), epsilon: ring.from_i64(epsilon) }
    }

    pub fn parse(ring: Ring, delta: &str, epsilon: &str) -> Result<Params> {
        Ok(Params { delta: ring.parse_elem(delta)?, epsilon: ring.parse_elem(epsilon)? })
    }

    /// δ^r ε^s evaluated in `ring`.
    pub fn scalar(&self, ring: Ring, r: u32, s: u32) -> Elem {
        ring.mul(&ring.pow(&self.delta, r), &ring.pow(&self.epsilon, s))
    }

    pub fn epsilon_invertible(&self, ring: Ring) -> bool {
        ring.is_invertible(&self.epsilon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        let z = Ring::Integers;
        assert_eq!(z.mul(&z.from_i64(2), &z.from_i64(3)), z.from_i64(6));
        let z6 = Ring::integers_mod(6).unwrap();
        assert_eq!(z6.add(&z6.from_i64(4), &z6.from_i64(5)), z6.from_i64(3));
        let q = Ring::Rationals;
        let sum = q.add(&q.parse_elem("1/2").unwrap(), &q.parse_elem("1/3").unwrap());
        assert_eq!(sum, q.parse_elem("5/6").unwrap());
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn invertibility_examples() {
        let z = Ring::Integers;
        assert!(z.is_invertible(&z.from_i64(1)));
        assert!(z.is_invertible(&z.from_i64(-1)));
        assert!(!z.is_invertible(&z.from_i64(2)));
        assert!(z.inverse(&z.from_i64(2)).is_err());
        let z6 = Ring::integers_mod(6).unwrap();
        assert!(!z6.is_invertible(&z6.from_i64(2)));
        let f5 = Ring::prime_field(5).unwrap();
        assert!(f5.is_invertible(&f5.from_i64(2)));
        assert_eq!(f5.inverse(&f5.from_i64(2)).unwrap(), f5.from_i64(3));
        let q = Ring::Rationals;
        let x = q.parse_elem("7/3").unwrap();
        assert_eq!(q.inverse(&x).unwrap(), q.parse_elem("3/7").unwrap());
        assert!(q.inverse(&q.zero()).is_err());
    }

    #[test]
    fn ring_spec_strings() {
        assert_eq!("Z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("Q".parse::<Ring>().unwrap(), Ring::Rationals);
        assert_eq!("Zmod:6".parse::<Ring>().unwrap(), Ring::IntegersMod(6));
        assert_eq!("Fp:5".parse::<Ring>().unwrap(), Ring::IntegersMod(5));
        assert!("Fp:6".parse::<Ring>().is_err());
        assert!("Zmod:1".parse::<Ring>().is_err());
        assert!("R".parse::<Ring>().is_err());
        assert_eq!(Ring::IntegersMod(6).to_string(), "Zmod:6");
        assert_eq!(Ring::IntegersMod(5).to_string(), "Fp:5");
        assert!(Ring::Integers.parse_elem("1/3").is_err());
        assert_eq!(Ring::IntegersMod(5).parse_elem("-1").unwrap(), Elem::int(4));
    }

    #[test]
    fn integer_overflow_promotes() {
        let big = Integer::Small(i64::MAX);
        let sum = &big + &Integer::ONE;
        assert!(matches!(sum, Integer::Big(_)));
        assert_eq!(&sum - &Integer::ONE, big);
        let sq = &big * &big;
        assert_eq!(sq.div_exact(&big), big);
        assert_eq!(-&Integer::Small(i64::MIN), Integer::from_big(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn div_round_keeps_remainder_small() {
        for a in -20i64..=20 {
            for d in [-7i64, -3, -2, 2, 3, 7] {
                let (a, d) = (Integer::Small(a), Integer::Small(d));
                let q = a.div_round(&d);
                let r = &a - &(&q * &d);
                assert!((&r.abs() * &Integer::Small(2)).cmp_abs(&d) != Ordering::Greater);
            }
        }
    }

    fn any_ring() -> impl Strategy<Value = Ring> {
        prop_oneof![
            Just(Ring::Integers),
            Just(Ring::Rationals),
            (2u64..30).prop_map(Ring::IntegersMod),
        ]
    }

    fn elem(ring: Ring, n: i64, d: i64) -> Elem {
        match ring {
            Ring::Rationals => Elem::Rat(Box::new(BigRational::new(n.into(), d.into()))),
            _ => ring.from_i64(n),
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(ring in any_ring(), xs in proptest::collection::vec((-1000i64..1000, 1i64..20), 3)) {
            let a = elem(ring, xs[0].0, xs[0].1);
            let b = elem(ring, xs[1].0, xs[1].1);
            let c = elem(ring, xs[2].0, xs[2].1);
            prop_assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)));
            prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
            prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
            prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
            prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
            prop_assert!(ring.is_zero(&ring.sub(&a, &a)));
        }

        #[test]
        fn inverse_is_inverse(ring in any_ring(), n in -1000i64..1000, d in 1i64..20) {
            let a = elem(ring, n, d);
            if ring.is_invertible(&a) {
                let inv = ring.inverse(&a).unwrap();
                prop_assert!(ring.is_one(&ring.mul(&a, &inv)));
            } else {
                prop_assert!(ring.inverse(&a).is_err());
            }
        }

        #[test]
        fn integer_ops_match_bigint(a in any::<i64>(), b in any::<i64>()) {
            let (x, y) = (Integer::Small(a), Integer::Small(b));
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!((&x + &y).to_big(), &ba + &bb);
            prop_assert_eq!((&x - &y).to_big(), &ba - &bb);
            prop_assert_eq!((&x * &y).to_big(), &ba * &bb);
            prop_assert_eq!(x.gcd(&y).to_big(), ba.gcd(&bb));
        }
    }
}
