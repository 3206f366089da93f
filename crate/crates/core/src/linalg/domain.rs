//! Coefficient domains for the elimination engines.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Elem, Integer, Ring};

/// Arithmetic needed by sparse elimination.
pub trait Domain: Sync + Send + Clone {
    type E: Clone + Send + Sync + PartialEq + std::fmt::Debug + Default;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_unit(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// `a / u` for a unit `u`.
    fn div_unit(&self, a: &Self::E, u: &Self::E) -> Self::E;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    /// `a − c·b`.
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E {
        self.sub(a, &self.mul(c, b))
    }

    fn from_elem(&self, e: &Elem) -> Self::E;
    fn to_elem(&self, e: &Self::E) -> Elem;
    fn is_field(&self) -> bool;
    fn from_integer(&self, i: &Integer) -> Self::E;
    /// Integer value, for domains that embed in `Z`.
    fn to_integer(&self, e: &Self::E) -> Option<Integer>;
}

/// The prime field `F_p` with residues in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Fp> {
        if !crate::ring::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn inv(&self, a: u64) -> u64 {
        // Fermat; p is prime.
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
}

impl Domain for Fp {
    type E = u64;
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn div_unit(&self, a: &u64, u: &u64) -> u64 {
        if *u == 1 {
            *a
        } else {
            self.mul(a, &self.inv(*u))
        }
    }
    fn from_elem(&self, e: &Elem) -> u64 {
        match e {
            Elem::Int(i) => i.rem_euclid_u64(self.p),
            Elem::Rat(r) => {
                let n = Integer::from_big(r.numer().clone()).rem_euclid_u64(self.p);
                let d = Integer::from_big(r.denom().clone()).rem_euclid_u64(self.p);
                assert!(d != 0, "denominator divisible by p");
                self.mul(&n, &self.inv(d))
            }
        }
    }
    fn to_elem(&self, e: &u64) -> Elem {
        Elem::int(*e as i64)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn from_integer(&self, i: &Integer) -> u64 {
        i.rem_euclid_u64(self.p)
    }
    fn to_integer(&self, _: &u64) -> Option<Integer> {
        None
    }
}

/// The integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Zz;

impl Domain for Zz {
    type E = Integer;
    fn zero(&self) -> Integer {
        Integer::ZERO
    }
    fn one(&self) -> Integer {
        Integer::ONE
    }
    #[inline]
    fn is_zero(&self, a: &Integer) -> bool {
        a.is_zero()
    }
    #[inline]
    fn is_unit(&self, a: &Integer) -> bool {
        a.is_unit()
    }
    #[inline]
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }
    #[inline]
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    #[inline]
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    #[inline]
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }
    fn div_unit(&self, a: &Integer, u: &Integer) -> Integer {
        if u.is_one() {
            a.clone()
        } else {
            -a
        }
    }
    fn from_elem(&self, e: &Elem) -> Integer {
        match e {
            Elem::Int(i) => i.clone(),
            Elem::Rat(r) => {
                assert!(r.denom().is_one(), "non-integral rational in integer matrix");
                Integer::from_big(r.numer().clone())
            }
        }
    }
    fn to_elem(&self, e: &Integer) -> Elem {
        Elem::Int(e.clone())
    }
    fn is_field(&self) -> bool {
        false
    }
    fn from_integer(&self, i: &Integer) -> Integer {
        i.clone()
    }
    fn to_integer(&self, e: &Integer) -> Option<Integer> {
        Some(e.clone())
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Qq;

impl Domain for Qq {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn div_unit(&self, a: &BigRational, u: &BigRational) -> BigRational {
        a / u
    }
    fn from_elem(&self, e: &Elem) -> BigRational {
        e.to_rational()
    }
    fn to_elem(&self, e: &BigRational) -> Elem {
        Elem::Rat(Box::new(e.clone()))
    }
    fn is_field(&self) -> bool {
        true
    }
    fn from_integer(&self, i: &Integer) -> BigRational {
        BigRational::from_integer(i.to_big())
    }
    fn to_integer(&self, _: &BigRational) -> Option<Integer> {
        None
    }
}

/// Which engine a ring maps onto.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Engine {
    pub fn for_ring(ring: Ring) -> Result<Engine> {
        match ring {
            Ring::Integers => Ok(Engine::Integers),
            Ring::Rationals => Ok(Engine::Rationals),
            Ring::IntegersMod(m) => match ring.prime() {
                Some(p) => Ok(Engine::PrimeField(p)),
                None => Err(Error::UnsupportedRing {
                    needed: "Z, Q or a prime field",
                    ring: format!("Zmod:{m}"),
                }),
            },
        }
    }
}
