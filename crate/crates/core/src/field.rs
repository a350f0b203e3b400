//! Exact scalars: arbitrary-precision rationals and word-sized prime fields.
//!
//! All linear algebra in this crate is generic over a [`FieldCtx`], a small
//! context object that knows how to do arithmetic on its element type. The
//! rational context [`QQ`] works on `BigRational`; the prime-field context
//! [`GF`] carries the modulus and works on bare `u64` residues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use std::sync::OnceLock;

/// Exact rational scalar used for all curve-level data.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Arithmetic context for a field.
pub trait FieldCtx: Clone + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Send + Sync + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero; callers pivot on nonzero entries.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Image of an exact rational, or `None` when the denominator is not a unit.
    fn from_rat(&self, q: &Rat) -> Option<Self::Elem>;
    /// Optional growth control applied to rows during elimination.
    fn normalize_row(&self, _row: &mut [Self::Elem]) {}
}

/// The rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct QQ;

impl FieldCtx for QQ {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn inv(&self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_rat(&self, q: &Rat) -> Option<Rat> {
        Some(q.clone())
    }

    /// Scale the row to a primitive integer vector. Keeps entries small during
    /// elimination without changing the row space.
    fn normalize_row(&self, row: &mut [Rat]) {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for e in row.iter() {
            if !e.is_zero() {
                den_lcm = den_lcm.lcm(e.denom());
                num_gcd = num_gcd.gcd(e.numer());
            }
        }
        if num_gcd.is_zero() || (den_lcm.is_one() && num_gcd.is_one()) {
            return;
        }
        let scale = Rat::new(den_lcm, num_gcd);
        for e in row.iter_mut() {
            if !e.is_zero() {
                *e *= &scale;
            }
        }
    }
}

/// A prime field `F_p` with `p` a fixed 30-bit-plus prime; elements are residues.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GF {
    pub p: u64,
}

impl GF {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > (1 << 30) && is_prime_u64(p), "modulus must be a prime > 2^30");
        GF { p }
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, b);
            }
            b = self.mul_raw(b, b);
            e >>= 1;
        }
        acc
    }

    #[inline]
    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = n.mod_floor(&m);
        let digits = r.to_u64_digits().1;
        digits.first().copied().unwrap_or(0)
    }
}

impl FieldCtx for GF {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_raw(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 { 0 } else { self.p - a }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_rat(&self, q: &Rat) -> Option<u64> {
        let den = self.from_bigint(q.denom());
        if den == 0 {
            return None;
        }
        let num = self.from_bigint(q.numer());
        Some(self.mul_raw(num, self.inv(&den)))
    }
}

/// Deterministic Miller-Rabin for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const PRIME_TABLE_LEN: usize = 32;

/// Fixed table of the first 32 primes above 2^30; modular ranks sample from it.
pub fn prime_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut primes = Vec::with_capacity(PRIME_TABLE_LEN);
        let mut n = (1u64 << 30) + 1;
        while primes.len() < PRIME_TABLE_LEN {
            if is_prime_u64(n) {
                primes.push(n);
            }
            n += 2;
        }
        primes
    })
}

/// Draw a prime uniformly from the fixed table.
pub fn sample_prime(rng: &mut ChaCha8Rng) -> u64 {
    let table = prime_table();
    table[rng.gen_range(0..table.len())]
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Mix a seed with context tags so that every computation site draws an
/// independent, reproducible stream regardless of evaluation order.
pub fn subseed(seed: u64, tags: &[u64]) -> u64 {
    let mut s = splitmix64(seed ^ 0x6a7c_e662_43f2_b1adu64);
    for &t in tags {
        s = splitmix64(s ^ t);
    }
    s
}

pub fn rng_for(seed: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(subseed(seed, tags))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_table_is_30_bit_primes() {
        let t = prime_table();
        assert_eq!(t.len(), 32);
        for &p in t {
            assert!(p > (1 << 30));
            assert!(is_prime_u64(p));
        }
        assert_eq!(t[0], 1073741827);
    }

    #[test]
    fn gf_arithmetic_roundtrip() {
        let f = GF::new(prime_table()[0]);
        for a in [1u64, 2, 12345, f.p - 1] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        let q = rat_frac(-7, 3);
        let e = f.from_rat(&q).unwrap();
        let three = f.from_rat(&rat(3)).unwrap();
        let minus7 = f.from_rat(&rat(-7)).unwrap();
        assert_eq!(f.mul(&e, &three), minus7);
    }

    #[test]
    fn gf_from_rat_detects_bad_denominator() {
        let f = GF::new(prime_table()[0]);
        let q = Rat::new(BigInt::one(), BigInt::from(f.p));
        assert!(f.from_rat(&q).is_none());
    }

    #[test]
    fn qq_normalize_row_makes_primitive() {
        let f = QQ;
        let mut row = vec![rat_frac(1, 2), rat_frac(3, 4), rat(0)];
        f.normalize_row(&mut row);
        assert_eq!(row, vec![rat(2), rat(3), rat(0)]);
    }

    #[test]
    fn subseed_is_stable() {
        assert_eq!(subseed(1, &[2, 3]), subseed(1, &[2, 3]));
        assert_ne!(subseed(1, &[2, 3]), subseed(1, &[3, 2]));
    }
}
