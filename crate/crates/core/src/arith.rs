//! Exact integer and residue arithmetic shared by every other module.
//!
//! Everything here is integer-exact: multiplicative functions are computed
//! from the prime factorization, and all comparisons downstream are done by
//! integer cross-multiplication. No floating point appears anywhere in the
//! crate's formula evaluation.

use std::fmt;

/// An element of `Z/nZ`, stored in the canonical range `[0, n)`.
///
/// Operations on residues with different moduli are a caller bug and panic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

#[allow(clippy::should_implement_trait)] // value-style ring ops on a Copy type
impl Residue {
    /// Reduce an integer into `[0, n)`.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        let m = modulus as i64;
        Residue {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::from_u64(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_u64(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check_same_modulus(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixing residues of distinct moduli"
        );
    }

    pub fn add(self, other: Self) -> Self {
        self.check_same_modulus(other);
        Residue {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.check_same_modulus(other);
        Residue {
            value: (self.value + self.modulus - other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(self, other: Self) -> Self {
        self.check_same_modulus(other);
        // moduli stay below 2^32 in practice, but widen anyway
        let prod = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Residue {
            value: prod as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(self) -> Self {
        Residue {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse, when `gcd(value, modulus) = 1`.
    pub fn inverse(self) -> Option<Self> {
        let (g, x, _) = extended_gcd(self.value as i64, self.modulus as i64);
        if g != 1 {
            return None;
        }
        Some(Residue::new(x, self.modulus))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Prime factorization `n = p_1^{a_1} ... p_s^{a_s}` with the primes sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiply the factorization back together.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, a)| p.pow(a))
            .product::<u64>()
    }
}

/// Factor `n >= 1` by trial division up to `sqrt(n)`.
///
/// `factorize(1)` is the empty product. Inputs at desk scale stay below
/// 10^6, for which trial division is instantaneous; the loop is still
/// correct for any `u64`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut m = n;
    let mut p: u64 = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut a = 0;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Factorization { factors }
}

/// Is `n` prime? Trial division; adequate for the moduli handled here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n);
    f.pairs() == [(n, 1)]
}

/// Euler's totient `phi(n) = n * prod_{p|n} (1 - 1/p)`, exactly.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    let mut result = n;
    for p in factorize(n).primes() {
        result = result / p * (p - 1);
    }
    result
}

/// Dedekind's psi `psi(n) = n * prod_{p|n} (1 + 1/p)`, exactly.
pub fn dedekind_psi(n: u64) -> u64 {
    assert!(n >= 1, "dedekind_psi requires n >= 1");
    let mut result = n;
    for p in factorize(n).primes() {
        result = result / p * (p + 1);
    }
    result
}

/// The unique squarefree `d` with `n = d * m^2` and `sign(d) = sign(n)`.
pub fn squarefree_part(n: i64) -> i64 {
    assert!(n != 0, "squarefree_part requires n != 0");
    let mut d: i64 = if n < 0 { -1 } else { 1 };
    for (p, a) in factorize(n.unsigned_abs()).pairs() {
        if a % 2 == 1 {
            d *= *p as i64;
        }
    }
    d
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, x, y) = extended_gcd(b, a % b);
    (g, y, x - (a / b) * y)
}

/// Floor of the integer square root.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    // float seed, then correct exactly
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `Some(r)` when `n = r^2` with `r >= 0`.
pub fn perfect_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n as u128) as i64;
    (r * r == n).then_some(r)
}

/// `Some(r)` when `n = r^4` with `r >= 0`.
pub fn perfect_fourth_root(n: i64) -> Option<i64> {
    let r = perfect_sqrt(n)?;
    perfect_sqrt(r)
}
