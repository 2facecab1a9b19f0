//! Prime-field arithmetic for the point-enumeration kernels.

use crate::arith;

/// An element of `F_p`, `p` prime. The enumeration bound keeps `p <= 499`,
/// so everything fits comfortably in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fp {
    value: u64,
    p: u64,
}

#[allow(clippy::should_implement_trait)] // value-style ring ops on a Copy type
impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(arith::is_prime(p));
        Fp {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        Fp { value: value % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, o: Fp) -> Fp {
        Fp {
            value: (self.value + o.value) % self.p,
            p: self.p,
        }
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp {
            value: (self.value + self.p - o.value) % self.p,
            p: self.p,
        }
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp {
            value: self.value * o.value % self.p,
            p: self.p,
        }
    }

    pub fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::from_u64(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element via Fermat.
    pub fn inverse(self) -> Option<Fp> {
        if self.is_zero() {
            return None;
        }
        Some(self.pow(self.p - 2))
    }
}

/// Square roots in `F_p`, found by one exhaustive pass (ample at `p <= 499`)
/// and kept as a table for the scan loops.
pub struct SqrtTable {
    p: u64,
    roots: Vec<Vec<u64>>,
}

impl SqrtTable {
    pub fn new(p: u64) -> Self {
        let mut roots = vec![Vec::new(); p as usize];
        for r in 0..p {
            roots[(r * r % p) as usize].push(r);
        }
        SqrtTable { p, roots }
    }

    /// All `r` with `r^2 = v`: zero, one (only `v = 0`) or two entries.
    pub fn roots_of(&self, v: Fp) -> &[u64] {
        debug_assert_eq!(v.value() % self.p, v.value());
        &self.roots[v.value() as usize]
    }
}
