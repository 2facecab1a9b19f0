//! Canonicalized projective points, over a prime field and over `Z`.

use std::fmt;

use crate::arith::gcd_i64;
use crate::curves::field::Fp;

/// A point of `P^n(F_p)` scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FpPoint {
    p: u64,
    coords: Vec<u64>,
}

impl FpPoint {
    /// `None` when every coordinate vanishes.
    pub fn new(coords: &[Fp], p: u64) -> Option<Self> {
        let lead = coords.iter().find(|c| !c.is_zero())?;
        let scale = lead.inverse().expect("nonzero leading coordinate");
        Some(FpPoint {
            p,
            coords: coords.iter().map(|c| c.mul(scale).value()).collect(),
        })
    }

    pub fn from_values(values: &[i64], p: u64) -> Option<Self> {
        let coords: Vec<Fp> = values.iter().map(|&v| Fp::new(v, p)).collect();
        Self::new(&coords, p)
    }

    pub fn coords(&self) -> Vec<Fp> {
        self.coords.iter().map(|&v| Fp::from_u64(v, self.p)).collect()
    }

    pub fn raw(&self) -> &[u64] {
        &self.coords
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }
}

impl fmt::Display for FpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(":"))
    }
}

/// A rational projective point as a primitive integer tuple: coprime
/// coordinates, first nonzero one positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ZPoint {
    coords: Vec<i64>,
}

impl ZPoint {
    /// Reduce to the primitive representative; `None` for the zero tuple.
    pub fn new(coords: &[i64]) -> Option<Self> {
        let g = coords.iter().fold(0i64, |acc, &c| gcd_i64(acc, c));
        if g == 0 {
            return None;
        }
        let mut reduced: Vec<i64> = coords.iter().map(|&c| c / g).collect();
        let lead = *reduced.iter().find(|&&c| c != 0).expect("nonzero tuple");
        if lead < 0 {
            for c in &mut reduced {
                *c = -*c;
            }
        }
        Some(ZPoint { coords: reduced })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Height: the maximum absolute coordinate of the primitive tuple.
    pub fn height(&self) -> i64 {
        self.coords.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Reduction mod `p` as a canonical field point.
    pub fn reduce_mod(&self, p: u64) -> Option<FpPoint> {
        FpPoint::from_values(&self.coords, p)
    }
}

impl fmt::Display for ZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(":"))
    }
}
