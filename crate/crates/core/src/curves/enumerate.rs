//! Exhaustive point enumeration over prime fields, effective Weil windows,
//! and a Jacobian-rank smoothness probe.

use std::collections::BTreeSet;

use crate::arith::{self, isqrt};
use crate::curves::field::{Fp, SqrtTable};
use crate::curves::models::{CurveModel, MPoly};
use crate::curves::point::FpPoint;
use crate::curves::CurveError;

/// Enumeration refuses primes above this bound; the scans are quadratic in
/// `p` and this is plenty for desk-scale experiments.
pub const PRIME_LIMIT: u64 = 499;

/// Validate the reduction prime for a model.
pub fn check_prime(model: &CurveModel, p: u64) -> Result<(), CurveError> {
    if let CurveModel::WimanTwist(d) = model {
        CurveModel::wiman_twist(*d)?;
    }
    if !arith::is_prime(p) {
        return Err(CurveError::NotPrime(p));
    }
    if p > PRIME_LIMIT {
        return Err(CurveError::PrimeTooLarge(p));
    }
    if model.bad_primes().contains(&p) {
        return Err(CurveError::BadReductionPrime {
            model: model.name(),
            p,
        });
    }
    Ok(())
}

/// All projective points of the model over `F_p`, canonicalized.
///
/// Plane models are scanned chart by chart. The twists in `P^4` are scanned
/// over the canonical `(x1, x2, x3)` part only; the two binding quadrics
/// then determine `x4` and `x0` up to square roots, so the scan stays
/// quadratic in `p`.
pub fn enumerate_points(model: &CurveModel, p: u64) -> Result<BTreeSet<FpPoint>, CurveError> {
    check_prime(model, p)?;
    match model {
        CurveModel::WimanTwist(d) => Ok(enumerate_wiman(*d, p)),
        _ => Ok(enumerate_plane(model, p)),
    }
}

fn enumerate_plane(model: &CurveModel, p: u64) -> BTreeSet<FpPoint> {
    let eqs = model.equations();
    let mut out = BTreeSet::new();
    let mut consider = |coords: [u64; 3]| {
        let xs: Vec<Fp> = coords.iter().map(|&v| Fp::from_u64(v, p)).collect();
        if eqs.iter().all(|f| f.eval(&xs, p).is_zero()) {
            out.insert(FpPoint::new(&xs, p).expect("chart representative is nonzero"));
        }
    };
    for a in 0..p {
        for b in 0..p {
            consider([1, a, b]);
        }
    }
    for c in 0..p {
        consider([0, 1, c]);
    }
    consider([0, 0, 1]);
    out
}

fn enumerate_wiman(d: i64, p: u64) -> BTreeSet<FpPoint> {
    let table = SqrtTable::new(p);
    let d = Fp::new(d, p);
    let mut out = BTreeSet::new();
    let mut consider = |x1: Fp, x2: Fp, x3: Fp| {
        // d x3^2 = 4 x1^2 + x2^2 binds the scanned triple
        let four = Fp::from_u64(4, p);
        if d.mul(x3).mul(x3) != four.mul(x1).mul(x1).add(x2.mul(x2)) {
            return;
        }
        for &x4 in table.roots_of(d.mul(x1).mul(x2)) {
            let x4 = Fp::from_u64(x4, p);
            for &x0 in table.roots_of(x3.mul(x4)) {
                let x0 = Fp::from_u64(x0, p);
                let coords = [x0, x1, x2, x3, x4];
                if let Some(pt) = FpPoint::new(&coords, p) {
                    out.insert(pt);
                }
            }
        }
    };
    let zero = Fp::from_u64(0, p);
    let one = Fp::from_u64(1, p);
    for a in 0..p {
        for b in 0..p {
            consider(one, Fp::from_u64(a, p), Fp::from_u64(b, p));
        }
    }
    for c in 0..p {
        consider(zero, one, Fp::from_u64(c, p));
    }
    consider(zero, zero, one);
    out
}

/// Affine solutions `(x, y)` of a plane model, i.e. the chart `z = 1` (or
/// `w = 1`). This is the domain the level-9 cover maps are defined on.
pub fn enumerate_affine(model: &CurveModel, p: u64) -> Result<Vec<(u64, u64)>, CurveError> {
    check_prime(model, p)?;
    assert_eq!(model.coordinate_count(), 3, "affine charts are for plane models");
    let eqs = model.equations();
    let one = Fp::from_u64(1, p);
    let mut out = Vec::new();
    for x in 0..p {
        for y in 0..p {
            let xs = [Fp::from_u64(x, p), Fp::from_u64(y, p), one];
            if eqs.iter().all(|f| f.eval(&xs, p).is_zero()) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

pub fn count_points(model: &CurveModel, p: u64) -> Result<u64, CurveError> {
    Ok(enumerate_points(model, p)?.len() as u64)
}

/// The Weil interval `[p + 1 - floor(2g sqrt(p)), p + 1 + floor(2g sqrt(p))]`.
/// The lower end may be negative; point counts are compared against the
/// effective window clamped at zero.
pub fn weil_window(p: u64, genus: u64) -> (i128, i128) {
    let radius = isqrt(4 * (genus as u128) * (genus as u128) * p as u128) as i128;
    let center = p as i128 + 1;
    (center - radius, center + radius)
}

pub fn in_weil_window(count: u64, p: u64, genus: u64) -> bool {
    let (lo, hi) = weil_window(p, genus);
    let count = count as i128;
    count >= lo.max(0) && count <= hi
}

/// Rank of the Jacobian of the model equations at every enumerated point.
/// Returns `true` when no point drops below full rank, i.e. the reduction
/// is smooth as far as its rational points can tell.
pub fn smoothness_probe(model: &CurveModel, primes: &[u64]) -> Result<bool, CurveError> {
    let eqs = model.equations();
    let jacobian: Vec<Vec<MPoly>> = eqs
        .iter()
        .map(|f| (0..f.vars()).map(|v| f.derivative(v)).collect())
        .collect();
    let full_rank = eqs.len();
    for &p in primes {
        for point in enumerate_points(model, p)? {
            let xs = point.coords();
            let rows: Vec<Vec<Fp>> = jacobian
                .iter()
                .map(|row| row.iter().map(|df| df.eval(&xs, p)).collect())
                .collect();
            if matrix_rank(rows) < full_rank {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn matrix_rank(mut rows: Vec<Vec<Fp>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].mul(inv);
                let pivot_row = rows[rank].clone();
                for (c, entry) in rows[r].iter_mut().enumerate().skip(col) {
                    *entry = entry.sub(pivot_row[c].mul(factor));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
