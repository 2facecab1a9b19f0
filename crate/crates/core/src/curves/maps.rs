//! The maps the classification leans on: the fixed-point-free involution
//! of the Wiman twists, their common quotient onto the plane quartic, and
//! the degree-3 cover from the level-9 plane model to its elliptic target.

use crate::curves::field::Fp;
use crate::curves::models::CurveModel;
use crate::curves::point::{FpPoint, ZPoint};
use crate::curves::CurveError;

/// `iota_1(x0, x1, x2, x3, x4) = (x0, x1, x2, -x3, -x4)` on a twist model.
/// An involution with no fixed points on any of the twists.
pub fn iota1(model: &CurveModel, pt: &FpPoint) -> Result<FpPoint, CurveError> {
    let CurveModel::WimanTwist(_) = model else {
        return Err(CurveError::PointNotOnCurve(pt.to_string()));
    };
    let p = pt.characteristic();
    let coords = pt.coords();
    if !model.contains(&coords, p) {
        return Err(CurveError::PointNotOnCurve(pt.to_string()));
    }
    let image = [
        coords[0],
        coords[1],
        coords[2],
        coords[3].neg(),
        coords[4].neg(),
    ];
    debug_assert!(model.contains(&image, p));
    Ok(FpPoint::new(&image, p).expect("involution preserves nonzeroness"))
}

/// The quotient map `f_d(x0, ..., x4) = (x0, x1, x2)` onto the quartic
/// `x0^4 = x1 x2 (4 x1^2 + x2^2)`, identical on a point and its
/// `iota_1`-image.
pub fn quotient_to_x064(model: &CurveModel, pt: &FpPoint) -> Result<FpPoint, CurveError> {
    let CurveModel::WimanTwist(_) = model else {
        return Err(CurveError::PointNotOnCurve(pt.to_string()));
    };
    let p = pt.characteristic();
    let coords = pt.coords();
    if !model.contains(&coords, p) {
        return Err(CurveError::PointNotOnCurve(pt.to_string()));
    }
    let image = &coords[..3];
    let projected = FpPoint::new(image, p).ok_or(CurveError::DegenerateImage)?;
    debug_assert!(CurveModel::X064Quartic.contains(&projected.coords(), p));
    Ok(projected)
}

/// Exact evaluation of the twist quadrics on an integer tuple.
pub fn wiman_satisfied_z(d: i64, coords: &[i64]) -> bool {
    let [x0, x1, x2, x3, x4] = coords else {
        return false;
    };
    let (x0, x1, x2, x3, x4) = (
        *x0 as i128,
        *x1 as i128,
        *x2 as i128,
        *x3 as i128,
        *x4 as i128,
    );
    let d = d as i128;
    x0 * x0 == x3 * x4 && d * x3 * x3 == 4 * x1 * x1 + x2 * x2 && x4 * x4 == d * x1 * x2
}

/// Exact evaluation of the quartic on an integer triple.
pub fn x064_satisfied_z(coords: &[i64]) -> bool {
    let [x0, x1, x2] = coords else {
        return false;
    };
    let (x0, x1, x2) = (*x0 as i128, *x1 as i128, *x2 as i128);
    x0.pow(4) == x1 * x2 * (4 * x1 * x1 + x2 * x2)
}

/// Rational version of the quotient map, for the twist-partition search.
pub fn quotient_to_x064_z(d: i64, pt: &ZPoint) -> Result<ZPoint, CurveError> {
    if !wiman_satisfied_z(d, pt.coords()) {
        return Err(CurveError::PointNotOnCurve(pt.to_string()));
    }
    let projected = ZPoint::new(&pt.coords()[..3]).ok_or(CurveError::DegenerateImage)?;
    debug_assert!(x064_satisfied_z(projected.coords()));
    Ok(projected)
}

/// The degree-3 cover from the affine level-9 plane model to
/// `z^2 - x(x^3+1) z = x^5 (x^3+1)^2`, given by `z = y^3`.
pub fn x9_cover_map(pt: (Fp, Fp), p: u64) -> Result<(Fp, Fp), CurveError> {
    super::enumerate::check_prime(&CurveModel::X9Sextic, p)?;
    let (x, y) = pt;
    if !on_x9_affine(x, y, p) {
        return Err(CurveError::PointNotOnCurve(format!(
            "({}, {})",
            x.value(),
            y.value()
        )));
    }
    let z = y.pow(3);
    debug_assert!(on_eprime_affine(x, z, p));
    Ok((x, z))
}

/// Does `(x, y)` satisfy the affine sextic?
pub fn on_x9_affine(x: Fp, y: Fp, p: u64) -> bool {
    let one = Fp::from_u64(1, p);
    let xs = [x, y, one];
    CurveModel::X9Sextic.equations()[0].eval(&xs, p).is_zero()
}

/// Does `(x, z)` satisfy `z^2 - x(x^3+1) z = x^5 (x^3+1)^2`?
pub fn on_eprime_affine(x: Fp, z: Fp, p: u64) -> bool {
    let one = Fp::from_u64(1, p);
    let u = x.mul(x.pow(3).add(one));
    let rhs = x.pow(5).mul(x.pow(3).add(one).pow(2));
    z.mul(z).sub(u.mul(z)) == rhs
}

/// Off the degenerate locus `x (x^3 + 1) = 0`, rescale the cover target to
/// `t^2 - t = x^3` by `t = z / (x (x^3 + 1))`. Returns `None` on the locus.
pub fn x9_t_transform(pt: (Fp, Fp), p: u64) -> Option<(Fp, Fp)> {
    let (x, z) = pt;
    let one = Fp::from_u64(1, p);
    let u = x.mul(x.pow(3).add(one));
    let t = z.mul(u.inverse()?);
    debug_assert_eq!(t.mul(t).sub(t), x.pow(3));
    Some((x, t))
}
