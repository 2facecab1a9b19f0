//! Bounded-height search for rational points on the plane quartic and the
//! Wiman twists, and the partition experiment over the twist family.
//!
//! All tuples are primitive with first nonzero coordinate positive, and
//! "height" is the maximum absolute coordinate. The scans run over the
//! free coordinates `(x1, x2)` and solve the binding equations for the
//! rest, so every solution of height at most `H` is found.

use std::collections::BTreeSet;

use crate::arith::{perfect_fourth_root, perfect_sqrt, squarefree_part};
use crate::curves::maps::{quotient_to_x064_z, wiman_satisfied_z, x064_satisfied_z};
use crate::curves::models::CurveModel;
use crate::curves::point::ZPoint;
use crate::curves::CurveError;

/// All primitive integer points of height at most `height` on the model.
/// Only the quartic and the twists support the search.
pub fn rational_point_search(
    model: &CurveModel,
    height: i64,
) -> Result<BTreeSet<ZPoint>, CurveError> {
    assert!(height >= 1);
    match model {
        CurveModel::X064Quartic => Ok(search_x064(height)),
        CurveModel::WimanTwist(d) => {
            CurveModel::wiman_twist(*d)?;
            Ok(search_wiman(*d, height))
        }
        other => Err(CurveError::SearchUnsupported(other.name())),
    }
}

fn search_x064(h: i64) -> BTreeSet<ZPoint> {
    let mut out = BTreeSet::new();
    for x1 in -h..=h {
        for x2 in -h..=h {
            if (x1, x2) == (0, 0) {
                continue;
            }
            let rhs = x1 * x2 * (4 * x1 * x1 + x2 * x2);
            let Some(root) = perfect_fourth_root(rhs) else {
                continue;
            };
            for x0 in [root, -root] {
                if x0.abs() <= h {
                    if let Some(pt) = ZPoint::new(&[x0, x1, x2]) {
                        debug_assert!(x064_satisfied_z(pt.coords()));
                        out.insert(pt);
                    }
                }
            }
        }
    }
    out
}

fn search_wiman(d: i64, h: i64) -> BTreeSet<ZPoint> {
    let mut out = BTreeSet::new();
    for x1 in -h..=h {
        for x2 in -h..=h {
            let t = 4 * x1 * x1 + x2 * x2;
            if t % d != 0 {
                continue;
            }
            let Some(x3_abs) = perfect_sqrt(t / d) else {
                continue;
            };
            let Some(u) = d.checked_mul(x1).and_then(|v| v.checked_mul(x2)) else {
                // an overflowing product cannot be x4^2 for |x4| <= h
                continue;
            };
            let Some(x4_abs) = perfect_sqrt(u) else {
                continue;
            };
            if x3_abs > h || x4_abs > h {
                continue;
            }
            for x3 in signed(x3_abs) {
                for x4 in signed(x4_abs) {
                    let Some(x0_abs) = perfect_sqrt(x3 * x4) else {
                        continue;
                    };
                    if x0_abs > h {
                        continue;
                    }
                    for x0 in signed(x0_abs) {
                        if let Some(pt) = ZPoint::new(&[x0, x1, x2, x3, x4]) {
                            debug_assert!(wiman_satisfied_z(d, pt.coords()));
                            out.insert(pt);
                        }
                    }
                }
            }
        }
    }
    out
}

fn signed(v: i64) -> Vec<i64> {
    if v == 0 {
        vec![0]
    } else {
        vec![v, -v]
    }
}

/// The squarefree integers `d` with `1 <= |d| <= dmax`, negatives included.
pub fn squarefree_twists(dmax: i64) -> Vec<i64> {
    assert!(dmax >= 1);
    let mut out = Vec::new();
    for a in 1..=dmax {
        if squarefree_part(a) == a {
            out.push(a);
            out.push(-a);
        }
    }
    out.sort_unstable();
    out
}

/// Points and quotient images of one twist.
#[derive(Clone, Debug)]
pub struct TwistScanRow {
    pub d: i64,
    pub points: Vec<ZPoint>,
    pub images: Vec<ZPoint>,
}

/// Outcome of scanning a family of twists against the quartic downstairs.
#[derive(Clone, Debug)]
pub struct TwistPartitionReport {
    pub height_bound: i64,
    pub quartic_points: Vec<ZPoint>,
    pub rows: Vec<TwistScanRow>,
    /// No quartic point is hit by two different twists.
    pub images_pairwise_disjoint: bool,
    /// The images of the twists with points cover the whole quartic set.
    pub images_cover_quartic: bool,
}

impl TwistPartitionReport {
    pub fn nonempty_twists(&self) -> Vec<i64> {
        self.rows
            .iter()
            .filter(|r| !r.points.is_empty())
            .map(|r| r.d)
            .collect()
    }
}

/// Search every twist in `d_values`, map the found points down to the
/// quartic, and record whether the images partition its rational points.
pub fn twist_partition_experiment(
    d_values: &[i64],
    height: i64,
) -> Result<TwistPartitionReport, CurveError> {
    let quartic: BTreeSet<ZPoint> =
        rational_point_search(&CurveModel::X064Quartic, height)?.into_iter().collect();
    let mut rows = Vec::new();
    for &d in d_values {
        let model = CurveModel::wiman_twist(d)?;
        let points: Vec<ZPoint> = rational_point_search(&model, height)?.into_iter().collect();
        let images: BTreeSet<ZPoint> = points
            .iter()
            .map(|pt| quotient_to_x064_z(d, pt))
            .collect::<Result<_, _>>()?;
        rows.push(TwistScanRow {
            d,
            points,
            images: images.into_iter().collect(),
        });
    }
    let mut seen: BTreeSet<ZPoint> = BTreeSet::new();
    let mut disjoint = true;
    for row in &rows {
        for image in &row.images {
            if !seen.insert(image.clone()) {
                disjoint = false;
            }
        }
    }
    let covers = seen == quartic;
    Ok(TwistPartitionReport {
        height_bound: height,
        quartic_points: quartic.into_iter().collect(),
        rows,
        images_pairwise_disjoint: disjoint,
        images_cover_quartic: covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: full primitive-triple scan of the quartic.
    fn x064_brute(h: i64) -> BTreeSet<ZPoint> {
        let mut out = BTreeSet::new();
        for x0 in -h..=h {
            for x1 in -h..=h {
                for x2 in -h..=h {
                    if (x0, x1, x2) == (0, 0, 0) {
                        continue;
                    }
                    if x064_satisfied_z(&[x0, x1, x2]) {
                        out.insert(ZPoint::new(&[x0, x1, x2]).unwrap());
                    }
                }
            }
        }
        out
    }

    #[test]
    fn quartic_has_exactly_four_points() {
        let found = rational_point_search(&CurveModel::X064Quartic, 100).unwrap();
        let expected: BTreeSet<ZPoint> = [
            vec![0i64, 1, 0],
            vec![0, 0, 1],
            vec![2, 1, 2],
            vec![2, -1, -2],
        ]
        .iter()
        .map(|c| ZPoint::new(c).unwrap())
        .collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn quartic_solver_matches_brute_force() {
        assert_eq!(
            rational_point_search(&CurveModel::X064Quartic, 30).unwrap(),
            x064_brute(30)
        );
    }

    #[test]
    fn wiman_and_its_quadratic_twist_have_four_points_each() {
        let w1 = rational_point_search(&CurveModel::WimanTwist(1), 100).unwrap();
        assert_eq!(w1.len(), 4);
        let expected_w1: BTreeSet<ZPoint> = [
            vec![0i64, 1, 0, 2, 0],
            vec![0, 1, 0, -2, 0],
            vec![0, 0, 1, 1, 0],
            vec![0, 0, 1, -1, 0],
        ]
        .iter()
        .map(|c| ZPoint::new(c).unwrap())
        .collect();
        assert_eq!(w1, expected_w1);

        let w2 = rational_point_search(&CurveModel::WimanTwist(2), 100).unwrap();
        assert_eq!(w2.len(), 4);
        for pt in &w2 {
            assert!(wiman_satisfied_z(2, pt.coords()));
        }
    }

    #[test]
    fn other_twists_are_empty() {
        for d in [3i64, 5, -1, -2, 7] {
            let found = rational_point_search(&CurveModel::WimanTwist(d), 60).unwrap();
            assert!(found.is_empty(), "d = {d}: {found:?}");
        }
    }

    #[test]
    fn search_rejects_unsupported_models() {
        assert!(matches!(
            rational_point_search(&CurveModel::KleinQuartic, 10),
            Err(CurveError::SearchUnsupported(_))
        ));
        assert!(matches!(
            rational_point_search(&CurveModel::WimanTwist(8), 10),
            Err(CurveError::NotSquarefree(8))
        ));
    }

    #[test]
    fn squarefree_twist_list() {
        let twists = squarefree_twists(10);
        assert_eq!(
            twists,
            vec![-10, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10]
        );
    }

    #[test]
    fn partition_experiment_at_small_height() {
        let report = twist_partition_experiment(&squarefree_twists(20), 50).unwrap();
        assert_eq!(report.nonempty_twists(), vec![1, 2]);
        assert!(report.images_pairwise_disjoint);
        assert!(report.images_cover_quartic);
        for row in &report.rows {
            match row.d {
                1 | 2 => {
                    assert_eq!(row.points.len(), 4);
                    assert_eq!(row.images.len(), 2, "each twist covers 2 quartic points");
                }
                _ => assert!(row.points.is_empty()),
            }
        }
        assert_eq!(report.quartic_points.len(), 4);
    }
}
