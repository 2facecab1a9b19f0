//! The fixed equation families: the Klein quartic, the Wiman curve and its
//! quadratic twists, the plane quartic downstairs of the twists, the plane
//! model used for the level-9 cover, and the elliptic targets.

use crate::arith::squarefree_part;
use crate::curves::field::Fp;
use crate::curves::CurveError;

/// A sparse multivariate polynomial with integer coefficients; enough
/// machinery to evaluate the model equations and their Jacobians mod `p`.
#[derive(Clone, Debug)]
pub struct MPoly {
    vars: usize,
    terms: Vec<(i64, Vec<u32>)>,
}

impl MPoly {
    pub fn new(vars: usize, terms: Vec<(i64, Vec<u32>)>) -> Self {
        debug_assert!(terms.iter().all(|(_, e)| e.len() == vars));
        MPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn eval(&self, xs: &[Fp], p: u64) -> Fp {
        debug_assert_eq!(xs.len(), self.vars);
        let mut acc = Fp::from_u64(0, p);
        for (coeff, exps) in &self.terms {
            let mut term = Fp::new(*coeff, p);
            for (x, &e) in xs.iter().zip(exps) {
                if e > 0 {
                    term = term.mul(x.pow(e as u64));
                }
            }
            acc = acc.add(term);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(_, exps)| exps[var] > 0)
            .map(|(coeff, exps)| {
                let mut e = exps.clone();
                let k = e[var];
                e[var] -= 1;
                (coeff * k as i64, e)
            })
            .collect();
        MPoly {
            vars: self.vars,
            terms,
        }
    }
}

/// The explicit curve models with their fixed defining equations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurveModel {
    /// `x^3 y + y^3 z + z^3 x = 0` in `P^2`; genus 3.
    KleinQuartic,
    /// Intersection of three quadrics in `P^4`; genus 5. `WimanTwist(1)`
    /// is the Wiman curve `W` itself, `d` ranges over squarefree integers.
    WimanTwist(i64),
    /// `x0^4 = x1 x2 (4 x1^2 + x2^2)` in `P^2`, the common quotient of all
    /// the twists; genus 3.
    X064Quartic,
    /// The singular plane model `y^6 - x(x^3+1) y^3 = x^5 (x^3+1)^2`,
    /// used only as the affine source of the degree-3 cover; no genus is
    /// attached to it.
    X9Sextic,
    /// `t^2 - t = x^3`; elliptic.
    EllipticTEq,
    /// `y^2 = x^3 - x`, conductor 32.
    EllipticConductor32,
    /// `y^2 = x^3 + x`, conductor 64.
    EllipticConductor64,
    /// `y^2 + 3xy + y = x^3 - 2x - 3`, conductor 49.
    X049Elliptic,
}

impl CurveModel {
    /// Twist constructor that insists on a nonzero squarefree `d`.
    pub fn wiman_twist(d: i64) -> Result<Self, CurveError> {
        if d == 0 || squarefree_part(d) != d {
            return Err(CurveError::NotSquarefree(d));
        }
        Ok(CurveModel::WimanTwist(d))
    }

    pub fn name(&self) -> String {
        match self {
            CurveModel::KleinQuartic => "klein".to_string(),
            CurveModel::WimanTwist(d) => format!("wiman({d})"),
            CurveModel::X064Quartic => "x064".to_string(),
            CurveModel::X9Sextic => "x9".to_string(),
            CurveModel::EllipticTEq => "eteq".to_string(),
            CurveModel::EllipticConductor32 => "e32".to_string(),
            CurveModel::EllipticConductor64 => "e64".to_string(),
            CurveModel::X049Elliptic => "e49".to_string(),
        }
    }

    /// Primes of bad reduction, i.e. the primes the enumerators refuse.
    pub fn bad_primes(&self) -> Vec<u64> {
        match self {
            CurveModel::KleinQuartic => vec![7],
            CurveModel::WimanTwist(d) => {
                let mut primes = vec![2];
                primes.extend(crate::arith::factorize(d.unsigned_abs()).primes());
                primes.sort_unstable();
                primes.dedup();
                primes
            }
            CurveModel::X064Quartic => vec![2],
            CurveModel::X9Sextic => vec![3],
            CurveModel::EllipticTEq => vec![3],
            CurveModel::EllipticConductor32 | CurveModel::EllipticConductor64 => vec![2],
            CurveModel::X049Elliptic => vec![7],
        }
    }

    /// Genus of the smooth model, when this plane/space model is smooth.
    /// The level-9 plane model is singular, so it declares none.
    pub fn declared_genus(&self) -> Option<u64> {
        match self {
            CurveModel::KleinQuartic | CurveModel::X064Quartic => Some(3),
            CurveModel::WimanTwist(_) => Some(5),
            CurveModel::X9Sextic => None,
            _ => Some(1),
        }
    }

    /// Stated conductor, kept as metadata only (never recomputed).
    pub fn conductor(&self) -> Option<u64> {
        match self {
            CurveModel::EllipticConductor32 => Some(32),
            CurveModel::EllipticConductor64 => Some(64),
            CurveModel::X049Elliptic => Some(49),
            _ => None,
        }
    }

    /// Homogeneous defining equations in the model's ambient space.
    /// Plane models use coordinates `(x, y, z)` with `z` the line at
    /// infinity; the twists use `(x0, x1, x2, x3, x4)`.
    pub fn equations(&self) -> Vec<MPoly> {
        match self {
            CurveModel::KleinQuartic => vec![MPoly::new(
                3,
                vec![
                    (1, vec![3, 1, 0]),
                    (1, vec![0, 3, 1]),
                    (1, vec![1, 0, 3]),
                ],
            )],
            CurveModel::WimanTwist(d) => vec![
                // x0^2 - x3 x4
                MPoly::new(
                    5,
                    vec![(1, vec![2, 0, 0, 0, 0]), (-1, vec![0, 0, 0, 1, 1])],
                ),
                // d x3^2 - 4 x1^2 - x2^2
                MPoly::new(
                    5,
                    vec![
                        (*d, vec![0, 0, 0, 2, 0]),
                        (-4, vec![0, 2, 0, 0, 0]),
                        (-1, vec![0, 0, 2, 0, 0]),
                    ],
                ),
                // x4^2 - d x1 x2
                MPoly::new(
                    5,
                    vec![(1, vec![0, 0, 0, 0, 2]), (-*d, vec![0, 1, 1, 0, 0])],
                ),
            ],
            CurveModel::X064Quartic => vec![MPoly::new(
                3,
                // x0^4 - 4 x1^3 x2 - x1 x2^3
                vec![
                    (1, vec![4, 0, 0]),
                    (-4, vec![0, 3, 1]),
                    (-1, vec![0, 1, 3]),
                ],
            )],
            CurveModel::X9Sextic => vec![MPoly::new(
                3,
                // y^6 w^5 - x^4 y^3 w^4 - x y^3 w^7 - x^11 - 2 x^8 w^3 - x^5 w^6
                vec![
                    (1, vec![0, 6, 5]),
                    (-1, vec![4, 3, 4]),
                    (-1, vec![1, 3, 7]),
                    (-1, vec![11, 0, 0]),
                    (-2, vec![8, 0, 3]),
                    (-1, vec![5, 0, 6]),
                ],
            )],
            CurveModel::EllipticTEq => vec![MPoly::new(
                3,
                // x^3 - t^2 w + t w^2, coordinates (x, t, w)
                vec![
                    (1, vec![3, 0, 0]),
                    (-1, vec![0, 2, 1]),
                    (1, vec![0, 1, 2]),
                ],
            )],
            CurveModel::EllipticConductor32 => vec![MPoly::new(
                3,
                // x^3 - x z^2 - y^2 z
                vec![
                    (1, vec![3, 0, 0]),
                    (-1, vec![1, 0, 2]),
                    (-1, vec![0, 2, 1]),
                ],
            )],
            CurveModel::EllipticConductor64 => vec![MPoly::new(
                3,
                // x^3 + x z^2 - y^2 z
                vec![
                    (1, vec![3, 0, 0]),
                    (1, vec![1, 0, 2]),
                    (-1, vec![0, 2, 1]),
                ],
            )],
            CurveModel::X049Elliptic => vec![MPoly::new(
                3,
                // x^3 - 2 x z^2 - 3 z^3 - y^2 z - 3 x y z - y z^2
                vec![
                    (1, vec![3, 0, 0]),
                    (-2, vec![1, 0, 2]),
                    (-3, vec![0, 0, 3]),
                    (-1, vec![0, 2, 1]),
                    (-3, vec![1, 1, 1]),
                    (-1, vec![0, 1, 2]),
                ],
            )],
        }
    }

    /// Number of homogeneous coordinates of the ambient space.
    pub fn coordinate_count(&self) -> usize {
        match self {
            CurveModel::WimanTwist(_) => 5,
            _ => 3,
        }
    }

    /// Do the given projective coordinates satisfy every defining equation?
    pub fn contains(&self, coords: &[Fp], p: u64) -> bool {
        self.equations().iter().all(|f| f.eval(coords, p).is_zero())
    }
}
