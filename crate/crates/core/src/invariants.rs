//! Closed-form invariants of the curves `X(N)`: the cover degree `delta_N`,
//! the genus, the Hurwitz and index bounds, the automorphism-group order,
//! cusp counts, the degree ledger of the covers through `X_1(N^2)` and
//! `X_0(N^2)`, and a Riemann-Hurwitz evaluator over exact rationals.

use num_rational::Ratio;
use thiserror::Error;

use crate::arith::{dedekind_psi, euler_phi};
use crate::psl2::{self, SubgroupKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("genus {0} is below 2; the bound does not apply")]
    GenusTooSmall(u128),
    #[error("level {n} is below the minimum {min} for this quantity")]
    LevelTooSmall { n: u64, min: u64 },
}

/// Degree of the cover `X(N) -> X(1)`, which for `N > 2` is the group
/// order `|PSL_2(Z/NZ)|`; the degenerate values are 1 at `N = 1` and 6 at
/// `N = 2`.
pub fn delta(n: u64) -> u128 {
    psl2::psl2_order(n)
}

/// Genus of `X(N)`: `g = 1 + delta_N (N - 6) / 12N`, which is 0 for
/// `N <= 5` and 1 for `N = 6`. `X(1)` is the `j`-line and gets genus 0
/// directly rather than through the formula.
pub fn genus_xn(n: u64) -> u128 {
    assert!(n >= 1);
    if n == 1 {
        return 0;
    }
    let d = delta(n) as i128;
    let num = d * (n as i128 - 6);
    let den = 12 * n as i128;
    assert!(num % den == 0, "genus formula must clear denominators");
    let g = 1 + num / den;
    assert!(g >= 0);
    g as u128
}

/// Hurwitz bound `84(g - 1)` on the automorphism group of a genus-`g`
/// curve, `g >= 2`.
pub fn hurwitz_bound(genus: u128) -> Result<u128, InvariantError> {
    if genus < 2 {
        return Err(InvariantError::GenusTooSmall(genus));
    }
    Ok(84 * (genus - 1))
}

/// Upper bound on the index `m` of `PSL_2(Z/NZ)` inside `Aut(X(N))`,
/// obtained by comparing the Hurwitz bound with
/// `84(g_N - 1) = delta_N (7 - 42/N)`: the right side is increasing in
/// `N`, so on each interval the bound is the floor at the interval's top.
pub fn index_bound(n: u64) -> Result<u32, InvariantError> {
    match n {
        0..=6 => Err(InvariantError::LevelTooSmall { n, min: 7 }),
        7..=10 => Ok(2),
        11..=13 => Ok(3),
        14..=20 => Ok(4),
        _ => Ok(6),
    }
}

/// Order of `Aut(Y(N)) = SL_2(Z/NZ)/{±1}` for `N >= 7`, as the closed form
/// `N phi(N) psi(N) / 2`.
pub fn aut_order_yn(n: u64) -> Result<u128, InvariantError> {
    if n < 7 {
        return Err(InvariantError::LevelTooSmall { n, min: 7 });
    }
    Ok(n as u128 * euler_phi(n) as u128 * dedekind_psi(n) as u128 / 2)
}

/// Number of cusps of `X(N)` for `N >= 3`: the fiber of the cover over
/// `j(infinity)` has `delta_N / N` points.
pub fn cusp_count(n: u64) -> Result<u128, InvariantError> {
    if n < 3 {
        return Err(InvariantError::LevelTooSmall { n, min: 3 });
    }
    let d = delta(n);
    debug_assert!(d.is_multiple_of(n as u128));
    Ok(d / n as u128)
}

/// Degrees of the covers `pi_1 : X_1(N^2) -> X(N)`,
/// `pi_0 : X(N) -> X_0(N^2)`, their composite (the forgetful map
/// `X_1(N^2) -> X_0(N^2)`), and the quotient map `f_1 : X(N) -> X_1(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverDegreeLedger {
    pub n: u64,
    pub deg_pi1: u128,
    pub deg_pi0: u128,
    pub deg_f1: u128,
    pub deg_forgetful_x1n2_x0n2: u128,
}

/// Assemble the cover-degree ledger for `N >= 3` and verify its
/// multiplicativity `deg(pi_1) deg(pi_0) = deg(forgetful)`.
pub fn cover_degrees(n: u64) -> Result<CoverDegreeLedger, InvariantError> {
    if n < 3 {
        return Err(InvariantError::LevelTooSmall { n, min: 3 });
    }
    let deg_pi1 = n as u128;
    let deg_pi0 = euler_phi(n) as u128 / 2;
    let deg_forgetful = euler_phi(n * n) as u128 / 2;
    let ledger = CoverDegreeLedger {
        n,
        deg_pi1,
        deg_pi0,
        deg_f1: psl2::congruence_index(SubgroupKind::Gamma1, n),
        deg_forgetful_x1n2_x0n2: deg_forgetful,
    };
    assert_eq!(
        ledger.deg_pi1 * ledger.deg_pi0,
        ledger.deg_forgetful_x1n2_x0n2,
        "cover degree ledger must be multiplicative"
    );
    Ok(ledger)
}

/// Genus forced by Riemann-Hurwitz for a degree-`d` cover of a genus
/// `g_base` curve: `g = 1 + d(g_base - 1) + (1/2) sum count_i (nu_i - 1)`,
/// where each `(nu_i, count_i)` entry says `count_i` points upstairs have
/// ramification index `nu_i`.
///
/// The result is an exact rational on purpose: callers probing impossible
/// ramification hypotheses use non-integrality as the signal, so they
/// assert integrality themselves (see [`rational_genus_to_integer`]).
pub fn rh_genus(degree: i128, g_base: i128, ramification: &[(i128, i128)]) -> Ratio<i128> {
    assert!(degree >= 1);
    let base = Ratio::from_integer(1 + degree * (g_base - 1));
    let contribution: Ratio<i128> = ramification
        .iter()
        .map(|&(nu, count)| {
            assert!(nu >= 1 && count >= 0);
            Ratio::new(count * (nu - 1), 2)
        })
        .sum();
    base + contribution
}

/// `Some(g)` when the Riemann-Hurwitz output is an integer, `None` when
/// the probed ramification data was inconsistent.
pub fn rational_genus_to_integer(g: &Ratio<i128>) -> Option<i128> {
    g.is_integer().then(|| g.to_integer())
}

/// The `(2, 3, N)` ramification data of the cover `X(N) -> X(1)`: the
/// points over `j(i)`, `j(omega)` and `j(infinity)` are fully ramified
/// with those indices.
pub fn xn_over_x1_ramification(n: u64) -> Vec<(i128, i128)> {
    let d = delta(n) as i128;
    [2, 3, n as i128]
        .iter()
        .map(|&nu| {
            assert!(d % nu == 0);
            (nu, d / nu)
        })
        .collect()
}

/// One row of the invariant table for a level `N`.
///
/// Quantities that only make sense above a threshold level come back as
/// `None` below it (cusps need `N >= 3`, the automorphism data needs the
/// genus to be at least 2, i.e. `N >= 7`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub n: u64,
    pub delta: u128,
    pub genus: u128,
    pub aut_order: Option<u128>,
    pub cusp_count: Option<u128>,
    pub index_bound_m: Option<u32>,
}

pub fn curve_invariants(n: u64) -> CurveInvariants {
    let row = CurveInvariants {
        n,
        delta: delta(n),
        genus: genus_xn(n),
        aut_order: aut_order_yn(n).ok(),
        cusp_count: cusp_count(n).ok(),
        index_bound_m: index_bound(n).ok(),
    };
    if let Some(aut) = row.aut_order {
        debug_assert_eq!(aut, row.delta);
    }
    if let Some(cusps) = row.cusp_count {
        debug_assert_eq!(cusps * n as u128, row.delta);
    }
    row
}
