//! Hyperelliptic/bielliptic classification of the curves `X(N)`, `N >= 7`.
//!
//! The engine is a trio of exclusion criteria for a Galois cover
//! `phi : X -> Y` of degree `d` (with `g_Y >= 2` or `d` odd as standing
//! hypothesis):
//!
//! 1. `2 g_X + 2 > d (2 g_Y + 2)` excludes a hyperelliptic `X`;
//! 2. `2 g_X - 2 > d n_iota` for every involution `iota` of `Y` excludes a
//!    bielliptic `X` once `g_X >= 6`;
//! 3. `2 g_X - 2 > d (2 g_Y + 2)` likewise excludes a bielliptic `X`.
//!
//! These combine with two descent facts (a non-constant map out of a
//! hyperelliptic curve onto a curve of genus at least 2 forces the target
//! hyperelliptic; a bielliptic source forces the target bielliptic or
//! hyperelliptic) and with the known classification of the curves
//! `X_0(N^2)`, which is imported as a data table rather than recomputed.

use thiserror::Error;

use crate::invariants::{cover_degrees, genus_xn};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("genus {genus} is below the required minimum {min}")]
    GenusTooSmall { genus: u64, min: u64 },
    #[error("the criteria need g_Y >= 2 or odd degree; got g_Y = {g_target}, d = {degree}")]
    HypothesisNotMet { degree: u64, g_target: u64 },
    #[error("level {0} is below 7; the classification starts there")]
    LevelTooSmall(u64),
    #[error("a {0:?} involution has no fixed-point formula")]
    UnconstrainedInvolution(InvolutionKind),
}

/// A Galois cover between smooth projective curves, reduced to the numbers
/// the exclusion criteria consume.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverDatum {
    pub degree: u64,
    pub g_source: u64,
    pub g_target: u64,
    pub galois: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionKind {
    Hyperelliptic,
    Bielliptic,
    Other,
}

/// Fixed points of an involution on a genus-`g` curve, `g >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvolutionProfile {
    pub kind: InvolutionKind,
    pub fixed_points: u64,
}

impl InvolutionProfile {
    /// Profile of the special involutions, with the fixed-point count
    /// forced by the kind.
    pub fn of(kind: InvolutionKind, genus: u64) -> Result<Self, ClassifyError> {
        Ok(InvolutionProfile {
            kind,
            fixed_points: fixed_point_count(kind, genus)?,
        })
    }

    /// An arbitrary involution with an observed fixed-point count.
    pub fn other(fixed_points: u64) -> Self {
        InvolutionProfile {
            kind: InvolutionKind::Other,
            fixed_points,
        }
    }
}

/// `2g + 2` fixed points for the hyperelliptic involution, `2g - 2` for a
/// bielliptic one.
pub fn fixed_point_count(kind: InvolutionKind, genus: u64) -> Result<u64, ClassifyError> {
    if genus < 2 {
        return Err(ClassifyError::GenusTooSmall { genus, min: 2 });
    }
    match kind {
        InvolutionKind::Hyperelliptic => Ok(2 * genus + 2),
        InvolutionKind::Bielliptic => Ok(2 * genus - 2),
        InvolutionKind::Other => Err(ClassifyError::UnconstrainedInvolution(kind)),
    }
}

fn check_hypothesis(cover: &CoverDatum) -> Result<(), ClassifyError> {
    if cover.g_target >= 2 || cover.degree % 2 == 1 {
        Ok(())
    } else {
        Err(ClassifyError::HypothesisNotMet {
            degree: cover.degree,
            g_target: cover.g_target,
        })
    }
}

/// Criterion 1: `2 g_X + 2 > d (2 g_Y + 2)` rules out a hyperelliptic
/// source.
pub fn excludes_hyperelliptic(cover: &CoverDatum) -> Result<bool, ClassifyError> {
    if cover.g_source < 2 {
        return Err(ClassifyError::GenusTooSmall {
            genus: cover.g_source,
            min: 2,
        });
    }
    check_hypothesis(cover)?;
    Ok(2 * cover.g_source + 2 > cover.degree * (2 * cover.g_target + 2))
}

/// Criterion 2: `2 g_X - 2 > d n_iota` against a specific involution
/// downstairs; needs `g_X >= 6` so the bielliptic involution is unique.
pub fn excludes_bielliptic_fp(
    cover: &CoverDatum,
    n_involution: u64,
) -> Result<bool, ClassifyError> {
    if cover.g_source < 6 {
        return Err(ClassifyError::GenusTooSmall {
            genus: cover.g_source,
            min: 6,
        });
    }
    check_hypothesis(cover)?;
    Ok(2 * cover.g_source - 2 > cover.degree * n_involution)
}

/// Criterion 3: `2 g_X - 2 > d (2 g_Y + 2)`; needs `g_X >= 6`.
pub fn excludes_bielliptic(cover: &CoverDatum) -> Result<bool, ClassifyError> {
    if cover.g_source < 6 {
        return Err(ClassifyError::GenusTooSmall {
            genus: cover.g_source,
            min: 6,
        });
    }
    check_hypothesis(cover)?;
    Ok(2 * cover.g_source - 2 > cover.degree * (2 * cover.g_target + 2))
}

/// Imported classification of the curves `X_0(N^2)`: never hyperelliptic
/// once the genus passes 1, bielliptic exactly at `N = 8, 9`, and of genus
/// at least 2 exactly for `N >= 8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OggBarsRow {
    pub hyperelliptic: bool,
    pub bielliptic: bool,
    pub genus_ge_2: bool,
}

pub fn ogg_bars_x0_nsquared(n: u64) -> OggBarsRow {
    assert!(n >= 2);
    OggBarsRow {
        hyperelliptic: false,
        bielliptic: n == 8 || n == 9,
        genus_ge_2: n >= 8,
    }
}

/// Genera of the specific intermediate curves `X_0(M)` the arguments pass
/// through, imported as data.
pub fn known_x0_genus(m: u64) -> Option<u64> {
    match m {
        27 | 32 => Some(1),
        49 => Some(1),
        64 => Some(3),
        81 => Some(4),
        _ => None,
    }
}

/// A classification verdict plus the chain of facts that produced it; each
/// item names the fact it leans on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub reason: String,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n: u64,
    pub hyperelliptic: bool,
    pub bielliptic: bool,
    pub evidence: Vec<Evidence>,
}

/// Classify `X(N)` for `N >= 7`: hyperelliptic never, bielliptic exactly
/// at `N = 7` and `N = 8`.
pub fn classify_xn(n: u64) -> Result<Classification, ClassifyError> {
    if n < 7 {
        return Err(ClassifyError::LevelTooSmall(n));
    }
    let mut evidence = Vec::new();
    let (hyperelliptic, bielliptic) = match n {
        7 => {
            evidence.push(Evidence {
                reason: "X(7) is the genus-3 Klein quartic x^3 y + y^3 z + z^3 x = 0, \
                         which is bielliptic and not hyperelliptic"
                    .to_string(),
                anchor: "klein-quartic".to_string(),
            });
            (false, true)
        }
        8 => {
            evidence.push(Evidence {
                reason: "X(8) is the genus-5 Wiman curve, which is bielliptic and not \
                         hyperelliptic; the involution (x0, x1, x2, -x3, -x4) exhibits the \
                         unramified double cover of X_0(64)"
                    .to_string(),
                anchor: "wiman-curve".to_string(),
            });
            (false, true)
        }
        9 => {
            let deg = cover_degrees(9).expect("N >= 3").deg_pi0;
            let g81 = known_x0_genus(81).expect("tabulated");
            evidence.push(Evidence {
                reason: format!(
                    "the degree-{deg} map X(9) -> X_0(81) lands on a curve of genus {g81} >= 2 \
                     that is not hyperelliptic, and a non-constant map from a hyperelliptic \
                     curve onto a curve of genus >= 2 forces the target hyperelliptic"
                ),
                anchor: "hyperelliptic-descent".to_string(),
            });
            evidence.push(Evidence {
                reason: "X_0(81) is not hyperelliptic".to_string(),
                anchor: "ogg-bars-x0".to_string(),
            });
            let cover = CoverDatum {
                degree: 3,
                g_source: genus_xn(9) as u64,
                g_target: 1,
                galois: true,
            };
            let excluded = excludes_bielliptic(&cover)?;
            debug_assert!(excluded);
            evidence.push(Evidence {
                reason: format!(
                    "the degree-3 Galois cover rho : X(9) -> E' (z = y^3 on the plane model) \
                     satisfies 2*{}-2 = {} > {} = {}*(2*{}+2), so X(9) is not bielliptic",
                    cover.g_source,
                    2 * cover.g_source - 2,
                    cover.degree * (2 * cover.g_target + 2),
                    cover.degree,
                    cover.g_target,
                ),
                anchor: "x9-degree3-cover".to_string(),
            });
            evidence.push(Evidence {
                reason: "hyperelliptic and bielliptic involutions are unique and central, \
                         so they pass to quotients along Galois covers"
                    .to_string(),
                anchor: "involution-centrality".to_string(),
            });
            (false, false)
        }
        _ => {
            let ledger = cover_degrees(n).expect("N >= 3");
            let table = ogg_bars_x0_nsquared(n);
            debug_assert!(table.genus_ge_2 && !table.hyperelliptic && !table.bielliptic);
            evidence.push(Evidence {
                reason: format!(
                    "the degree-{} quotient map X({n}) -> X_0({}) lands on a curve of genus >= 2 \
                     that is neither hyperelliptic nor bielliptic",
                    ledger.deg_pi0,
                    n * n
                ),
                anchor: "ogg-bars-x0".to_string(),
            });
            evidence.push(Evidence {
                reason: "a hyperelliptic X(N) would force X_0(N^2) hyperelliptic".to_string(),
                anchor: "hyperelliptic-descent".to_string(),
            });
            evidence.push(Evidence {
                reason: "a bielliptic X(N) would force X_0(N^2) bielliptic or hyperelliptic"
                    .to_string(),
                anchor: "harris-silverman".to_string(),
            });
            (false, false)
        }
    };
    Ok(Classification {
        n,
        hyperelliptic,
        bielliptic,
        evidence,
    })
}
