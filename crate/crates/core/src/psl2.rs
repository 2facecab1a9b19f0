//! Explicit computation in `PSL_2(Z/NZ) = SL_2(Z/NZ)/{±1}`.
//!
//! The group is the Galois group of the cover `X(N) -> X(1)`. This module
//! provides its order, full enumeration for small moduli, element orders,
//! the images and indices of the named congruence subgroups, an
//! enumeration-backed simplicity test, the symmetric-group obstruction used
//! to kill coset representations, and a randomized regression check for the
//! conjugation inclusions relating `Gamma(N)` to `Gamma_1(N^2)` and
//! `Gamma_0(N^2)`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{self, factorize, gcd, Residue};

/// Full materialization of the group is capped at this modulus; the order
/// at 40 is about 2.3 * 10^4 elements, which is the point of diminishing
/// returns for exhaustive work.
pub const ENUMERATION_LIMIT: u64 = 40;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Psl2Error {
    #[error("modulus {0} exceeds the enumeration limit {ENUMERATION_LIMIT}")]
    ModulusTooLarge(u64),
    #[error("matrix has determinant {det} != 1 (mod {modulus})")]
    DeterminantNotOne { det: u64, modulus: u64 },
    #[error("failed to construct a unimodular sample matrix")]
    SampleConstructionFailure,
}

/// A two-by-two matrix over `Z/NZ` with determinant 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mat2 {
    pub a: Residue,
    pub b: Residue,
    pub c: Residue,
    pub d: Residue,
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64, modulus: u64) -> Result<Self, Psl2Error> {
        let m = Mat2 {
            a: Residue::new(a, modulus),
            b: Residue::new(b, modulus),
            c: Residue::new(c, modulus),
            d: Residue::new(d, modulus),
        };
        let det = m.det();
        if !det.sub(Residue::one(modulus)).is_zero() {
            return Err(Psl2Error::DeterminantNotOne {
                det: det.value(),
                modulus,
            });
        }
        Ok(m)
    }

    fn from_residues_unchecked(a: Residue, b: Residue, c: Residue, d: Residue) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity(modulus: u64) -> Self {
        Mat2 {
            a: Residue::one(modulus),
            b: Residue::zero(modulus),
            c: Residue::zero(modulus),
            d: Residue::one(modulus),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.a.modulus()
    }

    pub fn det(&self) -> Residue {
        self.a.mul(self.d).sub(self.b.mul(self.c))
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a.mul(other.a).add(self.b.mul(other.c)),
            b: self.a.mul(other.b).add(self.b.mul(other.d)),
            c: self.c.mul(other.a).add(self.d.mul(other.c)),
            d: self.c.mul(other.b).add(self.d.mul(other.d)),
        }
    }

    /// Inverse of a determinant-1 matrix: swap the diagonal, negate the rest.
    pub fn inverse(&self) -> Mat2 {
        Mat2 {
            a: self.d,
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.a,
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    fn tuple(&self) -> (u64, u64, u64, u64) {
        (
            self.a.value(),
            self.b.value(),
            self.c.value(),
            self.d.value(),
        )
    }
}

/// An element of `PSL_2(Z/NZ)`: the representative of `{M, -M}` with the
/// lexicographically smaller coordinate tuple, so equality and hashing are
/// well defined.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Psl2Element {
    rep: Mat2,
}

impl Psl2Element {
    pub fn new(m: Mat2) -> Self {
        let n = m.neg();
        Psl2Element {
            rep: if m.tuple() <= n.tuple() { m } else { n },
        }
    }

    pub fn identity(modulus: u64) -> Self {
        Psl2Element::new(Mat2::identity(modulus))
    }

    pub fn rep(&self) -> &Mat2 {
        &self.rep
    }

    pub fn modulus(&self) -> u64 {
        self.rep.modulus()
    }

    pub fn mul(&self, other: &Psl2Element) -> Psl2Element {
        Psl2Element::new(self.rep.mul(&other.rep))
    }

    pub fn inverse(&self) -> Psl2Element {
        Psl2Element::new(self.rep.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Psl2Element::identity(self.modulus())
    }
}

/// `|PSL_2(Z/NZ)| = N^3/2 * prod_{p|N} (1 - p^-2)` for `N > 2`, with the
/// degenerate values 1 and 6 at `N = 1, 2` (where `-1 = 1`).
pub fn psl2_order(n: u64) -> u128 {
    assert!(n >= 1, "psl2_order requires n >= 1");
    if n == 1 {
        return 1;
    }
    if n == 2 {
        return 6;
    }
    let mut order = (n as u128).pow(3);
    for p in factorize(n).primes() {
        let p2 = (p as u128) * (p as u128);
        order = order / p2 * (p2 - 1);
    }
    order / 2
}

/// Materialize the whole group by scanning `(a, b, c, d)` over `[0, N)^4`,
/// keeping determinant-1 tuples and folding out the sign.
pub fn enumerate_psl2(n: u64) -> Result<BTreeSet<Psl2Element>, Psl2Error> {
    if n > ENUMERATION_LIMIT {
        return Err(Psl2Error::ModulusTooLarge(n));
    }
    let mut out = BTreeSet::new();
    for a in 0..n.max(1) {
        for b in 0..n.max(1) {
            for c in 0..n.max(1) {
                for d in 0..n.max(1) {
                    let det = (a as u128 * d as u128 + (n as u128) * (n as u128)
                        - b as u128 * c as u128)
                        % n.max(1) as u128;
                    if det == 1 % n.max(1) as u128 {
                        let m = Mat2::from_residues_unchecked(
                            Residue::from_u64(a, n),
                            Residue::from_u64(b, n),
                            Residue::from_u64(c, n),
                            Residue::from_u64(d, n),
                        );
                        out.insert(Psl2Element::new(m));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Least `k >= 1` with `g^k = 1`.
pub fn element_order(g: &Psl2Element) -> u64 {
    let id = Psl2Element::identity(g.modulus());
    let mut power = *g;
    let mut k = 1;
    while power != id {
        power = power.mul(g);
        k += 1;
    }
    k
}

/// The congruence-subgroup images inside `PSL_2(Z/NZ)` that the cover
/// bookkeeping needs. `Gamma0Upper` is the transpose shape of `Gamma0`
/// (lower-left entry free, upper-right entry zero).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubgroupKind {
    Gamma1,
    Gamma0Upper,
    Gamma0,
    Cartan,
    Full,
}

/// A materialized subgroup of `PSL_2(Z/NZ)`.
#[derive(Clone, Debug)]
pub struct SubgroupImage {
    pub kind: SubgroupKind,
    pub modulus: u64,
    pub elements: BTreeSet<Psl2Element>,
}

impl SubgroupImage {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Closure under product and inverse. Quadratic, only used on the small
    /// materialized groups.
    pub fn verify_closure(&self) -> bool {
        self.elements.iter().all(|g| {
            self.elements.contains(&g.inverse())
                && self
                    .elements
                    .iter()
                    .all(|h| self.elements.contains(&g.mul(h)))
        })
    }
}

/// Materialize the image of the named subgroup shape.
pub fn subgroup_image(kind: SubgroupKind, n: u64) -> Result<SubgroupImage, Psl2Error> {
    if n > ENUMERATION_LIMIT {
        return Err(Psl2Error::ModulusTooLarge(n));
    }
    let mut elements = BTreeSet::new();
    let insert = |set: &mut BTreeSet<Psl2Element>, a: u64, b: u64, c: u64, d: u64| {
        set.insert(Psl2Element::new(Mat2::from_residues_unchecked(
            Residue::from_u64(a, n),
            Residue::from_u64(b, n),
            Residue::from_u64(c, n),
            Residue::from_u64(d, n),
        )));
    };
    match kind {
        SubgroupKind::Gamma1 => {
            for b in 0..n {
                insert(&mut elements, 1, b, 0, 1);
            }
            if n == 1 {
                insert(&mut elements, 0, 0, 0, 0);
            }
        }
        SubgroupKind::Gamma0 => {
            for u in units(n) {
                let uinv = Residue::from_u64(u, n).inverse().expect("unit").value();
                for b in 0..n {
                    insert(&mut elements, u, b, 0, uinv);
                }
            }
        }
        SubgroupKind::Gamma0Upper => {
            for u in units(n) {
                let uinv = Residue::from_u64(u, n).inverse().expect("unit").value();
                for c in 0..n {
                    insert(&mut elements, u, 0, c, uinv);
                }
            }
        }
        SubgroupKind::Cartan => {
            for u in units(n) {
                let uinv = Residue::from_u64(u, n).inverse().expect("unit").value();
                insert(&mut elements, u, 0, 0, uinv);
            }
        }
        SubgroupKind::Full => {
            elements = enumerate_psl2(n)?;
        }
    }
    let image = SubgroupImage {
        kind,
        modulus: n,
        elements,
    };
    debug_assert!(image.verify_closure());
    Ok(image)
}

fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

/// Order of the named subgroup image, by closed form (valid for every `N`,
/// not just the materializable ones).
pub fn subgroup_order(kind: SubgroupKind, n: u64) -> u128 {
    let phi = arith::euler_phi(n) as u128;
    match kind {
        SubgroupKind::Gamma1 => n as u128,
        SubgroupKind::Gamma0 | SubgroupKind::Gamma0Upper => {
            if n <= 2 {
                n as u128
            } else {
                n as u128 * phi / 2
            }
        }
        SubgroupKind::Cartan => {
            if n <= 2 {
                1
            } else {
                phi / 2
            }
        }
        SubgroupKind::Full => psl2_order(n),
    }
}

/// Index of the image subgroup in `PSL_2(Z/NZ)`, i.e. the degree of the
/// cover `X(N) -> X_H`.
pub fn congruence_index(kind: SubgroupKind, n: u64) -> u128 {
    assert!(n >= 1);
    let order = psl2_order(n);
    let sub = subgroup_order(kind, n);
    assert!(order.is_multiple_of(sub), "Lagrange violated: {order} % {sub}");
    order / sub
}

/// Enumeration-backed simplicity test: for one representative of every
/// nontrivial conjugacy class, generate its normal closure and check the
/// closure is the whole group. Meaningful for the primes `5 <= p <= 13`;
/// composite moduli are accepted and simply report `false`.
pub fn is_simple(n: u64) -> Result<bool, Psl2Error> {
    if n > 13 {
        return Err(Psl2Error::ModulusTooLarge(n));
    }
    let group: Vec<Psl2Element> = enumerate_psl2(n)?.into_iter().collect();
    let order = group.len();
    if order == 1 {
        return Ok(false);
    }
    let mut assigned: HashSet<Psl2Element> = HashSet::new();
    let id = Psl2Element::identity(n);
    assigned.insert(id);
    for g in &group {
        if assigned.contains(g) {
            continue;
        }
        // conjugacy class of g
        let class: HashSet<Psl2Element> = group
            .iter()
            .map(|h| h.mul(g).mul(&h.inverse()))
            .collect();
        for e in &class {
            assigned.insert(*e);
        }
        if generated_subgroup_order(&class, n) != order {
            return Ok(false);
        }
    }
    Ok(true)
}

fn generated_subgroup_order(generators: &HashSet<Psl2Element>, n: u64) -> usize {
    let mut seen: HashSet<Psl2Element> = HashSet::new();
    let mut queue: VecDeque<Psl2Element> = VecDeque::new();
    let id = Psl2Element::identity(n);
    seen.insert(id);
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = e.mul(g);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

/// Smallest `m` such that `S_m` contains an element of order `k`: the sum
/// of the prime-power parts of `k` (one cycle per prime power), with the
/// convention that the identity already lives in `S_1`.
pub fn min_symmetric_degree(k: u64) -> u64 {
    assert!(k >= 1);
    if k == 1 {
        return 1;
    }
    factorize(k).pairs().iter().map(|&(p, a)| p.pow(a)).sum()
}

/// Does the coset-representation argument already force every homomorphism
/// `PSL_2(Z/NZ) -> S_m` to be trivial?
///
/// Decided cases: `N = p` prime at least 7 (simplicity plus the absence of
/// order-`p` elements in `S_m`); `N = p^e` with `p >= 7` (the kernel of
/// reduction to level `p` has order `p^{3(e-1)}`, all of its elements have
/// `p`-power order, so it dies in `S_m` and the map factors through
/// `PSL_2(p)`); and composite `N` coprime to 30 (the group splits as a
/// product of the previous cases). Returns `false` when none of these
/// apply — the caller then falls back to the ramification argument.
pub fn beta_obstruction(n: u64, m: u64) -> bool {
    assert!(n >= 7 && m >= 1);
    let f = factorize(n);
    let single_factor_dies = |p: u64| p >= 7 && min_symmetric_degree(p) > m;
    match f.pairs() {
        [(p, _)] => single_factor_dies(*p),
        _ if gcd(n, 30) == 1 => f.primes().all(single_factor_dies),
        _ => false,
    }
}

/// Integer 2x2 matrices, used only by the conjugation regression check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct IMat2 {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
}

impl IMat2 {
    const IDENTITY: IMat2 = IMat2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    fn mul(&self, o: &IMat2) -> IMat2 {
        IMat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    fn det(&self) -> i128 {
        self.a * self.d - self.b * self.c
    }

    fn upper(b: i128) -> IMat2 {
        IMat2 {
            a: 1,
            b,
            c: 0,
            d: 1,
        }
    }

    fn lower(c: i128) -> IMat2 {
        IMat2 {
            a: 1,
            b: 0,
            c,
            d: 1,
        }
    }

    fn congruent_to_identity(&self, modulus: i128) -> bool {
        (self.a - 1) % modulus == 0
            && self.b % modulus == 0
            && self.c % modulus == 0
            && (self.d - 1) % modulus == 0
    }
}

/// Sample-based check of the inclusions
/// `Gamma_1(N^2) <= U^-1 Gamma(N) U <= Gamma_0(N^2)` where
/// `U = diag(1, 1/N)` acts on integer matrices by
/// `[[a, b], [c, d]] -> [[a, bN], [c/N, d]]`.
///
/// The algebra forces both inclusions; the check is a regression guard for
/// the cover constructions built on them. Samples are products of random
/// elementary matrices of the right congruence shape, so their determinant
/// is 1 by construction; a violated determinant signals a bug and is
/// reported as an error rather than a failed check.
pub fn conjugation_inclusion_check(n: u64, sample_count: u32) -> Result<bool, Psl2Error> {
    assert!(n >= 2);
    let n = n as i128;
    let n2 = n * n;
    let mut rng = ChaCha8Rng::seed_from_u64(0x58_4e_00 ^ n as u64);
    for sample in 0..sample_count {
        // gamma in Gamma_1(N^2): a = d = 1 and c = 0 (mod N^2), b free
        let gamma1 = random_product(&mut rng, 1, n2, sample == 0);
        if gamma1.det() != 1 {
            return Err(Psl2Error::SampleConstructionFailure);
        }
        if !((gamma1.a - 1) % n2 == 0 && (gamma1.d - 1) % n2 == 0 && gamma1.c % n2 == 0) {
            return Err(Psl2Error::SampleConstructionFailure);
        }
        // U gamma U^-1 = [[a, bN], [c/N, d]] must be congruent to Id mod N
        debug_assert!(gamma1.c % n == 0);
        let conj = IMat2 {
            a: gamma1.a,
            b: gamma1.b * n,
            c: gamma1.c / n,
            d: gamma1.d,
        };
        if conj.det() != 1 || !conj.congruent_to_identity(n) {
            return Ok(false);
        }

        // gamma in Gamma(N): congruent to Id mod N
        let gamma = random_product(&mut rng, n, n, sample == 0);
        if gamma.det() != 1 || !gamma.congruent_to_identity(n) {
            return Err(Psl2Error::SampleConstructionFailure);
        }
        // U^-1 gamma U = [[a, b/N], [cN, d]] must land in Gamma_0(N^2)
        debug_assert!(gamma.b % n == 0);
        let conj = IMat2 {
            a: gamma.a,
            b: gamma.b / n,
            c: gamma.c * n,
            d: gamma.d,
        };
        if conj.det() != 1 || conj.c % n2 != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product of up to six elementary matrices `[[1, b*bs], [0, 1]]` and
/// `[[1, 0], [c*cs, 1]]`. The first sample per run is the identity so the
/// trivial case is always exercised.
fn random_product<R: Rng>(rng: &mut R, upper_scale: i128, lower_scale: i128, identity: bool) -> IMat2 {
    let mut m = IMat2::IDENTITY;
    if identity {
        return m;
    }
    let factors = rng.gen_range(1..=6);
    for _ in 0..factors {
        if rng.gen_bool(0.5) {
            m = m.mul(&IMat2::upper(rng.gen_range(-3..=3) * upper_scale));
        } else {
            m = m.mul(&IMat2::lower(rng.gen_range(-3..=3) * lower_scale));
        }
    }
    m
}
