//! Exact integer arithmetic on lattice shells `{k ∈ Z^d : ‖k‖² = E}`.
//!
//! Shells index the Laplace eigenspaces of the flat torus: the eigenvalue is
//! `E = λ²` and the eigenspace dimension is the representation number
//! `r_d(λ) = |shell|`. Everything in this module is integer-exact; square
//! roots are applied last, and norms/dot products are accumulated in `i128`
//! so no intermediate overflows for the guarded range `E ≤ 2^60`.

mod factor;
mod hyperplane;

pub use factor::{factorize, is_prime, omega};
pub use hyperplane::pair_count_in_e_range;

use crate::{Error, Result};
use std::collections::HashMap;

/// Largest admissible `E = ‖k‖²`; keeps `‖n‖² + 2⟨n,k⟩` within `i128`
/// comfortably and `E` within exact `u64`.
pub const MAX_NORM_SQ: u64 = 1 << 60;

const MIN_DIM: usize = 2;
const MAX_DIM: usize = 8;

pub(crate) fn check_dim(d: usize) -> Result<()> {
    if !(MIN_DIM..=MAX_DIM).contains(&d) {
        return Err(Error::DimensionOutOfRange(d));
    }
    Ok(())
}

fn check_norm_sq(e: u64) -> Result<()> {
    if e > MAX_NORM_SQ {
        return Err(Error::NormSquareTooLarge(e));
    }
    Ok(())
}

/// A point of `Z^d`, `2 ≤ d ≤ 8`.
///
/// Ordering is lexicographic on the coordinates, which fixes the canonical
/// order of shell enumerations and of every sweep that iterates points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_dim(coords.len())?;
        let p = LatticePoint { coords };
        check_norm_sq(p.norm_sq())?;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `‖p‖²`, exact.
    pub fn norm_sq(&self) -> u64 {
        norm_sq_i128(&self.coords) as u64
    }

    /// `‖p‖` in f64; exact for the guarded range only after the final sqrt.
    pub fn norm(&self) -> f64 {
        (self.norm_sq() as f64).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `⟨self, other⟩`, exact.
    pub fn dot(&self, other: &LatticePoint) -> i128 {
        dot_i128(&self.coords, &other.coords)
    }

    pub fn negated(&self) -> LatticePoint {
        LatticePoint {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

pub(crate) fn norm_sq_i128(v: &[i64]) -> i128 {
    v.iter().map(|&c| (c as i128) * (c as i128)).sum()
}

pub(crate) fn dot_i128(a: &[i64], b: &[i64]) -> i128 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x as i128) * (y as i128))
        .sum()
}

/// The primitive lattice point `n̂ = n / gcd(n)` generating `n`.
pub fn primitive(n: &LatticePoint) -> Result<LatticePoint> {
    if n.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = n
        .coords
        .iter()
        .fold(0u64, |acc, &c| gcd(acc, c.unsigned_abs()));
    Ok(LatticePoint {
        coords: n.coords.iter().map(|&c| c / g as i64).collect(),
    })
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// All of `{k ∈ Z^d : ‖k‖² = E}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeShell {
    dim: usize,
    norm_sq: u64,
    points: Vec<LatticePoint>,
}

impl LatticeShell {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The eigenvalue `E = λ²`.
    pub fn norm_sq(&self) -> u64 {
        self.norm_sq
    }

    /// `λ = √E`.
    pub fn lambda(&self) -> f64 {
        (self.norm_sq as f64).sqrt()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// `r_d(λ)`, the eigenspace dimension.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of `p` in the canonical ordering.
    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.index_of(p).is_some()
    }
}

/// Enumerate the shell `{k ∈ Z^d : ‖k‖² = E}`.
///
/// Recursive descent over coordinates with residual-norm pruning; the last two
/// coordinates are resolved by a perfect-square scan. Output is lexicographic.
pub fn enumerate_shell(d: usize, e: u64) -> Result<LatticeShell> {
    check_dim(d)?;
    check_norm_sq(e)?;
    let mut points = Vec::new();
    let mut prefix = Vec::with_capacity(d);
    descend(d, e, &mut prefix, &mut points);
    Ok(LatticeShell {
        dim: d,
        norm_sq: e,
        points,
    })
}

fn descend(d: usize, residual: u64, prefix: &mut Vec<i64>, out: &mut Vec<LatticePoint>) {
    let remaining = d - prefix.len();
    if remaining == 2 {
        let r = residual.isqrt();
        for a in -(r as i64)..=(r as i64) {
            let rem = residual - (a * a) as u64;
            let b = rem.isqrt();
            if b * b == rem {
                if b == 0 {
                    out.push(mk_point(prefix, &[a, 0]));
                } else {
                    out.push(mk_point(prefix, &[a, -(b as i64)]));
                    out.push(mk_point(prefix, &[a, b as i64]));
                }
            }
        }
        return;
    }
    let r = residual.isqrt();
    for c in -(r as i64)..=(r as i64) {
        prefix.push(c);
        descend(d, residual - (c * c) as u64, prefix, out);
        prefix.pop();
    }
}

fn mk_point(prefix: &[i64], tail: &[i64]) -> LatticePoint {
    let mut coords = Vec::with_capacity(prefix.len() + tail.len());
    coords.extend_from_slice(prefix);
    coords.extend_from_slice(tail);
    LatticePoint { coords }
}

/// `|{k ∈ shell : ‖k + n‖² = E}|` via the linear condition
/// `‖n‖² + 2⟨n,k⟩ = 0` (expanding `‖k+n‖² = ‖k‖²`).
pub fn pair_count(shell: &LatticeShell, n: &LatticePoint) -> Result<usize> {
    if n.dim() != shell.dim {
        return Err(Error::DimensionMismatch {
            left: n.dim(),
            right: shell.dim,
        });
    }
    if n.is_zero() {
        return Ok(shell.len());
    }
    let nsq = norm_sq_i128(n.coords()) ;
    let count = shell
        .points
        .iter()
        .filter(|k| nsq + 2 * dot_i128(n.coords(), k.coords()) == 0)
        .count();
    debug_assert_eq!(count, pair_count_direct(shell, n).unwrap());
    Ok(count)
}

/// Same count by direct filtering on `‖k + n‖² = E`; the independent route
/// used to validate [`pair_count`].
pub fn pair_count_direct(shell: &LatticeShell, n: &LatticePoint) -> Result<usize> {
    if n.dim() != shell.dim {
        return Err(Error::DimensionMismatch {
            left: n.dim(),
            right: shell.dim,
        });
    }
    let e = shell.norm_sq as i128;
    Ok(shell
        .points
        .iter()
        .filter(|k| {
            let sum: i128 = k
                .coords()
                .iter()
                .zip(n.coords())
                .map(|(&a, &b)| {
                    let s = a as i128 + b as i128;
                    s * s
                })
                .sum();
            sum == e
        })
        .count())
}

/// Multiplicity of every nonzero difference `l − k` over ordered shell pairs.
///
/// `pair_count(shell, n)` equals the multiplicity of `n` here (and is zero for
/// any `n` outside the map), so the map is an exhaustive tabulation of pair
/// counts over all of `Z^d` at once.
pub fn difference_multiplicities(shell: &LatticeShell) -> HashMap<Vec<i64>, usize> {
    let mut map = HashMap::new();
    for l in &shell.points {
        for k in &shell.points {
            if l == k {
                continue;
            }
            *map.entry(l.sub(k).coords).or_insert(0) += 1;
        }
    }
    map
}

/// `|{k : c ≤ ‖k‖ ≤ λ and ‖k‖² = ‖n+k‖²}|`, both interval ends inclusive.
///
/// The condition confines `k` to the affine hyperplane `⟨n,k⟩ = −‖n‖²/2`;
/// solutions are enumerated output-sensitively on that hyperplane rather than
/// by scanning a box.
pub fn interval_pair_count(d: usize, n: &LatticePoint, c: f64, lambda: f64) -> Result<u64> {
    check_dim(d)?;
    if n.dim() != d {
        return Err(Error::DimensionMismatch {
            left: n.dim(),
            right: d,
        });
    }
    if n.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !(c >= 0.0 && lambda >= c) {
        return Err(Error::BadInput(format!(
            "need 0 ≤ c ≤ λ, got c = {c}, λ = {lambda}"
        )));
    }
    let e_hi = floor_snapped(lambda * lambda)?;
    let e_lo = ceil_snapped(c * c)?;
    check_norm_sq(e_hi)?;
    if e_hi < e_lo {
        return Ok(0);
    }
    hyperplane::hyperplane_annulus_count(n.coords(), e_lo, false, e_hi)
}

/// Number of lattice points with `‖k‖² ≤ e` (the closed ball), exact.
pub fn ball_count(d: usize, e: u64) -> Result<u64> {
    check_dim(d)?;
    check_norm_sq(e)?;
    Ok(ball_count_rec(d, e))
}

fn ball_count_rec(d: usize, e: u64) -> u64 {
    let r = e.isqrt();
    if d == 1 {
        return 2 * r + 1;
    }
    let mut total = ball_count_rec(d - 1, e); // k_1 = 0 slice
    for c in 1..=r {
        total += 2 * ball_count_rec(d - 1, e - c * c);
    }
    total
}

/// Is `E` representable, i.e. `r_d(√E) > 0`?
pub fn is_representable(d: usize, e: u64) -> Result<bool> {
    check_dim(d)?;
    check_norm_sq(e)?;
    Ok(match d {
        2 => is_sum_two_squares(e),
        3 => !is_legendre_excluded(e),
        // Lagrange: every non-negative integer is a sum of four squares.
        _ => true,
    })
}

/// Sum-of-two-squares test via the prime classification: every prime
/// `p ≡ 3 (mod 4)` must occur to an even power.
fn is_sum_two_squares(e: u64) -> bool {
    if e == 0 {
        return true;
    }
    factorize(e)
        .iter()
        .all(|&(p, m)| p % 4 != 3 || m % 2 == 0)
}

/// Legendre's three-square theorem: `E` is NOT a sum of three squares iff
/// `E = 4^a (8b + 7)`.
fn is_legendre_excluded(mut e: u64) -> bool {
    while e % 4 == 0 {
        e /= 4;
    }
    e % 8 == 7
}

/// The representable eigenvalues `E ≤ e_max` for dimension `d`, ascending.
pub fn spectrum(d: usize, e_max: u64) -> Result<Vec<u64>> {
    check_dim(d)?;
    check_norm_sq(e_max)?;
    if d == 2 {
        return Ok(two_square_sieve(e_max));
    }
    Ok((0..=e_max)
        .filter(|&e| match d {
            3 => !is_legendre_excluded(e),
            _ => true,
        })
        .collect())
}

fn two_square_sieve(n: u64) -> Vec<u64> {
    let mut hit = vec![false; n as usize + 1];
    let r = n.isqrt();
    for a in 0..=r {
        let aa = a * a;
        if aa > n {
            break;
        }
        let mut b = a;
        loop {
            let s = aa + b * b;
            if s > n {
                break;
            }
            hit[s as usize] = true;
            b += 1;
        }
    }
    hit.iter()
        .enumerate()
        .filter_map(|(e, &h)| h.then_some(e as u64))
        .collect()
}

/// The integers `E ≤ N` with `r₂(√E) > 0`, plus density metadata.
#[derive(Clone, Debug)]
pub struct TwoSquareSpectrum {
    pub limit: u64,
    pub values: Vec<u64>,
}

impl TwoSquareSpectrum {
    /// Count relative to the Landau–Ramanujan scale `N/√(log N)`.
    pub fn density_ratio(&self) -> f64 {
        let n = self.limit as f64;
        if n < 2.0 {
            return self.values.len() as f64;
        }
        self.values.len() as f64 / (n / n.ln().sqrt())
    }
}

/// Exact list of sums of two squares up to `N` (sieve over `a² + b²`).
pub fn sum_two_squares_spectrum(n: u64) -> Result<TwoSquareSpectrum> {
    check_norm_sq(n)?;
    Ok(TwoSquareSpectrum {
        limit: n,
        values: two_square_sieve(n),
    })
}

/// Squared minimum pairwise distance over the shell, exact.
pub fn min_separation_sq(shell: &LatticeShell) -> Result<u64> {
    if shell.len() < 2 {
        return Err(Error::TooFewPoints(shell.len(), 2));
    }
    let mut best = u64::MAX;
    for (i, p) in shell.points.iter().enumerate() {
        for q in &shell.points[i + 1..] {
            let d2 = norm_sq_i128(&p.sub(q).coords) as u64;
            if d2 < best {
                best = d2;
            }
        }
    }
    Ok(best)
}

/// Minimum pairwise Euclidean distance over the shell; sqrt applied last.
pub fn min_separation(shell: &LatticeShell) -> Result<f64> {
    Ok((min_separation_sq(shell)? as f64).sqrt())
}

/// Separation status of one eigenvalue at exponent δ.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SeparationRecord {
    pub norm_sq: u64,
    pub r2: usize,
    pub min_sep: f64,
    /// `E^{(1−δ)/2}`.
    pub threshold: f64,
    pub is_separated: bool,
}

/// Survey of [`SeparationRecord`]s over the two-square spectrum up to `N`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SeparationSurvey {
    pub delta: f64,
    pub records: Vec<SeparationRecord>,
    pub non_separated: usize,
    /// `|{E not separated}| / N^{1−δ/3}` — diagnostic only; no constant is
    /// asserted.
    pub exceptional_ratio: f64,
}

/// Classify every representable `1 ≤ E ≤ N` by whether its shell points are
/// separated beyond `E^{(1−δ)/2}`.
pub fn separation_survey(n: u64, delta: f64) -> Result<SeparationSurvey> {
    if n < 1 {
        return Err(Error::BadInput("need N ≥ 1".into()));
    }
    if !(0.0 < delta && delta < 1.0) {
        return Err(Error::BadInput(format!("need δ ∈ (0,1), got {delta}")));
    }
    let spectrum = sum_two_squares_spectrum(n)?;
    let mut records = Vec::new();
    for &e in spectrum.values.iter().filter(|&&e| e >= 1) {
        let shell = enumerate_shell(2, e)?;
        let sep_sq = min_separation_sq(&shell)? as f64;
        let threshold = (e as f64).powf((1.0 - delta) / 2.0);
        records.push(SeparationRecord {
            norm_sq: e,
            r2: shell.len(),
            min_sep: sep_sq.sqrt(),
            // Compare on squares: both sides exact up to one rounding each.
            is_separated: sep_sq > (e as f64).powf(1.0 - delta),
            threshold,
        });
    }
    let non_separated = records.iter().filter(|r| !r.is_separated).count();
    Ok(SeparationSurvey {
        delta,
        non_separated,
        exceptional_ratio: non_separated as f64 / (n as f64).powf(1.0 - delta / 3.0),
        records,
    })
}

/// One hit of the Iwaniec-style search: `n² + 1` has at most two prime
/// factors counted with multiplicity.
#[derive(Clone, Debug, serde::Serialize)]
pub struct IwaniecEntry {
    pub n: u64,
    pub e: u64,
    pub factor_count: u32,
    pub r2: usize,
}

/// All `n ≤ limit` such that `n² + 1` is prime or a product of two primes.
///
/// These give d=2 shells of bounded size (8–16 points for large `n`), the
/// eigenvalue sequence along which the eigenspace variance stays bounded away
/// from zero.
pub fn iwaniec_search(limit: u64) -> Result<Vec<IwaniecEntry>> {
    if limit < 2 {
        return Err(Error::BadInput("need limit ≥ 2".into()));
    }
    let mut out = Vec::new();
    for n in 1..=limit {
        let e = n * n + 1;
        check_norm_sq(e)?;
        let fc = omega(e);
        if fc <= 2 {
            out.push(IwaniecEntry {
                n,
                e,
                factor_count: fc,
                r2: enumerate_shell(2, e)?.len(),
            });
        }
    }
    Ok(out)
}

/// Largest integer `≤ x`, with values within `EIGENVALUE_SNAP` (relative) of
/// an integer snapped to it first. Keeps `λ = √E` round-tripping to `E`.
pub fn floor_snapped(x: f64) -> Result<u64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::BadInput(format!("need a finite value ≥ 0, got {x}")));
    }
    let nearest = x.round();
    let scale = x.abs().max(1.0);
    if (x - nearest).abs() <= crate::tol::EIGENVALUE_SNAP * scale {
        return Ok(nearest as u64);
    }
    Ok(x.floor() as u64)
}

/// Smallest integer `≥ x`, with the same snapping as [`floor_snapped`].
pub fn ceil_snapped(x: f64) -> Result<u64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::BadInput(format!("need a finite value ≥ 0, got {x}")));
    }
    let nearest = x.round();
    let scale = x.abs().max(1.0);
    if (x - nearest).abs() <= crate::tol::EIGENVALUE_SNAP * scale {
        return Ok(nearest as u64);
    }
    Ok(x.ceil() as u64)
}

/// `λ²` snapped to the nearest integer, erroring if no integer is within the
/// snap tolerance. Used wherever a real λ names an eigenvalue.
pub fn eigenvalue_from_lambda(lambda: f64) -> Result<u64> {
    let sq = lambda * lambda;
    let nearest = sq.round();
    let scale = sq.abs().max(1.0);
    if (sq - nearest).abs() > crate::tol::EIGENVALUE_SNAP * scale {
        return Err(Error::NotAnInteger(sq, crate::tol::EIGENVALUE_SNAP * scale));
    }
    Ok(nearest as u64)
}

#[cfg(test)]
mod tests;
