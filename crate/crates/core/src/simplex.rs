//! h* and local h* of `Δ_(1,q)` from the heights `ω(b)`, and a lattice-point
//! oracle that recovers the same tallies from the vertex matrix alone.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::par;
use crate::poly::IntPolynomial;

/// Largest normalized volume the `b`-scans accept through [`check_scan`].
pub const SCAN_LIMIT: u64 = 1 << 30;

/// The weights `q = (q_1, …, q_n)` of `Δ_(1,q)`. Any order is accepted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    q: Vec<BigUint>,
}

impl WeightVector {
    pub fn new(q: Vec<BigUint>) -> Result<Self> {
        if q.is_empty() || q.iter().any(Zero::is_zero) {
            return Err(Error::InvalidWeights);
        }
        Ok(WeightVector { q })
    }

    pub fn from_u64s(q: &[u64]) -> Result<Self> {
        Self::new(q.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.q
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.q.len()
    }

    /// `Q = 1 + Σ q_i`.
    pub fn normalized_volume(&self) -> BigUint {
        self.q.iter().sum::<BigUint>() + 1u32
    }

    /// Copy with the weights in weakly increasing order.
    pub fn sorted(&self) -> WeightVector {
        let mut q = self.q.clone();
        q.sort();
        WeightVector { q }
    }

    fn small(&self) -> Option<SmallWeights> {
        let volume = self.normalized_volume().to_u64()?;
        let q = self
            .q
            .iter()
            .map(|x| x.to_u64().map(u128::from))
            .collect::<Option<Vec<_>>>()?;
        Some(SmallWeights {
            q,
            volume: volume as u128,
        })
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVector({self})")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.q.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Weights that fit machine words; `q_i · b < 2^128` for every `b < Q`.
struct SmallWeights {
    q: Vec<u128>,
    volume: u128,
}

impl SmallWeights {
    fn omega(&self, b: u128) -> usize {
        let floors: u128 = self.q.iter().map(|&qi| qi * b / self.volume).sum();
        (b - floors) as usize
    }

    fn in_open(&self, b: u128) -> bool {
        b != 0
            && self
                .q
                .iter()
                .all(|&qi| !(qi * b).is_multiple_of(self.volume))
    }
}

/// A lattice point of the half-open parallelepiped, indexed by `b` with
/// `λ_0 = b / Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelepipedPoint {
    pub b: BigUint,
    pub height: usize,
    pub in_open: bool,
}

/// Rejects normalized volumes too large to scan.
pub fn check_scan(q: &WeightVector) -> Result<()> {
    let volume = q.normalized_volume();
    if volume > BigUint::from(SCAN_LIMIT) {
        return Err(Error::guard(format!(
            "normalized volume {volume} exceeds scan limit {SCAN_LIMIT}"
        )));
    }
    Ok(())
}

pub fn normalized_volume(q: &WeightVector) -> BigUint {
    q.normalized_volume()
}

/// `ω(b) = b − Σ ⌊q_i b / Q⌋` for `0 ≤ b < Q`.
pub fn omega(q: &WeightVector, b: &BigUint) -> Result<usize> {
    let volume = q.normalized_volume();
    if b >= &volume {
        return Err(Error::out_of_range("b", b, format!("0..{volume}")));
    }
    Ok(omega_unchecked(q, &volume, b))
}

fn omega_unchecked(q: &WeightVector, volume: &BigUint, b: &BigUint) -> usize {
    let floors: BigUint = q.q.iter().map(|qi| (qi * b) / volume).sum();
    (b - floors)
        .to_usize()
        .expect("height is bounded by the dimension")
}

fn in_open_unchecked(q: &WeightVector, volume: &BigUint, b: &BigUint) -> bool {
    !b.is_zero() && q.q.iter().all(|qi| !(qi * b).is_multiple_of(volume))
}

/// `T_q`: all `b ∈ [Q−1]` with `Q ∤ q_i b` for every `i`, ascending.
pub fn t_set(q: &WeightVector) -> Vec<BigUint> {
    if let Some(sw) = q.small() {
        let hi = sw.volume as u64;
        // rayon collects in iteration order
        let found: Vec<u64> = (1..hi)
            .into_par_iter()
            .filter(|&b| sw.in_open(b as u128))
            .collect();
        return found.into_iter().map(BigUint::from).collect();
    }
    let volume = q.normalized_volume();
    let mut out = Vec::new();
    let mut b = BigUint::one();
    while b < volume {
        if in_open_unchecked(q, &volume, &b) {
            out.push(b.clone());
        }
        b += 1u32;
    }
    out
}

/// Histogram of heights over `b ∈ [0, Q)`, optionally restricted to `T_q`.
fn height_tally(q: &WeightVector, open_only: bool) -> Vec<u64> {
    let buckets = q.dim() + 1;
    if let Some(sw) = q.small() {
        return par::tally(0, sw.volume as u64, buckets, |b| {
            let b = b as u128;
            (!open_only || sw.in_open(b)).then(|| sw.omega(b))
        });
    }
    let volume = q.normalized_volume();
    let mut counts = vec![0u64; buckets];
    let mut b = BigUint::zero();
    while b < volume {
        if !open_only || in_open_unchecked(q, &volume, &b) {
            counts[omega_unchecked(q, &volume, &b)] += 1;
        }
        b += 1u32;
    }
    counts
}

/// `ℓ*(Δ_(1,q); z) = Σ_{b ∈ T_q} z^{ω(b)}`.
pub fn local_hstar(q: &WeightVector) -> IntPolynomial {
    IntPolynomial::from_counts(&height_tally(q, true))
}

/// `h*(Δ_(1,q); z) = Σ_{0 ≤ b < Q} z^{ω(b)}`.
pub fn hstar(q: &WeightVector) -> IntPolynomial {
    IntPolynomial::from_counts(&height_tally(q, false))
}

/// Every point of the half-open parallelepiped with its height and
/// open-membership flag.
pub fn parallelepiped_points(q: &WeightVector) -> Result<Vec<ParallelepipedPoint>> {
    check_scan(q)?;
    let volume = q.normalized_volume();
    let mut out = Vec::new();
    let mut b = BigUint::zero();
    while b < volume {
        out.push(ParallelepipedPoint {
            height: omega_unchecked(q, &volume, &b),
            in_open: in_open_unchecked(q, &volume, &b),
            b: b.clone(),
        });
        b += 1u32;
    }
    Ok(out)
}

/// The `(n+1) × (n+1)` matrix whose columns are `(v^(1),1), …, (v^(n),1),
/// (v^(0),1)`: a row of ones over an identity block, with last column
/// `(1, −q_1, …, −q_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMatrix {
    pub entries: Vec<Vec<BigInt>>,
}

impl VertexMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        bareiss_det(self.entries.clone())
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn vertex_matrix(q: &WeightVector) -> VertexMatrix {
    let n = q.dim();
    let mut entries = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for j in 0..=n {
        entries[0][j] = BigInt::one();
    }
    for (i, qi) in q.weights().iter().enumerate() {
        entries[i + 1][i] = BigInt::one();
        entries[i + 1][n] = -BigInt::from(qi.clone());
    }
    let m = VertexMatrix { entries };
    debug_assert_eq!(m.determinant().abs(), BigInt::from(q.normalized_volume()));
    m
}

/// Limits for [`oracle_enumerate`].
#[derive(Clone, Copy, Debug)]
pub struct OracleGuard {
    pub max_dim: usize,
    pub max_box_points: u64,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard {
            max_dim: 8,
            max_box_points: 400_000_000,
        }
    }
}

/// Tallies lattice points of the open (or half-open) parallelepiped by
/// height, found by scanning a bounding box and solving `M λ = x` exactly.
///
/// The height of a point is its coordinate in the all-ones row of the
/// vertex matrix.
pub fn oracle_enumerate(q: &WeightVector, open_only: bool) -> Result<BTreeMap<usize, u64>> {
    oracle_enumerate_with(q, open_only, OracleGuard::default())
}

pub fn oracle_enumerate_with(
    q: &WeightVector,
    open_only: bool,
    guard: OracleGuard,
) -> Result<BTreeMap<usize, u64>> {
    let n = q.dim();
    if n > guard.max_dim {
        return Err(Error::guard(format!(
            "dimension {n} exceeds oracle limit {}",
            guard.max_dim
        )));
    }
    let vm = vertex_matrix(q);
    let size = n + 1;
    let mut m = vec![vec![0i128; size]; size];
    for (r, row) in vm.entries.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m[r][c] = v.to_i128().ok_or_else(|| {
                Error::guard(format!("vertex matrix entry {v} exceeds machine range"))
            })?;
        }
    }

    // Loose box: each coordinate ranges over the sums of the negative and
    // positive entries of its row.
    let lo: Vec<i64> = m
        .iter()
        .map(|row| row.iter().filter(|v| **v < 0).sum::<i128>() as i64)
        .collect();
    let hi: Vec<i64> = m
        .iter()
        .map(|row| row.iter().filter(|v| **v > 0).sum::<i128>() as i64)
        .collect();
    let box_points = lo
        .iter()
        .zip(&hi)
        .try_fold(1u64, |acc, (l, h)| acc.checked_mul((h - l + 1) as u64))
        .filter(|&p| p <= guard.max_box_points)
        .ok_or_else(|| {
            Error::guard(format!(
                "bounding box exceeds {} lattice points",
                guard.max_box_points
            ))
        })?;
    debug_assert!(box_points > 0);

    let (adj, det) = adjugate(&m);
    let (adj, det) = if det < 0 {
        (
            adj.iter().map(|r| r.iter().map(|v| -v).collect()).collect(),
            -det,
        )
    } else {
        (adj, det)
    };
    let adj: Vec<Vec<i128>> = adj;

    // Outer loop over the height coordinate x_0; the remaining coordinates
    // run as an odometer with the numerators λ_j · det updated incrementally.
    let tallies: Vec<(usize, u64)> = (lo[0]..=hi[0])
        .into_par_iter()
        .map(|x0| {
            let mut x: Vec<i64> = lo.clone();
            x[0] = x0;
            let mut num: Vec<i128> = (0..size)
                .map(|j| (0..size).map(|k| adj[j][k] * x[k] as i128).sum())
                .collect();
            let mut count = 0u64;
            loop {
                let inside = num.iter().all(|&v| {
                    if open_only {
                        v > 0 && v < det
                    } else {
                        v >= 0 && v < det
                    }
                });
                if inside {
                    count += 1;
                }
                // advance the odometer over coordinates 1..size
                let mut k = size - 1;
                loop {
                    if k == 0 {
                        return (x0 as usize, count);
                    }
                    if x[k] < hi[k] {
                        x[k] += 1;
                        for j in 0..size {
                            num[j] += adj[j][k];
                        }
                        break;
                    }
                    let span = (hi[k] - lo[k]) as i128;
                    x[k] = lo[k];
                    for j in 0..size {
                        num[j] -= adj[j][k] * span;
                    }
                    k -= 1;
                }
            }
        })
        .collect();

    let mut out = BTreeMap::new();
    for (h, c) in tallies {
        if c > 0 {
            *out.entry(h).or_insert(0) += c;
        }
    }
    Ok(out)
}

/// Adjugate and determinant of a small integer matrix, by cofactors.
fn adjugate(m: &[Vec<i128>]) -> (Vec<Vec<i128>>, i128) {
    let n = m.len();
    let to_big = |rows: Vec<Vec<i128>>| -> Vec<Vec<BigInt>> {
        rows.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    };
    let det = bareiss_det(to_big(m.to_vec()))
        .to_i128()
        .expect("determinant fits");
    if n == 1 {
        return (vec![vec![1]], det);
    }
    let mut adj = vec![vec![0i128; n]; n];
    for r in 0..n {
        for c in 0..n {
            let minor: Vec<Vec<i128>> = m
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != r)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let cof = bareiss_det(to_big(minor)).to_i128().expect("minor fits");
            adj[c][r] = if (r + c).is_even() { cof } else { -cof };
        }
    }
    (adj, det)
}

/// Coefficient map `{k: c_k}` of the nonzero coefficients of `p`.
pub fn coefficient_map(p: &IntPolynomial) -> BTreeMap<usize, u64> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.to_u64().expect("tally fits u64")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(q: &[u64]) -> WeightVector {
        WeightVector::from_u64s(q).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn weights_validation() {
        assert_eq!(WeightVector::from_u64s(&[]), Err(Error::InvalidWeights));
        assert_eq!(WeightVector::from_u64s(&[2, 0]), Err(Error::InvalidWeights));
        assert_eq!(w(&[6, 2]).sorted(), w(&[2, 6]));
        assert_eq!(w(&[3, 8, 12]).to_string(), "(3,8,12)");
    }

    #[test]
    fn volume_examples() {
        assert_eq!(normalized_volume(&w(&[2, 3])), big(6));
        assert_eq!(normalized_volume(&w(&[1; 5])), big(6));
        assert_eq!(normalized_volume(&w(&[2, 6])), big(9));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&w(&[2, 3]), &big(5)), Ok(2));
        assert_eq!(omega(&w(&[7, 1, 4]), &big(0)), Ok(0));
        assert_eq!(omega(&w(&[3, 8, 12]), &big(23)), Ok(3));
        assert!(matches!(
            omega(&w(&[2, 3]), &big(6)),
            Err(Error::OutOfRange { what: "b", .. })
        ));
    }

    #[test]
    fn t_set_examples() {
        let as_u64 = |v: Vec<BigUint>| v.iter().map(|x| x.to_u64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_u64(t_set(&w(&[2, 3]))), vec![1, 5]);
        assert_eq!(as_u64(t_set(&w(&[1, 1]))), vec![1, 2]);
        assert_eq!(as_u64(t_set(&w(&[2, 6]))), vec![1, 2, 4, 5, 7, 8]);
    }

    #[test]
    fn local_hstar_examples() {
        assert_eq!(local_hstar(&w(&[1, 1])), p(&[0, 1, 1]));
        assert_eq!(local_hstar(&w(&[3, 8, 12])), p(&[0, 1, 6, 1]));
        assert_eq!(local_hstar(&w(&[2, 6])), p(&[0, 3, 3]));
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(hstar(&w(&[2, 3])), p(&[1, 4, 1]));
        assert_eq!(hstar(&w(&[1, 2])), p(&[1, 2, 1]));
        assert_eq!(hstar(&w(&[2, 6])), p(&[1, 5, 3]));
    }

    #[test]
    fn vertex_matrix_examples() {
        let m = vertex_matrix(&w(&[2, 3]));
        let rows: Vec<Vec<i64>> = m
            .entries
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().unwrap()).collect())
            .collect();
        assert_eq!(rows, vec![vec![1, 1, 1], vec![1, 0, -2], vec![0, 1, -3]]);
        assert_eq!(m.determinant().abs(), BigInt::from(6));
        let m = vertex_matrix(&w(&[1]));
        assert_eq!(m.determinant().abs(), BigInt::from(2));
        assert_eq!(
            vertex_matrix(&w(&[1, 1])).determinant().abs(),
            BigInt::from(3)
        );
    }

    #[test]
    fn oracle_examples() {
        let map = |pairs: &[(usize, u64)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(oracle_enumerate(&w(&[1]), true).unwrap(), map(&[(1, 1)]));
        assert_eq!(
            oracle_enumerate(&w(&[2, 3]), true).unwrap(),
            map(&[(1, 1), (2, 1)])
        );
        assert_eq!(
            oracle_enumerate(&w(&[2, 3]), false).unwrap(),
            map(&[(0, 1), (1, 4), (2, 1)])
        );
    }

    #[test]
    fn oracle_guard_refuses() {
        let guard = OracleGuard {
            max_dim: 2,
            max_box_points: 1000,
        };
        assert!(matches!(
            oracle_enumerate_with(&w(&[1, 1, 1]), true, guard),
            Err(Error::ScaleGuard { .. })
        ));
        assert!(matches!(
            oracle_enumerate_with(&w(&[40, 40]), true, guard),
            Err(Error::ScaleGuard { .. })
        ));
    }

    #[test]
    fn big_weights_take_the_slow_path() {
        // Q just past u64: only the arithmetic path matters here, so use omega
        let q = WeightVector::new(vec![BigUint::from(u64::MAX), BigUint::from(5u32)]).unwrap();
        let volume = q.normalized_volume();
        assert!(volume.to_u64().is_none());
        assert_eq!(omega(&q, &BigUint::zero()), Ok(0));
        let b = &volume - 1u32;
        assert_eq!(omega(&q, &b), Ok(2));
        assert!(check_scan(&q).is_err());
    }

    #[test]
    fn parallelepiped_points_agree_with_polynomials() {
        let q = w(&[3, 8, 12]);
        let pts = parallelepiped_points(&q).unwrap();
        assert_eq!(pts.len(), 24);
        let open: Vec<_> = pts.iter().filter(|pt| pt.in_open).collect();
        assert_eq!(open.len(), 8);
        assert!(pts.iter().all(|pt| pt.height <= 3));
    }
}
