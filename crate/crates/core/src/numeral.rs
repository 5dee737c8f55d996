//! Positional numeral systems, Lehmer codes and descents, and the
//! factoradic simplex family.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::IntPolynomial;
use crate::realroot::strict_transform;
use crate::simplex::WeightVector;

/// Largest `n` for which [`eulerian`] and [`maxdes_poly_enum`] enumerate
/// `S_n`.
pub const PERMUTATION_ENUM_MAX: usize = 9;

/// Largest `n` for which [`factoradic_local_hstar_enum`] scans
/// `(n+1)!` integers.
pub const FACTORADIC_ENUM_MAX: usize = 9;

/// A positional numeral system `1 = a_0 < a_1 < a_2 < …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumeralSystem {
    Binary,
    BaseR(u64),
    /// Place values `(k+1)!`.
    Factoradic,
    /// Finitely many place values; the last place takes unbounded digits.
    Explicit(Vec<BigUint>),
}

impl NumeralSystem {
    pub fn base(r: u64) -> Result<Self> {
        if r < 2 {
            return Err(Error::out_of_range("base", r, ">= 2"));
        }
        Ok(NumeralSystem::BaseR(r))
    }

    pub fn explicit(place_values: Vec<BigUint>) -> Result<Self> {
        if place_values.first() != Some(&BigUint::one()) {
            return Err(Error::invalid(
                "numeral system",
                "first place value must be 1",
            ));
        }
        if let Some(k) = place_values.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "numeral system",
                format!("place values not strictly increasing at place {}", k + 1),
            ));
        }
        Ok(NumeralSystem::Explicit(place_values))
    }

    /// The `k`-th place value `a_k`, if the system has one.
    pub fn place_value(&self, k: usize) -> Option<BigUint> {
        match self {
            NumeralSystem::Binary => Some(BigUint::one() << k),
            NumeralSystem::BaseR(r) => Some(BigUint::from(*r).pow(k as u32)),
            NumeralSystem::Factoradic => Some(factorial(k + 1)),
            NumeralSystem::Explicit(v) => v.get(k).cloned(),
        }
    }
}

/// Digits `η_{m−1} … η_0`, most significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numeral {
    pub digits: Vec<BigUint>,
    pub system: NumeralSystem,
}

impl Numeral {
    /// Digit in place `i` (zero beyond the stored length).
    pub fn digit(&self, i: usize) -> BigUint {
        let m = self.digits.len();
        if i < m {
            self.digits[m - 1 - i].clone()
        } else {
            BigUint::zero()
        }
    }

    /// Left-pads with zeros to `width` places.
    pub fn padded(&self, width: usize) -> Vec<BigUint> {
        (0..width.max(self.digits.len()))
            .rev()
            .map(|i| self.digit(i))
            .collect()
    }
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        let single = self.digits.iter().all(|d| d < &BigUint::from(10u32));
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 && !single {
                write!(f, ":")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Greedy representation of `b`: repeated Euclidean division starting from
/// the largest place value not exceeding `b`.
pub fn to_numeral(b: &BigUint, sys: &NumeralSystem) -> Numeral {
    let mut places = Vec::new();
    let mut k = 0;
    while let Some(a) = sys.place_value(k) {
        if &a > b {
            break;
        }
        places.push(a);
        k += 1;
    }
    let mut rem = b.clone();
    let digits = places
        .iter()
        .rev()
        .map(|a| {
            let (d, r) = rem.div_rem(a);
            rem = r;
            d
        })
        .collect();
    Numeral {
        digits,
        system: sys.clone(),
    }
}

/// Value of a numeral; every prefix `η_i a_i + … + η_0 a_0` must stay below
/// the next place value `a_{i+1}`.
pub fn from_numeral(num: &Numeral) -> Result<BigUint> {
    let mut value = BigUint::zero();
    for i in 0..num.digits.len() {
        let a = num
            .system
            .place_value(i)
            .ok_or_else(|| Error::invalid("numeral", format!("system has no place {i}")))?;
        value += num.digit(i) * a;
        if let Some(next) = num.system.place_value(i + 1) {
            if value >= next {
                return Err(Error::invalid(
                    "numeral",
                    format!("digit {} out of bounds at place {i}", num.digit(i)),
                ));
            }
        }
    }
    Ok(value)
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::invalid(
                    "permutation",
                    format!("{one_line:?} is not a permutation of 1..={n}"),
                ));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Positions `i ∈ [n−1]` (1-based) with `π_i > π_{i+1}`.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
    }

    pub fn des(&self) -> usize {
        self.descents().count()
    }

    /// Largest descent position, 0 when there is none.
    pub fn maxdes(&self) -> usize {
        self.descents().last().unwrap_or(0)
    }

    /// Advances to the next permutation in lexicographic order; false after
    /// the last one.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.0;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len())
            .rev()
            .find(|&j| v[j] > v[i - 1])
            .expect("pivot");
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() >= 10 { " " } else { "" };
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "{sep}")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Inversion sequence `ℓ_{n−1}, …, ℓ_1` with `ℓ_k ∈ [k]_0`; `ℓ_0 = 0` is
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LehmerCode {
    entries: Vec<usize>,
}

impl LehmerCode {
    /// `entries` lists `ℓ_{n−1}` first.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len() + 1;
        for (idx, &l) in entries.iter().enumerate() {
            let k = n - 1 - idx;
            if l > k {
                return Err(Error::invalid(
                    "Lehmer code",
                    format!("entry ℓ_{k} = {l} exceeds {k}"),
                ));
            }
        }
        Ok(LehmerCode { entries })
    }

    /// Length `n` of the permutations this code describes.
    pub fn n(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `ℓ_k` for `0 ≤ k < n`.
    pub fn get(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.entries[self.n() - 1 - k]
        }
    }
}

/// `ℓ_i = |{0 ≤ j < i : π_{n−i} > π_{n−j}}|` for `i ∈ [n−1]`.
pub fn lehmer_code(p: &Permutation) -> LehmerCode {
    let pi = p.as_slice();
    let n = pi.len();
    let entries = (1..n)
        .rev()
        .map(|i| {
            let x = pi[n - i - 1];
            (0..i).filter(|&j| x > pi[n - j - 1]).count()
        })
        .collect();
    LehmerCode { entries }
}

/// Picks `π_k = s_{ℓ_{n−k}}` from the remaining increasing list `s`.
pub fn permutation_from_lehmer(code: &LehmerCode) -> Permutation {
    let n = code.n();
    let mut s: Vec<usize> = (1..=n).collect();
    let one_line = (1..=n).map(|k| s.remove(code.get(n - k))).collect();
    Permutation(one_line)
}

/// The permutation of `[n]` whose Lehmer code is the factoradic numeral of
/// `b`; `b = 0` gives the identity and `b = n! − 1` gives `n … 21`.
pub fn unrank_lex(b: &BigUint, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    let limit = factorial(n);
    if b >= &limit {
        return Err(Error::out_of_range("b", b, format!("0..{limit}")));
    }
    let digits = to_numeral(b, &NumeralSystem::Factoradic).padded(n - 1);
    let code = LehmerCode {
        entries: digits
            .iter()
            .map(|d| d.to_usize().expect("factoradic digit"))
            .collect(),
    };
    Ok(permutation_from_lehmer(&code))
}

/// Machine-word variant of [`unrank_lex`] for the enumeration scans.
fn unrank_small(mut b: u64, n: usize, out: &mut Vec<usize>) {
    let mut code = [0usize; 21];
    for k in 1..n {
        let base = (k + 1) as u64;
        code[k] = (b % base) as usize;
        b /= base;
    }
    let mut s: Vec<usize> = (1..=n).collect();
    out.clear();
    for k in 1..=n {
        out.push(s.remove(code[n - k]));
    }
}

pub fn des(p: &Permutation) -> usize {
    p.des()
}

pub fn maxdes(p: &Permutation) -> usize {
    p.maxdes()
}

/// Number of `k ∈ [n−1]` with `ℓ_k > ℓ_{k−1}`.
pub fn des_lehmer(code: &LehmerCode) -> usize {
    (1..code.n())
        .filter(|&k| code.get(k) > code.get(k - 1))
        .count()
}

fn check_perm_guard(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    if n > PERMUTATION_ENUM_MAX {
        return Err(Error::guard(format!(
            "n = {n} exceeds permutation enumeration limit {PERMUTATION_ENUM_MAX}"
        )));
    }
    Ok(())
}

fn tally_permutations(n: usize, stat: impl Fn(&Permutation) -> usize) -> IntPolynomial {
    let mut counts = vec![0u64; n];
    let mut p = Permutation::identity(n);
    loop {
        counts[stat(&p)] += 1;
        if !p.next_lex() {
            break;
        }
    }
    IntPolynomial::from_counts(&counts)
}

/// `A_n(z) = Σ_{π ∈ S_n} z^{des(π)}` by enumerating `S_n`.
pub fn eulerian(n: usize) -> Result<IntPolynomial> {
    check_perm_guard(n)?;
    Ok(tally_permutations(n, Permutation::des))
}

/// `A_n` from the recurrence
/// `A(n,k) = (k+1) A(n−1,k) + (n−k) A(n−1,k−1)`; no enumeration guard.
pub fn eulerian_by_recurrence(n: usize) -> Result<IntPolynomial> {
    check_n(n)?;
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (k, a) in row.iter().enumerate() {
            next[k] += a * (k + 1);
            next[k + 1] += a * (m - k - 1);
        }
        row = next;
    }
    Ok(IntPolynomial::new(row))
}

/// `B_n(z) = Σ_{π ∈ S_n} z^{maxDes(π)}` from the closed form
/// `b_{n,0} = 1`, `b_{n,k} = n!/(n−k)! − n!/(n−k+1)!`.
pub fn maxdes_poly(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    let nf = factorial(n);
    let mut coeffs = vec![BigInt::one()];
    for k in 1..n {
        let a = &nf / factorial(n - k);
        let b = &nf / factorial(n - k + 1);
        coeffs.push(BigInt::from(a) - BigInt::from(b));
    }
    Ok(IntPolynomial::new(coeffs))
}

/// [`maxdes_poly`] by enumerating `S_n`.
pub fn maxdes_poly_enum(n: usize) -> Result<IntPolynomial> {
    check_perm_guard(n)?;
    Ok(tally_permutations(n, Permutation::maxdes))
}

/// `q^(n)`: the coefficients of `B_{n+1}` without the constant term.
/// Equivalently `q_k = (n+1)! / ((n−k+1)! + (n−k)!)`.
pub fn factoradic_weights(n: usize) -> Result<WeightVector> {
    let b = maxdes_poly(n + 1)?;
    let q = b.coeffs()[1..]
        .iter()
        .map(|c| c.to_biguint().expect("positive coefficient"))
        .collect();
    WeightVector::new(q)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::out_of_range("n", 0, ">= 1"))
    } else {
        Ok(())
    }
}

fn is_unit_mod6(b: u64) -> bool {
    matches!(b % 6, 1 | 5)
}

/// `Σ z^{des(π^(b))}` over `1 ≤ b < (n+1)!` with `b ≡ 1, 5 (mod 6)`, where
/// `π^(b)` is [`unrank_lex`]`(b, n+1)`.
pub fn factoradic_local_hstar_enum(n: usize) -> Result<IntPolynomial> {
    check_n(n)?;
    if n > FACTORADIC_ENUM_MAX {
        return Err(Error::guard(format!(
            "n = {n} exceeds factoradic enumeration limit {FACTORADIC_ENUM_MAX} \
             ({}! values); use the recursion",
            n + 1
        )));
    }
    let size = n + 1;
    let total = factorial(size).to_u64().expect("guarded");
    let counts = par::tally(1, total, size, |b| {
        if !is_unit_mod6(b) {
            return None;
        }
        let mut one_line = Vec::with_capacity(size);
        unrank_small(b, size, &mut one_line);
        Some(one_line.windows(2).filter(|w| w[0] > w[1]).count())
    });
    Ok(IntPolynomial::from_counts(&counts))
}

/// Rows `L_3, L_4, …, L_last` of the refined recursion, starting from
/// `L_3 = (z, 0, z²)` with `L_{m,k} = z Σ_{t<k} L_{m−1,t} + Σ_{t≥k} L_{m−1,t}`
/// for `k ∈ [m−1]_0`.
pub fn factoradic_recursion_rows(last: usize) -> Vec<Vec<IntPolynomial>> {
    let mut rows = Vec::new();
    if last < 3 {
        return rows;
    }
    let mut row = vec![
        IntPolynomial::z(),
        IntPolynomial::zero(),
        IntPolynomial::monomial(2, BigInt::one()),
    ];
    for m in 4..=last {
        rows.push(row.clone());
        let phi: Vec<usize> = (0..m).collect();
        row = strict_transform(&row, &phi).expect("identity map is monotone");
    }
    rows.push(row);
    rows
}

/// `ℓ*(Δ_n^!)` from the recursion: `z` for `n = 1`, else `Σ_k L_{n+1,k}`.
pub fn factoradic_local_hstar_recursive(n: usize) -> Result<IntPolynomial> {
    check_n(n)?;
    if n == 1 {
        return Ok(IntPolynomial::z());
    }
    let rows = factoradic_recursion_rows(n + 1);
    Ok(rows.last().expect("n + 1 >= 3").iter().sum())
}

/// `ℓ*(Δ_n^!)` for `n = 1..=rows` in one sweep of the recursion.
pub fn factoradic_triangle(rows: usize) -> Vec<IntPolynomial> {
    let mut out = Vec::with_capacity(rows);
    if rows >= 1 {
        out.push(IntPolynomial::z());
    }
    if rows >= 2 {
        out.extend(
            factoradic_recursion_rows(rows + 1)
                .iter()
                .map(|row| row.iter().sum::<IntPolynomial>()),
        );
    }
    out
}

/// `|{1 ≤ b < (n+1)! : b ≡ 1, 5 (mod 6)}|`.
pub fn count_mod6(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let limit = factorial(n + 1);
    let six = BigUint::from(6u32);
    let count = [1u32, 5]
        .iter()
        .map(|&r| {
            let r = BigUint::from(r);
            if limit > r {
                (&limit - 1u32 - &r) / &six + 1u32
            } else {
                BigUint::zero()
            }
        })
        .sum();
    Ok(count)
}

/// Number of ones in the binary numeral of `b`.
pub fn supp2(b: &BigUint) -> u64 {
    b.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn perm(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|c| (c - b'0') as usize).collect()).unwrap()
    }

    fn code(e: &[usize]) -> LehmerCode {
        LehmerCode::new(e.to_vec()).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn digits(num: &Numeral) -> Vec<u64> {
        num.digits.iter().map(|d| d.to_u64().unwrap()).collect()
    }

    #[test]
    fn to_numeral_examples() {
        let n = to_numeral(&big(13), &NumeralSystem::Binary);
        assert_eq!(digits(&n), vec![1, 1, 0, 1]);
        assert_eq!(n.to_string(), "1101");
        assert!(to_numeral(&big(0), &NumeralSystem::Factoradic)
            .digits
            .is_empty());
        assert_eq!(
            digits(&to_numeral(&big(5), &NumeralSystem::Factoradic)),
            vec![2, 1]
        );
        assert_eq!(
            digits(&to_numeral(&big(255), &NumeralSystem::base(16).unwrap())),
            vec![15, 15]
        );
    }

    #[test]
    fn from_numeral_examples() {
        let num = |d: &[u64], s: NumeralSystem| Numeral {
            digits: d.iter().map(|&x| big(x)).collect(),
            system: s,
        };
        assert_eq!(
            from_numeral(&num(&[2, 1], NumeralSystem::Factoradic)),
            Ok(big(5))
        );
        assert_eq!(
            from_numeral(&num(&[1, 1, 0, 1], NumeralSystem::Binary)),
            Ok(big(13))
        );
        assert_eq!(
            from_numeral(&num(&[0, 0, 0], NumeralSystem::Binary)),
            Ok(big(0))
        );
        assert!(from_numeral(&num(&[2], NumeralSystem::Binary)).is_err());
        assert!(from_numeral(&num(&[3, 0], NumeralSystem::Factoradic)).is_err());
        assert!(from_numeral(&num(&[1, 2], NumeralSystem::Factoradic)).is_err());
    }

    #[test]
    fn explicit_systems() {
        assert!(NumeralSystem::explicit(vec![big(2), big(3)]).is_err());
        assert!(NumeralSystem::explicit(vec![big(1), big(3), big(3)]).is_err());
        let sys = NumeralSystem::explicit(vec![big(1), big(3), big(7)]).unwrap();
        let n = to_numeral(&big(30), &sys);
        assert_eq!(digits(&n), vec![4, 0, 2]);
        assert_eq!(from_numeral(&n), Ok(big(30)));
        assert!(NumeralSystem::base(1).is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(LehmerCode::new(vec![3, 0]).is_err());
        assert!(LehmerCode::new(vec![0, 2]).is_err());
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(lehmer_code(&perm("321")), code(&[2, 1]));
        assert_eq!(lehmer_code(&Permutation::identity(5)), code(&[0, 0, 0, 0]));
        assert_eq!(lehmer_code(&perm("132")), code(&[0, 1]));
        assert_eq!(permutation_from_lehmer(&code(&[2, 1])), perm("321"));
        assert_eq!(
            permutation_from_lehmer(&code(&[0, 0, 0])),
            Permutation::identity(4)
        );
        assert_eq!(permutation_from_lehmer(&code(&[0, 1])), perm("132"));
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank_lex(&big(1), 3), Ok(perm("132")));
        assert_eq!(unrank_lex(&big(5), 3), Ok(perm("321")));
        assert_eq!(unrank_lex(&big(0), 6), Ok(Permutation::identity(6)));
        assert_eq!(unrank_lex(&big(23), 4), Ok(perm("4321")));
        assert!(unrank_lex(&big(6), 3).is_err());
        assert_eq!(unrank_lex(&big(0), 1), Ok(Permutation::identity(1)));
    }

    #[test]
    fn descent_examples() {
        assert_eq!((des(&perm("321")), maxdes(&perm("321"))), (2, 2));
        let id = Permutation::identity(4);
        assert_eq!((des(&id), maxdes(&id)), (0, 0));
        assert_eq!((des(&perm("132")), maxdes(&perm("132"))), (1, 2));
        assert_eq!(des_lehmer(&code(&[2, 1])), 2);
        assert_eq!(des_lehmer(&code(&[0, 0, 0])), 0);
        assert_eq!(des_lehmer(&code(&[0, 1])), 1);
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(3), Ok(p(&[1, 4, 1])));
        assert_eq!(eulerian(1), Ok(p(&[1])));
        assert_eq!(eulerian(4), Ok(p(&[1, 11, 11, 1])));
        assert!(matches!(eulerian(10), Err(Error::ScaleGuard { .. })));
        assert!(eulerian(0).is_err());
    }

    #[test]
    fn eulerian_recurrence_matches_enumeration() {
        for n in 1..=8 {
            assert_eq!(eulerian_by_recurrence(n), eulerian(n));
        }
        assert_eq!(eulerian_by_recurrence(5), Ok(p(&[1, 26, 66, 26, 1])));
    }

    #[test]
    fn maxdes_examples() {
        assert_eq!(maxdes_poly(3), Ok(p(&[1, 2, 3])));
        assert_eq!(maxdes_poly(2), Ok(p(&[1, 1])));
        assert_eq!(maxdes_poly(4), Ok(p(&[1, 3, 8, 12])));
        assert_eq!(maxdes_poly(1), Ok(p(&[1])));
    }

    #[test]
    fn factoradic_weight_examples() {
        let as_u64 = |w: WeightVector| {
            w.weights()
                .iter()
                .map(|x| x.to_u64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_u64(factoradic_weights(2).unwrap()), vec![2, 3]);
        assert_eq!(as_u64(factoradic_weights(3).unwrap()), vec![3, 8, 12]);
        assert_eq!(as_u64(factoradic_weights(1).unwrap()), vec![1]);
        for n in 1..10 {
            let w = factoradic_weights(n).unwrap();
            assert_eq!(w.normalized_volume(), factorial(n + 1));
            for (k, qk) in w.weights().iter().enumerate() {
                let k = k + 1;
                assert_eq!(
                    qk,
                    &(factorial(n + 1) / (factorial(n - k + 1) + factorial(n - k)))
                );
            }
        }
    }

    #[test]
    fn factoradic_enum_examples() {
        assert_eq!(factoradic_local_hstar_enum(2), Ok(p(&[0, 1, 1])));
        assert_eq!(factoradic_local_hstar_enum(3), Ok(p(&[0, 1, 6, 1])));
        assert_eq!(factoradic_local_hstar_enum(1), Ok(p(&[0, 1])));
        assert!(matches!(
            factoradic_local_hstar_enum(10),
            Err(Error::ScaleGuard { .. })
        ));
    }

    #[test]
    fn factoradic_recursion_examples() {
        assert_eq!(factoradic_local_hstar_recursive(2), Ok(p(&[0, 1, 1])));
        assert_eq!(factoradic_local_hstar_recursive(3), Ok(p(&[0, 1, 6, 1])));
        assert_eq!(
            factoradic_local_hstar_recursive(4),
            Ok(p(&[0, 1, 19, 19, 1]))
        );
        assert_eq!(factoradic_local_hstar_recursive(1), Ok(p(&[0, 1])));
        let rows = factoradic_recursion_rows(4);
        assert_eq!(
            rows[1],
            vec![
                p(&[0, 1, 1]),
                p(&[0, 0, 2]),
                p(&[0, 0, 2]),
                p(&[0, 0, 1, 1])
            ]
        );
    }

    #[test]
    fn triangle_matches_single_calls() {
        let tri = factoradic_triangle(6);
        assert_eq!(tri.len(), 6);
        for (i, row) in tri.iter().enumerate() {
            assert_eq!(row, &factoradic_local_hstar_recursive(i + 1).unwrap());
        }
        assert!(factoradic_triangle(0).is_empty());
    }

    #[test]
    fn count_mod6_examples() {
        assert_eq!(count_mod6(3), Ok(big(8)));
        assert_eq!(count_mod6(1), Ok(big(1)));
        assert_eq!(count_mod6(7), Ok(big(13440)));
        // brute force
        for n in 1..=6 {
            let total = factorial(n + 1).to_u64().unwrap();
            let brute = (1..total).filter(|&b| is_unit_mod6(b)).count() as u64;
            assert_eq!(count_mod6(n), Ok(big(brute)));
        }
    }

    #[test]
    fn supp2_examples() {
        assert_eq!(supp2(&big(13)), 3);
        assert_eq!(supp2(&big(0)), 0);
        assert_eq!(supp2(&(BigUint::one() << 100)), 1);
    }
}
