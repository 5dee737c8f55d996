//! Exact real-root certification with Sturm chains, interlacing decisions,
//! and the two interlacing-preserving sequence transforms.
//!
//! Chains are built from primitive integer pseudo-remainders and evaluated at
//! rational points by homogeneous Horner; there is no floating point on any
//! certification path.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Dense integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        ZPoly(p.coeffs().to_vec())
    }

    fn normalized(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        ZPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    /// Sign of `p(num/den)` for `den > 0`, from `Σ c_i num^i den^{d−i}`.
    fn sign_at(&self, x: &BigRational) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        let mut coeffs = self.0.iter().rev();
        let Some(lead) = coeffs.next() else {
            return 0;
        };
        let mut acc = lead.clone();
        let mut den_pow = den.clone();
        for c in coeffs {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign(&acc)
    }

    fn derivative(&self) -> Self {
        ZPoly::normalized(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Divides out the positive content; the sign of every value is kept.
    fn primitive(self) -> Self {
        let content = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            return self;
        }
        ZPoly(self.0.into_iter().map(|c| c / &content).collect())
    }

    /// Leading coefficient made positive.
    fn positive(self) -> Self {
        if !self.is_zero() && self.lead().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Pseudo-division `c·self = q·divisor + r` with `c = |lc(divisor)|^k`
    /// positive, so `r` has the sign behaviour of the true remainder.
    fn pseudo_div_rem(&self, divisor: &ZPoly) -> (ZPoly, ZPoly) {
        let dd = divisor.degree();
        let lc = divisor.lead();
        let (lc_abs, lc_sign) = (lc.abs(), lc.signum());
        let mut rem = self.0.clone();
        if rem.len() < divisor.0.len() {
            return (ZPoly(Vec::new()), ZPoly::normalized(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd] * &lc_sign;
            if top.is_zero() {
                continue;
            }
            if !lc_abs.is_one() {
                for c in rem.iter_mut().chain(quot.iter_mut()) {
                    *c *= &lc_abs;
                }
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &top * d;
            }
            quot[k] = top;
        }
        rem.truncate(dd);
        (ZPoly::normalized(quot), ZPoly::normalized(rem))
    }

    /// Primitive gcd with positive leading coefficient.
    fn gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (self.clone().primitive(), other.clone().primitive());
        while !b.is_zero() {
            let r = a.pseudo_div_rem(&b).1.primitive();
            a = b;
            b = r;
        }
        a.positive()
    }

    /// Exact quotient up to a positive constant, made primitive.
    fn div_exact(&self, divisor: &ZPoly) -> ZPoly {
        self.pseudo_div_rem(divisor).0.primitive().positive()
    }

    fn squarefree(&self) -> ZPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.clone().primitive().positive()
        } else {
            self.div_exact(&g)
        }
    }

    /// A power of two strictly exceeding every root's modulus:
    /// `2^{1 + max_k e_k}` with `2^{k·e_k} > |a_{d−k} / a_d|`.
    fn root_bound(&self) -> BigRational {
        let d = self.degree();
        let lead_bits = self.lead().bits() as i64;
        let e = (1..=d)
            .filter(|&k| !self.0[d - k].is_zero())
            .map(|k| {
                let bits = self.0[d - k].bits() as i64;
                Integer::div_ceil(&(bits - lead_bits + 1), &(k as i64))
            })
            .max()
            .unwrap_or(0);
        let exp = e + 1;
        let power = BigInt::one() << exp.unsigned_abs();
        if exp >= 0 {
            BigRational::from_integer(power)
        } else {
            BigRational::new(BigInt::one(), power)
        }
    }

    fn to_int(&self) -> IntPolynomial {
        IntPolynomial::new(self.0.clone())
    }
}

fn sign<T: Signed>(x: &T) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
struct SturmChain {
    seq: Vec<ZPoly>,
}

impl SturmChain {
    fn new(squarefree: &ZPoly) -> Self {
        let mut seq = vec![squarefree.clone(), squarefree.derivative().primitive()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].pseudo_div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.primitive().neg());
        }
        SturmChain { seq }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    /// Number of distinct roots in the half-open interval `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    fn total(&self) -> usize {
        let at_neg_inf = self.seq.iter().map(|p| {
            let s = sign(p.lead());
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        });
        let at_pos_inf = self.seq.iter().map(|p| sign(p.lead()));
        variations(at_neg_inf) - variations(at_pos_inf)
    }

    fn isolate(&self, bound: &BigRational) -> Vec<(BigRational, BigRational)> {
        let lo = -bound.clone();
        let hi = bound.clone();
        let n = self.count(&lo, &hi);
        let mut out = Vec::with_capacity(n);
        let mut stack = vec![(lo, hi, n)];
        let two = BigRational::from_integer(BigInt::from(2));
        while let Some((lo, hi, k)) = stack.pop() {
            match k {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / &two;
                    let left = self.count(&lo, &mid);
                    stack.push((mid.clone(), hi, k - left));
                    stack.push((lo, mid, left));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Halves the isolating interval `(lo, hi]` keeping its single root.
    fn refine(&self, iv: &mut (BigRational, BigRational)) {
        let mid = (&iv.0 + &iv.1) / BigRational::from_integer(BigInt::from(2));
        if self.count(&iv.0, &mid) == 1 {
            iv.1 = mid;
        } else {
            iv.0 = mid;
        }
    }
}

/// Real-root data for a nonzero integer polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RootCertificate {
    /// Degree of `p / gcd(p, p')`.
    pub squarefree_degree: usize,
    /// Number of distinct real roots.
    pub real_root_count: usize,
    /// Disjoint half-open intervals `(lo, hi]`, increasing, one distinct
    /// root in each.
    pub isolating_intervals: Vec<(BigRational, BigRational)>,
    /// Multiplicity in `p` of the root in the matching interval.
    pub multiplicities: Vec<usize>,
}

impl RootCertificate {
    pub fn is_real_rooted(&self) -> bool {
        self.real_root_count == self.squarefree_degree
    }
}

/// `p / gcd(p, p')` as a primitive integer polynomial with positive leading
/// coefficient.
pub fn squarefree_part(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    ZPoly::from_int(p).squarefree().to_int()
}

struct Isolation {
    chain: SturmChain,
    intervals: Vec<(BigRational, BigRational)>,
    multiplicities: Vec<usize>,
    squarefree_degree: usize,
    squarefree: ZPoly,
}

fn isolate(p: &IntPolynomial) -> Result<Isolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rp = ZPoly::from_int(p);
    let sf = rp.squarefree();
    let chain = SturmChain::new(&sf);
    let intervals = if sf.degree() == 0 {
        Vec::new()
    } else {
        chain.isolate(&sf.root_bound())
    };

    // Repeated gcds g_{k+1} = gcd(g_k, g_k'): a root has multiplicity m iff
    // it is a root of g_0..g_{m-1} and not of g_m.
    let mut multiplicities = vec![1usize; intervals.len()];
    let mut g = rp.gcd(&rp.derivative());
    while g.degree() >= 1 {
        let gchain = SturmChain::new(&g.squarefree());
        for (iv, m) in intervals.iter().zip(multiplicities.iter_mut()) {
            if gchain.count(&iv.0, &iv.1) > 0 {
                *m += 1;
            }
        }
        g = g.gcd(&g.derivative());
    }

    Ok(Isolation {
        chain,
        multiplicities,
        squarefree_degree: sf.degree(),
        squarefree: sf,
        intervals,
    })
}

/// Isolates the distinct real roots of `p` exactly.
pub fn sturm_certificate(p: &IntPolynomial) -> Result<RootCertificate> {
    let iso = isolate(p)?;
    debug_assert_eq!(iso.chain.total(), iso.intervals.len());
    Ok(RootCertificate {
        squarefree_degree: iso.squarefree_degree,
        real_root_count: iso.intervals.len(),
        isolating_intervals: iso.intervals,
        multiplicities: iso.multiplicities,
    })
}

/// True for the zero polynomial, for degree ≤ 1, and whenever every root is
/// real.
pub fn is_real_rooted(p: &IntPolynomial) -> bool {
    match p.degree() {
        None | Some(0) | Some(1) => true,
        Some(_) => {
            let sf = ZPoly::from_int(p).squarefree();
            SturmChain::new(&sf).total() == sf.degree()
        }
    }
}

/// Orders two isolated roots of different polynomials, refining both
/// intervals in place until they separate or a common root is found.
fn compare_roots(
    a: &mut (BigRational, BigRational),
    a_chain: &SturmChain,
    b: &mut (BigRational, BigRational),
    b_chain: &SturmChain,
    common: Option<&SturmChain>,
) -> Ordering {
    loop {
        if a.1 <= b.0 {
            return Ordering::Less;
        }
        if b.1 <= a.0 {
            return Ordering::Greater;
        }
        if let Some(c) = common {
            let lo = (&a.0).max(&b.0).clone();
            let hi = (&a.1).min(&b.1).clone();
            if c.count(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        a_chain.refine(a);
        b_chain.refine(b);
    }
}

/// Roots listed largest first, repeated by multiplicity, as indices into
/// the distinct-root intervals.
fn descending_with_multiplicity(iso: &Isolation) -> Vec<usize> {
    (0..iso.intervals.len())
        .rev()
        .flat_map(|i| std::iter::repeat_n(i, iso.multiplicities[i]))
        .collect()
}

/// Decides `q ⪯ p`: both real-rooted and their roots, with multiplicity,
/// weakly alternate as `α_1 ≥ β_1 ≥ α_2 ≥ β_2 ≥ …` where `α` are the roots
/// of `p` and `β` those of `q`.
///
/// The zero polynomial interlaces, and is interlaced by, every real-rooted
/// polynomial.
pub fn interlaces(q: &IntPolynomial, p: &IntPolynomial) -> bool {
    if !is_real_rooted(q) || !is_real_rooted(p) {
        return false;
    }
    let (Some(dq), Some(dp)) = (q.degree(), p.degree()) else {
        return true;
    };
    if dp != dq && dp != dq + 1 {
        return false;
    }
    if dq == 0 {
        return true;
    }
    let (Ok(mut pi), Ok(mut qi)) = (isolate(p), isolate(q)) else {
        return false;
    };
    let g = pi.squarefree.gcd(&qi.squarefree);
    let common = (g.degree() >= 1).then(|| SturmChain::new(&g));

    let alphas = descending_with_multiplicity(&pi);
    let betas = descending_with_multiplicity(&qi);
    for k in 0..betas.len() {
        // α_k ≥ β_k
        let ord = compare_roots(
            &mut pi.intervals[alphas[k]],
            &pi.chain,
            &mut qi.intervals[betas[k]],
            &qi.chain,
            common.as_ref(),
        );
        if ord == Ordering::Less {
            return false;
        }
        // β_k ≥ α_{k+1}
        if let Some(&next) = alphas.get(k + 1) {
            let ord = compare_roots(
                &mut qi.intervals[betas[k]],
                &qi.chain,
                &mut pi.intervals[next],
                &pi.chain,
                common.as_ref(),
            );
            if ord == Ordering::Less {
                return false;
            }
        }
    }
    true
}

/// True iff `fs[i] ⪯ fs[j]` for every `i ≤ j`.
pub fn is_interlacing_sequence(fs: &[IntPolynomial]) -> bool {
    fs.iter().all(is_real_rooted)
        && (0..fs.len()).all(|i| (i + 1..fs.len()).all(|j| interlaces(&fs[i], &fs[j])))
}

/// An interlacing sequence of polynomials with nonnegative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingSequence {
    polys: Vec<IntPolynomial>,
}

impl InterlacingSequence {
    pub fn new(polys: Vec<IntPolynomial>) -> Result<Self> {
        if let Some(index) = polys.iter().position(|p| !p.has_nonnegative_coeffs()) {
            return Err(Error::invalid(
                "interlacing sequence",
                format!("member {index} has a negative coefficient"),
            ));
        }
        if !is_interlacing_sequence(&polys) {
            return Err(Error::NotInterlacing);
        }
        Ok(InterlacingSequence { polys })
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    pub fn into_inner(self) -> Vec<IntPolynomial> {
        self.polys
    }

    pub fn sum(&self) -> IntPolynomial {
        self.polys.iter().sum()
    }
}

/// Checks that the sum of an interlacing sequence is real-rooted.
pub fn nonneg_sum_real_rooted(fs: &InterlacingSequence) -> bool {
    is_real_rooted(&fs.sum())
}

/// `prefix[k] = fs[0] + … + fs[k−1]`.
fn prefix_sums(fs: &[IntPolynomial]) -> Vec<IntPolynomial> {
    let mut out = Vec::with_capacity(fs.len() + 1);
    let mut acc = IntPolynomial::zero();
    out.push(acc.clone());
    for f in fs {
        acc += f;
        out.push(acc.clone());
    }
    out
}

/// `g_i = z Σ_{j < φ(i)} f_j + Σ_{j ≥ φ(i)} f_j` for each entry of `phi`.
///
/// `phi` lists `φ(0), …, φ(m)` and must be weakly increasing; values past
/// the end of `fs` put every term in the first sum.
pub fn strict_transform(fs: &[IntPolynomial], phi: &[usize]) -> Result<Vec<IntPolynomial>> {
    if fs.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let Some(i) = phi.windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::NotMonotone(i + 1));
    }
    let prefix = prefix_sums(fs);
    let total = &prefix[fs.len()];
    Ok(phi
        .iter()
        .map(|&k| {
            let below = &prefix[k.min(fs.len())];
            below.shift(1) + (total - below)
        })
        .collect())
}

/// `g_i = z Σ_{j ≤ φ(i)} f_j + Σ_{j ≥ φ(i)} f_j`; the term `j = φ(i)`
/// appears in both sums.
pub fn overlap_transform(fs: &[IntPolynomial], phi: &[usize]) -> Result<Vec<IntPolynomial>> {
    if fs.is_empty() {
        return Err(Error::EmptySequence);
    }
    let prefix = prefix_sums(fs);
    let total = &prefix[fs.len()];
    Ok(phi
        .iter()
        .map(|&k| {
            let upto = &prefix[(k + 1).min(fs.len())];
            let below = &prefix[k.min(fs.len())];
            upto.shift(1) + (total - below)
        })
        .collect())
}
