//! The base-r simplices `B(r,n) = Δ_(1,q)` with `q = (r−1)(1, r, …, r^{n−1})`,
//! computed from the congruence sections of `(1 + z + … + z^{r−1})^n`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::par;
use crate::poly::IntPolynomial;
use crate::realroot::strict_transform;
use crate::simplex::WeightVector;

/// Largest `n` accepted by [`base2_local_supp`].
pub const BASE2_ENUM_MAX: usize = 32;

/// The sections `f^⟨r−1,0⟩, …, f^⟨r−1,r−2⟩` of `f_(r,n) = (1 + … + z^{r−1})^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionFamily {
    pub r: u64,
    pub n: usize,
    pub sections: Vec<IntPolynomial>,
}

impl SectionFamily {
    /// `Σ_ℓ z^ℓ · sections[ℓ](z^{r−1})`.
    pub fn reassemble(&self) -> IntPolynomial {
        IntPolynomial::from_sections(&self.sections)
    }

    /// `(f^⟨r−1,r−2⟩, …, f^⟨r−1,0⟩)`.
    pub fn reversed(&self) -> Vec<IntPolynomial> {
        self.sections.iter().rev().cloned().collect()
    }
}

fn check_base(r: u64) -> Result<()> {
    if r < 2 {
        return Err(Error::out_of_range("r", r, ">= 2"));
    }
    Ok(())
}

/// `((r−1), (r−1)r, …, (r−1)r^{n−1})`, with normalized volume `r^n`.
pub fn base_r_weights(r: u64, n: usize) -> Result<WeightVector> {
    check_base(r)?;
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    let r_big = BigUint::from(r);
    let mut place = BigUint::one();
    let mut q = Vec::with_capacity(n);
    for _ in 0..n {
        q.push(&place * (r - 1));
        place *= &r_big;
    }
    WeightVector::new(q)
}

/// `(1 + z + … + z^{r−1})^n`.
pub fn f_poly(r: u64, n: usize) -> Result<IntPolynomial> {
    check_base(r)?;
    IntPolynomial::from_i64s(&vec![1; r as usize]).pow(n as i64)
}

pub fn f_sections(r: u64, n: usize) -> Result<SectionFamily> {
    let f = f_poly(r, n)?;
    Ok(SectionFamily {
        r,
        n,
        sections: f.congruence_sections((r - 1) as usize),
    })
}

/// Advances `n → n+1`:
/// `new[ℓ] = Σ_{i ≤ ℓ} prev[i] + z Σ_{i ≥ ℓ} prev[i]`.
pub fn section_step(prev: &SectionFamily) -> SectionFamily {
    let s = &prev.sections;
    let sections = (0..s.len())
        .map(|l| {
            let low: IntPolynomial = s[..=l].iter().sum();
            let high: IntPolynomial = s[l..].iter().sum();
            low + high.shift(1)
        })
        .collect();
    SectionFamily {
        r: prev.r,
        n: prev.n + 1,
        sections,
    }
}

/// `h*(B(r,n)) = f^⟨r−1,0⟩ + z Σ_{ℓ=1}^{r−2} f^⟨r−1,ℓ⟩`, with
/// `h*(B(r,0)) = 1`.
pub fn base_r_hstar(r: u64, n: usize) -> Result<IntPolynomial> {
    check_base(r)?;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    Ok(hstar_from_sections(&f_sections(r, n)?))
}

/// `f^⟨r−1,0⟩ + z Σ_{ℓ≥1} f^⟨r−1,ℓ⟩` for the family's own `(r, n)`.
pub fn hstar_from_sections(fam: &SectionFamily) -> IntPolynomial {
    let rest: IntPolynomial = fam.sections[1..].iter().sum();
    &fam.sections[0] + &rest.shift(1)
}

/// `ℓ*(B(r,n))` from the `(r, n−1)` sections `f_i`:
/// `z Σ_i f_i + z Σ_{ℓ=1}^{r−2} (Σ_{i<ℓ} f_i + z Σ_{i≥ℓ} f_i)`.
pub fn base_r_local_hstar(r: u64, n: usize) -> Result<IntPolynomial> {
    check_base(r)?;
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    Ok(local_hstar_from_sections(&f_sections(r, n - 1)?))
}

/// `ℓ*(B(r, n+1))` from the sections of `f_(r,n)`.
pub fn local_hstar_from_sections(prev: &SectionFamily) -> IntPolynomial {
    let f = &prev.sections;
    let mut inner: IntPolynomial = f.iter().sum();
    for l in 1..f.len() {
        let below: IntPolynomial = f[..l].iter().sum();
        let above: IntPolynomial = f[l..].iter().sum();
        inner += below + above.shift(1);
    }
    inner.shift(1)
}

/// `(g_{r−2}, …, g_0)` with `g_{ℓ−1} = Σ_{i<ℓ} f_i + z Σ_{i≥ℓ} f_i` over the
/// `(r, n−1)` sections; `ℓ*(B(r,n)) = z Σ g`.
///
/// This is the strict transform of the reversed sections with
/// `φ = (0, 1, …, r−2)`.
pub fn local_hstar_generators(r: u64, n: usize) -> Result<Vec<IntPolynomial>> {
    check_base(r)?;
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    let fam = f_sections(r, n - 1)?;
    let phi: Vec<usize> = (0..fam.sections.len()).collect();
    strict_transform(&fam.reversed(), &phi)
}

/// `Σ_{0<b<2^n, b odd} z^{supp_2(b)}`.
pub fn base2_local_supp(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, ">= 1"));
    }
    if n > BASE2_ENUM_MAX {
        return Err(Error::guard(format!(
            "2^{n} exceeds base-2 enumeration limit 2^{BASE2_ENUM_MAX}"
        )));
    }
    let counts = par::tally(1, 1u64 << n, n + 1, |b| {
        (b & 1 == 1).then(|| b.count_ones() as usize)
    });
    Ok(IntPolynomial::from_counts(&counts))
}
