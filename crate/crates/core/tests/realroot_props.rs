use hstar_core::poly::IntPolynomial;
use hstar_core::realroot::{
    interlaces, is_interlacing_sequence, is_real_rooted, overlap_transform, squarefree_part,
    strict_transform, sturm_certificate,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distinct real roots of a squarefree polynomial counted on the grid
/// `{k / denom}` inside the Cauchy bound: exact zeros plus sign changes
/// between adjacent nonzero samples.
fn grid_root_count(sf: &IntPolynomial, denom: i64) -> usize {
    let coeffs = sf.coeffs();
    let lead = coeffs.last().unwrap().abs();
    let bound = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(BigRational::zero)
        + BigRational::from_integer(1.into());
    let steps = (bound * BigRational::from_integer(denom.into()))
        .ceil()
        .to_integer();
    let steps: i64 = steps.try_into().unwrap();
    let eval = |k: i64| {
        let x = BigRational::new(k.into(), denom.into());
        coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * &x + BigRational::from_integer(c.clone())
        })
    };
    let mut count = 0;
    let mut prev_sign = 0i8;
    for k in -steps..=steps {
        let v = eval(k);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s == 0 || (prev_sign != 0 && s != prev_sign) {
            count += 1;
        }
        prev_sign = s;
    }
    count
}

/// Refines the grid until two consecutive refinements agree.
fn brute_force_root_count(p: &IntPolynomial) -> usize {
    let sf = squarefree_part(p);
    if sf.degree() == Some(0) {
        return 0;
    }
    let mut denom = 64;
    let mut last = grid_root_count(&sf, denom);
    loop {
        denom *= 4;
        let next = grid_root_count(&sf, denom);
        if next == last || denom > 1 << 16 {
            return next;
        }
        last = next;
    }
}

fn arb_nonzero_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..=20, 1..=7)
        .prop_map(|c| IntPolynomial::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn random_real_rooted(rng: &mut ChaCha8Rng, max_degree: usize) -> IntPolynomial {
    let k = rng.gen_range(0..=max_degree);
    let mut p = IntPolynomial::from_i64s(&[rng.gen_range(1..=2)]);
    for _ in 0..k {
        let (a, b) = loop {
            let a = rng.gen_range(0..=2i64);
            let b = rng.gen_range(0..=3i64);
            if a != 0 || b != 0 {
                break (a, b);
            }
        };
        p = &p * &IntPolynomial::from_i64s(&[b, a]);
    }
    p
}

/// Rejection-samples interlacing sequences of real-rooted polynomials with
/// nonnegative coefficients.
fn random_interlacing(
    rng: &mut ChaCha8Rng,
    max_len: usize,
    max_degree: usize,
    max_coeff: i64,
) -> Vec<IntPolynomial> {
    loop {
        let len = rng.gen_range(1..=max_len);
        let fs: Vec<IntPolynomial> = (0..len)
            .map(|_| {
                if rng.gen_ratio(1, 10) {
                    IntPolynomial::zero()
                } else {
                    random_real_rooted(rng, max_degree)
                }
            })
            .collect();
        let small = fs
            .iter()
            .all(|f| f.coeffs().iter().all(|c| c <= &BigInt::from(max_coeff)));
        if small && is_interlacing_sequence(&fs) {
            return fs;
        }
    }
}

fn random_monotone(rng: &mut ChaCha8Rng, len: usize, max_value: usize) -> Vec<usize> {
    let mut phi: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_value)).collect();
    phi.sort_unstable();
    phi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sturm_count_matches_grid_scan(p in arb_nonzero_poly()) {
        let cert = sturm_certificate(&p).unwrap();
        prop_assert_eq!(cert.real_root_count, brute_force_root_count(&p));
        prop_assert_eq!(cert.isolating_intervals.len(), cert.real_root_count);
        prop_assert_eq!(Some(cert.squarefree_degree), squarefree_part(&p).degree());
        for w in cert.isolating_intervals.windows(2) {
            prop_assert!(w[0].1 <= w[1].0);
        }
        for (lo, hi) in &cert.isolating_intervals {
            prop_assert!(lo < hi);
        }
    }

    #[test]
    fn real_rootedness_of_products(a in arb_nonzero_poly(), b in arb_nonzero_poly()) {
        prop_assert_eq!(is_real_rooted(&(&a * &b)), is_real_rooted(&a) && is_real_rooted(&b));
    }
}

#[test]
fn multiplicities_sum_to_degree_for_split_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_real_rooted(&mut rng, 6);
        let cert = sturm_certificate(&p).unwrap();
        assert!(cert.is_real_rooted());
        assert_eq!(
            cert.multiplicities.iter().sum::<usize>(),
            p.degree().unwrap()
        );
    }
}

#[test]
fn every_real_rooted_polynomial_interlaces_itself() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let p = random_real_rooted(&mut rng, 6);
        assert!(interlaces(&p, &p), "{p}");
    }
}

#[test]
fn transforms_preserve_interlacing() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..300 {
        let fs = random_interlacing(&mut rng, 5, 5, 30);
        let m = rng.gen_range(1..=6);
        let phi = random_monotone(&mut rng, m, fs.len());
        let g = strict_transform(&fs, &phi).unwrap();
        assert!(
            is_interlacing_sequence(&g),
            "strict: fs={fs:?} phi={phi:?} g={g:?}"
        );

        let phi = random_monotone(&mut rng, fs.len(), fs.len() - 1);
        let g = overlap_transform(&fs, &phi).unwrap();
        assert!(
            is_interlacing_sequence(&g),
            "overlap: fs={fs:?} phi={phi:?} g={g:?}"
        );
    }
}
