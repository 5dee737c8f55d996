use hstar_core::numeral::{
    des_lehmer, eulerian, factoradic_local_hstar_enum, factoradic_local_hstar_recursive,
    factoradic_weights, factorial, from_numeral, lehmer_code, maxdes_poly, maxdes_poly_enum,
    permutation_from_lehmer, to_numeral, unrank_lex, NumeralSystem, Permutation,
};
use hstar_core::simplex::{hstar, local_hstar, omega};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut p = Permutation::identity(n);
    loop {
        out.push(p.clone());
        if !p.next_lex() {
            return out;
        }
    }
}

proptest! {
    #[test]
    fn numeral_round_trip(b in any::<u64>(), r in 2u64..40) {
        let b = BigUint::from(b);
        for sys in [NumeralSystem::Binary, NumeralSystem::Factoradic, NumeralSystem::base(r).unwrap()] {
            let num = to_numeral(&b, &sys);
            prop_assert_eq!(from_numeral(&num).unwrap(), b.clone());
        }
    }
}

#[test]
fn lehmer_bijection_and_descents_exhaustive() {
    for n in 1..=7 {
        for p in all_permutations(n) {
            let code = lehmer_code(&p);
            assert_eq!(permutation_from_lehmer(&code), p);
            assert_eq!(des_lehmer(&code), p.des(), "{p}");
        }
    }
}

#[test]
fn unranking_is_lexicographic() {
    for n in 1..=6 {
        let perms = all_permutations(n);
        assert_eq!(perms.len() as u64, factorial(n).to_u64().unwrap());
        for (b, p) in perms.iter().enumerate() {
            assert_eq!(&unrank_lex(&BigUint::from(b), n).unwrap(), p);
            let digits = to_numeral(&BigUint::from(b), &NumeralSystem::Factoradic).padded(n - 1);
            let code: Vec<BigUint> = lehmer_code(p)
                .entries()
                .iter()
                .map(|&e| BigUint::from(e))
                .collect();
            assert_eq!(digits, code);
        }
        // ascending rank means ascending code strings
        let codes: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| lehmer_code(p).entries().to_vec())
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn heights_equal_descents() {
    for n in 1..=6 {
        let q = factoradic_weights(n).unwrap();
        let total = factorial(n + 1).to_u64().unwrap();
        for b in 0..total {
            let b = BigUint::from(b);
            assert_eq!(
                omega(&q, &b).unwrap(),
                unrank_lex(&b, n + 1).unwrap().des(),
                "n={n} b={b}"
            );
        }
    }
}

#[test]
fn factoradic_paths_agree() {
    for n in 1..=7 {
        let direct = local_hstar(&factoradic_weights(n).unwrap());
        assert_eq!(factoradic_local_hstar_enum(n).unwrap(), direct, "n={n}");
        assert_eq!(
            factoradic_local_hstar_recursive(n).unwrap(),
            direct,
            "n={n}"
        );
    }
}

#[test]
fn hstar_is_eulerian() {
    for n in 1..=7 {
        assert_eq!(
            hstar(&factoradic_weights(n).unwrap()),
            eulerian(n + 1).unwrap()
        );
    }
}

#[test]
fn maxdes_closed_form_matches_enumeration() {
    for n in 1..=8 {
        assert_eq!(maxdes_poly(n).unwrap(), maxdes_poly_enum(n).unwrap());
    }
}

#[test]
fn recursion_rows_stay_real_rooted_and_gamma_nonnegative() {
    for (i, row) in hstar_core::numeral::factoradic_triangle(24)
        .iter()
        .enumerate()
    {
        let n = i + 1;
        let cert = hstar_core::realroot::sturm_certificate(row).unwrap();
        assert!(cert.is_real_rooted(), "n={n}");
        assert_eq!(cert.multiplicities.iter().sum::<usize>(), n, "n={n}");
        assert!(
            row.gamma_expansion(n + 1).unwrap().is_nonnegative(),
            "n={n}"
        );
    }
}
