//! The `verify` battery: oracle checks and cross-method agreement on small
//! members of every family.

use std::fmt::Write as _;

use hstar_core::baser::{base2_local_supp, base_r_local_hstar, base_r_weights};
use hstar_core::numeral::{
    eulerian, factoradic_local_hstar_enum, factoradic_local_hstar_recursive, factoradic_weights,
};
use hstar_core::poly::IntPolynomial;
use hstar_core::realroot::is_real_rooted;
use hstar_core::simplex::{hstar, local_hstar, WeightVector};

use crate::commands::{oracle_check, CliError};

type Check = Result<(), String>;

fn agree(what: &str, a: &IntPolynomial, b: &IntPolynomial) -> Check {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {a} vs {b}"))
    }
}

fn oracle(q: &[u64]) -> Check {
    let q = WeightVector::from_u64s(q).map_err(|e| e.to_string())?;
    oracle_check(&q, &hstar(&q), &local_hstar(&q)).map_err(|e| e.to_string())
}

fn factoradic(n: usize) -> Check {
    let q = factoradic_weights(n).map_err(|e| e.to_string())?;
    let scan = local_hstar(&q);
    let en = factoradic_local_hstar_enum(n).map_err(|e| e.to_string())?;
    let rec = factoradic_local_hstar_recursive(n).map_err(|e| e.to_string())?;
    agree("enum vs scan", &en, &scan)?;
    agree("recursion vs scan", &rec, &scan)?;
    agree(
        "h* vs eulerian",
        &hstar(&q),
        &eulerian(n + 1).map_err(|e| e.to_string())?,
    )?;
    if !rec.is_symmetric(n + 1) || !is_real_rooted(&rec) {
        return Err(format!("{rec} is not symmetric and real-rooted"));
    }
    Ok(())
}

fn base_r(r: u64, n: usize) -> Check {
    let q = base_r_weights(r, n).map_err(|e| e.to_string())?;
    let formula = base_r_local_hstar(r, n).map_err(|e| e.to_string())?;
    agree("formula vs scan", &formula, &local_hstar(&q))?;
    if r == 2 {
        agree(
            "formula vs binary support",
            &formula,
            &base2_local_supp(n).map_err(|e| e.to_string())?,
        )?;
    }
    if !is_real_rooted(&formula) {
        return Err(format!("{formula} is not real-rooted"));
    }
    Ok(())
}

pub fn run() -> Result<String, CliError> {
    let mut checks: Vec<(String, Check)> = Vec::new();
    for q in [
        &[1][..],
        &[1, 1],
        &[2, 3],
        &[1, 2],
        &[2, 6],
        &[3, 8, 12],
        &[1, 1, 1, 1],
        &[1, 2, 4, 8],
    ] {
        checks.push((format!("oracle q={q:?}"), oracle(q)));
    }
    for n in 1..=6 {
        checks.push((format!("factoradic n={n}"), factoradic(n)));
    }
    for r in 2..=5 {
        for n in 1..=4 {
            checks.push((format!("base-r r={r} n={n}"), base_r(r, n)));
        }
    }

    let mut out = String::new();
    let mut failed = 0;
    for (name, check) in &checks {
        match check {
            Ok(()) => writeln!(out, "PASS  {name}").unwrap(),
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL  {name}: {why}").unwrap();
            }
        }
    }
    writeln!(out, "{} passed, {failed} failed", checks.len() - failed).unwrap();
    if failed > 0 {
        print!("{out}");
        return Err(CliError::Mismatch(format!("{failed} verify checks failed")));
    }
    Ok(out)
}
