//! Command implementations. Each returns the text to print or a [`CliError`]
//! carrying the exit code.

use std::fmt::Write as _;
use std::time::Instant;

use hstar_core::baser::{
    base2_local_supp, base_r_hstar, base_r_local_hstar, base_r_weights, f_sections,
    hstar_from_sections, local_hstar_from_sections, section_step,
};
use hstar_core::numeral::{
    eulerian, eulerian_by_recurrence, factoradic_local_hstar_enum,
    factoradic_local_hstar_recursive, factoradic_triangle, factoradic_weights,
};
use hstar_core::poly::IntPolynomial;
use hstar_core::realroot::sturm_certificate;
use hstar_core::simplex::{
    check_scan, coefficient_map, hstar, local_hstar, oracle_enumerate, WeightVector,
};
use hstar_core::Error;
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::report::{bracketed, ComputationReport, Format, JsonInt, Method};
use crate::Family;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Guard(String),
    Mismatch(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Guard(m) => write!(f, "scale guard: {m}"),
            CliError::Mismatch(m) => write!(f, "verification mismatch: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ScaleGuard { bound } => CliError::Guard(bound),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Compares both polynomials with the lattice-point oracle.
pub fn oracle_check(
    q: &WeightVector,
    h: &IntPolynomial,
    local: &IntPolynomial,
) -> Result<(), CliError> {
    let open = oracle_enumerate(q, true)?;
    if open != coefficient_map(local) {
        return Err(CliError::Mismatch(format!(
            "q={q}: oracle open tally {open:?} differs from local h* {}",
            bracketed(local)
        )));
    }
    let half_open = oracle_enumerate(q, false)?;
    if half_open != coefficient_map(h) {
        return Err(CliError::Mismatch(format!(
            "q={q}: oracle half-open tally {half_open:?} differs from h* {}",
            bracketed(h)
        )));
    }
    Ok(())
}

fn finish(
    mut report: ComputationReport,
    started: Instant,
    oracle_checked: bool,
    timing: bool,
) -> ComputationReport {
    report.provenance.oracle_checked = oracle_checked;
    if timing {
        report.provenance.runtime_ms = Some(started.elapsed().as_millis() as u64);
    }
    report
}

pub fn simplex(
    q: &WeightVector,
    oracle: bool,
    timing: bool,
) -> Result<ComputationReport, CliError> {
    let started = Instant::now();
    check_scan(q)?;
    let h = hstar(q);
    let local = local_hstar(q);
    if oracle {
        oracle_check(q, &h, &local)?;
    }
    let report = ComputationReport::new(q, &h, &local, Method::Formula);
    Ok(finish(report, started, oracle, timing))
}

pub struct FamilyRequest {
    pub family: Family,
    pub n: usize,
    pub r: Option<u64>,
    pub method: Method,
    pub compare: bool,
    pub oracle: bool,
    pub timing: bool,
}

fn base(req: &FamilyRequest) -> Result<u64, CliError> {
    match (req.family, req.r) {
        (Family::BaseR, Some(r)) => Ok(r),
        (Family::BaseR, None) => Err(CliError::Usage("base-r requires --r".into())),
        (_, Some(_)) => Err(CliError::Usage("--r only applies to base-r".into())),
        (_, None) => Ok(0),
    }
}

fn family_weights(family: Family, n: usize, r: u64) -> Result<WeightVector, CliError> {
    Ok(match family {
        Family::Factoradic => factoradic_weights(n)?,
        Family::BaseR => base_r_weights(r, n)?,
        Family::Projective => WeightVector::new(vec![BigUint::from(1u32); n])?,
    })
}

fn methods(family: Family) -> &'static [Method] {
    match family {
        Family::Projective => &[Method::Enum, Method::Formula],
        _ => &[Method::Enum, Method::Recursion, Method::Formula],
    }
}

fn scan(q: &WeightVector) -> Result<(IntPolynomial, IntPolynomial), CliError> {
    check_scan(q)?;
    Ok((hstar(q), local_hstar(q)))
}

/// `(h*, ℓ*)` of the family member by one method.
fn compute(
    family: Family,
    n: usize,
    r: u64,
    q: &WeightVector,
    method: Method,
) -> Result<(IntPolynomial, IntPolynomial), CliError> {
    match (family, method) {
        (Family::Factoradic, Method::Enum) => {
            Ok((eulerian(n + 1)?, factoradic_local_hstar_enum(n)?))
        }
        (Family::Factoradic, Method::Recursion) => Ok((
            eulerian_by_recurrence(n + 1)?,
            factoradic_local_hstar_recursive(n)?,
        )),
        (Family::BaseR, Method::Formula) => Ok((base_r_hstar(r, n)?, base_r_local_hstar(r, n)?)),
        (Family::BaseR, Method::Recursion) => {
            let mut prev = f_sections(r, 0)?;
            for _ in 1..n {
                prev = section_step(&prev);
            }
            let local = local_hstar_from_sections(&prev);
            Ok((hstar_from_sections(&section_step(&prev)), local))
        }
        (Family::Projective, Method::Formula) => {
            let ones = |from: usize| {
                IntPolynomial::new((0..=n).map(|k| BigInt::from(u8::from(k >= from))).collect())
            };
            Ok((ones(0), ones(1)))
        }
        (Family::Projective, Method::Recursion) => Err(CliError::Usage(
            "projective family has no recursion method; use enum or formula".into(),
        )),
        (Family::Factoradic, Method::Formula) | (_, Method::Enum) => scan(q),
    }
}

pub fn family(req: &FamilyRequest) -> Result<ComputationReport, CliError> {
    let started = Instant::now();
    let r = base(req)?;
    let q = family_weights(req.family, req.n, r)?;
    let (h, local) = compute(req.family, req.n, r, &q, req.method)?;

    if req.compare {
        for &other in methods(req.family) {
            if other == req.method {
                continue;
            }
            let (h2, local2) = match compute(req.family, req.n, r, &q, other) {
                Err(CliError::Guard(bound)) => {
                    eprintln!("note: {} skipped: {bound}", other.name());
                    continue;
                }
                result => result?,
            };
            if h2 != h || local2 != local {
                return Err(CliError::Mismatch(format!(
                    "{} gives h*={} l*={}, {} gives h*={} l*={}",
                    req.method.name(),
                    bracketed(&h),
                    bracketed(&local),
                    other.name(),
                    bracketed(&h2),
                    bracketed(&local2)
                )));
            }
        }
        if req.family == Family::BaseR && r == 2 {
            match base2_local_supp(req.n) {
                Ok(supp) if supp != local => {
                    return Err(CliError::Mismatch(format!(
                        "binary support count gives {}, {} gives {}",
                        bracketed(&supp),
                        req.method.name(),
                        bracketed(&local)
                    )));
                }
                Err(Error::ScaleGuard { bound }) => {
                    eprintln!("note: binary support count skipped: {bound}");
                }
                other => {
                    other?;
                }
            }
        }
    }

    if req.oracle {
        oracle_check(&q, &h, &local)?;
    }
    let report = ComputationReport::new(&q, &h, &local, req.method);
    Ok(finish(report, started, req.oracle, req.timing))
}

#[derive(Serialize)]
struct PropsReport {
    poly: Vec<JsonInt>,
    center: Option<usize>,
    symmetric: bool,
    symmetry_error: Option<String>,
    unimodal: Option<bool>,
    log_concave: Option<bool>,
    real_rooted: bool,
    real_root_count: Option<usize>,
    gamma: Option<Vec<JsonInt>>,
}

pub fn props(coeffs: &[BigInt], center: Option<usize>) -> Result<String, CliError> {
    let p = IntPolynomial::new(coeffs.to_vec());
    let center = center.or_else(|| Some(p.lowest_degree()? + p.degree()?));
    let (symmetric, symmetry_error, gamma) = match center {
        Some(m) => match p.gamma_expansion(m) {
            Ok(g) => (
                true,
                None,
                Some(g.gammas.into_iter().map(JsonInt).collect()),
            ),
            Err(e) => (p.is_symmetric(m), Some(e.to_string()), None),
        },
        None => (
            false,
            Some("zero polynomial has no symmetry center".into()),
            None,
        ),
    };
    let cert = sturm_certificate(&p).ok();
    let report = PropsReport {
        poly: coeffs.iter().cloned().map(JsonInt).collect(),
        center,
        symmetric,
        symmetry_error,
        unimodal: p.is_unimodal().ok(),
        log_concave: p.is_log_concave().ok(),
        real_rooted: cert.as_ref().is_some_and(|c| c.is_real_rooted()),
        real_root_count: cert.map(|c| c.real_root_count),
        gamma,
    };
    Ok(serde_json::to_string_pretty(&report).expect("props serialize") + "\n")
}

pub const TRIANGLE_INDEXING: &str = "\
Row n (n = 1, 2, ...) lists the coefficients of the local h*-polynomial of the
n-dimensional factoradic simplex, from z^1 up to z^n. The constant term is
always 0 and is omitted, so row n has exactly n entries. The simplex for row n
has normalized volume (n+1)!, and its weights are the nonconstant coefficients
of the maxDes polynomial of the symmetric group on n+1 letters.

Tables that label rows by the size of that symmetric group put the row [1, 6, 1]
at index 4; here it is row 3, matching the dimension of the simplex.
";

/// Rows `1..=rows` of the factoradic triangle, constant term dropped.
pub fn triangle_rows(rows: usize) -> Vec<Vec<BigInt>> {
    factoradic_triangle(rows)
        .into_iter()
        .map(|p| p.coeffs()[1..].to_vec())
        .collect()
}

pub fn triangle(rows: usize, format: Format) -> String {
    let rows = triangle_rows(rows);
    if rows.is_empty() {
        return String::new();
    }
    let cells = |row: &[BigInt], sep: &str| {
        row.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            out.push_str("[\n");
            for (i, row) in rows.iter().enumerate() {
                let json: Vec<JsonInt> = row.iter().cloned().map(JsonInt).collect();
                let comma = if i + 1 < rows.len() { "," } else { "" };
                writeln!(out, "  {}{comma}", serde_json::to_string(&json).unwrap()).unwrap();
            }
            out.push_str("]\n");
        }
        Format::Csv => {
            out.push_str("n,coefficients\n");
            for (i, row) in rows.iter().enumerate() {
                writeln!(out, "{},\"{}\"", i + 1, cells(row, ",")).unwrap();
            }
        }
        Format::Latex => {
            out.push_str("\\begin{array}{c}\n");
            for row in &rows {
                writeln!(out, "{} \\\\", cells(row, " \\quad ")).unwrap();
            }
            out.push_str("\\end{array}\n");
        }
    }
    out
}
