//! The computation report and its JSON / CSV / LaTeX projections.

use std::fmt::Write as _;

use hstar_core::poly::IntPolynomial;
use hstar_core::realroot::is_real_rooted;
use hstar_core::simplex::WeightVector;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Integers above this magnitude are written as decimal strings.
const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

/// An exact integer that serializes as a JSON number when a double can hold
/// it, and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.abs() <= MAX_SAFE_INTEGER => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<T: Into<BigInt>> From<T> for JsonInt {
    fn from(v: T) -> Self {
        JsonInt(v.into())
    }
}

/// Coefficients lowest degree first, zero-padded to `len` entries.
pub fn padded_coeffs(p: &IntPolynomial, len: usize) -> Vec<JsonInt> {
    (0..len.max(p.coeffs().len()))
        .map(|i| JsonInt(p.coeff(i)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enum,
    Recursion,
    Formula,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Enum => "enum",
            Method::Recursion => "recursion",
            Method::Formula => "formula",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Properties {
    pub symmetric_center: Option<usize>,
    pub unimodal: bool,
    pub log_concave: bool,
    pub real_rooted: bool,
    pub gamma: Option<Vec<JsonInt>>,
    pub t_set_size: JsonInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub method: Method,
    pub oracle_checked: bool,
    pub runtime_ms: Option<u64>,
}

/// Field order here is the JSON key order.
#[derive(Clone, Debug, Serialize)]
pub struct ComputationReport {
    pub q: Vec<JsonInt>,
    #[serde(rename = "Q")]
    pub volume: JsonInt,
    pub hstar: Vec<JsonInt>,
    pub local_hstar: Vec<JsonInt>,
    pub properties: Properties,
    pub provenance: Provenance,
}

impl ComputationReport {
    /// Builds a report; the distributional properties describe `local`.
    pub fn new(
        q: &WeightVector,
        hstar: &IntPolynomial,
        local: &IntPolynomial,
        method: Method,
    ) -> Self {
        let n = q.dim();
        let center = n + 1;
        let symmetric = local.is_symmetric(center);
        let gamma = symmetric
            .then(|| local.gamma_expansion(center).ok())
            .flatten()
            .map(|g| g.gammas.into_iter().map(JsonInt).collect());
        ComputationReport {
            q: q.weights()
                .iter()
                .map(|x| JsonInt(x.clone().into()))
                .collect(),
            volume: JsonInt(q.normalized_volume().into()),
            hstar: padded_coeffs(hstar, n + 1),
            local_hstar: padded_coeffs(local, n + 1),
            properties: Properties {
                symmetric_center: symmetric.then_some(center),
                unimodal: local.is_unimodal().unwrap_or(false),
                log_concave: local.is_log_concave().unwrap_or(false),
                real_rooted: is_real_rooted(local),
                gamma,
                t_set_size: JsonInt(local.eval_at_one()),
            },
            provenance: Provenance {
                method,
                oracle_checked: false,
                runtime_ms: None,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,hstar,local_hstar\n");
        for (k, (h, l)) in self.hstar.iter().zip(&self.local_hstar).enumerate() {
            writeln!(out, "{k},{},{}", h.0, l.0).unwrap();
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let cols = self.hstar.len();
        let mut out = format!("\\begin{{tabular}}{{l{}}}\n", "r".repeat(cols));
        let row = |name: &str, v: &[JsonInt]| {
            let cells: Vec<String> = v.iter().map(|c| c.0.to_string()).collect();
            format!("{name} & {} \\\\\n", cells.join(" & "))
        };
        let degrees: Vec<String> = (0..cols).map(|k| format!("$z^{{{k}}}$")).collect();
        writeln!(out, " & {} \\\\ \\hline", degrees.join(" & ")).unwrap();
        out += &row("$h^*$", &self.hstar);
        out += &row("$\\ell^*$", &self.local_hstar);
        out += "\\end{tabular}\n";
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv(),
            Format::Latex => self.to_latex(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Renders a coefficient list for messages: `[0, 1, 6, 1]`.
pub fn bracketed(p: &IntPolynomial) -> String {
    let cells: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", cells.join(", "))
}
