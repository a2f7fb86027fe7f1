//! Serializable views of library results and deterministic rendering.

use num_rational::BigRational;
use semigraph_core::{
    BoundsReport, CharPoly, ClosedFormSpectrum, Quarter, Semigraph, Spectrum, SymmetricQMatrix,
    UpperBound, UpperVariant, VertexClass,
};
use serde::Serialize;

/// Significant digits kept in every float written by the CLI.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] and folds `-0` into `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Lowest-terms string for a quarter-integer: `"6"`, `"13/2"`, `"7/4"`.
pub fn exact(q: Quarter) -> String {
    q.to_string()
}

pub fn exact_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Eigenvalues below `tol · max(1, λₙ)` in magnitude print as zero.
fn clean_values(values: &[f64], tol: f64) -> Vec<f64> {
    let top = values.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
    values
        .iter()
        .map(|&v| {
            if v.abs() <= tol * top {
                0.0
            } else {
                round_sig(v)
            }
        })
        .collect()
}

#[derive(Serialize)]
pub struct SpectrumJson {
    pub values: Vec<f64>,
    pub tol: f64,
    pub multiplicity_clusters: Vec<(f64, usize)>,
}

impl SpectrumJson {
    pub fn new(s: &Spectrum, gap: f64) -> Self {
        let tol = s.tol().max(f64::EPSILON);
        Self {
            values: clean_values(s.values(), tol),
            tol: s.tol(),
            multiplicity_clusters: s
                .clusters(gap)
                .into_iter()
                .map(|(v, c)| (clean_values(&[v], tol.max(gap))[0], c))
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CharPolyJson {
    /// Ascending powers: `c_0, c_1, …, c_n`.
    pub coefficients: Vec<String>,
    pub polynomial: String,
}

impl CharPolyJson {
    pub fn new(c: &CharPoly) -> Self {
        Self {
            coefficients: c.coefficients().iter().map(exact_rational).collect(),
            polynomial: c.poly().to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsJson {
    pub delta: String,
    pub lower: String,
    pub upper_literal: String,
    pub upper_proof: String,
    pub lambda_n: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub upper_literal_ok: bool,
    pub variant: &'static str,
    pub argmax_pair: [String; 2],
}

impl BoundsJson {
    pub fn new(g: &Semigraph, r: &BoundsReport, variant: UpperVariant) -> Self {
        let chosen: &UpperBound = match variant {
            UpperVariant::Literal => &r.upper_literal,
            UpperVariant::Proof => &r.upper_proof,
        };
        Self {
            delta: exact(r.delta),
            lower: exact(r.lower),
            upper_literal: exact(r.upper_literal.value),
            upper_proof: exact(r.upper_proof.value),
            lambda_n: round_sig(r.lambda_n),
            lower_ok: r.lower_ok,
            upper_ok: match variant {
                UpperVariant::Literal => r.upper_literal_ok,
                UpperVariant::Proof => r.upper_ok,
            },
            upper_literal_ok: r.upper_literal_ok,
            variant: variant.name(),
            argmax_pair: [
                g.label(chosen.argmax.0).to_string(),
                g.label(chosen.argmax.1).to_string(),
            ],
        }
    }
}

#[derive(Serialize)]
pub struct VertexClassCounts {
    pub pure_end: usize,
    pub pure_middle: usize,
    pub middle_end: usize,
    pub isolated: usize,
}

#[derive(Serialize)]
pub struct Summary {
    pub n: usize,
    pub m: usize,
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub m4: usize,
    pub vertex_classes: VertexClassCounts,
}

impl Summary {
    pub fn new(g: &Semigraph) -> Self {
        let census = g.edge_census();
        let count = |c: VertexClass| g.vertex_classes().iter().filter(|&&k| k == c).count();
        Self {
            n: g.n(),
            m: g.m(),
            m1: census.m1,
            m2: census.m2,
            m3: census.m3,
            m4: census.m4,
            vertex_classes: VertexClassCounts {
                pure_end: count(VertexClass::PureEnd),
                pure_middle: count(VertexClass::PureMiddle),
                middle_end: count(VertexClass::MiddleEnd),
                isolated: count(VertexClass::Isolated),
            },
        }
    }
}

#[derive(Serialize)]
pub struct EdgeJson {
    pub vertices: Vec<String>,
    pub class: &'static str,
}

pub fn edges_json(g: &Semigraph) -> Vec<EdgeJson> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| EdgeJson {
            vertices: e
                .vertices()
                .iter()
                .map(|&v| g.label(v).to_string())
                .collect(),
            class: g.edge_class(i).name(),
        })
        .collect()
}

#[derive(Serialize)]
pub struct Connectivity {
    pub combinatorial: bool,
    pub spectral: bool,
    pub lambda2: Option<f64>,
}

#[derive(Serialize)]
pub struct Report {
    pub summary: Summary,
    pub vertices: Vec<String>,
    pub vertex_classes: Vec<&'static str>,
    pub edges: Vec<EdgeJson>,
    pub degrees: Vec<String>,
    pub trace: String,
    pub laplacian: Vec<Vec<String>>,
    pub spectrum: SpectrumJson,
    pub connectivity: Connectivity,
    pub bounds: Option<BoundsJson>,
}

pub fn exact_matrix(m: &SymmetricQMatrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|row| row.iter().map(|&q| exact(q)).collect())
        .collect()
}

/// Real-valued CSV with a label header row and a label column.
pub fn matrix_csv(g: &Semigraph, m: &SymmetricQMatrix, precision: usize) -> String {
    let mut out = String::from("vertex");
    for label in g.labels() {
        out.push(',');
        out.push_str(label);
    }
    out.push('\n');
    for (i, row) in m.rows().enumerate() {
        out.push_str(&g.labels()[i]);
        for q in row {
            out.push(',');
            out.push_str(&fixed(q.to_f64(), precision));
        }
        out.push('\n');
    }
    out
}

pub fn spectrum_csv(s: &SpectrumJson, precision: usize) -> String {
    let mut out = String::from("index,value\n");
    for (i, v) in s.values.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, fixed(*v, precision)));
    }
    out
}

fn fixed(x: f64, precision: usize) -> String {
    let s = format!("{x:.precision$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Serialize)]
pub struct FixedEigenvalue {
    pub value: String,
    pub approx: f64,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct ClosedJson {
    pub fixed: Vec<FixedEigenvalue>,
    pub residual: Vec<String>,
    pub residual_polynomial: String,
    pub values: Vec<f64>,
}

impl ClosedJson {
    pub fn new(c: &ClosedFormSpectrum, values: &[f64]) -> Self {
        Self {
            fixed: c
                .fixed
                .iter()
                .map(|(v, m)| FixedEigenvalue {
                    value: v.to_string(),
                    approx: round_sig(v.to_f64()),
                    multiplicity: *m,
                })
                .collect(),
            residual: c.residual.coeffs().iter().map(exact_rational).collect(),
            residual_polynomial: c.residual.to_string(),
            values: clean_values(values, 1e-12),
        }
    }
}

#[derive(Serialize)]
pub struct BothJson {
    pub closed: ClosedJson,
    pub numeric: SpectrumJson,
    pub max_deviation: f64,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round_sig(5.000000000000001), 5.0);
        assert_eq!(round_sig(1.234567890123456), 1.23456789012);
        assert_eq!(round_sig(-1e-300), -1e-300);
    }

    #[test]
    fn exact_strings() {
        assert_eq!(exact(Quarter::from_quarters(26)), "13/2");
        assert_eq!(exact(Quarter::from_quarters(-8)), "-2");
        assert_eq!(exact(Quarter::from_quarters(7)), "7/4");
    }

    #[test]
    fn fixed_point() {
        assert_eq!(fixed(-0.0000001, 3), "0.000");
        assert_eq!(fixed(-1.5, 2), "-1.50");
    }
}
