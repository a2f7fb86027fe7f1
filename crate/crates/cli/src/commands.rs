//! Subcommand bodies. Each returns the text destined for stdout; failures
//! carry their exit code.

use std::io::Read;
use std::path::PathBuf;

use semigraph_core::spectra::{CLUSTER_GAP, CONNECTIVITY_TOL};
use semigraph_core::{
    bounds_report, charpoly_exact, components, gen_star, gen_tree3, is_connected, laplacian,
    laplacian_spectrum, matching_distance, spectral_connectivity, star_spectrum_closed,
    tree3_spectrum_closed, BoundsError, FamilyError, Semigraph, SpectraError, UpperVariant,
};
use thiserror::Error;

use crate::format::{emit, parse, FormatError};
use crate::output::{
    edges_json, exact, exact_matrix, matrix_csv, spectrum_csv, to_json, BothJson, BoundsJson,
    CharPolyJson, ClosedJson, Connectivity, Report, SpectrumJson, Summary,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid semigraph: {0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Usage(String),
    #[error("bounds refused: {0}")]
    Refused(String),
    #[error("numeric failure: {0}")]
    Numeric(SpectraError),
}

impl CliError {
    /// 1 I/O, 2 validation, 3 numeric non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Format(_) | CliError::Usage(_) | CliError::Refused(_) => 2,
            CliError::Numeric(SpectraError::InvalidTolerance(_)) => 2,
            CliError::Numeric(SpectraError::NonConvergence { .. }) => 3,
        }
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        CliError::Numeric(e)
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn refuse(g: &Semigraph, err: BoundsError) -> CliError {
    match err {
        BoundsError::Spectra(e) => CliError::Numeric(e),
        BoundsError::Disconnected => CliError::Refused(format!(
            "the eigenvalue bounds assume a connected semigraph; this input has {} components",
            components(g).len()
        )),
        BoundsError::Edgeless => {
            CliError::Refused("the eigenvalue bounds assume at least one edge".into())
        }
        other => CliError::Refused(other.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Source path, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(PathBuf::from(path)).map(|t| text = t)
    };
    result.map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    Ok(text)
}

pub fn load(path: &str) -> Result<Semigraph, CliError> {
    Ok(parse(&read_input(path)?)?)
}

fn check_tol(tol: f64) -> Result<f64, CliError> {
    if tol.is_finite() && tol > 0.0 && tol < 1.0 {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!(
            "--tol must lie in (0, 1), got {tol}"
        )))
    }
}

pub fn validate(g: &Semigraph) -> String {
    let c = g.edge_census();
    format!(
        "valid semigraph: n={} m={} m1={} m2={} m3={} m4={} connected={}\n",
        g.n(),
        g.m(),
        c.m1,
        c.m2,
        c.m3,
        c.m4,
        is_connected(g)
    )
}

pub fn report(
    g: &Semigraph,
    format: Format,
    tol: f64,
    precision: usize,
) -> Result<String, CliError> {
    let tol = check_tol(tol)?;
    let l = laplacian(g);
    if format == Format::Csv {
        return Ok(matrix_csv(g, &l, precision));
    }
    let spectrum = laplacian_spectrum(g, tol)?;
    let combinatorial = is_connected(g);
    let bounds = if combinatorial && g.m() > 0 {
        let r = bounds_report(g).map_err(|e| refuse(g, e))?;
        Some(BoundsJson::new(g, &r, UpperVariant::Proof))
    } else {
        None
    };
    let report = Report {
        summary: Summary::new(g),
        vertices: g.labels().to_vec(),
        vertex_classes: g.vertex_classes().iter().map(|c| c.name()).collect(),
        edges: edges_json(g),
        degrees: l.rows().enumerate().map(|(i, row)| exact(row[i])).collect(),
        trace: exact(l.trace()),
        laplacian: exact_matrix(&l),
        connectivity: Connectivity {
            combinatorial,
            spectral: spectral_connectivity(&spectrum, CONNECTIVITY_TOL),
            lambda2: spectrum.lambda2().map(crate::output::round_sig),
        },
        spectrum: SpectrumJson::new(&spectrum, CLUSTER_GAP),
        bounds,
    };
    Ok(to_json(&report))
}

pub fn spectrum(
    g: &Semigraph,
    format: Format,
    tol: f64,
    precision: usize,
) -> Result<String, CliError> {
    let s = SpectrumJson::new(&laplacian_spectrum(g, check_tol(tol)?)?, CLUSTER_GAP);
    Ok(match format {
        Format::Json => to_json(&s),
        Format::Csv => spectrum_csv(&s, precision),
    })
}

pub fn bounds(g: &Semigraph, variant: UpperVariant) -> Result<String, CliError> {
    let r = bounds_report(g).map_err(|e| refuse(g, e))?;
    Ok(to_json(&BoundsJson::new(g, &r, variant)))
}

pub fn charpoly(g: &Semigraph) -> String {
    to_json(&CharPolyJson::new(&charpoly_exact(&laplacian(g))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Star,
    Tree3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMode {
    Closed,
    Numeric,
    Both,
}

pub fn gen(family: Family, n: usize, mode: Option<SpectrumMode>) -> Result<String, CliError> {
    let (g, closed) = match family {
        Family::Star => (gen_star(n)?, star_spectrum_closed(n)?),
        Family::Tree3 => (gen_tree3(n)?, tree3_spectrum_closed(n)?),
    };
    let Some(mode) = mode else {
        return Ok(emit(&g));
    };
    let closed_values = closed.eigenvalues()?;
    let closed_json = || ClosedJson::new(&closed, &closed_values);
    Ok(match mode {
        SpectrumMode::Closed => to_json(&closed_json()),
        SpectrumMode::Numeric => spectrum(
            &g,
            Format::Json,
            semigraph_core::spectra::DEFAULT_SOLVER_TOL,
            0,
        )?,
        SpectrumMode::Both => {
            let numeric = laplacian_spectrum(&g, semigraph_core::spectra::DEFAULT_SOLVER_TOL)?;
            let deviation =
                matching_distance(numeric.values(), &closed_values).expect("orders agree");
            to_json(&BothJson {
                closed: closed_json(),
                numeric: SpectrumJson::new(&numeric, CLUSTER_GAP),
                max_deviation: crate::output::round_sig(deviation),
            })
        }
    })
}
