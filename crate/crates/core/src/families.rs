//! Two semigraph families with closed-form Laplacian spectra.
//!
//! * `S³₂,ₙ` ([`gen_star`]): one 3-edge `(v2, v1, v3)` through the centre
//!   `v1` plus `n` spokes `(v1, v_k)`. The centre is a middle-end vertex, so
//!   every spoke is a half edge of weight `1/2`. Spectrum: `0`, `1/2` with
//!   multiplicity `n − 1`, and the roots of
//!   `λ³ − ((n+17)/2)λ² + (19+3n)λ − (5n+15)/2`.
//! * `T³ₙ` ([`gen_tree3`]): `n` full 3-edges `(v1, v_{2i}, v_{2i+1})` sharing
//!   the root `v1`. Spectrum: `0`, `(5 ± √5)/2` each with multiplicity
//!   `n − 1`, and the roots of `λ² − (3n+5)λ + 10n + 5`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::model::{Semigraph, VertexId};
use crate::poly::{rat, RationalPoly};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum FamilyError {
    #[error("family parameter n must be at least 1, got {0}")]
    InvalidParameter(usize),
    #[error("cubic has complex roots (relative discriminant {0:e})")]
    ComplexRoots(f64),
    #[error("residual polynomial of degree {0} is not supported")]
    UnsupportedResidual(usize),
}

fn labelled(count: usize) -> Vec<String> {
    (1..=count).map(|k| format!("v{k}")).collect()
}

/// `S³₂,ₙ` on `n + 3` vertices `v1 … v_{n+3}`.
pub fn gen_star(n: usize) -> Result<Semigraph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter(n));
    }
    let mut edges = Vec::with_capacity(n + 1);
    edges.push(alloc::vec![VertexId(1), VertexId(0), VertexId(2)]);
    edges.extend((3..n + 3).map(|k| alloc::vec![VertexId(0), VertexId(k)]));
    Ok(Semigraph::new(labelled(n + 3), edges).expect("star construction is valid"))
}

/// `T³ₙ` on `2n + 1` vertices `v1 … v_{2n+1}`.
pub fn gen_tree3(n: usize) -> Result<Semigraph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter(n));
    }
    let edges = (1..=n)
        .map(|i| alloc::vec![VertexId(0), VertexId(2 * i - 1), VertexId(2 * i)])
        .collect();
    Ok(Semigraph::new(labelled(2 * n + 1), edges).expect("tree construction is valid"))
}

/// `a + b·√d` with rational `a`, `b` and square-free `d ≥ 2` (or `b = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: BigRational,
    pub coeff: BigRational,
    pub radicand: u32,
}

impl QuadraticSurd {
    pub fn rational(value: BigRational) -> Self {
        Self {
            rational: value,
            coeff: BigRational::zero(),
            radicand: 1,
        }
    }

    pub fn new(rational: BigRational, coeff: BigRational, radicand: u32) -> Self {
        Self {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rational: self.rational.clone(),
            coeff: -self.coeff.clone(),
            radicand: self.radicand,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.coeff.to_f64().unwrap_or(f64::NAN);
        a + b * libm::sqrt(f64::from(self.radicand))
    }

    /// Monic polynomial with rational coefficients of least degree vanishing
    /// at this value: `λ − a`, or `λ² − 2aλ + (a² − b²d)`.
    pub fn minimal_polynomial(&self) -> RationalPoly {
        if self.is_rational() {
            return RationalPoly::linear(self.rational.clone());
        }
        let a = &self.rational;
        let b = &self.coeff;
        let d = BigRational::from_integer(BigInt::from(self.radicand));
        let c0 = a * a - b * b * d;
        let c1 = -(a + a);
        RationalPoly::new(alloc::vec![c0, c1, BigRational::from_integer(1.into())])
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let sign = if self.coeff.is_negative() { '-' } else { '+' };
        let mag = self.coeff.abs();
        if self.rational.is_zero() {
            write!(f, "{}", if self.coeff.is_negative() { "-" } else { "" })?;
        } else {
            write!(f, "{} {sign} ", self.rational)?;
        }
        if mag == BigRational::from_integer(1.into()) {
            write!(f, "√{}", self.radicand)
        } else {
            write!(f, "({mag})√{}", self.radicand)
        }
    }
}

/// Spectrum as fixed exact eigenvalues with multiplicities plus a residual
/// polynomial whose real roots supply the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormSpectrum {
    pub fixed: Vec<(QuadraticSurd, usize)>,
    pub residual: RationalPoly,
}

impl ClosedFormSpectrum {
    /// Matrix order: fixed multiplicities plus the residual degree.
    pub fn order(&self) -> usize {
        self.fixed.iter().map(|(_, m)| m).sum::<usize>() + self.residual.degree().unwrap_or(0)
    }

    /// `Π (λ − fixed)^mult · residual`. Irrational fixed values must appear
    /// together with their conjugate at equal multiplicity.
    pub fn exact_polynomial(&self) -> RationalPoly {
        let mut out = self.residual.clone();
        for (value, mult) in &self.fixed {
            if value.is_rational() {
                out = &out * &RationalPoly::linear(value.rational.clone()).pow(*mult);
            } else if value.coeff.is_positive() {
                debug_assert!(self.fixed.contains(&(value.conjugate(), *mult)));
                out = &out * &value.minimal_polynomial().pow(*mult);
            }
        }
        out
    }

    /// Real roots of the residual, ascending.
    pub fn residual_roots(&self) -> Result<Vec<f64>, FamilyError> {
        let c = self.residual.coeffs_f64();
        match self.residual.degree() {
            Some(0) | None => Ok(Vec::new()),
            Some(1) => Ok(alloc::vec![-c[0] / c[1]]),
            Some(2) => solve_quadratic_real(c[1] / c[2], c[0] / c[2]).map(|r| r.to_vec()),
            Some(3) => solve_cubic_real(c[2] / c[3], c[1] / c[3], c[0] / c[3]).map(|r| r.to_vec()),
            Some(d) => Err(FamilyError::UnsupportedResidual(d)),
        }
    }

    /// Every eigenvalue with multiplicity, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, FamilyError> {
        let mut out: Vec<f64> = self
            .fixed
            .iter()
            .flat_map(|(v, m)| core::iter::repeat_n(v.to_f64(), *m))
            .collect();
        out.extend(self.residual_roots()?);
        out.sort_by(f64::total_cmp);
        Ok(out)
    }
}

fn fixed_entry(value: QuadraticSurd, mult: usize, out: &mut Vec<(QuadraticSurd, usize)>) {
    if mult > 0 {
        out.push((value, mult));
    }
}

/// Closed-form spectrum of `L(S³₂,ₙ)`.
pub fn star_spectrum_closed(n: usize) -> Result<ClosedFormSpectrum, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter(n));
    }
    let k = n as i64;
    let mut fixed = Vec::new();
    fixed_entry(QuadraticSurd::rational(rat(0, 1)), 1, &mut fixed);
    fixed_entry(QuadraticSurd::rational(rat(1, 2)), n - 1, &mut fixed);
    let residual =
        RationalPoly::from_ratios(&[(-(5 * k + 15), 2), (19 + 3 * k, 1), (-(k + 17), 2), (1, 1)]);
    Ok(ClosedFormSpectrum { fixed, residual })
}

/// Closed-form spectrum of `L(T³ₙ)`.
pub fn tree3_spectrum_closed(n: usize) -> Result<ClosedFormSpectrum, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter(n));
    }
    let k = n as i64;
    let mut fixed = Vec::new();
    fixed_entry(QuadraticSurd::rational(rat(0, 1)), 1, &mut fixed);
    fixed_entry(
        QuadraticSurd::new(rat(5, 2), rat(-1, 2), 5),
        n - 1,
        &mut fixed,
    );
    fixed_entry(
        QuadraticSurd::new(rat(5, 2), rat(1, 2), 5),
        n - 1,
        &mut fixed,
    );
    let residual = RationalPoly::from_ratios(&[(10 * k + 5, 1), (-(3 * k + 5), 1), (1, 1)]);
    Ok(ClosedFormSpectrum { fixed, residual })
}

/// Real roots of `λ² + c1·λ + c0`, ascending.
pub fn solve_quadratic_real(c1: f64, c0: f64) -> Result<[f64; 2], FamilyError> {
    let disc = c1 * c1 - 4.0 * c0;
    let scale = (c1 * c1).max(c0.abs()).max(1.0);
    if disc < -1e-6 * scale {
        return Err(FamilyError::ComplexRoots(disc / scale));
    }
    let root = libm::sqrt(disc.max(0.0));
    // Avoid cancellation: take the larger-magnitude root first.
    let big = -0.5 * (c1 + c1.signum() * root);
    let (a, b) = if big == 0.0 {
        (0.0, 0.0)
    } else {
        (big, c0 / big)
    };
    Ok(if a <= b { [a, b] } else { [b, a] })
}

/// Three real roots of `λ³ + c2·λ² + c1·λ + c0`, ascending, by the
/// trigonometric method followed by one Newton step per root.
pub fn solve_cubic_real(c2: f64, c1: f64, c0: f64) -> Result<[f64; 3], FamilyError> {
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    // Characteristic root magnitude, for relative comparisons.
    let scale = 1f64
        .max(c2.abs())
        .max(libm::sqrt(c1.abs()))
        .max(libm::cbrt(c0.abs()));
    let disc = -(4.0 * p * p * p + 27.0 * q * q);
    let s3 = scale * scale * scale;
    let rel = disc / (s3 * s3);
    if rel < -1e-6 {
        return Err(FamilyError::ComplexRoots(rel));
    }

    let mut roots = if p.abs() <= 1e-14 * scale * scale {
        let t = libm::cbrt(-q);
        [t; 3]
    } else {
        let p = p.min(0.0);
        let m = 2.0 * libm::sqrt(-p / 3.0);
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let phi = libm::acos(arg) / 3.0;
        [0, 1, 2].map(|k| m * libm::cos(phi - 2.0 * PI * f64::from(k) / 3.0))
    };

    let f = |x: f64| ((x + c2) * x + c1) * x + c0;
    let df = |x: f64| (3.0 * x + 2.0 * c2) * x + c1;
    for r in &mut roots {
        *r -= shift;
        let slope = df(*r);
        if slope.abs() > 1e-12 * scale * scale {
            *r -= f(*r) / slope;
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}
