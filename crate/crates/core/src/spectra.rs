//! Eigenvalues and characteristic polynomials.
//!
//! Numeric spectra come from a cyclic Jacobi eigensolver on the real view of
//! a [`SymmetricQMatrix`]. Characteristic polynomials are computed exactly
//! with the Faddeev–LeVerrier recurrence over big integers: the matrix is
//! scaled by 4 so every entry is an integer, every intermediate matrix stays
//! integral, and each division by `k` in the recurrence is exact.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::matrix::{laplacian, SymmetricQMatrix};
use crate::model::Semigraph;
use crate::poly::RationalPoly;

/// Relative off-diagonal norm at which Jacobi stops.
pub const DEFAULT_SOLVER_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Relative gap (scaled by `max(1, λₙ)`) separating eigenvalue clusters.
pub const CLUSTER_GAP: f64 = 1e-7;
/// Relative threshold (scaled by `max(1, λₙ)`) above which `λ₂` counts as
/// positive.
pub const CONNECTIVITY_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum SpectraError {
    #[error(
        "Jacobi did not converge after {sweeps} sweeps (relative off-diagonal norm {residual:e})"
    )]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
}

/// Eigenvalues in nondecreasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
    iterations: usize,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Jacobi sweeps performed.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// Largest eigenvalue `λₙ`.
    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Second-smallest eigenvalue, if the order is at least 2.
    pub fn lambda2(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Groups eigenvalues whose consecutive gaps are at most
    /// `gap · max(1, λₙ)`; each cluster is reported as `(mean, count)`.
    pub fn clusters(&self, gap: f64) -> Vec<(f64, usize)> {
        let threshold = gap * self.max().max(1.0);
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=self.values.len() {
            if i == self.values.len() || self.values[i] - self.values[i - 1] > threshold {
                let chunk = &self.values[start..i];
                if !chunk.is_empty() {
                    out.push((chunk.iter().sum::<f64>() / chunk.len() as f64, chunk.len()));
                }
                start = i;
            }
        }
        out
    }

    /// Size of the cluster (at the default gap) containing `value`, or 0.
    pub fn multiplicity_near(&self, value: f64) -> usize {
        let threshold = CLUSTER_GAP * self.max().max(1.0);
        self.clusters(CLUSTER_GAP)
            .into_iter()
            .find(|&(center, _)| (center - value).abs() <= threshold)
            .map_or(0, |(_, count)| count)
    }
}

/// Largest deviation between two multisets of reals under the optimal
/// one-to-one matching (sorted order); `None` if the sizes differ.
pub fn matching_distance(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Some(
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    libm::sqrt(s)
}

/// Eigenvalues of the real view of `m` by cyclic Jacobi rotations, iterated
/// until the off-diagonal Frobenius norm is at most `tol · ‖M‖_F`.
pub fn eigenvalues_sym(m: &SymmetricQMatrix, tol: f64) -> Result<Spectrum, SpectraError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectraError::InvalidTolerance(tol));
    }
    let n = m.order();
    let mut a = m.real_view();
    let norm = m.frobenius_norm();
    let target = tol * norm;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NonConvergence {
                sweeps,
                residual: off / norm,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(Spectrum {
        values,
        tol,
        iterations: sweeps,
    })
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] -= t * apq;
    a[q * n + q] += t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let g = a[r * n + p];
        let h = a[r * n + q];
        let rp = g - s * (h + g * tau);
        let rq = h + s * (g - h * tau);
        a[r * n + p] = rp;
        a[p * n + r] = rp;
        a[r * n + q] = rq;
        a[q * n + r] = rq;
    }
}

/// Exact characteristic polynomial `det(λI − M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    poly: RationalPoly,
}

impl CharPoly {
    pub fn poly(&self) -> &RationalPoly {
        &self.poly
    }

    /// `c_0, …, c_n`.
    pub fn coefficients(&self) -> &[BigRational] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

fn int_matmul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let bkj = &b[k * n + j];
                if !bkj.is_zero() {
                    out[i * n + j] += aik * bkj;
                }
            }
        }
    }
    out
}

/// Faddeev–LeVerrier over exact arithmetic.
pub fn charpoly_exact(m: &SymmetricQMatrix) -> CharPoly {
    let n = m.order();
    // B = 4M is an integer matrix; its characteristic coefficients are
    // integers and relate to those of M by c_k(M) = c_k(B) / 4^(n-k).
    let b: Vec<BigInt> = (0..n * n)
        .map(|idx| BigInt::from(m[(idx / n, idx % n)].quarters()))
        .collect();
    let mut c = alloc::vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = alloc::vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = B·M_{k-1} + c_{n-k+1}·I
        let mut next = int_matmul(&b, &mk, n);
        for i in 0..n {
            next[i * n + i] += &c[n - k + 1];
        }
        let bm = int_matmul(&b, &next, n);
        let trace: BigInt = (0..n).map(|i| bm[i * n + i].clone()).sum();
        let (quot, rem) = trace.div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev–LeVerrier division must be exact");
        c[n - k] = -quot;
        mk = next;
    }
    let four = BigInt::from(4);
    let coeffs = c
        .into_iter()
        .enumerate()
        .map(|(k, ck)| BigRational::new(ck, Pow::pow(&four, (n - k) as u32)))
        .collect();
    CharPoly {
        poly: RationalPoly::new(coeffs),
    }
}

/// True iff the smallest eigenvalue is at least `−tol · ‖M‖_F`.
pub fn is_psd(m: &SymmetricQMatrix, tol: f64) -> Result<bool, SpectraError> {
    let spectrum = eigenvalues_sym(m, DEFAULT_SOLVER_TOL)?;
    Ok(spectrum.min() >= -tol * m.frobenius_norm())
}

pub fn laplacian_spectrum(g: &Semigraph, tol: f64) -> Result<Spectrum, SpectraError> {
    eigenvalues_sym(&laplacian(g), tol)
}

/// `λ₂` of the Laplacian.
pub fn algebraic_connectivity(g: &Semigraph) -> Result<f64, SpectraError> {
    let spectrum = laplacian_spectrum(g, DEFAULT_SOLVER_TOL)?;
    Ok(spectrum
        .lambda2()
        .expect("a semigraph has at least two vertices"))
}

/// Connectivity read off the spectrum: `λ₂ > tol · max(1, λₙ)`.
pub fn is_connected_spectral(g: &Semigraph, tol: f64) -> Result<bool, SpectraError> {
    let spectrum = laplacian_spectrum(g, DEFAULT_SOLVER_TOL)?;
    Ok(spectral_connectivity(&spectrum, tol))
}

/// Connectivity from an already computed Laplacian spectrum.
pub fn spectral_connectivity(spectrum: &Spectrum, tol: f64) -> bool {
    spectrum.lambda2().unwrap_or(0.0) > tol * spectrum.max().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1, tree3_one};
    use crate::poly::rat;

    fn close(a: &[f64], b: &[f64], eps: f64) -> bool {
        matching_distance(a, b).is_some_and(|d| d <= eps)
    }

    #[test]
    fn two_by_two() {
        let m = SymmetricQMatrix::from_quarter_rows(&[&[4, -4], &[-4, 4]]).unwrap();
        let s = eigenvalues_sym(&m, DEFAULT_SOLVER_TOL).unwrap();
        assert!(close(s.values(), &[0.0, 2.0], 1e-12));
        assert_eq!(s.tol(), DEFAULT_SOLVER_TOL);
        assert!(s.iterations() >= 1);
    }

    #[test]
    fn tree_one_spectrum() {
        let s = laplacian_spectrum(&tree3_one(), DEFAULT_SOLVER_TOL).unwrap();
        assert!(close(s.values(), &[0.0, 3.0, 5.0], 1e-12));
    }

    #[test]
    fn star_one_spectrum() {
        let g =
            Semigraph::from_labeled_edges([alloc::vec!["v2", "v1", "v3"], alloc::vec!["v1", "v4"]])
                .unwrap();
        let s = laplacian_spectrum(&g, DEFAULT_SOLVER_TOL).unwrap();
        let r2 = core::f64::consts::SQRT_2;
        assert!(close(s.values(), &[0.0, 2.0 - r2, 2.0 + r2, 5.0], 1e-12));
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let m = SymmetricQMatrix::from_quarter_rows(&[&[8, 0], &[0, -4]]).unwrap();
        let s = eigenvalues_sym(&m, DEFAULT_SOLVER_TOL).unwrap();
        assert_eq!(s.values(), &[-1.0, 2.0]);
        assert_eq!(s.iterations(), 0);
        let zero = SymmetricQMatrix::zeros(3);
        assert_eq!(eigenvalues_sym(&zero, 1e-12).unwrap().values(), &[0.0; 3]);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let m = SymmetricQMatrix::zeros(2);
        assert_eq!(
            eigenvalues_sym(&m, 0.0),
            Err(SpectraError::InvalidTolerance(0.0))
        );
        assert!(eigenvalues_sym(&m, f64::NAN).is_err());
    }

    #[test]
    fn charpoly_small() {
        let m = SymmetricQMatrix::from_quarter_rows(&[&[4, -4], &[-4, 4]]).unwrap();
        assert_eq!(
            charpoly_exact(&m).poly(),
            &RationalPoly::from_ratios(&[(0, 1), (-2, 1), (1, 1)])
        );
        // Quarter-integer entries: [[1/4, -1/4], [-1/4, 1/4]] → λ² − λ/2.
        let m = SymmetricQMatrix::from_quarter_rows(&[&[1, -1], &[-1, 1]]).unwrap();
        assert_eq!(
            charpoly_exact(&m).poly(),
            &RationalPoly::from_ratios(&[(0, 1), (-1, 2), (1, 1)])
        );
        assert_eq!(
            charpoly_exact(&SymmetricQMatrix::zeros(0)).poly(),
            &RationalPoly::one()
        );
    }

    #[test]
    fn charpoly_anchors_on_fig1() {
        let l = laplacian(&fig1());
        let cp = charpoly_exact(&l);
        let c = cp.coefficients();
        assert_eq!(cp.degree(), 7);
        assert!(cp.poly().is_monic());
        assert_eq!(c[6], -l.trace().to_rational());
        assert_eq!(c[6], rat(-69, 2));
        assert!(c[0].is_zero());
    }

    #[test]
    fn psd_checks() {
        let swap = SymmetricQMatrix::from_quarter_rows(&[&[0, 4], &[4, 0]]).unwrap();
        assert!(!is_psd(&swap, 1e-8).unwrap());
        assert!(is_psd(&laplacian(&fig1()), 1e-8).unwrap());
        assert!(is_psd(&crate::matrix::signless(&fig1()), 1e-8).unwrap());
    }

    #[test]
    fn connectivity_from_spectrum() {
        let single = Semigraph::from_labeled_edges([["a", "b"]]).unwrap();
        assert!((algebraic_connectivity(&single).unwrap() - 2.0).abs() < 1e-12);
        let split = Semigraph::from_labeled_edges([["a", "b"], ["c", "d"]]).unwrap();
        assert!(algebraic_connectivity(&split).unwrap().abs() < 1e-12);
        assert!(!is_connected_spectral(&split, CONNECTIVITY_TOL).unwrap());
        assert!(is_connected_spectral(&fig1(), CONNECTIVITY_TOL).unwrap());
        assert!((algebraic_connectivity(&tree3_one()).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn clusters_and_multiplicity() {
        let s = Spectrum {
            values: alloc::vec![0.0, 0.5, 0.5 + 1e-10, 0.5, 3.0],
            tol: 1e-12,
            iterations: 1,
        };
        let cl = s.clusters(CLUSTER_GAP);
        assert_eq!(cl.len(), 3);
        assert_eq!(cl[1].1, 3);
        assert_eq!(s.multiplicity_near(0.5), 3);
        assert_eq!(s.multiplicity_near(2.0), 0);
    }

    #[test]
    fn matching_distance_sorts() {
        assert_eq!(matching_distance(&[3.0, 1.0], &[1.5, 3.0]), Some(0.5));
        assert_eq!(matching_distance(&[1.0], &[]), None);
    }
}
