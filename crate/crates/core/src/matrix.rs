//! Exact assembly of the adjacency, degree, Laplacian and signless Laplacian
//! matrices, per-edge Laplacians, and the edge-wise sum-of-squares form of
//! `xᵀLx`.

use alloc::vec::Vec;
use core::ops::Index;

use thiserror::Error;

use crate::model::{Edge, ModelError, PairKind, Semigraph, VertexId};
use crate::quarter::Quarter;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
}

/// Dense symmetric matrix of quarter-integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricQMatrix {
    order: usize,
    entries: Vec<Quarter>,
}

impl SymmetricQMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: alloc::vec![Quarter::ZERO; order * order],
        }
    }

    /// Builds a matrix from rows, rejecting ragged or asymmetric input.
    pub fn from_rows(rows: &[Vec<Quarter>]) -> Result<Self, MatrixError> {
        let order = rows.len();
        let mut m = Self::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(MatrixError::Ragged {
                    row: i,
                    len: row.len(),
                    expected: order,
                });
            }
            m.entries[i * order..(i + 1) * order].copy_from_slice(row);
        }
        for i in 0..order {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(MatrixError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(m)
    }

    /// Convenience constructor from entries given as quarter counts.
    pub fn from_quarter_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let rows: Vec<Vec<Quarter>> = rows
            .iter()
            .map(|r| r.iter().map(|&p| Quarter::from_quarters(p)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[Quarter] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Quarter]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: Quarter) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    /// Adds to `(i, j)` and, off the diagonal, to `(j, i)`.
    pub fn add(&mut self, i: usize, j: usize, value: Quarter) {
        self.entries[i * self.order + j] += value;
        if i != j {
            self.entries[j * self.order + i] += value;
        }
    }

    pub fn trace(&self) -> Quarter {
        (0..self.order).map(|i| self[(i, i)]).sum()
    }

    pub fn row_sums(&self) -> Vec<Quarter> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// `M x` in exact arithmetic.
    pub fn mul_exact(&self, x: &[i64]) -> Result<Vec<Quarter>, MatrixError> {
        self.check_len(x.len())?;
        Ok(self
            .rows()
            .map(|r| r.iter().zip(x).map(|(&a, &xi)| a * xi).sum())
            .collect())
    }

    /// Row-major `f64` copy of the entries.
    pub fn real_view(&self) -> Vec<f64> {
        self.entries.iter().map(|q| q.to_f64()).collect()
    }

    pub fn real(&self, i: usize, j: usize) -> f64 {
        self[(i, j)].to_f64()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.entries.iter().map(|q| q.to_f64() * q.to_f64()).sum())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn check_len(&self, len: usize) -> Result<(), MatrixError> {
        if len == self.order {
            Ok(())
        } else {
            Err(MatrixError::DimensionMismatch {
                expected: self.order,
                found: len,
            })
        }
    }
}

impl Index<(usize, usize)> for SymmetricQMatrix {
    type Output = Quarter;
    fn index(&self, (i, j): (usize, usize)) -> &Quarter {
        &self.entries[i * self.order + j]
    }
}

/// Vertex degrees (row sums of the adjacency matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVector(pub Vec<Quarter>);

impl DegreeVector {
    pub fn max(&self) -> Quarter {
        self.0.iter().copied().max().unwrap_or(Quarter::ZERO)
    }

    pub fn total(&self) -> Quarter {
        self.0.iter().sum()
    }
}

impl Index<usize> for DegreeVector {
    type Output = Quarter;
    fn index(&self, i: usize) -> &Quarter {
        &self.0[i]
    }
}

pub fn adjacency(g: &Semigraph) -> SymmetricQMatrix {
    let mut a = SymmetricQMatrix::zeros(g.n());
    for (u, v, kind) in g.adjacent_pairs() {
        a.set(u.0, v.0, kind.weight());
    }
    a
}

pub fn degrees(g: &Semigraph) -> DegreeVector {
    DegreeVector(adjacency(g).row_sums())
}

/// `L = D − A`.
pub fn laplacian(g: &Semigraph) -> SymmetricQMatrix {
    with_degree_diagonal(g, true)
}

/// `Q = D + A`.
pub fn signless(g: &Semigraph) -> SymmetricQMatrix {
    with_degree_diagonal(g, false)
}

fn with_degree_diagonal(g: &Semigraph, negate: bool) -> SymmetricQMatrix {
    let a = adjacency(g);
    let d = a.row_sums();
    let mut m = SymmetricQMatrix::zeros(g.n());
    for i in 0..g.n() {
        for j in 0..i {
            let w = if negate { -a[(i, j)] } else { a[(i, j)] };
            m.set(i, j, w);
        }
        m.set(i, i, d[i]);
    }
    m
}

/// Coefficients `μ` of `xᵀL_e x = Σ μ (x_p − x_q)²` for one edge, one per
/// pair of positions `p < q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeQuadraticForm {
    pub edge: Edge,
    /// `(p, q, μ)` with 0-based positions `p < q`.
    pub coefficients: Vec<(usize, usize, Quarter)>,
}

impl EdgeQuadraticForm {
    pub fn new(g: &Semigraph, e: &Edge) -> Self {
        let vs = e.vertices();
        let mut coefficients = Vec::with_capacity(vs.len() * (vs.len() - 1) / 2);
        for p in 0..vs.len() {
            for q in p + 1..vs.len() {
                let kind = g
                    .pair_kind(vs[p], vs[q])
                    .expect("vertices of one edge are adjacent");
                coefficients.push((p, q, kind.weight()));
            }
        }
        Self {
            edge: e.clone(),
            coefficients,
        }
    }

    /// `μ` for start position `j` and offset `i`, both 1-based.
    pub fn mu(&self, j: usize, i: usize) -> Option<Quarter> {
        self.coefficients
            .iter()
            .find(|&&(p, q, _)| p + 1 == j && q - p == i)
            .map(|&(_, _, mu)| mu)
    }

    /// `Σ μ (x_p − x_q)²` over the edge, reading `x` by global vertex index.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.sum_squares(x, -1.0)
    }

    /// `Σ μ (x_p + x_q)²`, the signless counterpart.
    pub fn evaluate_signless(&self, x: &[f64]) -> f64 {
        self.sum_squares(x, 1.0)
    }

    fn sum_squares(&self, x: &[f64], sign: f64) -> f64 {
        let vs = self.edge.vertices();
        self.coefficients
            .iter()
            .map(|&(p, q, mu)| {
                let t = x[vs[p].0] + sign * x[vs[q].0];
                mu.to_f64() * t * t
            })
            .sum()
    }
}

/// Laplacian of a single edge in local coordinates, with the map from local
/// positions to vertices of the full semigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLaplacian {
    pub matrix: SymmetricQMatrix,
    pub embedding: Vec<VertexId>,
}

impl EdgeLaplacian {
    /// Zero-padded `n × n` copy.
    pub fn embed(&self, n: usize) -> SymmetricQMatrix {
        let mut out = SymmetricQMatrix::zeros(n);
        for (p, &u) in self.embedding.iter().enumerate() {
            for (q, &v) in self.embedding.iter().enumerate() {
                if p <= q {
                    out.add(u.0, v.0, self.matrix[(p, q)]);
                }
            }
        }
        out
    }
}

/// Laplacian of edge `e`, weighted by the vertex classes of the whole of `g`.
pub fn edge_laplacian(g: &Semigraph, e: &Edge) -> Result<EdgeLaplacian, ModelError> {
    g.edge_index(e).ok_or(ModelError::UnknownEdge)?;
    let form = EdgeQuadraticForm::new(g, e);
    let mut m = SymmetricQMatrix::zeros(e.len());
    for &(p, q, mu) in &form.coefficients {
        m.add(p, q, -mu);
        m.add(p, p, mu);
        m.add(q, q, mu);
    }
    Ok(EdgeLaplacian {
        matrix: m,
        embedding: e.vertices().to_vec(),
    })
}

/// `xᵀMx` by direct evaluation.
pub fn quadratic_form_direct(m: &SymmetricQMatrix, x: &[f64]) -> Result<f64, MatrixError> {
    m.check_len(x.len())?;
    Ok(m.rows()
        .zip(x)
        .map(|(row, &xi)| {
            xi * row
                .iter()
                .zip(x)
                .map(|(a, &xj)| a.to_f64() * xj)
                .sum::<f64>()
        })
        .sum())
}

/// `xᵀLx` as the sum over edges of `Σ μ (x_p − x_q)²`.
pub fn quadratic_form_decomposed(g: &Semigraph, x: &[f64]) -> Result<f64, MatrixError> {
    check_vertex_len(g, x)?;
    Ok(g.edges()
        .iter()
        .map(|e| EdgeQuadraticForm::new(g, e).evaluate(x))
        .sum())
}

/// `xᵀQx` as the sum over edges of `Σ μ (x_p + x_q)²`.
pub fn signless_form_decomposed(g: &Semigraph, x: &[f64]) -> Result<f64, MatrixError> {
    check_vertex_len(g, x)?;
    Ok(g.edges()
        .iter()
        .map(|e| EdgeQuadraticForm::new(g, e).evaluate_signless(x))
        .sum())
}

fn check_vertex_len(g: &Semigraph, x: &[f64]) -> Result<(), MatrixError> {
    if x.len() == g.n() {
        Ok(())
    } else {
        Err(MatrixError::DimensionMismatch {
            expected: g.n(),
            found: x.len(),
        })
    }
}

/// Whether every pair of `g` has the plain graph weight: all edges are
/// 2-edges between pure end vertices.
pub fn is_graph_case(g: &Semigraph) -> bool {
    g.edges().iter().all(|e| e.len() == 2)
        && g.adjacent_pairs()
            .all(|(_, _, k)| k == PairKind::Consecutive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1, q};
    use alloc::vec;

    #[test]
    fn fig1_adjacency() {
        let g = fig1();
        let a = adjacency(&g);
        assert_eq!(a.row(0), &[q(0), q(4), q(8), q(12), q(0), q(0), q(0)]);
        // a_37 = 1/2, a_26 = 2 (1-based)
        assert_eq!(a[(2, 6)], Quarter::HALF);
        assert_eq!(a[(1, 5)], Quarter::from_int(2));
        assert_eq!(a[(4, 6)], Quarter::QUARTER);
        assert!(a.is_symmetric());
        assert!((0..7).all(|i| a[(i, i)].is_zero()));
    }

    #[test]
    fn fig1_degrees() {
        let d = degrees(&fig1());
        let expect: Vec<Quarter> = [24, 26, 26, 24, 7, 24, 7].iter().map(|&p| q(p)).collect();
        assert_eq!(d.0, expect);
        assert_eq!(d.total(), q(138));
    }

    #[test]
    fn lone_quarter_pair_matrices() {
        // Force a quarter edge on two middle-end vertices and inspect the
        // sub-block of its pair.
        let g = Semigraph::from_labeled_edges([
            vec!["a", "u", "b"],
            vec!["c", "v", "d"],
            vec!["u", "v"],
        ])
        .unwrap();
        let (u, v) = (g.vertex("u").unwrap().0, g.vertex("v").unwrap().0);
        assert_eq!(adjacency(&g)[(u, v)], Quarter::QUARTER);
        let le = edge_laplacian(&g, &g.edges()[2]).unwrap();
        assert_eq!(
            le.matrix,
            SymmetricQMatrix::from_quarter_rows(&[&[1, -1], &[-1, 1]]).unwrap()
        );
    }

    #[test]
    fn single_full_edge() {
        let g = Semigraph::from_labeled_edges([["u", "v"]]).unwrap();
        assert_eq!(
            laplacian(&g),
            SymmetricQMatrix::from_quarter_rows(&[&[4, -4], &[-4, 4]]).unwrap()
        );
        assert_eq!(
            signless(&g),
            SymmetricQMatrix::from_quarter_rows(&[&[4, 4], &[4, 4]]).unwrap()
        );
        assert_eq!(degrees(&g).0, vec![Quarter::ONE, Quarter::ONE]);
    }

    #[test]
    fn fig1_laplacian_rows_sum_to_zero_and_signless_is_absolute() {
        let g = fig1();
        let l = laplacian(&g);
        assert!(l.mul_exact(&[1; 7]).unwrap().iter().all(|v| v.is_zero()));
        assert_eq!(l.trace(), q(138));
        let s = signless(&g);
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(s[(i, j)], l[(i, j)].abs());
            }
        }
    }

    #[test]
    fn three_edge_laplacians() {
        let full = Semigraph::from_labeled_edges([["a", "b", "c"]]).unwrap();
        let le = edge_laplacian(&full, &full.edges()[0]).unwrap();
        assert_eq!(
            le.matrix,
            SymmetricQMatrix::from_quarter_rows(&[&[12, -4, -8], &[-4, 8, -4], &[-8, -4, 12]])
                .unwrap()
        );
        // a is middle-end: middle of (x, a, y), first endpoint of (a, b, c).
        let half =
            Semigraph::from_labeled_edges([vec!["x", "a", "y"], vec!["a", "b", "c"]]).unwrap();
        let le = edge_laplacian(&half, &half.edges()[1]).unwrap();
        assert_eq!(
            le.matrix,
            SymmetricQMatrix::from_quarter_rows(&[&[10, -2, -8], &[-2, 6, -4], &[-8, -4, 12]])
                .unwrap()
        );
    }

    #[test]
    fn edge_laplacians_sum_to_laplacian() {
        let g = fig1();
        let mut sum = SymmetricQMatrix::zeros(g.n());
        for e in g.edges() {
            let part = edge_laplacian(&g, e).unwrap().embed(g.n());
            for i in 0..g.n() {
                for j in 0..=i {
                    sum.add(i, j, part[(i, j)]);
                }
            }
        }
        assert_eq!(sum, laplacian(&g));
    }

    #[test]
    fn direct_forms() {
        let m = SymmetricQMatrix::from_quarter_rows(&[&[4, -4], &[-4, 4]]).unwrap();
        assert_eq!(quadratic_form_direct(&m, &[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(quadratic_form_direct(&m, &[2.5, 2.5]).unwrap(), 0.0);
        assert!(quadratic_form_direct(&m, &[1.0]).is_err());
        let full3 =
            SymmetricQMatrix::from_quarter_rows(&[&[12, -4, -8], &[-4, 8, -4], &[-8, -4, 12]])
                .unwrap();
        assert_eq!(
            quadratic_form_direct(&full3, &[1.0, 0.0, 0.0]).unwrap(),
            3.0
        );
    }

    #[test]
    fn decomposed_forms() {
        let full = Semigraph::from_labeled_edges([["a", "b", "c"]]).unwrap();
        let (a, b, c) = (0.3, -1.1, 2.0);
        let expect: f64 = (a - b) * (a - b) + 2.0 * (a - c) * (a - c) + (b - c) * (b - c);
        assert!((quadratic_form_decomposed(&full, &[a, b, c]).unwrap() - expect).abs() < 1e-12);
        let form = EdgeQuadraticForm::new(&full, &full.edges()[0]);
        assert_eq!(form.mu(1, 1), Some(Quarter::ONE));
        assert_eq!(form.mu(1, 2), Some(Quarter::from_int(2)));
        assert_eq!(form.mu(2, 1), Some(Quarter::ONE));

        let g = fig1();
        assert_eq!(quadratic_form_decomposed(&g, &[1.0; 7]).unwrap(), 0.0);
        assert!(quadratic_form_decomposed(&g, &[1.0; 6]).is_err());
        // Quarter edge (w5, w7) contributes (1/4)(x5 − x7)².
        let quarter = EdgeQuadraticForm::new(&g, &g.edges()[3]);
        let mut x = [0.0; 7];
        x[4] = 3.0;
        x[6] = 1.0;
        assert_eq!(quarter.evaluate(&x), 1.0);
    }

    #[test]
    fn half_edge_mu_coefficients() {
        let g = fig1();
        let form = EdgeQuadraticForm::new(&g, &g.edges()[1]);
        assert_eq!(form.mu(1, 1), Some(Quarter::HALF));
        assert_eq!(form.mu(1, 2), Some(Quarter::from_int(2)));
        assert_eq!(form.mu(2, 1), Some(Quarter::ONE));
    }

    #[test]
    fn graph_case_detection() {
        assert!(is_graph_case(
            &Semigraph::from_labeled_edges([["a", "b"], ["b", "c"], ["a", "c"]]).unwrap()
        ));
        assert!(!is_graph_case(&fig1()));
    }
}
