//! Test-only oracles, written against the definitions and independent of
//! the library's assembly and solver paths.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use semigraph_core::{RationalPoly, Semigraph, SymmetricQMatrix};

/// Vertex roles straight from the edge lists: (is end somewhere, is middle
/// somewhere).
fn roles(g: &Semigraph) -> Vec<(bool, bool)> {
    let mut r = vec![(false, false); g.n()];
    for e in g.edges() {
        let vs = e.vertices();
        for (pos, v) in vs.iter().enumerate() {
            if pos == 0 || pos == vs.len() - 1 {
                r[v.0].0 = true;
            } else {
                r[v.0].1 = true;
            }
        }
    }
    r
}

/// Adjacency weight (in quarters) of `u`, `v` from the case split on pair
/// type: partial half edge 1/2, quarter edge 1/4, otherwise the positional
/// distance.
pub fn naive_weight(g: &Semigraph, u: usize, v: usize) -> i64 {
    let r = roles(g);
    let middle_end = |x: usize| r[x].0 && r[x].1;
    for e in g.edges() {
        let vs: Vec<usize> = e.vertices().iter().map(|x| x.0).collect();
        let (Some(pu), Some(pv)) = (
            vs.iter().position(|&x| x == u),
            vs.iter().position(|&x| x == v),
        ) else {
            continue;
        };
        let dist = pu.abs_diff(pv);
        let (a, b) = (vs[0], vs[vs.len() - 1]);
        if vs.len() == 2 && middle_end(a) && middle_end(b) {
            return 1;
        }
        if dist == 1 {
            let lo = pu.min(pv);
            let at_first = lo == 0 && middle_end(a);
            let at_last = lo + 1 == vs.len() - 1 && middle_end(b);
            if at_first || at_last {
                return 2;
            }
        }
        return 4 * dist as i64;
    }
    0
}

pub fn naive_laplacian_quarters(g: &Semigraph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut l = vec![vec![0i64; n]; n];
    for (i, row) in l.iter_mut().enumerate() {
        for j in (0..n).filter(|&j| j != i) {
            let w = naive_weight(g, i, j);
            row[j] = -w;
            row[i] += w;
        }
    }
    l
}

fn to_rational(m: &SymmetricQMatrix) -> Vec<Vec<BigRational>> {
    (0..m.order())
        .map(|i| (0..m.order()).map(|j| m[(i, j)].to_rational()).collect())
        .collect()
}

/// Determinant by exact Gaussian elimination.
pub fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut sign = BigRational::one();
    let mut acc = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        let p = a[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            let pivot_row = a[col].clone();
            for (dst, src) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *dst -= &factor * src;
            }
        }
    }
    sign * acc
}

/// `det(λI − M)` through exact determinants at λ = 0..n and Lagrange
/// interpolation.
pub fn charpoly_by_interpolation(m: &SymmetricQMatrix) -> RationalPoly {
    let n = m.order();
    let base = to_rational(m);
    let xs: Vec<BigRational> = (0..=n)
        .map(|k| BigRational::from_integer(BigInt::from(k)))
        .collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let mut a: Vec<Vec<BigRational>> = base
                .iter()
                .map(|r| r.iter().map(|v| -v).collect())
                .collect();
            for (i, row) in a.iter_mut().enumerate() {
                row[i] += x;
            }
            det(a)
        })
        .collect();
    let mut out = RationalPoly::new(vec![]);
    for (i, yi) in ys.iter().enumerate() {
        let mut basis = RationalPoly::one();
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPoly::linear(xj.clone());
                denom *= &xs[i] - xj;
            }
        }
        let scale = yi / denom;
        let scaled = RationalPoly::new(basis.coeffs().iter().map(|c| c * &scale).collect());
        out = add(&out, &scaled);
    }
    out
}

fn add(a: &RationalPoly, b: &RationalPoly) -> RationalPoly {
    let len = a.coeffs().len().max(b.coeffs().len());
    let get =
        |p: &RationalPoly, k: usize| p.coeffs().get(k).cloned().unwrap_or_else(BigRational::zero);
    RationalPoly::new((0..len).map(|k| get(a, k) + get(b, k)).collect())
}

/// Simple roots of `p` in `[lo, hi]` by scanning for sign changes on a fine
/// grid and bisecting each bracket.
pub fn simple_roots(p: &RationalPoly, lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let f = |x: f64| p.eval_f64(x);
    let mut roots = Vec::new();
    let h = (hi - lo) / steps as f64;
    let mut a = lo;
    let mut fa = f(a);
    for k in 1..=steps {
        let b = lo + h * k as f64;
        let fb = f(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let (mut x0, mut x1) = (a, b);
            for _ in 0..200 {
                let mid = 0.5 * (x0 + x1);
                if f(mid).signum() == f(x0).signum() {
                    x0 = mid;
                } else {
                    x1 = mid;
                }
            }
            roots.push(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    if f(hi) == 0.0 {
        roots.push(hi);
    }
    roots
}

/// Upper bound by direct enumeration: for every adjacent pair, scan every
/// third vertex and compare the weights it has to both ends; equal nonzero
/// weights from the same pair type count as a matching common neighbour.
pub fn brute_upper_bound(g: &Semigraph, weighted: bool) -> BigRational {
    let n = g.n();
    let w = |a: usize, b: usize| naive_weight(g, a, b);
    let d: Vec<i64> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i).map(|j| w(i, j)).sum())
        .collect();
    let mut best: Option<BigRational> = None;
    for i in 0..n {
        for j in i + 1..n {
            if w(i, j) == 0 {
                continue;
            }
            let mut c_quarters = 0i64;
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                let (wi, wj) = (w(k, i), w(k, j));
                if wi == 0 || wi != wj {
                    continue;
                }
                // Same weight implies same pair type: 1/4, 1/2, 1 and l ≥ 2
                // are distinct values.
                c_quarters += if weighted || wi >= 4 { wi } else { 4 };
            }
            let value = BigRational::new(BigInt::from(d[i] + d[j] - c_quarters), BigInt::from(4));
            if best.as_ref().is_none_or(|b| &value > b) {
                best = Some(value);
            }
        }
    }
    best.unwrap_or_else(BigRational::zero)
}

pub fn assert_close(a: f64, b: f64, eps: f64) {
    assert!((a - b).abs() <= eps, "{a} vs {b} (eps {eps})");
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn is_nonneg(x: &BigRational) -> bool {
    !x.is_negative()
}
