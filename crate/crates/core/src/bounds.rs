//! Bounds on the largest Laplacian eigenvalue.
//!
//! The lower bound is `Δ + 1`. The upper bound is
//! `max { d_i + d_j − C(i, j) }` over adjacent pairs, where `C` counts the
//! common neighbours of `i` and `j` that relate to both through the same
//! pair kind (and, for distance pairs, the same distance). Two weightings of
//! `C` are provided, see [`UpperVariant`].

use alloc::collections::BTreeMap;

use thiserror::Error;

use crate::connectivity::is_connected;
use crate::matrix::degrees;
use crate::model::{ModelError, PairKind, Semigraph, VertexId};
use crate::quarter::Quarter;
use crate::spectra::{laplacian_spectrum, SpectraError, DEFAULT_SOLVER_TOL};

/// Relative slack (scaled by `max(1, λₙ)`) used when checking the bounds
/// against a numeric `λₙ`.
pub const BOUND_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum BoundsError {
    #[error("the semigraph has no edges")]
    Edgeless,
    #[error("the upper bound holds for connected semigraphs only; this input is disconnected")]
    Disconnected,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Decomposition of a vertex degree by pair kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub vertex: VertexId,
    /// Weight-1 consecutive pairs.
    pub d_s: Quarter,
    /// Partial half edges, `1/2` each.
    pub d_half: Quarter,
    /// Quarter edges, `1/4` each.
    pub d_quarter: Quarter,
    /// Distance-`l` pairs, `l` each, keyed by `l ≥ 2`.
    pub d_l: BTreeMap<usize, Quarter>,
    pub d_total: Quarter,
}

impl DegreeProfile {
    /// Sum of the parts; equals `d_total` by construction.
    pub fn parts_sum(&self) -> Quarter {
        self.d_s + self.d_half + self.d_quarter + self.d_l.values().sum::<Quarter>()
    }
}

pub fn degree_profile(g: &Semigraph, i: VertexId) -> Result<DegreeProfile, ModelError> {
    if i.0 >= g.n() {
        return Err(ModelError::UnknownVertex(
            alloc::string::ToString::to_string(&i),
        ));
    }
    let mut p = DegreeProfile {
        vertex: i,
        d_s: Quarter::ZERO,
        d_half: Quarter::ZERO,
        d_quarter: Quarter::ZERO,
        d_l: BTreeMap::new(),
        d_total: Quarter::ZERO,
    };
    for (_, kind) in g.neighbors(i) {
        let w = kind.weight();
        match kind {
            PairKind::Consecutive => p.d_s += w,
            PairKind::PartialHalfEdge => p.d_half += w,
            PairKind::QuarterEdge => p.d_quarter += w,
            PairKind::Distance(l) => *p.d_l.entry(l).or_default() += w,
        }
        p.d_total += w;
    }
    Ok(p)
}

/// Common neighbours of a vertex pair, split by matching pair kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonNeighborProfile {
    pub pair: (VertexId, VertexId),
    pub c_s: usize,
    pub c_half: usize,
    pub c_quarter: usize,
    /// Common neighbours at distance `l` from both, keyed by `l ≥ 2`.
    pub c_l: BTreeMap<usize, usize>,
}

impl CommonNeighborProfile {
    fn distance_part(&self) -> Quarter {
        self.c_l
            .iter()
            .map(|(&l, &count)| Quarter::from_int((l * count) as i64))
            .sum()
    }

    /// `C_S + C_½ + C_¼ + Σ l·C_l`.
    pub fn c_literal(&self) -> Quarter {
        Quarter::from_int((self.c_s + self.c_half + self.c_quarter) as i64) + self.distance_part()
    }

    /// `C_S + ½·C_½ + ¼·C_¼ + Σ l·C_l`, each common neighbour weighted by the
    /// adjacency weight it cancels.
    pub fn c_proof(&self) -> Quarter {
        Quarter::from_int(self.c_s as i64)
            + Quarter::HALF * self.c_half as i64
            + Quarter::QUARTER * self.c_quarter as i64
            + self.distance_part()
    }

    pub fn c(&self, variant: UpperVariant) -> Quarter {
        match variant {
            UpperVariant::Literal => self.c_literal(),
            UpperVariant::Proof => self.c_proof(),
        }
    }
}

pub fn common_profile(
    g: &Semigraph,
    i: VertexId,
    j: VertexId,
) -> Result<CommonNeighborProfile, ModelError> {
    for v in [i, j] {
        if v.0 >= g.n() {
            return Err(ModelError::UnknownVertex(
                alloc::string::ToString::to_string(&v),
            ));
        }
    }
    if i == j {
        return Err(ModelError::SameVertex(alloc::string::ToString::to_string(
            &i,
        )));
    }
    let mut p = CommonNeighborProfile {
        pair: (i, j),
        c_s: 0,
        c_half: 0,
        c_quarter: 0,
        c_l: BTreeMap::new(),
    };
    for (k, kind_i) in g.neighbors(i) {
        if k == j || g.pair_kind(k, j) != Some(kind_i) {
            continue;
        }
        match kind_i {
            PairKind::Consecutive => p.c_s += 1,
            PairKind::PartialHalfEdge => p.c_half += 1,
            PairKind::QuarterEdge => p.c_quarter += 1,
            PairKind::Distance(l) => *p.c_l.entry(l).or_default() += 1,
        }
    }
    Ok(p)
}

/// `Δ + 1`.
pub fn lower_bound(g: &Semigraph) -> Result<Quarter, BoundsError> {
    if g.m() == 0 {
        return Err(BoundsError::Edgeless);
    }
    Ok(degrees(g).max() + Quarter::ONE)
}

/// Weighting of common neighbours in the upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpperVariant {
    /// Every matching common neighbour counts 1, distance-`l` ones count `l`.
    Literal,
    /// Matching common neighbours count their adjacency weight.
    Proof,
}

impl UpperVariant {
    pub fn name(self) -> &'static str {
        match self {
            UpperVariant::Literal => "literal",
            UpperVariant::Proof => "proof",
        }
    }
}

/// The maximising value of `d_i + d_j − C(i, j)` and the pair attaining it
/// (first in vertex order on ties).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub value: Quarter,
    pub argmax: (VertexId, VertexId),
}

pub fn upper_bound(g: &Semigraph, variant: UpperVariant) -> Result<UpperBound, BoundsError> {
    if g.m() == 0 {
        return Err(BoundsError::Edgeless);
    }
    if !is_connected(g) {
        return Err(BoundsError::Disconnected);
    }
    let d = degrees(g);
    let mut best: Option<UpperBound> = None;
    for (i, j, _) in g.adjacent_pairs() {
        let value = d[i.0] + d[j.0] - common_profile(g, i, j)?.c(variant);
        if best.is_none_or(|b| value > b.value) {
            best = Some(UpperBound {
                value,
                argmax: (i, j),
            });
        }
    }
    Ok(best.expect("a semigraph with an edge has an adjacent pair"))
}

/// Both bounds next to the numeric `λₙ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub delta: Quarter,
    pub lower: Quarter,
    pub upper_literal: UpperBound,
    pub upper_proof: UpperBound,
    pub lambda_n: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
    /// Whether `λₙ` also sits below the literal-weighting bound (reported, not
    /// guaranteed).
    pub upper_literal_ok: bool,
}

pub fn bounds_report(g: &Semigraph) -> Result<BoundsReport, BoundsError> {
    let lower = lower_bound(g)?;
    let upper_literal = upper_bound(g, UpperVariant::Literal)?;
    let upper_proof = upper_bound(g, UpperVariant::Proof)?;
    let lambda_n = laplacian_spectrum(g, DEFAULT_SOLVER_TOL)?.max();
    let slack = BOUND_TOL * lambda_n.max(1.0);
    Ok(BoundsReport {
        delta: lower - Quarter::ONE,
        lower,
        lambda_n,
        lower_ok: lambda_n >= lower.to_f64() - slack,
        upper_ok: lambda_n <= upper_proof.value.to_f64() + slack,
        upper_literal_ok: lambda_n <= upper_literal.value.to_f64() + slack,
        upper_literal,
        upper_proof,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1, q, tree3_one};
    use alloc::vec;

    fn id(g: &Semigraph, l: &str) -> VertexId {
        g.vertex(l).unwrap()
    }

    #[test]
    fn fig1_w5_profile() {
        let g = fig1();
        let p = degree_profile(&g, id(&g, "w5")).unwrap();
        assert_eq!(
            (p.d_s, p.d_half, p.d_quarter),
            (Quarter::ONE, Quarter::HALF, Quarter::QUARTER)
        );
        assert!(p.d_l.is_empty());
        assert_eq!(p.d_total, q(7));
        assert_eq!(p.parts_sum(), p.d_total);
    }

    #[test]
    fn isolated_profile_is_zero() {
        let mut b = crate::model::SemigraphBuilder::new();
        b.declare("z").unwrap();
        b.edge(["a", "b"]).unwrap();
        let g = b.build().unwrap();
        let p = degree_profile(&g, VertexId(0)).unwrap();
        assert_eq!(p.d_total, Quarter::ZERO);
        assert_eq!(p.parts_sum(), Quarter::ZERO);
        assert!(degree_profile(&g, VertexId(9)).is_err());
    }

    #[test]
    fn tree_one_common_profiles() {
        let g = tree3_one();
        let (v1, v2, v3) = (VertexId(0), VertexId(1), VertexId(2));
        let p = common_profile(&g, v2, v3).unwrap();
        assert_eq!((p.c_s, p.c_half, p.c_quarter), (0, 0, 0));
        assert!(p.c_l.is_empty());
        let p = common_profile(&g, v1, v3).unwrap();
        assert_eq!(p.c_s, 1);
        assert_eq!(p.c_literal(), Quarter::ONE);
        assert_eq!(p.c_proof(), Quarter::ONE);
        let p = common_profile(&g, v1, v2).unwrap();
        assert_eq!(p.c_literal(), Quarter::ZERO);
        assert!(common_profile(&g, v1, v1).is_err());
    }

    #[test]
    fn weighted_common_counts() {
        let p = CommonNeighborProfile {
            pair: (VertexId(0), VertexId(1)),
            c_s: 1,
            c_half: 2,
            c_quarter: 1,
            c_l: BTreeMap::from([(2, 1), (3, 2)]),
        };
        assert_eq!(p.c_literal(), Quarter::from_int(1 + 2 + 1 + 2 + 6));
        assert_eq!(p.c_proof(), q(4 + 4 + 1 + 8 + 24));
        assert!(p.c_proof() <= p.c_literal());
    }

    #[test]
    fn bounds_on_small_cases() {
        let g = tree3_one();
        assert_eq!(lower_bound(&g).unwrap(), Quarter::from_int(4));
        let ub = upper_bound(&g, UpperVariant::Proof).unwrap();
        assert_eq!(ub.value, Quarter::from_int(5));

        let star =
            Semigraph::from_labeled_edges([vec!["v2", "v1", "v3"], vec!["v1", "v4"]]).unwrap();
        let ub = upper_bound(&star, UpperVariant::Proof).unwrap();
        assert_eq!(ub.value, q(22));
        assert_eq!(ub.argmax, (id(&star, "v2"), id(&star, "v1")));

        let single = Semigraph::from_labeled_edges([["a", "b"]]).unwrap();
        let r = bounds_report(&single).unwrap();
        assert_eq!(
            (r.lower, r.upper_proof.value),
            (Quarter::from_int(2), Quarter::from_int(2))
        );
        assert!((r.lambda_n - 2.0).abs() < 1e-12);
        assert!(r.lower_ok && r.upper_ok);
    }

    #[test]
    fn rejects_disconnected_and_edgeless() {
        let split = Semigraph::from_labeled_edges([["a", "b"], ["c", "d"]]).unwrap();
        assert_eq!(
            upper_bound(&split, UpperVariant::Proof),
            Err(BoundsError::Disconnected)
        );
        let mut b = crate::model::SemigraphBuilder::new();
        b.declare("a").unwrap();
        b.declare("b").unwrap();
        let g = b.build().unwrap();
        assert_eq!(lower_bound(&g), Err(BoundsError::Edgeless));
    }

    #[test]
    fn fig1_report() {
        let r = bounds_report(&fig1()).unwrap();
        assert_eq!(r.delta, q(26));
        assert!(r.upper_ok);
        assert!(r.upper_literal.value <= r.upper_proof.value);
    }
}
