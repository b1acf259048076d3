//! Graph invariants and exact cospectrality predicates.
//!
//! Everything here reduces to exact integer computation; in particular the
//! cospectrality predicates compare characteristic polynomials
//! coefficientwise and are therefore genuine equivalence relations.

use crate::exact::{
    adjacency_matrix, char_poly, determinant_q, eval_char_poly_at_integer,
    signless_laplacian_matrix, spanning_tree_count, MatrixKind,
};
use crate::graph::{DegreeSequence, Graph};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(
        "closed-walk formula disagrees with the trace for length {length}: {formula} vs {trace}"
    )]
    InternalInconsistency {
        length: usize,
        formula: BigInt,
        trace: BigInt,
    },
}

/// First Zagreb index: the sum of squared degrees.
pub fn zagreb_index(g: &Graph) -> u64 {
    g.zagreb_index()
}

/// Closed-walk counts of lengths 2, 3 and 4.
///
/// Each count is computed twice: from the subgraph-count formulas
/// (`2m`, `6 N_C3`, `2m + 4 N_P3 + 8 N_C4`) and from exact traces of
/// adjacency powers. A mismatch means a counting bug and is an error.
pub fn walk_counts(g: &Graph) -> Result<(u64, u64, u64), InvariantError> {
    let counts = g.count_subgraphs();
    let m = g.size() as u64;
    let formulas = [
        2 * m,
        6 * counts.triangles,
        2 * m + 4 * counts.paths3 + 8 * counts.cycles4,
    ];

    let a = adjacency_matrix(g);
    let a2 = a.mul(&a);
    let a3 = a2.mul(&a);
    let a4 = a3.mul(&a);
    let traces = [a2.trace(), a3.trace(), a4.trace()];

    for (i, (formula, trace)) in formulas.iter().zip(&traces).enumerate() {
        if BigInt::from(*formula) != *trace {
            return Err(InvariantError::InternalInconsistency {
                length: i + 2,
                formula: BigInt::from(*formula),
                trace: (*trace).clone(),
            });
        }
    }
    Ok((formulas[0], formulas[1], formulas[2]))
}

/// Exact adjacency cospectrality. Graphs of different orders are trivially
/// not cospectral.
pub fn a_cospectral(g: &Graph, h: &Graph) -> bool {
    cospectral(g, h, MatrixKind::Adjacency)
}

pub fn l_cospectral(g: &Graph, h: &Graph) -> bool {
    cospectral(g, h, MatrixKind::Laplacian)
}

pub fn q_cospectral(g: &Graph, h: &Graph) -> bool {
    cospectral(g, h, MatrixKind::SignlessLaplacian)
}

pub fn cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> bool {
    g.order() == h.order() && kind.char_poly(g) == kind.char_poly(h)
}

/// Checks the line-graph transfer on a pair: Q-cospectral graphs must have
/// A-cospectral line graphs, and conversely when the orders and sizes agree.
/// Returns false only when the implication fails for this pair.
pub fn line_graph_cospectrality_check(g: &Graph, h: &Graph) -> bool {
    let lg = g.line_graph();
    let lh = h.line_graph();
    if q_cospectral(g, h) && !a_cospectral(&lg, &lh) {
        return false;
    }
    if g.order() == h.order()
        && g.size() == h.size()
        && a_cospectral(&lg, &lh)
        && !q_cospectral(g, h)
    {
        return false;
    }
    true
}

/// A pair of non-adjacent vertices with identical neighborhoods; their common
/// degree is then an exact signless Laplacian eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub degree: usize,
    /// Whether `degree` was certified as a root of the exact characteristic
    /// polynomial of `Q`.
    pub verified: bool,
}

/// Finds all non-adjacent twin pairs and certifies their shared degree as a
/// `Q`-eigenvalue by exact polynomial evaluation.
pub fn twin_vertex_eigenvalue_check(g: &Graph) -> Vec<TwinPair> {
    let n = g.order();
    let mut pairs = Vec::new();
    let mut poly = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) || g.degree(u) != g.degree(v) {
                continue;
            }
            let nu: Vec<usize> = g.neighbors(u).collect();
            let nv: Vec<usize> = g.neighbors(v).collect();
            if nu != nv {
                continue;
            }
            let poly = poly.get_or_insert_with(|| char_poly(&signless_laplacian_matrix(g)));
            let r = BigInt::from(g.degree(u));
            pairs.push(TwinPair {
                u,
                v,
                degree: g.degree(u),
                verified: eval_char_poly_at_integer(poly, &r).is_zero(),
            });
        }
    }
    pairs
}

/// The bundle of invariants used throughout the cospectrality arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    pub order: usize,
    pub size: usize,
    pub zagreb: u64,
    pub walk2: u64,
    pub walk3: u64,
    pub walk4: u64,
    pub det_q: BigInt,
    /// Only defined for connected graphs.
    pub spanning_trees: Option<BigInt>,
    pub degree_sequence: DegreeSequence,
    pub bipartite_components: usize,
    /// `m - n + 1`; only defined for connected graphs.
    pub cyclomatic: Option<usize>,
}

impl InvariantSummary {
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        let (walk2, walk3, walk4) = walk_counts(g)?;
        Ok(Self {
            order: g.order(),
            size: g.size(),
            zagreb: zagreb_index(g),
            walk2,
            walk3,
            walk4,
            det_q: determinant_q(g),
            spanning_trees: spanning_tree_count(g).ok(),
            degree_sequence: g.degree_sequence(),
            bipartite_components: g.bipartite_component_count(),
            cyclomatic: g.cyclomatic_number().ok(),
        })
    }

    /// Key-value fields in a fixed order, for the text and structured record
    /// encodings.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
        vec![
            ("n", self.order.to_string()),
            ("m", self.size.to_string()),
            ("zagreb", self.zagreb.to_string()),
            ("walk2", self.walk2.to_string()),
            ("walk3", self.walk3.to_string()),
            ("walk4", self.walk4.to_string()),
            ("det-q", self.det_q.to_string()),
            (
                "spanning-trees",
                opt(&self.spanning_trees.as_ref().map(|t| t.to_string())),
            ),
            ("degrees", self.degree_sequence.to_string()),
            (
                "bipartite-components",
                self.bipartite_components.to_string(),
            ),
            ("cyclomatic", opt(&self.cyclomatic.map(|c| c.to_string()))),
        ]
    }
}

impl std::fmt::Display for InvariantSummary {
    /// One flat `key=value` record per line-oriented output.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .fields()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}
