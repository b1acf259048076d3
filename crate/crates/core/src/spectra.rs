//! Floating-point spectra: a cyclic Jacobi eigensolver for dense symmetric
//! matrices, the closed-form jellyfish signless Laplacian spectrum, and the
//! eigenvalue bound checks.
//!
//! Jacobi rotations were chosen over tridiagonalization + QR because they are
//! the simplest unconditionally convergent method at this scale, and the
//! eigenvalue gaps in the families studied here are far larger than the
//! rotation error.

use crate::exact::{signless_laplacian_matrix, IntMatrix, MatrixKind};
use crate::graph::{Graph, GraphError, JellyfishParams};
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi sweeps failed to converge")]
    NoConvergence,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("not a proper subgraph: {0}")]
    NotProperSubgraph(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Default relative tolerance for grouping nearby eigenvalues.
pub const DEFAULT_GROUP_TOL: f64 = 1e-7;

const MAX_SWEEPS: usize = 60;

/// Sorted eigenvalues with multiplicities grouped under a tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    multiplicities: Vec<usize>,
    tol: f64,
}

impl Spectrum {
    /// Groups an unsorted eigenvalue list. Greedy on the sorted list: a value
    /// joins the current group when the gap to the previous value is at most
    /// `tol * max(1, |value|)`.
    pub fn group(mut eigenvalues: Vec<f64>, tol: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        let mut values = Vec::new();
        let mut multiplicities = Vec::new();
        let mut i = 0;
        while i < eigenvalues.len() {
            let mut j = i + 1;
            while j < eigenvalues.len()
                && eigenvalues[j - 1] - eigenvalues[j] <= tol * eigenvalues[j].abs().max(1.0)
            {
                j += 1;
            }
            let group = &eigenvalues[i..j];
            values.push(group.iter().sum::<f64>() / group.len() as f64);
            multiplicities.push(group.len());
            i = j;
        }
        Self {
            values,
            multiplicities,
            tol,
        }
    }

    /// Distinct grouped values, non-increasing.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Total eigenvalue count (the matrix dimension).
    pub fn dimension(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Largest eigenvalue.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// All eigenvalues expanded by multiplicity, non-increasing.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        for (&v, &m) in self.values.iter().zip(&self.multiplicities) {
            out.extend(std::iter::repeat_n(v, m));
        }
        out
    }
}

impl std::fmt::Display for Spectrum {
    /// `value×multiplicity` pairs, 12 significant digits, space-separated.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .zip(&self.multiplicities)
            .map(|(&v, &m)| format!("{}\u{d7}{}", format_significant(v, 12), m))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Formats with a fixed number of significant digits, plain decimal notation.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).clamp(0, 17) as usize;
    format!("{v:.decimals$}")
}

/// All eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations
/// on a floating copy. Accuracy is ~1e-14 of the matrix norm, far inside the
/// 1e-10 contract.
pub fn sym_eigenvalues(m: &IntMatrix, tol: f64) -> Result<Spectrum, SpectraError> {
    if !m.is_symmetric() {
        return Err(SpectraError::NotSymmetric);
    }
    let n = m.dim();
    let mut a: Vec<f64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(m.get(i, j).to_f64().expect("desk-scale entries fit in f64"));
        }
    }
    let eigenvalues = jacobi_eigenvalues(&mut a, n)?;
    Ok(Spectrum::group(eigenvalues, tol))
}

fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>, SpectraError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale: f64 = a
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    let target = 1e-15 * scale;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
            s.sqrt()
        };
        if off <= target {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = c * arp - s * arq;
                    a[p * n + r] = a[r * n + p];
                    a[r * n + q] = s * arp + c * arq;
                    a[q * n + r] = a[r * n + q];
                }
            }
        }
    }
    Err(SpectraError::NoConvergence)
}

/// The closed-form signless Laplacian spectrum of a jellyfish graph.
///
/// Eliminating the leaf coordinates block-reduces `Q(JFG(p, q))` to one
/// quadratic per cycle mode `lambda_i = 2 cos(2 pi i / q)`:
/// `x^2 - (lambda_i + p + 3) x + (lambda_i + 2) = 0`, together with the
/// eigenvalue 1 at multiplicity `q(p-1)` from leaf differences. The two
/// roots per mode are
/// `(lambda_i + p + 3 +- sqrt(lambda_i^2 + (2p+2) lambda_i + p^2 + 6p + 1)) / 2`;
/// the root product `lambda_i + 2` vanishes exactly at `lambda = -2`, which
/// is the 0-eigenvalue of the bipartite (even `q`) case.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormQSpectrum {
    params: JellyfishParams,
    pairs: Vec<(f64, f64)>,
    ones: usize,
}

impl ClosedFormQSpectrum {
    pub fn params(&self) -> JellyfishParams {
        self.params
    }

    /// The `(plus, minus)` quadratic roots for modes `i = 1..=q`.
    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    /// Multiplicity of the eigenvalue 1: `q(p - 1)`.
    pub fn ones_multiplicity(&self) -> usize {
        self.ones
    }

    /// All `q(p+1)` eigenvalues, non-increasing.
    pub fn values_sorted(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.params.order());
        for &(plus, minus) in &self.pairs {
            out.push(plus);
            out.push(minus);
        }
        out.extend(std::iter::repeat_n(1.0, self.ones));
        out.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        out
    }

    pub fn largest(&self) -> f64 {
        self.values_sorted()[0]
    }
}

pub fn jellyfish_q_spectrum_closed_form(params: JellyfishParams) -> ClosedFormQSpectrum {
    let (p, q) = (params.p() as f64, params.q() as f64);
    let mut pairs = Vec::with_capacity(params.q());
    for i in 1..=params.q() {
        let lambda = 2.0 * (2.0 * std::f64::consts::PI * i as f64 / q).cos();
        let disc = lambda * lambda + (2.0 * p + 2.0) * lambda + p * p + 6.0 * p + 1.0;
        debug_assert!(disc > 0.0, "discriminant is at least (p+1)^2 on [-2, 2]");
        let root = disc.sqrt();
        let base = lambda + p + 3.0;
        pairs.push(((base + root) / 2.0, (base - root) / 2.0));
    }
    ClosedFormQSpectrum {
        params,
        pairs,
        ones: params.q() * (params.p() - 1),
    }
}

/// Largest signless Laplacian eigenvalue of any jellyfish graph with leaf
/// count `p`: the `lambda = 2` plus-root of the closed-form quadratic,
/// `(p + 5 + sqrt(p^2 + 10p + 9)) / 2`, independent of `q`.
pub fn q1_closed_form(p: usize) -> Result<f64, SpectraError> {
    if p < 1 {
        return Err(SpectraError::InvalidParams(format!(
            "leaf count p must be >= 1, got {p}"
        )));
    }
    let p = p as f64;
    Ok((p + 5.0 + (p * p + 10.0 * p + 9.0).sqrt()) / 2.0)
}

/// Largest Laplacian eigenvalue with its combinatorial bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct Mu1Bounds {
    /// `d_1 + 1`, the maximum-degree lower bound.
    pub lower: f64,
    /// `max_v (deg v + theta(v))` with `theta(v)` the average neighbor
    /// degree; only defined for connected graphs.
    pub upper: Option<f64>,
    /// Largest Laplacian eigenvalue from the eigensolver.
    pub mu1: f64,
    /// Lower bound is exact: connected with a dominating vertex.
    pub lower_equality: bool,
    /// Upper bound is exact: connected bipartite with constant degree on
    /// each side of the bipartition (regular bipartite included).
    pub upper_equality: bool,
}

/// Bounds on the largest Laplacian eigenvalue. The equality flags come from
/// exact combinatorial tests, not from floating comparison.
pub fn mu1_bounds(g: &Graph) -> Result<Mu1Bounds, SpectraError> {
    if g.size() == 0 {
        return Err(SpectraError::NoEdges);
    }
    let d1 = (0..g.order()).map(|v| g.degree(v)).max().unwrap();
    let lower = (d1 + 1) as f64;
    let connected = g.is_connected();

    let upper = connected.then(|| {
        (0..g.order())
            .map(|v| {
                let neighbor_degrees: usize = g.neighbors(v).map(|u| g.degree(u)).sum();
                g.degree(v) as f64 + neighbor_degrees as f64 / g.degree(v) as f64
            })
            .fold(f64::NEG_INFINITY, f64::max)
    });

    let spectrum = sym_eigenvalues(&crate::exact::laplacian_matrix(g), DEFAULT_GROUP_TOL)?;
    let mu1 = spectrum
        .largest()
        .expect("graph with an edge has order > 0");

    let lower_equality = connected && d1 == g.order() - 1;
    let upper_equality = connected && semiregular_bipartite(g);

    Ok(Mu1Bounds {
        lower,
        upper,
        mu1,
        lower_equality,
        upper_equality,
    })
}

/// Connected bipartite with every vertex degree constant on each side of the
/// (unique) bipartition. Regular bipartite graphs are the `r = s` case.
fn semiregular_bipartite(g: &Graph) -> bool {
    let Some(coloring) = g.two_coloring() else {
        return false;
    };
    let mut side_degree = [None; 2];
    for v in 0..g.order() {
        let side = coloring[v] as usize;
        match side_degree[side] {
            None => side_degree[side] = Some(g.degree(v)),
            Some(d) if d != g.degree(v) => return false,
            _ => {}
        }
    }
    true
}

/// Strict monotonicity of the largest signless Laplacian eigenvalue under
/// taking proper subgraphs of a connected graph: removes the given edges
/// (then any isolated vertices) and checks `q1(g) > q1(h)`.
pub fn q1_subgraph_monotonicity_check(
    g: &Graph,
    edges_removed: &[(usize, usize)],
) -> Result<bool, SpectraError> {
    if !g.is_connected() {
        return Err(SpectraError::PreconditionViolated(
            "subgraph monotonicity needs a connected host graph".into(),
        ));
    }
    if edges_removed.is_empty() {
        return Err(SpectraError::NotProperSubgraph("no edges removed".into()));
    }
    let mut removed = std::collections::HashSet::new();
    for &(u, v) in edges_removed {
        if !g.has_edge(u, v) {
            return Err(SpectraError::NotProperSubgraph(format!(
                "edge ({u}, {v}) not present"
            )));
        }
        if !removed.insert((u.min(v), u.max(v))) {
            return Err(SpectraError::NotProperSubgraph(format!(
                "edge ({u}, {v}) listed twice"
            )));
        }
    }
    let kept: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !removed.contains(&(u, v)))
        .collect();

    // Drop isolated vertices, keeping the rest in order.
    let mut used = vec![false; g.order()];
    for &(u, v) in &kept {
        used[u] = true;
        used[v] = true;
    }
    let mut relabel = vec![usize::MAX; g.order()];
    let mut next = 0;
    for v in 0..g.order() {
        if used[v] {
            relabel[v] = next;
            next += 1;
        }
    }
    let h_edges: Vec<(usize, usize)> = kept
        .iter()
        .map(|&(u, v)| (relabel[u], relabel[v]))
        .collect();
    let h = Graph::from_edges(next, &h_edges)?;

    let q1_g = largest_eigenvalue(&signless_laplacian_matrix(g))?;
    let q1_h = largest_eigenvalue(&signless_laplacian_matrix(&h))?;
    Ok(q1_g > q1_h + 1e-9)
}

fn largest_eigenvalue(m: &IntMatrix) -> Result<f64, SpectraError> {
    let spectrum = sym_eigenvalues(m, DEFAULT_GROUP_TOL)?;
    Ok(spectrum.largest().unwrap_or(0.0))
}

/// For a connected unicyclic bipartite graph, the i-th largest Laplacian
/// eigenvalue equals the i-th largest adjacency eigenvalue of the line graph
/// plus 2, for i up to n-1. Checked within 1e-8.
pub fn line_graph_shift_check(g: &Graph) -> Result<bool, SpectraError> {
    if !g.is_connected() {
        return Err(SpectraError::PreconditionViolated("not connected".into()));
    }
    if g.size() != g.order() {
        return Err(SpectraError::PreconditionViolated("not unicyclic".into()));
    }
    if !g.is_bipartite() {
        return Err(SpectraError::PreconditionViolated("not bipartite".into()));
    }
    let mu = sym_eigenvalues(&MatrixKind::Laplacian.matrix(g), DEFAULT_GROUP_TOL)?.expanded();
    let lambda = sym_eigenvalues(
        &MatrixKind::Adjacency.matrix(&g.line_graph()),
        DEFAULT_GROUP_TOL,
    )?
    .expanded();
    let n = g.order();
    Ok((0..n - 1).all(|i| (mu[i] - lambda[i] - 2.0).abs() <= 1e-8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{adjacency_matrix, char_poly, laplacian_matrix};
    use crate::graph::JellyfishParams;

    fn jf(p: usize, q: usize) -> Graph {
        Graph::jellyfish(JellyfishParams::new(p, q).unwrap())
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eigenvalues_of_known_graphs() {
        let s = sym_eigenvalues(&adjacency_matrix(&Graph::cycle(4).unwrap()), 1e-7).unwrap();
        assert_eq!(s.values().len(), 3);
        assert_close(s.values()[0], 2.0, 1e-12);
        assert_close(s.values()[1], 0.0, 1e-12);
        assert_close(s.values()[2], -2.0, 1e-12);
        assert_eq!(s.multiplicities(), &[1, 2, 1]);

        for n in 2..=6 {
            let s = sym_eigenvalues(&laplacian_matrix(&Graph::complete(n)), 1e-7).unwrap();
            assert_eq!(s.multiplicities(), &[n - 1, 1]);
            assert_close(s.values()[0], n as f64, 1e-10);
            assert_close(s.values()[1], 0.0, 1e-10);
        }
    }

    #[test]
    fn sun_q_spectrum() {
        let s = sym_eigenvalues(&signless_laplacian_matrix(&jf(1, 3)), 1e-7).unwrap();
        let sqrt5 = 5.0f64.sqrt();
        let expected = [
            (3.0 + sqrt5, 1),
            ((3.0 + sqrt5) / 2.0, 2),
            (3.0 - sqrt5, 1),
            ((3.0 - sqrt5) / 2.0, 2),
        ];
        assert_eq!(s.values().len(), expected.len());
        for ((&v, &m), (ev, em)) in s.values().iter().zip(s.multiplicities()).zip(expected) {
            assert_close(v, ev, 1e-10);
            assert_eq!(m, em);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let mut m = IntMatrix::zero(2);
        m.set(0, 1, num_bigint::BigInt::from(1));
        assert!(matches!(
            sym_eigenvalues(&m, 1e-7),
            Err(SpectraError::NotSymmetric)
        ));
    }

    #[test]
    fn eigensolver_against_exact_traces() {
        for g in [jf(1, 3), jf(2, 4), Graph::complete(5)] {
            for kind in MatrixKind::ALL {
                let m = kind.matrix(&g);
                let eig = sym_eigenvalues(&m, 1e-7).unwrap().expanded();
                let n = g.order() as f64;
                let t1: f64 = eig.iter().sum();
                let t2: f64 = eig.iter().map(|x| x * x).sum();
                let exact = kind.char_poly(&g).power_sums(2);
                let exact1 = exact[1].to_f64().unwrap();
                let exact2 = exact[2].to_f64().unwrap();
                assert_close(t1, exact1, 1e-9 * n.max(1.0));
                assert_close(t2, exact2, 1e-8 * exact2.abs().max(1.0));
            }
        }
    }

    #[test]
    fn closed_form_matches_jacobi() {
        for (p, q) in [(1, 3), (1, 4), (2, 3), (3, 5)] {
            let params = JellyfishParams::new(p, q).unwrap();
            let closed = jellyfish_q_spectrum_closed_form(params);
            let direct = sym_eigenvalues(&signless_laplacian_matrix(&jf(p, q)), 1e-7)
                .unwrap()
                .expanded();
            let expected = closed.values_sorted();
            assert_eq!(direct.len(), expected.len());
            for (a, b) in direct.iter().zip(&expected) {
                assert_close(*a, *b, 1e-9);
            }
            assert_eq!(closed.ones_multiplicity(), q * (p - 1));
        }
    }

    #[test]
    fn q1_closed_form_values() {
        assert_close(q1_closed_form(1).unwrap(), 3.0 + 5.0f64.sqrt(), 1e-12);
        // Oracle value for p = 2: the largest Jacobi eigenvalue of
        // Q(JFG(2, q)) is (7 + sqrt(33))/2 for every q.
        assert_close(
            q1_closed_form(2).unwrap(),
            (7.0 + 33.0f64.sqrt()) / 2.0,
            1e-12,
        );
        assert_close(q1_closed_form(2).unwrap(), 6.372_281_323_269_014, 1e-12);
        assert!(q1_closed_form(0).is_err());

        // Independent of q, and equal to the lambda = 2 plus-root.
        for p in [1, 2] {
            for q in [3, 4, 5] {
                let top = sym_eigenvalues(&signless_laplacian_matrix(&jf(p, q)), 1e-7)
                    .unwrap()
                    .largest()
                    .unwrap();
                assert_close(top, q1_closed_form(p).unwrap(), 1e-9);
            }
        }
        let params = JellyfishParams::new(3, 7).unwrap();
        let closed = jellyfish_q_spectrum_closed_form(params);
        assert_close(closed.largest(), q1_closed_form(3).unwrap(), 1e-12);
    }

    #[test]
    fn mu1_bound_examples() {
        let b = mu1_bounds(&Graph::star(3).unwrap()).unwrap();
        assert_close(b.lower, 4.0, 1e-12);
        assert_close(b.mu1, 4.0, 1e-10);
        assert!(b.lower_equality);
        assert!(b.upper_equality); // K_{1,3} is semiregular bipartite

        let b = mu1_bounds(&Graph::cycle(6).unwrap()).unwrap();
        assert_close(b.upper.unwrap(), 4.0, 1e-12);
        assert_close(b.mu1, 4.0, 1e-10);
        assert!(b.upper_equality);
        assert!(!b.lower_equality);

        // P_4 is bipartite with two distinct degrees, but not semiregular:
        // the upper equality flag must stay off and the bound stays strict.
        let b = mu1_bounds(&Graph::path(4).unwrap()).unwrap();
        assert!(!b.upper_equality);
        assert!(b.mu1 < b.upper.unwrap() - 1e-6);

        assert!(matches!(
            mu1_bounds(&Graph::empty(3)),
            Err(SpectraError::NoEdges)
        ));

        let disconnected = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let b = mu1_bounds(&disconnected).unwrap();
        assert!(b.upper.is_none());
        assert_close(b.mu1, 2.0, 1e-10);
    }

    #[test]
    fn jellyfish_mu1_sandwich() {
        for p in 1..=3 {
            for q in 3..=6 {
                let b = mu1_bounds(&jf(p, q)).unwrap();
                let pf = p as f64;
                assert_close(b.lower, pf + 3.0, 1e-12);
                // max(deg + theta) is attained on the cycle: p+5 - 2/(p+2).
                assert_close(b.upper.unwrap(), pf + 5.0 - 2.0 / (pf + 2.0), 1e-12);
                assert!(b.lower <= b.mu1 + 1e-9);
                assert!(b.mu1 <= b.upper.unwrap() + 1e-9);
            }
        }
    }

    #[test]
    fn q1_monotonicity_examples() {
        let g = jf(1, 4);
        // Remove one pendant edge.
        assert!(q1_subgraph_monotonicity_check(&g, &[(0, 4)]).unwrap());

        let c4 = Graph::cycle(4).unwrap();
        assert!(q1_subgraph_monotonicity_check(&c4, &[(3, 0)]).unwrap());

        let k3 = Graph::complete(3);
        assert!(q1_subgraph_monotonicity_check(&k3, &[(1, 2)]).unwrap());

        assert!(q1_subgraph_monotonicity_check(&k3, &[]).is_err());
        assert!(q1_subgraph_monotonicity_check(&k3, &[(0, 0)]).is_err());
    }

    #[test]
    fn line_graph_shift_examples() {
        assert!(line_graph_shift_check(&Graph::cycle(4).unwrap()).unwrap());
        assert!(line_graph_shift_check(&jf(1, 4)).unwrap());
        assert!(line_graph_shift_check(&jf(2, 6)).unwrap());
        assert!(line_graph_shift_check(&jf(1, 5)).is_err()); // odd cycle
        assert!(line_graph_shift_check(&Graph::path(4).unwrap()).is_err()); // no cycle
    }

    #[test]
    fn float_poly_reconstruction_matches_exact() {
        for g in [jf(1, 3), Graph::cycle(5).unwrap(), Graph::complete(4)] {
            let m = signless_laplacian_matrix(&g);
            let eig = sym_eigenvalues(&m, 1e-7).unwrap().expanded();
            let mut poly = vec![1.0f64];
            for lambda in &eig {
                let mut next = vec![0.0; poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i] += c * (-lambda);
                    next[i + 1] += c;
                }
                poly = next;
            }
            // poly is ascending after the loop ordering above.
            let exact = char_poly(&m);
            for (i, c) in poly.iter().enumerate() {
                let e = exact.coeff(i).to_f64().unwrap();
                let scale = e.abs().max(1.0);
                assert!((c - e).abs() <= 1e-6 * scale, "coeff {i}: {c} vs {e}");
            }
        }
    }

    #[test]
    fn spectrum_serialization() {
        let s = sym_eigenvalues(&signless_laplacian_matrix(&jf(1, 3)), 1e-7).unwrap();
        let line = s.to_string();
        assert!(line.starts_with("5.23606797750\u{d7}1 2.61803398875\u{d7}2"));
        assert_eq!(s.dimension(), 6);
    }
}
