//! Simple undirected graphs: representation, generators and operations.
//!
//! Vertices are `0..n`. Graphs are labeled and immutable after construction;
//! isomorphism is handled separately by [`crate::search`]. Adjacency is stored
//! as packed bitset rows, which keeps the subgraph-counting loops cache
//! friendly at the intended scale (n up to a few thousand).

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Parameters of the jellyfish graph `JFG(p, q)`: a cycle of length `q` with
/// `p` pendant leaves on every cycle vertex.
///
/// `p = 0` is rejected rather than treated as a bare cycle: the structural
/// arguments this toolkit verifies all assume pendant leaves exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JellyfishParams {
    p: usize,
    q: usize,
}

impl JellyfishParams {
    pub fn new(p: usize, q: usize) -> Result<Self, GraphError> {
        if p < 1 {
            return Err(GraphError::InvalidParams(format!(
                "jellyfish leaf count p must be >= 1, got {p}"
            )));
        }
        if q < 3 {
            return Err(GraphError::InvalidParams(format!(
                "jellyfish cycle length q must be >= 3, got {q}"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Order of `JFG(p, q)`, which equals its size: `q(p + 1)`.
    pub fn order(&self) -> usize {
        self.q * (self.p + 1)
    }

    pub fn size(&self) -> usize {
        self.order()
    }
}

/// Degree sequence in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Exact subgraph counts used by the closed-walk formulas: triangles, paths
/// on three vertices (two edges) and 4-cycles, all counted as subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgraphCounts {
    pub triangles: u64,
    pub paths3: u64,
    pub cycles4: u64,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction: all operations return new graphs, so values
/// can be shared read-only across worker threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    degrees: Vec<usize>,
    size: usize,
}

impl Graph {
    /// The empty graph (no edges) on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
            degrees: vec![0; n],
            size: 0,
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Duplicate edges are an error rather than silently merged; a duplicate
    /// in generated input almost always means a generator bug.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::OutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.size += 1;
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(w, &word)| {
            let base = w * 64;
            BitIter(word).map(move |b| base + b)
        })
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees.clone())
    }

    /// Sum of squared degrees (the first Zagreb index).
    pub fn zagreb_index(&self) -> u64 {
        self.degrees.iter().map(|&d| (d as u64) * (d as u64)).sum()
    }

    // ---- structured families ----------------------------------------------

    /// The jellyfish graph `JFG(p, q)`.
    ///
    /// Labeling convention: cycle vertices are `0..q` in cyclic order and the
    /// leaves of cycle vertex `c` are `q + c*p .. q + (c+1)*p`. Spectra do not
    /// depend on the labeling, but fixtures and matrix block structure do.
    pub fn jellyfish(params: JellyfishParams) -> Self {
        let (p, q) = (params.p(), params.q());
        let mut g = Self::empty(q * (p + 1));
        for c in 0..q {
            g.add_edge_unchecked(c, (c + 1) % q);
            for t in 0..p {
                g.add_edge_unchecked(c, q + c * p + t);
            }
        }
        g
    }

    /// The sun graph on `2q` vertices: `JFG(1, q)` with identical labeling.
    pub fn sun(q: usize) -> Result<Self, GraphError> {
        Ok(Self::jellyfish(JellyfishParams::new(1, q)?))
    }

    /// The cycle `C_q`, `q >= 3`.
    pub fn cycle(q: usize) -> Result<Self, GraphError> {
        if q < 3 {
            return Err(GraphError::InvalidParams(format!(
                "cycle length must be >= 3, got {q}"
            )));
        }
        let mut g = Self::empty(q);
        for v in 0..q {
            g.add_edge_unchecked(v, (v + 1) % q);
        }
        Ok(g)
    }

    /// The star `K_{1,p}` with the center as vertex 0.
    pub fn star(p: usize) -> Result<Self, GraphError> {
        if p < 1 {
            return Err(GraphError::InvalidParams(format!(
                "star leaf count must be >= 1, got {p}"
            )));
        }
        let mut g = Self::empty(p + 1);
        for v in 1..=p {
            g.add_edge_unchecked(0, v);
        }
        Ok(g)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParams(
                "path needs at least one vertex".into(),
            ));
        }
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// The complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    // ---- graph operations --------------------------------------------------

    /// Edge present iff absent here. An involution.
    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(self.n + u, self.n + v);
        }
        g
    }

    /// Disjoint union plus all cross edges.
    pub fn join(&self, other: &Self) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge_unchecked(u, self.n + v);
            }
        }
        g
    }

    /// Identifies `root_self` with `root_other`; the merged vertex keeps the
    /// label `root_self` and the degree `deg(root_self) + deg(root_other)`.
    pub fn coalescence(
        &self,
        root_self: usize,
        other: &Self,
        root_other: usize,
    ) -> Result<Self, GraphError> {
        self.check_vertex(root_self)?;
        other.check_vertex(root_other)?;
        // `other`'s vertices keep their relative order, skipping its root.
        let map = |v: usize| -> usize {
            if v == root_other {
                root_self
            } else if v < root_other {
                self.n + v
            } else {
                self.n + v - 1
            }
        };
        let mut g = Self::empty(self.n + other.n - 1);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(map(u), map(v));
        }
        Ok(g)
    }

    /// The line graph: one vertex per edge of `self` (in `edges()` order),
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Self {
        let edges = self.edges();
        let mut g = Self::empty(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    // ---- traversal ---------------------------------------------------------

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether every component admits a 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring if one exists (color of each vertex, 0 or 1).
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Number of connected components that admit a 2-coloring.
    pub fn bipartite_component_count(&self) -> usize {
        self.components()
            .into_iter()
            .filter(|comp| self.component_is_bipartite(comp))
            .count()
    }

    fn component_is_bipartite(&self, comp: &[usize]) -> bool {
        let mut color = std::collections::HashMap::new();
        let start = comp[0];
        color.insert(start, 0u8);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[&u];
            for v in self.neighbors(u) {
                match color.get(&v) {
                    None => {
                        color.insert(v, 1 - cu);
                        queue.push_back(v);
                    }
                    Some(&cv) if cv == cu => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// `m - n + 1` for a connected graph.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.size + 1 - self.n)
    }

    /// Cyclomatic number of each component, in `components()` order.
    pub fn cyclomatic_per_component(&self) -> Vec<usize> {
        self.components()
            .iter()
            .map(|comp| {
                let in_comp: std::collections::HashSet<usize> = comp.iter().copied().collect();
                let m: usize = comp
                    .iter()
                    .map(|&v| self.neighbors(v).filter(|u| in_comp.contains(u)).count())
                    .sum::<usize>()
                    / 2;
                m + 1 - comp.len()
            })
            .collect()
    }

    // ---- subgraph counting --------------------------------------------------

    /// Exact counts of triangle, `P_3` (path on 3 vertices) and `C_4`
    /// subgraphs by direct enumeration over the packed adjacency rows.
    pub fn count_subgraphs(&self) -> SubgraphCounts {
        let mut triangles: u64 = 0;
        // Each triangle {u, v, w} with u < v < w is seen once: common
        // neighbors w > v of an edge u < v.
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                triangles += self.common_neighbors_above(u, v, v);
            }
        }

        // A P_3 subgraph is a center with an unordered pair of neighbors.
        let mut paths3: u64 = 0;
        for v in 0..self.n {
            let d = self.degrees[v] as u64;
            paths3 += d * d.saturating_sub(1) / 2;
        }

        // Each 4-cycle is counted once per diagonal pair, i.e. twice total.
        let mut diag_pairs: u64 = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let c = self.common_neighbors(u, v);
                diag_pairs += c * c.saturating_sub(1) / 2;
            }
        }
        SubgraphCounts {
            triangles,
            paths3,
            cycles4: diag_pairs / 2,
        }
    }

    fn common_neighbors(&self, u: usize, v: usize) -> u64 {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter()
            .zip(rv)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }

    /// Common neighbors of `u` and `v` with index strictly above `above`.
    fn common_neighbors_above(&self, u: usize, v: usize, above: usize) -> u64 {
        let (ru, rv) = (self.row(u), self.row(v));
        let mut count = 0u64;
        for w in (above / 64)..self.words {
            let mut word = ru[w] & rv[w];
            if w == above / 64 {
                word &= u64::MAX.checked_shl(above as u32 % 64 + 1).unwrap_or(0);
            }
            count += word.count_ones() as u64;
        }
        count
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}
