//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Characteristic polynomials are computed by Berkowitz's division-free
//! algorithm, determinants by fraction-free Bareiss elimination. Both are
//! O(n^3)..O(n^4) with exact arithmetic, which is all the intended desk scale
//! needs. Cospectrality decisions are made on these exact polynomials only;
//! floating eigenvalues are never the source of truth.

use crate::graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("spectral moment order {requested} above cap {cap}")]
    MomentCapExceeded { requested: usize, cap: usize },
}

/// Matrix powers beyond this order grow too fast to be worth computing by
/// default; the closed-walk and moment identities only need k <= 4.
pub const MOMENT_CAP: usize = 8;

/// Which matrix of a graph a spectral statement refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn matrix(&self, g: &Graph) -> IntMatrix {
        match self {
            MatrixKind::Adjacency => adjacency_matrix(g),
            MatrixKind::Laplacian => laplacian_matrix(g),
            MatrixKind::SignlessLaplacian => signless_laplacian_matrix(g),
        }
    }

    pub fn char_poly(&self, g: &Graph) -> CharPoly {
        char_poly(&self.matrix(g))
    }

    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless-laplacian",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a" | "adjacency" => Ok(MatrixKind::Adjacency),
            "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "q" | "signless-laplacian" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(format!(
                "unknown matrix kind {other:?} (expected a, l or q)"
            )),
        }
    }
}

/// Dense square matrix with arbitrary-precision integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Minor with the given row and column removed.
    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n - 1;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let si = if i < row { i } else { i + 1 };
                let sj = if j < col { j } else { j + 1 };
                out.entries[i * n + j] = self.get(si, sj).clone();
            }
        }
        out
    }
}

/// 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| BigInt::from(g.has_edge(i, j) as u32))
}

/// Laplacian `D - A`: row sums zero, positive semidefinite.
pub fn laplacian_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else {
            -BigInt::from(g.has_edge(i, j) as u32)
        }
    })
}

/// Signless Laplacian `D + A`: entrywise nonnegative, positive semidefinite.
pub fn signless_laplacian_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else {
            BigInt::from(g.has_edge(i, j) as u32)
        }
    })
}

/// Monic characteristic polynomial with exact integer coefficients, stored
/// constant term first: `coeffs[i]` is the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "polynomial needs at least one coefficient"
        );
        Self { coeffs }
    }

    /// Degree, which equals the matrix dimension.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i` (zero above the degree).
    pub fn coeff(&self, i: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        self.coeffs
            .get(i)
            .unwrap_or_else(|| ZERO.get_or_init(BigInt::zero))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplicity of `r` as a root, by repeated exact synthetic division.
    pub fn root_multiplicity(&self, r: &BigInt) -> usize {
        let mut coeffs = self.coeffs.clone();
        let mut mult = 0;
        loop {
            if coeffs.len() == 1 {
                // Nonzero constant (monic chain), no further roots.
                return mult;
            }
            // Divide by (x - r): quotient via Horner, remainder must be zero.
            let mut quotient = vec![BigInt::zero(); coeffs.len() - 1];
            let mut carry = BigInt::zero();
            for i in (0..coeffs.len()).rev() {
                let value = &coeffs[i] + &carry * r;
                if i == 0 {
                    if !value.is_zero() {
                        return mult;
                    }
                } else {
                    quotient[i - 1] = value.clone();
                    carry = value;
                }
            }
            coeffs = quotient;
            mult += 1;
        }
    }

    /// `det(M) = (-1)^n * c_0` for the characteristic polynomial of `M`.
    pub fn determinant(&self) -> BigInt {
        let c0 = self.coeffs[0].clone();
        if self.degree() % 2 == 1 {
            -c0
        } else {
            c0
        }
    }

    /// Power sums of the roots from Newton's identities, exactly.
    ///
    /// Returns `p_0..p_k` where `p_j` is the sum of j-th powers of the roots,
    /// hence `tr(M^j)` for a characteristic polynomial.
    pub fn power_sums(&self, k: usize) -> Vec<BigInt> {
        let n = self.degree();
        // det(xI - M) = sum c_i x^i with c_{n-t} = (-1)^t e_t.
        let elem = |t: usize| -> BigInt {
            if t > n {
                return BigInt::zero();
            }
            let c = self.coeff(n - t).clone();
            if t % 2 == 1 {
                -c
            } else {
                c
            }
        };
        let mut sums = vec![BigInt::from(n)];
        for j in 1..=k {
            // p_j = sum_{t=1..j-1} (-1)^{t-1} e_t p_{j-t} + (-1)^{j-1} j e_j
            let mut p = BigInt::zero();
            for t in 1..j {
                let term = elem(t) * &sums[j - t];
                if t % 2 == 1 {
                    p += term;
                } else {
                    p -= term;
                }
            }
            let last = elem(j) * BigInt::from(j);
            if j % 2 == 1 {
                p += last;
            } else {
                p -= last;
            }
            sums.push(p);
        }
        sums
    }

    /// Serialization: decimal coefficients, constant term first, one line.
    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }

    pub fn parse_line(line: &str) -> Result<Self, String> {
        let coeffs: Result<Vec<BigInt>, _> = line
            .split_whitespace()
            .map(|tok| tok.parse::<BigInt>().map_err(|e| e.to_string()))
            .collect();
        let coeffs = coeffs?;
        if coeffs.is_empty() {
            return Err("empty polynomial line".into());
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Characteristic polynomial `det(xI - M)` by Berkowitz's division-free
/// algorithm. Exact, deterministic, O(n^4) integer operations.
pub fn char_poly(m: &IntMatrix) -> CharPoly {
    let n = m.dim();
    if n == 0 {
        return CharPoly::from_coeffs(vec![BigInt::one()]);
    }
    // Work in descending order: poly[0] is the leading coefficient.
    // Start from the trailing 1x1 principal submatrix and grow leftwards.
    let mut poly = vec![BigInt::one(), -m.get(n - 1, n - 1).clone()];
    for k in (0..n - 1).rev() {
        let s = n - k; // size of the submatrix M[k.., k..]
                       // Toeplitz column: v[0] = 1, v[1] = -a11, v[t] = -(R * A'^{t-2} * C).
        let mut v = Vec::with_capacity(s + 1);
        v.push(BigInt::one());
        v.push(-m.get(k, k).clone());
        // w starts as the first column C of the trailing block.
        let mut w: Vec<BigInt> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();
        for _ in 2..=s {
            let dot: BigInt = (k + 1..n).map(|j| m.get(k, j) * &w[j - k - 1]).sum();
            v.push(-dot);
            // w <- A' * w
            let mut next = vec![BigInt::zero(); s - 1];
            for (i, item) in next.iter_mut().enumerate() {
                *item = (k + 1..n)
                    .map(|j| m.get(k + 1 + i, j) * &w[j - k - 1])
                    .sum();
            }
            w = next;
        }
        // poly <- first s+1 coefficients of conv(v, poly).
        let mut next = vec![BigInt::zero(); s + 1];
        for (i, item) in next.iter_mut().enumerate() {
            for (t, vt) in v.iter().enumerate().take(i + 1) {
                if let Some(p) = poly.get(i - t) {
                    *item += vt * p;
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    CharPoly::from_coeffs(poly)
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            // Pivot by row swap; a fully zero column means det = 0.
            match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                Some(r) => {
                    for j in 0..n {
                        let tmp = a.get(k, j).clone();
                        a.set(k, j, a.get(r, j).clone());
                        a.set(r, j, tmp);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a.set(i, j, q);
            }
        }
        prev = a.get(k, k).clone();
    }
    let det = a.get(n - 1, n - 1).clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact `det Q(G)`, read off the constant coefficient of the characteristic
/// polynomial of `Q`.
pub fn determinant_q(g: &Graph) -> BigInt {
    char_poly(&signless_laplacian_matrix(g)).determinant()
}

/// Number of spanning trees by the matrix-tree theorem: any cofactor of the
/// Laplacian, computed with exact Bareiss elimination.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt, LinalgError> {
    if !g.is_connected() {
        return Err(LinalgError::Disconnected);
    }
    if g.order() == 1 {
        return Ok(BigInt::one());
    }
    Ok(determinant(&laplacian_matrix(g).minor(0, 0)))
}

/// Spectral moments for the signless Laplacian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentVector {
    values: Vec<BigInt>,
}

impl MomentVector {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `T_k = tr(Q^k)`.
    pub fn get(&self, k: usize) -> &BigInt {
        &self.values[k]
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }
}

/// `T_0..T_k` with `T_k = tr(Q^k)`, by exact matrix powers.
pub fn q_moments(g: &Graph, k: usize) -> Result<MomentVector, LinalgError> {
    if k > MOMENT_CAP {
        return Err(LinalgError::MomentCapExceeded {
            requested: k,
            cap: MOMENT_CAP,
        });
    }
    let q = signless_laplacian_matrix(g);
    let mut values = vec![BigInt::from(g.order())];
    let mut power = q.clone();
    for _ in 1..=k {
        values.push(power.trace());
        if values.len() <= k {
            power = power.mul(&q);
        }
    }
    Ok(MomentVector { values })
}

/// `T_0..T_3` from the closed formulas in terms of degrees and triangles:
/// `n`, `2m`, `2m + sum d^2`, `6 N_C3 + 3 sum d^2 + sum d^3`.
pub fn q_moment_formulas(g: &Graph) -> MomentVector {
    let n = BigInt::from(g.order());
    let m = BigInt::from(g.size());
    let d2: BigInt = (0..g.order())
        .map(|v| BigInt::from(g.degree(v)).pow(2))
        .sum();
    let d3: BigInt = (0..g.order())
        .map(|v| BigInt::from(g.degree(v)).pow(3))
        .sum();
    let triangles = BigInt::from(g.count_subgraphs().triangles);
    let values = vec![
        n,
        &m * 2u32,
        &m * 2u32 + &d2,
        triangles * 6u32 + &d2 * 3u32 + &d3,
    ];
    MomentVector { values }
}

/// Leading coefficients of the Laplacian characteristic polynomial from the
/// degree/triangle formulas: the coefficients of `x^n, x^{n-1}, x^{n-2},
/// x^{n-3}` are `1`, `-2m`, `2m^2 - m - (sum d^2)/2` and
/// `(-4m^3 + 6m^2 + 3m sum d^2 - sum d^3 - 3 sum d^2 + 6 N_C3)/3`.
pub fn laplacian_coeff_formulas(g: &Graph) -> [BigInt; 4] {
    let m = BigInt::from(g.size());
    let d2: BigInt = (0..g.order())
        .map(|v| BigInt::from(g.degree(v)).pow(2))
        .sum();
    let d3: BigInt = (0..g.order())
        .map(|v| BigInt::from(g.degree(v)).pow(3))
        .sum();
    let triangles = BigInt::from(g.count_subgraphs().triangles);

    let l0 = BigInt::one();
    let l1: BigInt = -(&m * 2u32);
    let (half_d2, rem) = d2.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero(), "sum of squared degrees is even");
    let l2 = &m * &m * 2u32 - &m - half_d2;
    let numer = &m * &m * &m * -4i32 + &m * &m * 6u32 + &m * &d2 * 3u32 - &d3 - &d2 * 3u32
        + triangles * 6u32;
    let (l3, rem) = numer.div_rem(&BigInt::from(3));
    debug_assert!(rem.is_zero(), "third Laplacian coefficient is integral");
    [l0, l1, l2, l3]
}

/// Verifies the exact polynomial form of the complement spectrum relation
/// `(n - x) p_{L(comp G)}(x) = (-1)^{n-1} x p_{L(G)}(n - x)` coefficientwise.
pub fn complement_identity_check(g: &Graph) -> bool {
    let n = g.order();
    let p_g = char_poly(&laplacian_matrix(g));
    let p_comp = char_poly(&laplacian_matrix(&g.complement()));
    let big_n = BigInt::from(n);

    // Left side: (n - x) * p_comp(x), degree n + 1, ascending coefficients.
    let mut lhs = vec![BigInt::zero(); n + 2];
    for (i, c) in p_comp.coeffs().iter().enumerate() {
        lhs[i] += c * &big_n;
        lhs[i + 1] -= c;
    }

    // Right side: (-1)^{n-1} * x * p_g(n - x).
    // Compose by Horner: acc(x) <- acc(x) * (n - x) + c.
    let mut coeffs_desc = p_g.coeffs().iter().rev();
    let mut acc = vec![coeffs_desc.next().cloned().unwrap_or_else(BigInt::zero)];
    for c in coeffs_desc {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] += a * &big_n;
            next[i + 1] -= a;
        }
        next[0] += c;
        acc = next;
    }
    let sign_flip = n.is_multiple_of(2); // (-1)^{n-1}
    let mut rhs = vec![BigInt::zero(); n + 2];
    for (i, a) in acc.iter().enumerate() {
        rhs[i + 1] = if sign_flip { -a.clone() } else { a.clone() };
    }

    lhs == rhs
}

/// Exact polynomial evaluation at an integer; a zero value certifies `r` as
/// an eigenvalue.
pub fn eval_char_poly_at_integer(p: &CharPoly, r: &BigInt) -> BigInt {
    p.eval(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::JellyfishParams;

    fn jf(p: usize, q: usize) -> Graph {
        Graph::jellyfish(JellyfishParams::new(p, q).unwrap())
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn coeffs(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| big(v)).collect()
    }

    #[test]
    fn matrix_builders() {
        let c3 = Graph::cycle(3).unwrap();
        let l = laplacian_matrix(&c3);
        for i in 0..3 {
            assert_eq!(l.get(i, i), &big(2));
            let row_sum: BigInt = (0..3).map(|j| l.get(i, j)).sum();
            assert!(row_sum.is_zero());
        }

        let q = signless_laplacian_matrix(&Graph::complete(2));
        assert_eq!(
            (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| q.get(i, j).clone())
                .collect::<Vec<_>>(),
            coeffs(&[1, 1, 1, 1])
        );

        // L + Q = 2D and Q - L = 2A entrywise.
        let g = jf(2, 5);
        let (a, l, q) = (
            adjacency_matrix(&g),
            laplacian_matrix(&g),
            signless_laplacian_matrix(&g),
        );
        for i in 0..g.order() {
            let row_sum: BigInt = (0..g.order()).map(|j| l.get(i, j)).sum();
            assert!(row_sum.is_zero());
            for j in 0..g.order() {
                let two_d = if i == j {
                    big(2 * g.degree(i) as i64)
                } else {
                    big(0)
                };
                assert_eq!(l.get(i, j) + q.get(i, j), two_d);
                assert_eq!(q.get(i, j) - l.get(i, j), a.get(i, j) * 2u32);
            }
        }
    }

    #[test]
    fn char_poly_small_cases() {
        let p = char_poly(&laplacian_matrix(&Graph::cycle(3).unwrap()));
        assert_eq!(p.coeffs(), coeffs(&[0, 9, -6, 1]).as_slice()); // x^3 - 6x^2 + 9x

        let p = char_poly(&adjacency_matrix(&Graph::empty(1)));
        assert_eq!(p.coeffs(), coeffs(&[0, 1]).as_slice()); // x

        let p = char_poly(&IntMatrix::zero(0));
        assert_eq!(p.coeffs(), coeffs(&[1]).as_slice());
    }

    #[test]
    fn char_poly_classic_cospectral_pair() {
        // K_{1,4} and C_4 + K_1 share the adjacency spectrum {2, 0, 0, 0, -2}.
        let star = Graph::star(4).unwrap();
        let mate = Graph::cycle(4).unwrap().disjoint_union(&Graph::empty(1));
        let p_star = char_poly(&adjacency_matrix(&star));
        let p_mate = char_poly(&adjacency_matrix(&mate));
        assert_eq!(p_star.coeffs(), coeffs(&[0, 0, 0, -4, 0, 1]).as_slice());
        assert_eq!(p_star, p_mate);
    }

    #[test]
    fn char_poly_trace_coefficient() {
        for g in [jf(1, 3), jf(2, 4), Graph::complete(5)] {
            let n = g.order();
            for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
                let p = kind.char_poly(&g);
                assert_eq!(p.coeff(n - 1), &big(-2 * g.size() as i64));
                assert_eq!(p.coeff(n), &big(1));
            }
        }
    }

    #[test]
    fn char_poly_matches_bareiss_determinant() {
        // Constant coefficient against the independent Bareiss route.
        for g in [
            jf(1, 3),
            jf(1, 4),
            Graph::complete(4),
            Graph::star(3).unwrap(),
        ] {
            let q = signless_laplacian_matrix(&g);
            assert_eq!(char_poly(&q).determinant(), determinant(&q));
            let a = adjacency_matrix(&g);
            assert_eq!(char_poly(&a).determinant(), determinant(&a));
        }
    }

    #[test]
    fn determinant_q_classification_examples() {
        assert_eq!(determinant_q(&jf(1, 4)), big(0));
        assert_eq!(determinant_q(&jf(2, 3)), big(4));
        let g = Graph::cycle(3)
            .unwrap()
            .disjoint_union(&Graph::cycle(5).unwrap());
        assert_eq!(determinant_q(&g), big(16));
        assert_eq!(determinant(&signless_laplacian_matrix(&g)), big(16));
    }

    #[test]
    fn spanning_trees() {
        for p in 1..=3 {
            for q in 3..=6 {
                assert_eq!(spanning_tree_count(&jf(p, q)).unwrap(), big(q as i64));
            }
        }
        assert_eq!(
            spanning_tree_count(&Graph::path(7).unwrap()).unwrap(),
            big(1)
        );
        // Cayley: n^{n-2}.
        assert_eq!(spanning_tree_count(&Graph::complete(4)).unwrap(), big(16));
        assert_eq!(spanning_tree_count(&Graph::complete(5)).unwrap(), big(125));
        assert!(spanning_tree_count(&Graph::empty(2)).is_err());
    }

    #[test]
    fn q_moments_match_formulas() {
        let g = jf(1, 3);
        let traces = q_moments(&g, 3).unwrap();
        let formulas = q_moment_formulas(&g);
        assert_eq!(traces.values()[..4], formulas.values()[..4]);
        assert_eq!(traces.get(1), &big(12));
        assert_eq!(traces.get(2), &big(42));
        assert_eq!(traces.get(3), &big(180));

        let empty = Graph::empty(4);
        let t = q_moments(&empty, 3).unwrap();
        assert_eq!(t.values(), coeffs(&[4, 0, 0, 0]).as_slice());

        let k2 = Graph::complete(2);
        assert_eq!(q_moments(&k2, 2).unwrap().get(2), &big(4));

        assert!(matches!(
            q_moments(&k2, MOMENT_CAP + 1),
            Err(LinalgError::MomentCapExceeded { .. })
        ));
    }

    #[test]
    fn laplacian_coeffs_match_char_poly() {
        for g in [
            Graph::cycle(3).unwrap(),
            Graph::complete(2),
            jf(1, 3),
            jf(2, 4),
            Graph::complete_bipartite(2, 3),
        ] {
            let n = g.order();
            let formulas = laplacian_coeff_formulas(&g);
            let p = char_poly(&laplacian_matrix(&g));
            for (t, expected) in formulas.iter().enumerate() {
                if n >= t {
                    assert_eq!(p.coeff(n - t), expected, "coefficient {t} of {g:?}");
                }
            }
        }
        let c3 = laplacian_coeff_formulas(&Graph::cycle(3).unwrap());
        assert_eq!(c3, [big(1), big(-6), big(9), big(0)]);
        assert_eq!(laplacian_coeff_formulas(&jf(1, 3))[1], big(-12));
    }

    #[test]
    fn complement_identity_examples() {
        for g in [
            Graph::cycle(4).unwrap(),
            jf(2, 4),
            Graph::empty(1),
            Graph::star(3).unwrap(),
            Graph::complete(5),
        ] {
            assert!(complement_identity_check(&g), "failed for {g:?}");
        }
    }

    #[test]
    fn eval_and_multiplicity() {
        let q_jf23 = char_poly(&signless_laplacian_matrix(&jf(2, 3)));
        assert!(eval_char_poly_at_integer(&q_jf23, &big(1)).is_zero());
        assert_eq!(q_jf23.root_multiplicity(&big(1)), 3); // q(p-1) = 3

        let q_k2 = char_poly(&signless_laplacian_matrix(&Graph::complete(2)));
        assert!(eval_char_poly_at_integer(&q_k2, &big(0)).is_zero());

        let p = CharPoly::from_coeffs(coeffs(&[0, 9, -6, 1]));
        assert_eq!(eval_char_poly_at_integer(&p, &big(1)), big(4));
    }

    #[test]
    fn newton_power_sums_match_traces() {
        for g in [jf(1, 3), Graph::complete(4), Graph::cycle(5).unwrap()] {
            for kind in MatrixKind::ALL {
                let m = kind.matrix(&g);
                let sums = kind.char_poly(&g).power_sums(4);
                let mut power = m.clone();
                for (k, expected) in sums.iter().enumerate().skip(1) {
                    assert_eq!(&power.trace(), expected, "k={k} kind={kind}");
                    if k < 4 {
                        power = power.mul(&m);
                    }
                }
            }
        }
    }

    #[test]
    fn char_poly_line_round_trip() {
        let p = char_poly(&signless_laplacian_matrix(&jf(2, 3)));
        let parsed = CharPoly::parse_line(&p.to_line()).unwrap();
        assert_eq!(p, parsed);
    }
}
