//! Cartan data for finite types and the elementary lattice monomials built from it.
//!
//! A [`CartanData`] holds an integer Cartan matrix `C` together with positive
//! symmetrizers `r`, so that `q_i = q^{r_i}`. Spectral parameters are points of
//! the lattice `q^Z` and are stored as plain integer exponents `k`; `q` itself is
//! never evaluated numerically, only the exponent arithmetic matters.
//!
//! Named types use the convention in which the matrix is the transpose of
//! Bourbaki's: for example `B2` is `[[2,-1],[-2,2]]` with `r = (2,1)`, so node 1
//! carries the long root. Keep that transposition in mind when comparing against
//! tables that follow the other convention.

use std::fmt;

use thiserror::Error;

use crate::rings::{Monomial, YMonomial};

/// Errors raised while validating a Cartan datum.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("Cartan matrix must be square and non-empty")]
    NotSquare,
    #[error("diagonal entry C[{i}][{i}] must be 2")]
    BadDiagonal { i: usize },
    #[error("off-diagonal entry C[{i}][{j}] = {value} must lie in {{0,-1,-2,-3}}")]
    BadOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("zero pattern must be symmetric: C[{i}][{j}] = 0 but C[{j}][{i}] != 0")]
    AsymmetricZero { i: usize, j: usize },
    #[error("symmetrizer r[{i}] = {value} must be a positive integer")]
    BadSymmetrizer { i: usize, value: i64 },
    #[error("symmetrizer length {got} does not match matrix size {n}")]
    SymmetrizerLength { got: usize, n: usize },
    #[error("not symmetrizable by the given r: r[{i}]*C[{i}][{j}] != r[{j}]*C[{j}][{i}]")]
    NotSymmetrizable { i: usize, j: usize },
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
}

/// A validated Cartan matrix with its symmetrizers.
///
/// Node indices are 1-based everywhere in this crate. Values are immutable
/// after construction, so a `CartanData` can be shared freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    n: usize,
    c: Vec<Vec<i64>>,
    r: Vec<i64>,
}

impl CartanData {
    /// Validates and wraps an explicit `(C, r)` pair.
    ///
    /// Accepts any matrix with diagonal 2, off-diagonal entries in
    /// `{0,-1,-2,-3}` with a symmetric zero pattern, and positive symmetrizers
    /// satisfying `r_i C_ij = r_j C_ji`. Disconnected diagrams are allowed.
    pub fn new(c: Vec<Vec<i64>>, r: Vec<i64>) -> Result<Self, CartanError> {
        let n = c.len();
        if n == 0 || c.iter().any(|row| row.len() != n) {
            return Err(CartanError::NotSquare);
        }
        if r.len() != n {
            return Err(CartanError::SymmetrizerLength { got: r.len(), n });
        }
        for i in 0..n {
            if c[i][i] != 2 {
                return Err(CartanError::BadDiagonal { i: i + 1 });
            }
            if r[i] < 1 {
                return Err(CartanError::BadSymmetrizer {
                    i: i + 1,
                    value: r[i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let v = c[i][j];
                if !(-3..=0).contains(&v) {
                    return Err(CartanError::BadOffDiagonal {
                        i: i + 1,
                        j: j + 1,
                        value: v,
                    });
                }
                if v == 0 && c[j][i] != 0 {
                    return Err(CartanError::AsymmetricZero { i: i + 1, j: j + 1 });
                }
                if r[i] * c[i][j] != r[j] * c[j][i] {
                    return Err(CartanError::NotSymmetrizable { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(CartanData { n, c, r })
    }

    /// Builds one of the standard finite types from its name.
    ///
    /// Recognized names: `sl2` (alias for `A1`), `An`, `Bn` (n >= 2),
    /// `Cn` (n >= 2), `Dn` (n >= 4), `E6`, `E7`, `E8`, `F4`, `G2`.
    /// Matrices follow the transposed-Bourbaki convention described in the
    /// module docs, with minimal positive symmetrizers.
    pub fn named(name: &str) -> Result<Self, CartanError> {
        let s = name.trim();
        if s.eq_ignore_ascii_case("sl2") {
            return Self::named("A1");
        }
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| CartanError::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| CartanError::UnknownType(s.to_string()))?;
        let unknown = || CartanError::UnknownType(s.to_string());
        let (c, r) = match (family.to_ascii_uppercase(), rank) {
            ('A', n) if n >= 1 => (chain_matrix(n, &[]), vec![1; n]),
            // B_n: short node last; the doubled entry sits in the last row.
            ('B', n) if n >= 2 => {
                let c = chain_matrix(n, &[(n, n - 1, -2)]);
                let mut r = vec![2; n];
                r[n - 1] = 1;
                (c, r)
            }
            // C_n: long node last; the doubled entry sits in the next-to-last row.
            ('C', n) if n >= 2 => {
                let c = chain_matrix(n, &[(n - 1, n, -2)]);
                let mut r = vec![1; n];
                r[n - 1] = 2;
                (c, r)
            }
            ('D', n) if n >= 4 => {
                let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((n - 2, n));
                (graph_matrix(n, &edges), vec![1; n])
            }
            ('E', n) if (6..=8).contains(&n) => {
                let mut edges = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
                for i in 5..n {
                    edges.push((i, i + 1));
                }
                (graph_matrix(n, &edges), vec![1; n])
            }
            ('F', 4) => {
                let c = chain_matrix(4, &[(3, 2, -2)]);
                (c, vec![2, 2, 1, 1])
            }
            ('G', 2) => (vec![vec![2, -1], vec![-3, 2]], vec![3, 1]),
            _ => return Err(unknown()),
        };
        Ok(Self::new(c, r).expect("built-in type tables are valid"))
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cartan matrix entry `C[i][j]`, 1-based.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.check_node(i);
        self.check_node(j);
        self.c[i - 1][j - 1]
    }

    /// Symmetrizer `r_i`, 1-based, so `q_i = q^{r_i}`.
    pub fn r(&self, i: usize) -> i64 {
        self.check_node(i);
        self.r[i - 1]
    }

    /// Iterator over the node ids `1..=n`.
    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// True when the matrix is symmetric with off-diagonal entries in `{0,-1}`
    /// and all symmetrizers equal 1 (types A, D, E and sl2).
    pub fn is_simply_laced(&self) -> bool {
        self.nodes().all(|i| self.r(i) == 1)
            && (0..self.n).all(|i| (0..self.n).all(|j| self.c[i][j] == self.c[j][i]))
    }

    /// Panics on an out-of-range node id; all node arguments in this crate are
    /// 1-based and validated at the API boundary (CLI and parser).
    pub(crate) fn check_node(&self, i: usize) {
        assert!(
            (1..=self.n).contains(&i),
            "node index {i} out of range 1..={}",
            self.n
        );
    }

    /// Exponent function of `A_{i,q^k}^{-1}` as a Laurent monomial in the `Y` variables.
    ///
    /// The pattern is exponent -1 at `(i, k - r_i)` and `(i, k + r_i)`, and on each
    /// neighbouring node `j` the exponent +1 at the points selected by `C[j][i]`:
    /// at `(j, k)` when `C[j][i] = -1`, at `(j, k-1)` and `(j, k+1)` when
    /// `C[j][i] = -2`, and at `(j, k-2)`, `(j, k)`, `(j, k+2)` when `C[j][i] = -3`.
    pub fn a_inverse_monomial(&self, i: usize, k: i64) -> YMonomial {
        self.check_node(i);
        let mut m = YMonomial::unit();
        let ri = self.r(i);
        m = m.mul_y(i, k - ri, -1).mul_y(i, k + ri, -1);
        for j in self.nodes() {
            if j == i {
                continue;
            }
            match self.c(j, i) {
                0 => {}
                -1 => m = m.mul_y(j, k, 1),
                -2 => m = m.mul_y(j, k - 1, 1).mul_y(j, k + 1, 1),
                -3 => m = m.mul_y(j, k - 2, 1).mul_y(j, k, 1).mul_y(j, k + 2, 1),
                _ => unreachable!("validated Cartan entries lie in {{0,-1,-2,-3}}"),
            }
        }
        m
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C = {:?}, r = {:?}", self.c, self.r)
    }
}

/// Path graph matrix on `n` nodes with entries -1, then the given overrides
/// applied as 1-based `(i, j, value)` triples.
fn chain_matrix(n: usize, overrides: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    let mut c = graph_matrix(n, &edges);
    for &(i, j, v) in overrides {
        c[i - 1][j - 1] = v;
    }
    c
}

/// Symmetric matrix with diagonal 2 and entry -1 on the given 1-based edges.
fn graph_matrix(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    }
    c
}
