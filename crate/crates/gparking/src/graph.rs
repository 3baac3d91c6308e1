//! Rooted multigraphs on the vertex set {0, ..., n} with a distinguished root.
//!
//! A graph is stored as a symmetric (n+1) x (n+1) adjacency matrix of edge
//! multiplicities with zero diagonal. All operations return new values; a
//! graph is immutable after construction.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedMultigraph {
    /// Number of non-root vertices; the vertex set is {0, ..., n}.
    n: usize,
    /// Symmetric multiplicity matrix, zero diagonal.
    adjacency: Vec<Vec<u64>>,
    root: usize,
}

/// On-disk representation: `adjacency` is row-major with (n+1)^2 entries.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    root: usize,
    adjacency: Vec<u64>,
}

impl RootedMultigraph {
    pub fn new(adjacency: Vec<Vec<u64>>, root: usize) -> Result<Self> {
        let v = adjacency.len();
        if v < 2 {
            return Err(Error::BadParameter("need at least two vertices".into()));
        }
        if root >= v {
            return Err(Error::BadVertex(root));
        }
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != v {
                return Err(Error::BadGraphFile(format!("row {i} has length {}", row.len())));
            }
            if row[i] != 0 {
                return Err(Error::NonzeroDiagonal(i));
            }
            for j in 0..v {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(RootedMultigraph { n: v - 1, adjacency, root })
    }

    /// Complete graph K_{n+1} rooted at 0.
    pub fn complete(n: usize) -> Result<Self> {
        Self::complete_ab(n, 1, 1)
    }

    /// Complete multigraph K_{n+1}^{a,b}: `a` parallel edges from the root to
    /// every other vertex, `b` between any two non-root vertices.
    pub fn complete_ab(n: usize, a: u64, b: u64) -> Result<Self> {
        if n < 1 || a < 1 || b < 1 {
            return Err(Error::BadParameter(format!("complete_ab({n},{a},{b})")));
        }
        let v = n + 1;
        let mut adj = vec![vec![0u64; v]; v];
        for i in 0..v {
            for j in 0..v {
                if i == j {
                    continue;
                }
                adj[i][j] = if i == 0 || j == 0 { a } else { b };
            }
        }
        Ok(RootedMultigraph { n, adjacency: adj, root: 0 })
    }

    /// Complete bipartite multigraph K_{m+1,n}^{a,b} on {0..m} and
    /// {m+1..m+n}: `a` edges between the root 0 and each j in the second
    /// part, `b` edges between each non-root i in the first part and each j
    /// in the second part.
    pub fn complete_bipartite_ab(m: usize, n: usize, a: u64, b: u64) -> Result<Self> {
        if m < 1 || n < 1 || a < 1 || b < 1 {
            return Err(Error::BadParameter(format!("complete_bipartite_ab({m},{n},{a},{b})")));
        }
        let v = m + n + 1;
        let mut adj = vec![vec![0u64; v]; v];
        for j in (m + 1)..v {
            adj[0][j] = a;
            adj[j][0] = a;
            for i in 1..=m {
                adj[i][j] = b;
                adj[j][i] = b;
            }
        }
        Ok(RootedMultigraph { n: m + n, adjacency: adj, root: 0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices, n + 1.
    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn adjacency(&self, i: usize, j: usize) -> u64 {
        self.adjacency[i][j]
    }

    pub fn adjacency_matrix(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    /// Non-root vertices in increasing order. This is the variable order used
    /// by every ideal and parking-function operation.
    pub fn non_root_vertices(&self) -> Vec<usize> {
        (0..=self.n).filter(|&v| v != self.root).collect()
    }

    pub fn with_root(&self, root: usize) -> Result<Self> {
        if root > self.n {
            return Err(Error::BadVertex(root));
        }
        Ok(RootedMultigraph { n: self.n, adjacency: self.adjacency.clone(), root })
    }

    pub fn is_multigraph(&self) -> bool {
        self.adjacency.iter().any(|row| row.iter().any(|&a| a > 1))
    }

    /// Maximum edge multiplicity over all vertex pairs.
    pub fn max_multiplicity(&self) -> u64 {
        self.adjacency.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn delete_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.check_pair(i, j)?;
        if self.adjacency[i][j] == 0 {
            return Err(Error::NoSuchEdge(i, j));
        }
        let mut g = self.clone();
        g.adjacency[i][j] -= 1;
        g.adjacency[j][i] -= 1;
        Ok(g)
    }

    pub fn add_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.check_pair(i, j)?;
        let mut g = self.clone();
        g.adjacency[i][j] += 1;
        g.adjacency[j][i] += 1;
        Ok(g)
    }

    pub fn delete_all_between(&self, i: usize, j: usize) -> Result<Self> {
        self.check_pair(i, j)?;
        let mut g = self.clone();
        g.adjacency[i][j] = 0;
        g.adjacency[j][i] = 0;
        Ok(g)
    }

    /// Delete vertex `v` and renumber the vertices above it downward so the
    /// label set stays dense. The root must survive the deletion.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v > self.n {
            return Err(Error::BadVertex(v));
        }
        if v == self.root {
            return Err(Error::RootDeletion(v));
        }
        if self.n < 2 {
            return Err(Error::BadParameter("cannot delete from a two-vertex graph".into()));
        }
        let keep: Vec<usize> = (0..=self.n).filter(|&u| u != v).collect();
        let adj = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.adjacency[i][j]).collect())
            .collect();
        let root = if self.root > v { self.root - 1 } else { self.root };
        Ok(RootedMultigraph { n: self.n - 1, adjacency: adj, root })
    }

    /// Zero out all edges incident to the root.
    pub fn delete_root_edges(&self) -> Self {
        let mut g = self.clone();
        for u in 0..=self.n {
            g.adjacency[self.root][u] = 0;
            g.adjacency[u][self.root] = 0;
        }
        g
    }

    /// Number of edges from `i` to vertices outside `subset`. `subset` must
    /// be a nonempty set of non-root vertices containing `i`.
    pub fn d_a(&self, subset: &[usize], i: usize) -> Result<u64> {
        if !subset.contains(&i) {
            return Err(Error::BadParameter(format!("{i} not in the subset")));
        }
        if subset.contains(&self.root) {
            return Err(Error::BadParameter("subset contains the root".into()));
        }
        Ok((0..=self.n)
            .filter(|j| !subset.contains(j))
            .map(|j| self.adjacency[i][j])
            .sum())
    }

    pub fn edge_count(&self) -> u64 {
        let mut total = 0;
        for i in 0..=self.n {
            for j in 0..i {
                total += self.adjacency[i][j];
            }
        }
        total
    }

    /// genus = |E| - |V| + 1; negative for forests.
    pub fn genus(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.adjacency[v].iter().sum()
    }

    pub fn is_connected(&self) -> bool {
        let v = self.n + 1;
        let mut seen = vec![false; v];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for w in 0..v {
                if !seen[w] && self.adjacency[u][w] > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Determinant of the signless Laplacian D + A with the root's row and
    /// column removed, exact integer arithmetic.
    pub fn signless_laplacian_det(&self) -> BigInt {
        let verts = self.non_root_vertices();
        let n = verts.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (r, &i) in verts.iter().enumerate() {
            for (c, &j) in verts.iter().enumerate() {
                m[r][c] = if r == c {
                    BigInt::from(self.degree(i))
                } else {
                    BigInt::from(self.adjacency[i][j])
                };
            }
        }
        bareiss_det(m)
    }

    pub fn to_json(&self) -> String {
        let flat: Vec<u64> = self.adjacency.iter().flatten().copied().collect();
        serde_json::to_string(&GraphFile { n: self.n, root: self.root, adjacency: flat })
            .expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::BadGraphFile(e.to_string()))?;
        let v = file.n + 1;
        if file.adjacency.len() != v * v {
            return Err(Error::BadGraphFile(format!(
                "expected {} adjacency entries, got {}",
                v * v,
                file.adjacency.len()
            )));
        }
        let adj = file.adjacency.chunks(v).map(|r| r.to_vec()).collect();
        Self::new(adj, file.root)
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i > self.n {
            return Err(Error::BadVertex(i));
        }
        if j > self.n {
            return Err(Error::BadVertex(j));
        }
        if i == j {
            return Err(Error::BadParameter("loops are not allowed".into()));
        }
        Ok(())
    }
}

/// Fraction-free Bareiss determinant over the integers.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
