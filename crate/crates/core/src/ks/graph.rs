use serde::{Deserialize, Serialize};

use super::VectorSet;
use crate::error::{Error, Result};

/// Orthogonality graph: vertex per vector, edge per exactly orthogonal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityGraph {
    n: usize,
    adjacency: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl OrthogonalityGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![vec![false; n]; n];
        for (i, j) in edges {
            assert!(i != j, "self-loop at {i}");
            adjacency[i][j] = true;
            adjacency[j][i] = true;
        }
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| adjacency[i][j])
            .collect();
        OrthogonalityGraph {
            n,
            adjacency,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i]
            .iter()
            .enumerate()
            .filter(|(_, &adj)| adj)
            .map(|(j, _)| j)
    }

    /// All cliques of exactly `size` vertices, each sorted, listed in
    /// lexicographic order.
    pub fn cliques_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if size == 0 || size > self.n {
            return out;
        }
        let mut current = Vec::with_capacity(size);
        let all: Vec<usize> = (0..self.n).collect();
        self.extend_clique(&mut current, &all, size, &mut out);
        out
    }

    fn extend_clique(
        &self,
        current: &mut Vec<usize>,
        candidates: &[usize],
        size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let needed = size - current.len();
        for (pos, &v) in candidates.iter().enumerate() {
            if candidates.len() - pos < needed {
                break;
            }
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&w| self.adjacency[v][w])
                .collect();
            if next.len() + 1 < needed {
                continue;
            }
            current.push(v);
            self.extend_clique(current, &next, size, out);
            current.pop();
        }
    }
}

/// Orthogonality graph of a vector set, using exact inner products.
pub fn build_orthogonality_graph(set: &VectorSet) -> OrthogonalityGraph {
    let n = set.len();
    let ints = set.int_rows().ok();
    let orthogonal = |i: usize, j: usize| match &ints {
        Some(rows) => {
            rows[i]
                .iter()
                .zip(&rows[j])
                .map(|(a, b)| *a as i128 * *b as i128)
                .sum::<i128>()
                == 0
        }
        None => set
            .vector(i)
            .inner_product(set.vector(j))
            .unwrap()
            .is_zero(),
    };
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| orthogonal(i, j))
        .collect();
    OrthogonalityGraph::from_edges(n, edges)
}

/// A measurement context: `d` pairwise orthogonal vertices, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Context(Vec<usize>);

impl Context {
    /// Validate `members` as a basis of `set`.
    pub fn new(mut members: Vec<usize>, set: &VectorSet) -> Result<Self> {
        members.sort_unstable();
        let invalid = |reason: String| Error::InvalidContext {
            context: members.clone(),
            reason,
        };
        if members.len() != set.dim() {
            return Err(invalid(format!("expected {} members", set.dim())));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("repeated member".into()));
        }
        if let Some(&bad) = members.iter().find(|&&m| m >= set.len()) {
            return Err(invalid(format!("vertex {bad} out of range")));
        }
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if !set.vector(i).inner_product(set.vector(j))?.is_zero() {
                    return Err(invalid(format!("vectors {i} and {j} are not orthogonal")));
                }
            }
        }
        Ok(Context(members))
    }

    /// Wrap already validated members.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Context(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }
}

/// Every `d`-clique of the orthogonality graph, in lexicographic order.
pub fn enumerate_contexts(set: &VectorSet) -> Vec<Context> {
    build_orthogonality_graph(set)
        .cliques_of_size(set.dim())
        .into_iter()
        .map(Context::from_sorted)
        .collect()
}
