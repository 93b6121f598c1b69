//! Finite simple graphs and their minimal vertex covers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Default bound on the vertex count accepted by [`Graph::minimal_vertex_covers`].
pub const DEFAULT_MAX_VERTICES: usize = 24;

const PART_LETTERS: [char; 8] = ['x', 'y', 'z', 'w', 'u', 'v', 'p', 'q'];

/// A finite simple graph without isolated vertices, optionally carrying a
/// partition of its vertex set such that every edge joins two distinct parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    parts: Option<Vec<Vec<usize>>>,
}

/// A minimal vertex cover, stored as a sorted list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

impl Graph {
    /// Builds a graph from labels and an edge list. Duplicate edges, loops,
    /// out-of-range endpoints and isolated vertices are rejected.
    pub fn new(
        labels: Vec<String>,
        edge_list: &[(usize, usize)],
        parts: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut edges = BTreeSet::new();
        for &(a, b) in edge_list {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) refers to a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if !edges.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
        }
        let mut touched = vec![false; n];
        for &(a, b) in &edges {
            touched[a] = true;
            touched[b] = true;
        }
        if let Some(v) = touched.iter().position(|t| !t) {
            return Err(Error::InvalidGraph(format!(
                "vertex {} ({}) is isolated",
                v, labels[v]
            )));
        }
        if let Some(parts) = &parts {
            let mut owner = vec![usize::MAX; n];
            for (p, part) in parts.iter().enumerate() {
                if part.is_empty() {
                    return Err(Error::InvalidGraph(format!("part {p} is empty")));
                }
                for &v in part {
                    if v >= n {
                        return Err(Error::InvalidGraph(format!(
                            "part {p} refers to vertex {v} outside 0..{n}"
                        )));
                    }
                    if owner[v] != usize::MAX {
                        return Err(Error::InvalidGraph(format!(
                            "vertex {v} belongs to more than one part"
                        )));
                    }
                    owner[v] = p;
                }
            }
            if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
                return Err(Error::InvalidGraph(format!("vertex {v} is in no part")));
            }
            if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| owner[a] == owner[b]) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) lies inside part {}",
                    owner[a]
                )));
            }
        }
        Ok(Graph {
            labels,
            edges,
            parts,
        })
    }

    /// Complete multipartite graph with the given part sizes. Vertices are
    /// numbered part by part.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Self> {
        if part_sizes.len() < 2 {
            return Err(Error::InvalidGraph(
                "a complete multipartite graph needs at least two parts".into(),
            ));
        }
        if let Some(p) = part_sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidGraph(format!("part {p} is empty")));
        }
        let mut labels = Vec::new();
        let mut parts = Vec::new();
        for (p, &size) in part_sizes.iter().enumerate() {
            let start = labels.len();
            for j in 1..=size {
                labels.push(part_label(p, part_sizes.len(), j));
            }
            parts.push((start..start + size).collect::<Vec<_>>());
        }
        let mut edges = Vec::new();
        for (p, a) in parts.iter().enumerate() {
            for b in &parts[p + 1..] {
                for &u in a {
                    for &v in b {
                        edges.push((u, v));
                    }
                }
            }
        }
        Graph::new(labels, &edges, Some(parts))
    }

    /// The Cohen-Macaulay bipartite graph on `x_1..x_n, y_1..y_n` with edges
    /// `{x_1, y_j}` for all `j` and `{x_i, y_i}` for `i >= 2`.
    pub fn cm_bipartite(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!(
                "cm_bipartite needs n >= 2, got {n}"
            )));
        }
        let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        labels.extend((1..=n).map(|i| format!("y{i}")));
        let y = |j: usize| n + j - 1;
        let mut edges: Vec<(usize, usize)> = (1..=n).map(|j| (0, y(j))).collect();
        edges.extend((2..=n).map(|i| (i - 1, y(i))));
        let parts = vec![(0..n).collect(), (n..2 * n).collect()];
        Graph::new(labels, &edges, Some(parts))
    }

    /// `K_{U1, V1 ∪ V2} ∪ K_{U2, V2}` with `|U_i| = n_i`, `|V_i| = m_i`.
    /// The recorded parts are the four blocks `U1, U2, V1, V2`, in that order.
    pub fn nested_bipartite(n1: usize, n2: usize, m1: usize, m2: usize) -> Result<Self> {
        if [n1, n2, m1, m2].contains(&0) {
            return Err(Error::InvalidGraph(
                "nested_bipartite block sizes must be positive".into(),
            ));
        }
        let n = n1 + n2;
        let m = m1 + m2;
        let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        labels.extend((1..=m).map(|j| format!("y{j}")));
        let u1: Vec<usize> = (0..n1).collect();
        let u2: Vec<usize> = (n1..n).collect();
        let v1: Vec<usize> = (n..n + m1).collect();
        let v2: Vec<usize> = (n + m1..n + m).collect();
        let mut edges = Vec::new();
        for &u in &u1 {
            for &v in v1.iter().chain(&v2) {
                edges.push((u, v));
            }
        }
        for &u in &u2 {
            for &v in &v2 {
                edges.push((u, v));
            }
        }
        Graph::new(labels, &edges, Some(vec![u1, u2, v1, v2]))
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {n}")));
        }
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(labels, &edges, None)
    }

    /// The path on `n >= 2` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!("path needs n >= 2, got {n}")));
        }
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(labels, &edges, None)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn parts(&self) -> Option<&[Vec<usize>]> {
        self.parts.as_deref()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Neighbour bitmasks; requires `vertex_count() <= 64`.
    fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.vertex_count()];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// A 2-colouring `(side_a, side_b)` if the graph is bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut nbrs = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &w in &nbrs[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side_a = (0..n).filter(|&v| colour[v] == Some(false)).collect();
        let side_b = (0..n).filter(|&v| colour[v] == Some(true)).collect();
        Some((side_a, side_b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Checks that `cover` meets every edge.
    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        let mut inside = vec![false; self.vertex_count()];
        for &v in cover {
            inside[v] = true;
        }
        self.edges.iter().all(|&(a, b)| inside[a] || inside[b])
    }

    /// All minimal vertex covers, sorted by size and then lexicographically.
    ///
    /// Computed as complements of maximal independent sets, enumerated by
    /// exhaustive branching over the vertices in index order.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexCover>> {
        self.minimal_vertex_covers_bounded(DEFAULT_MAX_VERTICES)
    }

    pub fn minimal_vertex_covers_bounded(&self, max_vertices: usize) -> Result<Vec<VertexCover>> {
        let n = self.vertex_count();
        if n > max_vertices.min(64) {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                limit: max_vertices.min(64),
            });
        }
        let adj = self.adjacency_masks();
        // A vertex left out of the independent set must end up with a chosen
        // neighbour; that is decidable once both it and its last neighbour
        // have been branched on.
        let mut check_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let last_nb = 63 - adj[v].leading_zeros() as usize;
            check_at[v.max(last_nb)].push(v);
        }
        let mut found = Vec::new();
        enumerate_maximal_independent(0, 0, n, &adj, &check_at, &mut found);
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut covers: Vec<VertexCover> = found
            .into_iter()
            .map(|indep| VertexCover {
                vertices: bits(full & !indep),
            })
            .collect();
        covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
        Ok(covers)
    }
}

fn enumerate_maximal_independent(
    v: usize,
    chosen: u64,
    n: usize,
    adj: &[u64],
    check_at: &[Vec<usize>],
    out: &mut Vec<u64>,
) {
    if v == n {
        out.push(chosen);
        return;
    }
    let dominated = |set: u64| {
        check_at[v]
            .iter()
            .all(|&u| set & (1 << u) != 0 || adj[u] & set != 0)
    };
    if adj[v] & chosen == 0 {
        let with = chosen | (1 << v);
        if dominated(with) {
            enumerate_maximal_independent(v + 1, with, n, adj, check_at, out);
        }
    }
    if dominated(chosen) {
        enumerate_maximal_independent(v + 1, chosen, n, adj, check_at, out);
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

fn part_label(part: usize, part_count: usize, j: usize) -> String {
    if part_count <= PART_LETTERS.len() {
        format!("{}{}", PART_LETTERS[part], j)
    } else {
        format!("v{}_{}", part + 1, j)
    }
}
