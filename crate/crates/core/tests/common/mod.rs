//! Small graphs shared by the integration tests.

#![allow(dead_code)]

use coverreg_core::Graph;

/// A named graph together with whether it carries a multipartite structure
/// that the compressed cover ideal can use.
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
    pub multipartite: bool,
}

fn entry(name: impl Into<String>, graph: Graph, multipartite: bool) -> CorpusGraph {
    CorpusGraph {
        name: name.into(),
        graph,
        multipartite,
    }
}

fn explicit(name: &str, n: usize, edges: &[(usize, usize)]) -> CorpusGraph {
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    entry(name, Graph::new(labels, edges, None).unwrap(), false)
}

/// Complete multipartite part-size tuples (sorted) with at most
/// `max_vertices` vertices.
pub fn multipartite_shapes(max_vertices: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for k in lo..=left {
            prefix.push(k);
            extend(prefix, left - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_vertices, &mut out);
    out
}

/// Every graph used by the property checks. All have at most 8 vertices.
pub fn corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push(entry(format!("P{n}"), Graph::path(n).unwrap(), false));
    }
    for n in 3..=8 {
        out.push(entry(format!("C{n}"), Graph::cycle(n).unwrap(), false));
    }
    for parts in multipartite_shapes(7) {
        let name = format!("K{parts:?}");
        out.push(entry(name, Graph::complete_multipartite(&parts).unwrap(), true));
    }
    for n in 2..=4 {
        out.push(entry(format!("CM{n}"), Graph::cm_bipartite(n).unwrap(), false));
    }
    for b in [[1, 1, 1, 1], [2, 1, 1, 1], [1, 2, 1, 2], [2, 2, 2, 2], [1, 1, 3, 2]] {
        let g = Graph::nested_bipartite(b[0], b[1], b[2], b[3]).unwrap();
        out.push(entry(format!("N{b:?}"), g, true));
    }
    out.push(explicit("star5", 6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]));
    out.push(explicit("bull", 5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]));
    out.push(explicit("K4-e", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]));
    out.push(explicit("paw", 4, &[(0, 1), (1, 2), (0, 2), (2, 3)]));
    out.push(explicit("cube-ish", 8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (2, 6)]));
    out.push(explicit("tree", 7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]));
    out
}
