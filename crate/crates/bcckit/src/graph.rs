//! Multigraphs for cycle matroids and the graph corpus.
//!
//! Loops and parallel edges are allowed; edges are endpoint pairs indexed by
//! position.  This runs at desk scale only, so the minor search and the
//! canonical form are unapologetic brute force.

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two sides were in different components.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return Err(Error::Schema(format!(
                    "edge ({u},{v}) out of range for {vertices} vertices"
                )));
            }
        }
        Ok(Multigraph { vertices, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Size of a spanning forest of the chosen edges.
    pub fn rank_of_edges(&self, chosen: impl Iterator<Item = usize>) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        let mut rank = 0;
        for i in chosen {
            let (u, v) = self.edges[i];
            if u != v && uf.union(u, v) {
                rank += 1;
            }
        }
        rank
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let root = uf.find(0);
        (1..self.vertices).all(|v| uf.find(v) == root)
    }

    pub fn is_simple(&self) -> bool {
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                return false;
            }
            for &(x, y) in &self.edges[i + 1..] {
                if (u, v) == (x, y) || (u, v) == (y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Drops loops and collapses parallel edges.  Vertex count is unchanged.
    pub fn simplified(&self) -> Multigraph {
        let mut seen = std::collections::BTreeSet::new();
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if u == v {
                continue;
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key) {
                edges.push(key);
            }
        }
        Multigraph {
            vertices: self.vertices,
            edges,
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn delete_edge(&self, i: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Multigraph {
            vertices: self.vertices,
            edges,
        }
    }

    /// Contracts edge i by merging its endpoints.  The vacated vertex keeps
    /// its slot as an isolated vertex, which no rank computation cares about.
    pub fn contract_edge(&self, i: usize) -> Multigraph {
        let (u, v) = self.edges[i];
        let mut edges = self.edges.clone();
        edges.remove(i);
        if u != v {
            for e in edges.iter_mut() {
                if e.0 == v {
                    e.0 = u;
                }
                if e.1 == v {
                    e.1 = u;
                }
            }
        }
        Multigraph {
            vertices: self.vertices,
            edges,
        }
    }

    fn touched_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vertices];
        for &(u, v) in &self.edges {
            seen[u] = true;
            seen[v] = true;
        }
        (0..self.vertices).filter(|&v| seen[v]).collect()
    }

    fn contains_k4_subgraph(&self) -> bool {
        let g = self.simplified();
        let verts = g.touched_vertices();
        if verts.len() < 4 {
            return false;
        }
        let mut adj = vec![vec![false; g.vertices]; g.vertices];
        for &(u, v) in &g.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let n = verts.len();
        for a in 0..n {
            for b in a + 1..n {
                if !adj[verts[a]][verts[b]] {
                    continue;
                }
                for c in b + 1..n {
                    if !adj[verts[a]][verts[c]] || !adj[verts[b]][verts[c]] {
                        continue;
                    }
                    for d in c + 1..n {
                        if adj[verts[a]][verts[d]]
                            && adj[verts[b]][verts[d]]
                            && adj[verts[c]][verts[d]]
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Brute-force K4 minor search.  Branches per edge on contract versus
    /// keep; kept edges are free to be dropped by the subgraph test at the
    /// leaves, so every delete/contract outcome is covered.
    pub fn has_k4_minor(&self) -> bool {
        fn rec(g: &Multigraph, next: usize) -> bool {
            if g.contains_k4_subgraph() {
                return true;
            }
            if next >= g.edges.len() {
                return false;
            }
            let (u, v) = g.edges[next];
            if u != v && rec(&g.contract_edge(next), next) {
                return true;
            }
            rec(g, next + 1)
        }
        rec(&self.simplified(), 0)
    }

    /// Minimal code over all vertex relabelings of the simplified graph, for
    /// isomorphism dedup of small simple graphs.
    pub fn canonical_code(&self) -> Vec<(usize, usize)> {
        let g = self.simplified();
        let n = g.vertices;
        assert!(n <= 8, "canonical form is for small graphs only");
        let idx: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        crate::util::for_each_permutation_lex(&idx, &mut |p| {
            let mut code: Vec<(usize, usize)> = g
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u], p[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            code.sort_unstable();
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
            true
        });
        best.unwrap_or_default()
    }

    /// Every edge set that forms a single cycle: connected with all touched
    /// degrees exactly two.  Loops count as cycles of length one.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.edges.len();
        assert!(m <= 20, "cycle sweep is capped at 20 edges");
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << m) {
            let chosen: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            let mut deg = vec![0usize; self.vertices];
            for &i in &chosen {
                let (u, v) = self.edges[i];
                deg[u] += 1;
                deg[v] += 1;
            }
            let touched: Vec<usize> = (0..self.vertices).filter(|&v| deg[v] > 0).collect();
            if touched.iter().any(|&v| deg[v] != 2) {
                continue;
            }
            // connectivity over touched vertices
            let mut uf = UnionFind::new(self.vertices);
            for &i in &chosen {
                let (u, v) = self.edges[i];
                uf.union(u, v);
            }
            let root = uf.find(touched[0]);
            if touched.iter().all(|&v| uf.find(v) == root) {
                out.push(chosen);
            }
        }
        out
    }
}

/// Complete graph on n vertices.
pub fn complete_graph(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph { vertices: n, edges }
}

/// Cycle graph on n vertices.
pub fn cycle_graph(n: usize) -> Multigraph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph { vertices: n, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Multigraph {
        // triangles {0,1,2} and {2,3,4} sharing edge 2
        Multigraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn forest_rank() {
        let tri = cycle_graph(3);
        assert_eq!(tri.rank_of_edges(0..3), 2);
        assert_eq!(tri.rank_of_edges([0, 1].into_iter()), 2);
        let loopy = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(loopy.rank_of_edges(0..1), 0);
    }

    #[test]
    fn cycle_enumeration_matches_hand_count() {
        let g = two_triangles();
        let cycles = g.cycles();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.contains(&vec![0, 1, 2]));
        assert!(cycles.contains(&vec![2, 3, 4]));
        assert!(cycles.contains(&vec![0, 1, 3, 4]));
    }

    #[test]
    fn parallel_pair_is_a_two_cycle() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.cycles(), vec![vec![0, 1]]);
    }

    #[test]
    fn k4_minor_detection() {
        assert!(complete_graph(4).has_k4_minor());
        assert!(!cycle_graph(5).has_k4_minor());
        assert!(!two_triangles().has_k4_minor());
        assert!(complete_graph(5).has_k4_minor());
    }

    #[test]
    fn subdivided_k4_still_has_the_minor() {
        // K4 on {0,1,2,3} with edge (0,1) subdivided through vertex 4
        let g = Multigraph::new(
            5,
            vec![(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert!(g.has_k4_minor());
    }

    #[test]
    fn canonical_code_identifies_isomorphs() {
        let p3 = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let p3_other = Multigraph::new(3, vec![(2, 0), (0, 1)]).unwrap();
        assert_eq!(p3.canonical_code(), p3_other.canonical_code());
        let tri = cycle_graph(3);
        assert_ne!(p3.canonical_code(), tri.canonical_code());
    }
}
