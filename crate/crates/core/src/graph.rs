//! Simple graphs as dense bitset adjacency, and the upper ideal relation
//! graph Γ_U(R).
//!
//! For a finite commutative ring `R`, Γ_U(R) has the non-units of `R` as
//! vertices, with `x ~ y` (for `x ≠ y`) iff some non-unit `z` satisfies
//! `(x) ⊆ (z)` and `(y) ⊆ (z)`. Since every proper principal ideal lies in a
//! maximal one, Γ_U(R) is exactly the union of the cliques induced by the
//! maximal proper principal ideals; `0` lies in all of them, so the graph is
//! connected with `0` universal.

use crate::ring::FiniteRing;
use serde::Serialize;

/// An undirected simple graph: dense symmetric bitset adjacency plus display
/// labels. Vertices are `0..n`.
#[derive(Clone)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Vec<String>,
    edges: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> SimpleGraph {
        Self::with_labels((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> SimpleGraph {
        let n = labels.len();
        let words = n.div_ceil(64);
        SimpleGraph {
            n,
            words,
            adj: vec![0u64; n * words],
            labels,
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn v(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> usize {
        self.edges
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Adds `u ~ v`; loops and duplicates are ignored. Returns whether the
    /// edge is new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
        self.edges += 1;
        true
    }

    /// Removes `u ~ v` if present; returns whether an edge was removed.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
        self.edges -= 1;
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// The adjacency row of `u` as raw bitset words.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(u))
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The induced subgraph on `verts` (kept in the given order), labels
    /// carried over.
    pub fn induced(&self, verts: &[usize]) -> SimpleGraph {
        let labels = verts.iter().map(|&u| self.labels[u].clone()).collect();
        let mut g = SimpleGraph::with_labels(labels);
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::with_labels(self.labels.clone());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// DOT serialization: one quoted node line per vertex, then one
    /// `"a" -- "b";` line per edge in sorted order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for (u, v) in self.edge_list() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.labels[u], self.labels[v]
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON serialization; `ring` names the source ring when there is one.
    pub fn to_json(&self, ring: Option<&str>) -> String {
        #[derive(Serialize)]
        struct GraphJson<'a> {
            #[serde(skip_serializing_if = "Option::is_none")]
            ring: Option<&'a str>,
            v: usize,
            e: usize,
            vertices: &'a [String],
            edges: Vec<(usize, usize)>,
        }
        serde_json::to_string(&GraphJson {
            ring,
            v: self.n,
            e: self.edges,
            vertices: &self.labels,
            edges: self.edge_list(),
        })
        .expect("graph serialization cannot fail")
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("v", &self.n)
            .field("e", &self.edges)
            .finish()
    }
}

/// Iterate the set bit positions of a word slice.
pub fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Γ_U(R): vertices are the non-units of `r` (ascending element index), and
/// the edge set is the union of the cliques on each maximal proper principal
/// ideal.
pub fn upper_ideal_graph(r: &FiniteRing) -> SimpleGraph {
    let nonunits = r.nonunits();
    let labels = nonunits.iter().map(|&x| r.element_label(x)).collect();
    let mut g = SimpleGraph::with_labels(labels);
    let index_of = |x: u16| nonunits.binary_search(&x).expect("ideal ⊆ non-units");
    for ideal in r.maximal_proper_principal_ideals() {
        let members: Vec<usize> = ideal.iter().map(index_of).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g
}
