use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::poset::Poset;
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n` with bitmask adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        assert!(n <= 64, "graphs are limited to 64 vertices");
        Self { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    /// The claw `K_{1,3}` with centre 0.
    pub fn claw() -> Self {
        Self::from_edges(4, &[(0, 1), (0, 2), (0, 3)])
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::edgeless(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Labeled graph on `n` vertices whose edge set is encoded by `mask` over
    /// the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::edgeless(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n, "bad edge ({a},{b})");
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_stable(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & set != 0 {
                return false;
            }
        }
        true
    }

    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let mut g = Self::edgeless(self.n + other.n);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge(a + self.n, b + self.n);
        }
        g
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u64 << s;
            seen |= frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
        }
        count
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        let edges: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&edges.join(","))
    }
}

/// Parses the `Display` form, e.g. `n=3;0-1,1-2`.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "graph", input: s.to_owned() };
        let (head, edges) = s.trim().split_once(';').ok_or_else(bad)?;
        let n: usize = head.strip_prefix("n=").and_then(|x| x.trim().parse().ok()).ok_or_else(bad)?;
        if n > 64 {
            return Err(bad());
        }
        let mut g = Graph::edgeless(n);
        for e in edges.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (a, b) = e.split_once('-').ok_or_else(bad)?;
            let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a == b || a >= n || b >= n {
                return Err(bad());
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Incomparability graph: distinct elements are adjacent iff incomparable.
pub fn inc_graph(p: &Poset) -> Graph {
    let n = p.len();
    let mut g = Graph::edgeless(n);
    for i in 0..n {
        for j in i + 1..n {
            if !p.comparable(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Replaces vertex `v` by a clique on `alpha[v]` vertices; copies of adjacent
/// vertices are joined completely. A zero entry deletes the vertex. Copies are
/// numbered consecutively in vertex order.
pub fn clan_graph(g: &Graph, alpha: &[usize]) -> Graph {
    assert_eq!(alpha.len(), g.len(), "one multiplicity per vertex");
    let owner: Vec<usize> = alpha.iter().enumerate().flat_map(|(v, &a)| std::iter::repeat_n(v, a)).collect();
    let mut out = Graph::edgeless(owner.len());
    for i in 0..owner.len() {
        for j in i + 1..owner.len() {
            if owner[i] == owner[j] || g.has_edge(owner[i], owner[j]) {
                out.add_edge(i, j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incomparability_of_chains_and_antichains() {
        for n in 1..=6 {
            assert_eq!(inc_graph(&Poset::antichain(n)), Graph::complete(n));
            assert_eq!(inc_graph(&Poset::chain(n)), Graph::edgeless(n));
        }
    }

    #[test]
    fn clan_graph_cases() {
        let g = Graph::path(4);
        assert_eq!(clan_graph(&g, &[1, 1, 1, 1]), g);
        assert_eq!(clan_graph(&Graph::edgeless(1), &[3]), Graph::complete(3));
        assert_eq!(clan_graph(&Graph::complete(2), &[2, 1]), Graph::complete(3));
        // a deleted vertex drops its edges
        assert_eq!(clan_graph(&Graph::path(3), &[1, 0, 1]), Graph::edgeless(2));
        let blown = clan_graph(&Graph::path(3), &[2, 1, 2]);
        assert_eq!(blown.len(), 5);
        assert_eq!(blown.edge_count(), 1 + 2 + 2 + 1);
    }

    #[test]
    fn components_and_stability() {
        let g = Graph::path(3).disjoint_union(&Graph::complete(2));
        assert_eq!(g.component_count(), 2);
        assert!(g.is_stable(0b00101));
        assert!(!g.is_stable(0b00011));
        assert_eq!(Graph::from_edge_mask(3, 0b111), Graph::complete(3));
    }

    #[test]
    fn display_round_trip() {
        let g = Graph::claw();
        assert_eq!(g.to_string(), "n=4;0-1,0-2,0-3");
        assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
        assert_eq!("n=2;".parse::<Graph>().unwrap(), Graph::edgeless(2));
        assert!("n=2;0-2".parse::<Graph>().is_err());
        assert!("0-1".parse::<Graph>().is_err());
    }
}
