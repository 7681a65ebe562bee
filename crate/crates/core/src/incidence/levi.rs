use std::collections::VecDeque;
use std::fmt;

use super::IncidenceStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    /// Point vertex.
    Black,
    /// Block vertex.
    White,
}

/// Length of a shortest cycle; `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Coloured bipartite incidence graph.
///
/// Vertices `0..black` are the points, `black..black + white` the blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviGraph {
    black: usize,
    white: usize,
    adj: Vec<Vec<usize>>,
}

impl LeviGraph {
    pub(crate) fn from_structure(c: &IncidenceStructure) -> Self {
        let black = c.num_points();
        let white = c.num_blocks();
        let mut adj = vec![Vec::new(); black + white];
        for (p, b) in c.flags() {
            adj[p].push(black + b);
            adj[black + b].push(p);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { black, white, adj }
    }

    /// Builds a graph from explicit bipartite edges `(black, white)`.
    pub fn from_edges(black: usize, white: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); black + white];
        for &(u, w) in edges {
            assert!(u < black && w < white, "edge ({u}, {w}) out of range");
            adj[u].push(black + w);
            adj[black + w].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self { black, white, adj }
    }

    pub fn num_black(&self) -> usize {
        self.black
    }

    pub fn num_white(&self) -> usize {
        self.white
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj[..self.black].iter().map(Vec::len).sum()
    }

    pub fn colour(&self, v: usize) -> Colour {
        if v < self.black {
            Colour::Black
        } else {
            Colour::White
        }
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The same graph with colour classes exchanged, i.e. the Levi graph of the dual.
    pub fn swap_colours(&self) -> Self {
        let n = self.adj.len();
        let map = |v: usize| if v < self.black { v + self.white } else { v - self.black };
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&u| map(u)).collect();
            mapped.sort_unstable();
            adj[map(v)] = mapped;
        }
        Self {
            black: self.white,
            white: self.black,
            adj,
        }
    }

    /// Back to an incidence structure.
    pub fn to_structure(&self) -> IncidenceStructure {
        let flags = (0..self.black)
            .flat_map(|p| self.adj[p].iter().map(move |&w| (p, w - self.black)))
            .collect();
        IncidenceStructure::from_flag_set(self.black, self.white, flags)
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn num_components(&self) -> usize {
        let mut seen = vec![false; self.adj.len()];
        let mut count = 0;
        for start in 0..self.adj.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// Shortest cycle length by BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.adj.len();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[src] = 0;
            parent[src] = usize::MAX;
            queue.push_back(src);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] >= best {
                    break;
                }
                for &u in &self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Maximum number of internally vertex-disjoint `s`–`t` paths
    /// (unit-capacity max flow on the split-vertex network).
    pub fn local_connectivity(&self, s: usize, t: usize) -> usize {
        assert_ne!(s, t);
        let n = self.adj.len();
        // v_in = 2v, v_out = 2v + 1
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            let cap = if v == s || v == t { n } else { 1 };
            net.add_edge(2 * v, 2 * v + 1, cap);
            for &u in &self.adj[v] {
                net.add_edge(2 * v + 1, 2 * u, n);
            }
        }
        net.max_flow(2 * s + 1, 2 * t)
    }

    /// Size of a minimum vertex cut. Disconnected graphs give 0 and
    /// complete graphs `n - 1`.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.adj.len();
        if n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = n - 1;
        // A minimum cut S misses some vertex among the first best + 1 ones.
        let mut i = 0;
        while i <= best && i < n {
            for j in (i + 1)..n {
                if self.has_edge(i, j) {
                    continue;
                }
                best = best.min(self.local_connectivity(i, j));
            }
            i += 1;
        }
        best
    }
}

struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        Self {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: usize) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let n = self.head.len();
        let mut flow = 0;
        loop {
            let mut prev_edge = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            let mut queue = VecDeque::new();
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for &e in &self.head[v] {
                    let u = self.to[e];
                    if !seen[u] && self.cap[e] > 0 {
                        seen[u] = true;
                        prev_edge[u] = e;
                        queue.push_back(u);
                    }
                }
            }
            if !seen[t] {
                return flow;
            }
            let mut v = t;
            while v != s {
                let e = prev_edge[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::catalog;

    fn hexagon() -> LeviGraph {
        // C6 coloured alternately: black 0..3, white 0..3
        LeviGraph::from_edges(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
    }

    #[test]
    fn hexagon_cycle() {
        let g = hexagon();
        assert_eq!(g.girth(), Girth::Finite(6));
        assert_eq!(g.vertex_connectivity(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn forest_has_infinite_girth() {
        let g = LeviGraph::from_edges(2, 1, &[(0, 0), (1, 0)]);
        assert_eq!(g.girth(), Girth::Infinite);
        assert!(g.girth().at_least(6));
        assert_eq!(g.vertex_connectivity(), 1);
    }

    #[test]
    fn disconnected_graph_has_zero_connectivity() {
        let g = LeviGraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
        assert_eq!(g.num_components(), 2);
        assert_eq!(g.vertex_connectivity(), 0);
    }

    #[test]
    fn miquel_levi_graph() {
        let g = catalog("miquel").unwrap().levi_graph();
        assert_eq!(g.num_vertices(), 14);
        assert_eq!(g.num_edges(), 24);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert!((8..14).all(|v| g.degree(v) == 4));
        assert_eq!(g.girth(), Girth::Finite(4));
    }

    #[test]
    fn dual_levi_graph_is_colour_swap() {
        for name in ["miquel", "fano", "anti-miquel-small"] {
            let c = catalog(name).unwrap();
            assert_eq!(c.dual().levi_graph(), c.levi_graph().swap_colours());
            assert_eq!(c.levi_graph().to_structure(), c);
        }
    }

    /// Smallest vertex cut by brute-force subset enumeration.
    fn brute_force_connectivity(g: &LeviGraph) -> usize {
        let n = g.num_vertices();
        for size in 0..n.saturating_sub(1) {
            let mut found = false;
            for_each_subset(n, size, &mut |cut: &[usize]| {
                if !found && disconnects(g, cut) {
                    found = true;
                }
            });
            if found {
                return size;
            }
        }
        n - 1
    }

    fn disconnects(g: &LeviGraph, cut: &[usize]) -> bool {
        let n = g.num_vertices();
        let removed: Vec<bool> = (0..n).map(|v| cut.contains(&v)).collect();
        let Some(start) = (0..n).find(|&v| !removed[v]) else {
            return false;
        };
        let mut seen = removed.clone();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().any(|s| !s)
    }

    fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if cur.len() == k {
                f(cur);
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, f);
                cur.pop();
            }
        }
        rec(0, n, k, &mut Vec::new(), f);
    }

    #[test]
    fn heawood_connectivity_matches_brute_force() {
        let g = catalog("fano").unwrap().levi_graph();
        assert_eq!(brute_force_connectivity(&g), 3);
        assert_eq!(g.vertex_connectivity(), 3);
        assert_eq!(g.girth(), Girth::Finite(6));
    }

    #[test]
    fn miquel_connectivity_matches_brute_force() {
        let g = catalog("miquel").unwrap().levi_graph();
        assert_eq!(g.vertex_connectivity(), brute_force_connectivity(&g));
    }
}
