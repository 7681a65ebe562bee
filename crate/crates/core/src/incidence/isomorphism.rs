use std::collections::VecDeque;

use super::{IncidenceStructure, LeviGraph};

/// Per-vertex invariant used to prune candidates: colour, degree and the
/// number of vertices at each BFS distance.
type Invariant = (bool, usize, Vec<usize>);

fn invariants(g: &LeviGraph) -> Vec<Invariant> {
    (0..g.num_vertices())
        .map(|v| {
            let mut profile = Vec::new();
            for d in g.distances_from(v) {
                if d == usize::MAX {
                    continue;
                }
                if profile.len() <= d {
                    profile.resize(d + 1, 0);
                }
                profile[d] += 1;
            }
            (g.colour(v) == super::Colour::Black, g.degree(v), profile)
        })
        .collect()
}

impl IncidenceStructure {
    /// Colour-preserving isomorphism test on the Levi graphs.
    pub fn is_isomorphic(&self, other: &IncidenceStructure) -> bool {
        self.isomorphism(other).is_some()
    }

    /// A colour-preserving isomorphism, as a map from vertices of
    /// `self.levi_graph()` to vertices of `other.levi_graph()`.
    pub fn isomorphism(&self, other: &IncidenceStructure) -> Option<Vec<usize>> {
        if self.num_points() != other.num_points()
            || self.num_blocks() != other.num_blocks()
            || self.num_flags() != other.num_flags()
        {
            return None;
        }
        let g1 = self.levi_graph();
        let g2 = other.levi_graph();
        let inv1 = invariants(&g1);
        let inv2 = invariants(&g2);
        let mut s1 = inv1.clone();
        let mut s2 = inv2.clone();
        s1.sort();
        s2.sort();
        if s1 != s2 {
            return None;
        }

        let order = search_order(&g1, &inv1);
        let n = g1.num_vertices();
        let mut state = Search {
            g1: &g1,
            g2: &g2,
            inv1: &inv1,
            inv2: &inv2,
            order: &order,
            forward: vec![usize::MAX; n],
            used: vec![false; n],
        };
        state.extend(0).then_some(state.forward)
    }
}

/// BFS order within each component, starting from vertices with the rarest
/// invariant so that early choices are the most constrained.
fn search_order(g: &LeviGraph, inv: &[Invariant]) -> Vec<usize> {
    let n = g.num_vertices();
    let mut rarity: Vec<usize> = (0..n).collect();
    let freq = |v: usize| inv.iter().filter(|x| **x == inv[v]).count();
    let freqs: Vec<usize> = (0..n).map(freq).collect();
    rarity.sort_by_key(|&v| (freqs[v], v));

    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &start in &rarity {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g1: &'a LeviGraph,
    g2: &'a LeviGraph,
    inv1: &'a [Invariant],
    inv2: &'a [Invariant],
    order: &'a [usize],
    forward: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // candidates: neighbours of the image of an already-mapped neighbour
        // of v, or any vertex when v starts a new component
        let anchor = self.g1.neighbours(v).iter().find(|&&u| self.forward[u] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(&u) => self.g2.neighbours(self.forward[u]).to_vec(),
            None => (0..self.g2.num_vertices()).collect(),
        };
        for w in candidates {
            if self.used[w] || self.inv1[v] != self.inv2[w] || !self.consistent(v, w) {
                continue;
            }
            self.forward[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.forward[v] = usize::MAX;
            self.used[w] = false;
        }
        false
    }

    fn consistent(&self, v: usize, w: usize) -> bool {
        let mut mapped = 0;
        for &u in self.g1.neighbours(v) {
            let image = self.forward[u];
            if image != usize::MAX {
                if !self.g2.has_edge(w, image) {
                    return false;
                }
                mapped += 1;
            }
        }
        let image_neighbours = self.g2.neighbours(w).iter().filter(|&&x| self.used[x]).count();
        mapped == image_neighbours
    }
}
