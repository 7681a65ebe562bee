use super::{Girth, IncidenceStructure};

impl IncidenceStructure {
    /// True iff some `s` points and `t` blocks are mutually incident
    /// (a K_{s,t} with the points on the `s` side).
    ///
    /// Enumerates subsets of the smaller side and intersects the incidence
    /// lists of the chosen elements, pruning as soon as the common
    /// neighbourhood drops below the other side's size.
    pub fn has_biclique(&self, s: usize, t: usize) -> bool {
        assert!(s >= 1 && t >= 1, "biclique sides must be positive");
        if t <= s {
            subset_with_common(&self.block_points, t, s)
        } else {
            subset_with_common(&self.point_blocks, s, t)
        }
    }

    pub fn property_report(&self) -> PropertyReport {
        let k22 = self.has_biclique(2, 2);
        let k32 = self.has_biclique(3, 2);
        let k23 = self.has_biclique(2, 3);
        let k52 = self.has_biclique(5, 2);
        let k25 = self.has_biclique(2, 5);
        let levi = self.levi_graph();
        PropertyReport {
            lineal: !k22,
            circular: !k32,
            strongly_circular: !k32 && !k23,
            conical: !k52,
            strongly_conical: !k52 && !k25,
            girth: levi.girth(),
            vertex_connectivity: levi.vertex_connectivity(),
        }
    }

    pub fn is_lineal(&self) -> bool {
        !self.has_biclique(2, 2)
    }

    pub fn is_circular(&self) -> bool {
        !self.has_biclique(3, 2)
    }

    pub fn is_conical(&self) -> bool {
        !self.has_biclique(5, 2)
    }
}

/// Does some `k`-subset of `lists` have at least `need` common members?
fn subset_with_common(lists: &[Vec<usize>], k: usize, need: usize) -> bool {
    fn rec(lists: &[Vec<usize>], start: usize, left: usize, common: &[usize], need: usize) -> bool {
        if left == 0 {
            return common.len() >= need;
        }
        for i in start..lists.len() {
            if lists.len() - i < left {
                break;
            }
            let next = intersect_sorted(common, &lists[i]);
            if next.len() >= need && rec(lists, i + 1, left - 1, &next, need) {
                return true;
            }
        }
        false
    }
    for i in 0..lists.len() {
        if lists[i].len() >= need && rec(lists, i + 1, k - 1, &lists[i], need) {
            return true;
        }
    }
    false
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Forbidden-biclique properties plus two Levi graph invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyReport {
    /// No K_{2,2}: two points share at most one block.
    pub lineal: bool,
    /// No K_{3,2}: two blocks share at most two points.
    pub circular: bool,
    /// Circular with circular dual.
    pub strongly_circular: bool,
    /// No K_{5,2}: two blocks share at most four points.
    pub conical: bool,
    pub strongly_conical: bool,
    pub girth: Girth,
    pub vertex_connectivity: usize,
}

impl PropertyReport {
    /// Short human-readable list such as `"strongly circular, 2-connected"`.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if self.lineal {
            parts.push("lineal".to_string());
        }
        if self.strongly_circular {
            parts.push("strongly circular".to_string());
        } else if self.circular {
            parts.push("circular".to_string());
        }
        if !self.circular {
            if self.strongly_conical {
                parts.push("strongly conical".to_string());
            } else if self.conical {
                parts.push("conical".to_string());
            } else {
                parts.push("not conical".to_string());
            }
        }
        parts.push(format!("girth {}", self.girth));
        parts.push(format!("{}-connected", self.vertex_connectivity));
        parts.join(", ")
    }
}

/// All 4-cycles of the Levi graph as (point pair, block pair), each
/// listed once with `p1 < p2` and `b1 < b2`.
pub fn four_cycles(c: &IncidenceStructure) -> Vec<([usize; 2], [usize; 2])> {
    let mut out = Vec::new();
    for b1 in 0..c.num_blocks() {
        for b2 in (b1 + 1)..c.num_blocks() {
            let common = intersect_sorted(c.points_of(b1), c.points_of(b2));
            for (i, &p1) in common.iter().enumerate() {
                for &p2 in &common[i + 1..] {
                    out.push(([p1, p2], [b1, b2]));
                }
            }
        }
    }
    out
}
