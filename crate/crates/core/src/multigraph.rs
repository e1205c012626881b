//! Undirected multigraphs with loops, canonical labelling, and homeomorphism
//! classes of the topological graphs they realize.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

/// An undirected multigraph; loops and parallel edges are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultiGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Canonical adjacency code: vertex count followed by the upper triangle
/// (diagonal included) of the multiplicity matrix in canonical order.
pub type CanonicalCode = Vec<u32>;

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph { vertex_count, edges: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.vertex_count && b < self.vertex_count, "edge endpoint out of range");
        self.edges.push((a.min(b), a.max(b)));
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut count = self.vertex_count;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    /// Number of parallel pairs: for each unordered vertex pair (loops
    /// excluded), `multiplicity - 1` summed where positive.
    pub fn parallel_excess(&self) -> usize {
        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        for &e in &self.edges {
            if e.0 != e.1 {
                *counts.entry(e).or_default() += 1;
            }
        }
        counts.values().map(|&c| c - 1).sum()
    }

    fn multiplicities(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0u32; n]; n];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    /// A code equal for two graphs iff they are isomorphic.
    pub fn canonical_code(&self) -> CanonicalCode {
        let m = self.multiplicities();
        let colors = refine(&m, vec![0; self.vertex_count]);
        let mut best: Option<CanonicalCode> = None;
        search(&m, colors, &mut best);
        best.unwrap_or_else(|| vec![0])
    }

    pub fn is_isomorphic(&self, other: &MultiGraph) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.len() == other.edges.len()
            && self.canonical_code() == other.canonical_code()
    }

    /// Suppresses degree-2 vertices. Components that are bare circles are
    /// removed and counted separately.
    pub fn smoothed(&self) -> (MultiGraph, usize) {
        let mut alive = vec![true; self.vertex_count];
        let mut edges: Vec<Option<(usize, usize)>> = self.edges.iter().copied().map(Some).collect();
        let mut circles = 0;
        loop {
            let mut changed = false;
            for v in 0..self.vertex_count {
                if !alive[v] {
                    continue;
                }
                let incident: Vec<usize> =
                    (0..edges.len()).filter(|&i| matches!(edges[i], Some((a, b)) if a == v || b == v)).collect();
                let degree: usize = incident
                    .iter()
                    .map(|&i| {
                        let (a, b) = edges[i].unwrap();
                        (a == v) as usize + (b == v) as usize
                    })
                    .sum();
                if degree != 2 {
                    continue;
                }
                if incident.len() == 1 {
                    edges[incident[0]] = None;
                    alive[v] = false;
                    circles += 1;
                } else {
                    let other = |i: usize| {
                        let (a, b) = edges[i].unwrap();
                        if a == v {
                            b
                        } else {
                            a
                        }
                    };
                    let (x, y) = (other(incident[0]), other(incident[1]));
                    edges[incident[0]] = Some((x.min(y), x.max(y)));
                    edges[incident[1]] = None;
                    alive[v] = false;
                }
                changed = true;
            }
            if !changed {
                break;
            }
        }
        let mut index = vec![usize::MAX; self.vertex_count];
        let mut out = MultiGraph::new(0);
        for v in 0..self.vertex_count {
            if alive[v] {
                index[v] = out.add_vertex();
            }
        }
        for (a, b) in edges.into_iter().flatten() {
            out.add_edge(index[a], index[b]);
        }
        (out, circles)
    }

    /// The homeomorphism class of the realized topological graph.
    pub fn topological_form(&self) -> TopologicalForm {
        let (smooth, circles) = self.smoothed();
        TopologicalForm { circles, code: smooth.canonical_code() }
    }

    pub fn subdivide_edge(&mut self, edge: usize) {
        let (a, b) = self.edges[edge];
        let m = self.add_vertex();
        self.edges[edge] = (a, m);
        self.edges.push((m.min(b), m.max(b)));
    }
}

/// Homeomorphism class of a finite topological graph: number of circle
/// components plus the canonical code of the smoothed remainder.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TopologicalForm {
    pub circles: usize,
    pub code: CanonicalCode,
}

impl TopologicalForm {
    /// One point.
    pub fn is_point(&self) -> bool {
        self.circles == 0 && self.code == [1, 0]
    }
}

impl fmt::Display for TopologicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "point");
        }
        if self.circles == 0 && self.code == [2, 0, 1, 0] {
            return write!(f, "arc");
        }
        if self.circles == 1 && self.code == [0] {
            return write!(f, "circle");
        }
        write!(f, "graph(c{}:", self.circles)?;
        for (i, c) in self.code.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Colour refinement with canonical colour names: each round ranks the
/// sorted list of distinct signatures, so colours do not depend on labels.
fn refine(m: &[Vec<u32>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = m.len();
    loop {
        let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = (0..n).filter(|&u| m[v][u] > 0).map(|u| (colors[u], m[v][u])).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

/// Individualization-refinement over the first non-singleton cell.
fn search(m: &[Vec<u32>], colors: Vec<usize>, best: &mut Option<CanonicalCode>) {
    let n = m.len();
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for &c in &colors {
        *sizes.entry(c).or_default() += 1;
    }
    let target = (0..n).filter(|&v| sizes[&colors[v]] > 1).map(|v| colors[v]).min();
    match target {
        None => {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| colors[v]);
            let mut code = vec![n as u32];
            for i in 0..n {
                for j in i..n {
                    code.push(m[order[i]][order[j]]);
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colors[v] == cell) {
                let split: Vec<usize> =
                    (0..n).map(|u| 2 * colors[u] + usize::from(colors[u] == cell && u != v)).collect();
                search(m, refine(m, split), best);
            }
        }
    }
}
