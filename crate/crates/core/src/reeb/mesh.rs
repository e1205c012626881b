//! Piecewise-linear functions on triangulated closed orientable surfaces.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// A closed, connected, orientable triangulated surface with pairwise
/// distinct vertex values.
///
/// Vertex indices are internal; `ids` keeps the caller's identifiers.
#[derive(Clone, Debug)]
pub struct TriSurfaceFn {
    ids: Vec<u32>,
    values: Vec<f64>,
    triangles: Vec<[usize; 3]>,
    neighbors: Vec<Vec<usize>>,
    /// Neighbours of each vertex in cyclic order around it.
    links: Vec<Vec<usize>>,
    /// Vertices sorted by value.
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl TriSurfaceFn {
    pub fn new(vertices: &[(u32, f64)], triangles: &[[u32; 3]]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, &(id, value)) in vertices.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::Input(format!("vertex {id} has a non-finite value")));
            }
            if index.insert(id, i).is_some() {
                return Err(Error::DuplicatePoint(id.to_string()));
            }
        }
        let n = vertices.len();
        let mut tris = Vec::with_capacity(triangles.len());
        for t in triangles {
            let mut local = [0; 3];
            for (slot, id) in local.iter_mut().zip(t) {
                *slot = *index.get(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))?;
            }
            if local[0] == local[1] || local[1] == local[2] || local[0] == local[2] {
                return Err(Error::NotClosedSurface(format!("degenerate triangle {t:?}")));
            }
            tris.push(local);
        }

        let mut edge_tris: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ti, t) in tris.iter().enumerate() {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                edge_tris.entry((a.min(b), a.max(b))).or_default().push(ti);
            }
        }
        for (&(a, b), ts) in &edge_tris {
            if ts.len() != 2 {
                return Err(Error::NotClosedSurface(format!(
                    "edge ({}, {}) lies in {} triangles",
                    vertices[a].0,
                    vertices[b].0,
                    ts.len()
                )));
            }
        }

        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in edge_tris.keys() {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        let mut links = Vec::with_capacity(n);
        for v in 0..n {
            links.push(link_cycle(v, &tris).ok_or_else(|| {
                Error::NotClosedSurface(format!("link of vertex {} is not a single cycle", vertices[v].0))
            })?);
        }
        if n == 0 || !connected(&neighbors) {
            return Err(Error::Disconnected);
        }
        if !orientable(&tris, &edge_tris) {
            return Err(Error::NotOrientable);
        }

        let values: Vec<f64> = vertices.iter().map(|v| v.1).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                let (a, b) = (vertices[w[0]].0, vertices[w[1]].0);
                return Err(Error::NonGeneric(a.min(b), a.max(b)));
            }
        }
        let mut rank = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            rank[v] = k;
        }
        Ok(TriSurfaceFn { ids: vertices.iter().map(|v| v.0).collect(), values, triangles: tris, neighbors, links, order, rank })
    }

    pub fn vertex_count(&self) -> usize {
        self.values.len()
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, nb) in self.neighbors.iter().enumerate() {
            out.extend(nb.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn id(&self, v: usize) -> u32 {
        self.ids[v]
    }

    pub fn value(&self, v: usize) -> f64 {
        self.values[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighbours of `v` in cyclic order.
    pub fn link(&self, v: usize) -> &[usize] {
        &self.links[v]
    }

    /// Vertices in increasing value order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - (self.triangles.len() * 3 / 2) as i64 + self.triangles.len() as i64
    }

    pub fn genus(&self) -> usize {
        ((2 - self.euler_characteristic()) / 2) as usize
    }

    /// Number of maximal arcs of the link of `v` whose vertices lie below
    /// (`lower = true`) or above `v`. A full link counts as one arc.
    pub fn link_arcs(&self, v: usize, lower: bool) -> usize {
        let link = &self.links[v];
        let side = |u: usize| (self.rank[u] < self.rank[v]) == lower;
        let total = link.iter().filter(|&&u| side(u)).count();
        if total == link.len() {
            return 1;
        }
        (0..link.len()).filter(|&i| side(link[i]) && !side(link[(i + link.len() - 1) % link.len()])).count()
    }

    /// Critical in the lower-link sense: a minimum, maximum or saddle.
    pub fn is_critical(&self, v: usize) -> bool {
        let lower = self.neighbors[v].iter().any(|&u| self.rank[u] < self.rank[v]);
        let upper = self.neighbors[v].iter().any(|&u| self.rank[u] > self.rank[v]);
        !lower || !upper || self.link_arcs(v, true) != 1
    }

    pub fn is_minimum(&self, v: usize) -> bool {
        self.neighbors[v].iter().all(|&u| self.rank[u] > self.rank[v])
    }

    pub fn is_maximum(&self, v: usize) -> bool {
        self.neighbors[v].iter().all(|&u| self.rank[u] < self.rank[v])
    }

    /// Barycentric subdivision; new vertices get the average value of the
    /// vertices of their carrier simplex, nudged off existing values.
    pub fn barycentric_subdivision(&self) -> TriSurfaceFn {
        let mut verts: Vec<(u32, f64)> = (0..self.vertex_count()).map(|v| (v as u32, self.values[v])).collect();
        let mut edge_mid: HashMap<(usize, usize), u32> = HashMap::new();
        let mut next = verts.len() as u32;
        for (a, b) in self.edges() {
            edge_mid.insert((a, b), next);
            verts.push((next, (self.values[a] + self.values[b]) / 2.0));
            next += 1;
        }
        let mut tris = Vec::new();
        for t in &self.triangles {
            let centre = next;
            next += 1;
            verts.push((centre, (self.values[t[0]] + self.values[t[1]] + self.values[t[2]]) / 3.0));
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                let m = edge_mid[&(a.min(b), a.max(b))];
                tris.push([a as u32, m, centre]);
                tris.push([m, b as u32, centre]);
            }
        }
        let span = self.values[self.order[self.vertex_count() - 1]] - self.values[self.order[0]];
        let eps = span * 1e-9 / verts.len() as f64;
        for (k, v) in verts.iter_mut().enumerate().skip(self.vertex_count()) {
            v.1 += k as f64 * eps;
        }
        TriSurfaceFn::new(&verts, &tris).expect("subdivision of a valid surface")
    }
}

/// Orders the link of `v` into a cycle, if it is one.
fn link_cycle(v: usize, tris: &[[usize; 3]]) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in tris.iter().filter(|t| t.contains(&v)) {
        let others: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
        adj.entry(others[0]).or_default().push(others[1]);
        adj.entry(others[1]).or_default().push(others[0]);
    }
    if adj.len() < 3 || adj.values().any(|nb| nb.len() != 2) {
        return None;
    }
    let start = *adj.keys().next()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0];
    while cur != start {
        cycle.push(cur);
        let nb = &adj[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (cycle.len() == adj.len()).then_some(cycle)
}

fn connected(neighbors: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; neighbors.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &neighbors[v] {
            if !std::mem::replace(&mut seen[u], true) {
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Tries to orient all triangles so that each edge is traversed once in each
/// direction.
fn orientable(tris: &[[usize; 3]], edge_tris: &BTreeMap<(usize, usize), Vec<usize>>) -> bool {
    let directed = |t: &[usize; 3], flip: bool| -> Vec<(usize, usize)> {
        let e = [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])];
        e.iter().map(|&(a, b)| if flip { (b, a) } else { (a, b) }).collect()
    };
    let mut flip: Vec<Option<bool>> = vec![None; tris.len()];
    for seed in 0..tris.len() {
        if flip[seed].is_some() {
            continue;
        }
        flip[seed] = Some(false);
        let mut stack = vec![seed];
        while let Some(t) = stack.pop() {
            let f = flip[t].unwrap();
            for (a, b) in directed(&tris[t], f) {
                for &u in &edge_tris[&(a.min(b), a.max(b))] {
                    if u == t {
                        continue;
                    }
                    // The neighbour must traverse (b, a).
                    let want = !directed(&tris[u], false).contains(&(b, a));
                    match flip[u] {
                        None => {
                            flip[u] = Some(want);
                            stack.push(u);
                        }
                        Some(g) if g != want => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reeb::fixtures;

    #[test]
    fn fixture_topology() {
        assert_eq!(fixtures::octahedron().genus(), 0);
        assert_eq!(fixtures::pear().genus(), 0);
        assert_eq!(fixtures::grid_torus().genus(), 1);
        assert_eq!(fixtures::csaszar_torus().genus(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let tri = [[0, 1, 2]];
        let verts = [(0, 0.0), (1, 1.0), (2, 2.0)];
        assert!(matches!(TriSurfaceFn::new(&verts, &tri), Err(Error::NotClosedSurface(_))));
        let tet = [[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]];
        let dup = [(0, 0.0), (1, 1.0), (2, 1.0), (3, 3.0)];
        assert_eq!(TriSurfaceFn::new(&dup, &tet).unwrap_err(), Error::NonGeneric(1, 2));
        let bad = [(0, 0.0), (1, 1.0), (2, 2.0), (7, 3.0)];
        assert_eq!(TriSurfaceFn::new(&bad, &tet).unwrap_err(), Error::UnknownVertex("3".into()));
    }

    #[test]
    fn rejects_projective_plane() {
        // Six-vertex real projective plane.
        let rp2 = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]];
        let verts: Vec<(u32, f64)> = (0..6).map(|i| (i, i as f64)).collect();
        assert_eq!(TriSurfaceFn::new(&verts, &rp2).unwrap_err(), Error::NotOrientable);
    }

    #[test]
    fn critical_points_of_octahedron() {
        let s = fixtures::octahedron();
        let crit: Vec<usize> = (0..s.vertex_count()).filter(|&v| s.is_critical(v)).collect();
        assert_eq!(crit.len(), 2);
    }

    #[test]
    fn subdivision_preserves_topology() {
        let s = fixtures::grid_torus().barycentric_subdivision();
        assert_eq!(s.genus(), 1);
    }
}

