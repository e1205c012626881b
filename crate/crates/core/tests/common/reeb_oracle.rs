//! Reeb graph of a PL function by region growing, sharing no code with the
//! library's level-circle tracer.

#![allow(dead_code)]

use semideco::multigraph::MultiGraph;
use semideco::reeb::mesh::TriSurfaceFn;

pub struct UnionFind(Vec<usize>);

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Number of connected components of the link of `v` restricted to
/// neighbours below (`lower`) or above it, from the triangles alone.
pub fn link_components(s: &TriSurfaceFn, v: usize, lower: bool) -> usize {
    let side = |u: usize| (s.value(u) < s.value(v)) == lower;
    let mut nodes: Vec<usize> = Vec::new();
    let mut links: Vec<(usize, usize)> = Vec::new();
    for t in s.triangles().iter().filter(|t| t.contains(&v)) {
        let others: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
        for &u in &others {
            if side(u) && !nodes.contains(&u) {
                nodes.push(u);
            }
        }
        if side(others[0]) && side(others[1]) {
            links.push((others[0], others[1]));
        }
    }
    let mut uf = UnionFind::new(nodes.len());
    for (a, b) in links {
        let (i, j) = (nodes.iter().position(|&x| x == a).unwrap(), nodes.iter().position(|&x| x == b).unwrap());
        uf.union(i, j);
    }
    (0..nodes.len()).filter(|&i| uf.find(i) == i).count()
}

pub fn oracle_critical(s: &TriSurfaceFn, v: usize) -> bool {
    !(link_components(s, v, true) == 1 && link_components(s, v, false) == 1)
}

/// Reeb graph by region growing over the triangle pieces of each open slab
/// between consecutive critical values, glued through regular level
/// components and attached to critical ones.
pub fn region_growing_reeb(s: &TriSurfaceFn) -> MultiGraph {
    let mut crit: Vec<usize> = (0..s.vertex_count()).filter(|&v| oracle_critical(s, v)).collect();
    crit.sort_by(|&a, &b| s.value(a).total_cmp(&s.value(b)));
    let levels: Vec<f64> = crit.iter().map(|&v| s.value(v)).collect();
    let tris = s.triangles();
    let range = |t: &[usize; 3]| {
        let vals = t.map(|v| s.value(v));
        (vals.iter().copied().fold(f64::INFINITY, f64::min), vals.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    };
    // Piece (slab j, triangle t) exists when the triangle meets the open slab.
    let slabs = levels.len() - 1;
    let piece = |j: usize, t: usize| j * tris.len() + t;
    let meets = |j: usize, t: usize| {
        let (lo, hi) = range(&tris[t]);
        lo < levels[j + 1] && hi > levels[j]
    };
    let mut uf = UnionFind::new(slabs * tris.len());
    for j in 0..slabs {
        let (a, b) = (levels[j], levels[j + 1]);
        for t in 0..tris.len() {
            for u in t + 1..tris.len() {
                if !meets(j, t) || !meets(j, u) {
                    continue;
                }
                let shared: Vec<usize> = tris[t].iter().copied().filter(|v| tris[u].contains(v)).collect();
                let joined = match shared[..] {
                    [p, q] => {
                        let (lo, hi) = (s.value(p).min(s.value(q)), s.value(p).max(s.value(q)));
                        lo < b && hi > a
                    }
                    [p] => s.value(p) > a && s.value(p) < b,
                    _ => false,
                };
                if joined {
                    uf.union(piece(j, t), piece(j, u));
                }
            }
        }
    }
    // Level sets at interior critical values: crossing edges plus the vertex.
    let mut attach: Vec<(usize, usize)> = Vec::new();
    for (i, &c) in levels.iter().enumerate() {
        let v = crit[i];
        let mut nodes: Vec<Option<(usize, usize)>> = vec![None];
        let mut touching: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut links = Vec::new();
        for (t, tri) in tris.iter().enumerate() {
            let mut here = Vec::new();
            for (p, q) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
                let (lo, hi) = if s.value(p) < s.value(q) { (p, q) } else { (q, p) };
                if s.value(lo) < c && s.value(hi) > c {
                    let id = match nodes.iter().position(|&n| n == Some((lo, hi))) {
                        Some(id) => id,
                        None => {
                            nodes.push(Some((lo, hi)));
                            nodes.len() - 1
                        }
                    };
                    here.push(id);
                }
            }
            if tri.contains(&v) {
                here.push(0);
            }
            if !here.is_empty() {
                for w in here.windows(2) {
                    links.push((w[0], w[1]));
                }
                touching.push((t, here));
            }
        }
        let mut level = UnionFind::new(nodes.len());
        for (a, b) in links {
            level.union(a, b);
        }
        let root_v = level.find(0);
        for (t, here) in touching {
            let on_vertex = level.find(here[0]) == root_v;
            let sides: Vec<usize> = [i.checked_sub(1), (i < slabs).then_some(i)]
                .into_iter()
                .flatten()
                .filter(|&j| meets(j, t))
                .map(|j| piece(j, t))
                .collect();
            if on_vertex {
                attach.extend(sides.iter().map(|&p| (p, i)));
            } else if let [p, q] = sides[..] {
                uf.union(p, q);
            }
        }
    }
    let mut ends: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (p, node) in attach {
        let r = uf.find(p);
        let e = ends.entry(r).or_default();
        if !e.contains(&node) {
            e.push(node);
        }
    }
    let mut g = MultiGraph::new(levels.len());
    for nodes in ends.values() {
        match nodes[..] {
            [a, b] => g.add_edge(a, b),
            [a] => g.add_edge(a, a),
            _ => panic!("arc with {} ends", nodes.len()),
        }
    }
    g
}
