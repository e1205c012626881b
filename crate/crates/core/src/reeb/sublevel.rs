//! Homeomorphism types of sublevel components and the level sets bounding
//! them.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::merge_tree::MergeTree;
use super::mesh::TriSurfaceFn;

/// Homeomorphism type of a connected sublevel component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SublevelType {
    Point,
    /// Compact orientable surface of genus `genus` with `boundary` circles.
    Surface { genus: usize, boundary: usize },
    /// Pinched level: Euler characteristic, number of boundary curves and the
    /// number of lower sectors meeting at each pinch point.
    Singular { euler: i64, boundary: usize, pinches: Vec<usize> },
}

impl fmt::Display for SublevelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SublevelType::Point => write!(f, "point"),
            SublevelType::Surface { genus, boundary } => write!(f, "surface(g={genus},b={boundary})"),
            SublevelType::Singular { euler, boundary, pinches } => {
                write!(f, "singular(chi={euler},b={boundary},pinches={pinches:?})")
            }
        }
    }
}

/// A connected piece of a level set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPiece {
    /// Crossing edges `(lower, upper)` the piece passes through.
    pub edges: Vec<(usize, usize)>,
    /// Whether the piece passes through the vertex at the exact level.
    pub through_vertex: bool,
    /// Sublevel component (index into the merge tree level) it bounds.
    pub component: usize,
}

/// Connected pieces of `f⁻¹(c)` for `c = f_k` (`exact`) or `c` in
/// `(f_k, f_{k+1})`. Isolated level points at extrema are omitted.
pub fn level_pieces(s: &TriSurfaceFn, tree: &MergeTree, k: usize, exact: bool) -> Vec<LevelPiece> {
    let vk = s.order()[k];
    let crossing = |a: usize, b: usize| -> Option<(usize, usize)> {
        let (lo, hi) = if s.rank(a) < s.rank(b) { (a, b) } else { (b, a) };
        let crosses = s.rank(lo) <= k && s.rank(hi) > k && !(exact && lo == vk);
        crosses.then_some((lo, hi))
    };
    // Node 0 is the vertex itself when exact; crossing edges follow.
    let mut node_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut nodes: Vec<Option<(usize, usize)>> = vec![None];
    let mut links: Vec<(usize, usize)> = Vec::new();
    for t in s.triangles() {
        let mut here = Vec::with_capacity(2);
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            if let Some(e) = crossing(a, b) {
                let next = nodes.len();
                let id = *node_of.entry(e).or_insert_with(|| {
                    nodes.push(Some(e));
                    next
                });
                here.push(id);
            }
        }
        if exact && t.contains(&vk) && here.len() == 1 {
            here.push(0);
        }
        if here.len() == 2 {
            links.push((here[0], here[1]));
        }
    }
    let m = nodes.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut touched = vec![false; m];
    for &(a, b) in &links {
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut pieces: Vec<(usize, LevelPiece)> = Vec::new();
    for i in 0..m {
        if i == 0 && !touched[0] {
            continue;
        }
        let r = find(&mut parent, i);
        let idx = match pieces.iter().position(|(root, _)| *root == r) {
            Some(idx) => idx,
            None => {
                let lower = nodes[i].map_or(vk, |e| e.0);
                let component = tree.component_of(k, lower).expect("lower endpoint is alive");
                pieces.push((r, LevelPiece { edges: Vec::new(), through_vertex: false, component }));
                pieces.len() - 1
            }
        };
        match nodes[i] {
            Some(e) => pieces[idx].1.edges.push(e),
            None => pieces[idx].1.through_vertex = true,
        }
    }
    pieces.into_iter().map(|(_, mut p)| {
        p.edges.sort_unstable();
        p
    }).collect()
}

/// Euler characteristic of component `c` of `L_k`.
pub fn component_euler(s: &TriSurfaceFn, tree: &MergeTree, k: usize, c: usize) -> i64 {
    let inside = |v: usize| tree.component_of(k, v) == Some(c);
    let verts = tree.components[k][c].len() as i64;
    let edges = s.edges().iter().filter(|&&(a, b)| inside(a) && inside(b)).count() as i64;
    let tris = s.triangles().iter().filter(|t| t.iter().all(|&v| inside(v))).count() as i64;
    verts - edges + tris
}

/// Level index `k` with `f_k <= c < f_{k+1}`, and whether `c = f_k`.
pub fn level_at(s: &TriSurfaceFn, c: f64) -> Option<(usize, bool)> {
    let alive = s.order().iter().take_while(|&&v| s.value(v) <= c).count();
    let k = alive.checked_sub(1)?;
    Some((k, s.value(s.order()[k]) == c))
}

/// Type of component `c` of `L_k` at level `f_k` (`exact`) or just above.
pub fn component_type(s: &TriSurfaceFn, tree: &MergeTree, k: usize, c: usize, exact: bool) -> Result<SublevelType> {
    let vk = s.order()[k];
    let at_vertex = exact && tree.component_of(k, vk) == Some(c);
    if at_vertex && tree.components[k][c].len() == 1 {
        return Ok(SublevelType::Point);
    }
    let euler = component_euler(s, tree, k, c);
    let boundary = level_pieces(s, tree, k, exact).iter().filter(|p| p.component == c).count();
    let saddle = at_vertex && !s.is_maximum(vk) && s.link_arcs(vk, true) > 1;
    if saddle {
        return Ok(SublevelType::Singular { euler, boundary, pinches: vec![s.link_arcs(vk, true)] });
    }
    let twice_genus = 2 - euler - boundary as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::Topology(format!("chi = {euler} with {boundary} boundary circles at level {k}")));
    }
    Ok(SublevelType::Surface { genus: (twice_genus / 2) as usize, boundary })
}

/// Type of the component of `f⁻¹(-∞, c]` containing vertex `v`.
pub fn sublevel_type(s: &TriSurfaceFn, tree: &MergeTree, v: usize, c: f64) -> Result<SublevelType> {
    let not_alive = || Error::ComponentNotAlive { vertex: s.id(v), level: c };
    if s.value(v) > c {
        return Err(not_alive());
    }
    let (k, exact) = level_at(s, c).ok_or_else(not_alive)?;
    let comp = tree.component_of(k, v).ok_or_else(not_alive)?;
    component_type(s, tree, k, comp, exact)
}
