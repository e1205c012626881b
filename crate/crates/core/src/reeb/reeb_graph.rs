//! Reeb graph by tracking level circles across vertex values.

use serde::Serialize;

use crate::multigraph::MultiGraph;

use super::merge_tree::MergeTree;
use super::mesh::TriSurfaceFn;
use super::sublevel::level_pieces;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebGraph {
    /// Critical vertices in increasing value order.
    pub nodes: Vec<usize>,
    pub graph: MultiGraph,
}

/// Nodes are the critical vertices; arcs are maximal families of level
/// circles, continued through every regular vertex value.
pub fn reeb_graph(s: &TriSurfaceFn) -> ReebGraph {
    let tree = MergeTree::new(s);
    let n = s.vertex_count();
    let intervals: Vec<Vec<Vec<(usize, usize)>>> =
        (0..n - 1).map(|k| level_pieces(s, &tree, k, false).into_iter().map(|p| p.edges).collect()).collect();
    let mut offset = vec![0; n];
    for k in 1..n {
        offset[k] = offset[k - 1] + intervals.get(k - 1).map_or(0, Vec::len);
    }
    let total = offset[n - 1];
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let touches = |circle: &[(usize, usize)], v: usize| circle.iter().any(|&(a, b)| a == v || b == v);
    for k in 1..n - 1 {
        let v = s.order()[k];
        let below = &intervals[k - 1];
        let above = &intervals[k];
        for (i, a) in below.iter().enumerate() {
            if touches(a, v) {
                continue;
            }
            // A circle away from `v` persists unchanged.
            for (j, b) in above.iter().enumerate() {
                if b.contains(&a[0]) {
                    let (x, y) = (find(&mut parent, offset[k - 1] + i), find(&mut parent, offset[k] + j));
                    parent[x] = y;
                }
            }
        }
        if !s.is_critical(v) {
            let i = below.iter().position(|c| touches(c, v)).expect("regular vertex has a circle below");
            let j = above.iter().position(|c| touches(c, v)).expect("regular vertex has a circle above");
            let (x, y) = (find(&mut parent, offset[k - 1] + i), find(&mut parent, offset[k] + j));
            parent[x] = y;
        }
    }

    let nodes: Vec<usize> = s.order().iter().copied().filter(|&v| s.is_critical(v)).collect();
    let node_index = |v: usize| nodes.iter().position(|&u| u == v).expect("critical vertex");
    let mut graph = MultiGraph::new(nodes.len());
    let mut ends: Vec<(Option<usize>, Option<usize>)> = vec![(None, None); total];
    for k in 0..n - 1 {
        for (i, c) in intervals[k].iter().enumerate() {
            let root = find(&mut parent, offset[k] + i);
            let (lo, hi) = (s.order()[k], s.order()[k + 1]);
            if touches(c, lo) && s.is_critical(lo) {
                ends[root].0 = Some(node_index(lo));
            }
            if touches(c, hi) && s.is_critical(hi) {
                ends[root].1 = Some(node_index(hi));
            }
        }
    }
    for (root, &(lo, hi)) in ends.iter().enumerate() {
        if find(&mut parent, root) == root {
            graph.add_edge(lo.expect("arc starts at a critical vertex"), hi.expect("arc ends at a critical vertex"));
        }
    }
    ReebGraph { nodes, graph }
}
