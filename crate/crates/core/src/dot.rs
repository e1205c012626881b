//! Graphviz DOT renderings.

use std::fmt::Write;

use crate::adapters::digraph::{ClassKind, Digraph, OrbitSpace};
use crate::morse::MorseAssignment;
use crate::multigraph::MultiGraph;
use crate::space::{FiniteSpace, QuotientMap};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn set_label(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

/// Cover pairs `(a, b)` with `a < b` of the specialization order.
pub fn covers(space: &FiniteSpace) -> Vec<(usize, usize)> {
    let strict: Vec<(usize, usize)> = space.order().pairs().filter(|&(a, b)| a != b && !space.le(b, a)).collect();
    strict
        .iter()
        .copied()
        .filter(|&(a, b)| !(0..space.len()).any(|c| c != a && c != b && strict.contains(&(a, c)) && strict.contains(&(c, b))))
        .collect()
}

/// Hasse diagram of a quotient space, each node labelled with its class.
/// Edges point from a class to the classes whose closure contains it.
pub fn quotient_dot(name: &str, q: &QuotientMap) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (i, c) in q.classes.iter().enumerate() {
        writeln!(out, "  q{i} [label={}];", quote(&set_label(&q.source.names(c)))).unwrap();
    }
    for (a, b) in covers(&q.target) {
        writeln!(out, "  q{a} -> q{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Vertex sets as ellipses; a hyper-edge with one member is a
/// double-bordered loop, larger ones go through a box node.
pub fn morse_dot(space: &FiniteSpace, m: &MorseAssignment) -> String {
    let mut out = String::from("graph morse {\n");
    for (i, v) in m.graph.vertices.iter().enumerate() {
        writeln!(out, "  v{i} [label={}];", quote(&set_label(&space.names(v)))).unwrap();
    }
    for (j, (members, points)) in m.graph.edges.iter().zip(&m.edge_sets).enumerate() {
        let label = quote(&set_label(&space.names(points)));
        if let [only] = members[..] {
            writeln!(out, "  v{only} -- v{only} [label={label}, peripheries=2];").unwrap();
        } else {
            writeln!(out, "  h{j} [shape=box, label={label}];").unwrap();
            for i in members {
                writeln!(out, "  h{j} -- v{i};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Orbit space: vertex classes as nodes; each edge class joins the vertex
/// classes in its closure, or becomes a box when it meets other than two.
pub fn orbit_dot(g: &Digraph, orbit: &OrbitSpace) -> String {
    let q = &orbit.partition.space;
    let mut out = String::from("graph orbits {\n");
    let label = |c: usize| {
        let names: Vec<String> = orbit.partition.classes[c].iter().map(|s| g.stratum_name(s)).collect();
        quote(&set_label(&names))
    };
    for (c, kind) in orbit.kinds.iter().enumerate() {
        if *kind == ClassKind::Vertex {
            writeln!(out, "  c{c} [label={}];", label(c)).unwrap();
        }
    }
    for (c, kind) in orbit.kinds.iter().enumerate() {
        if *kind != ClassKind::Edge {
            continue;
        }
        let ends: Vec<usize> =
            (0..q.class_count()).filter(|&d| d != c && orbit.kinds[d] == ClassKind::Vertex && q.target.le(d, c)).collect();
        match ends[..] {
            [a] => writeln!(out, "  c{a} -- c{a} [label={}];", label(c)).unwrap(),
            [a, b] => writeln!(out, "  c{a} -- c{b} [label={}];", label(c)).unwrap(),
            _ => {
                writeln!(out, "  c{c} [shape=box, label={}];", label(c)).unwrap();
                for a in ends {
                    writeln!(out, "  c{c} -- c{a};").unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// A multigraph as a DOT cluster body; `prefix` keeps node names distinct
/// when several graphs share one file.
pub fn multigraph_cluster(prefix: &str, title: &str, g: &MultiGraph, labels: &[String]) -> String {
    let mut out = format!("  subgraph cluster_{prefix} {{\n    label={};\n", quote(title));
    for v in 0..g.vertex_count {
        let label = labels.get(v).cloned().unwrap_or_else(|| v.to_string());
        writeln!(out, "    {prefix}{v} [label={}];", quote(&label)).unwrap();
    }
    for &(a, b) in &g.edges {
        writeln!(out, "    {prefix}{a} -- {prefix}{b};").unwrap();
    }
    out.push_str("  }\n");
    out
}
