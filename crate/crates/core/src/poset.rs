//! Finite posets given by down-set bitsets: transitive reduction and export.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::par;

/// Hasse diagram with labelled nodes; an edge `(u, w)` means `u ⋖ w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hasse {
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl Hasse {
    /// Transitive reduction from `down[w] = {u : u ≤ w}` (reflexive).
    pub fn from_down_sets(nodes: Vec<String>, down: &[FixedBitSet]) -> Self {
        assert_eq!(nodes.len(), down.len());
        let n = down.len();
        let per_node: Vec<Vec<(usize, usize)>> = par::map_range(n, |w| {
            let mut strict = down[w].clone();
            strict.set(w, false);
            let mut covered = FixedBitSet::with_capacity(n);
            for v in strict.ones() {
                let mut below = down[v].clone();
                below.set(v, false);
                covered.union_with(&below);
            }
            strict.difference(&covered).map(|u| (u, w)).collect()
        });
        let mut edges: Vec<(usize, usize)> = per_node.into_iter().flatten().collect();
        edges.sort();
        Hasse { nodes, edges }
    }

    /// Covers of a graded poset: pairs one rank apart that are comparable.
    pub fn from_graded<F>(nodes: Vec<String>, ranks: &[usize], leq: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let n = nodes.len();
        let per_node: Vec<Vec<(usize, usize)>> = par::map_range(n, |w| {
            (0..n)
                .filter(|&u| ranks[u] + 1 == ranks[w] && leq(u, w))
                .map(|u| (u, w))
                .collect()
        });
        let mut edges: Vec<(usize, usize)> = per_node.into_iter().flatten().collect();
        edges.sort();
        Hasse { nodes, edges }
    }

    /// Nodes with nothing above them.
    pub fn maximal(&self) -> Vec<usize> {
        let mut has_up = vec![false; self.nodes.len()];
        for &(u, _) in &self.edges {
            has_up[u] = true;
        }
        (0..self.nodes.len()).filter(|&k| !has_up[k]).collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{}\" {{", escape(name)).unwrap();
        s.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (k, label) in self.nodes.iter().enumerate() {
            writeln!(s, "  n{k} [label=\"{}\"];", escape(label)).unwrap();
        }
        for &(u, w) in &self.edges {
            writeln!(s, "  n{u} -> n{w};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("lower\tupper\n");
        for &(u, w) in &self.edges {
            writeln!(s, "{}\t{}", self.nodes[u], self.nodes[w]).unwrap();
        }
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
