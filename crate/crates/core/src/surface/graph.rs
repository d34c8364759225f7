use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::SurfaceError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub label: String,
    pub weight: i64,
}

/// Weighted dual graph: one node per curve (weight = self-intersection), one
/// edge per intersection point.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DualGraph {
    nodes: Vec<GraphNode>,
    /// `(i, j, multiplicity)` with `i < j`.
    edges: Vec<(usize, usize, u32)>,
}

/// JSON form `{nodes:[{label,weight}], edges:[[i,j]]}`, one edge entry per
/// intersection point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraphJson {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<[usize; 2]>,
}

impl DualGraph {
    pub fn new(nodes: Vec<GraphNode>, edges: Vec<(usize, usize, u32)>) -> Self {
        let edges = edges
            .into_iter()
            .filter(|&(_, _, m)| m > 0)
            .map(|(i, j, m)| (i.min(j), i.max(j), m))
            .collect();
        DualGraph { nodes, edges }
    }

    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    pub fn weight(&self, label: &str) -> Option<i64> {
        self.index_of(label).map(|i| self.nodes[i].weight)
    }

    pub fn weights(&self) -> Vec<i64> {
        self.nodes.iter().map(|n| n.weight).collect()
    }

    /// Number of intersection points, counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|&(_, _, m)| m as usize).sum()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b, _)| a == i || b == i)
            .map(|&(_, _, m)| m as usize)
            .sum()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// A tip is a node of degree at most one.
    pub fn is_tip(&self, label: &str) -> Result<bool, SurfaceError> {
        let i = self
            .index_of(label)
            .ok_or_else(|| SurfaceError::UnknownCurve(label.to_string()))?;
        Ok(self.degree(i) <= 1)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut seen = BTreeSet::from([0]);
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if seen.insert(j) {
                    stack.push(j);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    /// Connected, no multiple edges, `#edges = #nodes - 1`.
    pub fn is_tree(&self) -> bool {
        !self.nodes.is_empty()
            && self.edges.iter().all(|&(_, _, m)| m == 1)
            && self.edge_count() + 1 == self.nodes.len()
            && self.is_connected()
    }

    /// A comb: a tree whose non-tip nodes form a linear chain, with every
    /// degree at most three.
    pub fn is_comb(&self) -> bool {
        if !self.is_tree() || self.max_degree() > 3 {
            return false;
        }
        let inner: Vec<usize> = (0..self.len()).filter(|&i| self.degree(i) > 1).collect();
        inner.iter().all(|&i| {
            self.neighbors(i)
                .into_iter()
                .filter(|j| inner.contains(j))
                .count()
                <= 2
        })
    }

    /// If the graph is a linear chain, its node indices in order starting
    /// from `start` (which must be an end).
    pub fn chain_from(&self, start: &str) -> Option<Vec<usize>> {
        let s = self.index_of(start)?;
        if !self.is_tree() || self.max_degree() > 2 || self.degree(s) > 1 {
            return None;
        }
        let mut order = vec![s];
        let mut prev = None;
        let mut cur = s;
        loop {
            let next = self.neighbors(cur).into_iter().find(|&j| Some(j) != prev);
            match next {
                Some(j) => {
                    order.push(j);
                    prev = Some(cur);
                    cur = j;
                }
                None => break,
            }
        }
        Some(order)
    }

    /// Euler characteristic of the curve configuration when every node is a
    /// smooth rational curve and crossings are transversal.
    pub fn rational_euler(&self) -> i64 {
        2 * self.nodes.len() as i64 - self.edge_count() as i64
    }

    pub fn to_json(&self) -> DualGraphJson {
        let mut edges = Vec::new();
        for &(i, j, m) in &self.edges {
            for _ in 0..m {
                edges.push([i, j]);
            }
        }
        DualGraphJson {
            nodes: self.nodes.clone(),
            edges,
        }
    }

    pub fn from_json(json: &DualGraphJson) -> Result<Self, SurfaceError> {
        let n = json.nodes.len();
        let mut edges: Vec<(usize, usize, u32)> = Vec::new();
        for &[i, j] in &json.edges {
            if i >= n || j >= n || i == j {
                return Err(SurfaceError::MalformedGraph(format!("bad edge [{i}, {j}]")));
            }
            let key = (i.min(j), i.max(j));
            match edges.iter_mut().find(|e| (e.0, e.1) == key) {
                Some(e) => e.2 += 1,
                None => edges.push((key.0, key.1, 1)),
            }
        }
        Ok(DualGraph::new(json.nodes.clone(), edges))
    }

    /// Graphviz DOT, undirected, node labels `name (weight)`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_id(name));
        for (i, n) in self.nodes.iter().enumerate() {
            let label = format!("{} ({})", n.label, n.weight);
            let _ = writeln!(out, "  n{i} [label={}];", dot_id(&label));
        }
        for &(i, j, m) in &self.edges {
            for _ in 0..m {
                let _ = writeln!(out, "  n{i} -- n{j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(weights: &[i64]) -> DualGraph {
        let nodes = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| GraphNode {
                label: format!("C{i}"),
                weight: w,
            })
            .collect();
        let edges = (1..weights.len()).map(|i| (i - 1, i, 1)).collect();
        DualGraph::new(nodes, edges)
    }

    #[test]
    fn tips_of_chain() {
        let g = chain(&[-2, -1, -2]);
        assert!(g.is_tip("C0").unwrap());
        assert!(!g.is_tip("C1").unwrap());
        assert!(g.is_tip("C2").unwrap());
        assert!(g.is_tip("nope").is_err());
        let single = chain(&[0]);
        assert!(single.is_tip("C0").unwrap());
    }

    #[test]
    fn comb_detection() {
        assert!(chain(&[-1, -2, -2]).is_comb());
        // spine C0-C1-C2 with a tooth on C1
        let mut g = chain(&[-2, -3, -2]);
        g.nodes.push(GraphNode {
            label: "T".into(),
            weight: -1,
        });
        g.edges.push((1, 3, 1));
        assert!(g.is_comb());
        // spider with three legs of length two is not a comb
        let nodes = (0..7)
            .map(|i| GraphNode {
                label: format!("S{i}"),
                weight: -2,
            })
            .collect();
        let spider = DualGraph::new(
            nodes,
            vec![
                (0, 1, 1),
                (1, 2, 1),
                (0, 3, 1),
                (3, 4, 1),
                (0, 5, 1),
                (5, 6, 1),
            ],
        );
        assert!(spider.is_tree());
        assert!(!spider.is_comb());
    }

    #[test]
    fn chain_order_and_euler() {
        let g = chain(&[-3, -1, -2, -2]);
        assert_eq!(g.chain_from("C0").unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(g.chain_from("C3").unwrap(), vec![3, 2, 1, 0]);
        assert!(g.chain_from("C1").is_none());
        assert_eq!(g.rational_euler(), 5);
    }

    #[test]
    fn dot_and_json() {
        let g = DualGraph::new(
            vec![
                GraphNode {
                    label: "A".into(),
                    weight: 0,
                },
                GraphNode {
                    label: "B".into(),
                    weight: 1,
                },
            ],
            vec![(0, 1, 2)],
        );
        let dot = g.to_dot("g");
        assert!(dot.starts_with("graph \"g\" {"));
        assert!(dot.contains("[label=\"A (0)\"]"));
        assert_eq!(dot.matches("n0 -- n1;").count(), 2);
        let json = g.to_json();
        assert_eq!(json.edges, vec![[0, 1], [0, 1]]);
        assert_eq!(DualGraph::from_json(&json).unwrap(), g);
        assert!(!g.is_tree());
    }
}
