//! Finite trees and the edge-list file format.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

/// A finite, connected, acyclic graph on vertices `0..n`.
///
/// Neighbor lists are sorted and symmetric. Construction validates every
/// tree invariant, so a `Tree` in hand is always a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidTree(
                "tree must have at least one vertex".into(),
            ));
        }
        if edges.len() != n - 1 {
            return Err(GraphError::InvalidTree(format!(
                "{n} vertices need {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidTree(format!(
                    "edge {u}-{v} out of range"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidTree(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(GraphError::InvalidTree("duplicate edge".into()));
            }
        }
        let tree = Self { adjacency };
        // n - 1 edges plus connectivity rules out cycles.
        if tree.bfs_order(0).len() != n {
            return Err(GraphError::InvalidTree("graph is not connected".into()));
        }
        Ok(tree)
    }

    /// Parses the line-oriented edge-list format: a header `n <count>`
    /// followed by one `u v` pair per line. Blank lines and `#` comments
    /// are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line_no, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing `n <count>` header".into(),
        })?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", count] => count.parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                message: format!("bad vertex count: {e}"),
            })?,
            _ => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("expected `n <count>`, got `{header}`"),
                })
            }
        };

        let mut edges = Vec::new();
        for (line_no, line) in lines {
            let parsed: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            match parsed.as_deref() {
                Ok([u, v]) => edges.push((*u, *v)),
                _ => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: format!("expected `u v`, got `{line}`"),
                    })
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) <= 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.adjacency[u].iter().all(|&v| v < u || !s.contains(v)))
    }

    /// Vertices in breadth-first order from `root`, with each vertex's parent.
    pub(crate) fn rooted(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    order.push(v);
                }
            }
        }
        (order, parent)
    }

    fn bfs_order(&self, root: usize) -> Vec<usize> {
        self.rooted(root).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Tree {
        Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn independence_on_path() {
        let t = p4();
        assert!(t.is_independent(&VertexSet::from_ids(4, [0, 2])));
        assert!(!t.is_independent(&VertexSet::from_ids(4, [0, 1])));
        assert!(t.is_independent(&VertexSet::empty(4)));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::from_edges(0, &[]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 0), (1, 2)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1), (0, 1)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1), (1, 5)]).is_err());
        // cycle plus isolated vertex: right edge count, disconnected
        assert!(Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn single_vertex_is_a_tree() {
        let t = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(t.leaves(), vec![0]);
    }

    #[test]
    fn edge_list_round_trip() {
        let t = p4();
        let text = t.to_edge_list();
        assert_eq!(text, "n 4\n0 1\n1 2\n2 3\n");
        assert_eq!(Tree::parse_edge_list(&text).unwrap(), t);
    }

    #[test]
    fn parse_tolerates_comments_and_blank_lines() {
        let t = Tree::parse_edge_list("# star\nn 3\n\n0 1 # spoke\n0 2\n").unwrap();
        assert_eq!(t.neighbors(0), &[1, 2]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Tree::parse_edge_list("n 3\n0 1\n1 x\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Tree::parse_edge_list("3\n0 1\n1 2\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Tree::parse_edge_list(""),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Tree::parse_edge_list("n 3\n0 1\n1 2\n2 0\n"),
            Err(GraphError::InvalidTree(_))
        ));
    }
}
