//! Exact maximum clique by branch and bound with greedy-colouring bounds.

use crate::error::EkrError;
use crate::vertex_set::VertexSet;

/// Undirected graph on `0..n` with bit-vector rows.
pub(crate) struct BitGraph {
    rows: Vec<VertexSet>,
}

impl BitGraph {
    pub(crate) fn new(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut rows = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Self { rows }
    }

    fn n(&self) -> usize {
        self.rows.len()
    }

    fn relabel(&self, order: &[usize]) -> Self {
        let n = self.n();
        let mut rank = vec![0; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let rows = order
            .iter()
            .map(|&v| VertexSet::from_ids(n, self.rows[v].iter().map(|u| rank[u])))
            .collect();
        Self { rows }
    }
}

struct Search<'a> {
    graph: &'a BitGraph,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), EkrError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(EkrError::BudgetExceeded(format!(
                "more than {} search nodes",
                self.max_nodes
            )));
        }
        Ok(())
    }

    /// Greedy colouring of `p` in ascending vertex order. Returns the
    /// vertices grouped by colour class and the class number of each.
    fn colour(&self, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut colours = Vec::with_capacity(p.len());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q = q.difference(&self.graph.rows[v]);
                q.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(
        &mut self,
        clique: &mut Vec<usize>,
        mut p: VertexSet,
        best: &mut usize,
    ) -> Result<(), EkrError> {
        self.tick()?;
        let (order, colours) = self.colour(&p);
        for idx in (0..order.len()).rev() {
            if clique.len() + colours[idx] <= *best {
                return Ok(());
            }
            let v = order[idx];
            clique.push(v);
            let next = p.intersection(&self.graph.rows[v]);
            if next.is_empty() {
                *best = (*best).max(clique.len());
            } else {
                self.expand(clique, next, best)?;
            }
            clique.pop();
            p.remove(v);
        }
        Ok(())
    }

    /// Depth-first search in ascending vertex order for a clique of size
    /// `goal` extending `clique`; the first one found is lexicographically
    /// least.
    fn first_of_size(
        &mut self,
        clique: &mut Vec<usize>,
        mut p: VertexSet,
        goal: usize,
    ) -> Result<bool, EkrError> {
        self.tick()?;
        if clique.len() == goal {
            return Ok(true);
        }
        if clique.len() + p.len() < goal {
            return Ok(false);
        }
        let (_, colours) = self.colour(&p);
        if clique.len() + colours.last().copied().unwrap_or(0) < goal {
            return Ok(false);
        }
        while let Some(v) = p.first() {
            p.remove(v);
            clique.push(v);
            let next = p.intersection(&self.graph.rows[v]);
            if self.first_of_size(clique, next, goal)? {
                return Ok(true);
            }
            clique.pop();
        }
        Ok(false)
    }
}

/// Vertices of the lexicographically least maximum clique, ascending.
pub(crate) fn max_clique(graph: &BitGraph, max_nodes: u64) -> Result<Vec<usize>, EkrError> {
    let n = graph.n();
    if n == 0 {
        return Ok(Vec::new());
    }

    // Size first, on vertices sorted by descending degree.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(graph.rows[v].len()));
    let ranked = graph.relabel(&by_degree);
    let mut search = Search {
        graph: &ranked,
        nodes: 0,
        max_nodes,
    };
    let mut best = greedy_clique(&ranked);
    let all = VertexSet::from_ids(n, 0..n);
    search.expand(&mut Vec::new(), all.clone(), &mut best)?;

    // Then the lexicographically least witness of that size.
    let nodes = search.nodes;
    let mut search = Search {
        graph,
        nodes,
        max_nodes,
    };
    let mut clique = Vec::with_capacity(best);
    let found = search.first_of_size(&mut clique, all, best)?;
    assert!(found, "clique of size {best} vanished");
    Ok(clique)
}

fn greedy_clique(graph: &BitGraph) -> usize {
    let mut p = VertexSet::from_ids(graph.n(), 0..graph.n());
    let mut size = 0;
    while let Some(v) = p
        .iter()
        .max_by_key(|&v| (graph.rows[v].intersection(&p).len(), std::cmp::Reverse(v)))
    {
        size += 1;
        p.intersect_with(&graph.rows[v]);
    }
    size
}
