//! Canonical labelling by equitable-partition refinement and
//! individualisation, keeping the lexicographically largest relabelled
//! adjacency. Twin vertices are interchangeable, so only one vertex per twin
//! class is individualised in any cell.

use crate::graph::{Graph, VertexSet};

type Cells = Vec<Vec<usize>>;

/// Splits cells until the ordered partition is equitable. Every step only
/// looks at neighbour counts and cell order, so the result commutes with
/// relabelling.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut s = 0;
    while s < cells.len() {
        let splitter: VertexSet = cells[s].iter().copied().collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(usize, usize)> = cell
                .iter()
                .map(|&v| ((g.neighbors(v) & splitter).len(), v))
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if keyed[0].0 != keyed[keyed.len() - 1].0 {
                split = true;
            }
        }
        *cells = next;
        s = if split { 0 } else { s + 1 };
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

struct Search<'g> {
    g: &'g Graph,
    best_key: Option<Vec<u64>>,
    best_labels: Vec<usize>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.n();
        let mut labels = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            labels[cell[0]] = i;
        }
        let mut key = vec![0u64; n];
        for v in 0..n {
            key[labels[v]] = self
                .g
                .neighbors(v)
                .iter()
                .fold(0u64, |acc, w| acc | 1u64 << (63 - labels[w]));
        }
        if self.best_key.as_ref().is_none_or(|b| key > *b) {
            self.best_key = Some(key);
            self.best_labels = labels;
        }
    }

    fn descend(&mut self, mut cells: Cells) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            self.descend(child);
        }
    }
}

/// `labels[v]` is the canonical position of vertex `v`. Isomorphic graphs
/// relabelled by their canonical labelling are identical.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best_key: None, best_labels: Vec::new() };
    search.descend(vec![(0..n).collect()]);
    search.best_labels
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}
