//! Vertex connectivity by unit-capacity max-flow on the vertex-split digraph.

use crate::graph::{Graph, VertexSet};

/// Maximum number of internally vertex-disjoint `s`-`t` paths, for
/// non-adjacent distinct `s` and `t`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "endpoints must be distinct and non-adjacent");
    let n = g.n();
    // node 2v = v_in, 2v+1 = v_out
    let m = 2 * n;
    let big = n as i32 + 1;
    let mut cap = vec![vec![0i32; m]; m];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { big } else { 1 };
        for w in g.neighbors(v) {
            cap[2 * v + 1][2 * w] = big;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    loop {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..m {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity κ(G): `n - 1` for complete graphs, 0 for
/// disconnected graphs, otherwise the size of a minimum separator.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().unwrap_or(0);
    // A minimum separator S misses one of v_0..v_|S|; that vertex has a
    // non-neighbour on the far side of S.
    let mut i = 0;
    while i <= best && i < n {
        let others = g.vertices() - g.neighbors(i).with(i);
        for j in others {
            if best == 0 {
                return 0;
            }
            best = best.min(local_vertex_connectivity(g, i, j));
        }
        i += 1;
    }
    best
}

/// Whether `g` stays connected after deleting any `k - 1` vertices and has
/// more than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    k == 0 || (g.n() > k && vertex_connectivity(g) >= k)
}

/// Vertex connectivity of `G[S]`.
pub fn connectivity_within(g: &Graph, s: VertexSet) -> usize {
    let sub = g.induced_subgraph(s).expect("subset of the vertex set");
    vertex_connectivity(&sub.graph)
}
