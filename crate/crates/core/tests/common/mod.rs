//! Slow, independent reference implementations used to check the library.
//! Nothing here calls the library's algorithms; only `Graph` accessors.
#![allow(dead_code, clippy::needless_range_loop)]

use alpha2_minors::{Graph, VertexSet};

/// Triangle-free graph counts on n = 0..=10 vertices, up to isomorphism
/// (OEIS A006785).
pub const TRIANGLE_FREE_COUNTS: [usize; 11] = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172];

pub fn adj_matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn from_matrix(m: &[Vec<bool>]) -> Graph {
    let n = m.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if m[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// α by checking every vertex subset.
pub fn independence_number(g: &Graph) -> usize {
    let n = g.n();
    let m = adj_matrix(g);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if vs.len() > best && vs.iter().all(|&a| vs.iter().all(|&b| a == b || !m[a][b])) {
            best = vs.len();
        }
    }
    best
}

/// ω by checking every vertex subset.
pub fn clique_number(g: &Graph) -> usize {
    independence_number(&complement(g))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let m: Vec<Vec<bool>> =
        (0..n).map(|u| (0..n).map(|v| u != v && !g.has_edge(u, v)).collect()).collect();
    from_matrix(&m)
}

/// χ by backtracking over colour assignments with a shrinking bound,
/// vertices ordered by degree (largest first).
pub fn chromatic_number_bb(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let m = adj_matrix(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colour = vec![usize::MAX; n];
    let mut best = n;

    fn go(i: usize, used: usize, order: &[usize], m: &[Vec<bool>], colour: &mut [usize], best: &mut usize) {
        if used >= *best {
            return;
        }
        if i == order.len() {
            *best = used;
            return;
        }
        let v = order[i];
        for c in 0..=used {
            if c >= *best {
                break;
            }
            if order[..i].iter().any(|&w| m[v][w] && colour[w] == c) {
                continue;
            }
            colour[v] = c;
            go(i + 1, used.max(c + 1), order, m, colour, best);
            colour[v] = usize::MAX;
        }
    }
    go(0, 0, &order, &m, &mut colour, &mut best);
    best
}

/// Maximum matching size by DP over vertex subsets (n ≤ 20).
pub fn matching_number_dp(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let m = adj_matrix(g);
    let mut memo = vec![usize::MAX; 1 << n];
    fn go(mask: usize, n: usize, m: &[Vec<bool>], memo: &mut [usize]) -> usize {
        if mask == 0 {
            return 0;
        }
        if memo[mask] != usize::MAX {
            return memo[mask];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(rest, n, m, memo);
        for w in 0..n {
            if rest >> w & 1 == 1 && m[v][w] {
                best = best.max(1 + go(rest & !(1 << w), n, m, memo));
            }
        }
        memo[mask] = best;
        best
    }
    go((1 << n) - 1, n, &m, &mut memo)
}

fn connected_after_removing(m: &[Vec<bool>], removed: u32) -> bool {
    let n = m.len();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    if alive.is_empty() {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    while let Some(v) = stack.pop() {
        for &w in &alive {
            if m[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// κ as the smallest vertex set whose removal disconnects the graph, or
/// n − 1 for complete graphs.
pub fn vertex_connectivity_brute(g: &Graph) -> usize {
    let n = g.n();
    let m = adj_matrix(g);
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < best && n - k >= 2 && !connected_after_removing(&m, mask) {
            best = k;
        }
    }
    best
}

/// Whether some edge of `g` joins a vertex of `a` to a vertex of `b`,
/// checked pair by pair.
pub fn edge_between(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&x| b.iter().any(|&y| x < g.n() && y < g.n() && g.has_edge(x, y)))
}

/// Whether `set` induces a connected subgraph, by BFS on the matrix.
pub fn induces_connected(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() || set.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &w in set {
            if !seen.contains(&w) && g.has_edge(v, w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    seen.len() == distinct.len()
}

/// Model check written directly from the definition.
pub fn model_is_valid(g: &Graph, clique: &[Vec<usize>], independent: &[Vec<usize>], ell: usize, m: usize) -> bool {
    if clique.len() != ell || independent.len() != m {
        return false;
    }
    let all: Vec<&Vec<usize>> = clique.iter().chain(independent).collect();
    let mut used = Vec::new();
    for s in &all {
        if !induces_connected(g, s) {
            return false;
        }
        for &v in s.iter() {
            if used.contains(&v) {
                return false;
            }
            used.push(v);
        }
    }
    for (i, a) in clique.iter().enumerate() {
        for b in &clique[i + 1..] {
            if !edge_between(g, a, b) {
                return false;
            }
        }
        for b in independent {
            if !edge_between(g, a, b) {
                return false;
            }
        }
    }
    true
}

/// Canonical adjacency string: the lexicographically smallest upper
/// triangle over all vertex orders that sort by degree. Only feasible for
/// small graphs without large degree classes.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let m = adj_matrix(g);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    for v in by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<bool>> = None;
    let mut order = Vec::with_capacity(n);
    fn permute(
        classes: &[Vec<usize>],
        ci: usize,
        used: &mut Vec<bool>,
        order: &mut Vec<usize>,
        m: &[Vec<bool>],
        best: &mut Option<Vec<bool>>,
    ) {
        if ci == classes.len() {
            let n = order.len();
            let mut key = Vec::with_capacity(n * n.saturating_sub(1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    key.push(m[order[i]][order[j]]);
                }
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        }
        let class = &classes[ci];
        let placed = class.iter().filter(|&&v| used[v]).count();
        if placed == class.len() {
            return permute(classes, ci + 1, used, order, m, best);
        }
        for &v in class {
            if !used[v] {
                used[v] = true;
                order.push(v);
                permute(classes, ci, used, order, m, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    permute(&classes, 0, &mut used, &mut order, &m, &mut best);
    best.unwrap_or_default()
}

/// Triangle-free graphs on `n` vertices up to isomorphism, grown by adding
/// one edge at a time from the empty graph and deduplicated with
/// [`brute_canonical`].
pub fn triangle_free_by_edges(n: usize) -> Vec<Graph> {
    use std::collections::HashSet;
    let mut all = Vec::new();
    let mut seen = HashSet::new();
    let empty = Graph::empty(n).unwrap();
    seen.insert(brute_canonical(&empty));
    let mut level = vec![empty];
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next = Vec::new();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    if (0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w)) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v);
                    if seen.insert(brute_canonical(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        level = next;
    }
    all
}

/// V(G) − N[{u, v}], from the matrix.
pub fn m_uv(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    (0..g.n()).filter(|&w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w)).collect()
}

pub fn set_of(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Complements of triangle-free circulants with small independence
/// number. For n = 4ℓ − 1 with ω = ℓ they reach the n = 4ℓ − 1 branch of
/// the half-order constructor.
pub const HARD_CASES: [&str; 9] = [
    "complement(circulant(31,3,7,8,9))",
    "complement(circulant(31,2,6,7,10))",
    "complement(circulant(31,1,3,5,12))",
    "complement(circulant(35,4,6,7,9))",
    "complement(circulant(35,1,3,7,12))",
    "complement(circulant(35,1,4,12,14))",
    "complement(circulant(39,3,7,8,9))",
    "complement(circulant(39,1,3,9,14))",
    "complement(circulant(39,1,3,12,17))",
];
