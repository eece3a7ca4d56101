//! Exact invariants for graphs with independence number at most two.
//!
//! Colour classes of such a graph have at most two vertices, and a class of
//! size two is an edge of the complement. An optimal colouring therefore
//! corresponds to a maximum matching of the complement, which gives
//! `χ(G) = n - ν(complement(G))` in polynomial time.

use serde::Serialize;

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::maximum_matching;

/// An independent triple, if one exists.
pub fn independent_triple(g: &Graph) -> Option<[usize; 3]> {
    let full = g.vertices();
    for u in 0..g.n() {
        let non_u = full - g.neighbors(u) - VertexSet::full(u + 1);
        for v in non_u {
            let common = non_u - g.neighbors(v) - VertexSet::full(v + 1);
            if let Some(w) = common.min() {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// α(G) ≤ 2, i.e. the complement is triangle-free.
pub fn alpha_at_most_two(g: &Graph) -> bool {
    independent_triple(g).is_none()
}

pub fn require_alpha_at_most_two(g: &Graph) -> Result<()> {
    match independent_triple(g) {
        Some(t) => Err(Error::AlphaAtLeastThree(t)),
        None => Ok(()),
    }
}

/// χ(G) for α(G) ≤ 2.
pub fn chromatic_number_alpha2(g: &Graph) -> Result<usize> {
    require_alpha_at_most_two(g)?;
    Ok(g.n() - maximum_matching(&g.complement()).len())
}

/// An optimal colouring for α(G) ≤ 2: matched complement pairs plus
/// singletons, ordered by smallest vertex.
pub fn optimal_coloring_alpha2(g: &Graph) -> Result<Vec<VertexSet>> {
    require_alpha_at_most_two(g)?;
    let pairs = maximum_matching(&g.complement());
    let mut covered = VertexSet::EMPTY;
    let mut classes: Vec<VertexSet> = pairs
        .iter()
        .map(|&(u, v)| {
            covered = covered.with(u).with(v);
            VertexSet::singleton(u).with(v)
        })
        .collect();
    classes.extend((g.vertices() - covered).iter().map(VertexSet::singleton));
    classes.sort_by_key(|c| (*c).min());
    Ok(classes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaxClique {
    pub size: usize,
    pub witness: VertexSet,
}

/// Maximum clique by branch and bound with a greedy colouring bound.
pub fn clique_number(g: &Graph) -> MaxClique {
    fn expand(g: &Graph, current: VertexSet, candidates: VertexSet, best: &mut VertexSet) {
        // greedy colouring of the candidates bounds the clique they can add
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored;
            while let Some(v) = avail.min() {
                avail = avail - g.neighbors(v).with(v);
                uncolored.remove(v);
                order.push((v, color));
            }
        }
        let mut candidates = candidates;
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= best.len() {
                return;
            }
            let next = current.with(v);
            let rest = candidates & g.neighbors(v);
            if rest.is_empty() {
                if next.len() > best.len() {
                    *best = next;
                }
            } else {
                expand(g, next, rest, best);
            }
            candidates.remove(v);
        }
    }

    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    MaxClique { size: best.len(), witness: best }
}

/// Calls `f` on every nonempty clique of `g`.
pub fn for_each_clique(g: &Graph, mut f: impl FnMut(VertexSet)) {
    fn go(g: &Graph, current: VertexSet, candidates: VertexSet, f: &mut impl FnMut(VertexSet)) {
        for v in candidates {
            let next = current.with(v);
            f(next);
            go(g, next, candidates & g.neighbors(v) & VertexSet::above(v), f);
        }
    }
    go(g, VertexSet::EMPTY, g.vertices(), &mut f);
}

/// The (A, B, C, D) split of V(G) around a clique C: A complete to C,
/// B anticomplete to C, D mixed. Capacity is |D| + |A ∪ B| / 2, kept doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CapacityReport {
    pub clique: VertexSet,
    pub complete_part: VertexSet,
    pub anticomplete_part: VertexSet,
    pub mixed_part: VertexSet,
    pub doubled_capacity: usize,
}

/// Capacity of a nonempty clique.
pub fn capacity(g: &Graph, clique: VertexSet) -> Result<CapacityReport> {
    if clique.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = (clique - g.vertices()).min() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !g.is_clique(clique) {
        return Err(Error::NotAClique(clique.to_vec()));
    }
    let mut a = VertexSet::EMPTY;
    let mut b = VertexSet::EMPTY;
    let mut d = VertexSet::EMPTY;
    for v in g.vertices() - clique {
        let hits = g.neighbors(v) & clique;
        if hits == clique {
            a.insert(v);
        } else if hits.is_empty() {
            b.insert(v);
        } else {
            d.insert(v);
        }
    }
    Ok(CapacityReport {
        clique,
        complete_part: a,
        anticomplete_part: b,
        mixed_part: d,
        doubled_capacity: 2 * d.len() + a.len() + b.len(),
    })
}

/// Disjoint pairs of non-adjacent vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AntiMatching {
    pub pairs: Vec<(usize, usize)>,
}

impl AntiMatching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        self.pairs.iter().all(|&(u, v)| {
            let ok = u != v
                && u < g.n()
                && v < g.n()
                && !g.has_edge(u, v)
                && !seen.contains(u)
                && !seen.contains(v);
            seen = seen.with(u).with(v);
            ok
        })
    }
}

/// Maximum matching of the complement.
pub fn max_anti_matching(g: &Graph) -> AntiMatching {
    AntiMatching { pairs: maximum_matching(&g.complement()) }
}

/// C5 on 0..5 plus a hub 5 adjacent to all of it.
pub fn five_wheel() -> Graph {
    let mut g = Graph::empty(6).expect("6 vertices");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5);
    }
    g
}

pub fn is_five_wheel(g: &Graph) -> bool {
    g.n() == 6 && g.edge_count() == 10 && canon::are_isomorphic(g, &five_wheel())
}

/// χ(G) = k and every single-vertex deletion lowers χ. Requires α(G) ≤ 2.
pub fn is_vertex_critical(g: &Graph) -> Result<bool> {
    let chi = chromatic_number_alpha2(g)?;
    for v in 0..g.n() {
        let sub = g.delete(VertexSet::singleton(v));
        if chromatic_number_alpha2(&sub.graph)? >= chi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connected components of the complement, ordered by smallest member.
/// Distinct co-components are complete to each other in `g`.
pub fn co_components(g: &Graph) -> Vec<VertexSet> {
    g.complement().components()
}

pub fn is_anti_connected(g: &Graph) -> bool {
    co_components(g).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn alpha_checks() {
        assert!(alpha_at_most_two(&cycle(5)));
        assert!(!alpha_at_most_two(&cycle(6)));
        assert_eq!(independent_triple(&cycle(6)), Some([0, 2, 4]));
        assert!(matches!(chromatic_number_alpha2(&cycle(6)), Err(Error::AlphaAtLeastThree(_))));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number_alpha2(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number_alpha2(&five_wheel()).unwrap(), 4);
        assert_eq!(chromatic_number_alpha2(&Graph::complete(4).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number_alpha2(&Graph::empty(0).unwrap()).unwrap(), 0);
        let classes = optimal_coloring_alpha2(&five_wheel()).unwrap();
        assert_eq!(classes.len(), 4);
        for c in &classes {
            assert!(five_wheel().is_independent(*c));
        }
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&cycle(5)).size, 2);
        let mut k223 = Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(clique_number(&k223).size, 3);
        k223.remove_edge(0, 1);
        assert_eq!(clique_number(&k223).size, 2);
        let w = clique_number(&five_wheel());
        assert_eq!(w.size, 3);
        assert!(five_wheel().is_clique(w.witness));
        assert_eq!(clique_number(&Graph::empty(0).unwrap()).size, 0);
    }

    #[test]
    fn capacity_examples() {
        let c5 = cycle(5);
        let r = capacity(&c5, set(&[0])).unwrap();
        assert_eq!(r.complete_part, set(&[1, 4]));
        assert_eq!(r.anticomplete_part, set(&[2, 3]));
        assert!(r.mixed_part.is_empty());
        assert_eq!(r.doubled_capacity, 4);

        let r = capacity(&c5, set(&[0, 1])).unwrap();
        assert!(r.complete_part.is_empty());
        assert_eq!(r.mixed_part, set(&[2, 4]));
        assert_eq!(r.anticomplete_part, set(&[3]));
        assert_eq!(r.doubled_capacity, 5);

        let k = Graph::complete(4).unwrap();
        assert_eq!(capacity(&k, k.vertices()).unwrap().doubled_capacity, 0);

        assert!(matches!(capacity(&c5, VertexSet::EMPTY), Err(Error::EmptySet)));
        assert!(matches!(capacity(&c5, set(&[0, 2])), Err(Error::NotAClique(_))));
    }

    #[test]
    fn anti_matchings() {
        assert!(max_anti_matching(&Graph::complete(5).unwrap()).is_empty());
        let m = max_anti_matching(&cycle(5));
        assert_eq!(m.len(), 2);
        assert!(m.is_valid_in(&cycle(5)));
        assert_eq!(max_anti_matching(&five_wheel()).len(), 2);
    }

    #[test]
    fn five_wheel_recognition() {
        assert!(is_five_wheel(&five_wheel()));
        assert!(is_five_wheel(&five_wheel().relabel(&[5, 3, 1, 0, 2, 4])));
        assert!(!is_five_wheel(&cycle(5)));
        assert!(!is_five_wheel(&Graph::complete(6).unwrap()));
        // same size but a different graph: K4 plus a pendant path
        let other = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (2, 4), (1, 5)],
        )
        .unwrap();
        assert!(!is_five_wheel(&other));
    }

    #[test]
    fn criticality() {
        assert!(is_vertex_critical(&cycle(5)).unwrap());
        assert!(is_vertex_critical(&Graph::complete(4).unwrap()).unwrap());
        assert!(is_vertex_critical(&five_wheel()).unwrap());
        // C5 plus a pendant-free extra vertex adjacent to two consecutive ones
        let mut g = cycle(5);
        let mut h = Graph::empty(6).unwrap();
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(5, 0);
        h.add_edge(5, 1);
        h.add_edge(5, 2);
        h.add_edge(5, 3);
        assert!(alpha_at_most_two(&h));
        assert!(!is_vertex_critical(&h).unwrap());
        g.remove_edge(0, 1);
        assert!(is_vertex_critical(&g).is_err());
    }

    #[test]
    fn co_component_examples() {
        assert_eq!(co_components(&cycle(5)).len(), 1);
        let k23 = Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        let cc = co_components(&k23);
        assert_eq!(cc, vec![set(&[0]), set(&[1]), set(&[2, 3, 4])]);
        let j = cycle(5).join(&cycle(5)).unwrap();
        assert_eq!(co_components(&j), vec![set(&[0, 1, 2, 3, 4]), set(&[5, 6, 7, 8, 9])]);
    }

    #[test]
    fn clique_enumeration_counts() {
        let mut count = 0;
        for_each_clique(&Graph::complete(4).unwrap(), |_| count += 1);
        assert_eq!(count, 15);
    }
}
