//! Vertex-disjoint induced 3-vertex paths: exhaustive packing search, the
//! four-condition characterisation for α(G) ≤ 2, and the exchange step that
//! pushes a packing away from the closed neighbourhood of an edge.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    capacity, for_each_clique, is_five_wheel, max_anti_matching, require_alpha_at_most_two,
    CapacityReport,
};

/// Ordered triples `(a1, a2, a3)` with `a2` the middle vertex of an induced
/// path `a1 - a2 - a3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct P3Packing {
    pub triples: Vec<[usize; 3]>,
}

pub fn is_induced_p3(g: &Graph, [a1, a2, a3]: [usize; 3]) -> bool {
    a1 != a2
        && a2 != a3
        && a1 != a3
        && a1.max(a2).max(a3) < g.n()
        && g.has_edge(a1, a2)
        && g.has_edge(a2, a3)
        && !g.has_edge(a1, a3)
}

impl P3Packing {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// V(𝒫).
    pub fn vertices(&self) -> VertexSet {
        self.triples.iter().flatten().copied().collect()
    }

    /// Checks disjointness and that each triple induces a path.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        for &t in &self.triples {
            if !is_induced_p3(g, t) {
                return Err(Error::InvalidPacking(format!("{t:?} is not an induced path")));
            }
            let vs: VertexSet = t.into_iter().collect();
            if vs.intersects(seen) {
                return Err(Error::InvalidPacking(format!("{t:?} overlaps another triple")));
            }
            seen |= vs;
        }
        Ok(())
    }
}

struct Packer<'g> {
    g: &'g Graph,
    failed: HashSet<(VertexSet, usize)>,
    chosen: Vec<[usize; 3]>,
    deadline: Option<Instant>,
    steps: u64,
}

impl Packer<'_> {
    /// Induced paths through `v` inside `avail`, where `v = min(avail)`.
    fn triples_through(&self, v: usize, avail: VertexSet) -> Vec<[usize; 3]> {
        let g = self.g;
        let nv = g.neighbors(v) & avail;
        let mut out = Vec::new();
        // v as an end: v - a - b
        for a in nv {
            for b in (g.neighbors(a) & avail) - g.neighbors(v).with(v) {
                out.push([v, a, b]);
            }
        }
        // v in the middle: a - v - b
        for a in nv {
            for b in (nv & VertexSet::above(a)) - g.neighbors(a) {
                out.push([a, v, b]);
            }
        }
        out.sort_unstable_by_key(|t| {
            let mut s = *t;
            s.sort_unstable();
            s
        });
        out
    }

    fn search(&mut self, avail: VertexSet, need: usize) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        if avail.len() < 3 * need || self.failed.contains(&(avail, need)) {
            return Ok(false);
        }
        self.steps += 1;
        if self.steps.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Timeout);
                }
            }
        }
        let v = avail.min().expect("nonempty");
        for t in self.triples_through(v, avail) {
            self.chosen.push(t);
            let rest = avail - t.into_iter().collect::<VertexSet>();
            if self.search(rest, need - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        if self.search(avail.without(v), need)? {
            return Ok(true);
        }
        self.failed.insert((avail, need));
        Ok(false)
    }
}

/// `ell` disjoint induced P3s using only vertices of `allowed`, or `None`
/// if none exist. Exhaustive; gives up with [`Error::Timeout`] once the
/// deadline passes.
pub fn find_p3_packing_within(
    g: &Graph,
    ell: usize,
    allowed: VertexSet,
    deadline: Option<Instant>,
) -> Result<Option<P3Packing>> {
    let mut packer = Packer {
        g,
        failed: HashSet::new(),
        chosen: Vec::new(),
        deadline,
        steps: 0,
    };
    let found = packer.search(allowed & g.vertices(), ell)?;
    Ok(found.then_some(P3Packing { triples: packer.chosen }))
}

pub fn find_p3_packing(g: &Graph, ell: usize) -> Option<P3Packing> {
    find_p3_packing_within(g, ell, g.vertices(), None).expect("no deadline set")
}

/// The four conditions characterising when `ell` disjoint induced P3s exist
/// in a graph with α ≤ 2 (five-wheel at `ell = 2` excepted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingConditionReport {
    pub ell: usize,
    /// |V(G)| ≥ 3ℓ
    pub size_ok: bool,
    /// G is ℓ-connected
    pub connectivity_ok: bool,
    pub connectivity: usize,
    /// Clique of minimum capacity; `None` only for the empty graph.
    pub min_capacity_witness: Option<CapacityReport>,
    /// every clique has capacity ≥ ℓ
    pub capacity_ok: bool,
    pub anti_matching_ok: bool,
    pub anti_matching_size: usize,
    pub five_wheel_exception: bool,
}

impl PackingConditionReport {
    pub fn all_hold(&self) -> bool {
        self.size_ok && self.connectivity_ok && self.capacity_ok && self.anti_matching_ok
    }
}

/// Exact minimum capacity over every nonempty clique.
pub fn min_capacity_clique(g: &Graph) -> Option<CapacityReport> {
    let mut best: Option<CapacityReport> = None;
    for_each_clique(g, |c| {
        let r = capacity(g, c).expect("enumerated sets are cliques");
        if best.as_ref().is_none_or(|b| r.doubled_capacity < b.doubled_capacity) {
            best = Some(r);
        }
    });
    best
}

pub fn check_packing_conditions(g: &Graph, ell: usize) -> Result<PackingConditionReport> {
    require_alpha_at_most_two(g)?;
    let n = g.n();
    let connectivity = vertex_connectivity(g);
    // ℓ-connected: more than ℓ vertices and no separator below ℓ
    let connectivity_ok = ell == 0 || (n > ell && connectivity >= ell);
    let witness = min_capacity_clique(g);
    let capacity_ok = witness.as_ref().is_none_or(|w| w.doubled_capacity >= 2 * ell);
    let anti = max_anti_matching(g).len();
    Ok(PackingConditionReport {
        ell,
        size_ok: n >= 3 * ell,
        connectivity_ok,
        connectivity,
        min_capacity_witness: witness,
        capacity_ok,
        anti_matching_ok: anti >= ell,
        anti_matching_size: anti,
        five_wheel_exception: ell == 2 && is_five_wheel(g),
    })
}

/// Whether packing existence agrees with the four conditions on `g`.
pub fn packing_characterization_holds(g: &Graph, ell: usize) -> Result<bool> {
    require_alpha_at_most_two(g)?;
    if ell == 2 && is_five_wheel(g) {
        return Err(Error::Precondition(
            "the five-wheel at ell = 2 is the stated exception".into(),
        ));
    }
    let report = check_packing_conditions(g, ell)?;
    Ok(find_p3_packing(g, ell).is_some() == report.all_hold())
}

/// |N[{u, v}] − V(𝒫)|, the quantity the exchange step increases.
pub fn uncovered_neighborhood(g: &Graph, (u, v): (usize, usize), packing: &P3Packing) -> usize {
    let closed = g.closed_neighborhood(VertexSet::singleton(u).with(v));
    (closed - packing.vertices()).len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeOutcome {
    pub packing: P3Packing,
    pub exchanges: usize,
}

/// The replacement triple for path `p` and an outside vertex `b`, if one of
/// the exchange cases applies.
fn exchange_case(g: &Graph, [a1, a2, a3]: [usize; 3], b: usize) -> Option<[usize; 3]> {
    let (e1, e2, e3) = (g.has_edge(b, a1), g.has_edge(b, a2), g.has_edge(b, a3));
    match (e1, e2, e3) {
        (true, _, true) => Some([a3, b, a1]),
        (true, false, false) => Some([a2, a1, b]),
        (true, true, false) => Some([a3, a2, b]),
        (false, false, true) => Some([a2, a3, b]),
        (false, true, true) => Some([a1, a2, b]),
        _ => None,
    }
}

/// Repeatedly swaps a vertex of N[{u, v}] out of the packing for a vertex
/// outside it, until no outside vertex can be brought in.
///
/// At each round the smallest outside vertex `b` is paired with the first
/// triple lying inside N[{u, v}] for which a case applies. Each swap raises
/// [`uncovered_neighborhood`] by one, so at most `n` rounds run.
pub fn exchange_improve(
    g: &Graph,
    (u, v): (usize, usize),
    packing: &P3Packing,
) -> Result<ExchangeOutcome> {
    require_alpha_at_most_two(g)?;
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    packing.validate(g)?;
    let uv = VertexSet::singleton(u).with(v);
    if packing.vertices().intersects(uv) {
        return Err(Error::InvalidPacking(format!("packing meets the edge {u}{v}")));
    }
    let closed = g.closed_neighborhood(uv);
    let mut current = packing.clone();
    let mut exchanges = 0;
    'outer: loop {
        let outside = g.vertices() - closed - current.vertices();
        for b in outside {
            for i in 0..current.triples.len() {
                let p = current.triples[i];
                if !p.iter().all(|&a| closed.contains(a)) {
                    continue;
                }
                if let Some(t) = exchange_case(g, p, b) {
                    current.triples[i] = t;
                    exchanges += 1;
                    if exchanges > g.n() {
                        return Err(Error::Invariant(format!(
                            "exchange did not terminate within {} rounds: {current:?}",
                            g.n()
                        )));
                    }
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(ExchangeOutcome { packing: current, exchanges })
}
