//! Constructive versions of the two minor bounds for α(G) ≤ 2:
//!
//! * half-order form: `K^ℓ_{ℓ,⌈n/2⌉−ℓ}` for every `ℓ` with `2ℓ ≤ ⌈n/2⌉`;
//! * chromatic form: `K^ℓ_{ℓ,χ−ℓ}` for every `ℓ` with `2ℓ ≤ χ`.
//!
//! Both recurse on vertex subsets of the input graph, so every vertex set in
//! the trace and the model uses input indices. Steps the argument guarantees
//! are asserted; a failure comes back as [`Error::Invariant`] with the state
//! at that point rather than being patched over.
//!
//! The two fallback branches of the half-order form need a `K_⌈n/2⌉` minor
//! whose construction is not part of this crate. They call the brute-force
//! search, so they are subject to its size cap.

use std::collections::HashMap;
use std::time::Instant;

use crate::certificate::{Certificate, Form, StepDetail, TraceStep};
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph, VertexSet};
use crate::graph6::emit_graph6;
use crate::invariants::{
    chromatic_number_alpha2, clique_number, co_components, require_alpha_at_most_two,
};
use crate::minor::{
    find_minor_bruteforce, model_through_contraction, validate_model, MinorModel, MinorTarget,
    OracleLimits,
};
use crate::packing::{exchange_improve, find_p3_packing_within};

#[derive(Clone, Copy, Debug, Default)]
pub struct ConstructOptions {
    pub oracle: OracleLimits,
    /// Checked on entry to every recursive step and inside packing searches.
    pub deadline: Option<Instant>,
}

/// M_uv = V(G) − N[{u, v}].
pub fn edge_non_neighborhood(g: &Graph, (u, v): (usize, usize)) -> VertexSet {
    g.vertices() - g.closed_neighborhood(VertexSet::singleton(u).with(v))
}

/// The edge `cx` from a non-adjacent pair `x < y` with a common neighbour
/// `c`, taking the first such pair and the smallest `c`.
fn recipe_edge(g: &Graph) -> Option<(usize, usize)> {
    let all = g.vertices();
    for x in all {
        for y in (all - g.neighbors(x)) & VertexSet::above(x) {
            if let Some(c) = (g.neighbors(x) & g.neighbors(y)).min() {
                return Some((c, x));
            }
        }
    }
    None
}

/// An edge `uv` with |M_uv| ≤ ℓ − 1.
///
/// For a non-adjacent pair `x, y` with common neighbour `c`, everything
/// outside N[{c, x}] lies in the clique V(G) − N[x] minus `y`, which bounds
/// M_cx by ω − 1. When no non-adjacent pair has a common neighbour (the
/// graph is two disjoint cliques) every edge is scanned instead; on two
/// disjoint cliques of equal size ℓ none qualifies and the call fails.
pub fn select_edge_small_case(g: &Graph, ell: usize) -> Result<(usize, usize)> {
    require_alpha_at_most_two(g)?;
    if g.is_complete() {
        return Err(Error::Precondition("complete graph has no non-adjacent pair".into()));
    }
    let omega = clique_number(g).size;
    if omega > ell {
        return Err(Error::Precondition(format!("clique number {omega} exceeds ell = {ell}")));
    }
    if let Some(edge) = recipe_edge(g) {
        let m = edge_non_neighborhood(g, edge);
        if m.len() < ell {
            return Ok(edge);
        }
        return Err(Error::Invariant(format!(
            "edge {edge:?} from a common neighbour has |M_uv| = {} > ell - 1 = {} (M_uv = {m:?})",
            m.len(),
            ell - 1
        )));
    }
    g.edges()
        .find(|&e| edge_non_neighborhood(g, e).len() < ell)
        .ok_or_else(|| {
            Error::Invariant(format!(
                "no edge has |M_uv| <= {}; no non-adjacent pair has a common neighbour",
                ell - 1
            ))
        })
}

#[derive(Default)]
struct Sides {
    clique: Vec<VertexSet>,
    independent: Vec<VertexSet>,
}

impl Sides {
    fn singletons(clique: impl IntoIterator<Item = usize>, independent: impl IntoIterator<Item = usize>) -> Self {
        Sides {
            clique: clique.into_iter().map(VertexSet::singleton).collect(),
            independent: independent.into_iter().map(VertexSet::singleton).collect(),
        }
    }

    fn extend(&mut self, other: Sides) {
        self.clique.extend(other.clique);
        self.independent.extend(other.independent);
    }
}

fn original_triple(sub: &InducedSubgraph, t: [usize; 3]) -> [usize; 3] {
    t.map(|v| sub.original_vertex(v))
}

struct Builder<'a> {
    g: &'a Graph,
    opts: &'a ConstructOptions,
    chi_memo: HashMap<u64, usize>,
    trace: Vec<TraceStep>,
    depth: usize,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, opts: &'a ConstructOptions) -> Self {
        Builder { g, opts, chi_memo: HashMap::new(), trace: Vec::new(), depth: 0 }
    }

    fn sub(&self, s: VertexSet) -> InducedSubgraph {
        self.g.induced_subgraph(s).expect("subsets of the input graph")
    }

    fn chi(&mut self, s: VertexSet) -> Result<usize> {
        if let Some(&c) = self.chi_memo.get(&s.bits()) {
            return Ok(c);
        }
        let c = chromatic_number_alpha2(&self.sub(s).graph)?;
        self.chi_memo.insert(s.bits(), c);
        Ok(c)
    }

    fn record(&mut self, s: VertexSet, ell: usize, detail: StepDetail) {
        self.trace.push(TraceStep { depth: self.depth, vertices: s, ell, detail });
    }

    fn check_budget(&self) -> Result<()> {
        if self.depth > self.g.n() {
            return Err(Error::Invariant(format!(
                "recursion depth {} exceeds n = {}",
                self.depth,
                self.g.n()
            )));
        }
        match self.opts.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }

    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        self.depth += 1;
        let r = f(self);
        self.depth -= 1;
        r
    }

    fn half(&mut self, s: VertexSet, ell: usize) -> Result<Sides> {
        self.check_budget()?;
        let n = s.len();
        let h = n.div_ceil(2);
        if ell == 0 || 2 * ell > h {
            return Err(Error::Precondition(format!("need 1 <= ell and 2 ell <= ceil(n/2); n = {n}, ell = {ell}")));
        }
        let sub = self.sub(s);
        let lg = &sub.graph;

        if lg.is_complete() {
            self.record(s, ell, StepDetail::CliqueDirect);
            let v = s.to_vec();
            return Ok(Sides::singletons(v[..ell].to_vec(), v[ell..h].to_vec()));
        }

        if n.is_multiple_of(2) {
            let local = (0..n).min_by_key(|&v| (lg.degree(v), v)).expect("nonempty");
            let deleted = sub.original_vertex(local);
            self.record(s, ell, StepDetail::DeleteVertexEven { deleted });
            return self.nested(|b| b.half(s.without(deleted), ell));
        }

        let connectivity = vertex_connectivity(lg);
        if connectivity < h {
            self.record(s, ell, StepDetail::FallbackConnectivity { connectivity, k: h });
            return self.complete_fallback(&sub, h, ell, "connectivity below ceil(n/2)");
        }
        let omega = clique_number(lg).size;
        if 4 * omega >= n + 3 {
            self.record(s, ell, StepDetail::FallbackClique { clique_number: omega, k: h });
            return self.complete_fallback(&sub, h, ell, "4 omega >= n + 3");
        }

        if n > 4 * ell {
            self.pack_and_contract(s, &sub, ell, h)
        } else {
            self.small_case(s, &sub, ell)
        }
    }

    fn complete_fallback(&mut self, sub: &InducedSubgraph, h: usize, ell: usize, why: &str) -> Result<Sides> {
        let target = MinorTarget::complete(h)?;
        let Some(model) = find_minor_bruteforce(&sub.graph, target, &self.opts.oracle)? else {
            return Err(Error::Invariant(format!(
                "{why}, yet no K{h} minor exists in {}",
                emit_graph6(&sub.graph)
            )));
        };
        let model = model.restrict_complete(ell, h - ell)?;
        Ok(Sides {
            clique: model.clique_sets().into_iter().map(|c| sub.to_original(c)).collect(),
            independent: model.independent_sets().into_iter().map(|c| sub.to_original(c)).collect(),
        })
    }

    fn pack_and_contract(&mut self, s: VertexSet, sub: &InducedSubgraph, ell: usize, h: usize) -> Result<Sides> {
        let lg = &sub.graph;
        let Some(packing) = find_p3_packing_within(lg, ell, lg.vertices(), self.opts.deadline)? else {
            return Err(Error::Invariant(format!(
                "no {ell} disjoint induced P3s in {} (n = {}, ell = {ell})",
                emit_graph6(lg),
                lg.n()
            )));
        };
        let independent = (lg.vertices() - packing.vertices()).lowest(h - ell);
        self.record(
            s,
            ell,
            StepDetail::PackAndContract {
                paths: packing.triples.iter().map(|&t| original_triple(sub, t)).collect(),
                independent: sub.to_original(independent),
            },
        );
        let groups: Vec<VertexSet> =
            packing.triples.iter().map(|t| t.iter().copied().collect()).collect();
        contract_and_pull_back(sub, &groups, independent)
    }

    fn small_case(&mut self, s: VertexSet, sub: &InducedSubgraph, ell: usize) -> Result<Sides> {
        let lg = &sub.graph;
        let (u, v) = select_edge_small_case(lg, ell)?;
        let uv = VertexSet::singleton(u).with(v);
        let m_uv = edge_non_neighborhood(lg, (u, v));
        let Some(initial) = find_p3_packing_within(lg, ell - 1, lg.vertices() - uv, self.opts.deadline)? else {
            return Err(Error::Invariant(format!(
                "no {} disjoint induced P3s avoid the edge ({u}, {v}) in {}",
                ell - 1,
                emit_graph6(lg)
            )));
        };
        let outcome = exchange_improve(lg, (u, v), &initial)?;
        let b = lg.vertices() - outcome.packing.vertices() - uv;
        let closed = lg.closed_neighborhood(uv);
        if b.len() != ell || !b.is_subset(closed) {
            return Err(Error::Invariant(format!(
                "after exchange B = {b:?} is not an {ell}-subset of N[uv] = {closed:?}; \
                 graph {}, edge ({u}, {v}), packing {:?}",
                emit_graph6(lg),
                outcome.packing.triples
            )));
        }
        self.record(
            s,
            ell,
            StepDetail::SmallCaseEdge {
                edge: (sub.original_vertex(u), sub.original_vertex(v)),
                m_uv: sub.to_original(m_uv),
                initial_paths: initial.triples.iter().map(|&t| original_triple(sub, t)).collect(),
                paths: outcome.packing.triples.iter().map(|&t| original_triple(sub, t)).collect(),
                exchanges: outcome.exchanges,
                b: sub.to_original(b),
            },
        );
        let mut groups = vec![uv];
        groups.extend(outcome.packing.triples.iter().map(|t| t.iter().copied().collect::<VertexSet>()));
        contract_and_pull_back(sub, &groups, b)
    }

    fn chi_form(&mut self, s: VertexSet, ell: usize) -> Result<Sides> {
        self.check_budget()?;
        let n = s.len();
        let chi = self.chi(s)?;
        if ell == 0 || 2 * ell > chi {
            return Err(Error::Precondition(format!("need 1 <= ell and 2 ell <= chi; chi = {chi}, ell = {ell}")));
        }
        let sub = self.sub(s);
        let lg = &sub.graph;

        if lg.is_complete() {
            self.record(s, ell, StepDetail::CliqueDirect);
            let v = s.to_vec();
            return Ok(Sides::singletons(v[..ell].to_vec(), v[ell..chi].to_vec()));
        }

        if ell == 1 {
            let local = (0..n).max_by_key(|&v| (lg.degree(v), std::cmp::Reverse(v))).expect("nonempty");
            if lg.degree(local) + 1 < chi {
                return Err(Error::Invariant(format!(
                    "maximum degree {} below chi - 1 = {}",
                    lg.degree(local),
                    chi - 1
                )));
            }
            let center = sub.original_vertex(local);
            self.record(s, ell, StepDetail::MaxDegreeStar { center });
            let leaves = sub.to_original(lg.neighbors(local).lowest(chi - 1));
            return Ok(Sides::singletons([center], leaves));
        }

        if n + 1 >= 2 * chi {
            if chi != n.div_ceil(2) {
                return Err(Error::Invariant(format!("n = {n} >= 2 chi - 1 but chi = {chi} != ceil(n/2)")));
            }
            self.record(s, ell, StepDetail::DelegateHalf { chi });
            return self.nested(|b| b.half(s, ell));
        }

        for x in s {
            if self.chi(s.without(x))? == chi {
                self.record(s, ell, StepDetail::DeleteNoncriticalVertex { deleted: x });
                return self.nested(|b| b.chi_form(s.without(x), ell));
            }
        }

        let co = co_components(lg);
        if co.len() < 2 {
            return Err(Error::Invariant(format!(
                "{} is {chi}-vertex-critical with n = {n} <= 2 chi - 2 but anti-connected",
                emit_graph6(lg)
            )));
        }
        let v1 = sub.to_original(co[0]);
        let v2 = s - v1;
        let (chi1, chi2) = (self.chi(v1)?, self.chi(v2)?);
        if chi1 + chi2 != chi {
            return Err(Error::Invariant(format!("chi of the join sides {chi1} + {chi2} != {chi}")));
        }

        if let Some(ell1) = (1..=chi1 / 2).find(|&l1| ell > l1 && 2 * (ell - l1) <= chi2) {
            let ell2 = ell - ell1;
            self.record(s, ell, StepDetail::JoinDecompose { v1, v2, chi1, chi2, ell1, ell2 });
            return self.nested(|b| {
                let mut sides = b.chi_form(v1, ell1)?;
                sides.extend(b.chi_form(v2, ell2)?);
                Ok(sides)
            });
        }

        let is_clique = |side: VertexSet| self.g.is_clique(side);
        let clique_side = if is_clique(v2) {
            Some((v2, v1, chi1))
        } else if is_clique(v1) {
            Some((v1, v2, chi2))
        } else {
            None
        };
        if let Some((q, other, chi_other)) = clique_side {
            // ℓ' = ℓ − t must satisfy 2ℓ' ≤ χ(other); t ≤ |Q| since 2ℓ ≤ χ(other) + |Q|
            let t = ell.saturating_sub(chi_other / 2);
            let rest = ell - t;
            self.record(s, ell, StepDetail::CliqueAbsorb { clique: q, other, to_clique_side: t });
            let qv = q.to_vec();
            let mut sides = Sides::singletons(qv[..t].to_vec(), qv[t..].to_vec());
            if rest >= 1 {
                sides.extend(self.nested(|b| b.chi_form(other, rest))?);
            } else {
                sides.extend(Sides::singletons([], other.lowest(chi_other)));
            }
            return Ok(sides);
        }

        if chi != 2 * ell || chi1 % 2 == 0 || chi2 % 2 == 0 {
            return Err(Error::Invariant(format!(
                "no split of ell = {ell} over chi = {chi1} + {chi2}, yet not the odd/odd case with chi = 2 ell"
            )));
        }
        let (ell1, ell2) = ((chi1 - 1) / 2, (chi2 - 1) / 2);
        let (u1, w1) = self.glue_pair(v1, chi1)?;
        let (u2, w2) = self.glue_pair(v2, chi2)?;
        self.record(
            s,
            ell,
            StepDetail::ParityGlue { v1, v2, ell1, ell2, u: (u1, u2), v: (w1, w2) },
        );
        let mut sides = self.nested(|b| {
            let mut sides = Sides::default();
            for (side, li, a, c) in [(v1, ell1, u1, w1), (v2, ell2, u2, w2)] {
                if li >= 1 {
                    sides.extend(b.chi_form(side.without(a).without(c), li)?);
                }
            }
            Ok(sides)
        })?;
        sides.clique.push(VertexSet::singleton(u1).with(u2));
        sides.independent.push(VertexSet::singleton(w1).with(w2));
        Ok(sides)
    }

    /// Non-adjacent `u < v` in `side` whose removal, together or singly,
    /// lowers χ by exactly one.
    fn glue_pair(&mut self, side: VertexSet, chi_side: usize) -> Result<(usize, usize)> {
        for u in side {
            for v in (side - self.g.neighbors(u)) & VertexSet::above(u) {
                let target = chi_side - 1;
                if self.chi(side.without(u).without(v))? == target
                    && self.chi(side.without(u))? == target
                    && self.chi(side.without(v))? == target
                {
                    return Ok((u, v));
                }
            }
        }
        Err(Error::Invariant(format!(
            "no non-adjacent pair in {side:?} drops chi from {chi_side} by one"
        )))
    }
}

/// Contracts each group of `sub`'s graph in turn, builds the model with the
/// merged vertices on the clique side and `independent` as singletons,
/// checks it in the contracted graph, and pulls it back to input indices.
fn contract_and_pull_back(sub: &InducedSubgraph, groups: &[VertexSet], independent: VertexSet) -> Result<Sides> {
    let mut h = sub.graph.clone();
    let mut image: Vec<usize> = (0..h.n()).collect();
    let mut chain = Vec::with_capacity(groups.len());
    for group in groups {
        let set: VertexSet = group.iter().map(|v| image[v]).collect();
        let c = h.contract_set(set)?;
        for i in image.iter_mut() {
            *i = c.image(*i).expect("contraction keeps every vertex");
        }
        chain.push(c.provenance);
        h = c.graph;
    }
    let clique: Vec<VertexSet> = groups
        .iter()
        .map(|g| VertexSet::singleton(image[(*g).min().expect("nonempty group")]))
        .collect();
    let ind: Vec<VertexSet> = independent.iter().map(|v| VertexSet::singleton(image[v])).collect();
    let target = MinorTarget::clique_join_independent(clique.len(), ind.len())?;
    let in_h = MinorModel::from_sets(&clique, &ind);
    validate_model(&h, target, &in_h).map_err(|v| {
        Error::Invariant(format!("contracted model invalid in {}: {v:?}", emit_graph6(&h)))
    })?;
    let back = model_through_contraction(&chain, &in_h)?;
    Ok(Sides {
        clique: back.clique_sets().into_iter().map(|c| sub.to_original(c)).collect(),
        independent: back.independent_sets().into_iter().map(|c| sub.to_original(c)).collect(),
    })
}

fn finish(
    g: &Graph,
    form: Form,
    chi: usize,
    ell: usize,
    target: MinorTarget,
    sides: Sides,
    trace: Vec<TraceStep>,
) -> Result<Certificate> {
    let model = MinorModel::from_sets(&sides.clique, &sides.independent);
    if let Err(violations) = validate_model(g, target, &model) {
        let listed: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Invariant(format!(
            "constructed model for {target} in {} fails validation: {}; model {model:?}",
            emit_graph6(g),
            listed.join("; ")
        )));
    }
    Ok(Certificate {
        input_graph6: emit_graph6(g),
        n: g.n(),
        alpha_leq_2: true,
        form,
        chi,
        ell,
        target,
        model,
        trace,
        validated: true,
    })
}

pub fn construct_half_minor(g: &Graph, ell: usize) -> Result<Certificate> {
    construct_half_minor_with(g, ell, &ConstructOptions::default())
}

/// A validated `K^ℓ_{ℓ,⌈n/2⌉−ℓ}` certificate.
pub fn construct_half_minor_with(g: &Graph, ell: usize, opts: &ConstructOptions) -> Result<Certificate> {
    require_alpha_at_most_two(g)?;
    let h = g.n().div_ceil(2);
    if g.n() == 0 || ell == 0 || 2 * ell > h {
        return Err(Error::Precondition(format!(
            "need n >= 1, ell >= 1 and 2 ell <= ceil(n/2); n = {}, ell = {ell}",
            g.n()
        )));
    }
    let mut b = Builder::new(g, opts);
    let chi = b.chi(g.vertices())?;
    let sides = b.half(g.vertices(), ell)?;
    let target = MinorTarget::clique_join_independent(ell, h - ell)?;
    finish(g, Form::Half, chi, ell, target, sides, b.trace)
}

pub fn construct_chi_minor(g: &Graph, ell: usize) -> Result<Certificate> {
    construct_chi_minor_with(g, ell, &ConstructOptions::default())
}

/// A validated `K^ℓ_{ℓ,χ−ℓ}` certificate.
pub fn construct_chi_minor_with(g: &Graph, ell: usize, opts: &ConstructOptions) -> Result<Certificate> {
    require_alpha_at_most_two(g)?;
    let mut b = Builder::new(g, opts);
    let chi = b.chi(g.vertices())?;
    if ell == 0 || 2 * ell > chi {
        return Err(Error::Precondition(format!("need 1 <= ell and 2 ell <= chi; chi = {chi}, ell = {ell}")));
    }
    let sides = b.chi_form(g.vertices(), ell)?;
    let target = MinorTarget::clique_join_independent(ell, chi - ell)?;
    finish(g, Form::Chi, chi, ell, target, sides, b.trace)
}
