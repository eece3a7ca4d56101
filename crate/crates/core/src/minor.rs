//! Minor models for complete graphs `K_k` and for `K^ℓ_{ℓ,m}` (a clique on
//! ℓ vertices joined to an independent set of m vertices).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MinorTarget {
    Complete { k: usize },
    CliqueJoinIndependent { ell: usize, m: usize },
}

impl MinorTarget {
    pub fn complete(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("K_k needs k >= 1".into()));
        }
        Ok(MinorTarget::Complete { k })
    }

    pub fn clique_join_independent(ell: usize, m: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Precondition("K^l_{l,m} needs l >= 1".into()));
        }
        Ok(MinorTarget::CliqueJoinIndependent { ell, m })
    }

    /// Number of branch sets on the clique side.
    pub fn clique_count(self) -> usize {
        match self {
            MinorTarget::Complete { k } => k,
            MinorTarget::CliqueJoinIndependent { ell, .. } => ell,
        }
    }

    pub fn independent_count(self) -> usize {
        match self {
            MinorTarget::Complete { .. } => 0,
            MinorTarget::CliqueJoinIndependent { m, .. } => m,
        }
    }

    pub fn branch_sets(self) -> usize {
        self.clique_count() + self.independent_count()
    }
}

impl fmt::Display for MinorTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorTarget::Complete { k } => write!(f, "K{k}"),
            MinorTarget::CliqueJoinIndependent { ell, m } => write!(f, "K^{ell}_{{{ell},{m}}}"),
        }
    }
}

/// Branch sets witnessing a minor. For complete targets every set lives in
/// `clique_side`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorModel {
    pub clique_side: Vec<Vec<usize>>,
    pub independent_side: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn from_sets(clique: &[VertexSet], independent: &[VertexSet]) -> Self {
        let mut m = MinorModel {
            clique_side: clique.iter().map(|s| s.to_vec()).collect(),
            independent_side: independent.iter().map(|s| s.to_vec()).collect(),
        };
        m.canonicalize();
        m
    }

    /// Sorts every set, then each side lexicographically.
    pub fn canonicalize(&mut self) {
        for side in [&mut self.clique_side, &mut self.independent_side] {
            for set in side.iter_mut() {
                set.sort_unstable();
            }
            side.sort();
        }
    }

    pub fn clique_sets(&self) -> Vec<VertexSet> {
        self.clique_side.iter().map(|s| s.iter().copied().collect()).collect()
    }

    pub fn independent_sets(&self) -> Vec<VertexSet> {
        self.independent_side.iter().map(|s| s.iter().copied().collect()).collect()
    }

    pub fn used_vertices(&self) -> VertexSet {
        self.clique_side.iter().chain(&self.independent_side).flatten().copied().collect()
    }

    /// Moves the sets of a `K_k` model beyond the first `ell` to the
    /// independent side, keeping only `ell + m` of them.
    pub fn restrict_complete(&self, ell: usize, m: usize) -> Result<MinorModel> {
        if self.clique_side.len() < ell + m || !self.independent_side.is_empty() {
            return Err(Error::Precondition(format!(
                "a K{} model cannot be restricted to {ell} + {m} sets",
                self.clique_side.len()
            )));
        }
        let mut out = MinorModel {
            clique_side: self.clique_side[..ell].to_vec(),
            independent_side: self.clique_side[ell..ell + m].to_vec(),
        };
        out.canonicalize();
        Ok(out)
    }

    /// Disjoint union of two models, sides concatenated.
    pub fn union(&self, other: &MinorModel) -> MinorModel {
        let mut out = self.clone();
        out.clique_side.extend(other.clique_side.iter().cloned());
        out.independent_side.extend(other.independent_side.iter().cloned());
        out.canonicalize();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Clique,
    Independent,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Clique => "clique",
            Side::Independent => "independent",
        })
    }
}

/// Names a branch set by side and position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetRef {
    pub side: Side,
    pub index: usize,
}

impl fmt::Display for SetRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.side, self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    WrongSetCount { side: Side, expected: usize, found: usize },
    EmptySet(SetRef),
    VertexOutOfRange { set: SetRef, vertex: usize },
    RepeatedVertex { set: SetRef, vertex: usize },
    NotDisjoint { a: SetRef, b: SetRef },
    NotConnected(SetRef),
    MissingEdge { a: SetRef, b: SetRef },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::WrongSetCount { side, expected, found } => {
                write!(f, "{side} side has {found} sets, expected {expected}")
            }
            ModelViolation::EmptySet(s) => write!(f, "branch set {s} is empty"),
            ModelViolation::VertexOutOfRange { set, vertex } => {
                write!(f, "branch set {set} names vertex {vertex} outside the graph")
            }
            ModelViolation::RepeatedVertex { set, vertex } => {
                write!(f, "branch set {set} lists vertex {vertex} twice")
            }
            ModelViolation::NotDisjoint { a, b } => write!(f, "sets not disjoint: {a} and {b}"),
            ModelViolation::NotConnected(s) => write!(f, "branch set {s} not connected"),
            ModelViolation::MissingEdge { a, b } => write!(f, "no edge between {a} and {b}"),
        }
    }
}

/// Checks every model invariant and returns all violations found.
pub fn validate_model(
    g: &Graph,
    target: MinorTarget,
    model: &MinorModel,
) -> std::result::Result<(), Vec<ModelViolation>> {
    let mut out = Vec::new();
    for (side, expected, found) in [
        (Side::Clique, target.clique_count(), model.clique_side.len()),
        (Side::Independent, target.independent_count(), model.independent_side.len()),
    ] {
        if expected != found {
            out.push(ModelViolation::WrongSetCount { side, expected, found });
        }
    }

    let mut sets: Vec<(SetRef, VertexSet)> = Vec::new();
    for (side, list) in [(Side::Clique, &model.clique_side), (Side::Independent, &model.independent_side)] {
        for (index, raw) in list.iter().enumerate() {
            let r = SetRef { side, index };
            let mut s = VertexSet::EMPTY;
            for &v in raw {
                if v >= g.n() || v >= MAX_VERTICES {
                    out.push(ModelViolation::VertexOutOfRange { set: r, vertex: v });
                } else if s.contains(v) {
                    out.push(ModelViolation::RepeatedVertex { set: r, vertex: v });
                } else {
                    s.insert(v);
                }
            }
            if raw.is_empty() {
                out.push(ModelViolation::EmptySet(r));
            } else if !s.is_empty() && !g.is_connected_set(s) {
                out.push(ModelViolation::NotConnected(r));
            }
            sets.push((r, s));
        }
    }

    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (a, sa) = sets[i];
            let (b, sb) = sets[j];
            if sa.intersects(sb) {
                out.push(ModelViolation::NotDisjoint { a, b });
            }
            let needs_edge = a.side == Side::Clique || b.side == Side::Clique;
            if needs_edge && !g.touches(sa, sb) {
                out.push(ModelViolation::MissingEdge { a, b });
            }
        }
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Size guard for [`find_minor_bruteforce`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest graph searched for targets with at least five branch sets.
    pub max_vertices: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_vertices: 14 }
    }
}

struct MinorSearch<'g> {
    g: &'g Graph,
    ell: usize,
    m: usize,
    clique: Vec<VertexSet>,
    independent: Vec<VertexSet>,
}

impl MinorSearch<'_> {
    fn placed(&self) -> usize {
        self.clique.len() + self.independent.len()
    }

    fn fits(&self, s: VertexSet, side: Side) -> bool {
        let g = self.g;
        match side {
            Side::Clique => {
                self.clique.iter().chain(&self.independent).all(|&t| g.touches(s, t))
            }
            Side::Independent => self.clique.iter().all(|&t| g.touches(s, t)),
        }
    }

    /// Partitions `rest` into the remaining branch sets. The smallest
    /// unassigned vertex always opens the next set.
    fn place(&mut self, rest: VertexSet) -> bool {
        let left = self.ell + self.m - self.placed();
        if rest.is_empty() {
            return left == 0;
        }
        if left == 0 || rest.len() < left {
            return false;
        }
        if self.g.components_within(rest).len() > left {
            return false;
        }
        let v = rest.min().expect("nonempty");
        for side in [Side::Clique, Side::Independent] {
            let open = match side {
                Side::Clique => self.clique.len() < self.ell,
                Side::Independent => self.independent.len() < self.m,
            };
            if open && self.grow(VertexSet::singleton(v), VertexSet::EMPTY, rest, side) {
                return true;
            }
        }
        false
    }

    /// Enumerates connected sets containing `set` inside `rest`, deciding the
    /// smallest frontier vertex at each step (excluded first).
    fn grow(&mut self, set: VertexSet, excluded: VertexSet, rest: VertexSet, side: Side) -> bool {
        let frontier = self.g.neighborhood(set) & (rest - excluded);
        match frontier.min() {
            None => {
                if !self.fits(set, side) {
                    return false;
                }
                match side {
                    Side::Clique => self.clique.push(set),
                    Side::Independent => self.independent.push(set),
                }
                if self.place(rest - set) {
                    return true;
                }
                match side {
                    Side::Clique => self.clique.pop(),
                    Side::Independent => self.independent.pop(),
                };
                false
            }
            Some(w) => {
                self.grow(set, excluded.with(w), rest, side)
                    || self.grow(set.with(w), excluded, rest, side)
            }
        }
    }
}

/// Exhaustive search for a minor model of `target` in `g`.
///
/// Any vertex outside a model but adjacent to one of its branch sets can be
/// absorbed into that set, so a model exists iff one partitions a whole
/// connected component. The search therefore enumerates partitions of each
/// component into connected parts.
pub fn find_minor_bruteforce(
    g: &Graph,
    target: MinorTarget,
    limits: &OracleLimits,
) -> Result<Option<MinorModel>> {
    let k = target.branch_sets();
    if k >= 5 && g.n() > limits.max_vertices {
        return Err(Error::OracleCap { n: g.n(), k, cap: limits.max_vertices });
    }
    if k == 0 || k > g.n() {
        return Ok(None);
    }
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        let mut search = MinorSearch {
            g,
            ell: target.clique_count(),
            m: target.independent_count(),
            clique: Vec::new(),
            independent: Vec::new(),
        };
        if search.place(comp) {
            return Ok(Some(MinorModel::from_sets(&search.clique, &search.independent)));
        }
    }
    Ok(None)
}

/// Pulls a model back through a sequence of contractions.
///
/// `chain[i][x]` is the set of vertices of graph `i` that vertex `x` of graph
/// `i + 1` represents; `model` lives in the last graph.
pub fn model_through_contraction(chain: &[Vec<VertexSet>], model: &MinorModel) -> Result<MinorModel> {
    let pull = |set: &[usize]| -> Result<Vec<usize>> {
        let mut current: VertexSet = set.iter().copied().collect();
        for (step, provenance) in chain.iter().enumerate().rev() {
            let mut prev = VertexSet::EMPTY;
            for x in current {
                let p = provenance.get(x).ok_or_else(|| {
                    Error::Provenance(format!(
                        "vertex {x} missing from provenance map {step} of size {}",
                        provenance.len()
                    ))
                })?;
                if p.intersects(prev) {
                    return Err(Error::Provenance(format!("provenance map {step} overlaps at {x}")));
                }
                prev |= *p;
            }
            current = prev;
        }
        Ok(current.to_vec())
    };
    let mut out = MinorModel {
        clique_side: model.clique_side.iter().map(|s| pull(s)).collect::<Result<_>>()?,
        independent_side: model.independent_side.iter().map(|s| pull(s)).collect::<Result<_>>()?,
    };
    out.canonicalize();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::five_wheel;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn model(clique: &[&[usize]], independent: &[&[usize]]) -> MinorModel {
        MinorModel {
            clique_side: clique.iter().map(|s| s.to_vec()).collect(),
            independent_side: independent.iter().map(|s| s.to_vec()).collect(),
        }
    }

    #[test]
    fn validate_examples() {
        let w = five_wheel();
        let t = MinorTarget::clique_join_independent(1, 2).unwrap();
        assert_eq!(validate_model(&w, t, &model(&[&[5]], &[&[0], &[2]])), Ok(()));

        let overlap = validate_model(&w, t, &model(&[&[5, 0]], &[&[0], &[2]])).unwrap_err();
        assert!(overlap.iter().any(|v| v.to_string().contains("sets not disjoint")));

        let c5 = cycle(5);
        let k3 = MinorTarget::complete(3).unwrap();
        let errs = validate_model(&c5, k3, &model(&[&[0, 2], &[1], &[3, 4]], &[])).unwrap_err();
        assert!(errs.iter().any(|v| v.to_string().contains("not connected")));
    }

    #[test]
    fn validate_reports_counts_and_missing_edges() {
        let c5 = cycle(5);
        let k3 = MinorTarget::complete(3).unwrap();
        let errs = validate_model(&c5, k3, &model(&[&[0], &[2]], &[])).unwrap_err();
        assert!(errs.contains(&ModelViolation::WrongSetCount {
            side: Side::Clique,
            expected: 3,
            found: 2
        }));
        assert!(errs.iter().any(|v| matches!(v, ModelViolation::MissingEdge { .. })));
        let errs = validate_model(&c5, k3, &model(&[&[0], &[], &[9]], &[])).unwrap_err();
        assert!(errs.iter().any(|v| matches!(v, ModelViolation::EmptySet(_))));
        assert!(errs.iter().any(|v| matches!(v, ModelViolation::VertexOutOfRange { vertex: 9, .. })));
    }

    #[test]
    fn independent_side_needs_no_internal_edges() {
        // K^1_{1,3} in a star
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = MinorTarget::clique_join_independent(1, 3).unwrap();
        assert_eq!(validate_model(&star, t, &model(&[&[0]], &[&[1], &[2], &[3]])), Ok(()));
    }

    #[test]
    fn bruteforce_examples() {
        let c5 = cycle(5);
        let lim = OracleLimits::default();
        let k3 = MinorTarget::complete(3).unwrap();
        let m = find_minor_bruteforce(&c5, k3, &lim).unwrap().unwrap();
        assert_eq!(validate_model(&c5, k3, &m), Ok(()));
        let k4 = MinorTarget::complete(4).unwrap();
        assert_eq!(find_minor_bruteforce(&c5, k4, &lim).unwrap(), None);
        let k6 = MinorTarget::complete(6).unwrap();
        assert_eq!(find_minor_bruteforce(&c5, k6, &lim).unwrap(), None);
    }

    #[test]
    fn bruteforce_respects_cap() {
        let g = cycle(15);
        let k5 = MinorTarget::complete(5).unwrap();
        assert!(matches!(
            find_minor_bruteforce(&g, k5, &OracleLimits::default()),
            Err(Error::OracleCap { n: 15, k: 5, cap: 14 })
        ));
        // small targets are never capped
        let k3 = MinorTarget::complete(3).unwrap();
        assert!(find_minor_bruteforce(&g, k3, &OracleLimits::default()).unwrap().is_some());
    }

    #[test]
    fn bruteforce_uses_the_right_component() {
        // K1 + K4
        let mut g = Graph::empty(5).unwrap();
        for u in 1..5 {
            for v in u + 1..5 {
                g.add_edge(u, v);
            }
        }
        let k4 = MinorTarget::complete(4).unwrap();
        let m = find_minor_bruteforce(&g, k4, &OracleLimits::default()).unwrap().unwrap();
        assert_eq!(m.clique_side, vec![vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn pullback_cases() {
        let m = model(&[&[0]], &[&[1], &[2]]);
        assert_eq!(model_through_contraction(&[], &m).unwrap(), m);

        let c5 = cycle(5);
        let c = c5.contract_set([1, 2, 3].into_iter().collect()).unwrap();
        let in_h = model(&[&[c.merged]], &[&[0]]);
        let back = model_through_contraction(std::slice::from_ref(&c.provenance), &in_h).unwrap();
        assert_eq!(back.clique_side, vec![vec![1, 2, 3]]);
        let t = MinorTarget::clique_join_independent(1, 1).unwrap();
        assert_eq!(validate_model(&c5, t, &back), Ok(()));

        let bad = model(&[&[7]], &[]);
        assert!(matches!(
            model_through_contraction(&[c.provenance], &bad),
            Err(Error::Provenance(_))
        ));
    }

    #[test]
    fn restrict_complete_splits_sides() {
        let k4 = model(&[&[0], &[1], &[2], &[3]], &[]);
        let r = k4.restrict_complete(2, 1).unwrap();
        assert_eq!(r.clique_side, vec![vec![0], vec![1]]);
        assert_eq!(r.independent_side, vec![vec![2]]);
        assert!(k4.restrict_complete(3, 2).is_err());
    }

    #[test]
    fn target_json_shapes() {
        let t = MinorTarget::clique_join_independent(2, 3).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"ell":2,"m":3}"#);
        let k = MinorTarget::complete(4).unwrap();
        assert_eq!(serde_json::to_string(&k).unwrap(), r#"{"k":4}"#);
        let back: MinorTarget = serde_json::from_str(r#"{"ell":1,"m":0}"#).unwrap();
        assert_eq!(back, MinorTarget::CliqueJoinIndependent { ell: 1, m: 0 });
    }
}
