//! Graphs with α ≤ 2: exhaustive (complements of triangle-free graphs),
//! random, and named constructions.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::invariants::five_wheel;

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 10;
/// Without isomorphism reduction the stream grows like 2^(n²/4).
pub const LABELED_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorMode {
    Exhaustive,
    Random { seed: u64, count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub mode: GeneratorMode,
    /// One graph per isomorphism class (exhaustive mode only).
    pub dedup: bool,
    pub cap: usize,
}

impl GeneratorConfig {
    pub fn exhaustive(n: usize) -> Self {
        GeneratorConfig { n, mode: GeneratorMode::Exhaustive, dedup: true, cap: DEFAULT_EXHAUSTIVE_CAP }
    }

    pub fn random(n: usize, seed: u64, count: usize) -> Self {
        GeneratorConfig { n, mode: GeneratorMode::Random { seed, count }, dedup: false, cap: DEFAULT_EXHAUSTIVE_CAP }
    }
}

pub fn generate(config: &GeneratorConfig) -> Result<Vec<Graph>> {
    match config.mode {
        GeneratorMode::Exhaustive => enumerate_alpha2_with(config.n, config.dedup, config.cap),
        GeneratorMode::Random { seed, count } => {
            if count == 0 {
                return Err(Error::InvalidParams { name: "random".into(), reason: "count must be >= 1".into() });
            }
            (0..count as u64).map(|i| random_alpha2(config.n, seed.wrapping_add(i))).collect()
        }
    }
}

/// Every independent set of `g`, in increasing order of bitmask.
fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn go(g: &Graph, candidates: VertexSet, chosen: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(chosen);
        for v in candidates {
            let rest = candidates - g.neighbors(v) - VertexSet::full(v + 1);
            go(g, rest, chosen.with(v), out);
        }
    }
    let mut out = Vec::new();
    go(g, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_unstable_by_key(|s| s.bits());
    out
}

fn extend(g: &Graph, nbrs: VertexSet) -> Graph {
    let k = g.n();
    let mut adj = g.adjacency().to_vec();
    adj.push(nbrs);
    for v in nbrs {
        adj[v].insert(k);
    }
    Graph::from_adjacency(adj).expect("extension of a valid graph")
}

/// Triangle-free graphs on `n` vertices, grown one vertex at a time by
/// joining the new vertex to an independent set. With `dedup` each level
/// keeps one canonical representative per isomorphism class; without it
/// every labelled graph appears exactly once.
pub fn triangle_free_graphs(n: usize, dedup: bool) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for _ in 0..n {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for g in &level {
            for s in independent_sets(g) {
                let h = extend(g, s);
                if dedup {
                    let c = canonical_form(&h);
                    if seen.insert(c.clone()) {
                        next.push(c);
                    }
                } else {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn enumerate_alpha2(n: usize) -> Result<Vec<Graph>> {
    enumerate_alpha2_with(n, true, DEFAULT_EXHAUSTIVE_CAP)
}

/// Complements of all triangle-free graphs on `n` vertices.
pub fn enumerate_alpha2_with(n: usize, dedup: bool, cap: usize) -> Result<Vec<Graph>> {
    let cap = if dedup { cap } else { cap.min(LABELED_CAP) };
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    Ok(triangle_free_graphs(n, dedup).iter().map(Graph::complement).collect())
}

/// Complement of a random maximal triangle-free graph: vertex pairs in a
/// seeded random order, each added unless it closes a triangle.
pub fn random_alpha2(n: usize, seed: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if !g.neighbors(u).intersects(g.neighbors(v)) {
            g.add_edge(u, v);
        }
    }
    Ok(g.complement())
}

/// A named construction. Descriptions look like `cycle(5)`,
/// `clique_join_independent(2,3)`, `join(cycle(5),cycle(5))`,
/// `complement(circulant(31,3,7,8,9))`.
///
/// * `cycle(n)`: 0-1-…-(n−1)-0, n ≥ 3
/// * `complete(n)`, `path(n)`: 0-1-…-(n−1)
/// * `five_wheel`: C5 on 0..5, hub 5
/// * `clique_join_independent(l,m)`: clique 0..l, independent l..l+m, all cross edges
/// * `petersen`: outer cycle 0..5, inner pentagram 5..10 (i ~ i+2), spokes i ~ i+5
/// * `petersen_complement`
/// * `join(A,B)`: A on 0..|A|, B shifted after it, all cross edges
/// * `circulant(n,d1,…)`: i ~ i ± dj mod n
/// * `complement(A)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    FiveWheel,
    CliqueJoinIndependent(usize, usize),
    Petersen,
    PetersenComplement,
    Join(Box<NamedGraph>, Box<NamedGraph>),
    Circulant(usize, Vec<usize>),
    Complement(Box<NamedGraph>),
}

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams { name: name.into(), reason: reason.into() }
}

fn petersen() -> Graph {
    let mut g = Graph::empty(10).expect("10 vertices");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    g
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph> {
        match self {
            NamedGraph::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle", "n must be at least 3"));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            NamedGraph::Complete(n) => Graph::complete(*n),
            NamedGraph::Path(n) => {
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            NamedGraph::FiveWheel => Ok(five_wheel()),
            NamedGraph::CliqueJoinIndependent(l, m) => {
                Graph::complete(*l)?.join(&Graph::empty(*m)?)
            }
            NamedGraph::Petersen => Ok(petersen()),
            NamedGraph::PetersenComplement => Ok(petersen().complement()),
            NamedGraph::Join(a, b) => a.build()?.join(&b.build()?),
            NamedGraph::Circulant(n, jumps) => {
                let mut g = Graph::empty(*n)?;
                for &d in jumps {
                    if d == 0 || d > n / 2 {
                        return Err(invalid("circulant", format!("jump {d} outside 1..={}", n / 2)));
                    }
                    for i in 0..*n {
                        g.add_edge(i, (i + d) % n);
                    }
                }
                Ok(g)
            }
            NamedGraph::Complement(a) => Ok(a.build()?.complement()),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Cycle(n) => write!(f, "cycle({n})"),
            NamedGraph::Complete(n) => write!(f, "complete({n})"),
            NamedGraph::Path(n) => write!(f, "path({n})"),
            NamedGraph::FiveWheel => f.write_str("five_wheel"),
            NamedGraph::CliqueJoinIndependent(l, m) => write!(f, "clique_join_independent({l},{m})"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::PetersenComplement => f.write_str("petersen_complement"),
            NamedGraph::Join(a, b) => write!(f, "join({a},{b})"),
            NamedGraph::Circulant(n, jumps) => {
                write!(f, "circulant({n}")?;
                for d in jumps {
                    write!(f, ",{d}")?;
                }
                f.write_str(")")
            }
            NamedGraph::Complement(a) => write!(f, "complement({a})"),
        }
    }
}

enum Arg {
    Int(usize),
    Graph(NamedGraph),
}

fn int_args(name: &str, args: &[Arg], want: usize) -> Result<Vec<usize>> {
    let v: Vec<usize> = args
        .iter()
        .filter_map(|a| match a {
            Arg::Int(i) => Some(*i),
            Arg::Graph(_) => None,
        })
        .collect();
    if v.len() != args.len() || v.len() != want {
        return Err(invalid(name, format!("expected {want} integer argument(s)")));
    }
    Ok(v)
}

fn graph_args(name: &str, args: Vec<Arg>, want: usize) -> Result<Vec<NamedGraph>> {
    let total = args.len();
    let v: Vec<NamedGraph> = args
        .into_iter()
        .filter_map(|a| match a {
            Arg::Graph(g) => Some(g),
            Arg::Int(_) => None,
        })
        .collect();
    if v.len() != total || v.len() != want {
        return Err(invalid(name, format!("expected {want} graph argument(s)")));
    }
    Ok(v)
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn token(&mut self, pred: impl Fn(char) -> bool) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(&pred) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            let t = self.token(|c| c.is_ascii_digit());
            return t.parse().map(Arg::Int).map_err(|_| invalid(t, "integer out of range"));
        }
        self.graph().map(Arg::Graph)
    }

    fn graph(&mut self) -> Result<NamedGraph> {
        let name = self.token(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
        if name.is_empty() {
            return Err(Error::UnknownNamed(self.src[self.pos..].to_string()));
        }
        let mut args = Vec::new();
        if self.eat('(') && !self.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(invalid(&name, "expected ',' or ')'"));
                }
            }
        }
        Ok(match name.as_str() {
            "cycle" => NamedGraph::Cycle(int_args(&name, &args, 1)?[0]),
            "complete" => NamedGraph::Complete(int_args(&name, &args, 1)?[0]),
            "path" => NamedGraph::Path(int_args(&name, &args, 1)?[0]),
            "five_wheel" => {
                int_args(&name, &args, 0)?;
                NamedGraph::FiveWheel
            }
            "clique_join_independent" => {
                let v = int_args(&name, &args, 2)?;
                NamedGraph::CliqueJoinIndependent(v[0], v[1])
            }
            "petersen" => {
                int_args(&name, &args, 0)?;
                NamedGraph::Petersen
            }
            "petersen_complement" => {
                int_args(&name, &args, 0)?;
                NamedGraph::PetersenComplement
            }
            "circulant" => {
                let v = int_args(&name, &args, args.len())?;
                if v.len() < 2 {
                    return Err(invalid(&name, "expected n and at least one jump"));
                }
                NamedGraph::Circulant(v[0], v[1..].to_vec())
            }
            "join" => {
                let mut v = graph_args(&name, args, 2)?;
                let b = v.pop().expect("two graphs");
                let a = v.pop().expect("two graphs");
                NamedGraph::Join(Box::new(a), Box::new(b))
            }
            "complement" => NamedGraph::Complement(Box::new(graph_args(&name, args, 1)?.remove(0))),
            _ => return Err(Error::UnknownNamed(name)),
        })
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let g = p.graph()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(invalid(s, format!("trailing input at byte {}", p.pos)));
        }
        Ok(g)
    }
}

/// Parses and builds a description; see [`NamedGraph`].
pub fn named(desc: &str) -> Result<Graph> {
    let g = desc.parse::<NamedGraph>()?.build()?;
    debug_assert!(g.n() <= MAX_VERTICES);
    Ok(g)
}
