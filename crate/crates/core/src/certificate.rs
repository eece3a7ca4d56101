//! Certificates produced by the constructors, with the trace of branches
//! taken. All vertex indices refer to the input graph.

use std::fmt;

use serde::Serialize;

use crate::graph::VertexSet;
use crate::minor::{MinorModel, MinorTarget};

/// Which bound a certificate witnesses: `m = ⌈n/2⌉ − ℓ` or `m = χ − ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Half,
    Chi,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Half => "half",
            Form::Chi => "chi",
        })
    }
}

/// One branch of the recursion. `vertices` is the vertex set of the graph
/// the step acted on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub depth: usize,
    pub vertices: VertexSet,
    pub ell: usize,
    #[serde(flatten)]
    pub detail: StepDetail,
}

impl TraceStep {
    pub fn kind(&self) -> &'static str {
        self.detail.kind()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum StepDetail {
    /// Complete graph, singleton branch sets.
    CliqueDirect,
    /// Even order: drop a minimum-degree vertex.
    DeleteVertexEven { deleted: usize },
    /// κ below ⌈n/2⌉; a `K_k` model came from the brute-force search.
    FallbackConnectivity { connectivity: usize, k: usize },
    /// ω large enough that a `K_k` minor is guaranteed; same search.
    FallbackClique { clique_number: usize, k: usize },
    /// ℓ disjoint induced P3s contracted, independent side picked outside.
    PackAndContract { paths: Vec<[usize; 3]>, independent: VertexSet },
    /// n = 4ℓ − 1: an edge plus ℓ − 1 paths, exchanged until B ⊆ N[uv].
    SmallCaseEdge {
        edge: (usize, usize),
        m_uv: VertexSet,
        initial_paths: Vec<[usize; 3]>,
        paths: Vec<[usize; 3]>,
        exchanges: usize,
        b: VertexSet,
    },
    /// ℓ = 1: a vertex of maximum degree and χ − 1 of its neighbours.
    MaxDegreeStar { center: usize },
    /// n ≥ 2χ − 1 forces χ = ⌈n/2⌉; handed to the half-order form.
    DelegateHalf { chi: usize },
    DeleteNoncriticalVertex { deleted: usize },
    /// V1 complete to V2 and ℓ = ℓ1 + ℓ2 fits both sides.
    JoinDecompose {
        v1: VertexSet,
        v2: VertexSet,
        chi1: usize,
        chi2: usize,
        ell1: usize,
        ell2: usize,
    },
    /// One side of the join is a clique; `to_clique_side` of its vertices
    /// become clique-side singletons, the rest independent-side singletons.
    CliqueAbsorb { clique: VertexSet, other: VertexSet, to_clique_side: usize },
    /// χ = 2ℓ with both sides of odd χ: {u1, u2} and {v1, v2} added.
    ParityGlue {
        v1: VertexSet,
        v2: VertexSet,
        ell1: usize,
        ell2: usize,
        u: (usize, usize),
        v: (usize, usize),
    },
}

impl StepDetail {
    pub fn kind(&self) -> &'static str {
        match self {
            StepDetail::CliqueDirect => "CliqueDirect",
            StepDetail::DeleteVertexEven { .. } => "DeleteVertexEven",
            StepDetail::FallbackConnectivity { .. } => "FallbackConnectivity",
            StepDetail::FallbackClique { .. } => "FallbackClique",
            StepDetail::PackAndContract { .. } => "PackAndContract",
            StepDetail::SmallCaseEdge { .. } => "SmallCaseEdge",
            StepDetail::MaxDegreeStar { .. } => "MaxDegreeStar",
            StepDetail::DelegateHalf { .. } => "DelegateHalf",
            StepDetail::DeleteNoncriticalVertex { .. } => "DeleteNoncriticalVertex",
            StepDetail::JoinDecompose { .. } => "JoinDecompose",
            StepDetail::CliqueAbsorb { .. } => "CliqueAbsorb",
            StepDetail::ParityGlue { .. } => "ParityGlue",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub input_graph6: String,
    pub n: usize,
    pub alpha_leq_2: bool,
    pub form: Form,
    pub chi: usize,
    pub ell: usize,
    pub target: MinorTarget,
    pub model: MinorModel,
    pub trace: Vec<TraceStep>,
    pub validated: bool,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn max_depth(&self) -> usize {
        self.trace.iter().map(|s| s.depth).max().unwrap_or(0)
    }
}
