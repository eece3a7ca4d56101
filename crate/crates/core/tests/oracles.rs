mod common;

use alpha2_minors::canon::{are_isomorphic, canonical_form};
use alpha2_minors::connectivity::vertex_connectivity;
use alpha2_minors::generate::random_alpha2;
use alpha2_minors::invariants::{alpha_at_most_two, chromatic_number_alpha2, clique_number};
use alpha2_minors::matching::{matching_number, maximum_matching};
use alpha2_minors::{
    construct_chi_minor, emit_graph6, find_minor_bruteforce, parse_graph6, validate_model, Graph, MinorModel,
    MinorTarget, OracleLimits,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(emit_graph6(&canonical_form(&g)), emit_graph6(&canonical_form(&h)));
    }

    #[test]
    fn canonical_form_separates_classes(a in arb_graph(7), b in arb_graph(7)) {
        let same = a.n() == b.n() && common::brute_canonical(&a) == common::brute_canonical(&b);
        prop_assert_eq!(are_isomorphic(&a, &b), same);
    }

    #[test]
    fn matching_agrees_with_subset_dp(g in arb_graph(14)) {
        let m = maximum_matching(&g);
        let mut used = alpha2_minors::VertexSet::EMPTY;
        for &(u, v) in &m {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!used.contains(u) && !used.contains(v));
            used = used.with(u).with(v);
        }
        prop_assert_eq!(m.len(), common::matching_number_dp(&g));
        prop_assert_eq!(matching_number(&g), m.len());
    }

    #[test]
    fn connectivity_agrees_with_separator_search(g in arb_graph(11)) {
        prop_assert_eq!(vertex_connectivity(&g), common::vertex_connectivity_brute(&g));
    }

    #[test]
    fn clique_number_agrees_with_subsets(g in arb_graph(11)) {
        prop_assert_eq!(clique_number(&g).size, common::clique_number(&g));
        prop_assert_eq!(alpha_at_most_two(&g), common::independence_number(&g) <= 2);
    }

    #[test]
    fn chromatic_number_agrees_on_random_alpha2(n in 1usize..=14, seed in any::<u64>()) {
        let g = random_alpha2(n, seed).unwrap();
        prop_assert!(common::independence_number(&g) <= 2);
        prop_assert_eq!(chromatic_number_alpha2(&g).unwrap(), common::chromatic_number_bb(&g));
    }
}

/// Moves, drops or swaps one vertex of a model at random.
fn mutate(model: &mut MinorModel, n: usize, rng: &mut ChaCha8Rng) {
    let sets: Vec<&mut Vec<usize>> = model.clique_side.iter_mut().chain(model.independent_side.iter_mut()).collect();
    let count = sets.len();
    if count == 0 {
        return;
    }
    let mut sets = sets;
    let i = rng.random_range(0..count);
    match rng.random_range(0..4) {
        0 => {
            if !sets[i].is_empty() {
                let at = rng.random_range(0..sets[i].len());
                sets[i].remove(at);
            }
        }
        1 => sets[i].push(rng.random_range(0..n.max(1) + 1)),
        2 => {
            let j = rng.random_range(0..count);
            if i != j && !sets[i].is_empty() {
                let at = rng.random_range(0..sets[i].len());
                let v = sets[i].remove(at);
                sets[j].push(v);
            }
        }
        _ => {
            if !model.clique_side.is_empty() && !model.independent_side.is_empty() {
                let a = rng.random_range(0..model.clique_side.len());
                let b = rng.random_range(0..model.independent_side.len());
                std::mem::swap(&mut model.clique_side[a], &mut model.independent_side[b]);
            }
        }
    }
}

#[test]
fn validate_model_agrees_with_direct_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0;
    for round in 0..1000 {
        let n = rng.random_range(4..=11);
        let g = random_alpha2(n, rng.random()).unwrap();
        let chi = chromatic_number_alpha2(&g).unwrap();
        let (target, mut model) = if round % 2 == 0 && chi >= 2 {
            let ell = rng.random_range(1..=chi / 2);
            let cert = construct_chi_minor(&g, ell).unwrap();
            (cert.target, cert.model)
        } else {
            let ell = rng.random_range(1..=3);
            let m = rng.random_range(0..=3);
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(&mut rng);
            let mut sets = vec![Vec::new(); ell + m];
            for v in verts {
                let slot = rng.random_range(0..sets.len() + 2);
                if slot < sets.len() {
                    sets[slot].push(v);
                }
            }
            let independent = sets.split_off(ell);
            (
                MinorTarget::clique_join_independent(ell, m).unwrap(),
                MinorModel { clique_side: sets, independent_side: independent },
            )
        };
        for _ in 0..rng.random_range(0..3) {
            mutate(&mut model, n, &mut rng);
        }
        let direct = common::model_is_valid(
            &g,
            &model.clique_side,
            &model.independent_side,
            target.clique_count(),
            target.independent_count(),
        );
        let lib = validate_model(&g, target, &model);
        assert_eq!(lib.is_ok(), direct, "round {round}: {} {target} {model:?} {lib:?}", emit_graph6(&g));
        accepted += direct as usize;
    }
    assert!(accepted > 100, "too few positive cases: {accepted}");
}

/// Exists a model, by assigning each vertex to one of the branch sets or to
/// none.
fn minor_exists_by_assignment(g: &Graph, ell: usize, m: usize) -> bool {
    let k = ell + m;
    let n = g.n();
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![Vec::new(); k];
        for (v, &l) in label.iter().enumerate() {
            if l > 0 {
                sets[l - 1].push(v);
            }
        }
        let independent = sets.split_off(ell);
        if common::model_is_valid(g, &sets, &independent, ell, m) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn bruteforce_search_agrees_with_assignment_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let limits = OracleLimits::default();
    for _ in 0..150 {
        let n = rng.random_range(1..=7);
        let mut g = Graph::empty(n).unwrap();
        let p = rng.random_range(0.2..0.8);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let ell = rng.random_range(1..=3);
        let m = rng.random_range(0..=4 - ell);
        let target = MinorTarget::clique_join_independent(ell, m).unwrap();
        let found = find_minor_bruteforce(&g, target, &limits).unwrap();
        assert_eq!(found.is_some(), minor_exists_by_assignment(&g, ell, m), "{} {target}", emit_graph6(&g));
        if let Some(model) = found {
            assert!(common::model_is_valid(&g, &model.clique_side, &model.independent_side, ell, m));
        }
    }
}

#[test]
fn bruteforce_search_is_monotone() {
    let limits = OracleLimits::default();
    for seed in 0..40 {
        let g = random_alpha2(9, seed).unwrap();
        let mut absent_from = None;
        for k in 1..=6 {
            let found = find_minor_bruteforce(&g, MinorTarget::complete(k).unwrap(), &limits).unwrap();
            match (found, absent_from) {
                (Some(model), None) => {
                    assert!(common::model_is_valid(&g, &model.clique_side, &model.independent_side, k, 0));
                }
                (Some(_), Some(k0)) => panic!("K{k} found after K{k0} was absent in {}", emit_graph6(&g)),
                (None, _) => absent_from = absent_from.or(Some(k)),
            }
        }
        // Every K_k model restricts to K^l_{l,k-l}.
        for ell in 1..=3 {
            for m in 0..=3 {
                let complete = find_minor_bruteforce(&g, MinorTarget::complete(ell + m).unwrap(), &limits).unwrap();
                let weaker =
                    find_minor_bruteforce(&g, MinorTarget::clique_join_independent(ell, m).unwrap(), &limits).unwrap();
                assert!(complete.is_none() || weaker.is_some());
            }
        }
    }
}

#[test]
fn oracle_cap_is_reported() {
    let g = common::cycle(20);
    let err = find_minor_bruteforce(&g, MinorTarget::complete(5).unwrap(), &OracleLimits::default()).unwrap_err();
    assert!(matches!(err, alpha2_minors::Error::OracleCap { n: 20, k: 5, cap: 14 }), "{err}");
}
