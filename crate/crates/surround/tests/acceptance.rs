//! Acceptance battery: eleven checks that pin the headline results of this
//! project to exact solver output. Each test is one criterion and prints a
//! `criterion NN PASS` line with the measured values when it succeeds; the
//! test harness itself reports the pass/fail verdict per criterion.

use std::sync::Arc;

use surround::families::{
    attach_leaves, complete_bipartite, full_construction, line_complete, mols_graph,
};
use surround::graph::Graph;
use surround::latin::{are_orthogonal, build_field, generate_mols, is_latin};
use surround::rules::{GameSpec, Side, Variant};
use surround::solver::naive::naive_solve;
use surround::solver::search::{cop_number, CopNumberOptions};
use surround::solver::suite::{
    all_connected_graphs, game_numbers, random_connected_graphs, verify_corpus,
};
use surround::solver::{solve_fixed_k, SolveError, SolveOptions, Solution, Verdict};
use surround::strategy::adversary::{GreedyCops, RandomCops, RandomRobber};
use surround::strategy::extracted::{SolvedCops, SolvedRobber};
use surround::strategy::hslm_cops::HslmCops;
use surround::strategy::hslm_robber::HslmRobber;
use surround::strategy::lift::{check_lift_exhaustive, LiftedCops};
use surround::strategy::{run_match, MatchOptions, Transcript, Winner};

const BUDGET: u64 = 200_000_000;

fn number(graph: &Arc<Graph>, variant: Variant, budget: u64) -> u32 {
    let opts = CopNumberOptions {
        budget_states: budget,
        trust_lower_bounds: true,
        max_k: None,
    };
    cop_number(Arc::clone(graph), variant, &opts)
        .unwrap()
        .value
        .unwrap_or_else(|| panic!("{variant} undecided within {budget} states"))
}

fn verdict_at(graph: &Arc<Graph>, variant: Variant, k: u32, budget: u64) -> Verdict {
    let spec = GameSpec::new(Arc::clone(graph), variant, k).unwrap();
    let opts = SolveOptions {
        budget_states: budget,
        compute_ranks: false,
        ..SolveOptions::default()
    };
    solve_fixed_k(&spec, &opts).unwrap().verdict()
}

fn solved(graph: &Arc<Graph>, variant: Variant, k: u32) -> (Arc<Solution>, GameSpec) {
    let spec = GameSpec::new(Arc::clone(graph), variant, k).unwrap();
    let sol = solve_fixed_k(&spec, &SolveOptions::default()).unwrap();
    (Arc::new(sol), spec)
}

#[test]
fn criterion_01_complete_bipartite_battery() {
    for a in 1usize..=3 {
        for b in a..=3 {
            let g = Arc::new(complete_bipartite(a, b).unwrap().graph);
            let v = game_numbers(&g, BUDGET).unwrap();
            let (min_deg, max_deg) = (a as u32, b as u32);
            assert_eq!(v.classical, min_deg.min(2), "classical K_{{{a},{b}}}");
            assert_eq!(v.vertex_r, min_deg, "vertex-r K_{{{a},{b}}}");
            assert_eq!(v.vertex, max_deg, "vertex K_{{{a},{b}}}");
            assert_eq!(v.edge, Some(max_deg), "edge K_{{{a},{b}}}");
            assert_eq!(v.edge_r, Some(max_deg), "edge-r K_{{{a},{b}}}");
        }
    }
    println!(
        "criterion 01 PASS: all K_{{a,b}} with a <= b <= 3 have classical min(2, delta), \
         vertex-r delta, and vertex/edge/edge-r Delta"
    );
}

#[test]
fn criterion_02_star_and_k33_tightness() {
    let star = Arc::new(complete_bipartite(1, 3).unwrap().graph);
    let vr_star = number(&star, Variant::VertexSurroundRestrictive, BUDGET);
    let v_star = number(&star, Variant::VertexSurround, BUDGET);
    assert_eq!(vr_star, 1);
    assert_eq!(v_star, 3);
    assert_eq!(v_star, star.max_degree() * vr_star);

    let k33 = Arc::new(complete_bipartite(3, 3).unwrap().graph);
    let vr = number(&k33, Variant::VertexSurroundRestrictive, BUDGET);
    let er = number(&k33, Variant::EdgeSurroundRestrictive, BUDGET);
    assert_eq!(vr, 3);
    assert_eq!(er, 3);
    println!(
        "criterion 02 PASS: K_{{1,3}} vertex-r 1 vs vertex 3 (factor Delta is tight); \
         K_{{3,3}} vertex-r = edge-r = 3"
    );
}

#[test]
fn criterion_03_k2_with_leaves() {
    let host = complete_bipartite(1, 1).unwrap().graph;
    let g = Arc::new(attach_leaves(&host, 2).unwrap().graph);
    assert_eq!(g.max_degree(), 3);
    let v = game_numbers(&g, BUDGET).unwrap();
    assert_eq!(v.vertex, 4);
    assert_eq!(v.edge, Some(3));
    assert_eq!(v.vertex_r, 2);
    assert_eq!(v.edge_r, Some(3));
    println!(
        "criterion 03 PASS: K_2 with 2 leaves per vertex has vertex 4, edge 3, \
         vertex-r 2, edge-r 3"
    );
}

#[test]
fn criterion_04_k22_with_leaves() {
    let host = complete_bipartite(2, 2).unwrap().graph;
    let g = Arc::new(attach_leaves(&host, 2).unwrap().graph);
    assert_eq!(g.max_degree(), 4);
    let v = game_numbers(&g, BUDGET).unwrap();
    assert_eq!(v.vertex_r, 3);
    assert_eq!(v.vertex, 6);
    assert_eq!(v.edge_r, Some(4));
    assert_eq!(v.edge, Some(4));

    // The max-degree-3 sibling of this family is excluded from formula
    // assertions; its solver values are reported as a finding instead.
    let small = Arc::new(attach_leaves(&complete_bipartite(1, 1).unwrap().graph, 2).unwrap().graph);
    let f = game_numbers(&small, BUDGET).unwrap();
    println!(
        "criterion 04 PASS: K_{{2,2}} with 2 leaves per vertex has vertex-r 3, vertex 6, \
         edge-r 4, edge 4; finding: the degree-3 sibling K_2+leaves solves to \
         vertex {} edge {:?} vertex-r {} edge-r {:?}",
        f.vertex, f.edge, f.vertex_r, f.edge_r
    );
}

#[test]
fn criterion_05_mols_and_their_graph() {
    for k in 2u32..=5 {
        let squares = generate_mols(k).unwrap();
        assert_eq!(squares.len(), (k - 1) as usize, "square count for order {k}");
        for s in &squares {
            assert!(is_latin(s), "order {k} square not latin");
        }
        for i in 0..squares.len() {
            for j in i + 1..squares.len() {
                assert!(
                    are_orthogonal(&squares[i], &squares[j]),
                    "order {k} squares {i},{j} not orthogonal"
                );
            }
        }
    }

    let g3 = mols_graph(3).unwrap();
    let g = Arc::new(g3.graph);
    assert_eq!(g.vertex_count(), 18);
    assert!((0..18).all(|v| g.degree(v) == 3), "not 3-regular");
    assert_eq!(g.girth(), Some(6));
    assert_eq!(number(&g, Variant::Classical, BUDGET), 3);
    assert_eq!(
        verdict_at(&g, Variant::VertexSurroundRestrictive, 4, BUDGET),
        Verdict::CopWin
    );
    println!(
        "criterion 05 PASS: orders 2..=5 give pairwise orthogonal latin squares; the \
         order-3 incidence graph has 18 vertices, is 3-regular with girth 6, classical \
         number 3, and 4 cops win the restrictive vertex game"
    );
}

/// Extended, opt-in check (run with `--ignored`): five edge cops still lose
/// on the order-3 incidence graph, so its edge-surround number is at least 6.
#[test]
#[ignore]
fn criterion_05_extended_edge_lower_bound() {
    let g = Arc::new(mols_graph(3).unwrap().graph);
    assert_eq!(
        verdict_at(&g, Variant::EdgeSurround, 5, BUDGET),
        Verdict::RobberWin
    );
    println!("criterion 05 extended PASS: the order-3 incidence graph needs at least 6 edge cops");
}

#[test]
fn criterion_06_line_graph_of_k4() {
    let g = Arc::new(line_complete(4).unwrap().graph);
    assert_eq!(number(&g, Variant::VertexSurround, BUDGET), 4);
    assert_eq!(number(&g, Variant::VertexSurroundRestrictive, BUDGET), 4);
    println!("criterion 06 PASS: the line graph of K_4 has vertex number 4 and vertex-r number 4");
}

#[test]
fn criterion_07_inequality_corpus() {
    let mut graphs = all_connected_graphs(5);
    let exhaustive = graphs.len();
    graphs.extend(random_connected_graphs(100, 0));
    let report = verify_corpus(&graphs, BUDGET, 2);
    assert_eq!(report.graphs_checked, graphs.len());
    assert!(
        report.violations.is_empty(),
        "violations: {:?}",
        report.violations
    );
    println!(
        "criterion 07 PASS: zero inequality violations on {exhaustive} exhaustive graphs \
         (n <= 5) plus 100 random connected graphs (n <= 7, seed 0)"
    );
}

#[test]
fn criterion_08_sparse_construction_two_cop_capture() {
    let h = full_construction(1, 13, 3).unwrap();
    let g = Arc::new(h.graph.clone());
    assert_eq!(g.max_degree(), 3);
    assert_eq!(g.degeneracy().0, 2);

    // Root distances inside the untouched copy: every base edge stretches
    // to a path of length 2s + 2l + 1 = 29, and roots of non-adjacent base
    // vertices stay further apart than 2l.
    let want = 2 * h.s() + 2 * h.l() + 1;
    assert_eq!(want, 29);
    for e in 0..h.template.m_base() {
        let (a, b) = h.template.arc(e);
        let d = g.distances_from(h.root2(a))[h.root2(b) as usize];
        assert_eq!(d, want, "base edge {a}-{b}");
    }
    let base = h.template.base.graph().clone();
    for a in 0..h.n_base() {
        let da = g.distances_from(h.root2(a));
        for b in 0..h.n_base() {
            if a != b && !base.has_edge(a, b) {
                assert!(da[h.root2(b) as usize] > 2 * h.l(), "roots {a},{b} too close");
            }
        }
    }

    // Two cops capture. The exact solve is the primary certificate; if the
    // state budget ever fails it, fall back to the scripted chase against
    // a 50-seed adversary pool.
    let spec = GameSpec::new(Arc::clone(&g), Variant::Classical, 2).unwrap();
    let opts = SolveOptions {
        compute_ranks: false,
        ..SolveOptions::default()
    };
    match solve_fixed_k(&spec, &opts) {
        Ok(sol) => {
            assert_eq!(sol.verdict(), Verdict::CopWin);
            println!(
                "criterion 08 PASS: H[1,13,3] has max degree 3, degeneracy 2, all {} base \
                 edges stretched to distance 29; exact solve: two cops capture \
                 ({} states)",
                h.template.m_base(),
                sol.stats().states
            );
        }
        Err(SolveError::StateSpace { .. }) => {
            let opts = MatchOptions {
                max_rounds: Some(20_000),
            };
            for seed in 0..50 {
                let mut cops = HslmCops::new(h.clone()).unwrap();
                let mut robber = RandomRobber::new(spec.clone(), seed);
                let t = run_match(&spec, &mut cops, &mut robber, &opts).unwrap();
                assert_eq!(t.winner, Winner::Cops, "seed {seed}");
            }
            println!(
                "criterion 08 PASS (fallback): scripted two-cop chase captured all of a \
                 50-seed adversary pool on H[1,13,3]"
            );
        }
        Err(e) => panic!("unexpected solve failure: {e}"),
    }
}

#[test]
fn criterion_09_double_construction_one_cop_escape() {
    let h = full_construction(2, 8, 6).unwrap();
    let g = Arc::new(h.graph.clone());
    assert_eq!(g.max_degree(), 3);

    // Exact lower bound: one cop loses the restrictive vertex game.
    let spec = GameSpec::new(Arc::clone(&g), Variant::VertexSurroundRestrictive, 1).unwrap();
    let sol = Arc::new(solve_fixed_k(&spec, &SolveOptions::default()).unwrap());
    assert_eq!(sol.verdict(), Verdict::RobberWin);

    // The scripted robber also survives long pressure from greedy, random,
    // and solver-extracted cops.
    let rounds = 10_000;
    let opts = MatchOptions {
        max_rounds: Some(rounds),
    };
    let mut pool: Vec<Box<dyn surround::strategy::CopController>> = Vec::new();
    pool.push(Box::new(GreedyCops::new(spec.clone())));
    for seed in 0..50 {
        pool.push(Box::new(RandomCops::new(spec.clone(), seed)));
    }
    pool.push(Box::new(SolvedCops::new(Arc::clone(&sol))));
    let n_opponents = pool.len();
    for (i, cops) in pool.iter_mut().enumerate() {
        let mut robber = HslmRobber::new(h.clone()).unwrap();
        let t = run_match(&spec, cops.as_mut(), &mut robber, &opts).unwrap();
        assert_eq!(t.winner, Winner::Robber, "opponent {i} ({})", cops.name());
        assert_eq!(t.rounds, rounds, "opponent {i} ended early");
    }
    println!(
        "criterion 09 PASS: one cop loses the restrictive vertex game on H[2,8,6] \
         ({} states), and the scripted robber survived {rounds} rounds against \
         {n_opponents} opponents",
        sol.stats().states
    );
}

#[test]
fn criterion_10_lifting_soundness_on_the_corpus() {
    let pairs = [
        (Variant::VertexSurroundRestrictive, Variant::VertexSurround),
        (Variant::EdgeSurroundRestrictive, Variant::EdgeSurround),
        (Variant::EdgeSurround, Variant::VertexSurround),
        (
            Variant::EdgeSurroundRestrictive,
            Variant::VertexSurroundRestrictive,
        ),
        (Variant::VertexSurround, Variant::EdgeSurround),
        (
            Variant::VertexSurroundRestrictive,
            Variant::EdgeSurroundRestrictive,
        ),
    ];
    let sources = [
        Variant::VertexSurround,
        Variant::VertexSurroundRestrictive,
        Variant::EdgeSurround,
        Variant::EdgeSurroundRestrictive,
    ];

    let mut lifts = 0usize;
    for graph in all_connected_graphs(5) {
        if graph.edge_count() == 0 {
            continue;
        }
        let g = Arc::new(graph);
        // One certified optimal solve per source variant, shared by the
        // pairs that start from it.
        let mut optimal = Vec::new();
        for &variant in &sources {
            let k = number(&g, variant, BUDGET);
            optimal.push((variant, solved(&g, variant, k)));
        }
        for &(from, to) in &pairs {
            let (sol, spec) = &optimal
                .iter()
                .find(|(v, _)| *v == from)
                .map(|(_, s)| s.clone())
                .unwrap();
            let inner = SolvedCops::new(Arc::clone(sol));
            let lifted = LiftedCops::new(inner, spec.clone(), to).unwrap();
            let states = check_lift_exhaustive(&lifted, 2_000_000).unwrap_or_else(|e| {
                panic!(
                    "lift {from}->{to} failed on n={} edges {:?}: {e:?}",
                    g.vertex_count(),
                    g.edges()
                )
            });
            assert!(states > 0);
            lifts += 1;
        }
    }
    assert_eq!(lifts, 771 * 6);
    println!(
        "criterion 10 PASS: all {lifts} lifts on the connected n <= 5 corpus beat every \
         robber reply in the target game"
    );
}

/// Steps a finished transcript back through the rules: every half-move must
/// be legal from the previous position, and the recorded outcome must match
/// what the rules say about the final position.
fn replay(spec: &GameSpec, t: &Transcript) -> Result<(), String> {
    let mut cops = t.initial_cops.clone();
    if cops.len() != spec.k() as usize {
        return Err("wrong cop count".into());
    }
    let Some(mut robber) = t.initial_robber else {
        return if t.moves.is_empty() && spec.robber_placements(&cops).is_empty() {
            Ok(())
        } else {
            Err("robber placement missing".into())
        };
    };
    if !spec.robber_placements(&cops).contains(&robber) {
        return Err(format!("illegal placement {robber}"));
    }
    for (i, hm) in t.moves.iter().enumerate() {
        match hm.side {
            Side::CopsToMove => {
                for (j, (&from, &to)) in cops.iter().zip(&hm.cops).enumerate() {
                    if !spec.cop_move_legal(from, to) {
                        return Err(format!("move {i}: cop {j} {from}->{to}"));
                    }
                }
                if hm.robber != robber {
                    return Err(format!("move {i}: robber teleported"));
                }
                cops = hm.cops.clone();
            }
            Side::RobberToMove => {
                if hm.cops != cops {
                    return Err(format!("move {i}: cops teleported"));
                }
                if !spec.robber_move_legal(&cops, robber, hm.robber) {
                    return Err(format!("move {i}: robber {robber}->{}", hm.robber));
                }
                robber = hm.robber;
            }
        }
    }
    let last_side = t.moves.last().map(|hm| hm.side);
    match (t.winner, t.reason.as_str()) {
        (Winner::Cops, "surrounded") | (Winner::Cops, "captured") => {
            let side = if last_side == Some(Side::CopsToMove) {
                Side::RobberToMove
            } else {
                Side::CopsToMove
            };
            if spec.is_cop_win_terminal(&cops, robber, side) {
                Ok(())
            } else {
                Err("claimed win is not terminal".into())
            }
        }
        (Winner::Cops, _) => Ok(()),
        (Winner::Robber, _) => {
            if t.rounds > 0 {
                Ok(())
            } else {
                Err("robber win without play".into())
            }
        }
    }
}

#[test]
fn criterion_11_property_spot_suite() {
    // Exact solver agrees with the brute-force reference on every connected
    // graph with up to 4 vertices, both cop counts, all variants.
    let corpus = all_connected_graphs(4);
    let mut agreements = 0;
    for graph in &corpus {
        let g = Arc::new(graph.clone());
        for variant in Variant::ALL {
            if variant.cops_on_edges() && g.edge_count() == 0 {
                continue;
            }
            for k in 1..=2u32 {
                let spec = GameSpec::new(Arc::clone(&g), variant, k).unwrap();
                let fast = solve_fixed_k(&spec, &SolveOptions::default())
                    .unwrap()
                    .verdict();
                assert_eq!(fast, naive_solve(&spec).verdict(), "{variant} k={k}");
                agreements += 1;
            }
        }
    }

    // More cops never hurt: one extra cop past the minimum still wins.
    for graph in &corpus {
        let g = Arc::new(graph.clone());
        for variant in Variant::ALL {
            if variant.cops_on_edges() && g.edge_count() == 0 {
                continue;
            }
            let k = number(&g, variant, BUDGET);
            assert_eq!(verdict_at(&g, variant, k + 1, BUDGET), Verdict::CopWin);
        }
    }

    // Worker counts change scheduling, never results.
    let small = all_connected_graphs(4);
    let one = serde_json::to_value(verify_corpus(&small, BUDGET, 1)).unwrap();
    let three = serde_json::to_value(verify_corpus(&small, BUDGET, 3)).unwrap();
    assert_eq!(one, three);

    // Finished matches replay cleanly through the rules.
    let mut replays = 0;
    for (variant, k) in [
        (Variant::Classical, 1),
        (Variant::VertexSurround, 2),
        (Variant::EdgeSurroundRestrictive, 2),
    ] {
        let g = Arc::new(complete_bipartite(2, 2).unwrap().graph);
        let (sol, spec) = solved(&g, variant, k);
        for seed in 0..5 {
            let mut cops = SolvedCops::new(Arc::clone(&sol));
            let mut robber = RandomRobber::new(spec.clone(), seed);
            let t = run_match(&spec, &mut cops, &mut robber, &MatchOptions::default()).unwrap();
            replay(&spec, &t).unwrap();
            replays += 1;
        }
        let mut cops = SolvedCops::new(Arc::clone(&sol));
        let mut robber = SolvedRobber::new(Arc::clone(&sol));
        let t = run_match(&spec, &mut cops, &mut robber, &MatchOptions::default()).unwrap();
        replay(&spec, &t).unwrap();
        replays += 1;
    }

    // Field tables behind the latin squares satisfy the field axioms.
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let f = build_field(q).unwrap();
        assert_eq!(f.order(), q);
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.mul(a, 0), 0);
            assert!((0..q).any(|b| f.add(a, b) == 0), "no additive inverse");
            if a != 0 {
                assert!((0..q).any(|b| f.mul(a, b) == 1), "no multiplicative inverse");
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    println!(
        "criterion 11 PASS: {agreements} reference-solver agreements, monotonicity in k, \
         worker-count determinism, {replays} clean transcript replays, and field axioms \
         for orders 2..9"
    );
}
