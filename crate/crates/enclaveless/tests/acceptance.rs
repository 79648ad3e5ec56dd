//! Acceptance suite: every criterion prints one pass/fail line (visible
//! with `cargo test --test acceptance -- --nocapture`) and asserts the
//! stated exact values and time budgets.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use enclaveless::families::{self, PartitionedGraph};
use enclaveless::game::{
    simulate, solve, solve_with, GameKind, Position, Side, SolveOptions, Strategy,
};
use enclaveless::graph::{Graph, Vertex};
use enclaveless::invariants::{
    compute_invariants, max_independent_sets, max_irredundant_sets, psi_sets, upper_gamma_sets,
};
use enclaveless::io::graph6::{parse_graph6, write_graph6};
use enclaveless::verifier::{self, SweepItem, SweepOptions, SweepSummary};

fn value(g: &Graph, kind: GameKind, starter: Side) -> usize {
    solve(g, kind, starter).expect("within caps").total_moves
}

fn report_line(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_enclaveless_path_formulas() {
    let start = Instant::now();
    for n in 2..=13 {
        let p = families::path(n).unwrap();
        assert_eq!(
            value(&p, GameKind::Enclaveless, Side::Maximizing),
            (3 * n + 1) / 5,
            "maximizer-start path value, n = {n}"
        );
        assert_eq!(
            value(&p, GameKind::Enclaveless, Side::Minimizing),
            3 * n / 5,
            "minimizer-start path value, n = {n}"
        );
    }
    let elapsed = start.elapsed();
    report_line(
        "01 enclaveless path formulas",
        elapsed <= Duration::from_secs(60),
        &format!("n = 2..=13 both starters, {elapsed:?}"),
    );
}

#[test]
fn criterion_02_domination_path_formulas() {
    let start = Instant::now();
    for n in 2..=13usize {
        let p = families::path(n).unwrap();
        let expected_d = if n % 4 == 3 {
            n.div_ceil(2) - 1
        } else {
            n.div_ceil(2)
        };
        assert_eq!(
            value(&p, GameKind::Domination, Side::Minimizing),
            expected_d,
            "dominator-start path value, n = {n}"
        );
        assert_eq!(
            value(&p, GameKind::Domination, Side::Maximizing),
            n.div_ceil(2),
            "staller-start path value, n = {n}"
        );
    }
    let elapsed = start.elapsed();
    report_line(
        "02 domination path formulas",
        elapsed <= Duration::from_secs(60),
        &format!("n = 2..=13 both starters, {elapsed:?}"),
    );
}

#[test]
fn criterion_03_stars_and_double_stars() {
    for k in 1..=5 {
        let s = families::star(k).unwrap();
        assert_eq!(value(&s, GameKind::Enclaveless, Side::Maximizing), k);
        assert_eq!(value(&s, GameKind::Enclaveless, Side::Minimizing), 1);
    }
    for k in [3, 4] {
        let ds = families::double_star(k).unwrap();
        assert_eq!(value(&ds, GameKind::Enclaveless, Side::Maximizing), k + 1);
        assert_eq!(value(&ds, GameKind::Enclaveless, Side::Minimizing), k + 1);
        assert_eq!(value(&ds, GameKind::Domination, Side::Minimizing), 3);
        assert_eq!(value(&ds, GameKind::Domination, Side::Maximizing), 4);
    }
    report_line(
        "03 stars and double stars",
        true,
        "stars k = 1..=5, double stars k = 3, 4",
    );
}

#[test]
fn criterion_04_well_dominated_identity() {
    let c7 = families::cycle(7).unwrap();
    assert_eq!(value(&c7, GameKind::Enclaveless, Side::Maximizing), 4);
    assert_eq!(value(&c7, GameKind::Enclaveless, Side::Minimizing), 4);

    let p10 = families::path(10).unwrap();
    assert_eq!(value(&p10, GameKind::Enclaveless, Side::Maximizing), 6);
    assert_eq!(value(&p10, GameKind::Enclaveless, Side::Minimizing), 6);

    // the corona of every connected graph on <= 5 vertices
    let coronas: Vec<Graph> = verifier::exhaustive_graphs(5, true)
        .unwrap()
        .map(|h| h.corona().unwrap())
        .collect();
    let count = coronas.len();
    coronas.par_iter().for_each(|cor| {
        let h_order = cor.order() / 2;
        assert!(compute_invariants(cor).unwrap().well_dominated);
        assert_eq!(value(cor, GameKind::Enclaveless, Side::Maximizing), h_order);
        assert_eq!(value(cor, GameKind::Enclaveless, Side::Minimizing), h_order);
    });
    report_line(
        "04 well-dominated identity",
        true,
        &format!("7-cycle, 10-path, and coronas of {count} connected graphs"),
    );
}

#[test]
fn criterion_05_exhaustive_sweep_n7() {
    let start = Instant::now();
    let catalog = verifier::default_catalog();
    let opts = SweepOptions::default();
    let corpus = verifier::exhaustive_graphs(7, true).unwrap();
    let mut summary = SweepSummary::default();
    for item in verifier::run_checks(corpus, &catalog, &opts) {
        if let SweepItem::Record(record) = &item {
            if let Some(violation) = record.violations().next() {
                panic!(
                    "violation on {}: {} ({})",
                    record.graph6, violation.name, violation.detail
                );
            }
        }
        summary.add(&item);
    }
    let elapsed = start.elapsed();
    assert_eq!(summary.skipped, 0, "no corpus member may be skipped");
    assert_eq!(
        summary.graphs, 1_893_732,
        "labeled connected graphs, n <= 7"
    );
    report_line(
        "05 exhaustive sweep n <= 7",
        summary.all_passed() && elapsed <= Duration::from_secs(480),
        &format!(
            "{} graphs, {} checks, {} violations, {elapsed:?}",
            summary.graphs, summary.checks_run, summary.violations
        ),
    );
}

#[test]
fn criterion_06_connector_rings() {
    let start = Instant::now();
    let f24 = families::connector_ring(2, 4).unwrap();
    assert_eq!(f24.order(), 10);
    assert_eq!(value(&f24, GameKind::Enclaveless, Side::Minimizing), 8);

    let f23 = families::connector_ring(2, 3).unwrap();
    assert_eq!(f23.order(), 8);
    assert_eq!(value(&f23, GameKind::Enclaveless, Side::Maximizing), 6);
    let elapsed = start.elapsed();
    report_line(
        "06 connector rings",
        elapsed <= Duration::from_secs(60),
        &format!("ring(2,4) minimizer-start = 8, ring(2,3) maximizer-start = 6, {elapsed:?}"),
    );
}

#[test]
fn criterion_07_family_f_members() {
    let members = families::family_f_members(2..=4, 2).unwrap();
    assert!(members.len() > 5000, "expected the full member enumeration");
    members.par_iter().for_each(|member| {
        let PartitionedGraph { graph, a, b } = member;
        let n = graph.order();
        assert!(n <= 13);
        let report = compute_invariants(graph).unwrap();
        assert_eq!(
            report.ir,
            Some(n.div_ceil(2)),
            "IR = (n+1)/2 on each member"
        );

        // B is the unique maximum irredundant, maximum independent, and
        // maximum minimal dominating set; A is the unique minimum maximal
        // enclaveless set.
        assert_eq!(max_irredundant_sets(graph).unwrap(), vec![*b]);
        assert_eq!(max_independent_sets(graph).unwrap(), vec![*b]);
        assert_eq!(upper_gamma_sets(graph).unwrap(), vec![*b]);
        assert_eq!(psi_sets(graph).unwrap(), vec![*a]);

        let plus = value(graph, GameKind::Enclaveless, Side::Maximizing);
        let minus = value(graph, GameKind::Enclaveless, Side::Minimizing);
        assert!(2 * plus >= n, "maximizer-start half bound on each member");
        let is_p3 = n == 3;
        if is_p3 {
            assert_eq!(minus, 1);
        } else {
            assert!(2 * minus >= n, "minimizer-start half bound, n = {n}");
        }
    });
    report_line(
        "07 extremal family members",
        true,
        &format!("{} members from trees on 2..=4 vertices", members.len()),
    );
}

#[test]
fn criterion_08_corona_ratio_heavy() {
    let start = Instant::now();
    let cor = families::corona_path(10).unwrap();
    let psg_plus = value(&cor, GameKind::Enclaveless, Side::Maximizing);
    assert_eq!(psg_plus, 10);
    let gg = value(&cor, GameKind::Domination, Side::Minimizing);
    assert!(
        gg >= 11,
        "dominator-start value must be at least 11, got {gg}"
    );
    // ratio gg / psg_plus >= 11/10, in integers
    assert!(10 * gg >= 11 * psg_plus);
    let elapsed = start.elapsed();
    report_line(
        "08 corona ratio (heavy)",
        elapsed <= Duration::from_secs(300),
        &format!("gamma_g = {gg}, maximizer-start enclaveless = {psg_plus}, {elapsed:?}"),
    );
}

#[test]
fn criterion_09_strategy_certificates() {
    let f24 = families::connector_ring(2, 4).unwrap();
    let connector = Strategy::connector(&f24).unwrap();
    let sim = simulate(
        &f24,
        GameKind::Enclaveless,
        Side::Minimizing,
        Side::Maximizing,
        &connector,
    )
    .expect("no strategy fault");
    assert!(sim.value >= 8, "connector certificate, got {}", sim.value);
    assert!(
        sim.fallbacks.is_empty(),
        "the connector preference is total on ring graphs"
    );

    let cor = families::corona_path(10).unwrap();
    let blocks = Strategy::staller_blocks(&cor).unwrap();
    let sim = simulate(
        &cor,
        GameKind::Domination,
        Side::Minimizing,
        Side::Maximizing,
        &blocks,
    )
    .expect("no strategy fault");
    assert!(
        sim.value >= 11,
        "block-script certificate, got {}",
        sim.value
    );
    assert!(
        !sim.fallbacks.is_empty(),
        "unscripted positions must be logged"
    );
    report_line(
        "09 strategy certificates",
        true,
        &format!(
            "connector >= 8 with no fallbacks; block script >= 11 with {} logged fallback states",
            sim.fallbacks.len()
        ),
    );
}

#[test]
fn criterion_10_graph6_integrity() {
    // byte-equality against the independently generated fixture encodings
    let fixtures = include_str!("fixtures/graph6_n_le_5.txt");
    let mut checked = 0;
    for line in fixtures.lines() {
        let mut parts = line.split_whitespace();
        let n: usize = parts.next().unwrap().parse().unwrap();
        let mask = u64::from_str_radix(parts.next().unwrap(), 16).unwrap();
        let expected = parts.next().unwrap();
        // fixture masks index pairs (u, v), u < v, lexicographically
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        let edges: Vec<(Vertex, Vertex)> = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        assert_eq!(write_graph6(&g), expected, "n = {n}, mask = {mask:#x}");
        assert_eq!(parse_graph6(expected).unwrap(), g);
        checked += 1;
    }
    assert_eq!(checked, 1099, "exhaustive labeled corpus for n <= 5");

    // randomized round trips at larger orders
    for g in verifier::random_graphs(10_000, 6, 20, 0x6_0a7) {
        let token = write_graph6(&g);
        assert_eq!(parse_graph6(&token).unwrap(), g);
    }
    report_line(
        "10 graph6 integrity",
        true,
        "1099 fixture encodings byte-equal; 10000 random round trips",
    );
}

#[test]
fn criterion_11_solver_self_consistency() {
    let sample: Vec<Graph> = verifier::random_graphs(500, 2, 10, 0xC0_1151).collect();
    sample.par_iter().for_each(|g| {
        for kind in [GameKind::Enclaveless, GameKind::Domination] {
            for starter in [Side::Maximizing, Side::Minimizing] {
                let memoized = solve(g, kind, starter).unwrap();
                let plain = solve_with(
                    g,
                    kind,
                    starter,
                    &SolveOptions {
                        memo: false,
                        ..SolveOptions::default()
                    },
                )
                .unwrap();
                assert_eq!(memoized, plain, "{g:?} {kind:?} {starter:?}");

                // the principal variation replays to the claimed value
                let mut pos = Position::opening(g, kind, starter);
                for &v in &memoized.principal_variation {
                    pos = pos.apply(v).unwrap();
                }
                assert!(pos.is_terminal());
                assert_eq!(pos.move_count(), memoized.total_moves);
            }
        }
    });
    report_line(
        "11 solver self-consistency",
        true,
        "memo vs plain agreement and variation replay on 500 random graphs",
    );
}

/// The game values of every swept graph also stay inside the enclaveless
/// sandwich when solved from scratch with the mover included in the memo
/// key; this pins the soundness of the played-set-only keying.
#[test]
fn memo_keying_is_sound_on_random_graphs() {
    let keyed = SolveOptions {
        mover_in_key: true,
        ..SolveOptions::default()
    };
    for g in verifier::random_graphs(300, 2, 9, 0x5EED) {
        for starter in [Side::Maximizing, Side::Minimizing] {
            let by_set = solve(&g, GameKind::Enclaveless, starter).unwrap();
            let by_set_and_mover = solve_with(&g, GameKind::Enclaveless, starter, &keyed).unwrap();
            assert_eq!(by_set, by_set_and_mover, "{g:?} {starter:?}");
        }
    }
}

/// Scripted-side simulation brackets the exact value from the correct side.
#[test]
fn simulation_brackets_exact_values() {
    let greedy = Strategy::greedy_lowest();
    for g in verifier::random_graphs(120, 2, 8, 0xB1A5) {
        for kind in [GameKind::Enclaveless, GameKind::Domination] {
            for starter in [Side::Maximizing, Side::Minimizing] {
                let exact = value(&g, kind, starter);
                let scripted_max = simulate(&g, kind, starter, Side::Maximizing, &greedy).unwrap();
                let scripted_min = simulate(&g, kind, starter, Side::Minimizing, &greedy).unwrap();
                assert!(scripted_max.value <= exact);
                assert!(scripted_min.value >= exact);
            }
        }
    }
}

/// Enclaveless game values of isolate-free graphs respect the degree bounds
/// for both starters.
#[test]
fn degree_bounds_hold_on_random_isolate_free_graphs() {
    for g in verifier::random_graphs(400, 2, 9, 0xDE6) {
        if !g.is_isolate_free() {
            continue;
        }
        let n = g.order();
        let d = g.degree_profile().max;
        for starter in [Side::Maximizing, Side::Minimizing] {
            let v = value(&g, GameKind::Enclaveless, starter);
            assert!(v * (d + 1) >= n, "{g:?}");
            assert!(v * (d + 1) <= d * n, "{g:?}");
        }
    }
}

/// Solving the corona of a path twice, from the position after one move,
/// matches replaying the full solution (mid-game solver consistency).
#[test]
fn solve_position_consistency() {
    let g = families::corona_path(3).unwrap();
    let opts = SolveOptions::default();
    for starter in [Side::Maximizing, Side::Minimizing] {
        let full = solve(&g, GameKind::Enclaveless, starter).unwrap();
        let first = full.principal_variation[0];
        let pos = Position::opening(&g, GameKind::Enclaveless, starter)
            .apply(first)
            .unwrap();
        let rest = enclaveless::game::solve_position(&pos, &opts).unwrap();
        assert_eq!(rest.total_moves, full.total_moves);
        assert_eq!(rest.principal_variation, full.principal_variation[1..]);
    }
}
