//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qmax::enumeration::{
    enumerate_classes, enumerate_labeled, flip_search_max_q,
    random_triangulation,
};
use qmax::families::fan;
use qmax::graph::{CycleGraph, Graph};
use qmax::spectral::{full_spectrum, qindex, DEFAULT_TOL};
use qmax::tables::FAN_REFERENCE;
use qmax::verify::{
    rayleigh_delta, reproduce_tables, run_lemma_sweep, run_perron_sweep, check_theorem,
    RotationSpec, Verdict,
};

fn q_of(g: &CycleGraph) -> f64 {
    qindex(g, DEFAULT_TOL).unwrap().q
}

#[test]
fn criterion_01_fan_qindex_reproduction() {
    let start = Instant::now();
    for (n, expected) in FAN_REFERENCE {
        let q = q_of(&fan(n).unwrap());
        assert!(
            (q - expected).abs() < 1e-3,
            "fan({n}): computed {q}, reference {expected}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 PASS: fan Q-index matches all 7 reference values within 1e-3 ({elapsed:?})");
}

#[test]
fn criterion_02_table_1_delta_n_minus_2() {
    let start = Instant::now();
    let outcome = reproduce_tables().unwrap();
    let t1 = &outcome.reports[0];
    assert_eq!(t1.check, "table-1");
    assert_ne!(t1.verdict, Verdict::Fail);

    let rows: Vec<_> = outcome.csv.iter().filter(|r| r.family == "near_fan").collect();
    // n = 7, 8, 9: every published value matched, same cardinality (no
    // computed class without a published counterpart)
    for (n, expected_count) in [(7usize, 2usize), (8, 3), (9, 3)] {
        let cell: Vec<_> = rows.iter().filter(|r| r.n == n).collect();
        assert_eq!(cell.len(), expected_count, "n={n} cardinality");
        assert!(cell.iter().all(|r| r.matched), "n={n} has unmatched rows");
    }
    // n = 6: 6.8284 is matched; the second class is an anomaly below the fan
    let matched6: Vec<_> = rows.iter().filter(|r| r.n == 6 && r.matched).collect();
    assert_eq!(matched6.len(), 1);
    assert!((matched6[0].q_published.unwrap() - 6.8284).abs() < 1e-9);
    let extra6: Vec<_> = rows
        .iter()
        .filter(|r| r.n == 6 && !r.matched && r.q_published.is_none())
        .collect();
    assert_eq!(extra6.len(), 1, "expected exactly one extra n=6 class");
    assert!(extra6[0].q_computed.unwrap() < 6.9576);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 2 PASS: Δ=n-2 table reproduced exactly for n=7..9; n=6 extra class q={:.4} < 6.9576 reported as anomaly ({elapsed:?})",
        extra6[0].q_computed.unwrap()
    );
}

#[test]
fn criterion_03_tables_2_to_4_delta_n_minus_3() {
    let start = Instant::now();
    let outcome = reproduce_tables().unwrap();
    for report in &outcome.reports[1..] {
        assert_ne!(report.verdict, Verdict::Fail, "{}: {:?}", report.check, report.witnesses);
    }

    // Unmatched published values must be exactly the three documented
    // misprints; everything else in the Δ=n-3 tables reproduces.
    let unmatched_published: BTreeSet<(String, usize, String)> = outcome
        .csv
        .iter()
        .filter(|r| r.family != "near_fan" && r.q_computed.is_none())
        .map(|r| (r.family.clone(), r.n, format!("{:.4}", r.q_published.unwrap())))
        .collect();
    let expected: BTreeSet<(String, usize, String)> = [
        ("d1".to_string(), 8usize, "7.4035".to_string()),
        ("d2".to_string(), 8, "7.4035".to_string()),
        ("d2".to_string(), 10, "7.4621".to_string()),
    ]
    .into_iter()
    .collect();
    assert_eq!(unmatched_published, expected);

    // 7.4621 must be flagged specifically as inconsistent with the Δ+1
    // lower bound (q >= 8 for Δ=7 at n=10)
    let t3 = &outcome.reports[2];
    assert!(
        t3.witnesses.iter().any(|w| {
            w.values.get("q_published") == Some(&7.4621)
                && w.values.get("delta_plus_1") == Some(&8.0)
                && w.note.contains("violates the lower bound")
        }),
        "7.4621 not flagged against the Δ+1 bound: {:?}",
        t3.witnesses
    );

    // the computed classes those misprints displaced are reported as
    // anomalies, each below the fan
    let unmatched_computed: BTreeSet<(String, usize, String)> = outcome
        .csv
        .iter()
        .filter(|r| r.family != "near_fan" && r.q_published.is_none())
        .map(|r| (r.family.clone(), r.n, format!("{:.4}", r.q_computed.unwrap())))
        .collect();
    let expected_computed: BTreeSet<(String, usize, String)> = [
        ("d1".to_string(), 8usize, "7.7664".to_string()),
        ("d2".to_string(), 8, "7.7873".to_string()),
        ("d2".to_string(), 10, "9.0774".to_string()),
    ]
    .into_iter()
    .collect();
    assert_eq!(unmatched_computed, expected_computed);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 3 PASS: Δ=n-3 tables reproduced for n=7..12 except the 3 documented anomalies (7.4035 ×2, 7.4621 flagged vs Δ+1=8) ({elapsed:?})"
    );
}

#[test]
fn criterion_04_exhaustive_theorem_to_n13() {
    let start = Instant::now();
    for n in 3..=13 {
        let report = check_theorem(n).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::Pass,
            "n={n}: {:?}",
            report.witnesses
        );
        if n >= 4 {
            let gap = report.details.get("runner_up_gap").copied().unwrap_or(f64::INFINITY);
            assert!(gap > 1e-6, "n={n}: runner-up gap {gap}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 4 PASS: fan is the unique Q-index maximizer for every n in 3..13, gaps > 1e-6 ({elapsed:?})");
}

#[test]
fn criterion_05_lemma_suite_zero_violations() {
    let start = Instant::now();
    let reports = run_lemma_sweep(12).unwrap();
    assert_eq!(reports.len(), 4);
    for report in &reports {
        assert_eq!(report.verdict, Verdict::Pass, "{}: {:?}", report.check, report.witnesses);
        assert!(report.witnesses.is_empty());
    }
    let elapsed = start.elapsed();
    println!("criterion 5 PASS: degree-sum, Merris-type, Δ+1, and small-Δ bounds hold on all 1092 classes with n <= 12 ({elapsed:?})");
}

#[test]
fn criterion_06_perron_inequality_thresholds() {
    let start = Instant::now();
    let report = run_perron_sweep(40).unwrap();
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.witnesses);
    let min_margin = report.details["min_margin"];
    assert!(min_margin > 1e-9, "min margin {min_margin}");
    let elapsed = start.elapsed();
    println!(
        "criterion 6 PASS: eigenvector inequalities hold for near_fan n=10..40, d1 n=12..40, d2 n=13..40, all k; min margin {min_margin:.3e} ({elapsed:?})"
    );
}

#[test]
fn criterion_07_solver_cross_validation() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 3..=10 {
        for class in enumerate_classes(n).unwrap() {
            let g = class.rep.as_cycle_graph();
            let power = qindex(g, DEFAULT_TOL).unwrap().q;
            let jacobi = full_spectrum(g)[0];
            assert!(
                (power - jacobi).abs() < 1e-8,
                "n={n}: power {power} vs jacobi {jacobi}"
            );
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let t = random_triangulation(14, &mut rng).unwrap();
        let power = qindex(t.as_cycle_graph(), DEFAULT_TOL).unwrap().q;
        let jacobi = full_spectrum(t.as_cycle_graph())[0];
        assert!((power - jacobi).abs() < 1e-8);
        checked += 1;
    }
    let elapsed = start.elapsed();
    println!("criterion 7 PASS: power iteration and Jacobi agree within 1e-8 on {checked} graphs ({elapsed:?})");
}

#[test]
fn criterion_08_rayleigh_delta_and_edge_monotonicity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    // 500 random (graph, rotation, vector) triples: matrix form vs closed
    // form to 1e-12
    for _ in 0..500 {
        let n = rng.gen_range(6..=12);
        let t = random_triangulation(n, &mut rng).unwrap();
        let g = t.as_cycle_graph();
        let edges = g.edges();
        let remove = edges[rng.gen_range(0..edges.len())];
        let add = loop {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && !g.has_edge(a, b) {
                break (a, b);
            }
        };
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        let spec = RotationSpec { remove, add };
        let delta = rayleigh_delta(g, spec, &x).unwrap();
        let closed = (x[add.0] + x[add.1]).powi(2) - (x[remove.0] + x[remove.1]).powi(2);
        assert!(
            (delta - closed).abs() <= 1e-12,
            "matrix {delta} vs closed {closed}"
        );
    }

    // 100 random (G, e) pairs: adding an edge strictly raises the Q-index
    for _ in 0..100 {
        let n = rng.gen_range(6..=12);
        let t = random_triangulation(n, &mut rng).unwrap();
        let g = t.as_cycle_graph();
        let add = loop {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b && !g.has_edge(a, b) {
                break (a, b);
            }
        };
        let before = qindex(g, DEFAULT_TOL).unwrap().q;
        let bigger = g.add_edge(add.0, add.1).unwrap();
        let after = qindex(&bigger, DEFAULT_TOL).unwrap().q;
        assert!(
            after > before + 1e-9,
            "q did not strictly increase: {before} -> {after}"
        );
    }

    let elapsed = start.elapsed();
    println!("criterion 8 PASS: rotation identity exact to 1e-12 on 500 triples; q(G+e) > q(G) with margin > 1e-9 on 100 pairs ({elapsed:?})");
}

/// Independent counting oracle: the additive recurrence
/// `C_m = Σ_{i<m} C_i · C_{m-1-i}` (the library uses the multiplicative
/// formula, a different route).
fn catalan_recurrence(up_to: usize) -> Vec<u64> {
    let mut c = vec![0u64; up_to + 1];
    c[0] = 1;
    for m in 1..=up_to {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c
}

/// Independent isomorphism oracle: plain backtracking over vertex maps with
/// degree pruning, no dihedral reasoning.
fn brute_force_isomorphic(g: &CycleGraph, h: &CycleGraph) -> bool {
    let n = g.n();
    if h.n() != n {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    let (deg_g, deg_h) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let adj = |gr: &CycleGraph, u: usize, v: usize| gr.has_edge(u, v);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        u: usize,
        n: usize,
        g: &CycleGraph,
        h: &CycleGraph,
        deg_g: &[usize],
        deg_h: &[usize],
        map: &mut [usize],
        used: &mut [bool],
        adj: &dyn Fn(&CycleGraph, usize, usize) -> bool,
    ) -> bool {
        if u == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || deg_h[cand] != deg_g[u] {
                continue;
            }
            if (0..u).all(|w| adj(g, u, w) == adj(h, cand, map[w])) {
                map[u] = cand;
                used[cand] = true;
                if extend(u + 1, n, g, h, deg_g, deg_h, map, used, adj) {
                    return true;
                }
                used[cand] = false;
                map[u] = usize::MAX;
            }
        }
        false
    }
    extend(0, n, g, h, &deg_g, &deg_h, &mut map, &mut used, &adj)
}

#[test]
fn criterion_09_counting_oracles() {
    let start = Instant::now();
    let cat = catalan_recurrence(12);
    for n in 3..=14 {
        let count = enumerate_labeled(n).unwrap().count() as u64;
        assert_eq!(count, cat[n - 2], "labeled count at n={n}");
    }
    assert_eq!(cat[8], 1430);
    assert_eq!(cat[12], 208012);

    // class counts vs quadratic pairwise-isomorphism dedup
    for n in 3..=9 {
        let fast = enumerate_classes(n).unwrap().len();
        let mut reps: Vec<CycleGraph> = Vec::new();
        for tri in enumerate_labeled(n).unwrap() {
            let g = tri.into_cycle_graph();
            if !reps.iter().any(|r| brute_force_isomorphic(r, &g)) {
                reps.push(g);
            }
        }
        assert_eq!(fast, reps.len(), "class count at n={n}");
    }
    let elapsed = start.elapsed();
    println!("criterion 9 PASS: labeled counts equal the Catalan recurrence for n <= 14; class counts equal brute-force dedup for n <= 9 ({elapsed:?})");
}

#[test]
fn criterion_10_flip_search_consistency() {
    let start = Instant::now();
    for n in [14usize, 16, 18, 20] {
        let q_fan = q_of(&fan(n).unwrap());
        let first = flip_search_max_q(n, 20, 1000, 1).unwrap();
        for r in &first.restarts {
            assert!(
                r.final_q <= q_fan + 1e-9,
                "n={n}: search found q={} above the fan {q_fan}",
                r.final_q
            );
        }
        assert!(first.best_q <= q_fan + 1e-9);

        // identical seed, identical trajectory
        let second = flip_search_max_q(n, 20, 1000, 1).unwrap();
        assert_eq!(first.best_q.to_bits(), second.best_q.to_bits());
        assert_eq!(
            qmax::graph6::encode(first.best.as_cycle_graph()).unwrap(),
            qmax::graph6::encode(second.best.as_cycle_graph()).unwrap()
        );
        assert_eq!(first.restarts.len(), second.restarts.len());
        for (a, b) in first.restarts.iter().zip(&second.restarts) {
            assert_eq!(a.initial_graph6, b.initial_graph6);
            assert_eq!(a.steps, b.steps);
            assert_eq!(a.final_q.to_bits(), b.final_q.to_bits());
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 10 PASS: 20 seeded restarts at n=14,16,18,20 never exceed the fan; trajectories replay bit-identically ({elapsed:?})");
}
