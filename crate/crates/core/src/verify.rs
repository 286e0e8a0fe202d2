//! Checkers for the structural bounds, the eigenvector inequalities, the
//! extremality statement, and the reference tables.
//!
//! Every check produces a [`VerificationReport`]. A `fail` verdict always
//! carries at least one witness; an `anomaly` is a mismatch between a
//! published reference value and our computation that does not contradict
//! the extremality statement — anomalies are first-class outcomes, reported
//! rather than reconciled.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{
    canonical_code, enumerate_classes, filter_by_max_degree, CanonicalCode, ClassRep,
};
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec, FamilyTag};
use crate::graph::{is_connected, neighbor_degree_sum, CycleGraph, GeneralGraph, Graph};
use crate::graph6;
use crate::matrix::signless_laplacian;
use crate::spectral::{qindex, quadratic_form_edges, DEFAULT_TOL};
use crate::tables::{ReferenceTable, REFERENCE_TABLES};

pub const THEOREM_GAP: f64 = 1e-6;
pub const BOUND_SLACK: f64 = 1e-9;
pub const TABLE_TOL: f64 = 1e-3;
pub const PERRON_MARGIN: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub values: BTreeMap<String, f64>,
    pub note: String,
}

impl Witness {
    pub fn new<G: Graph + ?Sized>(
        g: &G,
        values: impl IntoIterator<Item = (&'static str, f64)>,
        note: impl Into<String>,
    ) -> Self {
        Witness {
            graph6: graph6::encode(g).unwrap_or_default(),
            values: values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            note: note.into(),
        }
    }

    pub fn without_graph(
        values: impl IntoIterator<Item = (&'static str, f64)>,
        note: impl Into<String>,
    ) -> Self {
        Witness {
            graph6: String::new(),
            values: values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            note: note.into(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Anomaly,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub scope: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub tolerance: f64,
    pub duration_ms: u64,
    /// Named summary quantities (winner gap, margins, counts, ...).
    pub details: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

struct ReportBuilder {
    check: String,
    scope: String,
    tolerance: f64,
    started: Instant,
    failures: Vec<Witness>,
    anomalies: Vec<Witness>,
    details: BTreeMap<String, f64>,
}

impl ReportBuilder {
    fn new(check: impl Into<String>, scope: impl Into<String>, tolerance: f64) -> Self {
        ReportBuilder {
            check: check.into(),
            scope: scope.into(),
            tolerance,
            started: Instant::now(),
            failures: Vec::new(),
            anomalies: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    fn fail(&mut self, w: Witness) {
        self.failures.push(w);
    }

    fn anomaly(&mut self, w: Witness) {
        self.anomalies.push(w);
    }

    fn detail(&mut self, key: impl Into<String>, value: f64) {
        self.details.insert(key.into(), value);
    }

    fn finish(self) -> VerificationReport {
        let verdict = if !self.failures.is_empty() {
            Verdict::Fail
        } else if !self.anomalies.is_empty() {
            Verdict::Anomaly
        } else {
            Verdict::Pass
        };
        let mut witnesses = self.failures;
        witnesses.extend(self.anomalies);
        // order-independent merging: witnesses sorted by their graph6 key
        witnesses.sort_by(|a, b| a.graph6.cmp(&b.graph6).then(a.note.cmp(&b.note)));
        VerificationReport {
            check: self.check,
            scope: self.scope,
            verdict,
            witnesses,
            tolerance: self.tolerance,
            duration_ms: self.started.elapsed().as_millis() as u64,
            details: self.details,
        }
    }
}

fn require_maximal(g: &CycleGraph) -> Result<()> {
    if !g.is_maximal_outerplanar()? {
        return Err(Error::InvalidParameter(
            "checker requires a maximal outer-planar graph".into(),
        ));
    }
    Ok(())
}

/// At every vertex `u` of a maximal outer-planar graph,
/// `Σ_{v ~ u} d(v) <= n + 3 d(u) - 4`.
pub fn check_degree_sum_bound(g: &CycleGraph) -> Result<VerificationReport> {
    require_maximal(g)?;
    let mut rb = ReportBuilder::new(
        "degree-sum-bound",
        format!("one graph, n={}", g.n()),
        0.0,
    );
    for w in degree_sum_violations(g) {
        rb.fail(w);
    }
    Ok(rb.finish())
}

fn degree_sum_violations<G: Graph + ?Sized>(g: &G) -> Vec<Witness> {
    let n = g.order();
    let deg = g.degrees();
    let mut sums = vec![0usize; n];
    for (a, b) in g.edges() {
        sums[a] += deg[b];
        sums[b] += deg[a];
    }
    #[allow(clippy::needless_range_loop)]
    (0..n)
        .filter(|&u| sums[u] + 4 > n + 3 * deg[u])
        .map(|u| {
            Witness::new(
                g,
                [
                    ("vertex", u as f64),
                    ("neighbor_degree_sum", sums[u] as f64),
                    ("bound", (n + 3 * deg[u] - 4) as f64),
                ],
                "neighbor degree sum exceeds n + 3d(u) - 4",
            )
        })
        .collect()
}

/// `max_u d(u) + (Σ_{v~u} d(v)) / d(u)`, an upper bound for the Q-index of
/// any graph without isolated vertices.
pub fn merris_bound<G: Graph + ?Sized>(g: &G) -> Result<f64> {
    let deg = g.degrees();
    if deg.contains(&0) {
        return Err(Error::IsolatedVertex);
    }
    let mut best = f64::NEG_INFINITY;
    for (u, &d) in deg.iter().enumerate() {
        let s = neighbor_degree_sum(g, u)? as f64;
        best = best.max(d as f64 + s / d as f64);
    }
    Ok(best)
}

pub fn check_merris_bound<G: Graph + ?Sized>(g: &G) -> Result<VerificationReport> {
    let bound = merris_bound(g)?;
    let q = qindex(g, DEFAULT_TOL)?.q;
    let mut rb = ReportBuilder::new(
        "merris-bound",
        format!("one graph, n={}", g.order()),
        BOUND_SLACK,
    );
    rb.detail("q", q);
    rb.detail("bound", bound);
    if q > bound + BOUND_SLACK {
        rb.fail(Witness::new(
            g,
            [("q", q), ("bound", bound)],
            "Q-index exceeds the degree-based upper bound",
        ));
    }
    Ok(rb.finish())
}

/// `q(G) >= Δ + 1` for connected graphs with an edge; equality only at stars.
pub fn check_star_lower_bound<G: Graph + ?Sized>(g: &G) -> Result<VerificationReport> {
    if g.size() == 0 {
        return Err(Error::InvalidParameter(
            "lower bound requires at least one edge".into(),
        ));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let q = qindex(g, DEFAULT_TOL)?.q;
    let delta = g.max_degree() as f64;
    let mut rb = ReportBuilder::new(
        "star-lower-bound",
        format!("one graph, n={}", g.order()),
        BOUND_SLACK,
    );
    rb.detail("q", q);
    rb.detail("delta_plus_1", delta + 1.0);
    if q < delta + 1.0 - BOUND_SLACK {
        rb.fail(Witness::new(
            g,
            [("q", q), ("delta_plus_1", delta + 1.0)],
            "Q-index below Δ + 1",
        ));
    } else if (q - (delta + 1.0)).abs() < 1e-7 {
        // equality is only attained by the star
        if is_star(g) {
            rb.detail("equality_star_confirmed", 1.0);
        } else {
            rb.fail(Witness::new(
                g,
                [("q", q), ("delta_plus_1", delta + 1.0)],
                "equality attained by a non-star",
            ));
        }
    }
    Ok(rb.finish())
}

fn is_star<G: Graph + ?Sized>(g: &G) -> bool {
    let n = g.order();
    let mut deg = g.degrees();
    deg.sort_unstable();
    n >= 2 && deg[n - 1] == n - 1 && deg[..n - 1].iter().all(|&d| d == 1)
}

/// Over all enumerated classes of order `n` with Δ <= n-4, asserts
/// `q <= n`; also pins the endpoint identity
/// `max{5 + (n-4)/2, n} = n` used to close that bound for `n >= 6`.
pub fn check_small_delta_bound(n: usize) -> Result<VerificationReport> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "small-Δ bound needs n >= 6, got {n}"
        )));
    }
    let classes = enumerate_classes(n)?;
    let small = filter_by_max_degree(&classes, |d| d + 4 <= n);
    let mut rb = ReportBuilder::new(
        "small-delta-bound",
        format!("n={n}, {} classes with Δ <= n-4", small.len()),
        BOUND_SLACK,
    );
    let left = 5.0 + (n as f64 - 4.0) / 2.0;
    rb.detail("endpoint_left", left);
    rb.detail("endpoint_right", n as f64);
    if left.max(n as f64) != n as f64 {
        rb.fail(Witness::without_graph(
            [("endpoint_left", left), ("n", n as f64)],
            "endpoint identity max{5 + (n-4)/2, n} = n fails",
        ));
    }
    let qs: Vec<(usize, f64)> = small
        .par_iter()
        .enumerate()
        .map(|(i, c)| (i, qindex(c.rep.as_cycle_graph(), DEFAULT_TOL).map(|r| r.q)))
        .map(|(i, r)| (i, r.expect("enumerated graphs are connected")))
        .collect();
    rb.detail("checked_classes", small.len() as f64);
    for (i, q) in qs {
        if q > n as f64 + BOUND_SLACK {
            rb.fail(Witness::new(
                &*small[i].rep,
                [("q", q), ("n", n as f64)],
                "q exceeds n despite Δ <= n-4",
            ));
        }
    }
    Ok(rb.finish())
}

/// An edge rotation: one edge removed, one added; order and size are
/// preserved.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationSpec {
    pub remove: (usize, usize),
    pub add: (usize, usize),
}

pub fn rotate(g: &CycleGraph, spec: RotationSpec) -> Result<CycleGraph> {
    g.remove_edge(spec.remove.0, spec.remove.1)?
        .add_edge(spec.add.0, spec.add.1)
}

pub fn rotate_general(g: &GeneralGraph, spec: RotationSpec) -> Result<GeneralGraph> {
    g.remove_edge(spec.remove.0, spec.remove.1)?
        .add_edge(spec.add.0, spec.add.1)
}

/// `xᵀQ(F)x - xᵀQ(G)x` for the rotated graph `F`, via the assembled
/// matrices, asserted against the closed form
/// `(x_a + x_b)² - (x_c + x_d)²` (add = {a,b}, remove = {c,d}).
pub fn rayleigh_delta<G: Graph + ?Sized>(
    g: &G,
    spec: RotationSpec,
    x: &[f64],
) -> Result<f64> {
    let n = g.order();
    if x.len() != n {
        return Err(Error::InvalidParameter(format!(
            "vector length {} does not match order {n}",
            x.len()
        )));
    }
    let (c, d) = (spec.remove.0.min(spec.remove.1), spec.remove.0.max(spec.remove.1));
    let (a, b) = (spec.add.0.min(spec.add.1), spec.add.0.max(spec.add.1));
    if !g.has_edge(c, d) {
        return Err(Error::EdgeMissing(c, d));
    }
    if a == b || b >= n {
        return Err(Error::InvalidParameter("added edge is not simple".into()));
    }
    if g.has_edge(a, b) {
        return Err(Error::EdgeExists(a, b));
    }
    let rotated = GeneralGraph::new(
        n,
        g.edges()
            .into_iter()
            .filter(|&e| e != (c, d))
            .chain([(a, b)]),
    )?;
    let via_matrix =
        signless_laplacian(&rotated).quadratic_form(x) - signless_laplacian(g).quadratic_form(x);
    let closed = (x[a] + x[b]).powi(2) - (x[c] + x[d]).powi(2);
    let scale = via_matrix.abs().max(1.0);
    assert!(
        (via_matrix - closed).abs() <= 1e-12 * scale,
        "rotation delta routes disagree: {via_matrix} vs {closed}"
    );
    // cross-check the edge-sum route as well
    debug_assert!(
        (quadratic_form_edges(&rotated, x) - quadratic_form_edges(g, x) - closed).abs()
            <= 1e-12 * scale
    );
    Ok(via_matrix)
}

struct Inequality {
    name: &'static str,
    lhs: f64,
    rhs: f64,
    min_n: usize,
}

/// Entrywise Perron-eigenvector inequalities for a parameterized family
/// instance, each asserted with margin above [`PERRON_MARGIN`] whenever the
/// order reaches the inequality's threshold.
///
/// The D3 family has no dedicated set; it inherits the near-fan pair by
/// analogy and the report says so.
pub fn check_perron_inequalities(spec: &FamilySpec) -> Result<VerificationReport> {
    if matches!(spec.tag, FamilyTag::Fan | FamilyTag::Star) {
        return Err(Error::InvalidParameter(format!(
            "family {} has no defined inequality set",
            spec.tag
        )));
    }
    let k = spec
        .k
        .ok_or_else(|| Error::InvalidParameter("inequality check requires k".into()))?;
    let g = match spec.build()? {
        families::FamilyGraph::Cycle(g) => g,
        families::FamilyGraph::General(_) => unreachable!("remaining families are cycle-anchored"),
    };
    let n = spec.n;
    let res = qindex(&g, DEFAULT_TOL)?;
    let x = &res.vector;
    let last = n - 1;

    let by_analogy = spec.tag == FamilyTag::D3;
    let ineqs: Vec<Inequality> = match spec.tag {
        FamilyTag::NearFan | FamilyTag::D3 => vec![
            Inequality { name: "x_k > x_0", lhs: x[k], rhs: x[0], min_n: 5 },
            Inequality {
                name: "x_k + x_0 > x_1 + x_{n-1}",
                lhs: x[k] + x[0],
                rhs: x[1] + x[last],
                min_n: 10,
            },
        ],
        FamilyTag::D1 => vec![
            Inequality { name: "x_1 > x_0", lhs: x[1], rhs: x[0], min_n: 7 },
            Inequality { name: "x_2 + x_0 > x_1", lhs: x[2] + x[0], rhs: x[1], min_n: 7 },
            Inequality { name: "x_k > x_0", lhs: x[k], rhs: x[0], min_n: 7 },
            Inequality { name: "x_k > x_1", lhs: x[k], rhs: x[1], min_n: 7 },
            Inequality { name: "x_k > x_2", lhs: x[k], rhs: x[2], min_n: 8 },
            Inequality { name: "x_k > x_{n-1}", lhs: x[k], rhs: x[last], min_n: 10 },
            Inequality {
                name: "x_k + x_1 > x_2 + x_{n-1}",
                lhs: x[k] + x[1],
                rhs: x[2] + x[last],
                min_n: 12,
            },
        ],
        FamilyTag::D2 => vec![
            Inequality { name: "x_k > x_0", lhs: x[k], rhs: x[0], min_n: 8 },
            Inequality { name: "x_k > x_2", lhs: x[k], rhs: x[2], min_n: 8 },
            Inequality { name: "x_k > x_1", lhs: x[k], rhs: x[1], min_n: 10 },
            Inequality { name: "x_k > x_{n-1}", lhs: x[k], rhs: x[last], min_n: 8 },
            Inequality {
                name: "x_k + x_0 > x_1 + x_{n-1}",
                lhs: x[k] + x[0],
                rhs: x[1] + x[last],
                min_n: 13,
            },
        ],
        FamilyTag::Fan | FamilyTag::Star => unreachable!("rejected up front"),
    };

    let scope = if by_analogy {
        format!("{} (near-fan set applied by analogy)", spec.scope_string())
    } else {
        spec.scope_string()
    };
    let mut rb = ReportBuilder::new("perron-inequalities", scope, PERRON_MARGIN);
    if by_analogy {
        rb.detail("derived_by_analogy", 1.0);
    }
    rb.detail("q", res.q);
    for ineq in ineqs {
        if n < ineq.min_n {
            continue;
        }
        let margin = ineq.lhs - ineq.rhs;
        rb.detail(format!("margin[{}]", ineq.name), margin);
        if margin <= PERRON_MARGIN {
            rb.fail(Witness::new(
                &g,
                [("margin", margin), ("q", res.q)],
                format!("{} fails (margin {margin:e})", ineq.name),
            ));
        }
    }
    Ok(rb.finish())
}

/// Sweeps [`check_perron_inequalities`] over the families at their proved
/// thresholds:
/// near-fan for `10 <= n <= n_max`, D1 for `12 <= n <= n_max`, D2 for
/// `13 <= n <= n_max`, every valid `k`.
pub fn run_perron_sweep(n_max: usize) -> Result<VerificationReport> {
    let mut specs = Vec::new();
    for n in 10..=n_max {
        for k in families::near_fan_ks(n) {
            specs.push(FamilySpec { tag: FamilyTag::NearFan, n, k: Some(k), j: None });
        }
    }
    for n in 12..=n_max {
        for k in families::d1_ks(n) {
            specs.push(FamilySpec { tag: FamilyTag::D1, n, k: Some(k), j: None });
        }
    }
    for n in 13..=n_max {
        for k in families::d2_ks(n) {
            specs.push(FamilySpec { tag: FamilyTag::D2, n, k: Some(k), j: None });
        }
    }
    let mut rb = ReportBuilder::new(
        "perron",
        format!(
            "near_fan n=10..{n_max}, d1 n=12..{n_max}, d2 n=13..{n_max}, all k ({} instances)",
            specs.len()
        ),
        PERRON_MARGIN,
    );
    let reports: Vec<VerificationReport> = specs
        .par_iter()
        .map(|s| check_perron_inequalities(s).expect("family parameters are in range"))
        .collect();
    let mut min_margin = f64::INFINITY;
    for (spec, rep) in specs.iter().zip(&reports) {
        for (key, &value) in &rep.details {
            if key.starts_with("margin[") {
                min_margin = min_margin.min(value);
            }
        }
        if rep.verdict == Verdict::Fail {
            for w in &rep.witnesses {
                let mut w = w.clone();
                w.note = format!("{}: {}", spec.scope_string(), w.note);
                rb.fail(w);
            }
        }
    }
    rb.detail("instances", reports.len() as f64);
    rb.detail("min_margin", min_margin);
    Ok(rb.finish())
}

/// Exhaustive extremality check at one order: among all isomorphism classes,
/// exactly one attains the maximum Q-index, it is the fan, and the runner-up
/// trails by more than [`THEOREM_GAP`].
pub fn check_theorem(n: usize) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "theorem check needs n >= 3, got {n}"
        )));
    }
    let classes = enumerate_classes(n)?;
    let qs: Vec<f64> = classes
        .par_iter()
        .map(|c| {
            qindex(c.rep.as_cycle_graph(), DEFAULT_TOL)
                .expect("triangulations are connected")
                .q
        })
        .collect();
    let mut rb = ReportBuilder::new(
        "theorem",
        format!("n={n}, {} classes", classes.len()),
        THEOREM_GAP,
    );
    rb.detail("class_count", classes.len() as f64);

    let winner = (0..classes.len())
        .max_by(|&i, &j| qs[i].partial_cmp(&qs[j]).unwrap())
        .expect("at least one class");
    rb.detail("q_max", qs[winner]);

    let fan_code = canonical_code(&families::fan(n)?);
    if classes[winner].code != fan_code {
        rb.fail(Witness::new(
            &*classes[winner].rep,
            [("q", qs[winner])],
            "maximizer is not the fan",
        ));
    }
    if classes.len() > 1 {
        let runner = (0..classes.len())
            .filter(|&i| i != winner)
            .max_by(|&i, &j| qs[i].partial_cmp(&qs[j]).unwrap())
            .unwrap();
        let gap = qs[winner] - qs[runner];
        rb.detail("runner_up_q", qs[runner]);
        rb.detail("runner_up_gap", gap);
        if gap <= THEOREM_GAP {
            rb.fail(Witness::new(
                &*classes[runner].rep,
                [("q", qs[runner]), ("gap", gap)],
                "runner-up within the uniqueness gap",
            ));
        }
    }
    Ok(rb.finish())
}

/// One CSV row of the table-reproduction artifact.
#[derive(Clone, Debug, Serialize)]
pub struct TableCsvRow {
    pub n: usize,
    pub delta_class: usize,
    pub family: String,
    pub q_computed: Option<f64>,
    pub q_published: Option<f64>,
    pub matched: bool,
}

pub struct TablesOutcome {
    pub reports: Vec<VerificationReport>,
    pub csv: Vec<TableCsvRow>,
}

impl TablesOutcome {
    pub fn all_passed_or_anomalous(&self) -> bool {
        self.reports.iter().all(|r| r.verdict != Verdict::Fail)
    }
}

fn family_codes(tag: FamilyTag, n: usize) -> HashSet<CanonicalCode> {
    let mut codes = HashSet::new();
    match tag {
        FamilyTag::D1 => {
            for k in families::d1_ks(n) {
                if let Ok(g) = families::d1(n, k) {
                    codes.insert(canonical_code(&g));
                }
            }
        }
        FamilyTag::D2 => {
            for k in families::d2_ks(n) {
                if let Ok(g) = families::d2(n, k) {
                    codes.insert(canonical_code(&g));
                }
            }
        }
        FamilyTag::D3 => {
            for (j, k) in families::d3_params(n) {
                if let Ok(g) = families::d3(n, j, k) {
                    codes.insert(canonical_code(&g));
                }
            }
        }
        _ => {}
    }
    codes
}

/// Greedy nearest-first assignment between published and computed values,
/// within `tol`. Returns (pairs, unmatched published, unmatched computed).
fn match_multisets(
    published: &[f64],
    computed: &[f64],
    tol: f64,
) -> (Vec<(usize, usize)>, Vec<usize>, Vec<usize>) {
    let mut candidates = Vec::new();
    for (i, p) in published.iter().enumerate() {
        for (j, c) in computed.iter().enumerate() {
            let d = (p - c).abs();
            if d <= tol {
                candidates.push((d, i, j));
            }
        }
    }
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut used_p = vec![false; published.len()];
    let mut used_c = vec![false; computed.len()];
    let mut pairs = Vec::new();
    for (_, i, j) in candidates {
        if !used_p[i] && !used_c[j] {
            used_p[i] = true;
            used_c[j] = true;
            pairs.push((i, j));
        }
    }
    let up = (0..published.len()).filter(|&i| !used_p[i]).collect();
    let uc = (0..computed.len()).filter(|&j| !used_c[j]).collect();
    (pairs, up, uc)
}

/// Recomputes every reference-table cell from exhaustive enumeration and
/// matches value multisets within [`TABLE_TOL`].
///
/// A published value with no computed counterpart is an anomaly (with the
/// `Δ + 1` lower-bound violation called out when the value is impossibly
/// small); a computed class with no published counterpart is an anomaly
/// provided its Q-index stays below the fan's, and a failure otherwise.
pub fn reproduce_tables() -> Result<TablesOutcome> {
    let mut class_cache: BTreeMap<usize, Vec<ClassRep>> = BTreeMap::new();
    let mut fan_cache: BTreeMap<usize, f64> = BTreeMap::new();
    let mut reports = Vec::new();
    let mut csv = Vec::new();
    for table in REFERENCE_TABLES {
        let (report, rows) = reproduce_one_table(table, &mut class_cache, &mut fan_cache)?;
        reports.push(report);
        csv.extend(rows);
    }
    Ok(TablesOutcome { reports, csv })
}

fn reproduce_one_table(
    table: &ReferenceTable,
    class_cache: &mut BTreeMap<usize, Vec<ClassRep>>,
    fan_cache: &mut BTreeMap<usize, f64>,
) -> Result<(VerificationReport, Vec<TableCsvRow>)> {
    let mut rb = ReportBuilder::new(
        table.id,
        format!(
            "family={}, Δ=n-{}, n={}..{}",
            table.family,
            table.delta_offset,
            table.rows.first().map(|r| r.0).unwrap_or(0),
            table.rows.last().map(|r| r.0).unwrap_or(0),
        ),
        TABLE_TOL,
    );
    let mut csv = Vec::new();
    let mut matched_count = 0usize;

    for &(n, published) in table.rows {
        let delta = n - table.delta_offset;
        if let std::collections::btree_map::Entry::Vacant(e) = class_cache.entry(n) {
            e.insert(enumerate_classes(n)?);
        }
        let classes = &class_cache[&n];
        let mut members = filter_by_max_degree(classes, |d| d == delta);
        if table.delta_offset == 3 {
            // tables 2-4 are additionally partitioned by family membership
            let codes = family_codes(table.family, n);
            members.retain(|c| codes.contains(&c.code));
        }
        let qs: Vec<f64> = members
            .par_iter()
            .map(|c| {
                qindex(c.rep.as_cycle_graph(), DEFAULT_TOL)
                    .expect("triangulations are connected")
                    .q
            })
            .collect();
        let q_fan = *fan_cache
            .entry(n)
            .or_insert_with(|| qindex(&families::fan(n).unwrap(), DEFAULT_TOL).unwrap().q);

        let (mut pairs, unmatched_pub, unmatched_comp) = match_multisets(published, &qs, TABLE_TOL);
        pairs.sort_unstable_by_key(|&(i, _)| i);
        matched_count += pairs.len();
        for (i, j) in pairs {
            csv.push(TableCsvRow {
                n,
                delta_class: delta,
                family: table.family.to_string(),
                q_computed: Some(qs[j]),
                q_published: Some(published[i]),
                matched: true,
            });
        }
        for i in unmatched_pub {
            let v = published[i];
            let lower = (delta + 1) as f64;
            let note = if v < lower - BOUND_SLACK {
                format!(
                    "published value {v} violates the lower bound q >= Δ+1 = {lower} for Δ={delta}, n={n}; it matches no enumerated class"
                )
            } else {
                format!("published value {v} matches no enumerated Δ={delta} class of order {n}")
            };
            rb.anomaly(Witness::without_graph(
                [("q_published", v), ("delta_plus_1", lower)],
                note,
            ));
            csv.push(TableCsvRow {
                n,
                delta_class: delta,
                family: table.family.to_string(),
                q_computed: None,
                q_published: Some(v),
                matched: false,
            });
        }
        for j in unmatched_comp {
            let q = qs[j];
            if q < q_fan - THEOREM_GAP {
                rb.anomaly(Witness::new(
                    &*members[j].rep,
                    [("q_computed", q), ("q_fan", q_fan)],
                    format!("enumerated class of order {n} has no published counterpart"),
                ));
            } else {
                rb.fail(Witness::new(
                    &*members[j].rep,
                    [("q_computed", q), ("q_fan", q_fan)],
                    "unlisted class reaches the fan's Q-index",
                ));
            }
            csv.push(TableCsvRow {
                n,
                delta_class: delta,
                family: table.family.to_string(),
                q_computed: Some(q),
                q_published: None,
                matched: false,
            });
        }
    }
    rb.detail("matched_values", matched_count as f64);
    Ok((rb.finish(), csv))
}

/// Aggregated bound checks over every enumerated class with `3 <= n <= n_max`:
/// the neighbor degree-sum bound, the degree-based upper bound, the `Δ + 1`
/// lower bound (strict except at stars, which never occur here), and the
/// `q <= n` bound for `Δ <= n-4`.
pub fn run_lemma_sweep(n_max: usize) -> Result<Vec<VerificationReport>> {
    let mut degree_sum = ReportBuilder::new(
        "degree-sum-bound",
        format!("all classes, n=3..{n_max}"),
        0.0,
    );
    let mut merris = ReportBuilder::new(
        "merris-bound",
        format!("all classes, n=3..{n_max}"),
        BOUND_SLACK,
    );
    let mut star_lower = ReportBuilder::new(
        "star-lower-bound",
        format!("all classes, n=3..{n_max} (strict: none are stars)"),
        BOUND_SLACK,
    );
    let mut small_delta = ReportBuilder::new(
        "small-delta-bound",
        format!("all classes with Δ <= n-4, n=6..{n_max}"),
        BOUND_SLACK,
    );

    let mut total = 0usize;
    for n in 3..=n_max {
        let classes = enumerate_classes(n)?;
        total += classes.len();
        let qs: Vec<f64> = classes
            .par_iter()
            .map(|c| {
                qindex(c.rep.as_cycle_graph(), DEFAULT_TOL)
                    .expect("triangulations are connected")
                    .q
            })
            .collect();
        for (class, &q) in classes.iter().zip(&qs) {
            let g = class.rep.as_cycle_graph();
            for w in degree_sum_violations(g) {
                degree_sum.fail(w);
            }
            let bound = merris_bound(g)?;
            if q > bound + BOUND_SLACK {
                merris.fail(Witness::new(
                    g,
                    [("q", q), ("bound", bound)],
                    "Q-index exceeds the degree-based upper bound",
                ));
            }
            let delta = g.max_degree();
            // strict: no maximal outer-planar graph is a star
            if q <= (delta + 1) as f64 + 1e-7 {
                star_lower.fail(Witness::new(
                    g,
                    [("q", q), ("delta_plus_1", (delta + 1) as f64)],
                    "Δ + 1 lower bound not strictly exceeded",
                ));
            }
            if n >= 6 && delta + 4 <= n && q > n as f64 + BOUND_SLACK {
                small_delta.fail(Witness::new(
                    g,
                    [("q", q), ("n", n as f64)],
                    "q exceeds n despite Δ <= n-4",
                ));
            }
        }
    }
    for rb in [&mut degree_sum, &mut merris, &mut star_lower, &mut small_delta] {
        rb.detail("classes_checked", total as f64);
    }
    Ok(vec![
        degree_sum.finish(),
        merris.finish(),
        star_lower.finish(),
        small_delta.finish(),
    ])
}
