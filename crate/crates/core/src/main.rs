use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qmax::enumeration::{
    enumerate_classes, enumerate_labeled, filter_by_max_degree, flip_search_max_q,
};
use qmax::families::{FamilySpec, FamilyTag};
use qmax::graph::Graph;
use qmax::manifest::RunManifest;
use qmax::spectral::{qindex, DEFAULT_TOL};
use qmax::verify::{
    check_theorem, reproduce_tables, run_lemma_sweep, run_perron_sweep, TableCsvRow, Verdict,
    VerificationReport, BOUND_SLACK, PERRON_MARGIN, TABLE_TOL, THEOREM_GAP,
};
use qmax::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qmax",
    version,
    about = "Maximal outer-planar graph enumeration and Q-index verification"
)]
struct Cli {
    /// Worker threads for enumeration and sweeps (falls back to QMAX_THREADS,
    /// then to all cores). Output bytes never depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
enum StreamFormat {
    #[default]
    Graph6,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
enum VerifyFormat {
    #[default]
    Text,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckId {
    Theorem,
    Tables,
    Lemmas,
    Perron,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Fan,
    #[value(alias = "near_fan")]
    NearFan,
    D1,
    D2,
    D3,
    Star,
}

impl From<FamilyArg> for FamilyTag {
    fn from(f: FamilyArg) -> FamilyTag {
        match f {
            FamilyArg::Fan => FamilyTag::Fan,
            FamilyArg::NearFan => FamilyTag::NearFan,
            FamilyArg::D1 => FamilyTag::D1,
            FamilyArg::D2 => FamilyTag::D2,
            FamilyArg::D3 => FamilyTag::D3,
            FamilyArg::Star => FamilyTag::Star,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Stream maximal outer-planar graphs of order n (graph6 or JSON lines)
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Emit one representative per isomorphism class
        #[arg(long)]
        dedup: bool,
        /// Keep only graphs with this exact maximum degree
        #[arg(long)]
        delta: Option<usize>,
        /// Keep only graphs with at least this maximum degree
        #[arg(long)]
        min_delta: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: StreamFormat,
        /// Include the Q-index in JSON records
        #[arg(long)]
        with_q: bool,
    },
    /// Run a verification suite and report pass/fail/anomaly
    Verify {
        #[arg(long, value_enum)]
        check: CheckId,
        /// Largest order to sweep (defaults: theorem 13, lemmas 12, perron 40)
        #[arg(long)]
        n_max: Option<usize>,
        /// Write the JSON report (with embedded run manifest) here
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: VerifyFormat,
        /// Write the CSV artifact here instead of stdout (tables check only)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 0 even when anomalies are present (always on for tables)
        #[arg(long, conflicts_with = "deny_anomalies")]
        allow_anomalies: bool,
        /// Exit 1 on anomalies even for tables
        #[arg(long)]
        deny_anomalies: bool,
    },
    /// Emit one named family instance
    Families {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: StreamFormat,
    },
    /// Q-index of a graph6 line or of a family instance
    Qindex {
        /// graph6 line to decode
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Also print the Perron eigenvector, one coordinate per line
        #[arg(long)]
        emit_vector: bool,
    },
    /// Seeded steepest-ascent flip search for high-Q triangulations
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        /// Maximum improving flips per restart
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("QMAX_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

#[derive(Serialize)]
struct GraphRecord {
    graph6: String,
    n: usize,
    max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<f64>,
}

fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Enumerate {
            n,
            dedup,
            delta,
            min_delta,
            format,
            with_q,
        } => cmd_enumerate(n, dedup, delta, min_delta, format, with_q),
        Command::Verify {
            check,
            n_max,
            json,
            format,
            out,
            allow_anomalies,
            deny_anomalies,
        } => cmd_verify(check, n_max, json, format, out, allow_anomalies, deny_anomalies),
        Command::Families {
            family,
            n,
            k,
            j,
            format,
        } => cmd_families(family, n, k, j, format),
        Command::Qindex {
            graph6,
            family,
            n,
            k,
            j,
            tol,
            emit_vector,
        } => cmd_qindex(graph6, family, n, k, j, tol, emit_vector),
        Command::Search {
            n,
            restarts,
            budget,
            seed,
        } => cmd_search(n, restarts, budget, seed),
    }
}

/// Prints one output line; a closed pipe (e.g. `| head`) ends the stream
/// quietly instead of failing the run.
fn emit_line(line: &str) -> Result<bool> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{line}") {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(false),
        Err(e) => Err(io_err(e)),
    }
}

fn emit_graph<G: Graph + ?Sized>(g: &G, format: StreamFormat, with_q: bool) -> Result<bool> {
    let line = match format {
        StreamFormat::Graph6 => qmax::graph6::encode(g)?,
        StreamFormat::Json => {
            let record = GraphRecord {
                graph6: qmax::graph6::encode(g)?,
                n: g.order(),
                max_degree: g.max_degree(),
                q: if with_q {
                    Some(qindex(g, DEFAULT_TOL)?.q)
                } else {
                    None
                },
            };
            serde_json::to_string(&record).expect("serializable")
        }
    };
    emit_line(&line)
}

fn cmd_enumerate(
    n: usize,
    dedup: bool,
    delta: Option<usize>,
    min_delta: Option<usize>,
    format: StreamFormat,
    with_q: bool,
) -> Result<i32> {
    if !(3..=62).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "enumerate supports 3 <= n <= 62, got {n}"
        )));
    }
    let keep = |d: usize| delta.is_none_or(|x| d == x) && min_delta.is_none_or(|x| d >= x);
    if dedup {
        let classes = enumerate_classes(n)?;
        for class in filter_by_max_degree(&classes, keep) {
            if !emit_graph(class.rep.as_cycle_graph(), format, with_q)? {
                break;
            }
        }
    } else {
        for tri in enumerate_labeled(n)? {
            if keep(tri.max_degree()) && !emit_graph(tri.as_cycle_graph(), format, with_q)? {
                break;
            }
        }
    }
    Ok(0)
}

fn print_report(report: &VerificationReport) {
    let verdict = match report.verdict {
        Verdict::Pass => "PASS",
        Verdict::Anomaly => "ANOMALY",
        Verdict::Fail => "FAIL",
    };
    let mut line = format!("{verdict} {} [{}]", report.check, report.scope);
    if !report.details.is_empty() {
        let details: Vec<String> = report
            .details
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        line.push_str(&format!(" {{{}}}", details.join(", ")));
    }
    println!("{line}");
    for w in &report.witnesses {
        let vals: Vec<String> = w.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if w.graph6.is_empty() {
            println!("  - {} ({})", w.note, vals.join(", "));
        } else {
            println!("  - {} ({}) graph6={}", w.note, vals.join(", "), w.graph6);
        }
    }
}

#[derive(Serialize)]
struct ReportArtifact<'a> {
    manifest: &'a RunManifest,
    reports: &'a [VerificationReport],
}

fn write_csv<W: Write>(
    mut w: W,
    rows: &[TableCsvRow],
    manifest: Option<&RunManifest>,
) -> std::io::Result<()> {
    if let Some(m) = manifest {
        writeln!(
            w,
            "# manifest: {}",
            serde_json::to_string(m).expect("serializable")
        )?;
    }
    writeln!(w, "n,delta_class,family,q_computed,q_published,matched")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.n,
            r.delta_class,
            r.family,
            r.q_computed.map(|q| format!("{q:.10}")).unwrap_or_default(),
            r.q_published.map(|q| q.to_string()).unwrap_or_default(),
            r.matched
        )?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    check: CheckId,
    n_max: Option<usize>,
    json: Option<PathBuf>,
    format: VerifyFormat,
    out: Option<PathBuf>,
    allow_anomalies: bool,
    deny_anomalies: bool,
) -> Result<i32> {
    let mut manifest = RunManifest::new(command_line(), None);
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut csv_rows: Vec<TableCsvRow> = Vec::new();

    match check {
        CheckId::Theorem => {
            let n_max = n_max.unwrap_or(13);
            manifest = manifest.with_tolerance("uniqueness_gap", THEOREM_GAP);
            for n in 3..=n_max {
                reports.push(check_theorem(n)?);
            }
        }
        CheckId::Tables => {
            manifest = manifest.with_tolerance("table_match", TABLE_TOL);
            let outcome = reproduce_tables()?;
            reports = outcome.reports;
            csv_rows = outcome.csv;
        }
        CheckId::Lemmas => {
            let n_max = n_max.unwrap_or(12);
            manifest = manifest.with_tolerance("bound_slack", BOUND_SLACK);
            reports = run_lemma_sweep(n_max)?;
        }
        CheckId::Perron => {
            let n_max = n_max.unwrap_or(40);
            manifest = manifest.with_tolerance("margin", PERRON_MARGIN);
            reports.push(run_perron_sweep(n_max)?);
        }
    }
    manifest = manifest.with_tolerance("qindex", DEFAULT_TOL);

    if format == VerifyFormat::Csv {
        if check != CheckId::Tables {
            return Err(Error::InvalidParameter(
                "--format csv applies to --check tables only".into(),
            ));
        }
        match &out {
            Some(path) => {
                manifest = manifest.with_output(&path.display().to_string());
                let file = std::fs::File::create(path).map_err(io_err)?;
                write_csv(file, &csv_rows, Some(&manifest)).map_err(io_err)?;
            }
            // stdout stays pure data so identical runs stay byte-identical
            None => {
                if let Err(e) = write_csv(std::io::stdout().lock(), &csv_rows, None) {
                    if e.kind() != std::io::ErrorKind::BrokenPipe {
                        return Err(io_err(e));
                    }
                }
            }
        }
    } else {
        for report in &reports {
            print_report(report);
        }
    }

    if let Some(path) = &json {
        let manifest = manifest.with_output(&path.display().to_string());
        let artifact = ReportArtifact {
            manifest: &manifest,
            reports: &reports,
        };
        let file = std::fs::File::create(path).map_err(io_err)?;
        serde_json::to_writer_pretty(file, &artifact)
            .map_err(|e| Error::InvalidParameter(format!("io: {e}")))?;
    }

    let allow = !deny_anomalies && (allow_anomalies || check == CheckId::Tables);
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail)
        || (!allow && reports.iter().any(|r| r.verdict == Verdict::Anomaly));
    Ok(if failed { 1 } else { 0 })
}

fn cmd_families(
    family: FamilyArg,
    n: usize,
    k: Option<usize>,
    j: Option<usize>,
    format: StreamFormat,
) -> Result<i32> {
    let spec = FamilySpec {
        tag: family.into(),
        n,
        k,
        j,
    };
    match spec.build()? {
        qmax::families::FamilyGraph::Cycle(g) => emit_graph(&g, format, false)?,
        qmax::families::FamilyGraph::General(g) => emit_graph(&g, format, false)?,
    };
    Ok(0)
}

fn cmd_qindex(
    graph6: Option<String>,
    family: Option<FamilyArg>,
    n: Option<usize>,
    k: Option<usize>,
    j: Option<usize>,
    tol: f64,
    emit_vector: bool,
) -> Result<i32> {
    let result = match (graph6, family) {
        (Some(line), None) => {
            let g = qmax::graph6::decode(&line)?;
            qindex(&g, tol)?
        }
        (None, Some(fam)) => {
            let n = n.ok_or_else(|| Error::InvalidParameter("--family requires --n".into()))?;
            let spec = FamilySpec {
                tag: fam.into(),
                n,
                k,
                j,
            };
            match spec.build()? {
                qmax::families::FamilyGraph::Cycle(g) => qindex(&g, tol)?,
                qmax::families::FamilyGraph::General(g) => qindex(&g, tol)?,
            }
        }
        _ => {
            return Err(Error::InvalidParameter(
                "provide exactly one of --graph6 or --family".into(),
            ))
        }
    };
    println!("{:.12}", result.q);
    if emit_vector {
        for x in &result.vector {
            println!("{x:.12}");
        }
    }
    Ok(0)
}

fn cmd_search(n: usize, restarts: usize, budget: usize, seed: u64) -> Result<i32> {
    let result = flip_search_max_q(n, restarts, budget, seed)?;
    for (i, r) in result.restarts.iter().enumerate() {
        println!(
            "restart {i}: start={} steps={} q={:.12}",
            r.initial_graph6, r.steps, r.final_q
        );
    }
    println!(
        "best q={:.12} graph6={} n={n} seed={seed}",
        result.best_q,
        qmax::graph6::encode(result.best.as_cycle_graph())?
    );
    Ok(0)
}

fn command_line() -> String {
    let args: Vec<String> = std::env::args().collect();
    args.join(" ")
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("io: {e}"))
}
