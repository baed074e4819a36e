//! `deltak`: batch front end for the delta-matroid invariants library.
//!
//! Every command writes one JSON report. Exit codes: 0 success, 1 a
//! computed identity or agreement check failed, 2 bad input, 3 a resource
//! budget ran out.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltak::acceptance::{gating_passed, run_scoreboard, ScoreboardOptions};
use deltak::algebra::UniPoly;
use deltak::classes::{
    k_isotropic, k_polytope, k_wedge_qdual, ogr_orbit_class, ogr_y_class, LocalizedClass, Side,
};
use deltak::delta::{from_graph, sample_random, subset_elements, DeltaMatroid};
use deltak::engine::{euler_char_x, polytope_euler_char, r_poly_orbit, r_poly_y, Engine};
use deltak::semigroup::{is_very_ample, vertex_semigroup, LatticeChoice};
use deltak::typeb::{enumerate_w, moment_edges, OgrFixedPoint, SignedPermutation};
use deltak::verify::{
    check_hrr, check_interlace_identity, check_interlace_integral, corpus, run_suite, search_star_failures,
};
use deltak::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "deltak",
    version,
    about = "Delta-matroid invariants by torus localization"
)]
struct Cli {
    /// Worker threads for the localization sums.
    #[arg(long, global = true, env = "DELTAK_JOBS")]
    jobs: Option<usize>,
    /// Seed for the generic directions.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Number of independent directions to evaluate and compare.
    #[arg(long, global = true, default_value_t = 1)]
    directions: usize,
    /// Add wall-clock seconds to the report (makes reruns differ).
    #[arg(long, global = true)]
    timings: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// JSON file with `feasible`, `rows` or `edges`.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a family is a delta-matroid.
    Validate(InputArg),
    /// Interlace polynomial.
    Interlace(InputArg),
    /// Euler characteristic of a polytope class on the permutohedral variety.
    Chi {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "polytope")]
        class: ChiClass,
    },
    /// The polynomial R(v) from the Grassmannian side.
    Rpoly {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "y")]
        mode: Mode,
    },
    /// Run a verification suite over every delta-matroid up to size `n`.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        n: usize,
        /// Check this many random delta-matroids of size exactly `n`
        /// instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
    },
    Polytope {
        #[command(subcommand)]
        command: PolytopeCommand,
    },
    Classes {
        #[command(subcommand)]
        command: ClassesCommand,
    },
    #[command(name = "moment-graph")]
    MomentGraph {
        #[command(subcommand)]
        command: MomentGraphCommand,
    },
    /// Search for delta-matroids where the orbit R(v) differs from
    /// (v + 1) Int(v).
    SearchStar {
        #[arg(long)]
        n: usize,
        /// Required for n = 4, which takes a long time.
        #[arg(long)]
        long_running: bool,
    },
    /// Run the acceptance scoreboard.
    Selftest {
        /// Also attempt the slow non-gating criteria.
        #[arg(long)]
        stretch: bool,
    },
    /// Time the Euler characteristic of the polytope class.
    Bench {
        /// Defaults to the graphic delta-matroid of a 6-cycle.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PolytopeCommand {
    /// Very-ampleness certificate and, per vertex, the K-polynomial of the
    /// semigroup over its minimal generators.
    Audit {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "standard")]
        lattice: Lattice,
    },
}

#[derive(Subcommand)]
enum ClassesCommand {
    /// Localized tuple of a class, for n <= 3.
    Dump {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "polytope")]
        class: DumpClass,
        /// Exterior power for `wedge`.
        #[arg(long, default_value_t = 1)]
        p: usize,
    },
}

#[derive(Subcommand)]
enum MomentGraphCommand {
    /// Fixed points and labeled edges, for n <= 3.
    Dump {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "x")]
        side: DumpSide,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiClass {
    Polytope,
    Doubled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Y,
    Orbit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    Intersection,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lattice {
    Standard,
    Vertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpClass {
    Polytope,
    Doubled,
    Wedge,
    Isotropic,
    OgrY,
    OgrOrbit,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpSide {
    X,
    Ogr,
}

/// A command that could not produce its report, with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_)
            | Error::VariableMismatch { .. }
            | Error::NotIsotropic { .. }
            | Error::RankDeficient { .. } => 2,
            Error::Resource(_) | Error::NoGenericDirection { .. } => 3,
            Error::Consistency(_) | Error::DegenerateDirection { .. } | Error::DegreeBound { .. } => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// A report and whether its checks passed.
struct Report {
    body: Value,
    code: u8,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report { body, code: 0 }
    }

    fn checked(body: Value, passed: bool) -> Self {
        Report {
            body,
            code: u8::from(!passed),
        }
    }
}

fn poly_json(p: &UniPoly) -> Value {
    json!(p.to_coefficient_map())
}

fn dm_json(d: &DeltaMatroid) -> Value {
    json!(d.to_json())
}

fn require_small(n: usize) -> Result<(), Failure> {
    if n == 0 || n > 3 {
        return Err(Failure::input(format!(
            "dumps are limited to 1 <= n <= 3, got {n}"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let engine = Engine::with_directions(cli.seed, cli.directions.max(1));
    match &cli.command {
        Command::Validate(a) => {
            let parsed = input::classify(input::read_value(&a.input)?)?;
            let (n, family, v) = parsed.validation()?;
            let feasible: Vec<Vec<usize>> = family.iter().map(|&s| subset_elements(s, n)).collect();
            let edge = v
                .violating_edge
                .map(|(p, q)| json!([subset_elements(p, n), subset_elements(q, n)]));
            let body = json!({
                "input": {"n": n, "feasible": feasible},
                "valid": v.valid,
                "violating_edge": edge,
            });
            Ok(Report {
                body,
                code: if v.valid { 0 } else { 2 },
            })
        }
        Command::Interlace(a) => {
            let d = input::load(&a.input)?;
            Ok(Report::ok(
                json!({"input": dm_json(&d), "Int": poly_json(&d.interlace())}),
            ))
        }
        Command::Chi { input: a, class } => {
            let d = input::load(&a.input)?;
            let doubled = matches!(class, ChiClass::Doubled);
            let r = polytope_euler_char(&d, doubled, &engine)?;
            Ok(Report::checked(
                json!({
                    "input": dm_json(&d),
                    "class": if doubled { "doubled" } else { "polytope" },
                    "chi": r.value.to_string(),
                    "directions_agreed": r.agreed,
                    "seed": cli.seed,
                }),
                r.agreed,
            ))
        }
        Command::Rpoly { input: a, mode } => {
            let d = input::load(&a.input)?;
            let r = match mode {
                Mode::Y => r_poly_y(&d, &engine)?,
                Mode::Orbit => r_poly_orbit(&d, &engine)?,
            };
            let expected = &UniPoly::from_ints(&[1, 1]) * &d.interlace();
            Ok(Report::checked(
                json!({
                    "input": dm_json(&d),
                    "mode": match mode { Mode::Y => "y", Mode::Orbit => "orbit" },
                    "R": poly_json(&r.value),
                    "equals_v_plus_one_times_interlace": r.value == expected,
                    "directions_agreed": r.agreed,
                    "seed": cli.seed,
                }),
                r.agreed,
            ))
        }
        Command::Verify { theorem, n, sample } => {
            let cases = match sample {
                Some(k) => sample_random(*n, *k, cli.seed)?,
                None => corpus(*n)?,
            };
            let check = match theorem {
                Theorem::A => check_interlace_identity,
                Theorem::B => check_hrr,
                Theorem::Intersection => check_interlace_integral,
            };
            let r = run_suite(&cases, &engine, check)?;
            Ok(Report::checked(
                json!({
                    "theorem": match theorem { Theorem::A => "A", Theorem::B => "B", Theorem::Intersection => "intersection" },
                    "n": n,
                    "checked": r.checked,
                    "failures": r.failures.len(),
                    "failing": r.failures,
                }),
                r.passed(),
            ))
        }
        Command::Polytope {
            command: PolytopeCommand::Audit { input: a, lattice },
        } => {
            let d = input::load(&a.input)?;
            let choice = match lattice {
                Lattice::Standard => LatticeChoice::Standard,
                Lattice::Vertex => LatticeChoice::GeneratorSpan,
            };
            let report = is_very_ample(&d, choice, &engine.semigroup)?;
            let gaps: Vec<Value> = report
                .gaps
                .iter()
                .map(|g| json!({"vertex": subset_elements(g.vertex, d.n()), "gap_point": g.point}))
                .collect();
            let mut series = Vec::new();
            for &s in d.feasible() {
                let semigroup = vertex_semigroup(&d, s)?.minimized(&engine.semigroup)?;
                let k = semigroup.k_polynomial(&engine.semigroup)?;
                series.push(json!({
                    "vertex": subset_elements(s, d.n()),
                    "generators": semigroup.generators(),
                    "k_polynomial": k.to_string(),
                }));
            }
            Ok(Report::ok(json!({
                "input": dm_json(&d),
                "lattice": match lattice { Lattice::Standard => "standard", Lattice::Vertex => "vertex" },
                "very_ample": report.very_ample,
                "gaps": gaps,
                "hilbert_numerators": series,
            })))
        }
        Command::Classes {
            command: ClassesCommand::Dump { input: a, class, p },
        } => {
            let d = input::load(&a.input)?;
            require_small(d.n())?;
            let c = match class {
                DumpClass::Polytope => k_polytope(&d, false)?,
                DumpClass::Doubled => k_polytope(&d, true)?,
                DumpClass::Wedge => k_wedge_qdual(&d, *p)?,
                DumpClass::Isotropic => k_isotropic(&d)?,
                DumpClass::OgrY => ogr_y_class(&d)?,
                DumpClass::OgrOrbit => ogr_orbit_class(&d, &engine.semigroup)?,
            };
            Ok(Report::ok(json!({"input": dm_json(&d), "class": dump_class(&c)})))
        }
        Command::MomentGraph {
            command: MomentGraphCommand::Dump { n, side },
        } => {
            require_small(*n)?;
            Ok(Report::ok(match side {
                DumpSide::X => moment_graph_x(*n),
                DumpSide::Ogr => moment_graph_ogr(*n),
            }))
        }
        Command::SearchStar { n, long_running } => {
            if *n > 4 || *n == 0 {
                return Err(Failure::input("search-star supports 1 <= n <= 4"));
            }
            if *n == 4 && !long_running {
                return Err(Failure::input("n = 4 takes a long time; pass --long-running"));
            }
            let s = search_star_failures(*n, &engine)?;
            Ok(Report::ok(json!({
                "n": n,
                "checked": s.checked,
                "failures": s.failures,
                "errors": s.errors,
            })))
        }
        Command::Selftest { stretch } => {
            let opts = ScoreboardOptions {
                seed: ScoreboardOptions::default().seed,
                stretch: *stretch,
            };
            let outcomes = run_scoreboard(&opts, |o| eprintln!("{}", o.line()));
            let lines: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    let mut v = json!({
                        "id": o.id,
                        "title": o.title,
                        "gating": o.gating,
                        "passed": o.passed,
                        "detail": o.detail,
                    });
                    if cli.timings {
                        v["seconds"] = json!(o.seconds);
                    }
                    v
                })
                .collect();
            let passed = outcomes.iter().filter(|o| o.passed == Some(true)).count();
            let ok = gating_passed(&outcomes);
            Ok(Report::checked(
                json!({"criteria": lines, "passed": passed, "total": outcomes.len(), "gating_passed": ok}),
                ok,
            ))
        }
        Command::Bench { input: path } => {
            let d = match path {
                Some(p) => input::load(p)?,
                None => from_graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])?.0,
            };
            let p = k_polytope(&d, false)?;
            let start = Instant::now();
            let r = engine.evaluate(d.n(), |c| euler_char_x(&p, c))?;
            Ok(Report::checked(
                json!({
                    "input": dm_json(&d),
                    "chi": r.value.to_string(),
                    "fixed_points": SignedPermutation::order(d.n()),
                    "workers": rayon::current_num_threads(),
                    "seconds": start.elapsed().as_secs_f64(),
                }),
                r.agreed,
            ))
        }
    }
}

fn dump_class(c: &LocalizedClass) -> Value {
    let n = c.n();
    let label = |i: usize| -> Value {
        match c.side() {
            Side::X => json!(SignedPermutation::unrank(n, i as u64).images()),
            Side::Ogr => json!(subset_elements(i as deltak::delta::Subset, n)),
        }
    };
    let entries: Vec<Value> = c
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "fixed_point": label(i),
                "numerator": e.numerator.to_string(),
                "denominators": e.denominators,
                "chart_factor_omitted": e.chart_factor_omitted,
            })
        })
        .collect();
    json!({
        "side": match c.side() { Side::X => "x", Side::Ogr => "ogr" },
        "n": n,
        "entries": entries,
    })
}

fn moment_graph_x(n: usize) -> Value {
    let vertices: Vec<Value> = enumerate_w(n).map(|w| json!(w.images())).collect();
    let mut edges = Vec::new();
    for w in enumerate_w(n) {
        for e in moment_edges(&w) {
            // each edge once, from its lower-ranked end
            if e.from.rank() < e.to.rank() {
                edges.push(json!({
                    "from": e.from.images(),
                    "to": e.to.images(),
                    "reflection": e.reflection,
                    "label": e.label,
                }));
            }
        }
    }
    json!({"side": "x", "n": n, "vertices": vertices, "edges": edges})
}

fn moment_graph_ogr(n: usize) -> Value {
    let vertices: Vec<Value> = OgrFixedPoint::all(n)
        .map(|p| json!(subset_elements(p.s, n)))
        .collect();
    let mut edges = Vec::new();
    for p in OgrFixedPoint::all(n) {
        for (q, label) in p.edges() {
            if p.s < q.s {
                edges.push(json!({
                    "from": subset_elements(p.s, n),
                    "to": subset_elements(q.s, n),
                    "label": label,
                }));
            }
        }
    }
    json!({"side": "ogr", "n": n, "vertices": vertices, "edges": edges})
}

fn emit(cli: &Cli, mut body: Value, seconds: f64) -> Result<(), Failure> {
    if cli.timings {
        body["seconds"] = json!(seconds);
    }
    let text = serde_json::to_string_pretty(&body).expect("JSON values serialize");
    match &cli.output {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(Failure::input(format!("cannot write the report: {e}")))
                }
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let start = Instant::now();
    let outcome = run(&cli).and_then(|r| {
        emit(&cli, r.body, start.elapsed().as_secs_f64())?;
        Ok(r.code)
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
