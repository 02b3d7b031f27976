//! The `lagdelta` command line.
//!
//! [`run`] parses arguments, dispatches, and returns the exit code with the
//! full report, so tests can drive the CLI without spawning a process. Exit
//! codes: 0 success or a check that holds, 1 a check that fails, 2 usage,
//! input, or format errors.

use std::fmt::Write as _;
use std::io::Read as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::correspondence::{nu, nu_inverse};
use crate::deltamatroid::SetSystem;
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::ground::GroundSet;
use crate::hopf::{self, Hopf, IsoClassKey, Object, Side, SignConvention};
use crate::ribbon::RibbonGraph;
use crate::symplectic::{enumerate_lagrangians, format_vector, LagrangianSubspace, Reduction};
use crate::verify::{self, MAX_ENUMERATION_N, MAX_HOPF_N};

#[derive(Debug, Parser)]
#[command(
    name = "lagdelta",
    version,
    about = "Lagrangian subspaces over GF(2), binary delta-matroids and ribbon graphs"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    family: Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Set systems and delta-matroids.
    #[command(subcommand)]
    Dm(DmCmd),
    /// Lagrangian subspaces.
    #[command(subcommand)]
    Lagr(LagrCmd),
    /// Conversions through nu and its inverse.
    #[command(subcommand)]
    Conv(ConvCmd),
    /// Ribbon graphs.
    #[command(subcommand)]
    Rib(RibCmd),
    /// Hopf algebra computations.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Exhaustive verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
enum DmCmd {
    /// Check the symmetric exchange axiom; exit 1 with a witness if it fails.
    CheckSea { file: String },
    /// Decide whether the system is a binary delta-matroid.
    IsBinary { file: String },
    /// Twist by a subset of the ground set.
    Twist {
        #[arg(long)]
        set: String,
        file: String,
    },
}

#[derive(Debug, Subcommand)]
enum LagrCmd {
    /// List every Lagrangian subspace of V_E for E = {1..n}.
    Enum {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Local duality at a subset.
    Dual {
        #[arg(long)]
        set: String,
        file: String,
    },
    /// A subset whose local dual is graphic, with the resulting matrix.
    Graphify { file: String },
    /// Symplectic reduction onto a subset.
    Reduce {
        #[arg(long)]
        keep: String,
        #[arg(long, value_enum, default_value_t = ReductionArg::Primal)]
        mode: ReductionArg,
        file: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReductionArg {
    Primal,
    Dual,
}

#[derive(Debug, Subcommand)]
enum ConvCmd {
    /// Lagrangian subspace to delta-matroid.
    L2d { file: String },
    /// Binary delta-matroid to Lagrangian subspace.
    D2l { file: String },
}

#[derive(Debug, Subcommand)]
enum RibCmd {
    /// Number of boundary components.
    Boundary { file: String },
    /// Quasi-tree delta-matroid.
    Rho { file: String },
    /// Lagrangian subspace of the graph.
    Pi { file: String },
    /// Partial dual at a set of edges.
    Pdual {
        #[arg(long)]
        set: String,
        file: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    L,
    D,
}

impl SideArg {
    fn side(self) -> Side {
        match self {
            SideArg::L => Side::Lagrangian,
            SideArg::D => Side::DeltaMatroid,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bialgebra,
    Numorphism,
    Fourterm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    InclusionExclusion,
    Alternating,
}

impl ConventionArg {
    fn convention(self) -> SignConvention {
        match self {
            ConventionArg::InclusionExclusion => SignConvention::InclusionExclusion,
            ConventionArg::Alternating => SignConvention::Alternating,
        }
    }
}

#[derive(Debug, Subcommand)]
enum HopfCmd {
    /// Coproduct of the class of one object.
    Coproduct {
        #[arg(long, value_enum, default_value_t = SideArg::L)]
        side: SideArg,
        file: String,
    },
    /// Exhaustive checks over all basis classes up to a degree.
    Check {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Dimension of one degree of the four-term quotient.
    Qdim {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::InclusionExclusion)]
        convention: ConventionArg,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Run every suite and print a pass/fail table.
    All {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

/// Failure to produce a report at all; always exit code 2.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<Report, Failure>;

struct Report {
    holds: bool,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Outcome {
        Ok(Report {
            holds: true,
            text,
            json,
        })
    }
}

fn read_input(path: &str) -> std::result::Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))
}

fn load<T>(
    path: &str,
    parse: impl FnOnce(&str) -> crate::Result<T>,
) -> std::result::Result<T, Failure> {
    let text = read_input(path)?;
    parse(&text).map_err(|e| Failure(format!("{path}: {e}")))
}

fn subset_in(ground: &GroundSet, text: &str) -> std::result::Result<crate::Subset, Failure> {
    ground
        .parse_subset(text)
        .map_err(|e| Failure(format!("--set/--keep `{text}`: {e}")))
}

fn vectors(l: &LagrangianSubspace) -> Vec<String> {
    l.basis()
        .rows()
        .iter()
        .map(|v| format_vector(l.ground(), v))
        .collect()
}

fn matrix_json(a: &BitMatrix) -> Value {
    json!((0..a.nrows())
        .map(|r| (0..a.ncols())
            .map(|c| u8::from(a.get(r, c)))
            .collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn family_json(s: &SetSystem) -> Value {
    json!(s
        .feasible()
        .iter()
        .map(|&f| f.iter().map(|i| s.ground().label(i)).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// A readable representative of a basis class.
fn describe(key: &IsoClassKey) -> String {
    match Object::from_key(key) {
        Ok(Object::Lagrangian(l)) => format!("<{}>", vectors(&l).join(", ")),
        Ok(Object::SetSystem(s)) => format!("({})", s.family_string()),
        Err(_) => "?".into(),
    }
}

fn dm(cmd: DmCmd) -> Outcome {
    match cmd {
        DmCmd::CheckSea { file } => {
            let s = load(&file, SetSystem::parse_text)?;
            let g = s.ground();
            match s.sea_violation() {
                Err(Error::ImproperSystem) => Ok(Report {
                    holds: false,
                    text: "SEA fails: the family is empty\n".into(),
                    json: json!({"sea": false, "reason": "empty family"}),
                }),
                Err(e) => Err(e.into()),
                Ok(None) => Report::ok("SEA holds\n".into(), json!({"sea": true})),
                Ok(Some(w)) => Ok(Report {
                    holds: false,
                    text: format!(
                        "SEA fails: phi1={} phi2={} e={}\n",
                        g.format_subset(w.phi1),
                        g.format_subset(w.phi2),
                        g.label(w.e)
                    ),
                    json: json!({
                        "sea": false,
                        "phi1": g.format_subset(w.phi1),
                        "phi2": g.format_subset(w.phi2),
                        "e": g.label(w.e),
                    }),
                }),
            }
        }
        DmCmd::IsBinary { file } => {
            let s = load(&file, SetSystem::parse_text)?;
            match s.binary_witness() {
                Ok(Some((phi, graph))) => Report::ok(
                    format!(
                        "binary: twist by {} of the framed graph\n{}",
                        s.ground().format_subset(phi),
                        graph.adjacency().to_text()
                    ),
                    json!({
                        "binary": true,
                        "twist": s.ground().format_subset(phi),
                        "matrix": matrix_json(graph.adjacency()),
                    }),
                ),
                Ok(None) | Err(Error::ImproperSystem) => Ok(Report {
                    holds: false,
                    text: "not binary\n".into(),
                    json: json!({"binary": false}),
                }),
                Err(e) => Err(e.into()),
            }
        }
        DmCmd::Twist { set, file } => {
            let s = load(&file, SetSystem::parse_text)?;
            let t = s.twist(subset_in(s.ground(), &set)?)?;
            Report::ok(
                t.to_text(),
                json!({"ground": t.ground().labels(), "feasible": family_json(&t)}),
            )
        }
    }
}

fn lagr(cmd: LagrCmd) -> Outcome {
    match cmd {
        LagrCmd::Enum { n } => {
            if n > MAX_ENUMERATION_N {
                return Err(Failure(format!(
                    "-n {n} exceeds the enumeration limit {MAX_ENUMERATION_N}"
                )));
            }
            let all = enumerate_lagrangians(&GroundSet::numbered(n))?;
            let mut text = format!("{} Lagrangian subspaces\n", all.len());
            let list: Vec<Vec<String>> = all.iter().map(vectors).collect();
            for v in &list {
                writeln!(text, "<{}>", v.join(", ")).expect("string write");
            }
            Report::ok(text, json!({"n": n, "count": all.len(), "subspaces": list}))
        }
        LagrCmd::Dual { set, file } => {
            let l = load(&file, LagrangianSubspace::parse_text)?;
            let d = l.local_dual(subset_in(l.ground(), &set)?)?;
            Report::ok(d.to_text(), json!({"basis": vectors(&d)}))
        }
        LagrCmd::Graphify { file } => {
            let l = load(&file, LagrangianSubspace::parse_text)?;
            let s = l.graphify();
            let a = l.local_dual(s)?.graphic_matrix()?;
            Report::ok(
                format!(
                    "dualize at {}\n{}",
                    l.ground().format_subset(s),
                    a.to_text()
                ),
                json!({"set": l.ground().format_subset(s), "matrix": matrix_json(&a)}),
            )
        }
        LagrCmd::Reduce { keep, mode, file } => {
            let l = load(&file, LagrangianSubspace::parse_text)?;
            let mode = match mode {
                ReductionArg::Primal => Reduction::Primal,
                ReductionArg::Dual => Reduction::Dual,
            };
            let r = l.reduce(subset_in(l.ground(), &keep)?, mode)?;
            let mut text = format!("ground: {}\n", r.ground().labels().join(" "));
            for v in vectors(&r) {
                writeln!(text, "{v}").expect("string write");
            }
            Report::ok(
                text,
                json!({"ground": r.ground().labels(), "basis": vectors(&r)}),
            )
        }
    }
}

fn conv(cmd: ConvCmd) -> Outcome {
    match cmd {
        ConvCmd::L2d { file } => {
            let l = load(&file, LagrangianSubspace::parse_text)?;
            let s = nu(&l);
            Report::ok(
                format!("{}\n", s.family_string()),
                json!({"ground": s.ground().labels(), "feasible": family_json(&s)}),
            )
        }
        ConvCmd::D2l { file } => {
            let s = load(&file, SetSystem::parse_text)?;
            let l = nu_inverse(&s)?;
            Report::ok(
                l.to_text(),
                json!({"ground": l.ground().labels(), "basis": vectors(&l)}),
            )
        }
    }
}

fn rib(cmd: RibCmd) -> Outcome {
    match cmd {
        RibCmd::Boundary { file } => {
            let g = load(&file, RibbonGraph::parse_text)?;
            let f = g.boundary_components();
            Report::ok(
                format!("{f}\n"),
                json!({
                    "boundary_components": f,
                    "euler_characteristic": g.euler_characteristic(),
                    "orientable": g.is_orientable(),
                }),
            )
        }
        RibCmd::Rho { file } => {
            let g = load(&file, RibbonGraph::parse_text)?;
            let r = g.rho()?;
            Report::ok(
                format!("{}\n", r.family_string()),
                json!({"ground": r.ground().labels(), "feasible": family_json(&r)}),
            )
        }
        RibCmd::Pi { file } => {
            let g = load(&file, RibbonGraph::parse_text)?;
            let l = g.pi()?;
            Report::ok(
                l.to_text(),
                json!({"ground": l.ground().labels(), "basis": vectors(&l)}),
            )
        }
        RibCmd::Pdual { set, file } => {
            let g = load(&file, RibbonGraph::parse_text)?;
            let d = g.partial_dual(subset_in(g.ground(), &set)?)?;
            Report::ok(d.to_text(), json!({"graph": d.to_text()}))
        }
    }
}

fn outcome_line(text: &mut String, passed: bool, name: &str, cases: usize, detail: &str) {
    let line = format!(
        "{:<4}  {:<32} {:>6}  {}",
        if passed { "PASS" } else { "FAIL" },
        name,
        cases,
        detail
    );
    text.push_str(line.trim_end());
    text.push('\n');
}

fn check_degree(degree: usize) -> std::result::Result<(), Failure> {
    if degree > MAX_HOPF_N {
        return Err(Failure(format!(
            "--degree {degree} exceeds the Hopf limit {MAX_HOPF_N}"
        )));
    }
    Ok(())
}

fn hopf_cmd(cmd: HopfCmd) -> Outcome {
    match cmd {
        HopfCmd::Coproduct { side, file } => {
            let object = match side.side() {
                Side::Lagrangian => {
                    Object::Lagrangian(load(&file, LagrangianSubspace::parse_text)?)
                }
                Side::DeltaMatroid => Object::SetSystem(load(&file, SetSystem::parse_text)?),
            };
            let key = object.key()?;
            let h = Hopf::default();
            let delta = h.basis_coproduct(&key)?;
            let mut text = format!("coproduct of {key} {}\n", describe(&key));
            let mut terms = Vec::new();
            for ((l, r), c) in delta.terms() {
                writeln!(
                    text,
                    "{c:>3}  {l} {}  (x)  {r} {}",
                    describe(l),
                    describe(r)
                )
                .expect("string write");
                terms.push(json!({
                    "coefficient": c.to_string(),
                    "left": l.to_string(),
                    "right": r.to_string(),
                }));
            }
            Report::ok(text, json!({"class": key.to_string(), "terms": terms}))
        }
        HopfCmd::Check { degree, suite } => {
            check_degree(degree)?;
            let h = Hopf::default();
            let mut outcomes = Vec::new();
            let mut extra = Value::Null;
            match suite {
                Suite::Bialgebra => {
                    for side in [Side::Lagrangian, Side::DeltaMatroid] {
                        outcomes.extend([
                            hopf::check_bialgebra(&h, side, degree)?,
                            hopf::check_coassociativity(&h, side, degree)?,
                            hopf::check_counit(&h, side, degree)?,
                            hopf::check_antipode(&h, side, degree)?,
                            hopf::check_commutativity(side, degree)?,
                            hopf::check_cocommutativity(&h, side, degree)?,
                        ]);
                    }
                }
                Suite::Numorphism => {
                    outcomes.extend([
                        hopf::check_key_bijectivity(&h, degree)?,
                        hopf::check_multiplicativity(&h, degree)?,
                        hopf::check_comultiplicativity(&h, degree)?,
                    ]);
                    let rows = hopf::arbiter(degree)?;
                    extra = json!(rows);
                }
                Suite::Fourterm => {
                    let mut rows = Vec::new();
                    for convention in [
                        SignConvention::InclusionExclusion,
                        SignConvention::Alternating,
                    ] {
                        for n in 0..=degree {
                            let l = hopf::quotient_dimension(Side::Lagrangian, n, convention)?;
                            let d = hopf::quotient_dimension(Side::DeltaMatroid, n, convention)?;
                            let t = hopf::check_relation_transport(&h, n, convention)?;
                            rows.push(json!({
                                "convention": convention,
                                "degree": n,
                                "lagrangian": l,
                                "deltamatroid": d,
                                "transport": t,
                            }));
                            outcomes.push(hopf::CheckOutcome {
                                name: format!("qdim/{}/{n} = {l}", convention.name()),
                                cases: 1,
                                failures: usize::from(l != d),
                                first_failure: (l != d).then(|| format!("{l} vs {d}")),
                            });
                            outcomes.push(hopf::CheckOutcome {
                                name: format!("transport/{}/{n}", convention.name()),
                                cases: 1,
                                failures: usize::from(!t.bijective()),
                                first_failure: (!t.bijective()).then(|| format!("{t:?}")),
                            });
                        }
                    }
                    extra = json!(rows);
                }
            }
            let mut text = String::new();
            for o in &outcomes {
                let detail = o.first_failure.clone().unwrap_or_default();
                outcome_line(&mut text, o.passed(), &o.name, o.cases, &detail);
            }
            if let (Suite::Numorphism, Value::Array(rows)) = (suite, &extra) {
                text.push_str("comultiplicativity by reduction/restriction:\n");
                for row in rows {
                    let c = &row["comultiplicativity"];
                    writeln!(
                        text,
                        "  {:<8} {:<15} {} of {} classes fail",
                        row["reduction"].as_str().unwrap_or_default(),
                        row["restriction"].as_str().unwrap_or_default(),
                        c["failures"],
                        c["cases"]
                    )
                    .expect("string write");
                }
            }
            let holds = outcomes.iter().all(hopf::CheckOutcome::passed);
            Ok(Report {
                holds,
                text,
                json: json!({"passed": holds, "checks": outcomes, "details": extra}),
            })
        }
        HopfCmd::Qdim {
            side,
            n,
            convention,
        } => {
            let dim = hopf::quotient_dimension(side.side(), n, convention.convention())?;
            Report::ok(
                format!("{dim}\n"),
                json!({
                    "side": side.side(),
                    "degree": n,
                    "convention": convention.convention(),
                    "dimension": dim,
                }),
            )
        }
    }
}

fn verify_cmd(cmd: VerifyCmd) -> Outcome {
    match cmd {
        VerifyCmd::All { max_n } => {
            if max_n > MAX_ENUMERATION_N {
                return Err(Failure(format!(
                    "--max-n {max_n} exceeds the limit {MAX_ENUMERATION_N}"
                )));
            }
            let reports = verify::all(max_n)?;
            let mut text = String::new();
            for r in &reports {
                outcome_line(&mut text, r.passed, &r.name, r.cases, &r.detail);
            }
            let holds = reports.iter().all(|r| r.passed);
            Ok(Report {
                holds,
                text,
                json: json!({"max_n": max_n, "passed": holds, "suites": reports}),
            })
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code with everything that should be printed.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let format = cli.format;
    let outcome = match cli.family {
        Family::Dm(c) => dm(c),
        Family::Lagr(c) => lagr(c),
        Family::Conv(c) => conv(c),
        Family::Rib(c) => rib(c),
        Family::Hopf(c) => hopf_cmd(c),
        Family::Verify(c) => verify_cmd(c),
    };
    match (outcome, format) {
        (Ok(r), Format::Text) => (if r.holds { 0 } else { 1 }, r.text),
        (Ok(r), Format::Json) => (
            if r.holds { 0 } else { 1 },
            format!("{}\n", serde_json::to_string_pretty(&r.json).expect("json")),
        ),
        (Err(Failure(msg)), Format::Text) => (2, format!("error: {msg}\n")),
        (Err(Failure(msg)), Format::Json) => (
            2,
            format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({"error": msg})).expect("json")
            ),
        ),
    }
}
