//! The `trc` command line: verify colorings, solve small instances, run the
//! reduction chain and move witnesses along it.
//!
//! Every command returns an [`Output`]; JSON goes to stdout (or `--out`),
//! notes go to stderr. Exit codes: 0 pass/found, 1 fail/impossible,
//! 2 usage or input error, 3 search budget exhausted.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use rainbow_core::format::{
    read_bundle, read_coloring, read_graph, read_pairs, read_partial, write_bundle, ColoringJson, FormatError,
};
use rainbow_core::reductions::{
    assignment_to_coloring, coloring_to_assignment, lift_coloring_p2_to_p1, lift_coloring_p3_to_p2, reduce_p2_to_p1,
    reduce_p3_to_p2, reduce_sat_to_p3, restrict_coloring_p1_to_p2, restrict_coloring_p2_to_p3,
};
use rainbow_core::{
    bounds_report, decide_colorable, decide_extension, decide_subset_trc3, is_rainbow_k_connected, min_colors,
    parse_dimacs, satisfies_problem3, Assignment, CnfFormula, ColoringMode, ColoringProblem, Graph, KConnectivity,
    Outcome, PairScope, ReducedInstance, SearchBudget, SolveError, SolveOptions, SolveReport, Stage, TotalColoring,
    VerifyOptions,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    File { path: PathBuf, msg: String },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Reduction(#[from] rainbow_core::ReductionError),
    #[error(transparent)]
    Verify(#[from] rainbow_core::VerifyError),
    #[error(transparent)]
    Cnf(#[from] rainbow_core::CnfError),
    #[error(transparent)]
    Graph(#[from] rainbow_core::GraphError),
}

impl CliError {
    /// Reduction falsifiers are failures of the claim under test, not bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Reduction(rainbow_core::ReductionError::Falsified(_)) => EXIT_FAIL,
            _ => EXIT_INPUT,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Parser)]
#[command(name = "trc", version, about = "Total rainbow k-connection toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a coloring for rainbow k-connectivity.
    Verify(VerifyArgs),
    /// Decide or minimize a palette.
    Solve(SolveArgs),
    /// Run one or more reduction steps.
    Reduce(ReduceArgs),
    /// Move a witness along a reduction.
    Witness(WitnessArgs),
    /// Formula → extension → assignment → lifted colorings, in one report.
    Roundtrip(RoundtripArgs),
    /// Lower bounds on trc_k.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Edge,
    Vertex,
    Total,
}

impl From<ModeArg> for ColoringMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Edge => ColoringMode::Edge,
            ModeArg::Vertex => ColoringMode::Vertex,
            ModeArg::Total => ColoringMode::Total,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StageArg {
    Sat,
    P3,
    P2,
    P1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    Trc,
    Rc,
    Rvc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Lift,
    Restrict,
    Extract,
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub no_symmetry_breaking: bool,
    /// Include wall-clock time in the output.
    #[arg(long)]
    pub timing: bool,
}

impl BudgetArgs {
    fn options(&self) -> Result<SolveOptions, CliError> {
        if self.workers == 0 {
            return usage("--workers must be at least 1");
        }
        Ok(SolveOptions {
            budget: SearchBudget {
                max_time: self.budget_ms.map(Duration::from_millis),
                max_nodes: self.max_nodes,
            },
            workers: self.workers,
            symmetry_breaking: !self.no_symmetry_breaking,
            max_len: None,
        })
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Verify against a bundle's own problem instead of a bare graph.
    #[arg(long, conflicts_with_all = ["graph", "pairs", "mode", "k"])]
    pub bundle: Option<PathBuf>,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Only these pairs (JSON list); all pairs otherwise.
    #[arg(long)]
    pub pairs: Option<PathBuf>,
    #[arg(long)]
    pub max_len: Option<usize>,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, required_unless_present = "bundle")]
    pub graph: Option<PathBuf>,
    #[arg(long, conflicts_with_all = ["graph", "param", "t", "pairs", "mode", "k"])]
    pub bundle: Option<PathBuf>,
    /// Compute the minimum palette for this parameter.
    #[arg(long, value_enum, conflicts_with = "t")]
    pub param: Option<ParamArg>,
    /// Decide colorability with this many colors.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub pairs: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub from: StageArg,
    #[arg(long, value_enum)]
    pub to: StageArg,
    /// DIMACS formula (from sat).
    #[arg(long)]
    pub cnf: Option<PathBuf>,
    /// Instance bundle (from p3 or p2).
    #[arg(long)]
    pub bundle: Option<PathBuf>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub pairs: Option<PathBuf>,
    /// Partial coloring (from p3 without a bundle).
    #[arg(long)]
    pub partial: Option<PathBuf>,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long, value_enum)]
    pub direction: Direction,
    #[arg(long)]
    pub bundle: PathBuf,
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    /// DIMACS-style literals, e.g. "1 -2 3" (lift into a formula's instance).
    #[arg(long, allow_hyphen_values = true)]
    pub assignment: Option<String>,
    /// Rename colors so the first pre-colored class gets 0 and the second 1.
    #[arg(long)]
    pub normalize: bool,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    #[arg(long)]
    pub cnf: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Skip the composed instance when it would have more vertices.
    #[arg(long, default_value_t = 20_000)]
    pub max_p1_vertices: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Also compute rc_k and rvc_k exactly.
    #[arg(long)]
    pub rc_rvc: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutArg,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn json(value: &impl Serialize, code: i32) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("plain data serializes");
        stdout.push('\n');
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn text(stdout: String, code: i32) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn note(mut self, line: impl AsRef<str>) -> Self {
        self.stderr.push_str(line.as_ref());
        self.stderr.push('\n');
        self
    }

    /// Moves stdout into `path` when given.
    fn into_file(mut self, out: &OutArg) -> Result<Self, CliError> {
        if let Some(path) = &out.out {
            std::fs::write(path, &self.stdout).map_err(|e| CliError::File {
                path: path.clone(),
                msg: e.to_string(),
            })?;
            self.stdout.clear();
        }
        Ok(self)
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Verify(a) => run_verify(&a)?.into_file(&a.out),
        Command::Solve(a) => run_solve(&a)?.into_file(&a.out),
        Command::Reduce(a) => run_reduce(&a)?.into_file(&a.out),
        Command::Witness(a) => run_witness(&a)?.into_file(&a.out),
        Command::Roundtrip(a) => run_roundtrip_command(&a)?.into_file(&a.out),
        Command::Bounds(a) => run_bounds(&a)?.into_file(&a.out),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::File {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })
}

fn in_file<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|e| CliError::File {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    in_file(path, read_graph(&read_text(path)?))
}

pub fn load_coloring(g: &Graph, path: &Path) -> Result<TotalColoring, CliError> {
    in_file(path, read_coloring(g, &read_text(path)?))
}

pub fn load_bundle(path: &Path) -> Result<ReducedInstance, CliError> {
    in_file(path, read_bundle(&read_text(path)?))
}

pub fn load_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    parse_dimacs(&read_text(path)?).map_err(|e| CliError::File {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })
}

fn load_scope(g: &Graph, pairs: Option<&PathBuf>) -> Result<PairScope, CliError> {
    Ok(match pairs {
        None => PairScope::All,
        Some(path) => PairScope::Subset(in_file(path, read_pairs(g, &read_text(path)?))?),
    })
}

fn pair_labels(g: &Graph, u: rainbow_core::VertexId, v: rainbow_core::VertexId) -> Value {
    json!([g.label(u), g.label(v)])
}

fn coloring_value(g: &Graph, c: &TotalColoring) -> Value {
    serde_json::to_value(ColoringJson::from_coloring(g, c)).expect("plain data serializes")
}

pub fn run_verify(a: &VerifyArgs) -> Result<Output, CliError> {
    if let Some(path) = &a.bundle {
        let inst = load_bundle(path)?;
        let chi = load_coloring(&inst.graph, &a.coloring)?;
        return verify_bundle(&inst, &chi);
    }
    let Some(gpath) = &a.graph else {
        return usage("verify needs --graph or --bundle");
    };
    let g = load_graph(gpath)?;
    let chi = load_coloring(&g, &a.coloring)?;
    let scope = load_scope(&g, a.pairs.as_ref())?;
    let k = a.k.unwrap_or(1);
    let mode: ColoringMode = a.mode.unwrap_or(ModeArg::Total).into();
    let opts = VerifyOptions { max_len: a.max_len };
    let r = is_rainbow_k_connected(&g, &chi, k, mode, &scope, opts)?;
    Ok(connectivity_output(&g, &r, k, mode))
}

fn connectivity_output(g: &Graph, r: &KConnectivity, k: usize, mode: ColoringMode) -> Output {
    match r {
        KConnectivity::Holds => Output::json(&json!({"holds": true, "k": k, "mode": mode}), EXIT_PASS),
        KConnectivity::FailsAt(u, v) => Output::json(
            &json!({"holds": false, "k": k, "mode": mode, "failing_pair": pair_labels(g, *u, *v)}),
            EXIT_FAIL,
        ),
    }
}

fn verify_bundle(inst: &ReducedInstance, chi: &TotalColoring) -> Result<Output, CliError> {
    let g = &inst.graph;
    if inst.stage == Stage::P3 {
        let verdict = satisfies_problem3(
            g,
            inst.pair_set().expect("problem 3 has pairs"),
            inst.partial.as_ref().expect("problem 3 has a partial coloring"),
            chi,
            inst.k,
        )?;
        let code = if verdict.is_satisfied() { EXIT_PASS } else { EXIT_FAIL };
        return Ok(Output::json(
            &json!({"holds": verdict.is_satisfied(), "k": inst.k, "stage": inst.stage, "verdict": format!("{verdict:?}")}),
            code,
        ));
    }
    if chi.palette() > 3 || chi.vertex_colors().iter().chain(chi.edge_colors()).any(|&c| c >= 3) {
        return Ok(Output::json(
            &json!({"holds": false, "k": inst.k, "stage": inst.stage, "verdict": "NotThreeColors"}),
            EXIT_FAIL,
        ));
    }
    let r = is_rainbow_k_connected(g, chi, inst.k, ColoringMode::Total, &inst.pairs, VerifyOptions::default())?;
    Ok(connectivity_output(g, &r, inst.k, ColoringMode::Total))
}

fn report_value(g: &Graph, r: &SolveReport, timing: bool) -> (Value, i32) {
    let mut v = json!({
        "status": r.outcome.status(),
        "coloring": r.outcome.coloring().map(|c| coloring_value(g, c)),
        "nodes": r.nodes,
    });
    if timing {
        v["elapsed_ms"] = json!(r.elapsed.as_millis() as u64);
    }
    let code = match r.outcome {
        Outcome::Found(_) => EXIT_PASS,
        Outcome::Impossible => EXIT_FAIL,
        Outcome::Exhausted => EXIT_EXHAUSTED,
    };
    (v, code)
}

pub fn run_solve(a: &SolveArgs) -> Result<Output, CliError> {
    let opts = a.budget.options()?;
    if let Some(path) = &a.bundle {
        let inst = load_bundle(path)?;
        let g = &inst.graph;
        let report = match inst.stage {
            Stage::P3 => decide_extension(
                g,
                inst.pair_set().expect("problem 3 has pairs"),
                inst.partial.as_ref().expect("problem 3 has a partial coloring"),
                inst.k,
                &opts,
            )?,
            Stage::P2 => decide_subset_trc3(g, inst.pair_set().expect("problem 2 has pairs"), inst.k, &opts)?,
            Stage::P1 => decide_colorable(
                &ColoringProblem::new(g, inst.k, 3, ColoringMode::Total, PairScope::All),
                &opts,
            )?,
        };
        let (mut v, code) = report_value(g, &report, a.budget.timing);
        v["stage"] = json!(inst.stage);
        v["k"] = json!(inst.k);
        return Ok(Output::json(&v, code));
    }
    let g = load_graph(a.graph.as_ref().expect("clap requires --graph"))?;
    let k = a.k.unwrap_or(1);
    match (a.param, a.t) {
        (Some(param), None) => {
            if a.pairs.is_some() || a.mode.is_some() {
                return usage("--param computes a whole-graph parameter; drop --pairs and --mode");
            }
            let mode = match param {
                ParamArg::Trc => ColoringMode::Total,
                ParamArg::Rc => ColoringMode::Edge,
                ParamArg::Rvc => ColoringMode::Vertex,
            };
            let name = format!("{param:?}").to_lowercase();
            match min_colors(&g, k, mode, &opts) {
                Ok(m) => {
                    let mut v = json!({
                        "param": name,
                        "k": k,
                        "value": m.value,
                        "coloring": coloring_value(&g, &m.witness),
                        "nodes": m.nodes,
                    });
                    if a.budget.timing {
                        v["elapsed_ms"] = json!(m.elapsed.as_millis() as u64);
                    }
                    Ok(Output::json(&v, EXIT_PASS))
                }
                Err(SolveError::BudgetExhausted { lower, upper }) => Ok(Output::json(
                    &json!({"param": name, "k": k, "status": "exhausted", "lower": lower, "upper": upper}),
                    EXIT_EXHAUSTED,
                )),
                Err(e) => Err(e.into()),
            }
        }
        (None, Some(t)) => {
            let scope = load_scope(&g, a.pairs.as_ref())?;
            let mode = a.mode.unwrap_or(ModeArg::Total).into();
            let report = decide_colorable(&ColoringProblem::new(&g, k, t, mode, scope), &opts)?;
            let (v, code) = report_value(&g, &report, a.budget.timing);
            Ok(Output::json(&v, code))
        }
        _ => usage("solve needs exactly one of --param, --t or --bundle"),
    }
}

fn stage_rank(s: StageArg) -> usize {
    match s {
        StageArg::Sat => 0,
        StageArg::P3 => 1,
        StageArg::P2 => 2,
        StageArg::P1 => 3,
    }
}

fn need<'a, T>(opt: &'a Option<T>, flag: &str, what: &str) -> Result<&'a T, CliError> {
    opt.as_ref()
        .ok_or_else(|| CliError::Usage(format!("{what} needs {flag}")))
}

pub fn run_reduce(a: &ReduceArgs) -> Result<Output, CliError> {
    if stage_rank(a.from) >= stage_rank(a.to) {
        return usage("--to must come after --from in sat → p3 → p2 → p1");
    }
    let mut inst = match a.from {
        StageArg::Sat => {
            let phi = load_cnf(need(&a.cnf, "--cnf", "reducing from sat")?)?;
            reduce_sat_to_p3(&phi, a.k.unwrap_or(1))?
        }
        StageArg::P3 | StageArg::P2 => {
            if let Some(path) = &a.bundle {
                let inst = load_bundle(path)?;
                let expected = if a.from == StageArg::P3 { Stage::P3 } else { Stage::P2 };
                inst.expect_stage(expected)?;
                if a.k.is_some_and(|k| k != inst.k) {
                    return usage("--k conflicts with the bundle's k");
                }
                inst
            } else {
                let gpath = need(&a.graph, "--graph or --bundle", "this reduction")?;
                let g = load_graph(gpath)?;
                let ppath = need(&a.pairs, "--pairs", "a bare-graph instance")?;
                let pairs = in_file(ppath, read_pairs(&g, &read_text(ppath)?))?;
                let k = a.k.unwrap_or(1);
                if a.from == StageArg::P3 {
                    let qpath = need(&a.partial, "--partial", "a Problem 3 instance")?;
                    let partial = in_file(qpath, read_partial(&g, &read_text(qpath)?))?;
                    ReducedInstance::problem3(g, pairs, partial, k)?
                } else {
                    ReducedInstance::problem2(g, pairs, k)?
                }
            }
        }
        StageArg::P1 => unreachable!("p1 is last"),
    };
    let mut rank = stage_rank(a.from).max(1);
    while rank < stage_rank(a.to) {
        inst = match rank {
            1 => reduce_p3_to_p2(&inst)?,
            _ => reduce_p2_to_p1(&inst)?,
        };
        rank += 1;
    }
    let summary = format!(
        "{}: {} vertices, {} edges, {} required pairs, k = {}",
        inst.stage,
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.pairs.len(&inst.graph),
        inst.k
    );
    Ok(Output::text(write_bundle(&inst), EXIT_PASS).note(summary))
}

pub fn run_witness(a: &WitnessArgs) -> Result<Output, CliError> {
    let inst = load_bundle(&a.bundle)?;
    match a.direction {
        Direction::Lift => {
            let lifted = match inst.stage {
                Stage::P3 => {
                    let phi = inst.formula()?;
                    let text = need(&a.assignment, "--assignment", "lifting into a formula's instance")?;
                    let assignment = Assignment::parse_literals(text, phi.vars())?;
                    assignment_to_coloring(&inst, &assignment)?
                }
                Stage::P2 | Stage::P1 => {
                    let src = inst.source_instance()?;
                    let chi = load_coloring(&src.graph, need(&a.coloring, "--coloring", "lifting")?)?;
                    if inst.stage == Stage::P2 {
                        lift_coloring_p3_to_p2(&inst, &chi)?
                    } else {
                        lift_coloring_p2_to_p1(&inst, &chi)?
                    }
                }
            };
            Ok(Output::json(&ColoringJson::from_coloring(&inst.graph, &lifted), EXIT_PASS)
                .note(format!("lifted coloring verified on the {} instance", inst.stage)))
        }
        Direction::Restrict => {
            let chi = load_coloring(&inst.graph, need(&a.coloring, "--coloring", "restricting")?)?;
            let src = inst.source_instance()?;
            match inst.stage {
                Stage::P2 => {
                    let (raw, roles) = restrict_coloring_p2_to_p3(&inst, &chi)?;
                    let out = if a.normalize { roles.normalize(&raw) } else { raw };
                    Ok(Output::json(&ColoringJson::from_coloring(&src.graph, &out), EXIT_PASS).note(format!(
                        "class colors: E1 = {}, E2 = {}; restriction verified",
                        roles.class1, roles.class2
                    )))
                }
                Stage::P1 => {
                    let out = restrict_coloring_p1_to_p2(&inst, &chi)?;
                    Ok(Output::json(&ColoringJson::from_coloring(&src.graph, &out), EXIT_PASS)
                        .note("restriction verified"))
                }
                Stage::P3 => usage("a p3 bundle has no instance to restrict to; use --direction extract"),
            }
        }
        Direction::Extract => {
            inst.expect_stage(Stage::P3)?;
            let phi = inst.formula()?;
            let chi = load_coloring(&inst.graph, need(&a.coloring, "--coloring", "extracting")?)?;
            let a = coloring_to_assignment(&inst, &chi)?;
            Ok(Output::json(&assignment_value(phi, &a), EXIT_PASS))
        }
    }
}

fn assignment_value(phi: &CnfFormula, a: &Assignment) -> Value {
    let literals: Vec<String> = (1..=a.len())
        .map(|i| if a.value(i) { i.to_string() } else { format!("-{i}") })
        .collect();
    let unconstrained: Vec<usize> = (1..=a.len()).filter(|&i| a.is_unconstrained(i)).collect();
    json!({
        "assignment": literals.join(" "),
        "unconstrained": unconstrained,
        "satisfies": phi.evaluate(a),
    })
}

/// Outcome of one lift in a round trip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftCheck {
    Verified,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub formula: String,
    pub k: usize,
    pub truth_table_satisfiable: bool,
    pub extension: String,
    pub agreement: bool,
    pub nodes: u64,
    pub assignment: Option<Value>,
    pub p2_vertices: usize,
    pub p2_lift: LiftCheck,
    pub p1_vertices: usize,
    pub p1_lift: LiftCheck,
    pub notes: Vec<String>,
}

impl RoundtripReport {
    /// Everything that ran agreed and verified.
    pub fn passed(&self) -> bool {
        let sat_ok = self.assignment.as_ref().is_none_or(|a| a["satisfies"] == json!(true));
        self.agreement && sat_ok && self.p2_lift != LiftCheck::Failed && self.p1_lift != LiftCheck::Failed
    }
}

/// Runs the formula through the chain: decide the extension problem,
/// compare with the truth table, read back an assignment, and lift the
/// extension to the Problem 2 and Problem 1 instances.
pub fn run_roundtrip(
    phi: &CnfFormula,
    k: usize,
    opts: &SolveOptions,
    max_p1_vertices: usize,
) -> Result<RoundtripReport, CliError> {
    let truth = phi.is_satisfiable();
    let p3 = reduce_sat_to_p3(phi, k)?;
    let report = decide_extension(
        &p3.graph,
        p3.pair_set().expect("problem 3 has pairs"),
        p3.partial.as_ref().expect("problem 3 has a partial coloring"),
        k,
        opts,
    )?;
    let p2 = reduce_p3_to_p2(&p3)?;
    let n2 = p2.graph.vertex_count();
    let m = (k + 1) * (k + 1);
    let p1_vertices = n2 + m * (n2 + n2 * (n2 - 1) / 2 - p2.pairs.len(&p2.graph));
    let mut out = RoundtripReport {
        formula: phi.to_dimacs(),
        k,
        truth_table_satisfiable: truth,
        extension: report.outcome.status().to_string(),
        agreement: match report.outcome {
            Outcome::Found(_) => truth,
            Outcome::Impossible => !truth,
            Outcome::Exhausted => false,
        },
        nodes: report.nodes,
        assignment: None,
        p2_vertices: n2,
        p2_lift: LiftCheck::Skipped,
        p1_vertices,
        p1_lift: LiftCheck::Skipped,
        notes: Vec::new(),
    };
    let Outcome::Found(chi) = &report.outcome else {
        return Ok(out);
    };
    match coloring_to_assignment(&p3, chi) {
        Ok(a) => out.assignment = Some(assignment_value(phi, &a)),
        Err(e) => {
            out.assignment = Some(json!({"satisfies": false, "error": e.to_string()}));
        }
    }
    let chi2 = match lift_coloring_p3_to_p2(&p2, chi) {
        Ok(c) => {
            out.p2_lift = LiftCheck::Verified;
            c
        }
        Err(e) => {
            out.p2_lift = LiftCheck::Failed;
            out.notes.push(format!("p2 lift: {e}"));
            return Ok(out);
        }
    };
    if p1_vertices > max_p1_vertices {
        out.notes.push(format!(
            "p1 lift skipped: {p1_vertices} vertices exceed the limit of {max_p1_vertices}"
        ));
        return Ok(out);
    }
    let p1 = reduce_p2_to_p1(&p2)?;
    match lift_coloring_p2_to_p1(&p1, &chi2) {
        Ok(_) => out.p1_lift = LiftCheck::Verified,
        Err(e) => {
            out.p1_lift = LiftCheck::Failed;
            out.notes.push(format!("p1 lift: {e}"));
        }
    }
    Ok(out)
}

fn run_roundtrip_command(a: &RoundtripArgs) -> Result<Output, CliError> {
    let phi = load_cnf(&a.cnf)?;
    if a.k == 0 {
        return usage("--k must be at least 1");
    }
    let report = run_roundtrip(&phi, a.k, &a.budget.options()?, a.max_p1_vertices)?;
    let code = if report.extension == "exhausted" {
        EXIT_EXHAUSTED
    } else if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    Ok(Output::json(&report, code))
}

pub fn run_bounds(a: &BoundsArgs) -> Result<Output, CliError> {
    let g = load_graph(&a.graph)?;
    let report = bounds_report(&g, a.k, a.rc_rvc, &a.budget.options()?)?;
    Ok(Output::json(&report, EXIT_PASS))
}
