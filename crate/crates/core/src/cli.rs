//! The `fftile` command line.
//!
//! Reports go to standard output as JSON with sorted keys; a one-line
//! summary goes to standard error. Exit codes: 0 the property holds or the
//! object was found, 1 it fails or nothing was found, 2 usage, I/O or
//! precondition errors, 3 a result contradicting one of the structure
//! theorems.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::ffvec::{directions, FpVector, PointSet, PrimeModulus, Space};
use crate::fourier::{
    dft, equidistribution_check, hyperplane_stats, tiling_fourier_check, variance_decomposition,
    zero_set, RationalFunction,
};
use crate::manifest::Manifest;
use crate::packing::{
    isotropic_pack, optimal_packing_set, pack_circles, packing_number, sphere_pack_check,
    PackingMode, PackingResult, SetPacking, SphereCheck, DEFAULT_NODE_BUDGET,
};
use crate::polyring::{moment_identity_first, moment_identity_second, tiling_poly_check};
use crate::tiling::{
    classify_1_tiling, decompose_k_tiling, enumerate_tilings, find_tiling_partner,
    graph_tiling_partner, graphical_check, tiling_direct_check, GraphWitness, Graphical,
    KTilingStructure, PlaneClassification,
};

pub const NODE_BUDGET_VAR: &str = "FFTILE_NODE_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "fftile", version, about = "Exact tiling, Fourier and packing checks over F_p^d")]
pub struct Cli {
    /// Worker threads for the Fourier transforms (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tilings by translation.
    Tile {
        #[command(subcommand)]
        command: TileCommand,
    },
    /// Exact discrete Fourier transform.
    Fourier {
        #[command(subcommand)]
        command: FourierCommand,
    },
    /// The quotient polynomial ring and its moment identities.
    Poly {
        #[command(subcommand)]
        command: PolyCommand,
    },
    /// Circle, sphere and set packings.
    Pack {
        #[command(subcommand)]
        command: PackCommand,
    },
}

#[derive(Subcommand, Debug)]
enum TileCommand {
    /// Checks a k-tiling with the direct, Fourier and polynomial criteria.
    Verify {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Classifies a 1-tiling: plane trichotomy for d = 2, graphical test otherwise.
    Classify {
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        a: PathBuf,
    },
    /// Splits a k-tiling tile of the plane into disjoint graphs.
    Decompose {
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Finds a 1-tiling partner of E by exact cover.
    Search {
        #[arg(long)]
        e: PathBuf,
    },
    /// Lists tiling pairs (E, A) with |E| = size and 0 in E.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Re-verifies a graph witness, or a report embedding one.
    Witness {
        #[arg(long)]
        w: PathBuf,
        /// Set the witness should reproduce.
        #[arg(long)]
        e: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum FourierCommand {
    /// Fourier coefficients, all of them or those at the given frequencies.
    Spectrum {
        #[arg(long)]
        f: PathBuf,
        /// Frequency as comma-separated coordinates; repeatable.
        #[arg(long)]
        m: Vec<String>,
    },
    /// Nonzero frequencies where the transform vanishes.
    Zeros {
        #[arg(long)]
        f: PathBuf,
    },
    /// Hyperplane averages, their variance and Tr(|f^(m)|^2).
    Stats {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        m: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum PolyCommand {
    /// Polynomial tiling identity plus the size condition.
    Check {
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// First and second moment identities.
    Moments {
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        a: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Full,
    Nonzero,
}

#[derive(Subcommand, Debug)]
enum PackCommand {
    /// k disjoint circles of radius c, first centre at the origin.
    Circles {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        allow_zero_distance: bool,
    },
    /// Exact packing number P(p, c).
    Number {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
    },
    /// p circles centred on an isotropic line (p = 1 mod 4).
    Isotropic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: u64,
    },
    /// Checks that no translate of the sphere x.x = t misses it.
    Sphere {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: u64,
        /// Allow d < 4.
        #[arg(long)]
        exploratory: bool,
    },
    /// Largest set of pairwise disjoint translates of E.
    Set {
        #[arg(long)]
        e: PathBuf,
    },
    /// Re-verifies a circle packing, or a report embedding one.
    Verify {
        #[arg(long)]
        r: PathBuf,
    },
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    fn new(holds: bool, report: Value, summary: impl Into<String>) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            report,
            summary: summary.into(),
        }
    }
}

/// Captured result of [`run_captured`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InternalContradiction(_) => 3,
        _ => 2,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_captured<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli) {
        Ok(out) => Output {
            code: out.code,
            stdout: serde_json::to_string_pretty(&out.report).expect("json") + "\n",
            stderr: out.summary + "\n",
        },
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run_captured(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn execute(cli: Cli) -> Result<Outcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Manifest(format!("thread pool: {e}")))?;
    pool.install(|| match cli.command {
        Command::Tile { command } => tile(command),
        Command::Fourier { command } => fourier(command),
        Command::Poly { command } => poly(command),
        Command::Pack { command } => pack(command),
    })
}

fn node_budget() -> Result<u64> {
    match std::env::var(NODE_BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Manifest(format!("{NODE_BUDGET_VAR} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serialises")
}

fn load_set(path: &Path) -> Result<PointSet> {
    Manifest::load(path)?.to_set()
}

fn load_function(path: &Path) -> Result<RationalFunction> {
    Manifest::load(path)?.to_function()
}

fn load_pair(e: &Path, a: &Path) -> Result<(PointSet, PointSet)> {
    let e = load_set(e)?;
    let a = load_set(a)?;
    e.check_same_space(&a)?;
    Ok((e, a))
}

fn load_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))
}

/// The object itself, or the first value found under one of `keys`.
fn embedded<T: serde::de::DeserializeOwned>(value: &Value, keys: &[&str]) -> Result<T> {
    if let Ok(x) = serde_json::from_value(value.clone()) {
        return Ok(x);
    }
    for key in keys {
        if let Some(inner) = value.pointer(key) {
            if let Ok(x) = serde_json::from_value(inner.clone()) {
                return Ok(x);
            }
        }
    }
    Err(Error::Manifest(format!("no object found at {keys:?}")))
}

fn points(set: &PointSet) -> Value {
    to_value(&set.iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>())
}

fn cyc(c: &CycNum) -> Value {
    to_value(&c.coeffs().iter().map(|q| q.to_string()).collect::<Vec<_>>())
}

fn rat(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn parse_vector(space: Space, text: &str) -> Result<FpVector> {
    let coords = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidPoint(text.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    space.vector(&coords)
}

fn tile(command: TileCommand) -> Result<Outcome> {
    match command {
        TileCommand::Verify { p, d, e, a, k } => {
            let (e, a) = load_pair(&e, &a)?;
            if p.is_some_and(|p| p != e.modulus().get()) || d.is_some_and(|d| d != e.dim()) {
                return Err(Error::Manifest("manifests do not match --p/--d".into()));
            }
            let direct = tiling_direct_check(&e, &a, k)?;
            let fourier = tiling_fourier_check(&e, &a, k)?;
            let polynomial = tiling_poly_check(&e, &a, k)?;
            let agree = direct.holds == fourier && fourier == polynomial;
            let report = json!({
                "direct": to_value(&direct),
                "fourier": fourier,
                "polynomial": polynomial,
                "agree": agree,
                "holds": direct.holds,
            });
            if !agree {
                return Ok(Outcome {
                    code: 3,
                    report,
                    summary: "tiling oracles disagree".into(),
                });
            }
            let verdict = if direct.holds { "is" } else { "is not" };
            Ok(Outcome::new(
                direct.holds,
                report,
                format!("E {verdict} a {k}-tiling by A (all three oracles agree)"),
            ))
        }
        TileCommand::Classify { e, a } => {
            let (e, a) = load_pair(&e, &a)?;
            if e.dim() == 2 {
                let class = classify_1_tiling(&e, &a)?;
                let summary = match &class {
                    PlaneClassification::Singleton => "E is a single point".to_string(),
                    PlaneClassification::Full => "E is the whole plane".to_string(),
                    PlaneClassification::Graph { witness } => {
                        format!("E is a graph ({} basis)", to_value(&witness.kind).as_str().unwrap_or("?"))
                    }
                };
                let mut report = to_value(&class);
                if let PlaneClassification::Graph { witness } = &class {
                    report["partner"] = points(&graph_tiling_partner(witness)?);
                }
                Ok(Outcome::new(true, report, summary))
            } else {
                let g = graphical_check(&e, &a)?;
                let summary = match &g {
                    Graphical::EIsGraph { .. } => "E is a graph",
                    Graphical::AIsGraph { .. } => "A is a graph",
                    Graphical::Neither => "neither E nor A is a graph",
                    Graphical::Undetermined => "graph detection does not cover these sizes",
                };
                Ok(Outcome::new(g.is_graphical(), to_value(&g), summary))
            }
        }
        TileCommand::Decompose { e, a, k } => {
            let (e, a) = load_pair(&e, &a)?;
            let structure = decompose_k_tiling(&e, &a, k)?;
            let summary = match &structure {
                KTilingStructure::KPoints { k } => format!("E is {k} points and A the plane"),
                KTilingStructure::FullPlane { k } => format!("E is the plane and |A| = {k}"),
                KTilingStructure::Graphs(g) => format!("E is a union of {} graphs", g.s),
            };
            Ok(Outcome::new(true, to_value(&structure), summary))
        }
        TileCommand::Search { e } => {
            let e = load_set(&e)?;
            match find_tiling_partner(&e)? {
                Some(a) => Ok(Outcome::new(
                    true,
                    json!({ "found": true, "partner": to_value(&Manifest::from_set(&a)) }),
                    format!("found a partner of size {}", a.len()),
                )),
                None => Ok(Outcome::new(
                    false,
                    json!({ "found": false }),
                    "E does not 1-tile",
                )),
            }
        }
        TileCommand::Enumerate { p, d, size, limit } => {
            let space = Space::new(PrimeModulus::new(p)?, d)?;
            let found = enumerate_tilings(space, size, limit)?;
            let pairs: Vec<Value> = found
                .iter()
                .map(|t| json!({ "e": points(&t.e), "a": points(&t.a) }))
                .collect();
            let n = pairs.len();
            Ok(Outcome::new(
                n > 0,
                json!({ "pairs": pairs }),
                format!("{n} tiling pairs"),
            ))
        }
        TileCommand::Witness { w, e } => {
            let value = load_json(&w)?;
            let witness: GraphWitness = embedded(&value, &["/witness"])?;
            let graph = witness.reconstruct()?;
            let partner = graph_tiling_partner(&witness)?;
            let tiles = tiling_direct_check(&graph, &partner, 1)?.holds;
            let matches = match e {
                Some(path) => Some(load_set(&path)? == graph),
                None => None,
            };
            let holds = tiles && matches.unwrap_or(true);
            Ok(Outcome::new(
                holds,
                json!({
                    "graph": points(&graph),
                    "partner": points(&partner),
                    "partner_tiles": tiles,
                    "matches_set": matches,
                    "valid": holds,
                }),
                if holds { "witness verified" } else { "witness rejected" },
            ))
        }
    }
}

/// The set whose indicator `f` is, if it is one.
fn as_indicator(f: &RationalFunction) -> Option<PointSet> {
    let mut idx = Vec::new();
    for (i, v) in f.values().iter().enumerate() {
        if v.is_one() {
            idx.push(i);
        } else if !v.is_zero() {
            return None;
        }
    }
    Some(PointSet::from_indices(f.space(), idx))
}

fn fourier(command: FourierCommand) -> Result<Outcome> {
    match command {
        FourierCommand::Spectrum { f, m } => {
            let f = load_function(&f)?;
            let space = f.space();
            let spectrum = dft(&f);
            let freqs: Vec<FpVector> = if m.is_empty() {
                space.points().collect()
            } else {
                m.iter().map(|t| parse_vector(space, t)).collect::<Result<_>>()?
            };
            let coefficients: Vec<Value> = freqs
                .iter()
                .map(|m| json!({ "m": m.coords(), "coeffs": cyc(spectrum.get(m)) }))
                .collect();
            Ok(Outcome::new(
                true,
                json!({
                    "p": space.p(),
                    "d": space.dim(),
                    "galois_symmetric": spectrum.is_galois_symmetric(),
                    "coefficients": coefficients,
                }),
                format!("{} coefficients in the basis 1, xi, ..., xi^(p-2)", freqs.len()),
            ))
        }
        FourierCommand::Zeros { f } => {
            let f = load_function(&f)?;
            let space = f.space();
            let zeros = zero_set(&dft(&f));
            let equidistributed = match as_indicator(&f) {
                Some(set) => directions(space.modulus(), space.dim())
                    .iter()
                    .map(|m| equidistribution_check(&set, m))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .filter(|eq| eq.equidistributed)
                    .map(|eq| to_value(&eq.direction.coords()))
                    .collect(),
                None => Vec::new(),
            };
            let n = zeros.len();
            Ok(Outcome::new(
                n > 0,
                json!({ "zeros": points(&zeros), "equidistributed_directions": equidistributed }),
                format!("{n} nonzero frequencies where the transform vanishes"),
            ))
        }
        FourierCommand::Stats { f, m } => {
            let f = load_function(&f)?;
            let space = f.space();
            let dirs: Vec<FpVector> = if m.is_empty() {
                directions(space.modulus(), space.dim())
            } else {
                m.iter().map(|t| parse_vector(space, t)).collect::<Result<_>>()?
            };
            let stats = dirs
                .iter()
                .map(|m| {
                    let s = hyperplane_stats(&f, m)?;
                    Ok(json!({
                        "direction": s.direction.coords(),
                        "averages": s.averages.iter().map(rat).collect::<Vec<_>>(),
                        "mean": rat(&s.mean),
                        "variance": rat(&s.variance),
                        "trace_abs_sq": rat(&s.trace_abs_sq),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            let (lhs, rhs) = variance_decomposition(&f)?;
            let holds = lhs == rhs;
            if !holds {
                return Err(Error::InternalContradiction(
                    "variance decomposition fails".into(),
                ));
            }
            Ok(Outcome::new(
                true,
                json!({
                    "directions": stats,
                    "mean_square": rat(&lhs),
                    "decomposition_rhs": rat(&rhs),
                }),
                "hyperplane variances equal Tr(|f^(m)|^2)",
            ))
        }
    }
}

fn poly(command: PolyCommand) -> Result<Outcome> {
    match command {
        PolyCommand::Check { e, a, k } => {
            let (e, a) = load_pair(&e, &a)?;
            let holds = tiling_poly_check(&e, &a, k)?;
            Ok(Outcome::new(
                holds,
                json!({ "holds": holds, "level": k }),
                if holds { "polynomial identity holds" } else { "polynomial identity fails" },
            ))
        }
        PolyCommand::Moments { e, a } => {
            let (e, a) = load_pair(&e, &a)?;
            let first = moment_identity_first(&e, &a)?;
            let second = (0..e.dim())
                .map(|j| moment_identity_second(&e, &a, j).map(|s| s.value()))
                .collect::<Result<Vec<_>>>()?;
            let vanish = first.is_zero() && second.iter().all(|&s| s == 0);
            Ok(Outcome::new(
                vanish,
                json!({ "first": first.coords(), "second": second, "vanish": vanish }),
                if vanish { "both moments vanish" } else { "a moment identity is nonzero" },
            ))
        }
    }
}

fn radius(p: u64, c: u64) -> Result<crate::ffvec::FpScalar> {
    let m = PrimeModulus::new(p)?;
    let c = m.scalar(c % p);
    if c.is_zero() {
        return Err(Error::ZeroRadius);
    }
    Ok(c)
}

fn pack(command: PackCommand) -> Result<Outcome> {
    match command {
        PackCommand::Circles {
            p,
            c,
            k,
            allow_zero_distance,
        } => {
            let c = radius(p, c)?;
            match pack_circles(c, k, allow_zero_distance, node_budget()?)? {
                Some(r) => Ok(Outcome::new(
                    true,
                    json!({ "found": true, "packing": to_value(&r) }),
                    format!("{k} disjoint circles found"),
                )),
                None => Ok(Outcome::new(
                    false,
                    json!({ "found": false }),
                    format!("no {k} disjoint circles"),
                )),
            }
        }
        PackCommand::Number { p, c, mode } => {
            let c = radius(p, c)?;
            let mode = match mode {
                ModeArg::Full => PackingMode::Full,
                ModeArg::Nonzero => PackingMode::NonzeroDistanceOnly,
            };
            let r = packing_number(c, mode, node_budget()?)?;
            let n = r.size();
            Ok(Outcome::new(
                true,
                json!({ "value": n, "mode": to_value(&mode), "packing": to_value(&r) }),
                format!("P({p}, {}) = {n}", c.value()),
            ))
        }
        PackCommand::Isotropic { p, c } => {
            let iso = isotropic_pack(radius(p, c)?)?;
            let holds = iso.packing.certified && iso.complement_is_line;
            Ok(Outcome::new(
                holds,
                to_value(&iso),
                format!("{} disjoint circles on an isotropic line", iso.packing.size()),
            ))
        }
        PackCommand::Sphere { p, d, t, exploratory } => {
            let t = PrimeModulus::new(p)?.scalar(t % p);
            let check = sphere_pack_check(t, d, exploratory)?;
            if let SphereCheck::Counterexample { shift } = &check {
                if d >= 4 {
                    return Err(Error::InternalContradiction(format!(
                        "a translate by {shift:?} misses the sphere"
                    )));
                }
            }
            let n = check.max_packing();
            let mut report = to_value(&check);
            report["max_packing"] = to_value(&n);
            Ok(Outcome::new(
                n == Some(1),
                report,
                match n {
                    Some(_) => "every translate meets the sphere: optimal packing has size 1".into(),
                    None => "some translate misses the sphere".to_string(),
                },
            ))
        }
        PackCommand::Set { e } => {
            let e = load_set(&e)?;
            let (a, density) = optimal_packing_set(&e, node_budget()?)?;
            Ok(Outcome::new(
                true,
                to_value(&SetPacking::new(&a, &density)),
                format!("{} translates, density {density}", a.len()),
            ))
        }
        PackCommand::Verify { r } => {
            let value = load_json(&r)?;
            let packing: PackingResult = embedded(&value, &["/packing"])?;
            let ok = packing.verify()?;
            Ok(Outcome::new(
                ok,
                json!({ "size": packing.size(), "disjoint": ok }),
                if ok { "circles are pairwise disjoint" } else { "circles intersect" },
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run_captured(std::iter::once("fftile").chain(args.iter().copied()))
    }

    #[test]
    fn packing_number_of_three() {
        let out = run_args(&["pack", "number", "--p", "3", "--c", "1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["value"], 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["pack"]).code, 2);
        assert_eq!(run_args(&["pack", "number", "--p", "4", "--c", "1"]).code, 2);
        assert_eq!(run_args(&["pack", "number", "--p", "5", "--c", "5"]).code, 2);
        assert_eq!(run_args(&["tile", "verify", "--e", "/nonexistent", "--a", "/x", "--k", "1"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn sphere_exit_codes() {
        assert_eq!(run_args(&["pack", "sphere", "--p", "3", "--d", "4", "--t", "1"]).code, 0);
        assert_eq!(run_args(&["pack", "sphere", "--p", "3", "--d", "2", "--t", "1"]).code, 2);
        let out = run_args(&["pack", "sphere", "--p", "5", "--d", "2", "--t", "1", "--exploratory"]);
        assert_eq!(out.code, 1);
    }
}
