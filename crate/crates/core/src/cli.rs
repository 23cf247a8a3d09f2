//! The `liecoh` command line: loads algebras and subalgebras, dispatches one
//! computation per invocation and writes JSON or aligned text.
//!
//! Exit codes: 0 on success, 1 when a check fails (Jacobi, verification
//! reports, obstructed solves under `--strict`), 2 on input errors.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Builtin, LieAlgebra, StructureClass, Subalgebra};
use crate::bigraded::{adapt, bigraded_cohomology_dims, hs_module_cohomology_dims};
use crate::cecomplex::ce_cohomology_dims;
use crate::error::{Error, Result};
use crate::exactnum::{ExactVector, GaussianRational};
use crate::hodge::{harmonic_dims, laplacian, HodgeProblem};
use crate::levi_roots::{
    characteristic_basis, hypocomplexity_flag_with, levi_form, levi_signature, levi_signature_float, root_decomposition,
    standard_structure, CharacteristicCovector, HypocomplexityFlag,
};
use crate::reports::{verify_bott_corollary, verify_product_identity, verify_su3_tables, VerificationReport};
use crate::torus_solver::{liouville_scales, resonant_modes, small_divisor_profile, solve, FourierForm, MuParameter};

/// Environment variable capping the worker threads used for parallel ranks.
pub const THREADS_ENV: &str = "LIECOH_THREADS";

#[derive(Parser, Debug)]
#[command(name = "liecoh", version, about = "Exact cohomology of Lie algebras and involutive structures")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Exit with status 1 when a solve reports obstructions.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Print timing to the error stream.
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct AlgebraSource {
    /// Built-in algebra: su2, su3, heisenberg3, torus(r).
    #[arg(long)]
    pub builtin: Option<String>,
    /// Algebra JSON file.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SubalgebraArgs {
    #[command(flatten)]
    pub source: AlgebraSource,
    /// Subalgebra as inline JSON `{"span": [[...]]}` or `@file`; defaults to the whole algebra.
    #[arg(long)]
    pub sub: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an algebra (antisymmetry and Jacobi identity).
    Check(AlgebraSource),
    /// Classify a subalgebra as elliptic, complex, CR or essentially real.
    Classify(SubalgebraArgs),
    /// Chevalley–Eilenberg cohomology dimensions.
    Cohomology(AlgebraSource),
    /// Bigraded cohomology dimensions, cross-checked against the module complex.
    Bigraded {
        #[command(flatten)]
        args: SubalgebraArgs,
        /// Only this quotient degree.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Harmonic-space dimensions of the bigraded Laplacian.
    Hodge {
        #[command(flatten)]
        args: SubalgebraArgs,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Characteristic covectors, Levi form, signature and the grid flag.
    Levi {
        #[command(flatten)]
        args: SubalgebraArgs,
        /// Coordinates of ξ over the characteristic basis, e.g. `["0","1"]`.
        #[arg(long)]
        xi: Option<String>,
        /// Largest denominator of the hypocomplexity grid.
        #[arg(long, default_value_t = 4)]
        grid: u32,
    },
    /// Root decomposition with respect to a torus.
    Roots {
        #[command(flatten)]
        source: AlgebraSource,
        /// Torus vectors as JSON `[[...], ...]` or `@file`; built-ins default to their maximal torus.
        #[arg(long)]
        torus: Option<String>,
    },
    /// The standard structure from s real torus vectors and t complex pairs.
    Standard {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        torus: Option<String>,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Solve (∂x − μ∂y)u = f on the two-torus.
    TorusSolve {
        /// `p/q`, `float:<value>` or `liouville:<k>`.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Right-hand side as a Fourier JSON file.
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Also report resonances and small divisors up to this radius.
        #[arg(long)]
        profile: Option<i64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Write the algebra JSON of a built-in or file.
    Export(AlgebraSource),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Su3Tables,
    Bott,
    Product,
    All,
}

/// Outcome of one command before rendering.
struct Outcome {
    value: Value,
    /// Preformatted text rendering, when the generic one is not wanted.
    text: Option<String>,
    code: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Self {
            value,
            text: None,
            code: 0,
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build();
    let start = Instant::now();
    let result = match &pool {
        Ok(pool) => pool.install(|| execute(&cli)),
        Err(_) => execute(&cli),
    };
    if cli.verbose {
        let _ = writeln!(err, "elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(outcome) => {
            let rendered = match (cli.format, &outcome.text) {
                (Format::Json, _) => serde_json::to_string(&outcome.value).expect("values serialize"),
                (Format::Text, Some(text)) => text.trim_end().to_string(),
                (Format::Text, None) => render_text(&outcome.value),
            };
            let _ = writeln!(out, "{rendered}");
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::JacobiFailure(..) => 1,
                _ => 2,
            }
        }
    }
}

fn load_algebra(src: &AlgebraSource) -> Result<(LieAlgebra, Option<Builtin>)> {
    let (g, b) = match (&src.builtin, &src.algebra) {
        (Some(name), _) => {
            let b = Builtin::parse(name)?;
            (b.algebra(), Some(b))
        }
        (None, Some(path)) => (LieAlgebra::from_json(&read_file(path)?)?, None),
        (None, None) => return Err(Error::InvalidAlgebra("pass --builtin or --algebra".into())),
    };
    g.validate_jacobi()?;
    Ok((g, b))
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))
}

/// Inline JSON or `@path`.
fn inline_or_file(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => read_file(&PathBuf::from(path)),
        None => Ok(arg.to_string()),
    }
}

fn load_sub<'g>(g: &'g LieAlgebra, sub: &Option<String>) -> Result<Subalgebra<'g>> {
    match sub {
        Some(arg) => Subalgebra::from_json(g, &inline_or_file(arg)?),
        None => Ok(Subalgebra::whole(g)),
    }
}

fn load_torus(g: &LieAlgebra, builtin: Option<Builtin>, arg: &Option<String>) -> Result<Vec<ExactVector>> {
    match arg {
        Some(text) => Ok(serde_json::from_str(&inline_or_file(text)?)?),
        None => builtin
            .and_then(Builtin::torus_indices)
            .map(|idx| idx.iter().map(|&k| g.basis_vector(k)).collect())
            .ok_or_else(|| Error::InvalidParameters("this algebra has no declared torus; pass --torus".into())),
    }
}

fn vectors(vs: &[ExactVector]) -> Value {
    json!(vs)
}

fn class_json(c: StructureClass) -> Value {
    serde_json::to_value(c).expect("flags serialize")
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check(src) => {
            let (g, _) = match (&src.builtin, &src.algebra) {
                (None, Some(path)) => (LieAlgebra::from_json(&read_file(path)?)?, None::<Builtin>),
                _ => {
                    let b = Builtin::parse(src.builtin.as_deref().unwrap_or_default())?;
                    (b.algebra(), Some(b))
                }
            };
            match g.check_jacobi() {
                Ok(()) => Ok(Outcome::ok(json!({"algebra": g.name(), "dim": g.dim(), "jacobi": "ok"}))),
                Err((i, j, k)) => {
                    let names = g.basis_names();
                    Ok(Outcome {
                        value: json!({
                            "algebra": g.name(),
                            "dim": g.dim(),
                            "jacobi": "fail",
                            "witness": [names[i], names[j], names[k]],
                        }),
                        text: None,
                        code: 1,
                    })
                }
            }
        }
        Command::Classify(args) => {
            let (g, _) = load_algebra(&args.source)?;
            let h = load_sub(&g, &args.sub)?;
            Ok(Outcome::ok(class_json(h.classify())))
        }
        Command::Cohomology(src) => {
            let (g, _) = load_algebra(src)?;
            Ok(Outcome::ok(json!({"dims": ce_cohomology_dims(&g)?})))
        }
        Command::Bigraded { args, p } => {
            let (g, _) = load_algebra(&args.source)?;
            let h = load_sub(&g, &args.sub)?;
            let ps: Vec<usize> = match p {
                Some(p) => vec![*p],
                None => (0..=g.dim() - h.dim()).collect(),
            };
            let mut rows = Vec::new();
            let mut agree = true;
            for &p in &ps {
                let dims = bigraded_cohomology_dims(&h, p);
                let module = hs_module_cohomology_dims(&h, p);
                agree &= dims == module;
                rows.push(json!({"p": p, "dims": dims, "module_dims": module}));
            }
            Ok(Outcome {
                value: json!({"n": h.dim(), "m": g.dim() - h.dim(), "bidegrees": rows, "cross_check": agree}),
                text: None,
                code: if agree { 0 } else { 1 },
            })
        }
        Command::Hodge { args, p } => {
            let (g, _) = load_algebra(&args.source)?;
            let h = load_sub(&g, &args.sub)?;
            let ps: Vec<usize> = match p {
                Some(p) => vec![*p],
                None => (0..=g.dim() - h.dim()).collect(),
            };
            let adapted = adapt(&h);
            let mut rows = Vec::new();
            let mut ok = true;
            for &p in &ps {
                let harmonic = harmonic_dims(&h, p);
                let cohomology = adapted.cohomology_dims(p);
                let hermitian = (0..=h.dim()).all(|q| laplacian(&HodgeProblem::bigraded(&adapted, p, q)).is_hermitian());
                ok &= hermitian && harmonic == cohomology;
                rows.push(json!({"p": p, "harmonic_dims": harmonic, "cohomology_dims": cohomology, "hermitian": hermitian}));
            }
            Ok(Outcome {
                value: json!({"bidegrees": rows, "cross_check": ok}),
                text: None,
                code: if ok { 0 } else { 1 },
            })
        }
        Command::Levi { args, xi, grid } => {
            let (g, _) = load_algebra(&args.source)?;
            let h = load_sub(&g, &args.sub)?;
            levi_command(&h, xi.as_deref(), *grid)
        }
        Command::Roots { source, torus } => {
            let (g, b) = load_algebra(source)?;
            let t = load_torus(&g, b, torus)?;
            let rd = root_decomposition(&g, &t)?;
            let roots: Vec<Value> = rd
                .roots()
                .iter()
                .map(|r| json!({"alpha": r.alpha, "positive": r.is_positive(), "space": vectors(&r.space)}))
                .collect();
            Ok(Outcome::ok(json!({
                "torus": vectors(rd.torus()),
                "zero_space": vectors(rd.zero_space()),
                "roots": roots,
                "total_dim": rd.total_dim(),
            })))
        }
        Command::Standard { source, torus, s, t } => {
            let (g, b) = load_algebra(source)?;
            let tv = load_torus(&g, b, torus)?;
            let rd = root_decomposition(&g, &tv)?;
            let h = standard_structure(&rd, *s, *t)?;
            Ok(Outcome::ok(json!({"span": vectors(h.span()), "class": class_json(h.classify())})))
        }
        Command::TorusSolve { mu, rhs, profile } => torus_command(cli, mu, rhs.as_ref(), *profile),
        Command::Verify { suite } => {
            let report = run_suite(*suite)?;
            let code = if report.all_pass { 0 } else { 1 };
            Ok(Outcome {
                value: serde_json::to_value(&report).expect("report serializes"),
                text: Some(report.to_text()),
                code,
            })
        }
        Command::Export(src) => {
            let (g, _) = load_algebra(src)?;
            Ok(Outcome {
                value: serde_json::to_value(g.to_file()).expect("algebra serializes"),
                text: Some(g.to_json()),
                code: 0,
            })
        }
    }
}

fn levi_command(h: &Subalgebra<'_>, xi: Option<&str>, grid: u32) -> Result<Outcome> {
    let basis = characteristic_basis(h);
    let basis_json: Vec<&[GaussianRational]> = basis.iter().map(CharacteristicCovector::coeffs).collect();
    let mut value = json!({"class": class_json(h.classify()), "characteristic_basis": basis_json});
    if let Some(text) = xi {
        let coords: Vec<GaussianRational> = serde_json::from_str(&inline_or_file(text)?)?;
        if coords.len() != basis.len() || coords.iter().any(|c| !c.is_real()) {
            return Err(Error::NotCharacteristic);
        }
        let reals: Vec<BigRational> = coords.iter().map(|c| c.re().clone()).collect();
        let covector = CharacteristicCovector::combine(h, &basis, &reals)?;
        let m = levi_form(h, &covector)?;
        let exact = levi_signature(&m);
        let float = levi_signature_float(&m);
        value["xi"] = json!(covector.coeffs());
        value["levi"] = json!(m.matrix().to_dense());
        value["signature"] = json!(exact);
        value["float_signature"] = json!(float);
        value["float_agrees"] = json!(exact == float);
    }
    if !basis.is_empty() {
        let flag = hypocomplexity_flag_with(h, grid)?;
        let mut f = json!({"summary": flag.describe(), "label": HypocomplexityFlag::GRID_LABEL});
        match &flag {
            HypocomplexityFlag::FailsAtWitness {
                coordinates, signature, ..
            } => {
                f["result"] = json!("fails_at_witness");
                f["witness"] = json!(coordinates.iter().map(ToString::to_string).collect::<Vec<_>>());
                f["signature"] = json!(signature);
            }
            HypocomplexityFlag::IndefiniteOnGrid { points, .. } => {
                f["result"] = json!("indefinite_on_grid");
                f["points"] = json!(points);
            }
            HypocomplexityFlag::Vacuous => f["result"] = json!("vacuous"),
        }
        value["hypocomplexity"] = f;
    } else {
        value["hypocomplexity"] = json!({"result": "vacuous", "summary": HypocomplexityFlag::Vacuous.describe()});
    }
    Ok(Outcome::ok(value))
}

#[derive(Serialize)]
struct ModeJson {
    xi: i64,
    eta: i64,
}

fn torus_command(cli: &Cli, mu: &str, rhs: Option<&PathBuf>, profile: Option<i64>) -> Result<Outcome> {
    let mu: MuParameter = mu.parse()?;
    let mut value = json!({"mu": mu.to_string(), "mu_value": mu.value()});
    let mut code = 0;
    if let Some(path) = rhs {
        let f = FourierForm::from_json(&read_file(path)?)?;
        let sol = solve(&mu, &f);
        let obstructions: Vec<ModeJson> = sol.obstructions.iter().map(|&(xi, eta)| ModeJson { xi, eta }).collect();
        value["solution"] = json!(sol.solution.to_file());
        value["obstructions"] = json!(obstructions);
        value["residual"] = json!(sol.residual);
        if cli.strict && sol.is_obstructed() {
            code = 1;
        }
    }
    if let Some(r) = profile {
        let resonant: Vec<ModeJson> = resonant_modes(&mu, r).into_iter().map(|(xi, eta)| ModeJson { xi, eta }).collect();
        value["resonant_modes"] = json!(resonant);
        value["profile"] = json!(small_divisor_profile(&mu, r));
        let scales = liouville_scales(&mu, r);
        if !scales.is_empty() {
            value["liouville_scales"] = json!(scales);
        }
    }
    Ok(Outcome {
        value,
        text: None,
        code,
    })
}

fn run_suite(suite: Suite) -> Result<VerificationReport> {
    let tables = || verify_su3_tables();
    let bott = || -> Result<VerificationReport> {
        let mut r = VerificationReport::new("bott");
        for b in [Builtin::Su2, Builtin::Su3] {
            let g = b.algebra();
            let t: Vec<ExactVector> = b.torus_indices().unwrap_or_default().iter().map(|&k| g.basis_vector(k)).collect();
            r.merge(verify_bott_corollary(&g, &t)?);
        }
        Ok(r)
    };
    let product = || -> Result<VerificationReport> {
        let mut r = VerificationReport::new("product");
        for b in [Builtin::Su2, Builtin::Su3] {
            let g = b.algebra();
            let t: Vec<ExactVector> = b.torus_indices().unwrap_or_default().iter().map(|&k| g.basis_vector(k)).collect();
            let rd = root_decomposition(&g, &t)?;
            let u: Vec<ExactVector> = rd.positive_roots().flat_map(|root| root.space.clone()).collect();
            r.merge(verify_product_identity(&g, &t, &u)?);
        }
        Ok(r)
    };
    Ok(match suite {
        Suite::Su3Tables => tables(),
        Suite::Bott => bott()?,
        Suite::Product => product()?,
        Suite::All => {
            let mut r = VerificationReport::new("all");
            r.merge(tables());
            r.merge(bott()?);
            r.merge(product()?);
            r
        }
    })
}

/// `key: value` lines; nested values are written as compact JSON.
fn render_text(value: &Value) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}
