//! The `wcinv` command line: compute, verify, ep and oracle over the JSON
//! formats of [`crate::codec`].
//!
//! Exit codes: 0 when a computation ran (including negative answers such as
//! "no e-core inverse"), 1 when a verification or oracle sweep fails, 2 for
//! malformed input or a refused enumeration space.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::characterize::{self, Decomposition, Flavor, Side};
use crate::codec;
use crate::error::{Error, NotInvertible, Result};
use crate::ginverse::{self, GInverseKind, MAX_POWER};
use crate::matrix::{Mat, Weight};
use crate::oracle::{self, Sample};
use crate::random::rng_from_seed;
use crate::scalar::{Backend, GaussianRational, Rational, StarScalar, F2, F3, F5};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wcinv",
    version,
    about = "Exact weighted core and related inverses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an inverse and print its certificate.
    Compute(ComputeArgs),
    /// Replay a certificate or decomposition against a.
    Verify(VerifyArgs),
    /// Decide weighted-EP with respect to (e, f).
    Ep(EpArgs),
    /// Differential sweep against brute-force enumeration over M_dim(F_p).
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct Operands {
    /// Matrix a (JSON).
    #[arg(long)]
    pub a: PathBuf,
    /// Weight e (JSON); identity when omitted.
    #[arg(long)]
    pub e: Option<PathBuf>,
    /// Weight f (JSON); identity when omitted.
    #[arg(long)]
    pub f: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub kind: GInverseKind,
    #[command(flatten)]
    pub operands: Operands,
    /// Power for the ecore/fdualcore power representations and decompositions.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_POWER as i64))]
    pub n: Option<u32>,
    /// Emit a decomposition certificate of this flavor instead (ecore/fdualcore only).
    #[arg(long, value_parser = ["p", "s", "q", "t"])]
    pub decompose: Option<String>,
    /// Draw a random element witness for flavors s/t.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Certificate or decomposition (JSON).
    #[arg(long)]
    pub cert: PathBuf,
    #[command(flatten)]
    pub operands: Operands,
}

#[derive(Debug, Args)]
pub struct EpArgs {
    #[command(flatten)]
    pub operands: Operands,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Field size: 2, 3 or 5.
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=MAX_POWER as i64))]
    pub n: u32,
    /// Number of random instances; requires --seed.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced: a JSON document and an exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Response {
    pub body: Value,
    pub code: i32,
}

impl Response {
    fn ok(body: Value) -> Self {
        Response {
            body,
            code: EXIT_OK,
        }
    }
}

/// Parse `args` (program name first) and run. Results go to `out` or the
/// `--out` file, diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INVALID;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let target = match &cli.command {
        Command::Compute(c) => c.operands.out.clone(),
        Command::Verify(c) => c.operands.out.clone(),
        Command::Ep(c) => c.operands.out.clone(),
        Command::Oracle(c) => c.out.clone(),
    };
    match execute(&cli.command) {
        Ok(resp) => match emit(&resp.body, target.as_deref(), out) {
            Ok(()) => resp.code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INVALID
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn emit(body: &Value, target: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(body).expect("JSON values serialize");
    text.push('\n');
    match target {
        Some(path) => fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    }
}

macro_rules! dispatch {
    ($backend:expr, $f:ident($($arg:expr),*)) => {
        match $backend {
            Backend::Rational => $f::<Rational>($($arg),*),
            Backend::GaussianRational => $f::<GaussianRational>($($arg),*),
            Backend::PrimeField(2) => $f::<F2>($($arg),*),
            Backend::PrimeField(3) => $f::<F3>($($arg),*),
            Backend::PrimeField(5) => $f::<F5>($($arg),*),
            Backend::PrimeField(p) => Err(Error::Malformed(format!("unsupported modulus {p}"))),
        }
    };
}

/// Run a parsed command.
pub fn execute(command: &Command) -> Result<Response> {
    match command {
        Command::Compute(args) => {
            let a = read_json(&args.operands.a)?;
            dispatch!(codec::backend_of(&a)?, compute(args, &a))
        }
        Command::Verify(args) => {
            let a = read_json(&args.operands.a)?;
            dispatch!(codec::backend_of(&a)?, verify(args, &a))
        }
        Command::Ep(args) => {
            let a = read_json(&args.operands.a)?;
            dispatch!(codec::backend_of(&a)?, ep(args, &a))
        }
        Command::Oracle(args) => dispatch_finite(args),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Malformed(format!("{} is not valid JSON: {e}", path.display())))
}

struct Loaded<S> {
    a: Mat<S>,
    e: Weight<S>,
    f: Weight<S>,
}

fn load<S: StarScalar>(ops: &Operands, a: &Value) -> Result<Loaded<S>> {
    let a: Mat<S> = codec::mat_from_json(a)?;
    let weight = |path: &Option<PathBuf>| -> Result<Weight<S>> {
        match path {
            None => Ok(Weight::identity(a.dim())),
            Some(p) => {
                let w = codec::weight_from_json(&read_json(p)?)?;
                a.same_dim(w.mat())?;
                Ok(w)
            }
        }
    };
    let e = weight(&ops.e)?;
    let f = weight(&ops.f)?;
    Ok(Loaded { a, e, f })
}

fn negative(miss: &NotInvertible) -> Value {
    json!({
        "invertible": false,
        "kind": miss.kind.name(),
        "reason": miss.reason.to_string(),
    })
}

fn side_of(kind: GInverseKind) -> Result<Side> {
    match kind {
        GInverseKind::ECore => Ok(Side::Core),
        GInverseKind::FDualCore => Ok(Side::Dual),
        other => Err(Error::Malformed(format!(
            "--n and --decompose apply to ecore and fdualcore, not {other}"
        ))),
    }
}

fn compute<S: StarScalar>(args: &ComputeArgs, a: &Value) -> Result<Response> {
    let Loaded { a, e, f } = load::<S>(&args.operands, a)?;
    if let Some(letter) = &args.decompose {
        let side = side_of(args.kind)?;
        let w = if side == Side::Core { &e } else { &f };
        return decompose(
            &a,
            w,
            args.n.unwrap_or(1),
            Flavor::from_letter(letter)?,
            side,
            args.seed,
        );
    }
    let cert = match args.n {
        None | Some(1) => ginverse::construct(args.kind, &a, &e, &f)?,
        Some(n) => match side_of(args.kind)? {
            Side::Core => ginverse::e_core_via_power(&a, &e, n)?,
            Side::Dual => ginverse::f_dual_core_via_power(&a, &f, n)?,
        },
    };
    Ok(Response::ok(match cert {
        Ok(c) => codec::certificate_to_json(&c),
        Err(miss) => negative(&miss),
    }))
}

fn decompose<S: StarScalar>(
    a: &Mat<S>,
    w: &Weight<S>,
    n: u32,
    flavor: Flavor,
    side: Side,
    seed: Option<u64>,
) -> Result<Response> {
    let d = match characterize::decompose(a, w, n, flavor, side)? {
        Ok(d) => d,
        Err(miss) => return Ok(Response::ok(negative(&miss))),
    };
    let d = match seed {
        Some(seed) if !flavor.requires_idempotent() => {
            let mut rng = rng_from_seed(seed);
            match characterize::random_element_witness(a, w, n, flavor, side, &mut rng)? {
                Ok(Some(el)) => {
                    let unit = characterize::unit_for(a, &el, n, flavor, side);
                    Decomposition {
                        element: el,
                        unit,
                        ..d
                    }
                }
                _ => d,
            }
        }
        _ => d,
    };
    Ok(Response::ok(codec::decomposition_to_json(&d)))
}

fn verify<S: StarScalar>(args: &VerifyArgs, a: &Value) -> Result<Response> {
    let Loaded { a, e, f } = load::<S>(&args.operands, a)?;
    let cert = read_json(&args.cert)?;
    if cert.get("flavor").is_some() {
        return verify_decomposition(&a, &e, &f, &codec::decomposition_from_json(&cert)?);
    }
    let cert = codec::certificate_from_json::<S>(&cert)?;
    let report = ginverse::verify(cert.kind, &a, &cert.value, Some(&e), Some(&f))?;
    let failed_witnesses = cert.check_witnesses(&a, Some(&e), Some(&f))?;
    let equations: serde_json::Map<String, Value> = report
        .results
        .iter()
        .map(|(eq, ok)| (eq.label().to_string(), json!(ok)))
        .collect();
    let failed: Vec<&str> = report.failed().iter().map(|eq| eq.label()).collect();
    let holds = report.holds() && failed_witnesses.is_empty();
    Ok(Response {
        body: json!({
            "kind": cert.kind.name(),
            "holds": holds,
            "equations": equations,
            "failed": failed,
            "failed_witnesses": failed_witnesses,
        }),
        code: if holds { EXIT_OK } else { EXIT_FAILED },
    })
}

fn verify_decomposition<S: StarScalar>(
    a: &Mat<S>,
    e: &Weight<S>,
    f: &Weight<S>,
    d: &Decomposition<S>,
) -> Result<Response> {
    let w = if d.side == Side::Core { e } else { f };
    let kind = d.side.kind();
    let fail = |msg: String| Response {
        body: json!({"kind": kind.name(), "flavor": d.flavor.letter(), "holds": false, "error": msg}),
        code: EXIT_FAILED,
    };
    let rebuilt = match characterize::reconstruct(a, w, d) {
        Ok(x) => x,
        Err(Error::InvalidCertificate(msg) | Error::Inconsistent(msg)) => return Ok(fail(msg)),
        Err(other) => return Err(other),
    };
    let direct = match kind {
        GInverseKind::ECore => ginverse::e_core(a, e)?,
        _ => ginverse::f_dual_core(a, f)?,
    };
    let matches = direct.as_ref().is_ok_and(|c| c.value == rebuilt);
    Ok(Response {
        body: json!({
            "kind": kind.name(),
            "flavor": d.flavor.letter(),
            "side": d.side.name(),
            "n": d.n,
            "value": codec::mat_to_json(&rebuilt),
            "matches_direct": matches,
            "holds": matches,
        }),
        code: if matches { EXIT_OK } else { EXIT_FAILED },
    })
}

fn ep<S: StarScalar>(args: &EpArgs, a: &Value) -> Result<Response> {
    let Loaded { a, e, f } = load::<S>(&args.operands, a)?;
    let v = characterize::is_weighted_ep(&a, &e, &f)?;
    let opt = |m: &Option<Mat<S>>| m.as_ref().map_or(Value::Null, codec::mat_to_json);
    Ok(Response::ok(json!({
        "weighted_ep": v.weighted_ep,
        "e_core": opt(&v.e_core),
        "f_dual_core": opt(&v.f_dual_core),
        "p": opt(&v.p),
    })))
}

fn dispatch_finite(args: &OracleArgs) -> Result<Response> {
    let sample = match (args.sample, args.seed) {
        (Some(count), Some(seed)) => Some(Sample { count, seed }),
        (Some(_), None) => return Err(Error::Malformed("--sample requires --seed".into())),
        (None, _) => None,
    };
    if args.dim == 0 {
        return Err(Error::Malformed("--dim must be positive".into()));
    }
    let report = match args.p {
        2 => oracle::sweep::<F2>(args.dim, args.n, sample)?,
        3 => oracle::sweep::<F3>(args.dim, args.n, sample)?,
        5 => oracle::sweep::<F5>(args.dim, args.n, sample)?,
        p => return Err(Error::Malformed(format!("unsupported modulus {p}"))),
    };
    let code = if report.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    let body = serde_json::to_value(&report).expect("reports serialize");
    Ok(Response { body, code })
}
