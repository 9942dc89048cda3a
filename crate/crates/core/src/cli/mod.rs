//! The `hypercx` command line.
//!
//! Every command produces an envelope with the command name, an echo of the
//! inputs, a result payload and diagnostics. With `--json` the envelope is
//! printed as JSON with sorted keys; without it a short text report is
//! printed. Exit codes: 0 success, 2 usage or parse error, 3 domain or
//! numeric error.

pub mod builtins;
pub mod expr;

use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::algebra::{format_real, TwoComplex};
use crate::analysis::{self, Path};
use crate::forms;
use crate::polynomials::{self, ComponentRoot, TwoComplexPolynomial};
use crate::series::{self, PowerSeries};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Environment variable holding the seed for sampling-based checks.
pub const SEED_VAR: &str = "HYPERCX_SEED";
const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "hypercx", version, about = "Hyperbolic twocomplex numbers")]
pub struct Cli {
    /// Print the machine-readable JSON envelope.
    #[arg(long, global = true)]
    json: bool,

    /// Include elapsed milliseconds in the envelope.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression, e.g. "exp((0,1))" or "(1,2)*(3+4*h)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Enumerate every factorization of a monic polynomial file.
    Factor {
        file: std::path::PathBuf,
        /// Maximum degree to enumerate.
        #[arg(long, default_value_t = polynomials::DEFAULT_DEGREE_CAP)]
        cap: usize,
    },
    /// Integrate a built-in function along a path file.
    Integrate {
        #[arg(value_name = "FN")]
        function: String,
        path_file: std::path::PathBuf,
        /// Midpoint panels per segment.
        #[arg(long, default_value_t = 64)]
        nsub: usize,
    },
    /// Check analyticity of a built-in function at a point.
    Check {
        #[arg(value_name = "FN")]
        function: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
        /// Finite-difference step.
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
    },
    /// Evaluate a series file and estimate its convergence region.
    Series {
        file: std::path::PathBuf,
        /// Point at which to evaluate the truncation.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Samples for the disc-in-rectangle check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Envelope {
    command: &'static str,
    input: Value,
    result: Value,
    diagnostics: Value,
    text: String,
}

/// A command failure: an error plus whatever input had been echoed.
struct Failure {
    command: &'static str,
    input: Value,
    error: Error,
    code: i32,
}

fn num(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else if v.is_nan() {
        json!("nan")
    } else if v > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn tc_json(u: TwoComplex) -> Value {
    json!({ "x": num(u.x()), "y": num(u.y()), "literal": u.to_string() })
}

fn root_json(r: &ComponentRoot) -> Value {
    json!({
        "v_plus": [num(r.v_plus.re), num(r.v_plus.im)],
        "v_minus": [num(r.v_minus.re), num(r.v_minus.im)],
        "real": r.is_real(),
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn read_file(path: &std::path::Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn seed_from_env() -> Result<u64, Error> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_VAR} must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn cmd_eval(src: &str) -> Result<Envelope, Failure> {
    let input = json!({ "expr": src });
    let fail = |error: Error| Failure {
        command: "eval",
        input: input.clone(),
        code: exit_code(&error),
        error,
    };
    let parsed = expr::parse(src).map_err(fail)?;
    let value = parsed.eval().map_err(fail)?;

    let mut result = Map::new();
    result.insert("value".into(), tc_json(value));
    result.insert("nu".into(), num(value.nu()));
    result.insert("d".into(), num(value.modulus()));
    let mut text = format!("value = {value}\nnu = {}\nd = {}\n", format_real(value.nu()), format_real(value.modulus()));
    let sector = forms::in_sector(value);
    if sector {
        let e = forms::to_exponential(value).map_err(fail)?;
        let theta = forms::theta_of(value).map_err(fail)?;
        result.insert("rho".into(), num(e.rho));
        result.insert("lambda".into(), num(e.lambda));
        result.insert("theta".into(), num(theta));
        text.push_str(&format!(
            "rho = {}\nlambda = {}\ntheta = {}\n",
            format_real(e.rho),
            format_real(e.lambda),
            format_real(theta)
        ));
    }
    Ok(Envelope {
        command: "eval",
        input,
        result: Value::Object(result),
        diagnostics: json!({ "in_sector": sector, "zero_divisor": value.is_zero_divisor() }),
        text,
    })
}

fn cmd_factor(file: &std::path::Path, cap: usize) -> Result<Envelope, Failure> {
    let input = json!({ "file": file.display().to_string(), "cap": cap });
    let fail = |error: Error| Failure {
        command: "factor",
        input: input.clone(),
        code: exit_code(&error),
        error,
    };
    let p: TwoComplexPolynomial = read_file(file).and_then(|t| t.parse()).map_err(fail)?;
    let set = polynomials::enumerate_factorizations(&p, cap).map_err(fail)?;

    let multisets: Vec<Value> = set
        .factorizations
        .iter()
        .map(|f| Value::Array(f.roots.iter().map(root_json).collect()))
        .collect();
    let residuals: Vec<Value> = set.factorizations.iter().map(|f| num(f.residual)).collect();
    let mut text = format!("degree {} polynomial, {} factorization(s)\n", p.degree(), set.len());
    for (i, f) in set.factorizations.iter().enumerate() {
        let roots: Vec<String> = f
            .roots
            .iter()
            .map(|r| match r.to_twocomplex() {
                Some(u) => u.to_string(),
                None => format!("[v+={}, v-={}]", r.v_plus, r.v_minus),
            })
            .collect();
        text.push_str(&format!(
            "{}: {}  residual {}\n",
            i + 1,
            roots.join(" "),
            format_real(f.residual)
        ));
    }
    Ok(Envelope {
        command: "factor",
        input,
        result: json!({ "degree": p.degree(), "factorizations": multisets, "residuals": residuals }),
        diagnostics: json!({ "count": set.len(), "tolerance": num(set.tolerance), "all_verified": set.all_verified() }),
        text,
    })
}

fn cmd_integrate(name: &str, file: &std::path::Path, nsub: usize) -> Result<Envelope, Failure> {
    let input = json!({ "fn": name, "path_file": file.display().to_string(), "nsub": nsub });
    let fail = |error: Error| Failure {
        command: "integrate",
        input: input.clone(),
        code: exit_code(&error),
        error,
    };
    let f = builtins::lookup(name).map_err(fail)?;
    let path: Path = read_file(file).and_then(|t| t.parse()).map_err(fail)?;
    let r = analysis::integrate(&f, &path, nsub).map_err(fail)?;
    Ok(Envelope {
        command: "integrate",
        input,
        result: json!({ "value": tc_json(r.value) }),
        diagnostics: json!({
            "error_estimate": num(r.error_estimate),
            "closed": path.is_closed(),
            "segments": path.segments().count(),
        }),
        text: format!(
            "integral = {}\nerror estimate = {}\n",
            r.value,
            format_real(r.error_estimate)
        ),
    })
}

fn cmd_check(name: &str, point: &str, h: f64) -> Result<Envelope, Failure> {
    let input = json!({ "fn": name, "point": point, "h": num(h) });
    let fail = |error: Error| Failure {
        command: "check",
        input: input.clone(),
        code: exit_code(&error),
        error,
    };
    let f = builtins::lookup(name).map_err(fail)?;
    let p: TwoComplex = point.parse().map_err(fail)?;
    let report = analysis::check_cr(&f, p, h).map_err(fail)?;
    let (along_x, along_delta) = analysis::directional_derivatives(&f, p, h).map_err(fail)?;
    let mismatch = match analysis::derivative(&f, p, h) {
        Ok(_) => false,
        Err(Error::DirectionMismatch { .. }) => true,
        Err(e) => return Err(fail(e)),
    };
    let text = format!(
        "residual_1 = {}\nresidual_2 = {}\nwave_p = {}\nwave_q = {}\nderivative along x = {along_x}\nderivative along h = {along_delta}\n{}\n",
        format_real(report.residual_1),
        format_real(report.residual_2),
        format_real(report.wave_p),
        format_real(report.wave_q),
        if mismatch { "DirectionMismatch: not analytic at this resolution" } else { "directions agree" },
    );
    Ok(Envelope {
        command: "check",
        input,
        result: json!({
            "residual_1": num(report.residual_1),
            "residual_2": num(report.residual_2),
            "wave_p": num(report.wave_p),
            "wave_q": num(report.wave_q),
            "step": num(report.step),
            "derivative_x": tc_json(along_x),
            "derivative_delta": tc_json(along_delta),
        }),
        diagnostics: json!({
            "direction_mismatch": mismatch,
            "max_residual": num(report.max_residual()),
        }),
        text,
    })
}

fn cmd_series(file: &std::path::Path, at: Option<&str>, samples: usize) -> Result<Envelope, Failure> {
    let input = json!({ "file": file.display().to_string(), "at": at, "samples": samples });
    let fail = |error: Error| Failure {
        command: "series",
        input: input.clone(),
        code: exit_code(&error),
        error,
    };
    let s: PowerSeries = read_file(file).and_then(|t| t.parse()).map_err(fail)?;
    let seed = seed_from_env().map_err(fail)?;
    let mut result = Map::new();
    let mut text = format!("{} coefficients\n", s.len());
    if let Some(at) = at {
        let u: TwoComplex = at.parse().map_err(fail)?;
        let v = s.eval(u);
        text.push_str(&format!("value = {v}\n"));
        result.insert("value".into(), tc_json(v));
    }
    let region = s.estimate_region().map_err(fail)?;
    result.insert(
        "region".into(),
        json!({ "c0": num(region.c0), "c_plus": num(region.c_plus), "c_minus": num(region.c_minus) }),
    );
    text.push_str(&format!(
        "c0 = {}\nc+ = {}\nc- = {}\n",
        format_real(region.c0),
        format_real(region.c_plus),
        format_real(region.c_minus)
    ));
    let finite = region.c0.is_finite() && region.c_plus.is_finite() && region.c_minus.is_finite();
    let inclusion = if finite {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ok = series::region_inclusion_check(&region, samples, &mut rng).map_err(fail)?;
        text.push_str(&format!("disc inside rectangle: {ok}\n"));
        json!(ok)
    } else {
        Value::Null
    };
    Ok(Envelope {
        command: "series",
        input,
        result: Value::Object(result),
        diagnostics: json!({ "inclusion": inclusion, "seed": seed }),
        text,
    })
}

fn render(json_mode: bool, env: Result<Envelope, Failure>, elapsed: Option<f64>) -> CliOutput {
    let with_timing = |mut obj: Map<String, Value>| {
        if let Some(ms) = elapsed {
            obj.insert("elapsed_ms".into(), num(ms));
        }
        Value::Object(obj)
    };
    match env {
        Ok(e) => {
            let stdout = if json_mode {
                let mut obj = Map::new();
                obj.insert("command".into(), json!(e.command));
                obj.insert("input".into(), e.input);
                obj.insert("result".into(), e.result);
                obj.insert("diagnostics".into(), e.diagnostics);
                format!("{}\n", serde_json::to_string_pretty(&with_timing(obj)).expect("json"))
            } else {
                e.text
            };
            CliOutput { code: EXIT_OK, stdout, stderr: String::new() }
        }
        Err(f) => {
            let stderr = format!("error: {}\n", f.error);
            let stdout = if json_mode {
                let mut obj = Map::new();
                obj.insert("command".into(), json!(f.command));
                obj.insert("input".into(), f.input);
                obj.insert(
                    "error".into(),
                    json!({ "kind": f.error.kind(), "message": f.error.to_string() }),
                );
                format!("{}\n", serde_json::to_string_pretty(&with_timing(obj)).expect("json"))
            } else {
                String::new()
            };
            CliOutput { code: f.code, stdout, stderr }
        }
    }
}

/// Runs the CLI on `args` (including the program name) and captures output.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let env = match &cli.command {
        Command::Eval { expr } => cmd_eval(expr),
        Command::Factor { file, cap } => cmd_factor(file, *cap),
        Command::Integrate { function, path_file, nsub } => cmd_integrate(function, path_file, *nsub),
        Command::Check { function, point, h } => cmd_check(function, point, *h),
        Command::Series { file, at, samples } => cmd_series(file, at.as_deref(), *samples),
    };
    let elapsed = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    render(cli.json, env, elapsed)
}
