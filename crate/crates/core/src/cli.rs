//! Command-line front end.
//!
//! Exit codes: 0 on success or a true predicate, 1 when a mathematical
//! property fails (not positive, not a product, not CP, singular, ...), 2 on
//! malformed input. Results go to `--output` or standard output as JSON;
//! diagnostics go to standard error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::choi::MatrixMap;
use crate::dsp::{self, OpCounter};
use crate::error::{BcError, Result};
use crate::io::{self, KrausJson, MapJson, MatrixJson, Repr};
use crate::matrix::{BicomplexMatrix, InverseMethod};
use crate::positivity::{self, PositivityMethod};
use crate::tensor::{self, RecoveredFactors};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bicomplex",
    version,
    about = "Bicomplex matrix algebra toolkit"
)]
pub struct CommandRequest {
    /// Numerical tolerance (must be positive).
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    /// Seed for commands that draw random instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the JSON result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix JSON file.
    pub input: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RouteArg {
    Idempotent,
    Cartesian,
    /// Compute both and require agreement.
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Components,
    Cartesian,
    Eigen,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum InverseArg {
    Componentwise,
    Cartesian,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite a matrix in idempotent form.
    Split(MatrixInput),
    /// Rewrite a matrix in cartesian form.
    Join(MatrixInput),
    /// Bicomplex tensor product of two matrices.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "idempotent")]
        route: RouteArg,
    },
    /// Hyperbolic positivity test.
    Positivity {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Bicomplex state test (positive with unit trace).
    State(MatrixInput),
    /// Triangular factor with A = U^{*t} U (or L^{*t} L with --lower).
    Cholesky {
        input: PathBuf,
        #[arg(long)]
        lower: bool,
    },
    /// Orthogonal rank-one decomposition A = sum a_i a_i^{*t}.
    Rank1(MatrixInput),
    /// Spectra of the idempotent components.
    Eig(MatrixInput),
    /// Matrix inverse.
    Inverse {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "componentwise")]
        method: InverseArg,
    },
    /// Recover the factors of M = A (n x n) tensor B (m x m).
    Recover {
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Choi matrix of a map.
    Choi { map: PathBuf },
    /// Complete positivity test.
    CpTest { map: PathBuf },
    /// Kraus decomposition of a completely positive map.
    Kraus { map: PathBuf },
    /// Trace preservation test.
    TpTest { map: PathBuf },
    /// Apply a map to a matrix.
    ApplyChannel { map: PathBuf, input: PathBuf },
    /// Tensor product of two maps.
    TensorMaps { first: PathBuf, second: PathBuf },
    /// Factored matrix-vector product (A ⊗ B) X with operation counts.
    DspApply { a: PathBuf, b: PathBuf, x: PathBuf },
    /// Random hyperbolic positive Gram matrix B^{*t} B.
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
    },
}

/// Result of a command: a JSON document and whether the tested property holds.
struct Outcome {
    value: Value,
    holds: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Self { value, holds: true }
    }

    fn predicate(value: Value, holds: bool) -> Self {
        Self { value, holds }
    }
}

fn matrix_value(m: &BicomplexMatrix, repr: Repr) -> Value {
    serde_json::to_value(MatrixJson::from_matrix(m, repr)).expect("serialisable")
}

fn complex_list(values: &[num_complex::Complex64]) -> Value {
    Value::from(
        values
            .iter()
            .map(|z| json!([z.re + 0.0, z.im + 0.0]))
            .collect::<Vec<_>>(),
    )
}

fn load_map(path: &Path) -> Result<MatrixMap> {
    Ok(io::load_map(path)?.into_map())
}

fn execute(req: &CommandRequest) -> Result<Outcome> {
    let tol = req.tol;
    Ok(match &req.command {
        Command::Split(MatrixInput { input }) => {
            Outcome::ok(matrix_value(&io::load_matrix(input)?, Repr::Idempotent))
        }
        Command::Join(MatrixInput { input }) => {
            Outcome::ok(matrix_value(&io::load_matrix(input)?, Repr::Cartesian))
        }
        Command::Tensor { a, b, route } => {
            let (a, b) = (io::load_matrix(a)?, io::load_matrix(b)?);
            let out = match route {
                RouteArg::Idempotent => tensor::tensor_idempotent(&a, &b),
                RouteArg::Cartesian => tensor::tensor_cartesian(&a, &b),
                RouteArg::Both => {
                    let idem = tensor::tensor_idempotent(&a, &b);
                    let cart = tensor::tensor_cartesian(&a, &b);
                    let gap = idem.max_abs_diff(&cart);
                    if gap > 1e-12 * (1.0 + idem.frobenius()) {
                        return Ok(Outcome::predicate(
                            json!({"error": "RouteMismatch", "max_abs_diff": gap}),
                            false,
                        ));
                    }
                    idem
                }
            };
            Outcome::ok(matrix_value(&out, Repr::Idempotent))
        }
        Command::Positivity { input, method } => {
            let a = io::load_matrix(input)?;
            let methods: Vec<PositivityMethod> = match method {
                MethodArg::Components => vec![PositivityMethod::Components],
                MethodArg::Cartesian => vec![PositivityMethod::Cartesian],
                MethodArg::Eigen => vec![PositivityMethod::Eigen],
                MethodArg::All => PositivityMethod::ALL.to_vec(),
            };
            let mut report = serde_json::Map::new();
            let mut all = true;
            for m in methods {
                let verdict = positivity::is_hyperbolic_positive(&a, tol, m)?;
                all &= verdict;
                report.insert(m.name().into(), Value::Bool(verdict));
            }
            Outcome::predicate(json!({"hyperbolic_positive": all, "methods": report}), all)
        }
        Command::State(MatrixInput { input }) => {
            let a = io::load_matrix(input)?;
            let verdict = positivity::is_state(&a, tol)?;
            let trace = io::scalar_to_array(a.trace()?, Repr::Idempotent);
            Outcome::predicate(json!({"state": verdict, "trace": trace}), verdict)
        }
        Command::Cholesky { input, lower } => {
            let a = io::load_matrix(input)?;
            let u = if *lower {
                positivity::cholesky_lower(&a, tol)?
            } else {
                positivity::cholesky(&a, tol)?
            };
            Outcome::ok(matrix_value(&u, Repr::Idempotent))
        }
        Command::Rank1(MatrixInput { input }) => {
            let a = io::load_matrix(input)?;
            let vectors = positivity::rank_one_decomposition(&a, tol)?;
            let list: Vec<Value> = vectors
                .iter()
                .map(|v| matrix_value(&v.to_column(), Repr::Idempotent))
                .collect();
            Outcome::ok(json!({"vectors": list}))
        }
        Command::Eig(MatrixInput { input }) => {
            let e = positivity::bc_eigenvalues(&io::load_matrix(input)?)?;
            Outcome::ok(json!({
                "spectrum1": complex_list(&e.spectrum1),
                "spectrum2": complex_list(&e.spectrum2),
            }))
        }
        Command::Inverse { input, method } => {
            let a = io::load_matrix(input)?;
            let method = match method {
                InverseArg::Componentwise => InverseMethod::Componentwise,
                InverseArg::Cartesian => InverseMethod::Cartesian,
            };
            Outcome::ok(matrix_value(&a.inverse(method)?, Repr::Idempotent))
        }
        Command::Recover { input, n, m } => {
            let mat = io::load_matrix(input)?;
            let f = tensor::recover_factors(&mat, *n, *m, tol)?;
            Outcome::ok(json!({
                "a": matrix_value(&f.a, Repr::Idempotent),
                "b": matrix_value(&f.b, Repr::Idempotent),
                "gauge": RecoveredFactors::GAUGE,
                "residual": [f.residual.0, f.residual.1],
            }))
        }
        Command::Choi { map } => Outcome::ok(matrix_value(
            &load_map(map)?.choi_matrix(),
            Repr::Idempotent,
        )),
        Command::CpTest { map } => {
            let verdict = load_map(map)?.is_completely_positive(tol);
            Outcome::predicate(json!({"completely_positive": verdict}), verdict)
        }
        Command::Kraus { map } => {
            let k = load_map(map)?.kraus_decomposition(tol)?;
            Outcome::ok(serde_json::to_value(KrausJson::from_kraus(&k)).expect("serialisable"))
        }
        Command::TpTest { map } => {
            let verdict = load_map(map)?.is_trace_preserving(tol);
            Outcome::predicate(json!({"trace_preserving": verdict}), verdict)
        }
        Command::ApplyChannel { map, input } => {
            let out = load_map(map)?.apply(&io::load_matrix(input)?)?;
            Outcome::ok(matrix_value(&out, Repr::Idempotent))
        }
        Command::TensorMaps { first, second } => {
            let product = load_map(first)?.tensor(&load_map(second)?);
            Outcome::ok(serde_json::to_value(MapJson::from_map(&product)).expect("serialisable"))
        }
        Command::DspApply { a, b, x } => {
            let (a, b, x) = (
                io::load_matrix(a)?,
                io::load_matrix(b)?,
                io::load_vector(x)?,
            );
            let mut factored = OpCounter::new();
            let mut direct = OpCounter::new();
            let y = dsp::apply_factored(&a, &b, &x, &mut factored)?;
            dsp::apply_direct(&a, &b, &x, &mut direct)?;
            let counts = |ell: usize| {
                json!({
                    "direct_mults": direct.mults[ell],
                    "factored_mults": factored.mults[ell],
                })
            };
            Outcome::ok(json!({
                "y": matrix_value(&y.to_column(), Repr::Idempotent),
                "counts": {"component1": counts(0), "component2": counts(1)},
            }))
        }
        Command::Gram { n, rank } => Outcome::ok(matrix_value(
            &positivity::random_gram(*n, *rank, req.seed)?,
            Repr::Idempotent,
        )),
    })
}

fn emit(req: &CommandRequest, value: &Value, stdout: &mut dyn Write) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serialisable");
    text.push('\n');
    match &req.output {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Runs one request, writing results and diagnostics to the given sinks.
pub fn run_with(req: &CommandRequest, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if !(req.tol > 0.0 && req.tol.is_finite()) {
        let _ = writeln!(stderr, "error: --tol must be positive, got {}", req.tol);
        return EXIT_INPUT;
    }
    let (value, code) = match execute(req) {
        Ok(outcome) => (
            outcome.value,
            if outcome.holds { EXIT_OK } else { EXIT_FALSE },
        ),
        Err(err) if err.is_mathematical() => {
            let _ = writeln!(stderr, "{err}");
            let mut report = json!({"error": err.kind(), "message": err.to_string()});
            if let BcError::NotProduct { residual } = err {
                report["residual"] = json!(residual);
            }
            (report, EXIT_FALSE)
        }
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            return EXIT_INPUT;
        }
    };
    if let Err(e) = emit(req, &value, stdout) {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    code
}

pub fn run(req: &CommandRequest) -> i32 {
    run_with(
        req,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
