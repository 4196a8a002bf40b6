use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sgrank::groebner::{buchberger_with_budget, Budget, Ideal};
use sgrank::polyring::{parse_polynomial_infer, Field, MonomialOrder, Polynomial};
use sgrank::rank::{gr_with, rank_report, RankOptions, RankReport};
use sgrank::strata::{sample_c_ir, sample_reducible, sample_secant_tangential, sample_tangential};
use sgrank::tensor::{GeneralTensor, Hypergraph, SymmetricTensor, Tensor};
use sgrank::Error;

mod suites;

#[derive(Parser)]
#[command(name = "sgrank", version, about = "Symmetric geometric rank and geometric rank of tensors")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Coefficient field: QQ or Fp:<prime below 2^32>
    #[arg(long, global = true, default_value = "QQ", value_parser = parse_field)]
    field: Field,
    /// Seconds allowed per computation
    #[arg(long, global = true, default_value_t = 300.0, value_parser = parse_timeout)]
    timeout: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for `verify`
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Print Groebner basis statistics to stderr
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric geometric rank of a form or symmetric tensor
    Sgr {
        #[command(flatten)]
        input: Input,
        /// Also compute the geometric rank
        #[arg(long)]
        gr: bool,
    },
    /// Geometric rank of a tensor or of the tensor of a form
    Gr {
        #[command(flatten)]
        input: Input,
        /// Factor whose partials are taken (0-based; default the last)
        #[arg(long)]
        axis: Option<usize>,
    },
    /// Affine dimension of the zero set of an ideal
    Dim {
        /// Generators; repeat the flag or separate with ';'
        #[arg(long = "poly", required = true)]
        polys: Vec<String>,
        /// Minimum number of variables
        #[arg(long)]
        vars: Option<usize>,
    },
    /// SGR of the indicator tensor of a uniform hypergraph edge file
    Hypergraph {
        file: PathBuf,
        #[arg(long)]
        gr: bool,
    },
    /// Draw a random form from a stratum
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        /// Number of summands for `secant`
        #[arg(short = 'r', default_value_t = 2)]
        r: usize,
        /// Degree for `tangential`
        #[arg(short = 'd', default_value_t = 3)]
        d: u32,
        /// Factor degrees for `reducible`
        #[arg(long, default_value_t = 2)]
        d1: u32,
        #[arg(long, default_value_t = 1)]
        d2: u32,
        /// Compute the SGR of the sample and require the expected value
        #[arg(long)]
        check: bool,
        /// Write the seed and parameters as JSON to this file
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Run a verification suite: identity, paper-values, sm, matrices,
    /// lemmas, strata, discriminant, tangency, engine or all
    Verify { suite: String },
}

#[derive(Args)]
struct Input {
    /// Polynomial text such as "x0*x1^2 + x0*x2^2"
    #[arg(long, conflicts_with = "tensor", required_unless_present = "tensor")]
    poly: Option<String>,
    /// Tensor JSON file
    #[arg(long)]
    tensor: Option<PathBuf>,
    /// Minimum number of variables for --poly
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    Tangential,
    Secant,
    CIr,
    Reducible,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn parse_timeout(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("timeout must be a positive number of seconds, got {s:?}")),
    }
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::UnknownVariable(_) | Error::Format(_) | Error::InvalidPrime(_) => 2,
            Error::Interrupted(_) => 4,
            _ => 3,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

type CmdResult = Result<u8, Failure>;

impl Config {
    fn options(&self) -> RankOptions {
        let order = match self.order {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        };
        RankOptions { order, budget: Budget::with_timeout(self.timeout()) }
    }

    fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout)
    }

    fn field_note(&self) {
        if let Field::Prime(p) = self.field {
            eprintln!(
                "note: computed over Fp:{p}; the value agrees with QQ unless p divides a coefficient met \
                 during elimination, which is unlikely but possible. Use --field QQ for a certified result."
            );
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sgr { input, gr } => cmd_sgr(input, *gr, &cli.config),
        Command::Gr { input, axis } => cmd_gr(input, *axis, &cli.config),
        Command::Dim { polys, vars } => cmd_dim(polys, *vars, &cli.config),
        Command::Hypergraph { file, gr } => cmd_hypergraph(file, *gr, &cli.config),
        Command::Sample { kind, n, r, d, d1, d2, check, sidecar } => {
            let params = SampleParams { kind: *kind, n: *n, r: *r, d: *d, d1: *d1, d2: *d2 };
            cmd_sample(&params, *check, sidecar.as_deref(), &cli.config)
        }
        Command::Verify { suite } => cmd_verify(suite, &cli.config),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

enum Loaded {
    Form(Polynomial),
    General(GeneralTensor),
}

fn load(input: &Input, field: Field) -> Result<Loaded, Failure> {
    if let Some(text) = &input.poly {
        return Ok(Loaded::Form(parse_polynomial_infer(text, field, input.vars.unwrap_or(0))?));
    }
    let path = input.tensor.as_ref().expect("clap requires one input");
    let text = fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
    Ok(match Tensor::from_json(&text, field)? {
        Tensor::Symmetric(t) => Loaded::Form(t.to_polynomial()?),
        Tensor::General(t) if t.is_symmetric() => Loaded::Form(t.to_symmetric()?.to_polynomial()?),
        Tensor::General(t) => Loaded::General(t),
    })
}

fn emit_report(report: &RankReport, extra: Option<(&str, &str)>, config: &Config) {
    if config.json {
        let mut v = serde_json::to_value(report).expect("report serializes");
        if let Some((k, text)) = extra {
            v[k] = json!(text);
        }
        println!("{v}");
    } else {
        println!("{report}");
        if let Some((_, text)) = extra {
            println!("{text}");
        }
    }
    if config.verbose {
        eprintln!("basis sizes: sgr {}, gr {:?}", report.sgr_basis_size, report.gr_basis_size);
    }
    config.field_note();
}

fn cmd_sgr(input: &Input, gr: bool, config: &Config) -> CmdResult {
    let Loaded::Form(f) = load(input, config.field)? else {
        return Err(fail(3, "sgr needs a symmetric tensor; use `gr` for a general one"));
    };
    let report = rank_report(&f, gr, &config.options())?;
    emit_report(&report, None, config);
    Ok(0)
}

fn cmd_gr(input: &Input, axis: Option<usize>, config: &Config) -> CmdResult {
    let t = match load(input, config.field)? {
        Loaded::Form(f) if axis.is_none() => {
            let report = rank_report(&f, true, &config.options())?;
            emit_report(&report, None, config);
            return Ok(0);
        }
        Loaded::Form(f) => {
            let d = f.total_degree().ok_or_else(|| Failure::from(Error::ZeroInput))? as usize;
            SymmetricTensor::from_polynomial(&f, d)?.to_general()
        }
        Loaded::General(t) => t,
    };
    let axis = axis.unwrap_or(t.order().saturating_sub(1));
    let start = Instant::now();
    let c = gr_with(&t, axis, &config.options())?;
    let ms = start.elapsed().as_millis() as u64;
    if config.json {
        let v = json!({
            "gr": c.codim, "dim_affine": c.dim, "ambient": c.ambient, "axis": axis,
            "field": config.field.to_string(), "ms": ms,
        });
        println!("{v}");
    } else {
        println!("gr: {}", c.codim);
        println!("zero set: affine dimension {} in {} variables (axis {axis})", c.dim, c.ambient);
        println!("field: {}, {ms} ms", config.field);
    }
    if config.verbose {
        eprintln!("basis size {}", c.basis_size);
    }
    config.field_note();
    Ok(0)
}

fn cmd_dim(texts: &[String], vars: Option<usize>, config: &Config) -> CmdResult {
    let parsed = texts
        .iter()
        .flat_map(|t| t.split(';'))
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_polynomial_infer(t, config.field, vars.unwrap_or(0)))
        .collect::<sgrank::Result<Vec<_>>>()?;
    if parsed.is_empty() {
        return Err(fail(2, "no generators given"));
    }
    let nvars = parsed.iter().map(Polynomial::nvars).max().expect("nonempty");
    let gens = parsed.iter().map(|f| f.shift_variables(nvars, 0)).collect::<sgrank::Result<Vec<_>>>()?;
    let opts = config.options();
    let start = Instant::now();
    let ideal = Ideal::new(gens)?.with_order(opts.order);
    let gb = buchberger_with_budget(&ideal, &opts.budget).map_err(Error::from)?;
    let ms = start.elapsed().as_millis() as u64;
    let dim = gb.dimension();
    if config.json {
        let v = json!({
            "dim": dim, "ambient": nvars, "basis_size": gb.len(), "order": opts.order.name(),
            "field": config.field.to_string(), "ms": ms,
        });
        println!("{v}");
    } else {
        if dim < 0 {
            println!("dim: -1 (empty zero set, unit ideal)");
        } else {
            println!("dim: {dim}");
        }
        println!("ambient: {nvars} variables, basis size {}, {}", gb.len(), opts.order.name());
        println!("field: {}, {ms} ms", config.field);
    }
    config.field_note();
    Ok(0)
}

fn cmd_hypergraph(file: &PathBuf, gr: bool, config: &Config) -> CmdResult {
    let text = fs::read_to_string(file).map_err(|e| fail(2, format!("{}: {e}", file.display())))?;
    let h = Hypergraph::parse(&text)?;
    let f = h.tensor()?.change_field(config.field)?.to_polynomial()?;
    let report = rank_report(&f, gr, &config.options())?;
    let edges = h.edges().count();
    let note = format!(
        "{} vertices, {edges} edge{} of size {}; symmetric subrank <= sgr = {}",
        h.vertices(),
        if edges == 1 { "" } else { "s" },
        h.uniformity(),
        report.sgr
    );
    emit_report(&report, Some(("annotation", &note)), config);
    Ok(0)
}

struct SampleParams {
    kind: SampleKind,
    n: usize,
    r: usize,
    d: u32,
    d1: u32,
    d2: u32,
}

impl SampleParams {
    fn draw(&self, seed: u64) -> sgrank::Result<Polynomial> {
        match self.kind {
            SampleKind::Tangential => sample_tangential(self.n, self.d, seed),
            SampleKind::Secant => sample_secant_tangential(self.r, self.n, seed),
            SampleKind::CIr => sample_c_ir(self.n, seed),
            SampleKind::Reducible => sample_reducible(self.d1, self.d2, self.n, seed),
        }
    }

    fn expected_sgr(&self) -> usize {
        match self.kind {
            SampleKind::Tangential => 1,
            SampleKind::Secant => self.r,
            SampleKind::CIr | SampleKind::Reducible => 2,
        }
    }

    fn describe(&self, seed: u64) -> Value {
        let (kind, params) = match self.kind {
            SampleKind::Tangential => ("tangential", json!({"n": self.n, "d": self.d})),
            SampleKind::Secant => ("secant", json!({"n": self.n, "r": self.r})),
            SampleKind::CIr => ("c-ir", json!({"n": self.n})),
            SampleKind::Reducible => ("reducible", json!({"n": self.n, "d1": self.d1, "d2": self.d2})),
        };
        json!({"kind": kind, "params": params, "seed": seed})
    }
}

fn cmd_sample(p: &SampleParams, check: bool, sidecar: Option<&std::path::Path>, config: &Config) -> CmdResult {
    let f = p.draw(config.seed)?;
    let mut meta = p.describe(config.seed);
    meta["polynomial"] = json!(f.to_string());
    if let Some(path) = sidecar {
        let text = serde_json::to_string_pretty(&meta).expect("metadata serializes");
        fs::write(path, text + "\n").map_err(|e| fail(3, format!("{}: {e}", path.display())))?;
    }
    let mut code = 0;
    if check {
        let g = f.change_field(config.field)?;
        let report = rank_report(&g, false, &config.options())?;
        let want = p.expected_sgr();
        meta["sgr"] = json!(report.sgr);
        meta["expected_sgr"] = json!(want);
        meta["check"] = json!(report.sgr == want);
        if report.sgr != want {
            code = 1;
        }
        if !config.json {
            println!("{f}");
            let verdict = if report.sgr == want { "ok" } else { "FAILED" };
            println!("check: sgr = {} (expected {want}) {verdict}", report.sgr);
        }
        config.field_note();
    } else if !config.json {
        println!("{f}");
    }
    if config.json {
        println!("{meta}");
    }
    Ok(code)
}

fn cmd_verify(suite: &str, config: &Config) -> CmdResult {
    let Some(cases) = suites::cases(suite) else {
        return Err(fail(2, format!("unknown suite {suite:?}; known: {} or all", suites::SUITES.join(", "))));
    };
    let ctx = suites::Ctx { field: config.field, timeout: config.timeout(), seed: config.seed };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs as usize)
        .build()
        .map_err(|e| fail(3, e.to_string()))?;
    let start = Instant::now();
    let results = pool.install(|| suites::run(&cases, &ctx));
    let passed = results.iter().filter(|r| r.passed).count();
    if config.json {
        let cases: Vec<Value> = results
            .iter()
            .map(
                |r| json!({"name": r.name, "passed": r.passed, "detail": r.detail, "ms": r.elapsed.as_millis() as u64}),
            )
            .collect();
        let v = json!({"suite": suite, "passed": passed, "total": results.len(), "cases": cases});
        println!("{v}");
    } else {
        for r in &results {
            let tag = if r.passed { "PASS" } else { "FAIL" };
            println!("{tag} {} ({} ms): {}", r.name, r.elapsed.as_millis(), r.detail);
        }
        println!("{suite}: {passed}/{} passed in {:.1} s", results.len(), start.elapsed().as_secs_f64());
    }
    config.field_note();
    Ok(if passed == results.len() { 0 } else { 1 })
}
