use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use froblab::algebra::format_tensor_with;
use froblab::cotensor::{compare_d_delta_a, cotensor, cotensor_hom_iso};
use froblab::frobenius::discover_frobenius;
use froblab::homological::{cotor_direct, ext, hochschild, tensor_bimodule, CochainComplex};
use froblab::io::{self, vectors_to_strings};
use froblab::verify::{self, VerifyConfig};
use froblab::{
    frobenius_from_counit, AlgebraPresentation, Builtin, Error, Field, FrobeniusData, ModuleRep, Scalar, Side,
    Subspace,
};

#[derive(Parser, Debug)]
#[command(name = "frobenius-lab", version, about = "Exact computations with Frobenius algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Counit, Gram rank, symmetry and δ(1).
    Frobenius,
    /// The cotensor product M□N.
    Cotensor,
    /// Hom over A^e from D to N⊗M, with the comparison maps.
    Hom,
    /// Ext over A^e of D with coefficients in N⊗M.
    Ext,
    /// Cotor of M and N through an injective coresolution.
    Cotor,
    /// Hochschild cohomology with coefficients in N⊗M.
    Hochschild,
    /// Compare D with δ(A).
    #[command(name = "compareD")]
    CompareD,
    /// Run the theorem suite.
    Verify {
        /// Restrict to these checks (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Corrupt one structure constant of each algebra first.
        #[arg(long)]
        inject_fault: bool,
        /// Random modules per side and cell.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Builtin algebra name.
    #[arg(long, global = true, conflicts_with = "algebra")]
    builtin: Option<String>,
    /// Algebra JSON file.
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,
    /// Size parameter for the builtin.
    #[arg(long, global = true)]
    param: Option<usize>,
    /// Q or Fp:P.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Counit JSON file.
    #[arg(long, global = true)]
    counit: Option<PathBuf>,
    /// Right module JSON file, or `regular`.
    #[arg(long = "M", global = true, default_value = "regular")]
    m: String,
    /// Left module JSON file, or `regular`.
    #[arg(long = "N", global = true, default_value = "regular")]
    n: String,
    #[arg(long, global = true, default_value_t = 2)]
    max_deg: usize,
    #[arg(long, global = true, env = "FROBLAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    json: bool,
}

enum Failure {
    Verification(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(_)
            | Error::NotFound { .. }
            | Error::DegenerateForm { .. }
            | Error::HypothesisViolated(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    if let Command::Verify { only, inject_fault, samples } = &cli.command {
        return cmd_verify(&cli.opts, only, *inject_fault, *samples);
    }
    let job = Job::load(&cli.opts)?;
    match cli.command {
        Command::Frobenius => cmd_frobenius(&job),
        Command::Cotensor => cmd_cotensor(&job),
        Command::Hom => cmd_hom(&job),
        Command::Ext | Command::Cotor | Command::Hochschild => cmd_derived(&job, &cli.command),
        Command::CompareD => cmd_compare_d(&job),
        Command::Verify { .. } => unreachable!(),
    }
}

struct Job<'a> {
    opts: &'a Opts,
    label: String,
    alg: AlgebraPresentation,
    fd: FrobeniusData,
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    s.parse::<Field>().map_err(Failure::from)
}

impl<'a> Job<'a> {
    fn load(opts: &'a Opts) -> Result<Self, Failure> {
        let field = opts.field.as_deref().map(parse_field).transpose()?;
        let (label, alg, builtin) = match (&opts.builtin, &opts.algebra) {
            (Some(name), None) => {
                let b = Builtin::parse(name, opts.param)?;
                (b.to_string(), b.build(field.unwrap_or(Field::Rational))?, Some(b))
            }
            (None, Some(path)) => {
                let alg = io::algebra_from_json(&read(path)?)?;
                if let Some(f) = field {
                    if f != alg.field() {
                        return Err(Error::FieldMismatch { left: f, right: alg.field() }.into());
                    }
                }
                (path.display().to_string(), alg, None)
            }
            _ => return Err(Failure::Input("give exactly one of --builtin or --algebra".into())),
        };
        let fd = match &opts.counit {
            Some(path) => frobenius_from_counit(&alg, &io::counit_from_json(&read(path)?, alg.field())?)?,
            None => discover_frobenius(&alg, builtin, opts.seed)?,
        };
        Ok(Job { opts, label, alg, fd })
    }

    fn module(&self, source: &str, side: Side, flag: &str) -> Result<ModuleRep, Failure> {
        if source == "regular" {
            return Ok(ModuleRep::regular(&self.alg, side));
        }
        let rep = io::module_from_json(&read(&PathBuf::from(source))?, self.alg.field())?;
        if rep.side() != side {
            return Err(Error::SideMismatch(format!("--{flag} must be a {side} module, got {}", rep.side())).into());
        }
        if rep.action().len() != self.alg.dim() {
            return Err(Failure::Input(format!(
                "--{flag} has {} action matrices, the algebra has dim {}",
                rep.action().len(),
                self.alg.dim()
            )));
        }
        froblab::modules::check_module(&self.alg, &rep).map_err(Error::from)?;
        Ok(rep)
    }

    fn pair(&self) -> Result<(ModuleRep, ModuleRep), Failure> {
        Ok((self.module(&self.opts.m, Side::Right, "M")?, self.module(&self.opts.n, Side::Left, "N")?))
    }

    fn names(&self, source: &str, prefix: &str, dim: usize) -> Vec<String> {
        if source == "regular" {
            self.alg.basis_names().to_vec()
        } else {
            (1..=dim).map(|i| format!("{prefix}{i}")).collect()
        }
    }

    fn header(&self) -> Value {
        json!({
            "algebra": self.label,
            "field": io::FieldJson::from(self.alg.field()),
            "dim": self.alg.dim(),
        })
    }

    fn title(&self) -> String {
        format!("{} over {} (dim {})", self.label, self.alg.field(), self.alg.dim())
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn emit(value: Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

fn with(mut base: Value, extra: Value) -> Value {
    if let (Some(b), Value::Object(e)) = (base.as_object_mut(), extra) {
        b.extend(e);
    }
    base
}

fn print_basis(names: &[&[String]], space: &Subspace) {
    for v in space.basis_vectors() {
        println!("  {}", format_tensor_with(names, &v));
    }
}

fn cmd_frobenius(job: &Job) -> Outcome {
    let fd = &job.fd;
    let gram_rank = froblab::linalg::rank(fd.gram());
    let delta = job.alg.format_tensor(fd.delta_one(), 2);
    if job.opts.json {
        emit(with(
            job.header(),
            json!({
                "command": "frobenius",
                "counit": strings(fd.counit()),
                "gram_rank": gram_rank,
                "symmetric": fd.is_symmetric(),
                "delta_one": strings(fd.delta_one()),
                "delta_one_text": delta,
            }),
        ));
    } else {
        println!("algebra: {}", job.title());
        println!("counit: {}", job.alg.format_tensor(fd.counit(), 1));
        println!("gram rank: {gram_rank}");
        println!("symmetric: {}", fd.is_symmetric());
        println!("delta_one: {delta}");
    }
    Ok(())
}

fn cmd_cotensor(job: &Job) -> Outcome {
    let (m, n) = job.pair()?;
    let res = cotensor(&job.fd, &m, &n)?;
    let mn = job.names(&job.opts.m, "m", m.dim());
    let nn = job.names(&job.opts.n, "n", n.dim());
    if job.opts.json {
        emit(with(
            job.header(),
            json!({
                "command": "cotensor",
                "cotensor_dim": res.box_space.dim(),
                "basis": vectors_to_strings(&res.box_space.basis_vectors()),
            }),
        ));
    } else {
        println!("algebra: {}", job.title());
        println!("dim M□N = {}", res.box_space.dim());
        print_basis(&[&mn, &nn], &res.box_space);
    }
    Ok(())
}

fn cmd_hom(job: &Job) -> Outcome {
    let (m, n) = job.pair()?;
    let iso = cotensor_hom_iso(&job.fd, &m, &n)?;
    let mn = job.names(&job.opts.m, "m", m.dim());
    let nn = job.names(&job.opts.n, "n", n.dim());
    if job.opts.json {
        emit(with(
            job.header(),
            json!({
                "command": "hom",
                "hom_dim": iso.hom_space.dim(),
                "cotensor_dim": iso.box_space.dim(),
                "basis": vectors_to_strings(&iso.hom_space.basis_vectors()),
                "isomorphism_verified": iso.verified,
            }),
        ));
    } else {
        println!("algebra: {}", job.title());
        println!("dim Hom_A^e(D, N⊗M) = {}", iso.hom_space.dim());
        println!("values on T∘δ(1):");
        print_basis(&[&nn, &mn], &iso.hom_space);
        println!("dim M□N = {}", iso.box_space.dim());
        println!("σ, τ mutually inverse: {}", iso.verified);
    }
    Ok(())
}

fn cmd_derived(job: &Job, command: &Command) -> Outcome {
    let (m, n) = job.pair()?;
    let deg = job.opts.max_deg;
    let (functor, complex): (&str, CochainComplex) = match command {
        Command::Ext => ("ext", ext(&job.fd, &m, &n, deg)?),
        Command::Cotor => ("cotor", cotor_direct(&job.fd, &m, &n, deg)?),
        Command::Hochschild => ("hochschild", hochschild(&job.alg, &tensor_bimodule(&job.fd, &m, &n)?, deg)?),
        _ => unreachable!(),
    };
    let dims = complex.cohomology();
    if job.opts.json {
        println!("{}", io::derived_to_json(functor, dims));
    } else {
        println!("algebra: {}", job.title());
        for (k, d) in dims.iter().enumerate() {
            println!("{functor}^{k} = {d}");
        }
    }
    Ok(())
}

fn cmd_compare_d(job: &Job) -> Outcome {
    let cmp = compare_d_delta_a(&job.fd)?;
    let verdict = if cmp.equal { "equal" } else { "not equal" };
    if job.opts.json {
        emit(with(
            job.header(),
            json!({
                "command": "compareD",
                "equal": cmp.equal,
                "symmetric": job.fd.is_symmetric(),
                "d_dim": cmp.d.dim(),
                "d_basis": vectors_to_strings(&cmp.d.basis_vectors()),
                "delta_dim": cmp.delta_a.dim(),
                "delta_basis": vectors_to_strings(&cmp.delta_a.basis_vectors()),
            }),
        ));
    } else {
        let names = job.alg.basis_names();
        println!("algebra: {}", job.title());
        println!("symmetric: {}", job.fd.is_symmetric());
        println!("δ(A), dim {}:", cmp.delta_a.dim());
        print_basis(&[names, names], &cmp.delta_a);
        println!("D, dim {}:", cmp.d.dim());
        print_basis(&[names, names], &cmp.d);
        println!("D vs δ(A): {verdict}");
    }
    Ok(())
}

fn cmd_verify(opts: &Opts, only: &[String], inject_fault: bool, samples: usize) -> Outcome {
    if opts.algebra.is_some() {
        return Err(Failure::Input("verify runs over builtins; use --builtin to restrict".into()));
    }
    let mut config = VerifyConfig {
        checks: verify::select_checks(only)?,
        seed: opts.seed,
        samples,
        max_deg: opts.max_deg,
        inject_fault,
        ..VerifyConfig::default()
    };
    let field = opts.field.as_deref().map(parse_field).transpose()?;
    if let Some(name) = &opts.builtin {
        let b = Builtin::parse(name, opts.param)?;
        let fields = match field {
            Some(f) => vec![f],
            None => vec![Field::Rational, Field::Prime(2), Field::Prime(3)],
        };
        config.cells = fields.into_iter().map(|f| (b, f)).collect();
    } else if let Some(f) = field {
        config.cells.retain(|(_, g)| *g == f);
    }
    let report = verify::run(&config);
    if opts.json {
        let outcomes: Vec<Value> = report
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "check": o.check,
                    "algebra": o.algebra,
                    "field": io::FieldJson::from(o.field),
                    "passed": o.passed,
                    "detail": o.detail,
                })
            })
            .collect();
        emit(json!({ "all_passed": report.all_passed(), "outcomes": outcomes }));
    } else {
        for o in &report.outcomes {
            println!("{o}");
        }
        println!();
        for (key, passed, total) in report.summary() {
            let verdict = if passed == total { "PASS" } else { "FAIL" };
            println!("{verdict} {key:<12} {passed}/{total}");
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification("some checks failed".into()))
    }
}
