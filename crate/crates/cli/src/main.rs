//! `dequation`: command-line front end.
//!
//! Exit status: 0 on success, 1 when a computed verdict is negative, 2 when
//! nothing could be computed (bad usage, unreadable or malformed input).

mod selftest;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dequation::classify::{budget_from_env, BUDGET_ENV, enumerate_solutions, CensusConfig, Filter};
use dequation::coalg::format_combination;
use dequation::dimodule::{compat_failures, dimodule_from_grading, r_from_dimodule, LongDimodule};
use dequation::dmap::{convolution_inverse_of_sigma, first_asymmetry, sigma_from_r, DMap};
use dequation::exactmath::{Field, Matrix};
use dequation::formats::{parse_graded_file, parse_matrix_file, write_graded_file, write_matrix_file};
use dequation::frt::d_bialgebra;
use dequation::tensor_ops::{
    check_d, check_equivalent_forms, check_hopf, check_pentagon, check_qybe, first_d_violation, EndoPair,
    DEFAULT_MAX_N,
};
use dequation::{fixtures, Error};

#[derive(Parser, Debug)]
#[command(name = "dequation", version, about = "Exact tools for the D-equation R12 R23 = R23 R12")]
struct Cli {
    /// Also write the main results as `key=value` lines to this file.
    #[arg(long, global = true, value_name = "FILE")]
    sidecar: Option<PathBuf>,

    /// Print timings to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verdicts for the D-equation, QYBE, Hopf and pentagon equations and the equivalent forms.
    Check {
        file: PathBuf,
        /// Verdict that decides the exit status.
        #[arg(long, value_enum, default_value_t = Require::D)]
        require: Require,
    },
    /// Presentation of the bialgebra D(R).
    Frt { file: PathBuf },
    /// The D-map σ attached to R.
    Dmap { file: PathBuf },
    /// Long dimodule from a graded kG-module, its compatibility and the regenerated R.
    Dimodule {
        file: PathBuf,
        /// Write the regenerated operator as a matrix file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Exhaustive census of solutions over F_p.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "all")]
        filter: Filter,
        /// Reduce modulo GL_n(F_p) conjugation.
        #[arg(long)]
        orbits: bool,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Maximum number of candidates (default from DEQUATION_BUDGET, else 2^20).
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Write the example operators as matrix files.
    Examples {
        #[arg(long, default_value = "examples")]
        dir: PathBuf,
    },
    /// Randomized consistency checks over F_5.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Require {
    D,
    Qybe,
    Hopf,
    Pentagon,
    Forms,
    None,
}

/// What a subcommand produced.
struct Outcome {
    report: String,
    sidecar: Vec<(String, String)>,
    negative: bool,
}

impl Outcome {
    fn new() -> Self {
        Outcome { report: String::new(), sidecar: Vec::new(), negative: false }
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.report.push_str(text.as_ref());
        self.report.push('\n');
    }

    fn key(&mut self, key: &str, value: impl ToString) {
        self.sidecar.push((key.to_string(), value.to_string()));
    }

    /// A labelled fact that goes to both the report and the sidecar.
    fn fact(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        self.line(format!("{key} {value}"));
        self.key(&key.replace(' ', "_"), value);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.command);
    if cli.verbose {
        eprintln!("elapsed {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(out) => {
            print!("{}", out.report);
            if let Some(path) = &cli.sidecar {
                let mut text = String::new();
                for (k, v) in &out.sidecar {
                    let _ = writeln!(text, "{k}={v}");
                }
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(Failure::Negative(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

enum Failure {
    /// A mathematical answer that is "no", reported on stdout.
    Negative(String),
    Fatal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotASolution(_) | Error::NotSymmetric(_) | Error::Incompatible(_) => Failure::Negative(e.to_string()),
            Error::BudgetExceeded { .. } => {
                Failure::Fatal(format!("{e}; raise it with --budget or {BUDGET_ENV} to run the scan"))
            }
            other => Failure::Fatal(other.to_string()),
        }
    }
}

fn with_path(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Fatal(format!("{}: {e}", path.display())),
        other => other.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Fatal(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Fatal(format!("cannot write {}: {e}", path.display())))
}

fn load_operator(path: &Path) -> Result<EndoPair, Failure> {
    let r = parse_matrix_file(&read(path)?).map_err(|e| with_path(path, e))?;
    if r.n() > DEFAULT_MAX_N {
        return Err(Failure::Fatal(format!("dim {} exceeds the supported maximum {DEFAULT_MAX_N}", r.n())));
    }
    Ok(r)
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Check { file, require } => check(&load_operator(file)?, *require),
        Command::Frt { file } => frt(&load_operator(file)?),
        Command::Dmap { file } => dmap(&load_operator(file)?),
        Command::Dimodule { file, out } => dimodule(file, out.as_deref()),
        Command::Classify { n, p, filter, orbits, out, budget, workers } => {
            if *n == 0 || *n > DEFAULT_MAX_N {
                return Err(Failure::Fatal(format!("--n must lie in 1..={DEFAULT_MAX_N}")));
            }
            let mut cfg = CensusConfig::new(*n, *p);
            cfg.filter = *filter;
            cfg.orbits = *orbits;
            cfg.workers = *workers;
            cfg.budget = match budget {
                Some(b) => *b,
                None => budget_from_env()?,
            };
            classify(&cfg, out.as_deref())
        }
        Command::Examples { dir } => examples(dir),
        Command::Selftest { seed, cases } => Ok(selftest::run(*seed, *cases)),
    }
}

fn yes(b: bool) -> &'static str {
    if b { "true" } else { "false" }
}

fn check(r: &EndoPair, require: Require) -> Result<Outcome, Failure> {
    let mut out = Outcome::new();
    out.fact("field", r.field().header());
    out.fact("n", r.n());
    let forms = check_equivalent_forms(r);
    let d = check_d(r);
    let qybe = check_qybe(r);
    let hopf = check_hopf(r);
    let pentagon = check_pentagon(r);
    out.fact("D", yes(d));
    out.fact("QYBE", yes(qybe));
    out.fact("Hopf", yes(hopf));
    out.fact("pentagon", yes(pentagon));
    out.fact("form T", yes(forms.form_t));
    out.fact("form U", yes(forms.form_u));
    out.fact("form W", yes(forms.form_w));
    out.fact("form W literal", yes(forms.form_w_literal));
    let agree = forms.all_agree();
    out.fact("forms agree", yes(agree));
    if let Some(v) = first_d_violation(r) {
        let v = v.map(|x| x + 1);
        out.line(format!("first failing (i,j,k,l,p,q) {v:?}"));
        out.key("first_failure", format!("{},{},{},{},{},{}", v[0], v[1], v[2], v[3], v[4], v[5]));
    }
    out.negative = match require {
        Require::D => !d,
        Require::Qybe => !qybe,
        Require::Hopf => !hopf,
        Require::Pentagon => !pentagon,
        Require::Forms => !agree,
        Require::None => false,
    };
    Ok(out)
}

fn frt(r: &EndoPair) -> Result<Outcome, Failure> {
    let pres = d_bialgebra(r)?;
    let mut out = Outcome::new();
    out.report = pres.report();
    out.key("field", r.field().header());
    out.key("n", r.n());
    out.key("dim_coideal", pres.coideal().dim());
    out.key("relations", pres.relation_strings().join("; "));
    out.key("generators", pres.generators().dim());
    let ok = pres.round_trip();
    out.key("round_trip", yes(ok));
    out.negative = !ok;
    Ok(out)
}

fn dmap(r: &EndoPair) -> Result<Outcome, Failure> {
    let dm = sigma_from_r(r)?;
    let field = r.field();
    let mut out = Outcome::new();
    out.fact("field", field.header());
    out.fact("n", r.n());
    let q = dm.quotient();
    let parent = dm.coalgebra();
    out.fact("coideal dim", q.coideal().dim());
    for v in q.coideal().basis() {
        let terms: Vec<_> = parent
            .labels()
            .iter()
            .cloned()
            .zip(v.iter().cloned())
            .filter(|(_, k)| !k.is_zero())
            .collect();
        out.line(format!("  {} = 0", format_combination(field, &terms)));
    }
    let quotient = q.coalgebra();
    out.fact("quotient dim", quotient.dim());
    for s in 0..quotient.dim() {
        out.line(format!("  {}: Δ = {}", quotient.label(s), quotient.format_delta(s)));
    }
    out.fact("strong", yes(dm.is_strong()));
    out.fact("symmetric", yes(first_asymmetry(r).is_none()));
    out.fact("is dmap", yes(dm.is_dmap()));
    let entries = sigma_entries(&dm);
    out.fact("sigma nonzero", entries.len());
    for line in &entries {
        out.line(format!("  {line}"));
    }
    match convolution_inverse_of_sigma(r) {
        Ok(_) => out.fact("convolution inverse", "exists"),
        Err(Error::Singular(_)) => out.fact("convolution inverse", "none"),
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

/// `σ(c, d̄) = value` for nonzero entries, in basis order.
fn sigma_entries(dm: &DMap) -> Vec<String> {
    let field = dm.field();
    let (c, q) = (dm.coalgebra(), dm.quotient().coalgebra());
    let table = dm.sigma().table();
    let mut lines = Vec::new();
    for a in 0..c.dim() {
        for s in 0..q.dim() {
            let v = table.get(a, s);
            if !v.is_zero() {
                lines.push(format!("σ({}, {}) = {}", c.label(a), q.label(s), v.display(field)));
            }
        }
    }
    lines
}

fn matrix_lines(out: &mut Outcome, m: &Matrix, field: &Field) {
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).display(field).to_string()).collect();
        out.line(format!("    {}", row.join(if matches!(field, Field::Functions(_)) { ", " } else { " " })));
    }
}

fn dimodule(path: &Path, save: Option<&Path>) -> Result<Outcome, Failure> {
    let graded = parse_graded_file(&read(path)?).map_err(|e| with_path(path, e))?;
    let field = graded.field().clone();
    let group = graded.group();
    let d: LongDimodule = dimodule_from_grading(&graded)?;
    let mut out = Outcome::new();
    out.fact("field", field.header());
    out.fact("group order", group.order());
    out.fact("dim", graded.dim());
    out.line("action");
    for (g, m) in graded.action().iter().enumerate() {
        out.line(format!("  {}", group.names()[g]));
        matrix_lines(&mut out, m, &field);
    }
    out.line("coaction");
    let co = d.comodule();
    let labels = co.coalgebra().labels();
    for l in 0..co.dim() {
        let mut terms = Vec::new();
        for v in 0..co.dim() {
            for (a, label) in labels.iter().enumerate() {
                let k = co.coeff(l, v, a);
                if !k.is_zero() {
                    terms.push((format!("m{} ⊗ {label}", v + 1), k.clone()));
                }
            }
        }
        out.line(format!("  ρ(m{}) = {}", l + 1, format_combination(&field, &terms)));
    }
    let failures = compat_failures(d.action(), co);
    out.line("compatibility");
    for (g, name) in group.names().iter().enumerate() {
        let row: Vec<&str> = (0..graded.dim()).map(|l| if failures.contains(&(g, l)) { "FAIL" } else { "ok" }).collect();
        out.line(format!("  {name}: {}", row.join(" ")));
    }
    out.fact("compatible", yes(failures.is_empty()));
    if !failures.is_empty() {
        out.negative = true;
        return Ok(out);
    }
    let r = r_from_dimodule(&d)?;
    let (is_d, qybe) = (check_d(&r), check_qybe(&r));
    out.fact("regenerated D", yes(is_d));
    out.fact("regenerated QYBE", yes(qybe));
    out.negative = !is_d;
    match save {
        Some(p) => write(p, &write_matrix_file(&r))?,
        None => {
            out.line("regenerated R");
            for line in write_matrix_file(&r).lines() {
                out.line(format!("  {line}"));
            }
        }
    }
    Ok(out)
}

fn classify(cfg: &CensusConfig, save: Option<&Path>) -> Result<Outcome, Failure> {
    let report = enumerate_solutions(cfg)?;
    let mut out = Outcome::new();
    for (k, v) in report.counts() {
        out.key(k, v);
    }
    let text = report.render();
    match save {
        Some(p) => {
            write(p, &text)?;
            for (k, v) in report.counts() {
                out.line(format!("{k} {v}"));
            }
        }
        None => out.report = text,
    }
    Ok(out)
}

fn examples(dir: &Path) -> Result<Outcome, Failure> {
    std::fs::create_dir_all(dir).map_err(|e| Failure::Fatal(format!("cannot create {}: {e}", dir.display())))?;
    let mut out = Outcome::new();
    for fx in fixtures::all() {
        let path = dir.join(format!("{}.txt", fx.name));
        let text = format!("# {}\n{}", fx.description, write_matrix_file(&fx.r));
        write(&path, &text)?;
        out.line(format!("{}  {}", path.display(), fx.description));
    }
    let graded = fixtures::s3_graded_module(&Field::Rationals);
    let path = dir.join("s3-graded-module.txt");
    write(&path, &format!("# graded S3-module behind s3-graded\n{}", write_graded_file(&graded)))?;
    out.line(format!("{}  graded module for the dimodule subcommand", path.display()));
    out.key("written", fixtures::all().len() + 1);
    Ok(out)
}
