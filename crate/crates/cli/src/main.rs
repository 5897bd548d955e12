use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pellhopf::algebra::{Basis, ModuleElement, TensorElement};
use pellhopf::congruence::{
    av_coproduct, av_dual_coproduct, av_dual_product, av_product, enumerate_avoiders, pi_down,
    pi_up, CongruenceSystem,
};
use pellhopf::hasse::{avoider_hasse, sash_hasse, weak_hasse, HasseDiagram};
use pellhopf::mr::{mr_coproduct, mr_dual_coproduct, mr_dual_product, mr_product};
use pellhopf::perm::{all_permutations, IndexSet, Permutation, Word};
use pellhopf::sash::{enumerate_sashes, eta, sigma, Sash};
use pellhopf::sash_hopf::{
    sash_coproduct, sash_dual_coproduct, sash_dual_product, sash_product, tau,
};
use pellhopf::verify::{parse_suites, run, VerifyOptions};

const ENUMERATE_MAX: usize = 10;
const HASSE_MAX: usize = 7;
const VERIFY_MAX: usize = 8;

#[derive(Parser)]
#[command(name = "pellhopf", version, about = "Hopf algebras on permutations, Pell permutations and sashes")]
struct Cli {
    /// Emit one JSON record per line.
    #[arg(long, global = true)]
    json: bool,

    /// Congruence system: `pell` or a comma list of patterns like `2(31),(41)23`.
    #[arg(long, global = true, default_value = "pell")]
    system: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List permutations, avoiders of the system, or sashes of a given length.
    Enumerate { kind: Kind, n: usize },
    /// Apply σ, η, π↓, π↑ or τ to one input.
    Map {
        which: MapKind,
        input: String,
        /// Allowable set for `tau`, e.g. `1,4,5`.
        #[arg(long)]
        set: Option<String>,
    },
    /// Evaluate one operation of an algebra on basis elements.
    Op {
        algebra: AlgebraKind,
        op: OpKind,
        operands: Vec<String>,
    },
    /// Run verification suites: all, bijection, congruence,
    /// intrinsic-vs-extrinsic, hopf-axioms or duality.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_grade: usize,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a Hasse diagram as a DOT digraph.
    Hasse { kind: Kind, n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(alias = "weak")]
    Permutations,
    Avoiders,
    Sashes,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Sigma,
    Eta,
    Pidown,
    Piup,
    Tau,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraKind {
    Mr,
    Av,
    Sash,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Product,
    Coproduct,
    DualProduct,
    DualCoproduct,
}

/// A usage or input error; exits with status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

/// `default`, lowered by `PELLHOPF_MAX_N` when that is smaller.
fn limit(default: usize) -> usize {
    std::env::var("PELLHOPF_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map_or(default, |env| env.min(default))
}

fn check_limit(what: &str, n: usize, default: usize) -> CliResult<()> {
    let max = limit(default);
    if n > max {
        return Err(UsageError(format!("{what} {n} exceeds the limit {max}")));
    }
    Ok(())
}

struct Out {
    json: bool,
    lines: Vec<String>,
}

impl Out {
    fn text(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn record(&mut self, text: impl Into<String>, value: Value) {
        if self.json {
            self.lines.push(value.to_string());
        } else {
            self.lines.push(text.into());
        }
    }
}

fn element_json<B: Basis>(e: &ModuleElement<B>) -> Value {
    Value::Array(
        e.terms()
            .map(|(b, c)| json!({"basis": b.to_string(), "coefficient": c.to_string()}))
            .collect(),
    )
}

fn tensor_json<B: Basis>(e: &TensorElement<B>) -> Value {
    Value::Array(
        e.terms()
            .map(|((a, b), c)| {
                json!({"left": a.to_string(), "right": b.to_string(), "coefficient": c.to_string()})
            })
            .collect(),
    )
}

fn enumerate(kind: Kind, n: usize, system: &CongruenceSystem, out: &mut Out) -> CliResult<()> {
    check_limit("n", n, ENUMERATE_MAX)?;
    let items: Vec<String> = match kind {
        Kind::Permutations => all_permutations(n).iter().map(ToString::to_string).collect(),
        Kind::Avoiders => enumerate_avoiders(n, system).iter().map(ToString::to_string).collect(),
        Kind::Sashes => enumerate_sashes(n as i64)?.iter().map(ToString::to_string).collect(),
    };
    for item in &items {
        out.record(item.clone(), json!({"item": item}));
    }
    out.record(format!("count={}", items.len()), json!({"count": items.len()}));
    Ok(())
}

fn map(which: MapKind, input: &str, set: Option<&str>, system: &CongruenceSystem, out: &mut Out) -> CliResult<()> {
    let result = match which {
        MapKind::Sigma => sigma(&input.parse::<Word>()?).to_string(),
        MapKind::Eta => eta(&input.parse::<Sash>()?).to_string(),
        MapKind::Pidown => pi_down(&input.parse::<Permutation>()?, system).to_string(),
        MapKind::Piup => pi_up(&input.parse::<Permutation>()?, system).to_string(),
        MapKind::Tau => {
            let set = set.ok_or_else(|| UsageError("tau needs --set".into()))?;
            tau(&input.parse::<Sash>()?, &set.parse::<IndexSet>()?)?.to_string()
        }
    };
    out.record(result.clone(), json!({"input": input, "output": result}));
    Ok(())
}

fn operands<T: std::str::FromStr>(raw: &[String], count: usize) -> CliResult<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    if raw.len() != count {
        return Err(UsageError(format!("expected {count} operand(s), got {}", raw.len())));
    }
    raw.iter()
        .map(|s| s.parse::<T>().map_err(|e| UsageError(e.to_string())))
        .collect()
}

fn arity(op: OpKind) -> usize {
    match op {
        OpKind::Product | OpKind::DualProduct => 2,
        OpKind::Coproduct | OpKind::DualCoproduct => 1,
    }
}

enum Outcome<B: Basis> {
    Element(ModuleElement<B>),
    Tensor(TensorElement<B>),
}

fn emit<B: Basis>(outcome: Outcome<B>, out: &mut Out) {
    match outcome {
        Outcome::Element(e) => out.record(e.to_string(), json!({"result": e.to_string(), "terms": element_json(&e)})),
        Outcome::Tensor(t) => out.record(t.to_string(), json!({"result": t.to_string(), "terms": tensor_json(&t)})),
    }
}

fn op(algebra: AlgebraKind, op: OpKind, raw: &[String], system: &CongruenceSystem, out: &mut Out) -> CliResult<()> {
    let n = arity(op);
    match algebra {
        AlgebraKind::Mr => {
            let xs: Vec<Permutation> = operands(raw, n)?;
            emit(
                match op {
                    OpKind::Product => Outcome::Element(mr_product(&xs[0], &xs[1])),
                    OpKind::DualProduct => Outcome::Element(mr_dual_product(&xs[0], &xs[1])),
                    OpKind::Coproduct => Outcome::Tensor(mr_coproduct(&xs[0])),
                    OpKind::DualCoproduct => Outcome::Tensor(mr_dual_coproduct(&xs[0])),
                },
                out,
            );
        }
        AlgebraKind::Av => {
            let xs: Vec<Permutation> = operands(raw, n)?;
            emit(
                match op {
                    OpKind::Product => Outcome::Element(av_product(&xs[0], &xs[1], system)?),
                    OpKind::DualProduct => Outcome::Element(av_dual_product(&xs[0], &xs[1], system)?),
                    OpKind::Coproduct => Outcome::Tensor(av_coproduct(&xs[0], system)?),
                    OpKind::DualCoproduct => Outcome::Tensor(av_dual_coproduct(&xs[0], system)?),
                },
                out,
            );
        }
        AlgebraKind::Sash => {
            if *system != CongruenceSystem::pell() {
                return Err(UsageError("the sash algebra exists for the pell system only".into()));
            }
            let xs: Vec<Sash> = operands(raw, n)?;
            emit(
                match op {
                    OpKind::Product => Outcome::Element(sash_product(&xs[0], &xs[1])),
                    OpKind::DualProduct => Outcome::Element(sash_dual_product(&xs[0], &xs[1])),
                    OpKind::Coproduct => Outcome::Tensor(sash_coproduct(&xs[0])),
                    OpKind::DualCoproduct => Outcome::Tensor(sash_dual_coproduct(&xs[0])),
                },
                out,
            );
        }
    }
    Ok(())
}

/// Returns whether every check passed.
fn verify(suite: &str, max_grade: usize, seed: u64, jobs: Option<usize>, out: &mut Out) -> CliResult<bool> {
    check_limit("max-grade", max_grade, VERIFY_MAX)?;
    let suites = parse_suites(suite)?;
    let opts = VerifyOptions { max_grade, seed };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(UsageError("--jobs must be positive".into()));
        }
        pool = pool.num_threads(j);
    }
    let reports = pool.build()?.install(|| run(&suites, &opts));
    for r in &reports {
        out.record(
            r.to_string(),
            json!({
                "suite": r.suite.name(),
                "check": r.name,
                "passed": r.passed(),
                "cases": r.cases,
                "note": r.note,
                "counterexample": r.failure,
            }),
        );
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.record(
        format!("summary checks={} passed={} failed={failed}", reports.len(), reports.len() - failed),
        json!({"checks": reports.len(), "passed": reports.len() - failed, "failed": failed}),
    );
    Ok(failed == 0)
}

fn hasse(kind: Kind, n: usize, system: &CongruenceSystem, out: &mut Out) -> CliResult<()> {
    check_limit("n", n, HASSE_MAX)?;
    let diagram: HasseDiagram = match kind {
        Kind::Permutations => weak_hasse(n),
        Kind::Avoiders => avoider_hasse(n, system),
        Kind::Sashes => sash_hasse(n)?,
    };
    if out.json {
        out.text(json!({"name": diagram.name, "nodes": diagram.nodes, "edges": diagram.edges}).to_string());
    } else {
        out.text(diagram.to_dot().trim_end().to_string());
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut Out) -> CliResult<bool> {
    let system: CongruenceSystem = cli.system.parse()?;
    match &cli.command {
        Command::Enumerate { kind, n } => enumerate(*kind, *n, &system, out)?,
        Command::Map { which, input, set } => map(*which, input, set.as_deref(), &system, out)?,
        Command::Op { algebra, op: o, operands } => op(*algebra, *o, operands, &system, out)?,
        Command::Verify {
            suite,
            max_grade,
            seed,
            jobs,
        } => return verify(suite, *max_grade, *seed, *jobs, out),
        Command::Hasse { kind, n } => hasse(*kind, *n, &system, out)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        json: cli.json,
        lines: Vec::new(),
    };
    let status = execute(&cli, &mut out);
    let mut stdout = io::stdout().lock();
    for line in &out.lines {
        if writeln!(stdout, "{line}").is_err() {
            return ExitCode::from(2);
        }
    }
    match status {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
