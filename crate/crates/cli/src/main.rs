mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use flexmeadow::axioms::{
    catalog, check_laws, default_catalogs, eval, parse_law_file, parse_term, Env, Law, Report, Status, Strategy,
    CATALOGS,
};
use flexmeadow::carrier::{visit_model, GenConfig, MeadowCarrier, ModelId, ModelVisitor};
use flexmeadow::{ExtNum, Neutrix};

use report::{text_line, JsonReport, JsonResult};

const MAX_SAMPLES: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "flexmeadow", version, about = "Check meadow axioms in external-number models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check axiom catalogs in a model.
    Check(CheckArgs),
    /// Evaluate a term in a model.
    Eval(EvalArgs),
    /// Split a neutrix as r times an idempotent neutrix.
    Decompose {
        /// zero, full, o, L or cut(q,open|closed)
        neutrix: String,
    },
    /// The set quotient {x : x*B is inside A}.
    Quotient {
        a: String,
        b: String,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// external, ffp:<p>, ffp-common:<p>, rhat-common or rat-involutive
    #[arg(long, default_value = "external")]
    model: ModelId,
    /// Catalog to check; repeatable. Defaults to the model's own axioms.
    #[arg(long = "catalog")]
    catalogs: Vec<String>,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Try every assignment instead of sampling (finite models only).
    #[arg(long)]
    exhaustive: bool,
    /// Write a JSON report to this path, or to stdout for '-'.
    #[arg(long)]
    json: Option<String>,
    /// Print the selected laws and exit.
    #[arg(long)]
    list_axioms: bool,
    /// Extra laws, one per line: `id : lhs = rhs` or `id : zeroless(x) => lhs = rhs`.
    #[arg(long)]
    law_file: Option<PathBuf>,
    /// Exponent numerators of random values range over -N..=N.
    #[arg(long, default_value_t = 3)]
    max_exp_num: i64,
    /// Largest denominator of random exponents and coefficients.
    #[arg(long, default_value_t = 3)]
    max_den: i64,
    /// Largest absolute coefficient numerator of random values.
    #[arg(long, default_value_t = 10)]
    coeff_bound: i64,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, default_value = "external")]
    model: ModelId,
    term: String,
    /// Variable binding `name=literal`; repeatable.
    #[arg(long = "bind")]
    binds: Vec<String>,
}

/// Failure that maps to exit status 2.
struct UsageError(anyhow::Error);

fn usage<T>(r: Result<T>) -> Result<T, UsageError> {
    r.map_err(UsageError)
}

struct CheckRun<'a> {
    laws: &'a [Law],
    strategy: &'a Strategy,
}

impl ModelVisitor for CheckRun<'_> {
    type Output = Vec<Report>;
    fn visit<M: MeadowCarrier>(self, model: &M) -> Vec<Report> {
        check_laws(model, self.laws, self.strategy)
    }
}

struct EvalRun<'a> {
    term: &'a str,
    binds: &'a [String],
}

impl ModelVisitor for EvalRun<'_> {
    type Output = Result<String>;
    fn visit<M: MeadowCarrier>(self, model: &M) -> Result<String> {
        let term = parse_term(self.term).map_err(|e| anyhow!("term: {e}"))?;
        let mut env: Env<M::Value> = Env::new();
        for b in self.binds {
            let (name, lit) = b
                .split_once('=')
                .ok_or_else(|| anyhow!("binding '{b}' is not of the form name=literal"))?;
            let value = model
                .parse(lit)
                .map_err(|e| anyhow!("binding {}: {e}", name.trim()))?;
            env.push((name.trim().to_string(), value));
        }
        let v = eval(model, &term, &env)?;
        Ok(model.format(&v))
    }
}

fn selected_laws(args: &CheckArgs) -> Result<Vec<Law>> {
    let mut names: Vec<String> = args.catalogs.clone();
    if names.is_empty() && args.law_file.is_none() {
        names = default_catalogs(args.model).into_iter().map(String::from).collect();
    }
    let mut laws = Vec::new();
    let mut seen: Vec<&str> = Vec::new();
    for n in &names {
        if seen.contains(&n.as_str()) {
            continue;
        }
        seen.push(n);
        laws.extend(catalog(n)?);
    }
    if let Some(path) = &args.law_file {
        let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        laws.extend(parse_law_file(&src, "file")?);
    }
    Ok(laws)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, UsageError> {
    if args.list_axioms {
        let names: Vec<String> = if args.catalogs.is_empty() && args.law_file.is_none() {
            CATALOGS.iter().map(|c| c.to_string()).collect()
        } else {
            args.catalogs.clone()
        };
        for n in &names {
            println!("# {n}");
            for law in usage(catalog(n).map_err(Into::into))? {
                println!("{law}");
            }
        }
        if let Some(path) = &args.law_file {
            let src = usage(fs::read_to_string(path).with_context(|| format!("reading {}", path.display())))?;
            println!("# file");
            for law in usage(parse_law_file(&src, "file").map_err(Into::into))? {
                println!("{law}");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    if !(1..=MAX_SAMPLES).contains(&args.samples) {
        return Err(UsageError(anyhow!("--samples must be between 1 and {MAX_SAMPLES}")));
    }
    if args.exhaustive && !args.model.is_finite() {
        return Err(UsageError(anyhow!("--exhaustive needs a finite model (ffp:<p> or ffp-common:<p>)")));
    }
    let laws = usage(selected_laws(&args))?;
    let strategy = if args.exhaustive {
        Strategy::Exhaustive
    } else {
        Strategy::Random {
            samples: args.samples,
            seed: args.seed,
            gen: GenConfig {
                max_exp_num: args.max_exp_num,
                max_den: args.max_den,
                coeff_bound: args.coeff_bound,
                ..GenConfig::default()
            },
        }
    };
    let reports = usage(
        visit_model(args.model, CheckRun { laws: &laws, strategy: &strategy }).map_err(Into::into),
    )?;

    let json_to_stdout = args.json.as_deref() == Some("-");
    let mut text: Box<dyn Write> = if json_to_stdout {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    for r in &reports {
        let _ = writeln!(text, "{}", text_line(r));
    }
    let count = |f: fn(&Status) -> bool| reports.iter().filter(|r| f(&r.status)).count();
    let passed = count(|s| matches!(s, Status::Pass));
    let failed = count(|s| matches!(s, Status::Counterexample(_)));
    let errors = count(|s| matches!(s, Status::Error(_)));
    let _ = writeln!(
        text,
        "model {}: {passed} passed, {failed} failed, {errors} errors",
        args.model
    );

    if let Some(dest) = &args.json {
        let doc = JsonReport {
            model: args.model.to_string(),
            results: reports.iter().map(JsonResult::from).collect(),
            seed: args.seed,
            timestamp: chrono::Utc::now().to_rfc3339(),
        };
        let body = serde_json::to_string_pretty(&doc).expect("report serializes");
        if json_to_stdout {
            println!("{body}");
        } else {
            usage(fs::write(dest, body + "\n").with_context(|| format!("writing {dest}")))?;
        }
    }
    Ok(if failed > 0 {
        ExitCode::from(1)
    } else if errors > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Eval(args) => {
            let run = EvalRun {
                term: &args.term,
                binds: &args.binds,
            };
            let out = usage(visit_model(args.model, run).map_err(Into::into).and_then(|r| r))?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { neutrix } => {
            let n: Neutrix = usage(neutrix.parse().map_err(|e| anyhow!("neutrix: {e}")))?;
            let (r, i) = n.decompose();
            println!("r={r}, I={i}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { a, b } => {
            let a: ExtNum = usage(a.parse().map_err(|e| anyhow!("dividend: {e}")))?;
            let b: ExtNum = usage(b.parse().map_err(|e| anyhow!("divisor: {e}")))?;
            println!("{}", a.quotient(&b));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

