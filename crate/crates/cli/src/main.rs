//! `sww`: evaluate diagrams, decompose Kronecker tensors, run relation
//! suites and duality checks from the shell.
//!
//! Exit status is 0 on success, 1 when a report contains a FAIL and 2 on
//! malformed input or a tripped size guard.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sww::brauer::{duality_check, sp_ladder_relation_suite, BrauerDiagram, BrauerElement, TensorKind};
use sww::combinatorics::{multinomial, WeightVector};
use sww::doty::{is_saturated_gl, is_saturated_sl2, schur_block_dims, sl2_doty_demo, Saturation};
use sww::kronecker::{decompose_tensor, tensor_generator, Generator, Side};
use sww::linear::format_rational;
use sww::spider::{evaluate, gl_instances, parse_combination, perm_instances, relation_suite, RelationInstance, SpiderExpr, Suite};
use sww::tabloid::{format_combination, Tabloid};

#[derive(Parser)]
#[command(name = "sww", version, about = "Exact diagram calculus for permutation modules and Brauer algebras")]
struct Cli {
    /// Largest basis allowed for any module touched by the command.
    #[arg(long, global = true, env = "SWW_MAX_DIM", default_value_t = 5000)]
    max_dim: u64,
    /// Worker threads for relation suites.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a diagram expression as a matrix between permutation modules.
    Eval(EvalArgs),
    /// Decompose `M^λ ⊗ M^μ`, or express a tensored ladder generator in blocks.
    Kron(KronArgs),
    /// Check a family of defining relations exactly.
    Relations(RelationsArgs),
    /// Ladder-word Hom dimensions against contingency counts, as CSV.
    SchurDims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Saturation of a set of highest weights, or the sl2 kernel example.
    DotyCheck(DotyArgs),
    /// Brauer algebra products and duality checks.
    Brauer(BrauerArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Diagram expression, or `@path` to read it from a file.
    #[arg(long)]
    expr: String,
    /// Tabloid to apply the map to, e.g. `1,2|3`.
    #[arg(long)]
    apply: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KronArgs {
    /// Left composition, e.g. `3,1`.
    #[arg(long)]
    lhs: String,
    /// Right composition.
    #[arg(long)]
    rhs: String,
    /// Generator as `E|F,left|right,j`, e.g. `F,right,1`.
    #[arg(long)]
    gen: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Perm,
    Gl,
    Sp,
}

#[derive(Args)]
struct RelationsArgs {
    #[arg(long, value_enum)]
    suite: SuiteName,
    /// Largest label (perm), degree and rank (gl) or degree (sp).
    #[arg(long)]
    max: usize,
    /// Rank bound for the sp suite.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Print only failures and the summary line.
    #[arg(long)]
    quiet: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DotyArgs {
    /// Built-in example; only `sl2` exists.
    #[arg(long)]
    demo: Option<String>,
    /// JSON file: an array of highest weights for gl_n, or `{"sl2": [..]}`.
    #[arg(long)]
    module: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sp,
    O,
    Mixed,
}

#[derive(Args)]
struct BrauerArgs {
    /// Two diagrams such as `2; t1-b2, t2-b1`.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], conflicts_with = "duality")]
    mult: Option<Vec<String>>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    delta: i64,
    #[arg(long, value_enum)]
    duality: Option<Kind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// Why a command stopped.
enum Failure {
    /// Bad input or a size guard; exit status 2.
    Input(String),
    /// A report with at least one FAIL; exit status 1.
    Check,
}

impl From<sww::Error> for Failure {
    fn from(e: sww::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn input(message: impl Into<String>) -> Failure {
    Failure::Input(message.into())
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn guard(what: &str, dim: u64, max_dim: u64) -> Outcome {
    if dim > max_dim {
        return Err(input(format!("{what} has dimension {dim}, above --max-dim {max_dim}")));
    }
    Ok(())
}

fn module_dim(labels: &[i64]) -> u64 {
    if labels.iter().any(|&x| x < 0) {
        return 0;
    }
    let parts: Vec<usize> = labels.iter().map(|&x| x as usize).collect();
    u64::try_from(multinomial(&parts)).unwrap_or(u64::MAX)
}

fn guard_expr(e: &SpiderExpr, max_dim: u64) -> Outcome {
    for (d, _) in e.terms() {
        for boundary in d.boundaries() {
            guard(&format!("M^{boundary:?}"), module_dim(boundary), max_dim)?;
        }
    }
    Ok(())
}

fn parse_list(flag: &str, text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .enumerate()
        .map(|(k, part)| {
            part.trim()
                .parse()
                .map_err(|_| input(format!("--{flag}: entry {} ('{}') is not a nonnegative integer", k + 1, part.trim())))
        })
        .collect()
}

fn read_argument(text: &str) -> Result<String, Failure> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| input(format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn eval(args: &EvalArgs, max_dim: u64) -> Outcome {
    let text = read_argument(&args.expr)?;
    let expr = parse_combination(text.trim())?;
    guard_expr(&expr, max_dim)?;
    let f = evaluate(&expr)?;
    match &args.apply {
        Some(t) => {
            let t: Tabloid = t.parse()?;
            let image = f.apply(&t)?;
            if args.json {
                let terms: Vec<_> = image
                    .iter()
                    .map(|(s, c)| json!({"tabloid": s.to_string(), "coefficient": format_rational(c)}))
                    .collect();
                println!("{}", pretty(&json!({"input": t.to_string(), "image": terms})));
            } else {
                println!("{}", format_combination(&image));
            }
        }
        None if args.json => println!("{}", pretty(&f.to_json())),
        None => {
            println!("M^{:?} -> M^{:?} ({}x{})", f.source(), f.target(), f.map().rows(), f.map().cols());
            for row in f.map().to_dense() {
                println!("{}", row.iter().map(format_rational).collect::<Vec<_>>().join(" "));
            }
        }
    }
    Ok(())
}

fn parse_generator(text: &str) -> Result<(Generator, Side, usize), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [g, side, j] = parts[..] else {
        return Err(input(format!("--gen expects E|F,left|right,j; got '{text}'")));
    };
    let g = match g {
        "E" => Generator::E,
        "F" => Generator::F,
        other => return Err(input(format!("--gen: generator '{other}' is not E or F"))),
    };
    let side = match side.to_ascii_lowercase().as_str() {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return Err(input(format!("--gen: side '{other}' is not left or right"))),
    };
    let j = j.parse().map_err(|_| input(format!("--gen: index '{j}' is not a positive integer")))?;
    Ok((g, side, j))
}

fn kron(args: &KronArgs, max_dim: u64) -> Outcome {
    let lambda = parse_list("lhs", &args.lhs)?;
    let mu = parse_list("rhs", &args.rhs)?;
    let as_i64 = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    let dim = module_dim(&as_i64(&lambda)).saturating_mul(module_dim(&as_i64(&mu)));
    guard("the tensor product", dim, max_dim)?;
    match &args.gen {
        None => {
            let dec = decompose_tensor(&lambda, &mu)?;
            let kappas: Vec<String> = dec
                .blocks
                .iter()
                .map(|a| {
                    let mut k: Vec<usize> = a.flattened().iter().copied().filter(|&x| x > 0).collect();
                    k.sort_unstable_by(|x, y| y.cmp(x));
                    format!("({})", k.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
                })
                .collect();
            if args.json {
                let blocks: Vec<_> = dec
                    .blocks
                    .iter()
                    .zip(&dec.offsets)
                    .zip(&kappas)
                    .map(|((a, o), k)| json!({"matrix": a.to_rows(), "offset": o, "kappa": k}))
                    .collect();
                println!("{}", pretty(&json!({"lhs": lambda, "rhs": mu, "dim": dec.dim(), "blocks": blocks, "bijection": dec.bijection})));
            } else {
                println!("blocks [{}]", kappas.join(","));
                for (a, o) in dec.blocks.iter().zip(&dec.offsets) {
                    println!("  {:?} at offset {o}", a.to_rows());
                }
            }
        }
        Some(text) => {
            let (g, side, j) = parse_generator(text)?;
            let block = tensor_generator(side, g, j, &lambda, &mu)?;
            if args.json {
                println!("{}", pretty(&block.to_json()));
            } else {
                for ((r, c), f) in block.nonzero_blocks() {
                    println!("{:?} <- {:?}", block.row_blocks[*r].to_rows(), block.col_blocks[*c].to_rows());
                    for row in f.map().to_dense() {
                        println!("  {}", row.iter().map(format_rational).collect::<Vec<_>>().join(" "));
                    }
                }
            }
        }
    }
    Ok(())
}

fn relations(args: &RelationsArgs, jobs: usize, max_dim: u64) -> Outcome {
    let report = match args.suite {
        SuiteName::Perm | SuiteName::Gl => {
            let (suite, instances): (Suite, Vec<RelationInstance>) = match args.suite {
                SuiteName::Perm => (Suite::Perm, perm_instances(args.max as i64)),
                _ => (Suite::Gl, gl_instances(args.max)),
            };
            for inst in &instances {
                guard_expr(&inst.lhs, max_dim)?;
                guard_expr(&inst.rhs, max_dim)?;
            }
            relation_suite(suite, args.max, jobs)
        }
        SuiteName::Sp => {
            guard("the tensor space", (2 * args.n as u64).saturating_pow(args.max as u32), max_dim)?;
            let mut all = sww::report::Report::new("sp ladder relations", Vec::new());
            for n in 1..=args.n {
                for d in 1..=args.max {
                    all.extend(sp_ladder_relation_suite(n, d, jobs)?);
                }
            }
            all
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else if args.quiet {
        for f in report.failures() {
            println!("FAIL {} {}: {}", f.relation, f.instance, f.witness.as_deref().unwrap_or(""));
        }
        println!("{}: {} instances, {} failed", report.title, report.len(), report.failures().count());
    } else {
        println!("{report}");
    }
    verdict(report.all_pass())
}

fn schur_dims(n: usize, d: usize, max_dim: u64) -> Outcome {
    guard("the tensor power", (n as u64).saturating_pow(d as u32), max_dim)?;
    let table = schur_block_dims(n, d)?;
    print!("{}", table.to_csv());
    eprintln!(
        "total span {}, expected {}, sum of squared irreducible dimensions {}",
        table.total_span, table.expected_total, table.irrep_square_sum
    );
    verdict(table.pass())
}

fn print_saturation(s: &Saturation) {
    match &s.witness {
        None => println!("saturated"),
        Some(w) => println!("not saturated, witness {w}"),
    }
}

fn doty(args: &DotyArgs) -> Outcome {
    if let Some(demo) = &args.demo {
        if demo != "sl2" {
            return Err(input(format!("--demo: unknown example '{demo}', expected sl2")));
        }
        let report = sl2_doty_demo()?;
        print!("{report}");
        return verdict(report.pass());
    }
    let path = args.module.as_deref().expect("clap requires one of the two flags");
    let text = fs::read_to_string(path).map_err(|e| input(format!("cannot read {path}: {e}")))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| input(format!("{path}: line {} column {}: {e}", e.line(), e.column())))?;
    if let Some(tops) = value.get("sl2") {
        let tops: Vec<u32> = serde_json::from_value(tops.clone())
            .map_err(|e| input(format!("{path}: \"sl2\" must be a list of nonnegative integers: {e}")))?;
        print_saturation(&is_saturated_sl2(&tops));
        return Ok(());
    }
    let weights: Vec<Vec<i64>> = serde_json::from_value(value)
        .map_err(|e| input(format!("{path}: expected an array of integer arrays or {{\"sl2\": [..]}}: {e}")))?;
    let n = weights.first().map_or(0, Vec::len);
    if n == 0 {
        return Err(input(format!("{path}: no weights given")));
    }
    if let Some(k) = weights.iter().position(|w| w.len() != n) {
        return Err(input(format!("{path}: weight {} has {} coordinates, expected {n}", k + 1, weights[k].len())));
    }
    let weights: Vec<WeightVector> = weights.into_iter().map(WeightVector).collect();
    print_saturation(&is_saturated_gl(&weights, n)?);
    Ok(())
}

fn brauer(args: &BrauerArgs, max_dim: u64) -> Outcome {
    if let Some(pair) = &args.mult {
        let parse = |k: usize| -> Result<BrauerDiagram, Failure> {
            pair[k].parse().map_err(|e: sww::Error| input(format!("diagram {}: {e}", k + 1)))
        };
        let (x, y) = (parse(0)?, parse(1)?);
        let product = BrauerElement::from_diagram(x, args.delta).multiply(&BrauerElement::from_diagram(y, args.delta))?;
        if args.json {
            let terms: Vec<_> = product
                .terms()
                .iter()
                .map(|(x, c)| json!({"diagram": x.to_string(), "coefficient": format_rational(c)}))
                .collect();
            println!("{}", pretty(&json!({"delta": args.delta, "product": terms})));
        } else {
            println!("{product}");
        }
        return Ok(());
    }
    let Some(kind) = args.duality else {
        return Err(input("brauer needs --mult X Y or --duality sp|o|mixed"));
    };
    let n = args.n.ok_or_else(|| input("--duality needs --n"))?;
    let (kind, d) = match kind {
        Kind::Sp | Kind::O => {
            let d = args.d.ok_or_else(|| input("--duality sp|o needs --d"))?;
            (if matches!(kind, Kind::Sp) { TensorKind::Sp } else { TensorKind::O }, d)
        }
        Kind::Mixed => {
            let (r, s) = match (args.r, args.s, args.d) {
                (Some(r), Some(s), _) => (r, s),
                (Some(r), None, Some(d)) if r <= d => (r, d - r),
                _ => return Err(input("--duality mixed needs --r and --s (or --r and --d)")),
            };
            (TensorKind::Mixed { r, s }, r + s)
        }
    };
    let site = match kind {
        TensorKind::Mixed { .. } => n as u64,
        _ => 2 * n as u64,
    };
    guard("the tensor space", site.saturating_pow(d as u32), max_dim)?;
    let report = duality_check(kind, n, d)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        println!("{report}");
    }
    verdict(report.pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let result = match &cli.command {
        Command::Eval(args) => eval(args, cli.max_dim),
        Command::Kron(args) => kron(args, cli.max_dim),
        Command::Relations(args) => relations(args, jobs, cli.max_dim),
        Command::SchurDims { n, d } => schur_dims(*n, *d, cli.max_dim),
        Command::DotyCheck(args) => doty(args),
        Command::Brauer(args) => brauer(args, cli.max_dim),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
