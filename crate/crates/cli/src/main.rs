use std::process::ExitCode;

use adjcore::local::{
    colength_poly, joint_reduction_check, multiplicity_parameter_pair, ReductionCheck, DEFAULT_TRUNCATION_CAP,
};
use adjcore::verify::{
    all_passed, corpus_suite, family_suite, fixed_pair_suite, strip_timing, to_json, verify_adjoint_identities,
    verify_core_identities, verify_hd, CorpusSuiteOptions, JointReduction, PolynomialForms, VerificationReport,
};
use adjcore::{
    adjoint, core, integral_closure, is_complete, mixed_e1, multiplicity, parse_ideal, parse_polynomial, point_basis,
    LocalPolynomial, MonomialIdeal, ParsedIdeal, PointBasisNode,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "adjcore", version, about = "Adjoints, cores and point bases of monomial ideals in k[[x, y]]")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Replace non-complete monomial inputs by their integral closure.
    #[arg(long, global = true)]
    closure: bool,
    /// Truncation cap for polynomial ideals.
    #[arg(long, global = true, default_value_t = DEFAULT_TRUNCATION_CAP)]
    nmax: u64,
    /// Report runtime_ms as 0 so repeated runs give identical output.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Args)]
struct IdealArg {
    /// Comma-separated generators, e.g. `x^2,x*y,y^3`.
    #[arg(long)]
    ideal: String,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    ideal2: String,
}

#[derive(Args)]
struct ElementArgs {
    /// First element of a (joint) reduction.
    #[arg(long, requires = "b")]
    a: Option<String>,
    /// Second element of a (joint) reduction.
    #[arg(long, requires = "a")]
    b: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Integral closure of a monomial ideal.
    Closure(IdealArg),
    /// Adjoint by the blow-up recursion.
    Adjoint(IdealArg),
    /// core(I) = I·adj(I) for a complete ideal.
    Core(IdealArg),
    /// λ(R/I) of a monomial or polynomial ideal.
    Colength(IdealArg),
    /// e(I) of a monomial ideal, or e(a, b) of a parameter pair.
    Multiplicity {
        #[arg(long, conflicts_with_all = ["a", "b"], required_unless_present = "a")]
        ideal: Option<String>,
        #[command(flatten)]
        elements: ElementArgs,
    },
    /// e₁(I|J), optionally certifying a joint reduction {a, b}.
    #[command(name = "mixed-e1")]
    MixedE1 {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        elements: ElementArgs,
    },
    /// Tree of infinitely near points with the orders of the transforms.
    #[command(name = "point-basis")]
    PointBasis(IdealArg),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Hoskin–Deligne sums for one complete ideal.
    Hd(IdealArg),
    /// Adjoint identities for a pair of complete ideals.
    #[command(name = "adjoints", visible_alias = "sec3")]
    Adjoints {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        powers: Powers,
        #[command(flatten)]
        elements: ElementArgs,
    },
    /// Core identities for a pair of complete ideals.
    #[command(name = "cores", visible_alias = "sec4")]
    Cores {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        powers: Powers,
        #[command(flatten)]
        elements: ElementArgs,
    },
    /// The pair (x^2,xy,y^3), (x^3,xy,y^2) at one (r, s, n).
    #[command(name = "fixed-pair", visible_alias = "ex51")]
    FixedPair {
        #[command(flatten)]
        powers: Powers,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// The family (x^u,xy,y^(u+1)), (x^(u+1),xy,y^u) at one (u, r, s, n).
    #[command(name = "family", visible_alias = "ex52")]
    Family {
        #[arg(long, default_value_t = 3)]
        u: u64,
        #[command(flatten)]
        powers: Powers,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Oracle and identity suites over a seeded random corpus.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Pairs run through the identity suites.
        #[arg(long, default_value_t = 50)]
        pairs: usize,
    },
}

#[derive(Args)]
struct Powers {
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    s: u32,
}

/// Bad input; exits with status 2.
struct InputError(String);

impl From<adjcore::Error> for InputError {
    fn from(e: adjcore::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn monomial(text: &str, global: &Global) -> CliResult<MonomialIdeal> {
    match parse_ideal(text)? {
        ParsedIdeal::Monomial(m) => Ok(m),
        ParsedIdeal::Polynomial(_) => Err(InputError(format!("`{text}` is not a monomial ideal"))),
    }
    .and_then(|m| prepare(m, global))
}

/// Applies `--closure`.
fn prepare(m: MonomialIdeal, global: &Global) -> CliResult<MonomialIdeal> {
    if global.closure && m.is_m_primary() {
        Ok(integral_closure(&m)?)
    } else {
        Ok(m)
    }
}

fn complete(text: &str, global: &Global) -> CliResult<MonomialIdeal> {
    let m = monomial(text, global)?;
    if !m.is_m_primary() {
        return Err(InputError(format!("`{m}` is not m-primary")));
    }
    if !is_complete(&m)? {
        return Err(InputError(format!("`{m}` is not complete; pass --closure to use its integral closure")));
    }
    Ok(m)
}

fn elements(args: &ElementArgs) -> CliResult<Option<(LocalPolynomial, LocalPolynomial)>> {
    match (&args.a, &args.b) {
        (Some(a), Some(b)) => Ok(Some((parse_polynomial(a)?, parse_polynomial(b)?))),
        _ => Ok(None),
    }
}

fn emit(global: &Global, json: serde_json::Value, text: String) {
    if global.json {
        println!("{}", serde_json::to_string_pretty(&json).expect("JSON values serialize"));
    } else {
        println!("{text}");
    }
}

fn print_tree(node: &PointBasisNode, out: &mut String) {
    let path: String = node.path.iter().map(ToString::to_string).collect();
    let indent = "  ".repeat(node.path.len());
    let label = if path.is_empty() { "R".to_string() } else { path };
    out.push_str(&format!("{indent}{label}: order {} ({})\n", node.order_rt, node.ideal_at_point));
    for child in &node.children {
        print_tree(child, out);
    }
}

fn reduction_json(check: &ReductionCheck) -> serde_json::Value {
    serde_json::json!({
        "pair_multiplicity": check.pair_multiplicity.as_ref().map(ToString::to_string),
        "target": check.target.to_string(),
        "holds": check.holds(),
    })
}

fn report(global: &Global, mut reports: Vec<VerificationReport>) -> ExitCode {
    if global.no_timing {
        strip_timing(&mut reports);
    }
    if global.json {
        println!("{}", to_json(&reports));
    } else {
        for r in &reports {
            println!("{r}");
        }
        let passed = reports.iter().filter(|r| r.passed).count();
        println!("{passed} of {} claims passed", reports.len());
    }
    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn forms(elements_args: &ElementArgs, powers: &Powers, cap: u64) -> CliResult<PolynomialForms> {
    Ok(PolynomialForms {
        joint: elements(elements_args)?.map(|(a, b)| JointReduction::new(a, b)),
        minimal: None,
        max_power: powers.r.max(powers.s),
        cap,
    })
}

fn run_suite(suite: &Suite, global: &Global) -> CliResult<ExitCode> {
    let reports = match suite {
        Suite::Hd(arg) => verify_hd(&complete(&arg.ideal, global)?),
        Suite::Adjoints { pair, powers, elements } => {
            let (i, j) = (complete(&pair.ideal, global)?, complete(&pair.ideal2, global)?);
            verify_adjoint_identities(&i, &j, powers.r, powers.s, &forms(elements, powers, global.nmax)?)
        }
        Suite::Cores { pair, powers, elements } => {
            let (i, j) = (complete(&pair.ideal, global)?, complete(&pair.ideal2, global)?);
            verify_core_identities(&i, &j, powers.r, powers.s, &forms(elements, powers, global.nmax)?)
        }
        Suite::FixedPair { powers, n } => fixed_pair_suite(powers.r, powers.s, *n)?,
        Suite::Family { u, powers, n } => family_suite(*u, powers.r, powers.s, *n)?,
        Suite::Corpus { seed, count, pairs } => {
            let opts = CorpusSuiteOptions { pairs: *pairs, cap: global.nmax, ..CorpusSuiteOptions::new(*seed, *count) };
            corpus_suite(&opts)?
        }
    };
    Ok(report(global, reports))
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    let g = &cli.global;
    match &cli.command {
        Command::Closure(arg) => {
            let m = monomial(&arg.ideal, g)?;
            let c = integral_closure(&m)?;
            emit(g, serde_json::json!({ "ideal": m, "closure": c }), c.to_string());
        }
        Command::Adjoint(arg) => {
            let m = monomial(&arg.ideal, g)?;
            let a = adjoint(&m)?;
            emit(g, serde_json::json!({ "ideal": m, "adjoint": a }), a.to_string());
        }
        Command::Core(arg) => {
            let m = monomial(&arg.ideal, g)?;
            let c = core(&m)?;
            emit(g, serde_json::json!({ "ideal": m, "core": c }), c.to_string());
        }
        Command::Colength(arg) => {
            let (shown, value) = match parse_ideal(&arg.ideal)? {
                ParsedIdeal::Monomial(m) => {
                    let m = prepare(m, g)?;
                    (m.to_string(), m.colength()?)
                }
                ParsedIdeal::Polynomial(p) => (p.to_string(), colength_poly(&p, g.nmax)?),
            };
            emit(g, serde_json::json!({ "ideal": shown, "colength": value.to_string() }), value.to_string());
        }
        Command::Multiplicity { ideal, elements: el } => {
            let value = match (ideal, elements(el)?) {
                (Some(text), _) => multiplicity(&monomial(text, g)?)?,
                (None, Some((a, b))) => multiplicity_parameter_pair(&a, &b, g.nmax)?,
                (None, None) => return Err(InputError("pass --ideal or both --a and --b".into())),
            };
            emit(g, serde_json::json!({ "multiplicity": value.to_string() }), value.to_string());
        }
        Command::MixedE1 { pair, elements: el } => {
            let (i, j) = (monomial(&pair.ideal, g)?, monomial(&pair.ideal2, g)?);
            let value = mixed_e1(&i, &j)?;
            match elements(el)? {
                Some((a, b)) => {
                    let check = joint_reduction_check(&a, &b, &i, &j, g.nmax)?;
                    let text = format!("{value}\njoint reduction: {}", if check.holds() { "yes" } else { "no" });
                    let json = serde_json::json!({ "mixed_e1": value.to_string(), "joint_reduction": reduction_json(&check) });
                    emit(g, json, text);
                    if !check.holds() {
                        return Ok(ExitCode::from(1));
                    }
                }
                None => emit(g, serde_json::json!({ "mixed_e1": value.to_string() }), value.to_string()),
            }
        }
        Command::PointBasis(arg) => {
            let tree = point_basis(&monomial(&arg.ideal, g)?)?;
            let mut text = String::new();
            print_tree(&tree.root, &mut text);
            if g.json {
                println!("{}", serde_json::to_string_pretty(&tree).expect("trees serialize"));
            } else {
                println!("{}", text.trim_end());
            }
        }
        Command::Verify { suite } => return run_suite(suite, g),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
