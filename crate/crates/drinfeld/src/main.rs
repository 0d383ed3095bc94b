use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use drinfeld::braid::{braided_dim, parse_braid, torus_braid, BraidWord, Orientation, Side};
use drinfeld::double::build_double;
use drinfeld::error::Error;
use drinfeld::io::{export_file, resolve_spec, to_json};
use drinfeld::oracle::fy_fixed_points;
use drinfeld::rep::{dual_schrodinger, regular_module, schrodinger, ModuleData};
use drinfeld::verify::{run_suite, SuiteKind};
use drinfeld::zoo::make_group;
use drinfeld::Result;

/// Exact-arithmetic Drinfel'd doubles, Schrödinger modules, and braided
/// dimension invariants of braid words.
#[derive(Parser)]
#[command(name = "drinfeld", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dimensions, integrals, and semisimplicity data of an algebra.
    Describe {
        /// Algebra spec: group:<name> | dualgroup:<name> | sweedler | taft:<n> | file:<path>
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute the braided dimension of a module at a braid word.
    Bdim {
        /// Algebra spec for the base Hopf algebra.
        spec: String,
        #[arg(long, value_enum, default_value_t = ModuleKind::Schrodinger)]
        module: ModuleKind,
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Use the reversed braided structure.
        #[arg(long)]
        reversed: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Count fixed points of the braid action on tuples over a finite group.
    Oracle {
        #[arg(long)]
        group: String,
        #[arg(long)]
        braid: String,
    },
    /// Write an algebra to a JSON file.
    Export {
        spec: String,
        path: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BraidArg {
    /// Braid word, e.g. "2: 1 -1 1".
    #[arg(long)]
    braid: Option<String>,
    /// Torus braid t_{p,q}.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    torus: Option<Vec<i64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Schrodinger,
    DualSchrodinger,
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnsupportedSpec(_)
        | Error::ParseError(_)
        | Error::SchemaError { .. }
        | Error::BadParameter(_)
        | Error::LetterOutOfRange(_, _)
        | Error::ZeroLetter => 2,
        Error::EnumerationTooLarge(_) => 4,
        _ => 3,
    }
}

fn cmd_describe(spec: &str, json: bool) -> Result<()> {
    let a = resolve_spec(spec)?;
    let report = a.validate()?;
    if !report.passed() {
        let failure = report.first_failure().expect("failed report has a failure");
        return Err(Error::InvalidAlgebra(format!(
            "axiom '{}' fails: {}",
            failure.name,
            failure.witness.clone().unwrap_or_default()
        )));
    }
    let ints = a.integrals()?;
    let preds = a.semisimplicity_predicates()?;
    let texts = |v: &[drinfeld::Scalar]| v.iter().map(|c| c.to_text()).collect::<Vec<_>>();
    if json {
        let out = json!({
            "name": a.name,
            "field": to_json(&a)["field"],
            "dim": a.dim,
            "double_dim": a.dim * a.dim,
            "trace_s_squared": a.trace_s_squared().to_text(),
            "left_integral": texts(&ints.left_integral),
            "right_dual_integral": texts(&ints.right_dual_integral),
            "alpha": texts(&ints.alpha),
            "distinguished_grouplike": texts(&ints.g_dist),
            "unimodular": preds.unimodular,
            "semisimple": preds.semisimple,
            "cosemisimple": preds.cosemisimple,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("name: {}", a.name);
        println!("dim: {}   double dim: {}", a.dim, a.dim * a.dim);
        println!("TrS2={}", a.trace_s_squared().to_text());
        println!("left integral: [{}]", texts(&ints.left_integral).join(", "));
        println!("right dual integral: [{}]", texts(&ints.right_dual_integral).join(", "));
        println!("alpha: [{}]", texts(&ints.alpha).join(", "));
        println!(
            "unimodular={} semisimple={} cosemisimple={}",
            preds.unimodular, preds.semisimple, preds.cosemisimple
        );
    }
    Ok(())
}

fn braid_of(arg: &BraidArg) -> Result<BraidWord> {
    match (&arg.braid, &arg.torus) {
        (Some(text), None) => parse_braid(text),
        (None, Some(pq)) if pq.len() == 2 => {
            let p = usize::try_from(pq[0])
                .map_err(|_| Error::BadParameter(format!("torus parameter p = {} < 0", pq[0])))?;
            torus_braid(p, pq[1])
        }
        _ => Err(Error::BadParameter("exactly one of --braid or --torus P Q".into())),
    }
}

fn cmd_bdim(
    spec: &str,
    module: ModuleKind,
    braid: &BraidArg,
    side: SideArg,
    reversed: bool,
    json: bool,
) -> Result<()> {
    let a = resolve_spec(spec)?;
    let dq = build_double(&a)?;
    let m: ModuleData = match module {
        ModuleKind::Schrodinger => schrodinger(&dq)?,
        ModuleKind::DualSchrodinger => dual_schrodinger(&dq)?,
        ModuleKind::Regular => regular_module(&dq.h),
    };
    let b = braid_of(braid)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let orientation = if reversed { Orientation::Reversed } else { Orientation::Standard };
    let value = braided_dim(&dq, &m, &b, side, orientation)?;
    if json {
        let out = json!({
            "algebra": a.name,
            "module": m.name,
            "braid": b.to_text(),
            "side": if side == Side::Left { "left" } else { "right" },
            "reversed": reversed,
            "value": value.to_text(),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("{}", value.to_text());
    }
    Ok(())
}

fn cmd_verify(suite: &str) -> Result<bool> {
    let kind = SuiteKind::parse(suite)
        .ok_or_else(|| Error::BadParameter(format!("unknown suite '{suite}'")))?;
    let checks = run_suite(kind);
    let mut all_pass = true;
    for c in &checks {
        if c.pass {
            println!("PASS  {}", c.name);
        } else {
            all_pass = false;
            println!("FAIL  {}: {}", c.name, c.witness.clone().unwrap_or_default());
        }
    }
    println!(
        "{} checks, {} failed",
        checks.len(),
        checks.iter().filter(|c| !c.pass).count()
    );
    Ok(all_pass)
}

fn cmd_oracle(group: &str, braid: &str) -> Result<()> {
    let g = make_group(group)?;
    let b = parse_braid(braid)?;
    println!("{}", fy_fixed_points(&g, &b)?);
    Ok(())
}

fn cmd_export(spec: &str, path: &str) -> Result<()> {
    let a = resolve_spec(spec)?;
    let report = a.validate()?;
    if !report.passed() {
        return Err(Error::InvalidAlgebra("algebra fails validation; not exporting".into()));
    }
    export_file(&a, path)?;
    println!("wrote {path}");
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::Describe { spec, json } => cmd_describe(spec, *json).map(|()| true),
        Command::Bdim { spec, module, braid, side, reversed, json } => {
            cmd_bdim(spec, *module, braid, *side, *reversed, *json).map(|()| true)
        }
        Command::Verify { suite } => cmd_verify(suite),
        Command::Oracle { group, braid } => cmd_oracle(group, braid).map(|()| true),
        Command::Export { spec, path } => cmd_export(spec, path).map(|()| true),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's own help/version exit behavior
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(2);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
