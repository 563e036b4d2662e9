use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use howe_sextic::field::{Field, FieldError};
use howe_sextic::howe::{RamificationData, SexticModel};
use howe_sextic::reference::{reference_examples, verify_examples, ReferenceExample};
use howe_sextic::report::{analyze, AnalysisError, Timing};
use howe_sextic::sampling::sample;
use howe_sextic::singular::{
    brute_force_singular_scan, no_offaxis_singularities, rational_singular_set, singular_points, SingularError,
    DEFAULT_SCAN_BUDGET,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_FIELD: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "howe", version, about = "Plane sextic models of genus-5 Howe curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the sextic for eight ramification points and analyze it.
    Build {
        #[command(flatten)]
        input: PointArgs,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Recompute the seven built-in examples over F_31 and compare.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Replacement example table (JSON).
        #[arg(long, hide = true)]
        table: Option<PathBuf>,
    },
    /// Singularity type distribution over random inputs.
    Sample {
        #[arg(long)]
        field: String,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive singular point scan of P^2(F_p), compared with the located points.
    Scan {
        #[command(flatten)]
        input: PointArgs,
        #[arg(long, default_value_t = DEFAULT_SCAN_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PointArgs {
    /// `p=<prime>` or `rational`.
    #[arg(long)]
    field: String,
    /// Four comma-separated values, e.g. `0,1,-1,20` or `1/2,...` over Q.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Self {
        Failure::new(EXIT_FIELD, e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = match &e {
            AnalysisError::Field(_) => EXIT_FIELD,
            AnalysisError::Input(_) => EXIT_INPUT,
            AnalysisError::Singular(SingularError::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_MISMATCH,
        };
        Failure::new(code, e.to_string())
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn parse_field(spec: &str) -> Result<Field, Failure> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("rational") || spec == "Q" {
        return Ok(Field::rational());
    }
    let p = spec
        .strip_prefix("p=")
        .and_then(|v| v.trim().parse::<u64>().ok())
        .ok_or_else(|| {
            Failure::new(
                EXIT_FIELD,
                format!("invalid field '{spec}': expected p=<prime> or rational"),
            )
        })?;
    Ok(Field::prime(p)?)
}

fn parse_points(field: &Field, text: &str, name: &str) -> Result<[howe_sextic::field::FieldElement; 4], Failure> {
    let values = text
        .split(',')
        .map(|v| field.parse_element(v))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::new(EXIT_INPUT, format!("--{name}: {e}")))?;
    values
        .try_into()
        .map_err(|v: Vec<_>| Failure::new(EXIT_INPUT, format!("--{name} needs 4 values, got {}", v.len())))
}

fn parse_input(args: &PointArgs) -> Result<RamificationData, Failure> {
    let field = parse_field(&args.field)?;
    let alphas = parse_points(&field, &args.alpha, "alpha")?;
    let betas = parse_points(&field, &args.beta, "beta")?;
    RamificationData::new(alphas, betas).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))
}

fn cmd_build(input: &PointArgs, json: bool, seed: u64, timing: bool) -> Result<(), Failure> {
    let start = Instant::now();
    let rd = parse_input(input)?;
    let mut report = analyze(&rd, seed)?;
    if timing {
        report.timing = Some(Timing {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    if json {
        emit(&format!("{}\n", report.to_json()));
    } else {
        emit(&report.to_text());
    }
    Ok(())
}

fn cmd_verify(json: bool, table: Option<&PathBuf>) -> Result<(), Failure> {
    let table: Vec<ReferenceExample> = match table {
        None => reference_examples(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?
        }
    };
    let outcomes = verify_examples(&table, 0);
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    if json {
        let value = serde_json::json!({
            "schema": 1,
            "passed": passed,
            "total": outcomes.len(),
            "examples": outcomes
                .iter()
                .map(|o| serde_json::json!({ "label": o.label, "passed": o.passed(), "diffs": o.diffs }))
                .collect::<Vec<_>>(),
        });
        emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("json value")
        ));
    } else {
        let mut text = String::new();
        for o in &outcomes {
            if o.passed() {
                text.push_str(&format!("{}: ok\n", o.label));
            } else {
                text.push_str(&format!("{}: MISMATCH\n", o.label));
                for d in &o.diffs {
                    text.push_str(&format!("  {d}\n"));
                }
            }
        }
        text.push_str(&format!("{passed}/{} examples reproduced\n", outcomes.len()));
        emit(&text);
    }
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_MISMATCH,
            format!("{} of {} examples differ", outcomes.len() - passed, outcomes.len()),
        ))
    }
}

fn cmd_sample(field: &str, count: u64, seed: u64, json: bool) -> Result<(), Failure> {
    let field = parse_field(field)?;
    if !field.is_finite() {
        return Err(Failure::new(EXIT_FIELD, "sampling needs a finite field"));
    }
    let summary = sample(&field, count, seed)?;
    if json {
        emit(&format!("{}\n", summary.to_json()));
    } else {
        emit(&summary.to_text());
    }
    Ok(())
}

fn cmd_scan(input: &PointArgs, budget: u64, seed: u64, json: bool) -> Result<(), Failure> {
    let rd = parse_input(input)?;
    if !rd.field().is_finite() {
        return Err(Failure::new(EXIT_FIELD, "scan needs a finite field"));
    }
    let model = SexticModel::new(&rd);
    let scan = brute_force_singular_scan(model.projective(), budget).map_err(|e| match e {
        SingularError::BudgetExceeded { .. } => Failure::new(EXIT_BUDGET, e.to_string()),
        e => Failure::new(EXIT_FIELD, e.to_string()),
    })?;
    let located = singular_points(&model, seed).map_err(AnalysisError::from)?;
    let symbolic = rational_singular_set(&located);
    let agree = scan == symbolic;
    let offaxis_free = no_offaxis_singularities(&scan);
    let show = |s: &std::collections::BTreeSet<_>| s.iter().map(ToString::to_string).collect::<Vec<String>>();
    if json {
        let value = serde_json::json!({
            "schema": 1,
            "field": rd.field().to_string(),
            "scan": show(&scan),
            "symbolic": show(&symbolic),
            "agree": agree,
            "no_offaxis_singularities": offaxis_free,
        });
        emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("json value")
        ));
    } else {
        emit(&format!(
            "scan:     {}\nsymbolic: {}\n{} ({} points), no singular point off y = 0: {offaxis_free}\n",
            show(&scan).join(", "),
            show(&symbolic).join(", "),
            if agree { "agree" } else { "DISAGREE" },
            scan.len()
        ));
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::new(EXIT_MISMATCH, "scan and located points differ"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build {
            input,
            json,
            seed,
            timing,
        } => cmd_build(input, *json, *seed, *timing),
        Command::VerifyPaper { json, table } => cmd_verify(*json, table.as_ref()),
        Command::Sample {
            field,
            count,
            seed,
            json,
        } => cmd_sample(field, *count, *seed, *json),
        Command::Scan {
            input,
            budget,
            seed,
            json,
        } => cmd_scan(input, *budget, *seed, *json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
