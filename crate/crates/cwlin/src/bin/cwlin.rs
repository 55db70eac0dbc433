//! Command-line front end: parse an `.ideal` file, run one computation or
//! criterion, print a text or JSON report.
//!
//! Exit codes: 0 = completed (whatever the verdict says), 2 = parse or usage
//! error, 3 = applicability failure under `--strict`, 4 = an internal
//! cross-check contradicted the reported conclusion (a bug, not a result).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cwlin::betti::{betti, is_componentwise_linear, regularity};
use cwlin::criteria::{
    check_componentwise_criterion, check_cwl_plus_linear, check_hv_criterion, check_lin_plus_lin,
};
use cwlin::dim2::{cwl_ordering, fullness_checks, fullsum_verdict, OrderingFailure};
use cwlin::fullset::{assemble, validate_assignment};
use cwlin::ideal::MonomialIdeal;
use cwlin::parse::{parse, parse_monomial, IdealDocument};
use cwlin::report::{
    betti_text, betti_value, campaign_text, campaign_value, ordering_text, ordering_value,
    regularity_text, regularity_value, to_json, verdict_text, verdict_value,
};
use cwlin::verdict::Verdict;
use cwlin::verify::{campaign_ids, run_campaign, CampaignParams};

#[derive(Parser)]
#[command(
    name = "cwlin",
    version,
    about = "componentwise linear monomial ideals: exact checks, certificates, and verification campaigns",
    max_term_width = 100
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Exit 3 when a criterion's preconditions fail instead of reporting
    /// "inapplicable" and exiting 0.
    #[arg(long, global = true)]
    strict: bool,

    /// Truncation degree for componentwise scans.
    #[arg(long = "t-max", global = true, value_name = "T")]
    t_max: Option<u32>,

    /// Truncation for socle-power scans.
    #[arg(long = "s-max", global = true, value_name = "S")]
    s_max: Option<u32>,

    /// Degree bound for graded-dimension tables and random generators.
    #[arg(long = "d-max", global = true, value_name = "D")]
    d_max: Option<u32>,

    /// Seed for randomized campaigns.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a named ideal is componentwise linear.
    CheckCwl { file: PathBuf, ideal: String },
    /// Print the minimal graded Betti table of a named ideal.
    Betti { file: PathBuf, ideal: String },
    /// Castelnuovo-Mumford regularity, with the Betti entries attaining it.
    Reg { file: PathBuf, ideal: String },
    /// Intersection of two named ideals.
    Intersect { file: PathBuf, a: String, b: String },
    /// Colon of a named ideal by a named ideal or a single term.
    Colon {
        file: PathBuf,
        a: String,
        by: String,
    },
    /// Sum of two named ideals.
    Sum { file: PathBuf, a: String, b: String },
    /// Degree-j component ideal I_<j> of a named ideal.
    Component {
        file: PathBuf,
        ideal: String,
        degree: u32,
    },
    /// Run sum criteria on a pair of named ideals.
    SumCheck {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Criteria::All)]
        criteria: Criteria,
    },
    /// Greedy componentwise-linear ordering certificate (two variables).
    Order { file: PathBuf, ideal: String },
    /// Validate or assemble a full-set assignment.
    Fullset {
        #[command(subcommand)]
        action: FullsetAction,
    },
    /// Run a verification campaign; exits 4 if any violation is found.
    Campaign {
        theorem: String,
        /// Number of random instances, for sampled campaigns.
        #[arg(long, value_name = "N")]
        count: Option<u64>,
    },
    /// Fullness and m-fullness of a named ideal from graded colon dimensions.
    FullCheck { file: PathBuf, ideal: String },
}

#[derive(Subcommand)]
enum FullsetAction {
    /// Check the assignment conditions for a declared full set.
    Validate { file: PathBuf, set: String },
    /// Assemble the sum ideal from an assignment.
    Assemble {
        file: PathBuf,
        set: String,
        /// Assemble even if the assignment fails validation.
        #[arg(long)]
        force: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Criteria {
    Fullsum,
    Hv,
    Componentwise,
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and --version are successful exits; everything else is a
            // usage error and shares the parse-error code.
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().expect("write diagnostics");
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run(cli).unwrap_or_else(|code| code))
}

fn load(path: &Path) -> Result<IdealDocument, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })?;
    parse(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })
}

fn ideal<'a>(doc: &'a IdealDocument, name: &str) -> Result<&'a MonomialIdeal, u8> {
    doc.ideal(name).ok_or_else(|| {
        eprintln!("error: no ideal named {name} in the document");
        2
    })
}

fn emit_ideal(result: &MonomialIdeal, json: bool) {
    if json {
        println!("{}", to_json(&json!({ "gens": result.gen_strings() })));
    } else if result.is_zero() {
        println!("(0)");
    } else {
        println!("({})", result.gen_strings().join(", "));
    }
}

/// Prints one or more verdicts and maps them to an exit code: a contradicted
/// cross-check always wins, then strict-mode applicability.
fn emit_verdicts(verdicts: &[Verdict], json: bool, strict: bool) -> Result<u8, u8> {
    if json {
        let value = match verdicts {
            [v] => verdict_value(v),
            many => Value::Array(many.iter().map(verdict_value).collect()),
        };
        println!("{}", to_json(&value));
    } else {
        let blocks: Vec<String> = verdicts.iter().map(verdict_text).collect();
        println!("{}", blocks.join("\n\n"));
    }
    if verdicts.iter().any(|v| v.cross_check == Some(false)) {
        return Ok(4);
    }
    if strict && verdicts.iter().any(|v| !v.applicable) {
        return Ok(3);
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, u8> {
    let json = cli.json;
    let strict = cli.strict;
    match cli.command {
        Command::CheckCwl { file, ideal: name } => {
            let doc = load(&file)?;
            let i = ideal(&doc, &name)?;
            let answer = is_componentwise_linear(i).map_err(|e| precondition(&e, strict))?;
            if json {
                let value = json!({
                    "ideal": i.gen_strings(),
                    "componentwise_linear": answer,
                });
                println!("{}", to_json(&value));
            } else {
                println!("componentwise linear: {answer}");
            }
            Ok(0)
        }
        Command::Betti { file, ideal: name } => {
            let doc = load(&file)?;
            let table = betti(ideal(&doc, &name)?).map_err(|e| precondition(&e, strict))?;
            if json {
                println!("{}", to_json(&betti_value(&table)));
            } else {
                println!("{}", betti_text(&table));
            }
            Ok(0)
        }
        Command::Reg { file, ideal: name } => {
            let doc = load(&file)?;
            let report = regularity(ideal(&doc, &name)?).map_err(|e| precondition(&e, strict))?;
            if json {
                println!("{}", to_json(&regularity_value(&report)));
            } else {
                println!("{}", regularity_text(&report));
            }
            Ok(0)
        }
        Command::Intersect { file, a, b } => {
            let doc = load(&file)?;
            emit_ideal(&ideal(&doc, &a)?.intersect(ideal(&doc, &b)?), json);
            Ok(0)
        }
        Command::Sum { file, a, b } => {
            let doc = load(&file)?;
            emit_ideal(&ideal(&doc, &a)?.sum(ideal(&doc, &b)?), json);
            Ok(0)
        }
        Command::Colon { file, a, by } => {
            let doc = load(&file)?;
            let i = ideal(&doc, &a)?;
            let result = if let Some(j) = doc.ideal(&by) {
                i.colon(j).map_err(|e| precondition(&e, strict))?
            } else {
                match parse_monomial(&doc.ring, &by) {
                    Ok(f) => i.colon_monomial(&f),
                    Err(e) => {
                        eprintln!("error: {by} is neither a named ideal nor a term: {e}");
                        return Err(2);
                    }
                }
            };
            emit_ideal(&result, json);
            Ok(0)
        }
        Command::Component {
            file,
            ideal: name,
            degree,
        } => {
            let doc = load(&file)?;
            emit_ideal(&ideal(&doc, &name)?.component(degree), json);
            Ok(0)
        }
        Command::SumCheck {
            file,
            a,
            b,
            criteria,
        } => {
            let doc = load(&file)?;
            let (i, j) = (ideal(&doc, &a)?, ideal(&doc, &b)?);
            let mut verdicts = Vec::new();
            if criteria == Criteria::All {
                let t = cli.t_max.or_else(|| i.order()).unwrap_or(1);
                verdicts.push(check_lin_plus_lin(i, j, t));
                verdicts.push(check_cwl_plus_linear(i, j));
            }
            if matches!(criteria, Criteria::Componentwise | Criteria::All) {
                verdicts.push(check_componentwise_criterion(i, j, cli.t_max));
            }
            if matches!(criteria, Criteria::Hv | Criteria::All) {
                verdicts.push(check_hv_criterion(i, j, cli.s_max));
            }
            if matches!(criteria, Criteria::Fullsum | Criteria::All) {
                verdicts.push(fullsum_verdict(i, j));
            }
            emit_verdicts(&verdicts, json, strict)
        }
        Command::Order { file, ideal: name } => {
            let doc = load(&file)?;
            match cwl_ordering(ideal(&doc, &name)?) {
                Ok(cert) => {
                    if json {
                        println!("{}", to_json(&ordering_value(&cert)));
                    } else {
                        println!("{}", ordering_text(&cert));
                    }
                    Ok(0)
                }
                Err(f @ OrderingFailure::NotComponentwiseLinear { .. }) => {
                    if json {
                        println!(
                            "{}",
                            to_json(&json!({ "ordered": false, "reason": f.to_string() }))
                        );
                    } else {
                        println!("no ordering: {f}");
                    }
                    Ok(0)
                }
                Err(f @ (OrderingFailure::NotArityTwo | OrderingFailure::Improper)) => {
                    eprintln!("error: {f}");
                    Ok(if strict { 3 } else { 0 })
                }
                Err(f @ OrderingFailure::Internal { .. }) => {
                    eprintln!("error: {f}");
                    Ok(4)
                }
            }
        }
        Command::Fullset { action } => {
            let (file, set_name, force) = match &action {
                FullsetAction::Validate { file, set } => (file, set, None),
                FullsetAction::Assemble { file, set, force } => (file, set, Some(*force)),
            };
            let doc = load(file)?;
            let set = doc.fullset(set_name).ok_or_else(|| {
                eprintln!("error: no full set named {set_name} in the document");
                2
            })?;
            let assignment = doc.assignment_for(set_name);
            match force {
                None => {
                    let v = validate_assignment(set, &assignment)
                        .map_err(|e| precondition(&e, strict))?;
                    emit_verdicts(&[v], json, strict)
                }
                Some(force) => match assemble(set, &assignment, force) {
                    Ok(result) => {
                        emit_ideal(&result, json);
                        Ok(0)
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        eprintln!("hint: rerun with --force to assemble anyway");
                        Ok(if strict { 3 } else { 0 })
                    }
                },
            }
        }
        Command::Campaign { theorem, count } => {
            let params = CampaignParams {
                max_gen_degree: cli.d_max,
                count,
                seed: cli.seed.unwrap_or(0),
            };
            let report = run_campaign(&theorem, &params).map_err(|e| {
                eprintln!("error: {e}");
                eprintln!("known campaigns: {}", campaign_ids().join(", "));
                2
            })?;
            if json {
                println!("{}", to_json(&campaign_value(&report)));
            } else {
                println!("{}", campaign_text(&report));
            }
            Ok(if report.passed() { 0 } else { 4 })
        }
        Command::FullCheck { file, ideal: name } => {
            let doc = load(&file)?;
            let v = fullness_checks(ideal(&doc, &name)?, cli.d_max);
            emit_verdicts(&[v], json, strict)
        }
    }
}

/// A mathematical precondition failed (zero ideal, unit ideal, wrong shape):
/// report it, exit 3 in strict mode and 0 otherwise.
fn precondition(e: &dyn std::fmt::Display, strict: bool) -> u8 {
    eprintln!("inapplicable: {e}");
    if strict {
        3
    } else {
        0
    }
}
