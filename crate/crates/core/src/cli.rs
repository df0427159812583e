//! Command-line front end: `decide`, `genus`, `minpoly`, `rationalize` and
//! `scan`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::arith::RatFunc;
use crate::decision::{
    conjecture_scan, decide_set, decide_single_root, subset_criterion, ScanParams, Status,
    MAX_SUBSET_FAMILY,
};
use crate::genus::{cyclic_cover_genus, multiquadratic_genus_report, CoverSpec};
use crate::lattice::{build_branch_table, reduced_generators};
use crate::parse::{parse_radicand_file, RadicandSpec};
use crate::rationalize::{greedy_rationalize, minpoly_multiquadratic, verify_witness};
use crate::report::{render_text, MinPolyReport, Report, WitnessReport};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ratroot",
    version,
    about = "Decide whether families of square roots over Q(x) can be rationalized"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide rationalizability by the genus of the compositum curve.
    Decide(DecideArgs),
    /// Print genus, lattice rank and number of branch points.
    Genus(GenusArgs),
    /// Minimal polynomial of the sum of the square roots.
    Minpoly(MinpolyArgs),
    /// Search for an explicit rationalizing substitution.
    Rationalize(RationalizeArgs),
    /// Compare the subset criterion against the genus on random families.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Radicand expressions in `x`, optionally prefixed `root[e]:`.
    exprs: Vec<String>,
    /// Read radicands from a file, one per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Emit a JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct DecideArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Root order for a single radicand.
    #[arg(long, value_name = "E")]
    root_order: Option<u32>,
    /// Accept witnesses that need square roots of constants.
    #[arg(long)]
    allow_constant_defect: bool,
}

#[derive(Args, Debug)]
struct GenusArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_name = "E")]
    root_order: Option<u32>,
}

#[derive(Args, Debug)]
struct MinpolyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Replace the radicands by reduced generators of their square classes.
    #[arg(long)]
    reduce: bool,
}

#[derive(Args, Debug)]
struct RationalizeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    allow_constant_defect: bool,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 3)]
    max_m: usize,
    #[arg(long, default_value_t = 3)]
    max_factors: usize,
    #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
    coeff_bound: i64,
    /// Where to write disagreements, if any.
    #[arg(long, value_name = "PATH", default_value = "scan_disagreements.json")]
    out: PathBuf,
    #[arg(long)]
    json: bool,
}

/// Parses `args` (program name first), runs the command and writes its
/// report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let mut takes_value = false;
    let args: Vec<OsString> = args
        .into_iter()
        .map(Into::into)
        .enumerate()
        .map(|(i, a)| {
            let protect = i > 0 && !takes_value;
            takes_value = a.to_str().is_some_and(|s| VALUE_FLAGS.contains(&s));
            if protect {
                protect_expression(a)
            } else {
                a
            }
        })
        .collect();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let (name, json) = match &cli.command {
        Command::Decide(a) => ("decide", a.input.json),
        Command::Genus(a) => ("genus", a.input.json),
        Command::Minpoly(a) => ("minpoly", a.input.json),
        Command::Rationalize(a) => ("rationalize", a.input.json),
        Command::Scan(a) => ("scan", a.json),
    };
    let result = match cli.command {
        Command::Decide(a) => cmd_decide(a),
        Command::Genus(a) => cmd_genus(a),
        Command::Minpoly(a) => cmd_minpoly(a),
        Command::Rationalize(a) => cmd_rationalize(a),
        Command::Scan(a) => cmd_scan(a),
    };
    let (report, code) = match result {
        Ok(rc) => rc,
        Err(CliError { inputs, message }) => {
            let _ = writeln!(err, "error: {message}");
            if !json {
                return EXIT_ERROR;
            }
            let mut r = Report::new(name, inputs);
            r.error = Some(message);
            (r, EXIT_ERROR)
        }
    };
    let text = if json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_text(&report)
    };
    let _ = out.write_all(text.as_bytes());
    code
}

const VALUE_FLAGS: [&str; 8] = [
    "--file",
    "--root-order",
    "--seed",
    "--trials",
    "--max-m",
    "--max-factors",
    "--coeff-bound",
    "--out",
];

/// Every flag is long, so an argument such as `-x+1` is an expression; a
/// leading space keeps clap from reading it as a flag and is trimmed by the
/// parser.
fn protect_expression(a: OsString) -> OsString {
    match a.to_str() {
        Some(s)
            if s.len() > 1
                && s.starts_with('-')
                && !s.starts_with("--")
                && s != "-h"
                && s != "-V" =>
        {
            format!(" {s}").into()
        }
        _ => a,
    }
}

struct CliError {
    inputs: Vec<String>,
    message: String,
}

impl CliError {
    fn new(inputs: &[String], message: impl ToString) -> Self {
        CliError {
            inputs: inputs.to_vec(),
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<(Report, i32), CliError>;

fn read_inputs(a: &InputArgs) -> Result<Vec<RadicandSpec>, CliError> {
    let exprs: Vec<String> = a.exprs.iter().map(|e| e.trim().to_string()).collect();
    let mut specs = Vec::new();
    for e in &exprs {
        specs.push(
            RadicandSpec::parse(e)
                .map_err(|err| CliError::new(&exprs, format!("cannot parse `{e}`: {err}")))?,
        );
    }
    if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path).map_err(|err| {
            CliError::new(&exprs, format!("cannot read {}: {err}", path.display()))
        })?;
        let parsed = parse_radicand_file(&text)
            .map_err(|err| CliError::new(&exprs, format!("{}: {err}", path.display())))?;
        specs.extend(parsed);
    }
    if specs.is_empty() {
        return Err(CliError::new(
            &[],
            "no radicands given; pass expressions or --file PATH",
        ));
    }
    Ok(specs)
}

/// Texts, radicands, and the root order when it differs from 2.
struct Family {
    texts: Vec<String>,
    radicands: Vec<RatFunc>,
    order: Option<u32>,
}

fn family(a: &InputArgs, root_order: Option<u32>) -> Result<Family, CliError> {
    let specs = read_inputs(a)?;
    let texts: Vec<String> = specs.iter().map(|s| s.text.clone()).collect();
    let order = match root_order {
        Some(e) => Some(e),
        None => specs.iter().map(|s| s.order).find(|&e| e != 2),
    };
    if let Some(e) = order {
        if e < 2 {
            return Err(CliError::new(
                &texts,
                format!("root order must be at least 2, got {e}"),
            ));
        }
        if specs.len() != 1 && e != 2 {
            return Err(CliError::new(
                &texts,
                "roots of order above 2 are supported for a single radicand only",
            ));
        }
    }
    Ok(Family {
        texts,
        radicands: specs.into_iter().map(|s| s.radicand).collect(),
        order: order.filter(|&e| e != 2),
    })
}

fn cmd_decide(a: DecideArgs) -> CmdResult {
    let fam = family(&a.input, a.root_order)?;
    let fail = |e: crate::Error| CliError::new(&fam.texts, e);
    let mut r = Report::new("decide", fam.texts.clone());
    if let Some(e) = fam.order {
        let v = decide_single_root(&fam.radicands[0], e).map_err(fail)?;
        r.root_order = Some(e);
        r.verdict = Some(v.status);
        r.genus = v.genus;
        return Ok((r, exit_for(v.status)));
    }
    let v = decide_set(&fam.radicands).map_err(fail)?;
    r.verdict = Some(v.status);
    r.genus = v.genus;
    r.rank = v.rank;
    r.branch_count = v.branch_count;
    if fam.radicands.len() <= MAX_SUBSET_FAMILY {
        let s = subset_criterion(&fam.radicands).map_err(fail)?;
        if v.status == Status::NotRationalizable {
            r.failing_subset = s.failing_subset.clone();
        }
        r.subset_criterion = Some(s);
    }
    if let Some(w) = &v.witness {
        let check = verify_witness(&fam.radicands, w);
        if check.exact() || a.allow_constant_defect {
            r.witness = Some(WitnessReport::new(w, &check));
        } else {
            r.note = Some(
                "witness omitted: it needs square roots of constants \
                 (pass --allow-constant-defect to show it)"
                    .into(),
            );
        }
    } else if v.status == Status::Rationalizable {
        r.note = Some("no explicit witness found by the greedy construction".into());
    }
    Ok((r, exit_for(v.status)))
}

fn exit_for(s: Status) -> i32 {
    match s {
        Status::Rationalizable => EXIT_YES,
        _ => EXIT_NO,
    }
}

fn cmd_genus(a: GenusArgs) -> CmdResult {
    let fam = family(&a.input, a.root_order)?;
    let fail = |e: crate::Error| CliError::new(&fam.texts, e);
    let mut r = Report::new("genus", fam.texts.clone());
    if let Some(e) = fam.order {
        let spec = CoverSpec::new(fam.radicands[0].clone(), e).map_err(fail)?;
        r.root_order = Some(e);
        r.genus = Some(cyclic_cover_genus(&spec).map_err(fail)?);
    } else {
        let rep = multiquadratic_genus_report(&fam.radicands).map_err(fail)?;
        r.genus = Some(rep.genus);
        r.rank = Some(rep.summary.rank);
        r.branch_count = Some(rep.summary.branch_count);
    }
    Ok((r, EXIT_YES))
}

fn cmd_minpoly(a: MinpolyArgs) -> CmdResult {
    let fam = family(&a.input, None)?;
    let fail = |e: crate::Error| CliError::new(&fam.texts, e);
    if fam.order.is_some() {
        return Err(CliError::new(&fam.texts, "minpoly takes square roots only"));
    }
    let gens = if a.reduce {
        let t = build_branch_table(&fam.radicands).map_err(fail)?;
        reduced_generators(&t)
            .into_iter()
            .map(|g| RatFunc::from_poly(g.primitive_integer().1))
            .collect()
    } else {
        fam.radicands.clone()
    };
    if gens.is_empty() {
        return Err(CliError::new(
            &fam.texts,
            "every radicand is a square; there is nothing to adjoin",
        ));
    }
    let m = minpoly_multiquadratic(&gens).map_err(fail)?;
    let mut r = Report::new("minpoly", fam.texts.clone());
    r.minpoly = Some(MinPolyReport::new(&m));
    Ok((r, EXIT_YES))
}

fn cmd_rationalize(a: RationalizeArgs) -> CmdResult {
    let fam = family(&a.input, None)?;
    let fail = |e: crate::Error| CliError::new(&fam.texts, e);
    if fam.order.is_some() {
        return Err(CliError::new(
            &fam.texts,
            "rationalize takes square roots only",
        ));
    }
    let rep = multiquadratic_genus_report(&fam.radicands).map_err(fail)?;
    let mut r = Report::new("rationalize", fam.texts.clone());
    r.genus = Some(rep.genus);
    r.rank = Some(rep.summary.rank);
    r.branch_count = Some(rep.summary.branch_count);
    let Some(w) = greedy_rationalize(&fam.radicands).map_err(fail)? else {
        r.verdict = Some(if rep.genus == 0 {
            Status::Unknown
        } else {
            Status::NotRationalizable
        });
        r.note = Some("no witness found".into());
        return Ok((r, EXIT_NO));
    };
    let check = verify_witness(&fam.radicands, &w);
    r.witness = Some(WitnessReport::new(&w, &check));
    if check.exact() || (check.accepted && a.allow_constant_defect) {
        r.verdict = Some(Status::Rationalizable);
        Ok((r, EXIT_YES))
    } else {
        r.verdict = Some(Status::Unknown);
        r.note = Some(
            "witness needs square roots of constants; \
             pass --allow-constant-defect to accept it"
                .into(),
        );
        Ok((r, EXIT_NO))
    }
}

fn cmd_scan(a: ScanArgs) -> CmdResult {
    let params = ScanParams {
        max_m: a.max_m,
        max_factors: a.max_factors,
        coeff_bound: a.coeff_bound,
    };
    let s = conjecture_scan(a.seed, a.trials, params).map_err(|e| CliError::new(&[], e))?;
    let mut r = Report::new("scan", Vec::new());
    if !s.disagreements.is_empty() {
        let body = serde_json::to_string_pretty(&s.disagreements).expect("serializes");
        std::fs::write(&a.out, body + "\n")
            .map_err(|e| CliError::new(&[], format!("cannot write {}: {e}", a.out.display())))?;
        r.note = Some(format!("disagreements written to {}", a.out.display()));
    }
    let code = if s.necessity_violations > 0 {
        EXIT_NO
    } else {
        EXIT_YES
    };
    r.scan = Some(s);
    Ok((r, code))
}
