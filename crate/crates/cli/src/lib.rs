//! Command-line front end for the `jonesmod` library.
//!
//! [`run`] is the whole program; `main` only forwards process arguments.
//! Exit codes: 0 success, 1 a check or verification failed, 2 usage or data error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jonesmod::knot::{jones, parse_braid, parse_pd, PDCode};
use jonesmod::knotdb::{evaluate_expression, load_db, parse_knot_expression, validate_db, KnotDb, KnotExpression};
use jonesmod::modp::{canonical_residue, enumerate_admissible, reference_set, refined_reference_set};
use jonesmod::verify::{verify_reference_realization, verify_shift, verify_table1};
use jonesmod::{check_conditions, classify, parse_poly, Error, LaurentPoly, Prime};

pub const DB_ENV: &str = "JONESMOD_DB";
pub const DEFAULT_DB: &str = "data/knots.csv";

#[derive(Parser, Debug)]
#[command(name = "jonesmod", version, about = "Jones polynomials: exact values, classification and mod-p census")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    /// Knot table CSV (default: $JONESMOD_DB, then data/knots.csv, then the built-in table).
    #[arg(long, global = true)]
    pub db: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jones polynomial of a diagram, braid closure or knot expression.
    Compute(ComputeArgs),
    /// Check the five root-of-unity conditions.
    Conditions(PolyArg),
    /// Family and parameter of a polynomial satisfying the conditions.
    Classify(PolyArg),
    /// Reference polynomials mod p.
    Refs {
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
        /// Keep only parameters compatible with V(ζ6) = ±3^l (p ≥ 5).
        #[arg(long)]
        refined: bool,
    },
    /// Admissible polynomials with support in a degree window.
    Enumerate {
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        range: Vec<i64>,
        #[arg(long)]
        count_only: bool,
    },
    /// Admissible count, bound and density for a window.
    Density {
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        range: Vec<i64>,
    },
    /// Canonical residue modulo f̄ and the matching reference entry.
    Residue {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
    },
    /// Census checks against the knot table.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Knot table maintenance.
    #[command(subcommand)]
    Db(DbCommand),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    #[arg(long)]
    pub pd: Option<String>,
    #[arg(long)]
    pub braid: Option<String>,
    /// Expression over table names, e.g. "3_1 # 4_1*".
    #[arg(long)]
    pub knot: Option<String>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: Source,
    /// Reduce the result mod P.
    #[arg(long = "mod", value_name = "P")]
    pub modulus: Option<u64>,
}

#[derive(Args, Debug)]
pub struct PolyArg {
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// The eight knots realizing the mod-2 reference polynomials.
    Reference,
    /// The seven span-8 rows of the mod-2 census.
    Table1,
    /// Census rows shifted by k copies of 12n237.
    Shift {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum DbCommand {
    /// Conditions, classification and mod-2 range of every record.
    Validate,
}

/// What a subcommand produced.
struct Outcome {
    command: &'static str,
    result: Value,
    pass: bool,
    details: Vec<Value>,
    text: String,
}

impl Outcome {
    fn ok(command: &'static str, result: Value, text: String) -> Self {
        Outcome {
            command,
            result,
            pass: true,
            details: Vec::new(),
            text,
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn prime(p: u64) -> Result<Prime, Error> {
    Prime::new(p)
}

fn window(range: &[i64]) -> (i64, i64) {
    (range[0], range[1])
}

fn resolve_db_path(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os(DB_ENV).filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    let default = Path::new(DEFAULT_DB);
    default.exists().then(|| default.to_path_buf())
}

fn open_db(flag: Option<&Path>) -> Result<KnotDb, Error> {
    match resolve_db_path(flag) {
        Some(path) => load_db(path),
        None => Ok(KnotDb::bundled()),
    }
}

/// Parse arguments, execute, and write results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(o) => {
            let _ = match cli.output {
                Output::Json => writeln!(
                    out,
                    "{}",
                    json!({"command": o.command, "result": o.result, "pass": o.pass, "details": o.details})
                ),
                Output::Text => writeln!(out, "{}", o.text.trim_end()),
            };
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = match cli.output {
                Output::Json => writeln!(
                    out,
                    "{}",
                    json!({"command": name, "result": Value::Null, "pass": false, "details": [{"error": e.to_string()}]})
                ),
                Output::Text => writeln!(err, "error: {e}"),
            };
            2
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Compute(_) => "compute",
        Command::Conditions(_) => "conditions",
        Command::Classify(_) => "classify",
        Command::Refs { .. } => "refs",
        Command::Enumerate { .. } => "enumerate",
        Command::Density { .. } => "density",
        Command::Residue { .. } => "residue",
        Command::Verify(VerifyCommand::Reference) => "verify reference",
        Command::Verify(VerifyCommand::Table1) => "verify table1",
        Command::Verify(VerifyCommand::Shift { .. }) => "verify shift",
        Command::Db(DbCommand::Validate) => "db validate",
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Compute(args) => compute(args, cli.db.as_deref()),
        Command::Conditions(PolyArg { poly }) => {
            let v = parse_poly(poly, None)?;
            let r = check_conditions(&v)?;
            let mut text = format!(
                "V(1)=1 {}\nV'(1)=0 {}\nV(zeta3)=1 {}\nV(i)=±1 {}\nV(zeta6)=±(√-3)^m {}\n",
                mark(r.c1),
                mark(r.c2),
                mark(r.c3),
                mark(r.c4),
                mark(r.c5)
            );
            text += &format!("V(i) = {}, V(zeta6) = {}", r.at_i, r.at_zeta6);
            if let Some(m) = r.m {
                text += &format!(", m = {m}");
            }
            let details = r.failed().into_iter().map(|f| json!({"failed": f})).collect();
            Ok(Outcome {
                command: name,
                pass: r.all_pass(),
                result: to_value(&r),
                details,
                text,
            })
        }
        Command::Classify(PolyArg { poly }) => {
            let v = parse_poly(poly, None)?;
            match classify(&v) {
                Ok(c) => {
                    let text = format!(
                        "family {} n = {}\nbase {}\nrealizable n: {}",
                        c.family, c.n, c.base, c.realizable_n
                    );
                    Ok(Outcome::ok(name, to_value(&c), text))
                }
                Err(e @ Error::ConditionsFailed(_)) => Ok(Outcome {
                    command: name,
                    result: Value::Null,
                    pass: false,
                    details: vec![json!({"error": e.to_string()})],
                    text: e.to_string(),
                }),
                Err(e) => Err(e),
            }
        }
        Command::Refs { modulus, refined } => {
            let p = prime(*modulus)?;
            let set = if *refined { refined_reference_set(p)? } else { reference_set(p) };
            let mut text = String::new();
            for e in &set.entries {
                text += &format!("{:<4} n={:<3} {}\n", e.family.to_string(), e.n, e.poly);
            }
            text += &format!("{} entries, {} distinct", set.entries.len(), set.distinct_count);
            Ok(Outcome::ok(name, to_value(&set), text))
        }
        Command::Enumerate {
            modulus,
            range,
            count_only,
        } => {
            let (a, b) = window(range);
            let w = enumerate_admissible(prime(*modulus)?, a, b)?;
            let mut result = to_value(&w);
            let mut text = String::new();
            if *count_only {
                result.as_object_mut().expect("object").remove("members");
            } else if let Some(ms) = w.members() {
                for m in ms {
                    text += &format!("{m}\n");
                }
            } else {
                text += "(too many members to list)\n";
            }
            text += &format!("count {}", w.count);
            Ok(Outcome::ok(name, result, text))
        }
        Command::Density { modulus, range } => {
            let (a, b) = window(range);
            let w = enumerate_admissible(prime(*modulus)?, a, b)?;
            let text = format!("count {}\nbound {}\ndensity {}", w.count, w.bound, w.density);
            Ok(Outcome::ok(
                name,
                json!({"p": w.p, "a": a, "b": b, "count": w.count.to_string(), "bound": w.bound.to_string(),
                       "density": w.density.to_string(), "classes": w.classes}),
                text,
            ))
        }
        Command::Residue { poly, modulus } => {
            let p = prime(*modulus)?;
            let g = parse_poly(poly, Some(p))?;
            let r = canonical_residue(&g)?;
            let refs = reference_set(p);
            let hit = refs.lookup(&r).map(|i| &refs.entries[i]);
            let text = match hit {
                Some(e) => format!("residue {r}\nadmissible: family {} n={}", e.family, e.n),
                None => format!("residue {r}\nnot admissible"),
            };
            Ok(Outcome::ok(name, json!({"residue": r, "admissible": hit.is_some(), "reference": hit}), text))
        }
        Command::Verify(v) => {
            let db = open_db(cli.db.as_deref())?;
            match v {
                VerifyCommand::Reference => {
                    let r = verify_reference_realization(&db);
                    Ok(report(name, to_value(&r), r.pass, r.to_string()))
                }
                VerifyCommand::Table1 => {
                    let r = verify_table1(&db)?;
                    Ok(report(name, to_value(&r), r.pass, r.to_string()))
                }
                VerifyCommand::Shift { k } => {
                    let r = verify_shift(&db, *k)?;
                    Ok(report(name, to_value(&r), r.pass, r.to_string()))
                }
            }
        }
        Command::Db(DbCommand::Validate) => {
            let db = open_db(cli.db.as_deref())?;
            let r = validate_db(&db);
            let mut text = format!(
                "{:<8} {:<5} {:<6} {:<5} {:<10} {:<8} {}\n",
                "knot", "conds", "family", "n", "realizable", "flipped", "mod 2"
            );
            for rec in &r.records {
                text += &format!(
                    "{:<8} {:<5} {:<6} {:<5} {:<10} {:<8} {}\n",
                    rec.name,
                    mark(rec.conditions_pass),
                    rec.family.map_or("-".into(), |f| f.to_string()),
                    rec.n.as_deref().unwrap_or("-"),
                    mark(rec.realizable_n),
                    if rec.chirality_flipped { "yes" } else { "no" },
                    rec.mod2
                );
            }
            if !r.missing_required.is_empty() {
                text += &format!("missing required: {}\n", r.missing_required.join(", "));
            }
            if !r.missing_optional.is_empty() {
                text += &format!("missing optional: {}\n", r.missing_optional.join(", "));
            }
            text += if r.pass { "PASS" } else { "FAIL" };
            Ok(report(name, to_value(&r), r.pass, text))
        }
    }
}

fn report(command: &'static str, result: Value, pass: bool, text: String) -> Outcome {
    Outcome {
        command,
        result,
        pass,
        details: Vec::new(),
        text,
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn compute(args: &ComputeArgs, db_flag: Option<&Path>) -> Result<Outcome, Error> {
    let mut details = Vec::new();
    let mut notes = Vec::new();
    let (v, diagram): (LaurentPoly, Option<PDCode>) = if let Some(pd) = &args.source.pd {
        let pd = parse_pd(pd)?;
        (jones(&pd)?, Some(pd))
    } else if let Some(w) = &args.source.braid {
        let pd = parse_braid(w)?.to_pd()?;
        (jones(&pd)?, Some(pd))
    } else {
        let text = args.source.knot.as_deref().expect("clap enforces one source");
        let expr = parse_knot_expression(text)?;
        let db = open_db(db_flag)?;
        for name in expr.names() {
            if let Some(r) = db.get(name) {
                if r.chirality_flipped {
                    notes.push(format!("{name}: stored diagram mirrored to match the table's Jones polynomial"));
                    details.push(json!({"knot": name, "chirality_flipped": true}));
                }
            }
        }
        let pd = match &expr {
            KnotExpression::Knot(name) => db.get(name).map(|r| r.pd.clone()),
            _ => None,
        };
        (evaluate_expression(&db, &expr)?, pd)
    };
    let v = match args.modulus {
        Some(p) => v.reduce_mod(prime(p)?)?,
        None => v,
    };
    let mut result = json!({"jones": v});
    if let Some(pd) = &diagram {
        result["crossings"] = json!(pd.crossing_count());
        result["writhe"] = json!(pd.writhe()?);
    }
    let mut text = v.to_string();
    for n in notes {
        text += &format!("\nnote: {n}");
    }
    Ok(Outcome {
        command: "compute",
        result,
        pass: true,
        details,
        text,
    })
}
