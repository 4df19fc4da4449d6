//! Command handling for the `flagged-schur` binary. Every command produces a
//! single JSON document and an exit code: 0 on success, 1 when a
//! verification finds a counterexample, 2 on usage or precondition errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flagged_schur::demazure::{flag_to_permutation, key_polynomial, PermutationWord};
use flagged_schur::partitions::{residue_data, t_core, t_quotient};
use flagged_schur::schur::{jacobi_trudi, verify_main_theorem, JacobiTrudiSpec};
use flagged_schur::tableaux::{enumerate_flagged, is_valid_flagged, schur_by_tableaux, SkewTableau};
use flagged_schur::verify::{
    corollary_sweep, demazure_relations_sweep, dyck_sweep, jacobi_trudi_sweep, lemma31_sweep, littlewood_sweep,
    longest_element_sweep, main_theorem_sweep, phi_routes_sweep, ps_theorem_sweep, SweepReport,
};
use flagged_schur::{Error, Flag, IntPolynomial, Partition, SkewShape, Twist};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest tn accepted by the sweeps.
const MAX_TN: usize = 8;
/// Largest box width accepted by the sweeps.
const MAX_BOX: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "flagged-schur", version, about = "Flagged skew Schur polynomials and their root-of-unity specializations")]
pub struct Cli {
    /// Write the JSON result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// t-core, t-quotient and residue regrouping of a partition.
    CoreQuotient {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// s_{λ/μ}(a, b) by tableau enumeration, by determinant, or both.
    FlaggedSchur {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Both sides of the factorization for one instance.
    Factorize {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Key polynomial κ_{λ,w} from a permutation or a flag.
    KeyPoly {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// One-line notation, e.g. 2,1,3.
        #[arg(long, conflicts_with = "flag", required_unless_present = "flag")]
        perm: Option<String>,
        /// Flag a with i ≤ a_i ≤ n; the permutation is w_a.
        #[arg(long)]
        flag: Option<String>,
    },
    /// Validate a tableau given as JSON {"outer","inner","rows"} against flags.
    CheckTableau {
        /// The tableau JSON, or @FILE to read it from a file.
        #[arg(long)]
        tableau: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// List every flagged tableau of λ/μ.
    Tableaux {
        #[command(flatten)]
        instance: Instance,
        /// Stop after this many tableaux.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
}

#[derive(Debug, Args)]
pub struct Instance {
    #[arg(long, allow_hyphen_values = true)]
    pub outer: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub inner: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Tableaux,
    Determinant,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    MainTheorem,
    PhiRoutes,
    PsTheorem,
    Corollary,
    Lemma31,
    Littlewood,
    Dyck,
    JacobiTrudi,
    Demazure,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub scope: Scope,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Box width: shapes range over partitions with at most this many columns.
    #[arg(long = "box", default_value_t = 3)]
    pub box_cols: usize,
    /// Rows of the box for the jacobi-trudi scope.
    #[arg(long, default_value_t = 3)]
    pub rows: usize,
    /// Random samples for the jacobi-trudi and demazure scopes.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Largest flag entry for the jacobi-trudi scope.
    #[arg(long, default_value_t = 5)]
    pub max_entry: usize,
    /// Largest k for the lemma31 scope.
    #[arg(long, default_value_t = 12)]
    pub k_max: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Exit code and the text to emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub output: String,
}

enum Failure {
    Usage(String),
    Library(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type CmdResult = Result<(u8, Value), Failure>;

/// Comma-separated non-negative integers; blank segments are ignored.
pub fn parse_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("{s:?} is not a non-negative integer")))
        })
        .collect()
}

/// A partition; "0" and "" both denote the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition, Error> {
    Partition::new(parse_list(text)?)
}

pub fn parse_flag(text: &str) -> Result<Flag, Error> {
    Flag::new(parse_list(text)?)
}

/// Structured polynomial JSON with an added human-readable "text" field.
fn render(p: &IntPolynomial) -> Value {
    let mut v = serde_json::to_value(p).expect("polynomials serialize");
    v["text"] = json!(p.to_string());
    v
}

fn error_value(failure: &Failure) -> Value {
    match failure {
        Failure::Usage(msg) => json!({ "error": { "kind": "usage", "message": msg } }),
        Failure::Library(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
        Failure::Io(msg) => json!({ "error": { "kind": "io", "message": msg } }),
    }
}

fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn usage_message(e: &clap::Error) -> String {
    let rendered = e.to_string();
    rendered
        .lines()
        .find(|l| !l.trim().is_empty())
        .map(|l| l.trim_start_matches("error: ").to_string())
        .unwrap_or_else(|| e.kind().to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    output: e.to_string(),
                };
            }
            return Outcome {
                code: EXIT_USAGE,
                output: to_text(&error_value(&Failure::Usage(usage_message(&e)))),
            };
        }
    };
    let result = execute(&cli.command);
    let (code, value) = match result {
        Ok(ok) => ok,
        Err(failure) => (EXIT_USAGE, error_value(&failure)),
    };
    let text = to_text(&value);
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &text) {
            let failure = Failure::Io(format!("cannot write {}: {e}", path.display()));
            return Outcome {
                code: EXIT_USAGE,
                output: to_text(&error_value(&failure)),
            };
        }
        return Outcome {
            code,
            output: String::new(),
        };
    }
    Outcome { code, output: text }
}

fn execute(command: &Command) -> CmdResult {
    match command {
        Command::CoreQuotient { lambda, t, n } => core_quotient(lambda, *t, *n),
        Command::FlaggedSchur { instance, mode } => flagged_schur(instance, *mode),
        Command::Factorize { instance, t, n } => factorize(instance, *t, *n),
        Command::Verify(args) => verify(args),
        Command::KeyPoly { lambda, perm, flag } => key_poly(lambda, perm.as_deref(), flag.as_deref()),
        Command::CheckTableau { tableau, a, b } => check_tableau(tableau, a, b),
        Command::Tableaux { instance, limit } => tableaux(instance, *limit),
    }
}

fn core_quotient(lambda: &str, t: usize, n: usize) -> CmdResult {
    let lam = parse_partition(lambda)?;
    let twist = Twist::new(t, n)?;
    let data = residue_data(&lam, twist)?;
    Ok((
        EXIT_OK,
        json!({
            "core": t_core(&lam, twist)?,
            "quotient": t_quotient(&lam, twist)?,
            "sigma": data.sigma,
            "sign": data.sign,
        }),
    ))
}

struct ParsedInstance {
    shape: SkewShape,
    a: Flag,
    b: Flag,
}

fn parse_instance(instance: &Instance) -> Result<ParsedInstance, Failure> {
    let shape = SkewShape::new(parse_partition(&instance.outer)?, parse_partition(&instance.inner)?);
    let a = parse_flag(&instance.a)?;
    let b = parse_flag(&instance.b)?;
    if a.len() != b.len() {
        return Err(Failure::Usage(format!(
            "flags a and b have different lengths ({} and {})",
            a.len(),
            b.len()
        )));
    }
    Ok(ParsedInstance { shape, a, b })
}

fn flagged_schur(instance: &Instance, mode: Mode) -> CmdResult {
    let ParsedInstance { shape, a, b } = parse_instance(instance)?;
    let by_tableaux = match mode {
        Mode::Tableaux | Mode::Both => Some(schur_by_tableaux(&shape, &a, &b)?),
        Mode::Determinant => None,
    };
    let by_determinant = match mode {
        Mode::Determinant | Mode::Both => {
            let spec = JacobiTrudiSpec::new(shape.clone(), a.clone(), b.clone(), a.len())?;
            Some(jacobi_trudi(&spec)?)
        }
        Mode::Tableaux => None,
    };
    let mut out = json!({ "outer": shape.outer, "inner": shape.inner, "a": a, "b": b });
    match (by_tableaux, by_determinant) {
        (Some(tab), Some(det)) => {
            let equal = tab == det;
            out["mode"] = json!("both");
            out["equal"] = json!(equal);
            out["polynomial"] = render(&det);
            if !equal {
                out["tableaux"] = render(&tab);
            }
            Ok((if equal { EXIT_OK } else { EXIT_COUNTEREXAMPLE }, out))
        }
        (Some(poly), None) => {
            out["mode"] = json!("tableaux");
            out["polynomial"] = render(&poly);
            Ok((EXIT_OK, out))
        }
        (None, Some(poly)) => {
            out["mode"] = json!("determinant");
            out["polynomial"] = render(&poly);
            Ok((EXIT_OK, out))
        }
        (None, None) => unreachable!("every mode computes at least one route"),
    }
}

fn factorize(instance: &Instance, t: usize, n: usize) -> CmdResult {
    let ParsedInstance { shape, a, b } = parse_instance(instance)?;
    let twist = Twist::new(t, n)?;
    let report = verify_main_theorem(&shape, &a, &b, twist)?;
    let code = if report.equal { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    let mut out = serde_json::to_value(&report).expect("reports serialize");
    out["lhs_text"] = json!(report.lhs.to_string());
    out["rhs_text"] = json!(report.rhs.to_string());
    Ok((code, out))
}

fn check_bounds(args: &VerifyArgs, needs_twist: bool) -> Result<(), Failure> {
    if args.box_cols > MAX_BOX {
        return Err(Error::SizeGuard {
            size: args.box_cols,
            limit: MAX_BOX,
        }
        .into());
    }
    if needs_twist && args.t.saturating_mul(args.n) > MAX_TN {
        return Err(Error::SizeGuard {
            size: args.t.saturating_mul(args.n),
            limit: MAX_TN,
        }
        .into());
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let twist = || Twist::new(args.t, args.n);
    let report: SweepReport = match args.scope {
        Scope::MainTheorem => {
            check_bounds(args, true)?;
            main_theorem_sweep(twist()?, args.box_cols)?
        }
        Scope::PhiRoutes => {
            check_bounds(args, true)?;
            phi_routes_sweep(twist()?, args.box_cols)?
        }
        Scope::Littlewood => {
            check_bounds(args, true)?;
            littlewood_sweep(twist()?, args.t * args.n, args.box_cols)?
        }
        Scope::Corollary => {
            check_bounds(args, true)?;
            corollary_sweep(twist()?, args.box_cols)?
        }
        Scope::PsTheorem => {
            check_bounds(args, false)?;
            if args.n > MAX_TN {
                return Err(Error::SizeGuard { size: args.n, limit: MAX_TN }.into());
            }
            let mut report = ps_theorem_sweep(args.n, args.box_cols)?;
            report.absorb(longest_element_sweep(args.n, args.box_cols)?);
            report
        }
        Scope::Lemma31 => {
            if args.t == 0 {
                return Err(Error::NonPositiveParameter { name: "t" }.into());
            }
            if args.k_max > 16 || args.box_cols > 4 {
                return Err(Error::SizeGuard {
                    size: args.k_max.max(0) as usize,
                    limit: 16,
                }
                .into());
            }
            lemma31_sweep(args.t, -2, args.k_max, args.box_cols)?
        }
        Scope::Dyck => {
            if args.t.saturating_mul(args.n) > 24 {
                return Err(Error::SizeGuard {
                    size: args.t.saturating_mul(args.n),
                    limit: 24,
                }
                .into());
            }
            dyck_sweep(twist()?)?
        }
        Scope::JacobiTrudi => {
            check_bounds(args, false)?;
            if args.rows == 0 || args.rows > 5 || args.max_entry > 8 {
                return Err(Error::SizeGuard { size: args.rows, limit: 5 }.into());
            }
            jacobi_trudi_sweep(args.rows, args.box_cols, args.samples, args.max_entry, args.seed)?
        }
        Scope::Demazure => {
            if !(2..=5).contains(&args.n) {
                return Err(Error::SizeGuard { size: args.n, limit: 5 }.into());
            }
            demazure_relations_sweep(args.n, args.samples, 4, args.seed)?
        }
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    Ok((code, serde_json::to_value(&report).expect("reports serialize")))
}

fn key_poly(lambda: &str, perm: Option<&str>, flag: Option<&str>) -> CmdResult {
    let lam = parse_partition(lambda)?;
    let w = match (perm, flag) {
        (Some(perm), None) => PermutationWord::new(parse_list(perm)?)?,
        (None, Some(flag)) => flag_to_permutation(&parse_flag(flag)?)?,
        _ => return Err(Failure::Usage("give exactly one of --perm and --flag".into())),
    };
    let key = key_polynomial(&lam, &w)?;
    Ok((
        EXIT_OK,
        json!({ "lambda": lam, "permutation": w, "polynomial": render(&key) }),
    ))
}

fn check_tableau(tableau: &str, a: &str, b: &str) -> CmdResult {
    let text = match tableau.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {path}: {e}")))?,
        None => tableau.to_string(),
    };
    let tab: SkewTableau =
        serde_json::from_str(&text).map_err(|e| Failure::Library(Error::Parse(format!("tableau JSON: {e}"))))?;
    let (a, b) = (parse_flag(a)?, parse_flag(b)?);
    Ok((
        EXIT_OK,
        json!({
            "semistandard": tab.is_semistandard(),
            "valid": is_valid_flagged(&tab, &a, &b),
            "weight": tab.weight(),
        }),
    ))
}

fn tableaux(instance: &Instance, limit: usize) -> CmdResult {
    let ParsedInstance { shape, a, b } = parse_instance(instance)?;
    let mut listed = Vec::new();
    let mut total = 0usize;
    for tab in enumerate_flagged(&shape, &a, &b)? {
        if listed.len() < limit {
            listed.push(tab);
        }
        total += 1;
    }
    Ok((
        EXIT_OK,
        json!({ "count": total, "truncated": total > listed.len(), "tableaux": listed }),
    ))
}
