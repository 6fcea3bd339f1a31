//! Command-line front end. `run` is pure (arguments in, exit code and output
//! text out) so the binary and the tests share it.

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::double_sums::{sylv_general, sylv_nonmonic, DoubleSumIndex, SplitPoly};
use crate::error::{Error, Result};
use crate::hermite::{hermite_interpolate, HermiteData};
use crate::poly::{UniPoly, DEFAULT_VAR};
use crate::roots::RootMultiset;
use crate::scalar::{format_fraction, parse_scalar, Scalar};
use crate::subresultants::{sres_det, sres_det_all, sres_prs, SresSequence};
use crate::verify::{run_suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "sylvester",
    version,
    about = "Exact Sylvester double sums, subresultants and Hermite interpolation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sylvester double sum of two root multisets.
    Doublesum(DoublesumArgs),
    /// Subresultants of two polynomials given by coefficients.
    Subresultant(SubresultantArgs),
    /// Hermite interpolant through nodes with multiplicities.
    Hermite(HermiteArgs),
    /// Randomized verification of the identities.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct DoublesumArgs {
    /// Roots of P as "r^m,r^m,..."
    #[arg(long, allow_hyphen_values = true)]
    p_roots: String,
    /// Roots of Q as "r^m,r^m,..."
    #[arg(long, allow_hyphen_values = true)]
    q_roots: String,
    #[arg(short = 'k', long = "k")]
    k: usize,
    #[arg(short = 'l', long = "l")]
    l: usize,
    /// Leading coefficient of P (default 1).
    #[arg(long, allow_hyphen_values = true)]
    lc_p: Option<String>,
    /// Leading coefficient of Q (default 1).
    #[arg(long, allow_hyphen_values = true)]
    lc_q: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Det,
    Prs,
}

#[derive(Args, Debug)]
struct SubresultantArgs {
    /// Coefficients of P, constant first.
    #[arg(long, allow_hyphen_values = true)]
    p_coeffs: String,
    /// Coefficients of Q, constant first.
    #[arg(long, allow_hyphen_values = true)]
    q_coeffs: String,
    #[arg(
        short = 'j',
        long = "j",
        conflicts_with = "all",
        required_unless_present = "all"
    )]
    j: Option<usize>,
    #[arg(long)]
    all: bool,
    /// Compute with one method only; both are compared when omitted.
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct HermiteArgs {
    #[arg(long, allow_hyphen_values = true)]
    nodes: String,
    /// Values f^[i](x) in node order, derivative order ascending.
    #[arg(long, allow_hyphen_values = true)]
    values: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = VerifyConfig::default().max_p)]
    max_p: usize,
    #[arg(long, default_value_t = VerifyConfig::default().max_q)]
    max_q: usize,
    #[arg(long, default_value_t = VerifyConfig::default().trials)]
    trials: usize,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    seed: u64,
}

/// Wire format of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variable: String,
    pub coeffs: Vec<String>,
}

impl PolyJson {
    pub fn from_poly(p: &UniPoly) -> Self {
        PolyJson {
            variable: p.var().to_string(),
            coeffs: p.coeffs().iter().map(format_fraction).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<UniPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_scalar(c))
            .collect::<Result<Vec<_>>>()?;
        if coeffs
            .last()
            .is_some_and(|c| *c == Scalar::from_integer(0.into()))
        {
            return Err(Error::Parse("trailing zero coefficient".into()));
        }
        Ok(UniPoly::new(&self.variable, coeffs))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render(&self) -> String {
        serde_json::to_string(self).expect("plain strings serialize")
    }
}

#[derive(Serialize)]
struct SresEntryJson {
    j: usize,
    poly: PolyJson,
}

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Argument(_) | Error::Dimension(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Unsupported(_) | Error::Resource(_) | Error::DivisionByZero => {
            EXIT_DOMAIN
        }
        Error::Invariant(_) | Error::NotDivisible(_) => EXIT_INVARIANT,
    }
}

/// Everything a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(e: &Error) -> Self {
        Output {
            code: exit_code(e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output::ok(text),
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Doublesum(a) => doublesum(&a),
        Command::Subresultant(a) => subresultant(&a),
        Command::Hermite(a) => hermite(&a),
        Command::Verify(a) => return verify(&a),
    };
    match result {
        Ok(text) => Output::ok(text + "\n"),
        Err(e) => Output::err(&e),
    }
}

fn parse_list(text: &str) -> Result<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_scalar).collect()
}

fn render(p: &UniPoly, json: bool) -> String {
    if json {
        PolyJson::from_poly(p).render()
    } else {
        p.to_string()
    }
}

fn doublesum(a: &DoublesumArgs) -> Result<String> {
    let p: RootMultiset = a.p_roots.parse()?;
    let q: RootMultiset = a.q_roots.parse()?;
    let idx = DoubleSumIndex::new(a.k, a.l);
    let poly = if a.lc_p.is_none() && a.lc_q.is_none() {
        sylv_general(&p, &q, idx)
    } else {
        let lc = |s: &Option<String>| {
            s.as_deref()
                .map_or(Ok(Scalar::from_integer(1.into())), parse_scalar)
        };
        let sp = SplitPoly::new(lc(&a.lc_p)?, p).map_err(|e| Error::Parse(e.to_string()))?;
        let sq = SplitPoly::new(lc(&a.lc_q)?, q).map_err(|e| Error::Parse(e.to_string()))?;
        sylv_nonmonic(&sp, &sq, idx)?
    };
    Ok(render(&poly, a.json))
}

fn sequence(p: &UniPoly, q: &UniPoly, method: Option<Method>) -> Result<SresSequence> {
    match method {
        Some(Method::Det) => sres_det_all(p, q),
        Some(Method::Prs) => sres_prs(p, q),
        None => {
            let (det, prs) = (sres_det_all(p, q)?, sres_prs(p, q)?);
            if det != prs {
                return Err(Error::Invariant(
                    "determinant and remainder methods disagree".into(),
                ));
            }
            Ok(prs)
        }
    }
}

fn subresultant(a: &SubresultantArgs) -> Result<String> {
    let p = UniPoly::new(DEFAULT_VAR, parse_list(&a.p_coeffs)?);
    let q = UniPoly::new(DEFAULT_VAR, parse_list(&a.q_coeffs)?);
    if let Some(j) = a.j {
        let one = match a.method {
            Some(Method::Det) => sres_det(&p, &q, j)?,
            _ => {
                let seq = sequence(&p, &q, a.method)?;
                seq.get(j).cloned().ok_or_else(|| {
                    Error::Argument(format!("j = {j} must be below deg P = {}", seq.len()))
                })?
            }
        };
        return Ok(render(&one, a.json));
    }
    let seq = sequence(&p, &q, a.method)?;
    if a.json {
        let entries: Vec<SresEntryJson> = seq
            .descending()
            .map(|(j, s)| SresEntryJson {
                j,
                poly: PolyJson::from_poly(s),
            })
            .collect();
        return Ok(serde_json::to_string(&entries).expect("plain strings serialize"));
    }
    let items: Vec<String> = seq
        .descending()
        .map(|(j, s)| format!("{j}: \"{s}\""))
        .collect();
    Ok(format!("{{{}}}", items.join(", ")))
}

fn hermite(a: &HermiteArgs) -> Result<String> {
    let nodes: RootMultiset = a.nodes.parse()?;
    let data = HermiteData::new(nodes, parse_list(&a.values)?)?;
    Ok(render(&hermite_interpolate(&data, DEFAULT_VAR), a.json))
}

fn verify(a: &VerifyArgs) -> Output {
    let cfg = VerifyConfig {
        max_p: a.max_p,
        max_q: a.max_q,
        trials: a.trials,
        seed: a.seed,
    };
    match run_suite(&a.suite, &cfg) {
        Ok(reports) => {
            let stdout: String = reports.iter().map(|r| format!("{r}\n")).collect();
            let code = if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_VERIFY
            };
            Output {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Output::err(&e),
    }
}
