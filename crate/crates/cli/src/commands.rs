use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use kpell_core::closed_forms::{eigen_product, gen_double_sum, pell_binomial, symbolic_term};
use kpell_core::sequences::{
    gen_binet, pell_binet, pell_fast, term_with_guard, terms_upto, SeqKind, SeqParams,
    DEFAULT_GUARD_N,
};
use kpell_core::tridiagonal::{
    cofactor_g, cofactor_p, gen_matrix, theta_phi, usmani_inverse, MatrixDoc,
};
use kpell_core::verify::{parse_selection, run_suite, Grid};
use kpell_core::{BigInt, Error, Rational};
use serde::Serialize;

use crate::args::{
    BenchArgs, BenchMethod, EigenArgs, EvalArgs, EvalMethod, Format, MatrixArgs, Show, TableArgs,
    VerifyArgs,
};

pub const GUARD_ENV: &str = "KPELL_GUARD_N";

/// Largest index at which `eval` cross-checks a method against the recurrence.
const CROSS_CHECK_N_MAX: u64 = 10_000;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or a request outside an operation's domain (exit 2).
    Usage(String),
    /// A computation disagreed with its oracle or failed internally (exit 1).
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { .. }
            | Error::IndexOutOfDomain { .. }
            | Error::UnsupportedKind { .. }
            | Error::GuardExceeded { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

/// What a command printed and whether everything it checked held.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

type CmdResult = Result<Outcome, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents always serialize");
    s.push('\n');
    s
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .map_or_else(String::new, |p| p.get_name().to_owned())
}

pub fn guard_from_env() -> Result<u64, CliError> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            usage(format!(
                "{GUARD_ENV} must be a nonnegative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_GUARD_N),
    }
}

#[derive(Debug, Serialize)]
pub struct TermDoc {
    pub kind: SeqKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    pub n: u64,
    pub value: String,
}

impl TermDoc {
    fn numeric(kind: SeqKind, params: &SeqParams, n: u64, value: &BigInt) -> Self {
        Self {
            kind,
            k: Some(params.k()),
            a: (kind == SeqKind::GenPell).then_some(params.a()),
            n,
            value: value.to_string(),
        }
    }
}

fn render_terms(rows: &[TermDoc], format: Format) -> String {
    match format {
        Format::Json => json(&rows),
        Format::Text => {
            let width = rows.last().map_or(1, |r| r.n.to_string().len());
            rows.iter()
                .map(|r| format!("{:>width$}  {}\n", r.n, r.value))
                .collect()
        }
    }
}

pub fn table(args: &TableArgs) -> CmdResult {
    let kind = args.kind;
    let rows: Vec<TermDoc> = if args.symbolic {
        if !matches!(kind, SeqKind::Pell | SeqKind::GenPell) {
            return Err(usage(format!(
                "--symbolic supports kinds P and G, not {kind}"
            )));
        }
        let factor = if kind == SeqKind::GenPell { "a" } else { "" };
        (0..=args.n_max)
            .map(|n| {
                Ok(TermDoc {
                    kind,
                    k: None,
                    a: None,
                    n,
                    value: symbolic_term::<BigInt>(kind, n)?.render_with_factor(factor),
                })
            })
            .collect::<Result<_, Error>>()?
    } else {
        let guard = guard_from_env()?;
        if args.n_max > guard {
            return Err(Error::GuardExceeded {
                n: args.n_max,
                guard,
            }
            .into());
        }
        let params = SeqParams::new(args.k.unwrap_or(1), args.a.unwrap_or(1))?;
        terms_upto::<BigInt>(kind, &params, args.n_max)
            .iter()
            .enumerate()
            .map(|(n, v)| TermDoc::numeric(kind, &params, n as u64, v))
            .collect()
    };
    Ok(Outcome::ok(render_terms(&rows, args.format)))
}

fn eval_method(
    method: EvalMethod,
    kind: SeqKind,
    params: &SeqParams,
    n: u64,
) -> Result<BigInt, CliError> {
    let k = params.k();
    let only = |want: SeqKind| {
        if kind == want {
            Ok(())
        } else {
            Err(usage(format!(
                "method {} supports only kind {want}, not {kind}",
                value_name(method)
            )))
        }
    };
    let value = match method {
        EvalMethod::Recurrence => term_with_guard(kind, params, n, guard_from_env()?)?,
        EvalMethod::Binet => match kind {
            SeqKind::Pell => pell_binet(k, n)?,
            SeqKind::GenPell => gen_binet(params, n)?,
            SeqKind::PellLucas => gen_binet(&SeqParams::new(k, 2)?, n)?,
            SeqKind::ModifiedPell => gen_binet(&SeqParams::new(k, 1)?, n)?,
        },
        EvalMethod::Binomial => {
            only(SeqKind::Pell)?;
            if n < 3 {
                return Err(usage("method binomial needs n >= 3"));
            }
            pell_binomial(k, n - 1)?
        }
        EvalMethod::DoubleSum => {
            only(SeqKind::GenPell)?;
            if n < 2 {
                return Err(usage("method double-sum needs n >= 2"));
            }
            gen_double_sum(params, n - 1)?
        }
        EvalMethod::Fast => {
            only(SeqKind::Pell)?;
            pell_fast::<BigInt>(k, n)?.0
        }
    };
    Ok(value)
}

pub fn eval(args: &EvalArgs) -> CmdResult {
    let kind = args.seq.kind;
    let params = SeqParams::new(args.seq.k, args.seq.a)?;
    let value = eval_method(args.method, kind, &params, args.n)?;
    if args.method != EvalMethod::Recurrence && args.n <= CROSS_CHECK_N_MAX {
        let expect: BigInt = term_with_guard(kind, &params, args.n, u64::MAX)?;
        if expect != value {
            return Err(CliError::Failed(format!(
                "method {} gave {value}, recurrence gave {expect}",
                value_name(args.method)
            )));
        }
    }
    let doc = TermDoc::numeric(kind, &params, args.n, &value);
    let stdout = match args.format {
        Format::Json => json(&doc),
        Format::Text => format!("{value}\n"),
    };
    Ok(Outcome::ok(stdout))
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let ids = parse_selection(&args.identities).map_err(|e| usage(e.to_string()))?;
    let grid = Grid::upto(args.a_max, args.k_max, args.n_max, ids)?;
    let report = run_suite(&grid)?;
    let stdout = match args.format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = report.summary_table();
            for f in report.failures() {
                writeln!(out, "{f}").unwrap();
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        ok: report.all_pass(),
    })
}

#[derive(Debug, Serialize)]
struct ThetaPhiDoc {
    theta: Vec<String>,
    phi: Vec<String>,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn render_matrix(doc: MatrixDoc, grid: String, format: Format) -> String {
    match format {
        Format::Json => json(&doc),
        Format::Text => grid,
    }
}

pub fn matrix(args: &MatrixArgs) -> CmdResult {
    let kind = args.seq.kind;
    let params = SeqParams::new(args.seq.k, args.seq.a)?;
    let n = usize::try_from(args.n).map_err(|_| usage("n is too large"))?;
    let t = gen_matrix(kind, &params, n)?;
    let stdout = match args.show {
        Show::Matrix => {
            let m = t.to_dense();
            render_matrix(m.to_doc(), m.to_grid(), args.format)
        }
        Show::Inverse => {
            let m = usmani_inverse(&t.to_field::<Rational>())?;
            render_matrix(m.to_doc(), m.to_grid(), args.format)
        }
        Show::Cofactor => {
            let m = match kind {
                SeqKind::Pell => cofactor_p::<BigInt>(params.k(), n)?,
                SeqKind::GenPell => cofactor_g::<BigInt>(&params, n)?,
                _ => {
                    return Err(usage(format!(
                        "cofactor supports kinds P and G, not {kind}"
                    )))
                }
            };
            render_matrix(m.to_doc(), m.to_grid(), args.format)
        }
        Show::ThetaPhi => {
            let tp = theta_phi(&t);
            let doc = ThetaPhiDoc {
                theta: strings(tp.thetas()),
                phi: strings(tp.phis()),
            };
            match args.format {
                Format::Json => json(&doc),
                Format::Text => format!(
                    "theta  {}\nphi    {}\n",
                    doc.theta.join(" "),
                    doc.phi.join(" ")
                ),
            }
        }
    };
    Ok(Outcome::ok(stdout))
}

#[derive(Debug, Serialize)]
struct EigenDoc {
    k: u64,
    n: u64,
    formula: &'static str,
    product_re: f64,
    product_im: f64,
    rounded: String,
    exact: String,
    abs_residual: f64,
    relative_residual: f64,
}

pub fn eigen(args: &EigenArgs) -> CmdResult {
    let rep = eigen_product::<f64>(args.k, args.n, args.paper_verbatim)?;
    let doc = EigenDoc {
        k: rep.k,
        n: rep.n,
        formula: if rep.used_corrected_formula {
            "corrected"
        } else {
            "verbatim"
        },
        product_re: rep.product.re,
        product_im: rep.product.im,
        rounded: rep.rounded.to_string(),
        exact: rep.exact.to_string(),
        abs_residual: rep.abs_residual,
        relative_residual: rep.relative_residual(),
    };
    let stdout = match args.format {
        Format::Json => json(&doc),
        Format::Text => format!(
            "formula {}\nproduct {:.6}\nimag {:.6}\nrounded {}\nexact {}\nabs_residual {:.6e}\n",
            doc.formula, doc.product_re, doc.product_im, doc.rounded, doc.exact, doc.abs_residual
        ),
    };
    Ok(Outcome {
        stdout,
        ok: rep.rounding_matches(),
    })
}

/// Low 64 bits of `|v|`.
pub fn digest(v: &BigInt) -> u64 {
    v.iter_u64_digits().next().unwrap_or(0)
}

pub fn bench(args: &BenchArgs) -> CmdResult {
    let params = SeqParams::with_k(args.k)?;
    let guard = guard_from_env()?;
    let mut out = format!(
        "method {} k {} n {}\n",
        value_name(args.method),
        args.k,
        args.n
    );
    let mut digests = Vec::new();
    for run in 1..=args.repeat {
        let start = Instant::now();
        let value: BigInt = match args.method {
            BenchMethod::Recurrence => term_with_guard(SeqKind::Pell, &params, args.n, guard)?,
            BenchMethod::Fast => pell_fast::<BigInt>(args.k, args.n)?.0,
        };
        let elapsed = start.elapsed();
        let d = digest(&value);
        writeln!(
            out,
            "run {run} time_ms {:.3} digest {d}",
            elapsed.as_secs_f64() * 1e3
        )
        .unwrap();
        digests.push(d);
    }
    let stable = digests.windows(2).all(|w| w[0] == w[1]);
    writeln!(out, "digest {}", digests[0]).unwrap();
    Ok(Outcome {
        stdout: out,
        ok: stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_low_word() {
        assert_eq!(digest(&BigInt::from(0)), 0);
        assert_eq!(digest(&BigInt::from(29)), 29);
        let big = (BigInt::from(1) << 64u32) + 5;
        assert_eq!(digest(&big), 5);
    }

    #[test]
    fn text_table_alignment() {
        let params = SeqParams::new(1, 1).unwrap();
        let rows: Vec<_> = [0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378]
            .iter()
            .enumerate()
            .map(|(n, &v)| TermDoc::numeric(SeqKind::Pell, &params, n as u64, &BigInt::from(v)))
            .collect();
        let text = render_terms(&rows, Format::Text);
        assert!(text.starts_with(" 0  0\n"));
        assert!(text.ends_with("10  2378\n"));
    }

    #[test]
    fn error_classes() {
        assert!(matches!(
            CliError::from(Error::DivisionByZero),
            CliError::Failed(_)
        ));
        assert!(matches!(
            CliError::from(Error::GuardExceeded { n: 5, guard: 1 }),
            CliError::Usage(_)
        ));
    }
}
