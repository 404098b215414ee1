//! Command-line front end: single coefficients, full table emission in
//! three formats, displayed basis matrices, and verification suites with
//! machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 certification failure (a theorem-level contradiction), 4 resource
//! guard exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::json;

use jackcc::connection;
use jackcc::error::Error;
use jackcc::fh;
use jackcc::jm;
use jackcc::matchings;
use jackcc::partition::all_partitions;
use jackcc::reconstruct;
use jackcc::tables;
use jackcc::Partition;

#[derive(Parser)]
#[command(name = "jackcc", version, about = "Exact Jack-polynomial connection coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one connection coefficient as a polynomial in b.
    Coeff {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Evaluate the polynomial at this integer instead.
        #[arg(long)]
        at: Option<i64>,
    },
    /// Emit a full table for one degree.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a basis-transition matrix in its displayed orientation.
    Fh {
        #[arg(long, value_enum)]
        kind: FhKind,
        #[arg(long)]
        r: usize,
        /// South-east block index; only valid with kind M.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Degree for the coefficient-side suites.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Degree for the graded-algebra suite.
        #[arg(long, default_value_t = 3)]
        r: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Connection coefficients.
    C,
    /// Marginal sums over the third index.
    Marginal,
    /// Cumulants.
    D,
    /// Rescaled cumulants with their rational prefactor.
    H,
    /// Matching counts.
    A,
    /// Bipartite matching counts.
    Atilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FhKind {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Integrality,
    Multiplicativity,
    Matchings,
    Fh,
    Reconstruct,
    All,
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::GuardExceeded { .. } => ExitCode::from(4),
        Error::NonPolynomial { .. } | Error::NonIntegral { .. } | Error::Inconsistent(_) => {
            ExitCode::from(3)
        }
        Error::ParsePartition(_) | Error::SizeMismatch(..) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    exit_for(err)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Coeff { lambda, mu, nu, at } => cmd_coeff(&lambda, &mu, &nu, at),
        Command::Table {
            n,
            kind,
            format,
            out,
        } => cmd_table(n, kind, format, out.as_deref()),
        Command::Fh { kind, r, i, format } => cmd_fh(kind, r, i, format),
        Command::Verify { suite, n, r } => cmd_verify(suite, n, r),
    }
}

fn cmd_coeff(lambda: &str, mu: &str, nu: &str, at: Option<i64>) -> ExitCode {
    let parsed: Result<(Partition, Partition, Partition), Error> = (|| {
        Ok((lambda.parse()?, mu.parse()?, nu.parse()?))
    })();
    let (lambda, mu, nu) = match parsed {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    match connection::c_coeff(&lambda, &mu, &nu) {
        Ok(poly) => {
            match at {
                Some(b0) => println!("{}", poly.eval(&BigInt::from(b0))),
                None => {
                    let coeffs: Vec<String> =
                        poly.coeffs().iter().map(BigInt::to_string).collect();
                    println!("[{}]", coeffs.join(", "));
                    println!("{poly}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn cmd_table(
    n: usize,
    kind: TableKind,
    format: TableFormat,
    out: Option<&std::path::Path>,
) -> ExitCode {
    let rendered: Result<String, Error> = (|| {
        Ok(match kind {
            TableKind::C => {
                let file = tables::coeff_table_file(n, None)?;
                match format {
                    TableFormat::Json => tables::to_json(&file)?,
                    TableFormat::Csv => tables::coeff_table_csv(&file),
                    TableFormat::Latex => tables::coeff_table_latex(&file),
                }
            }
            TableKind::D => {
                let file = tables::cumulant_table_file(n, None)?;
                match format {
                    TableFormat::Json => tables::to_json(&file)?,
                    TableFormat::Csv => tables::coeff_table_csv(&file),
                    TableFormat::Latex => tables::coeff_table_latex(&file),
                }
            }
            TableKind::Marginal => {
                let file = tables::marginal_table_file(n, None)?;
                match format {
                    TableFormat::Json => tables::to_json(&file)?,
                    TableFormat::Csv => tables::marginal_table_csv(&file),
                    TableFormat::Latex => tables::marginal_table_latex(&file),
                }
            }
            TableKind::H => {
                let file = tables::scaled_cumulant_table_file(n, None)?;
                match format {
                    TableFormat::Json => tables::to_json(&file)?,
                    TableFormat::Csv => tables::scaled_table_csv(&file),
                    TableFormat::Latex => tables::scaled_table_latex(&file),
                }
            }
            TableKind::A | TableKind::Atilde => {
                let bipartite = matches!(kind, TableKind::Atilde);
                let file = tables::count_table_file(n, bipartite, None)?;
                match format {
                    TableFormat::Json => tables::to_json(&file)?,
                    TableFormat::Csv => tables::count_table_csv(&file),
                    TableFormat::Latex => tables::count_table_latex(&file),
                }
            }
        })
    })();
    match rendered.and_then(|text| tables::emit(&text, out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn cmd_fh(kind: FhKind, r: usize, i: Option<usize>, format: MatrixFormat) -> ExitCode {
    if r == 0 {
        eprintln!("error: the degree r must be at least 1");
        return ExitCode::from(2);
    }
    if i.is_some() && !matches!(kind, FhKind::M) {
        eprintln!("error: --i applies only to kind M");
        return ExitCode::from(2);
    }
    if let Some(i) = i {
        if i == 0 || i > r {
            eprintln!("error: the block index must satisfy 1 <= i <= r");
            return ExitCode::from(2);
        }
    }
    let built: Result<(fh::LabeledMatrix, &str, (&str, &str)), Error> = (|| {
        Ok(match kind {
            FhKind::U => (fh::matrix_u(r)?, "U", ("\\mathfrak{f}_\\lambda", "\\mathfrak{m}_\\mu")),
            FhKind::L => (fh::matrix_l(r)?, "L", ("\\mathfrak{m}_\\mu", "\\mathfrak{c}_\\rho")),
            FhKind::M => match i {
                None => (fh::matrix_m(r)?, "M", ("\\mathfrak{f}_\\lambda", "\\mathfrak{c}_\\rho")),
                Some(i) => (
                    fh::matrix_m_sub(r, i)?,
                    "M",
                    ("\\mathfrak{f}_\\lambda", "\\mathfrak{c}_\\rho"),
                ),
            },
            FhKind::N => (fh::matrix_n(r)?, "N", ("\\mathfrak{f}_\\lambda", "\\mathfrak{g}_\\pi")),
            FhKind::Q => (fh::matrix_q(r)?, "Q", ("\\pi", "\\rho")),
        })
    })();
    let (matrix, name, (corner_row, corner_col)) = match built {
        Ok(b) => b,
        Err(e) => return fail(&e),
    };
    let text_corner = match kind {
        FhKind::U => "f\\m",
        FhKind::L => "m\\c",
        FhKind::M => "f\\c",
        FhKind::N => "f\\g",
        FhKind::Q => "pi\\rho",
    };
    let rendered = match format {
        MatrixFormat::Text => Ok(tables::matrix_text(text_corner, &matrix)),
        MatrixFormat::Latex => Ok(tables::matrix_latex(corner_row, corner_col, &matrix)),
        MatrixFormat::Json => {
            tables::matrix_file(name, r, i, &matrix).and_then(|f| tables::to_json(&f))
        }
    };
    match rendered {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

struct Check {
    name: String,
    outcome: Result<(), Error>,
}

fn suite_guard(what: &'static str, requested: usize, limit: usize) -> Result<(), Error> {
    if requested > limit {
        return Err(Error::GuardExceeded {
            what,
            requested,
            limit,
        });
    }
    Ok(())
}

fn integrality_checks(n: usize) -> Result<Vec<Check>, Error> {
    suite_guard("integrality suite", n, tables::DEFAULT_TABLE_GUARD)?;
    let mut checks = vec![Check {
        name: format!("connection coefficients certify as integer polynomials (n={n})"),
        outcome: connection::c_table(n).map(|_| ()),
    }];
    checks.push(Check {
        name: format!("marginal sums non-negative and degree-bounded (n={n})"),
        outcome: connection::verify_marginal_bounds(n),
    });
    checks.push(Check {
        name: format!("row sums match the closed form (n={n})"),
        outcome: connection::verify_row_sums(n),
    });
    checks.push(Check {
        name: format!("cumulants certify and match the ordered-cover oracle (n={n})"),
        outcome: verify_cumulants(n),
    });
    checks.push(Check {
        name: format!("rescaled cumulants divide exactly (n={n})"),
        outcome: verify_scaled_cumulants(n),
    });
    Ok(checks)
}

fn verify_cumulants(n: usize) -> Result<(), Error> {
    let parts = all_partitions(n);
    for lambda in &parts {
        for mu in &parts {
            for nu in &parts {
                let d = connection::cumulant(lambda, mu, nu)?;
                let oracle = connection::cumulant_oracle(lambda, mu, nu)?;
                if d.to_unipoly(jackcc::Var::B) != oracle {
                    return Err(Error::Inconsistent(format!(
                        "cumulant at [{lambda} | {mu} ; {nu}] disagrees with the oracle"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn verify_scaled_cumulants(n: usize) -> Result<(), Error> {
    let parts = all_partitions(n);
    for lambda in &parts {
        for mu in &parts {
            for nu in &parts {
                connection::h_coefficient(lambda, mu, nu)?;
            }
        }
    }
    Ok(())
}

fn suite_checks(suite: Suite, n: usize, r: usize) -> Result<Vec<Check>, Error> {
    match suite {
        Suite::Integrality => integrality_checks(n),
        Suite::Multiplicativity => {
            suite_guard("multiplicativity suite", n, 6)?;
            Ok(vec![
                Check {
                    name: format!("triple products associate (n={n})"),
                    outcome: connection::verify_associativity(n),
                },
                Check {
                    name: format!("marginal products associate (n={n})"),
                    outcome: connection::verify_marginal_associativity(n),
                },
            ])
        }
        Suite::Matchings => Ok(vec![
            Check {
                name: format!("matching counts match evaluations at b=0 and b=1 (n={n})"),
                outcome: matchings::verify_b01(n, None),
            },
            Check {
                name: format!("matching counts associate (n={n})"),
                outcome: matchings::verify_comb_multiplicativity(n, None),
            },
        ]),
        Suite::Fh => {
            suite_guard("graded-algebra suite", r, 6)?;
            Ok(vec![
                Check {
                    name: format!("matrix determinants, triangularity and block identity (r={r})"),
                    outcome: fh::verify_matrices(r),
                },
                Check {
                    name: format!("top coefficients agree along both routes (r={r})"),
                    outcome: fh::verify_two_path(r),
                },
                Check {
                    name: format!("top structure constants stabilize (r={r})"),
                    outcome: fh::verify_stabilization(r),
                },
                Check {
                    name: format!("Jucys-Murphy elementary identity (n={})", r + 2),
                    outcome: jm::verify_elementary_all(r + 2, None),
                },
            ])
        }
        Suite::Reconstruct => {
            suite_guard("reconstruction suite", n, tables::DEFAULT_TABLE_GUARD)?;
            Ok(vec![Check {
                name: format!("marginals alone rebuild the full table (n={n})"),
                outcome: reconstruct::verify_roundtrip(n),
            }])
        }
        Suite::All => {
            let mut checks = Vec::new();
            for s in [
                Suite::Integrality,
                Suite::Multiplicativity,
                Suite::Matchings,
                Suite::Fh,
                Suite::Reconstruct,
            ] {
                checks.extend(suite_checks(s, n, r)?);
            }
            Ok(checks)
        }
    }
}

fn cmd_verify(suite: Suite, n: usize, r: usize) -> ExitCode {
    let suite_name = match suite {
        Suite::Integrality => "integrality",
        Suite::Multiplicativity => "multiplicativity",
        Suite::Matchings => "matchings",
        Suite::Fh => "fh",
        Suite::Reconstruct => "reconstruct",
        Suite::All => "all",
    };
    let checks = match suite_checks(suite, n, r) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let mut passed = true;
    let mut report = Vec::new();
    for check in &checks {
        match &check.outcome {
            Ok(()) => report.push(json!({"name": check.name, "status": "pass"})),
            Err(Error::GuardExceeded {
                what,
                requested,
                limit,
            }) => {
                eprintln!(
                    "error: {what} guard exceeded: requested {requested}, limit {limit}"
                );
                return ExitCode::from(4);
            }
            Err(e) => {
                passed = false;
                report.push(json!({
                    "name": check.name,
                    "status": "fail",
                    "detail": e.to_string(),
                }));
            }
        }
    }
    let doc = json!({"suite": suite_name, "checks": report, "passed": passed});
    println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
