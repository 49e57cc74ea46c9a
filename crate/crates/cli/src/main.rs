use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use mtzv_core::numeric::FloatEstimate;
use mtzv_core::render::{render, OutputFormat};
use mtzv_core::syntax::{parse_literal, parse_mt, parse_product, Literal};
use mtzv_core::{
    closed_form_ones, eval_mt_float, eval_mzv_float, product_to_mzv, reduce, verify_reduction,
    ConvergenceQuery, Rational,
};

/// Reduce Mordell-Tornheim zeta values to multiple zeta values.
#[derive(Debug, Parser)]
#[command(name = "mtzv", version)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite T(s1,...,sr;s) as a combination of multiple zeta values.
    Reduce {
        literal: String,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Reduce, then compare exact truncated sums of both sides.
    Verify {
        literal: String,
        /// Cutoffs N, comma separated.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        cutoffs: Vec<u64>,
    },
    /// Evaluate a T(...) or Z(...) literal numerically.
    Eval {
        literal: String,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
    },
    /// Check the sufficient absolute-convergence criterion.
    Converges {
        /// Real parts sigma_1..sigma_r as integers or p/q, comma separated.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        sigmas: Vec<Rational>,
        /// Real part of the Mordell-Tornheim exponent s; omit for a multiple zeta query.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<Rational>,
    },
    /// Expand P(s1,...,sr) = zeta(s1)...zeta(sr) into multiple zeta values.
    Product {
        literal: String,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// T(1,...,1;s) = r! zeta(s+1,1,...,1).
    ClosedForm {
        r: usize,
        s: u32,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
}

/// Text to print and the exit code it maps to.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

fn describe_estimate(est: &FloatEstimate, eps: f64) -> String {
    format!(
        "value = {}\nerror <= {:.3e} (requested {eps:e})\ncutoff = {}",
        est.value, est.error_bound, est.cutoff
    )
}

fn run(command: Command) -> anyhow::Result<Report> {
    let report = match command {
        Command::Reduce { literal, format } => {
            let t = parse_mt(&literal)?;
            Report::ok(render(&t.to_string(), &reduce(&t), format))
        }
        Command::Verify { literal, cutoffs } => {
            let t = parse_mt(&literal)?;
            if cutoffs.contains(&0) {
                bail!("cutoffs must be positive");
            }
            let report = verify_reduction(&t, &cutoffs)?;
            let mut lines = vec![format!("{} = {}", t, report.reduced)];
            for check in &report.checks {
                let status = if check.holds() { "OK" } else { "MISMATCH" };
                lines.push(format!(
                    "N={}: lhs {}, rhs {}, {status}",
                    check.cutoff, check.lhs, check.rhs
                ));
            }
            lines.push(if report.verdict { "verified" } else { "FAILED" }.to_string());
            Report {
                text: lines.join("\n"),
                code: if report.verdict { 0 } else { 1 },
            }
        }
        Command::Eval { literal, eps } => {
            let est = match parse_literal(&literal)? {
                Literal::Mt(t) => eval_mt_float(&t, eps)?,
                Literal::Mzv(z) => eval_mzv_float(&z, eps)?,
                Literal::Product(_) => bail!("eval takes a T(...) or Z(...) literal"),
            };
            Report::ok(describe_estimate(&est, eps))
        }
        Command::Converges { sigmas, sigma } => {
            let query = ConvergenceQuery {
                sigmas,
                sigma_last: sigma,
            };
            match query.first_failing_k() {
                None => Report::ok("certified-convergent".into()),
                Some(k) => Report {
                    text: format!("criterion-fails at k={k}"),
                    code: 1,
                },
            }
        }
        Command::Product { literal, format } => {
            let args = parse_product(&literal)?;
            let c = product_to_mzv(&args)?;
            Report::ok(render(&Literal::Product(args).to_string(), &c, format))
        }
        Command::ClosedForm { r, s, format } => {
            let c = closed_form_ones(r, s)?;
            let label = format!("T({};{s})", vec!["1"; r].join(","));
            Report::ok(render(&label, &c, format))
        }
    };
    Ok(report)
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "{text}")?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|report| {
        emit(&report.text, cli.output.as_ref())?;
        Ok(report.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
