use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use derivkit_cli::{run, CliError, Command, Inputs, JobSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact computations with derivations of Q[x, y].
#[derive(Debug, Parser)]
#[command(name = "derivkit", version)]
struct Args {
    command: Command,
    /// Linear coefficient a(x) of d/dx + (a*y + b)*d/dy.
    #[arg(long)]
    a: Option<String>,
    /// Constant coefficient b(x) of d/dx + (a*y + b)*d/dy.
    #[arg(long)]
    b: Option<String>,
    /// Coefficient of d/dx of a general derivation.
    #[arg(long)]
    dx: Option<String>,
    /// Coefficient of d/dy of a general derivation.
    #[arg(long)]
    dy: Option<String>,
    /// Automorphism as a generator word, e.g. "elemY(x^2; 1) affine(0,1,1,0; 0,0)".
    #[arg(long)]
    word: Option<String>,
    /// Endomorphism as the images of x and y, "f; g".
    #[arg(long)]
    map: Option<String>,
    /// Base point "x0, y0".
    #[arg(long)]
    point: Option<String>,
    /// Polynomial whose principal ideal is tested by `stable`.
    #[arg(long)]
    poly: Option<String>,
    /// Truncation order of power series.
    #[arg(long, env = "DERIVKIT_ORDER", default_value_t = 8)]
    order: usize,
    /// Total degree bound of the probe polynomials listed by `simple`.
    #[arg(long, env = "DERIVKIT_PROBE_DEGREE", default_value_t = 2)]
    probe_degree: usize,
    #[arg(long, value_enum, env = "DERIVKIT_FORMAT", default_value = "text")]
    format: Format,
    /// Read further `key: value` inputs from stdin.
    #[arg(long)]
    stdin: bool,
}

fn job(args: &Args) -> Result<JobSpec, CliError> {
    let mut inputs = Inputs {
        a: args.a.clone(),
        b: args.b.clone(),
        dx: args.dx.clone(),
        dy: args.dy.clone(),
        word: args.word.clone(),
        map: args.map.clone(),
        point: args.point.clone(),
        poly: args.poly.clone(),
    };
    if args.stdin {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        inputs.merge_key_values(&text)?;
    }
    Ok(JobSpec {
        command: args.command,
        inputs,
        order: args.order,
        probe_degree: args.probe_degree,
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    match job(&args).and_then(|j| run(&j)) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let written = match args.format {
                Format::Text => write!(out, "{report}"),
                Format::Json => writeln!(out, "{}", report.to_json()),
            };
            // a closed downstream pipe is not an error of the tool
            match written.and_then(|()| out.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: writing output: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
