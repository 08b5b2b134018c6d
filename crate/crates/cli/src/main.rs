use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use petrie_core::petrie::{petrie_g, pieri_expand, PetMethod, PetRecord};
use petrie_core::verify::{self, VerifyReport};
use petrie_core::{Basis, Partition, SymFunc};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(name = "petrie", version, about = "Exact computations with Petrie symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Det,
    Explicit,
    Alpha,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    LiuPolo,
    Gessel,
    Genset,
    Alexandersson,
    Petriefication,
    InvariantsAll,
}

#[derive(Subcommand)]
enum Command {
    /// Print G(k,m) in a chosen basis
    Gkm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "s")]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print the Petrie number pet_k(lambda, mu)
    Pet {
        #[arg(long)]
        k: usize,
        /// Comma-separated parts; empty for the empty partition
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print the Schur expansion of G(k,m)·s_mu
    Pieri {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run a verification suite and stream JSON-line reports
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest n (liu-polo), degree (gessel, genset)
        #[arg(long)]
        n_max: Option<usize>,
        /// Bound on k+m (alexandersson)
        #[arg(long)]
        bound: Option<usize>,
        /// Use the full bound 30 for alexandersson
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        lambda: Option<Partition>,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn print_symfunc(f: &SymFunc, format: Format) {
    match format {
        Format::Pretty => println!("{f}"),
        Format::Json => println!("{}", serde_json::to_string(f).expect("symfunc serializes")),
    }
}

fn cmd_gkm(k: usize, m: usize, basis: Basis, format: Format) -> ExitCode {
    if k == 0 {
        return usage("--k must be at least 1");
    }
    print_symfunc(&petrie_g(k, m).to_basis(basis), format);
    ExitCode::SUCCESS
}

fn cmd_pet(k: usize, lambda: Partition, mu: Partition, method: Method, format: Format) -> ExitCode {
    if k == 0 {
        return usage("--k must be at least 1");
    }
    let methods = match method {
        Method::Det => vec![PetMethod::Det],
        Method::Explicit => vec![PetMethod::Explicit],
        Method::Alpha => vec![PetMethod::Alpha],
        // the explicit formula only covers mu = ∅
        Method::All if mu.is_empty() => vec![PetMethod::Det, PetMethod::Alpha, PetMethod::Explicit],
        Method::All => vec![PetMethod::Det, PetMethod::Alpha],
    };
    let mut records = Vec::new();
    for method in methods {
        match method.compute(k, &lambda, &mu) {
            Ok(pet) => records.push(PetRecord { k, lambda: lambda.clone(), mu: mu.clone(), pet, method }),
            Err(e) => return usage(e),
        }
    }
    for r in &records {
        match (format, records.len()) {
            (Format::Json, _) => println!("{}", serde_json::to_string(r).expect("record serializes")),
            (Format::Pretty, 1) => println!("{}", r.pet),
            (Format::Pretty, _) => {
                let name = serde_json::to_value(r.method).expect("method serializes");
                println!("{}: {}", name.as_str().unwrap_or_default(), r.pet);
            }
        }
    }
    if records.windows(2).any(|w| w[0].pet != w[1].pet) {
        eprintln!("error: Petrie number routes disagree");
        return ExitCode::from(EXIT_INCONSISTENT);
    }
    ExitCode::SUCCESS
}

fn cmd_pieri(k: usize, m: usize, mu: Partition, format: Format) -> ExitCode {
    if k == 0 {
        return usage("--k must be at least 1");
    }
    print_symfunc(&pieri_expand(k, m, &mu), format);
    ExitCode::SUCCESS
}

fn collect_reports(
    suite: Suite,
    n_max: Option<usize>,
    bound: Option<usize>,
    extended: bool,
    k: Option<usize>,
    lambda: Option<Partition>,
) -> petrie_core::Result<Vec<VerifyReport>> {
    Ok(match suite {
        Suite::LiuPolo => {
            (2..=n_max.unwrap_or(8)).map(verify::check_liu_polo).collect::<petrie_core::Result<_>>()?
        }
        Suite::Gessel => vec![verify::check_gessel(n_max.unwrap_or(8))],
        Suite::Genset => {
            let n_max = n_max.unwrap_or(7);
            match k {
                Some(k) => vec![verify::check_genset(k, n_max)?],
                None => (2..=5).map(|k| verify::check_genset(k, n_max)).collect::<petrie_core::Result<_>>()?,
            }
        }
        Suite::Alexandersson => {
            let bound = if extended { 30 } else { bound.unwrap_or(14) };
            vec![verify::scan_alexandersson(bound)]
        }
        Suite::Petriefication => match (k, lambda) {
            (Some(k), Some(lambda)) if k >= 1 => vec![verify::petriefication_report(k, &lambda)],
            (None, None) => vec![verify::check_petriefication_known(4, 6)],
            _ => {
                return Err(petrie_core::Error::InvalidParameter(
                    "petriefication takes both --k (at least 1) and --lambda, or neither".into(),
                ))
            }
        },
        Suite::InvariantsAll => verify::invariants_all(),
    })
}

fn cmd_verify(
    suite: Suite,
    n_max: Option<usize>,
    bound: Option<usize>,
    extended: bool,
    k: Option<usize>,
    lambda: Option<Partition>,
) -> ExitCode {
    verify::configure_threads();
    let reports = match collect_reports(suite, n_max, bound, extended, k, lambda) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    for r in &reports {
        println!("{}", r.to_json_line());
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Gkm { k, m, basis, format } => cmd_gkm(k, m, basis, format),
        Command::Pet { k, lambda, mu, method, format } => cmd_pet(k, lambda, mu, method, format),
        Command::Pieri { k, m, mu, format } => cmd_pieri(k, m, mu, format),
        Command::Verify { suite, n_max, bound, extended, k, lambda } => {
            cmd_verify(suite, n_max, bound, extended, k, lambda)
        }
    }
}
