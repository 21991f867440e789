use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wpsmirror::euler::{
    mirror_test, stringy_mirror_closed, stringy_polytope, vafa_double_sum, vafa_subset_sum,
};
use wpsmirror::mirror::ghv_polynomial;
use wpsmirror::quasismooth::{
    census, census_tsv, is_transverse, try_has_ip_property, CensusFilter,
};
use wpsmirror::wps::{mirror_lattice, weight_flags, WeightVector};
use wpsmirror::Error;

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

/// Euler numbers, mirror polynomials and weight-system censuses for
/// Calabi-Yau hypersurfaces in weighted projective spaces.
#[derive(Parser)]
#[command(name = "wpsmirror", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Well-formed, Gorenstein, IP and transversality flags.
    Check { weights: String },
    /// Orbifold Euler number by the double sum and/or the subset-gcd sum.
    Euler {
        weights: String,
        #[arg(long, value_enum, default_value_t = EulerMethod::Both)]
        method: EulerMethod,
    },
    /// Stringy Euler number of the mirror (needs the IP-property).
    Stringy {
        weights: String,
        #[arg(long, value_enum, default_value_t = StringyMethod::Both)]
        method: StringyMethod,
    },
    /// The Laurent polynomial sum t^{v_i}.
    Mirror {
        weights: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the vertices of conv(v_i), one per line.
        #[arg(long, value_name = "PATH")]
        dump_polytope: Option<PathBuf>,
    },
    /// Full report comparing every route; exits 1 if they disagree.
    Verify { weights: String },
    /// Enumerate weight systems as TSV.
    Census {
        #[arg(long)]
        dim: usize,
        /// Defaults: 60 for dim 2, 100 for dim 3, 4000 for dim 4.
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long, value_enum, default_value_t = Filter::Transverse)]
        filter: Filter,
        #[arg(long, env = "WPSMIRROR_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EulerMethod {
    DoubleSum,
    Subset,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum StringyMethod {
    ClosedForm,
    Polytope,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    Transverse,
    Ip,
    All,
}

impl From<Filter> for CensusFilter {
    fn from(f: Filter) -> Self {
        match f {
            Filter::Transverse => CensusFilter::Transverse,
            Filter::Ip => CensusFilter::Ip,
            Filter::All => CensusFilter::All,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
    Disagree(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn parse_weights(s: &str) -> Result<WeightVector, Failure> {
    s.parse().map_err(Failure::from)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure::Domain(format!("cannot write output: {e}")))
        }
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(v: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(v).expect("reports always serialize");
    text.push('\n');
    emit(&text)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { weights } => {
            let w = parse_weights(&weights)?;
            let flags = weight_flags(&w);
            let ip = try_has_ip_property(&w)?;
            let transverse = flags.well_formed && is_transverse(&w);
            print_json(&json!({
                "weights": w,
                "degree": w.degree(),
                "well_formed": flags.well_formed,
                "gorenstein": flags.gorenstein,
                "ip": ip,
                "transverse": transverse,
            }))?;
        }
        Command::Euler { weights, method } => {
            let w = parse_weights(&weights)?;
            let mut out = json!({ "weights": w, "degree": w.degree() });
            let double = match method {
                EulerMethod::DoubleSum | EulerMethod::Both => Some(vafa_double_sum(&w)),
                EulerMethod::Subset => None,
            };
            let subset = match method {
                EulerMethod::Subset | EulerMethod::Both => {
                    if !w.is_well_formed() {
                        return Err(Error::NotWellFormed(w.to_string()).into());
                    }
                    Some(vafa_subset_sum(&w))
                }
                EulerMethod::DoubleSum => None,
            };
            if let Some(d) = &double {
                out["double_sum"] = json!(d);
            }
            if let Some(s) = &subset {
                out["subset_sum"] = json!({ "value": s.value, "partials": s.partials });
            }
            if let (Some(d), Some(s)) = (&double, &subset) {
                out["agree"] = json!(d == &s.value);
            }
            print_json(&out)?;
        }
        Command::Stringy { weights, method } => {
            let w = parse_weights(&weights)?;
            let mut out = json!({ "weights": w, "degree": w.degree() });
            let closed = match method {
                StringyMethod::ClosedForm | StringyMethod::Both => Some(stringy_mirror_closed(&w)?),
                StringyMethod::Polytope => None,
            };
            let poly = match method {
                StringyMethod::Polytope | StringyMethod::Both => {
                    Some(stringy_polytope(&mirror_lattice(&w)?)?)
                }
                StringyMethod::ClosedForm => None,
            };
            if let Some(c) = &closed {
                out["closed_form"] = json!(c);
            }
            if let Some(p) = &poly {
                out["polytope"] = json!(p);
            }
            if let (Some(c), Some(p)) = (&closed, &poly) {
                out["agree"] = json!(c == p);
            }
            print_json(&out)?;
        }
        Command::Mirror {
            weights,
            format,
            dump_polytope,
        } => {
            let w = parse_weights(&weights)?;
            let f = ghv_polynomial(&w)?;
            match format {
                Format::Text => emit(&format!("{f}\n"))?,
                Format::Json => print_json(&f)?,
            }
            if let Some(path) = dump_polytope {
                let simplex = mirror_lattice(&w)?.mirror_simplex()?;
                fs::write(&path, simplex.dump()).map_err(|e| {
                    Failure::Domain(format!("cannot write {}: {e}", path.display()))
                })?;
            }
        }
        Command::Verify { weights } => {
            let w = parse_weights(&weights)?;
            let report = mirror_test(&w)?;
            print_json(&report)?;
            if !report.methods_agree {
                return Err(Failure::Disagree(format!("methods disagree for {w}")));
            }
        }
        Command::Census {
            dim,
            max_degree,
            filter,
            jobs,
            out,
        } => {
            let max_degree = max_degree.unwrap_or(match dim {
                2 => 60,
                3 => 100,
                _ => 4000,
            });
            let filter = CensusFilter::from(filter);
            let records = census(dim, max_degree, filter, jobs)?;
            let text = census_tsv(dim, max_degree, filter, &records);
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| {
                    Failure::Domain(format!("cannot write {}: {e}", path.display()))
                })?,
                None => emit(&text)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Disagree(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DISAGREE)
        }
    }
}
