//! Command-line front end: construct, analyze, verify, census.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ntlab::catalog::CodeFamily;
use ntlab::code::Code;
use ntlab::coset;
use ntlab::design;
use ntlab::error::Error;
use ntlab::f2::BitVec;
use ntlab::fileio;
use ntlab::submodule;
use ntlab::verify::{self, CensusScope, RowParams};

#[derive(Parser)]
#[command(name = "ntlab", version, about = "binary codes, their invariants, and 2-neighbour-transitivity certificates", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a catalog code (or its invariance group) and write it out.
    Construct {
        /// Family name, e.g. golay24, rm1, qr, sp_quadric, hadamard12.
        family: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Quadric type for sp_quadric: plus or minus.
        #[arg(long = "type")]
        quadric_type: Option<String>,
        /// Write the matching invariance group instead of the code.
        #[arg(long)]
        group: bool,
        /// Output path; stdout when omitted.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Print invariants of a code file.
    Analyze {
        code_file: PathBuf,
        #[arg(long)]
        weights: bool,
        #[arg(long = "covering-radius")]
        covering_radius: bool,
        #[arg(long = "distance-partition")]
        distance_partition: bool,
        #[arg(long)]
        dual: bool,
    },
    /// Extract a weight layer as a block design and certify it.
    Design {
        code_file: PathBuf,
        #[arg(long)]
        weight: usize,
        /// Design strength to certify (2 or 5).
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Certify 2-neighbour-transitivity by the module criterion, optionally
    /// cross-checked by the orbit oracle.
    #[command(name = "check-2nt")]
    Check2Nt {
        code_file: PathBuf,
        group_file: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Spin a seed vector under a group and print the resulting subspace.
    Spin {
        group_file: PathBuf,
        /// Seed vector as a 0/1 string.
        #[arg(long)]
        seed: String,
    },
    /// Verify one catalog row.
    #[command(name = "verify-table")]
    VerifyTable {
        #[arg(long)]
        line: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        summary: bool,
        /// Seed for any sampled certification (recorded in the report).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Verify every feasible catalog row plus the non-linear regularity
    /// checks.
    Census {
        #[arg(long)]
        summary: bool,
        /// all-with-data (default) or all-native.
        #[arg(long, default_value = "all-with-data")]
        scope: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    // die silently on closed pipes like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::UnsupportedParameters { .. } | Error::Range { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}

fn parse_family(
    name: &str,
    m: Option<usize>,
    t: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
    quadric_type: Option<&str>,
) -> Result<CodeFamily, Error> {
    let need = |value: Option<usize>, what: &str| -> Result<usize, Error> {
        value.ok_or_else(|| Error::UnsupportedParameters {
            family: name.into(),
            constraint: format!("--{what} is required"),
        })
    };
    Ok(match name {
        "repetition" => CodeFamily::Repetition { m: need(m, "m")? },
        "even_weight" => CodeFamily::EvenWeight { m: need(m, "m")? },
        "rm1" => CodeFamily::Rm1 { t: need(t, "t")? },
        "hamming" => CodeFamily::Hamming { t: need(t, "t")? },
        "pg_hyperplane" => CodeFamily::PgHyperplane { t: need(t, "t")?, k: need(k, "k")? },
        "pg_complement" => CodeFamily::PgComplement { t: need(t, "t")?, k: need(k, "k")? },
        "qr" => CodeFamily::Qr { r: need(r, "r")? },
        "qr_even" => CodeFamily::QrEven { r: need(r, "r")? },
        "eqr" => CodeFamily::Eqr { r: need(r, "r")? },
        "golay23" => CodeFamily::Golay23,
        "golay24" => CodeFamily::Golay24,
        "golay23_even" => CodeFamily::Golay23Even,
        "m22_code" => CodeFamily::M22Code,
        "hadamard12" => CodeFamily::Hadamard12,
        "punct_hadamard11" => CodeFamily::PunctHadamard11,
        "punct_hadamard11_even" => CodeFamily::PunctHadamard11Even,
        "sp_quadric" => CodeFamily::SpQuadric {
            t: need(t, "t")?,
            plus: match quadric_type {
                Some("plus") => true,
                Some("minus") => false,
                _ => {
                    return Err(Error::UnsupportedParameters {
                        family: name.into(),
                        constraint: "--type plus|minus is required".into(),
                    })
                }
            },
        },
        "hermitian_unital_code" => CodeFamily::HermitianUnital { r: need(r, "r")? },
        other => {
            return Err(Error::UnsupportedParameters {
                family: other.into(),
                constraint: "unknown family".into(),
            })
        }
    })
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Construct { family, m, t, k, r, quadric_type, group, out } => {
            let spec = parse_family(&family, m, t, k, r, quadric_type.as_deref())?;
            if group {
                let g = spec.matching_group()?.construct()?;
                emit(out.as_ref(), &fileio::render_group(&g))?;
            } else {
                let code = spec.construct()?;
                emit(out.as_ref(), &fileio::render_code(&code))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { code_file, weights, covering_radius, distance_partition, dual } => {
            let code = fileio::read_code(&code_file)?;
            match &code {
                Code::Linear(c) => println!("LINEAR m={} k={}", c.length(), c.dimension()),
                Code::Words(c) => println!("SET m={} n={}", c.length(), c.size()),
            }
            match code.minimum_distance() {
                Ok(d) => println!("delta = {d}"),
                Err(Error::UndefinedDistance) => println!("delta undefined (single codeword)"),
                Err(e) => return Err(e),
            }
            if weights {
                let wd = code.weight_distribution()?;
                for w in wd.support() {
                    println!("W[{w}] = {}", wd.count(w));
                }
            }
            if covering_radius || distance_partition {
                let partition = coset::distance_partition(&code)?;
                println!("rho = {}", partition.covering_radius());
                if distance_partition {
                    for (i, size) in partition.sizes.iter().enumerate() {
                        println!("|C_{i}| = {size}");
                    }
                }
            }
            if dual {
                match &code {
                    Code::Linear(c) => print!("{}", fileio::render_code(&Code::Linear(c.dual()))),
                    Code::Words(_) => {
                        return Err(Error::Hypothesis("dual of an unrestricted code is undefined".into()))
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Design { code_file, weight, t } => {
            let code = fileio::read_code(&code_file)?;
            let Code::Linear(linear) = &code else {
                return Err(Error::Hypothesis("design extraction needs a linear code".into()));
            };
            let mut layer = design::extract_layer(linear, weight)?;
            println!("v = {}", layer.points());
            println!("block_size = {}", layer.block_size());
            println!("b = {}", layer.block_count());
            let cert = design::certify_design(&layer, t)?;
            if cert.is_design {
                println!("design = yes");
                println!("t = {t}");
                println!("lambda = {}", cert.lambda);
                layer.record_certificate(t, cert.lambda);
                if t == 2 {
                    let identities = design::design_identities(&layer)?;
                    println!("r = {}", identities.r);
                    println!(
                        "identities = {}",
                        if identities.ok { "hold" } else { "FAIL" }
                    );
                    if !identities.ok {
                        println!("VERDICT = FAIL");
                        return Ok(ExitCode::from(1));
                    }
                }
                println!("VERDICT = PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                let w = cert.witness.expect("non-design has a witness");
                println!("design = no");
                println!(
                    "witness = {:?} covered {} times, {:?} covered {} times",
                    w.subset_a, w.count_a, w.subset_b, w.count_b
                );
                println!("VERDICT = FAIL");
                Ok(ExitCode::from(1))
            }
        }
        Command::Check2Nt { code_file, group_file, oracle } => {
            let code = fileio::read_code(&code_file)?;
            let group = fileio::read_group(&group_file)?;
            let criterion = match &code {
                Code::Linear(c) => Some(verify::certify_2nt_criterion(c, &group)?),
                Code::Words(_) => None,
            };
            if let Some(cert) = &criterion {
                println!("method = criterion");
                println!("pass = {}", cert.pass);
                if let Some(d) = cert.delta {
                    println!("delta = {d}");
                }
                if let Some(case) = cert.case {
                    println!("case = {}", case.label());
                }
                println!("detail = {}", cert.detail);
            } else {
                println!("method = criterion");
                println!("pass = n/a (unrestricted code; use --oracle)");
            }
            let mut pass = criterion.as_ref().map(|c| c.pass);
            if oracle || criterion.is_none() {
                let cert = verify::oracle_2nt(&code, &group)?;
                println!("---");
                println!("method = oracle");
                println!("pass = {}", cert.pass);
                if let Some((c0, c1, c2)) = cert.cell_sizes {
                    println!("cells = {c0} {c1} {c2}");
                }
                println!("detail = {}", cert.detail);
                if let Some(criterion_pass) = pass {
                    if criterion_pass != cert.pass {
                        println!("---");
                        println!("WARNING = criterion and oracle disagree");
                    }
                }
                pass = Some(pass.unwrap_or(true) && cert.pass);
            }
            println!("---");
            let verdict = pass.unwrap_or(false);
            println!("VERDICT = {}", if verdict { "PASS" } else { "FAIL" });
            Ok(if verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Spin { group_file, seed } => {
            let group = fileio::read_group(&group_file)?;
            let seed = BitVec::from_bitstring(&seed)?;
            let spun = submodule::spin(&group, &seed)?;
            println!("dimension = {}", spun.dimension());
            for row in spun.generator().rows() {
                println!("{}", row.to_bitstring());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTable { line, t, k, r, summary, seed } => {
            let mut report = verify::verify_table_row(line, RowParams { t, k, r })?;
            if let Some(s) = seed {
                report.seed = s;
            }
            if summary {
                println!("{}", report.summary_line());
            } else {
                print!("{}", report.render());
            }
            Ok(match report.verdict {
                verify::Verdict::Fail => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Census { summary, scope, seed } => {
            let scope = match scope.as_str() {
                "all-native" => CensusScope::AllNative,
                "all-with-data" => CensusScope::AllWithData,
                other => {
                    return Err(Error::UnsupportedParameters {
                        family: "census".into(),
                        constraint: format!("unknown scope {other:?}"),
                    })
                }
            };
            let mut reports = verify::census(scope)?;
            if let Some(s) = seed {
                for r in &mut reports {
                    r.seed = s;
                }
            }
            if summary {
                for report in &reports {
                    println!("{}", report.summary_line());
                }
            } else {
                for (i, report) in reports.iter().enumerate() {
                    if i > 0 {
                        println!("===");
                    }
                    print!("{}", report.render());
                }
            }
            Ok(if verify::census_all_green(&reports) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
