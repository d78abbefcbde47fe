use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qtcat::algebra::MultiPoly;
use qtcat::homfly::{homfly_jones, level, TorusKnot};
use qtcat::paths::{DyckPath, Partition};
use qtcat::qt::{catalan_qt, q_limit_poly, schroder_qt};
use qtcat::superalg::{build_model, poincare_of, stable_homology, stable_poincare, Operator};
use qtcat::symfun::{bigraded_hilbert, l_space, SymRing};
use qtcat::verify::{self, Report, VerifyConfig, CUTOFF_ENV, DEFAULT_CUTOFF, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "qtcat", version, about = "q,t-Catalan combinatorics, torus knot HOMFLY data and superalgebra homology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// The q,t-Catalan polynomial C_n(q,t).
    Catalan {
        #[arg(long)]
        n: usize,
    },
    /// The q,t-Schröder polynomial S_{n,k}, or R_{n,k} with --little.
    Schroder {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        little: bool,
    },
    /// Q_{n,m}(a,t) summed over marked Dyck paths.
    Qlimit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Z(pi) for the Dyck path above the partition `mu` in the n x n square.
    Zmap {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
        /// Print in the complete homogeneous basis.
        #[arg(long)]
        h_basis: bool,
    },
    /// Bigraded Hilbert series of the space L_n.
    Hilbert {
        #[arg(long)]
        n: usize,
    },
    /// HOMFLY polynomial of a torus knot.
    Homfly {
        /// `n,m` with gcd(n,m) = 1.
        #[arg(long, value_parser = parse_pair)]
        torus: (usize, usize),
        /// Print the rescaled polynomial P_s.
        #[arg(long)]
        rescaled: bool,
        /// Only the coefficient of a^{2k} of P_s.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Homology of the superalgebra models.
    Homology(HomologyArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct HomologyArgs {
    /// Finite model for the torus knot `n,m`.
    #[arg(long, value_parser = parse_pair, conflicts_with = "stable", required_unless_present = "stable")]
    knot: Option<(usize, usize)>,
    /// The free algebra on n-1 even and odd generators.
    #[arg(long)]
    stable: Option<usize>,
    /// q-degree cutoff for the stable algebra.
    #[arg(long, env = CUTOFF_ENV, default_value_t = DEFAULT_CUTOFF)]
    cutoff: i32,
    /// d2, d0, d-1, a1, ...; without it the complex itself is described.
    #[arg(long, allow_hyphen_values = true)]
    differential: Option<Operator>,
    /// Poincaré series in (a,q,t)
    #[arg(long, group = "view")]
    poincare: bool,
    /// Specialization at t = -1
    #[arg(long, group = "view")]
    euler: bool,
    /// Basis rows with level, grading and generating word
    #[arg(long, group = "view")]
    table: bool,
    /// d2 homology regraded to (q,t).
    #[arg(long, group = "view")]
    khovanov: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    target: Option<VerifyTarget>,
    /// Run every check (the default).
    #[arg(long)]
    all: bool,
    /// Treat conjecture failures as failures.
    #[arg(long, global = true)]
    strict: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, env = CUTOFF_ENV, default_value_t = DEFAULT_CUTOFF)]
    cutoff: i32,
    /// Include wall times in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Only the conjecture checks.
    Conjectures,
    /// HOMFLY coefficient identities over a range.
    Homfly {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 12)]
        m_max: usize,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected n,m but got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn print_poly(p: &MultiPoly, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::Catalan { n } => print_poly(&catalan_qt(n), format),
        Command::Schroder { n, k, little } => {
            if k > n {
                bail!(qtcat::Error::InvalidInput(format!("need k <= n, got n={n} k={k}")));
            }
            print_poly(&schroder_qt(n, k, little), format)
        }
        Command::Qlimit { n, m } => print_poly(&q_limit_poly(n, m)?, format),
        Command::Zmap { mu, n, h_basis } => {
            let mu: Partition = mu.parse()?;
            let ring = SymRing::for_size(n);
            let z = ring.z_of_path(&DyckPath::from_partition(n, n, &mu)?);
            if h_basis {
                print_poly(&ring.to_h_basis(&z), format)
            } else {
                print_poly(z.poly(), format)
            }
        }
        Command::Hilbert { n } => {
            let ring = SymRing::for_size(n.max(1));
            print_poly(&bigraded_hilbert(&l_space(&ring, n)?), format)
        }
        Command::Homfly { torus, rescaled, level: lvl } => {
            let h = homfly_jones(TorusKnot::new(torus.0, torus.1)?)?;
            let p = match lvl {
                Some(j) => level(&h.p_s, j),
                None if rescaled => h.p_s,
                None => h.p,
            };
            print_poly(&p, format)
        }
        Command::Homology(args) => homology(args, format)?,
        Command::Verify(args) => return verify_cmd(args, format),
    }
    Ok(ExitCode::SUCCESS)
}

fn homology(args: HomologyArgs, format: Format) -> anyhow::Result<()> {
    if let Some(n) = args.stable {
        if args.table || args.euler || args.khovanov {
            bail!(qtcat::Error::InvalidInput("the stable algebra supports --poincare only".into()));
        }
        let p = match args.differential {
            Some(d) => poincare_of(&stable_homology(n, d, args.cutoff)?),
            None => stable_poincare(n, args.cutoff),
        };
        print_poly(&p, format);
        return Ok(());
    }
    let (n, m) = args.knot.context("--knot or --stable is required")?;
    let model = build_model(TorusKnot::new(n, m)?)?;
    if args.table {
        let rows: Vec<_> = model
            .rows()
            .iter()
            .map(|r| {
                let word = r.word.as_ref().map(|w| w.to_string());
                (r.level, r.element.to_string(), r.degree, word)
            })
            .collect();
        match format {
            Format::Text => {
                for (level, basis, (a, q, t), word) in rows {
                    println!("{level}  {basis}  {}  ({a},{q},{t})", word.as_deref().unwrap_or("-"));
                }
            }
            Format::Json => {
                let v: Vec<_> = rows
                    .into_iter()
                    .map(|(level, basis, (a, q, t), word)| json!({"level": level, "basis": basis, "grading": [a, q, t], "word": word}))
                    .collect();
                println!("{}", serde_json::Value::Array(v));
            }
        }
        return Ok(());
    }
    let p = if args.khovanov {
        model.khovanov_poincare()?
    } else if args.euler {
        model.euler_characteristic()
    } else {
        match args.differential {
            Some(d) => poincare_of(&model.homology(d)?),
            None => model.poincare(),
        }
    };
    print_poly(&p, format);
    Ok(())
}

fn verify_cmd(args: VerifyArgs, format: Format) -> anyhow::Result<ExitCode> {
    let cfg = VerifyConfig { seed: args.seed, cutoff: args.cutoff, ..VerifyConfig::default() };
    let report: Report = match args.target {
        Some(VerifyTarget::Conjectures) => verify::conjectures(),
        Some(VerifyTarget::Homfly { n_max, m_max }) => verify::homfly_report(n_max, m_max),
        None => verify::run_all(&cfg),
    };
    match format {
        Format::Text => print!("{}", report.to_text(args.timings)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json(args.timings))?),
    }
    Ok(if report.success(args.strict) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<qtcat::Error>() {
                Some(qtcat::Error::InvalidInput(_) | qtcat::Error::Parse(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
