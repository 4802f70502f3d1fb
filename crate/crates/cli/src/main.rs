use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shi_core::catalan::{graded_distribution, q_catalan};
use shi_core::export;
use shi_core::regions::{classify_point, point_sign_vector, region_report};
use shi_core::{
    Antichain, AntichainPoset, DynkinType, Error, HeavisideRing, PresentedRing, RationalPoint,
    RootSystem,
};

#[derive(Parser)]
#[command(name = "shi", version, about = "Dominant Shi regions, root-poset antichains and their Heaviside rings")]
struct Cli {
    /// Output format
    #[arg(short, long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write to this file instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots and the Hasse diagram of the root order
    Roots { dynkin: DynkinType },
    /// All antichains and the Hasse diagram of ideal inclusion
    Antichains { dynkin: DynkinType },
    /// Generalized Catalan numbers
    Catalan {
        #[arg(required = true)]
        dynkin: Vec<DynkinType>,
    },
    /// Antichains counted by ideal size
    Qcatalan { dynkin: DynkinType },
    /// Zeta matrix of the antichain order
    Zeta { dynkin: DynkinType },
    /// Möbius matrix of the antichain order
    Moebius { dynkin: DynkinType },
    /// Ranks of the filtration by products of Heaviside generators
    Filtration { dynkin: DynkinType },
    /// Multiplication table of the antichain monomials
    Multable { dynkin: DynkinType },
    /// Region containing an exact rational point
    Classify {
        dynkin: DynkinType,
        /// Coordinates `a/b,c/d,…` in the fundamental coweight basis
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Interior point of the region of an antichain
    Witness {
        dynkin: DynkinType,
        /// Comma-separated root indices; empty for the empty antichain
        #[arg(long, conflicts_with = "all")]
        antichain: Option<String>,
        /// Report every region
        #[arg(long)]
        all: bool,
        /// Allow ranks above the default limit
        #[arg(long)]
        allow_large: bool,
    },
    /// Run the invariant suite for one type
    Verify { dynkin: DynkinType },
}

enum Failure {
    Usage(String),
    Domain(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidType(_) | Error::Parse(_) | Error::Dimension { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::Invariant(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn unsupported(format: Format, command: &str) -> Failure {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::Usage(format!("`{command}` does not support --format {name}"))
}

fn build(dynkin: DynkinType) -> Result<Arc<AntichainPoset>, Failure> {
    let rs = Arc::new(RootSystem::new(dynkin)?);
    Ok(Arc::new(AntichainPoset::enumerate(rs)))
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json");
    s.push('\n');
    s
}

fn roots(dynkin: DynkinType, format: Format) -> Outcome {
    let rs = RootSystem::new(dynkin)?;
    Ok(match format {
        Format::Json => pretty(&export::roots_json(&rs)),
        Format::Dot => export::roots_dot(&rs),
        Format::Csv => {
            let mut out = String::from("index,coeffs,height\n");
            for (i, r) in rs.positive_roots().iter().enumerate() {
                let c: Vec<String> = r.coeffs.iter().map(ToString::to_string).collect();
                writeln!(out, "{i},{},{}", c.join(" "), r.height()).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{dynkin}: {} positive roots, Coxeter number {}, exponents {:?}\n",
                rs.num_positive_roots(),
                rs.coxeter_number(),
                rs.exponents()
            );
            for (i, r) in rs.positive_roots().iter().enumerate() {
                writeln!(out, "{i:>4}  {:<24} height {}", r.label(), r.height()).unwrap();
            }
            out
        }
    })
}

fn antichains(dynkin: DynkinType, format: Format) -> Outcome {
    let ap = build(dynkin)?;
    let rs = ap.root_system();
    Ok(match format {
        Format::Json => pretty(&export::antichains_json(&ap)),
        Format::Dot => export::antichains_dot(&ap),
        Format::Csv => {
            let mut out = String::from("index,antichain,ideal_size\n");
            for (i, p) in ap.antichains().iter().enumerate() {
                let r: Vec<String> = p.roots().iter().map(ToString::to_string).collect();
                writeln!(out, "{i},{},{}", r.join(" "), ap.ideal_size(i)).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("{dynkin}: {} antichains\n", ap.len());
            for (i, p) in ap.antichains().iter().enumerate() {
                writeln!(out, "{i:>6}  |I|={:<4} {}", ap.ideal_size(i), p.label(rs)).unwrap();
            }
            out
        }
    })
}

fn catalan(types: &[DynkinType], format: Format) -> Outcome {
    let rows = types
        .iter()
        .map(|&t| export::catalan_row(&RootSystem::new(t)?))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match format {
        Format::Json => pretty(&serde_json::to_value(&rows).expect("json")),
        Format::Csv => export::catalan_csv(&rows),
        Format::Text if rows.len() == 1 => format!("{}\n", rows[0].catalan),
        Format::Text => rows
            .iter()
            .map(|r| format!("{} {}\n", r.dynkin, r.catalan))
            .collect(),
        Format::Dot => return Err(unsupported(format, "catalan")),
    })
}

fn qcatalan(dynkin: DynkinType, format: Format) -> Outcome {
    let ap = build(dynkin)?;
    let q = q_catalan(&ap);
    Ok(match format {
        Format::Json => pretty(&json!({
            "type": dynkin.to_string(),
            "coefficients": q.coeffs(),
            "graded_distribution": graded_distribution(&ap),
        })),
        Format::Csv => export::qpoly_csv(&q),
        Format::Text => format!("{q}\n"),
        Format::Dot => return Err(unsupported(format, "qcatalan")),
    })
}

fn matrix_output(name: &str, m: &[Vec<i64>], format: Format) -> Outcome {
    Ok(match format {
        Format::Csv => export::matrix_csv(m),
        Format::Text => export::matrix_text(m),
        Format::Json => pretty(&json!(m)),
        Format::Dot => return Err(unsupported(format, name)),
    })
}

fn filtration(dynkin: DynkinType, format: Format) -> Outcome {
    let ap = build(dynkin)?;
    let report = HeavisideRing::new(ap.clone()).filtration();
    Ok(match format {
        Format::Csv => export::filtration_csv(&report),
        Format::Json => pretty(&json!({
            "type": dynkin.to_string(),
            "ranks": report.ranks,
            "lattice_certified": report.lattice_certified,
            "catalan": ap.len(),
        })),
        Format::Text => {
            let mut out = String::new();
            for (k, r) in report.ranks.iter().enumerate() {
                writeln!(out, "F_{k}: {r}").unwrap();
            }
            writeln!(out, "F_n = H as lattices: {}", report.lattice_certified).unwrap();
            out
        }
        Format::Dot => return Err(unsupported(format, "filtration")),
    })
}

fn multable(dynkin: DynkinType, format: Format) -> Outcome {
    let ap = build(dynkin)?;
    let u = PresentedRing::new(ap);
    let table: Vec<Vec<i64>> = u
        .multiplication_table()
        .iter()
        .map(|row| row.iter().map(|&x| x as i64).collect())
        .collect();
    matrix_output("multable", &table, format)
}

fn classify(dynkin: DynkinType, point: &str, format: Format) -> Outcome {
    let rs = RootSystem::new(dynkin)?;
    let x: RationalPoint = point.parse()?;
    let p = classify_point(&rs, &x)?;
    let ideal = shi_core::antichain::ideal_of(&rs, &p)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "point": x,
            "antichain": p,
            "ideal": ideal,
            "sign_vector": point_sign_vector(&rs, &x)?,
        })),
        Format::Text => format!("{}  roots {:?}\n", p.label(&rs), p.roots()),
        _ => return Err(unsupported(format, "classify")),
    })
}

fn parse_antichain(rs: &RootSystem, s: &str) -> Result<Antichain, Failure> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    let roots = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("`{t}` is not a root index")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Antichain::new(rs, roots)?)
}

fn witness(
    dynkin: DynkinType,
    antichain: Option<&str>,
    all: bool,
    allow_large: bool,
    format: Format,
) -> Outcome {
    let ap = build(dynkin)?;
    let rs = ap.root_system();
    let targets: Vec<Antichain> = match (antichain, all) {
        (_, true) => ap.antichains().to_vec(),
        (Some(s), false) => vec![parse_antichain(rs, s)?],
        (None, false) => return Err(Failure::Usage("give --antichain or --all".into())),
    };
    let reports = targets
        .iter()
        .map(|p| region_report(rs, p, allow_large))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match format {
        Format::Json if all => pretty(&serde_json::to_value(&reports).expect("json")),
        Format::Json => pretty(&serde_json::to_value(&reports[0]).expect("json")),
        Format::Text => {
            let mut out = String::new();
            for (p, r) in targets.iter().zip(&reports) {
                writeln!(out, "{}  point {}", p.label(rs), r.point).unwrap();
            }
            out
        }
        _ => return Err(unsupported(format, "witness")),
    })
}

fn verify(dynkin: DynkinType, format: Format) -> Outcome {
    let report = shi_core::verify::run(dynkin)?;
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report).expect("json")),
        Format::Text => report.to_text(),
        _ => return Err(unsupported(format, "verify")),
    };
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Invariant(format!("{dynkin}: invariant suite failed")))
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Roots { dynkin } => roots(*dynkin, f),
        Command::Antichains { dynkin } => antichains(*dynkin, f),
        Command::Catalan { dynkin } => catalan(dynkin, f),
        Command::Qcatalan { dynkin } => qcatalan(*dynkin, f),
        Command::Zeta { dynkin } => matrix_output("zeta", &build(*dynkin)?.zeta_matrix(), f),
        Command::Moebius { dynkin } => matrix_output("moebius", &build(*dynkin)?.mobius_matrix(), f),
        Command::Filtration { dynkin } => filtration(*dynkin, f),
        Command::Multable { dynkin } => multable(*dynkin, f),
        Command::Classify { dynkin, point } => classify(*dynkin, point, f),
        Command::Witness {
            dynkin,
            antichain,
            all,
            allow_large,
        } => witness(*dynkin, antichain.as_deref(), *all, *allow_large, f),
        Command::Verify { dynkin } => verify(*dynkin, f),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = dispatch(&cli).and_then(|text| match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
