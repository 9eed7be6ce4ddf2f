use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tropical::floor::io::{diagram_to_dot, marked_from_json, records_from_json, records_to_json, DiagramRecord};
use tropical::floor::{count, count_markings, enumerate_diagrams_with, enumerate_marked_with, Limits, Variant};
use tropical::plane::io::{curve_from_json, curve_to_json, curve_to_svg};
use tropical::plane::{check_balancing, corner_locus};
use tropical::reconstruct::{config_from_json, reconstruct, stretched_config};
use tropical::semiring::{free_energy, EnergySpectrum};
use tropical::{Configuration, Error, PlaneCurve, TropicalPolynomial2};

#[derive(Parser)]
#[command(name = "tropical", version, about = "Tropical plane curves, floor diagrams and their counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(clap::Args)]
struct Degree {
    #[arg(short, long)]
    degree: u64,
    #[arg(short, long, default_value_t = 0)]
    genus: u64,
    /// Raise the degree limit of the enumeration
    #[arg(long)]
    max_degree: Option<u64>,
}

impl Degree {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(d) = self.max_degree {
            limits.max_degree = d;
        }
        limits
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count curves through generic points via floor diagrams
    Count {
        #[command(flatten)]
        degree: Degree,
        /// Welschinger count instead of the complex count
        #[arg(long)]
        real: bool,
    },
    /// List floor diagrams, ordered by canonical form
    Diagrams {
        #[command(flatten)]
        degree: Degree,
        /// List every marked diagram instead
        #[arg(long)]
        marked: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corner locus of a polynomial given as `i j coefficient` lines
    Curve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curve through a stretched configuration from a marked diagram
    Reconstruct {
        /// Diagram JSON with a marking, or a list of them
        diagram: PathBuf,
        /// Entry to use when the file holds a list
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Configuration JSON; a seeded stretched configuration is used otherwise
        #[arg(long, conflicts_with = "seed")]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Free energy of comma-separated energy levels
    FreeEnergy {
        #[arg(allow_hyphen_values = true)]
        energies: String,
        #[arg(short, long)]
        temperature: f64,
    },
    /// Check a curve JSON for balancing
    Check { file: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) => 2,
            Error::InsufficientlyStretched(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn unsupported(format: Format, what: &str) -> Failure {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::usage(format!("format `{name}` is not available for {what}"))
}

/// `v` with 12 significant digits; zero prints as `0`.
fn significant(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Count { degree, real } => {
            let variant = if real { Variant::Real } else { Variant::Complex };
            let n = count(degree.degree, degree.genus, variant, degree.limits())?;
            println!("{n}");
        }
        Command::Diagrams { degree, marked, format, out } => {
            let limits = degree.limits();
            let text = if marked {
                let list = enumerate_marked_with(degree.degree, degree.genus, limits)?;
                match format {
                    Format::Json => records_to_json(&list.iter().map(DiagramRecord::of_marked).collect::<Vec<_>>()),
                    Format::Dot => list.iter().map(|m| diagram_to_dot(m.diagram(), Some(m.order()))).collect(),
                    Format::Text => list
                        .iter()
                        .map(|m| {
                            let rec = DiagramRecord::of_marked(m);
                            format!("{} | {}\n", summary(&rec), rec.marking.unwrap_or_default().join(" "))
                        })
                        .collect(),
                    Format::Svg => return Err(unsupported(format, "diagrams")),
                }
            } else {
                let list = enumerate_diagrams_with(degree.degree, degree.genus, limits)?;
                match format {
                    Format::Json => records_to_json(&list.iter().map(DiagramRecord::of).collect::<Vec<_>>()),
                    Format::Dot => list.iter().map(|d| diagram_to_dot(d, None)).collect(),
                    Format::Text => {
                        let mut text = String::new();
                        for d in &list {
                            let markings = count_markings(d)?;
                            writeln!(text, "{} | markings {markings}", summary(&DiagramRecord::of(d))).unwrap();
                        }
                        text
                    }
                    Format::Svg => return Err(unsupported(format, "diagrams")),
                }
            };
            emit(&text, out.as_deref())?;
        }
        Command::Curve { file, format, out } => {
            let f = TropicalPolynomial2::parse(&read(&file)?)?;
            let c = corner_locus(&f);
            if c.is_empty() {
                eprintln!("warning: the polynomial has a single monomial, its corner locus is empty");
            }
            let degree = f.degree();
            let text = match format {
                Format::Json => curve_to_json(&c),
                Format::Svg => curve_to_svg(&c, &[]),
                Format::Text => {
                    let mut text = format!("vertices {}\nedges {}\n", c.vertices.len(), c.edges.len());
                    if let Some(d) = degree {
                        writeln!(text, "degree {d}").unwrap();
                    }
                    text
                }
                Format::Dot => return Err(unsupported(format, "curves")),
            };
            if let (Some(d), false) = (degree, format == Format::Text) {
                eprintln!("degree {d}");
            }
            emit(&text, out.as_deref())?;
        }
        Command::Reconstruct { diagram, index, config, seed, format, out } => {
            let text = read(&diagram)?;
            let md = if text.trim_start().starts_with('[') {
                let records = records_from_json(&text)?;
                let rec = records
                    .get(index)
                    .ok_or_else(|| Failure::usage(format!("the list has {} entries", records.len())))?;
                rec.to_marked()?
            } else {
                marked_from_json(&text)?
            };
            let cfg: Configuration = match config {
                Some(path) => config_from_json(&read(&path)?)?,
                None => stretched_config(md.order().len(), seed.unwrap_or(0)),
            };
            let c = reconstruct(&md, &cfg)?;
            let text = match format {
                Format::Svg => curve_to_svg(&c, cfg.points()),
                Format::Json => curve_to_json(&c),
                _ => return Err(unsupported(format, "reconstruction")),
            };
            emit(&text, out.as_deref())?;
        }
        Command::FreeEnergy { energies, temperature } => {
            let levels = energies
                .split(',')
                .map(|s| s.trim().parse::<f64>().map_err(|_| Failure::usage(format!("bad energy `{s}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let spectrum = EnergySpectrum::new(levels, temperature)?;
            println!("{}", significant(free_energy(&spectrum)));
        }
        Command::Check { file } => {
            let c: PlaneCurve = curve_from_json(&read(&file)?)?;
            let violations = check_balancing(&c);
            if violations.is_empty() {
                println!("balanced");
            } else {
                for v in &violations {
                    println!("vertex {} unbalanced by ({}, {})", v.vertex, v.sum.0, v.sum.1);
                }
                return Err(Failure { code: 3, message: format!("{} unbalanced vertices", violations.len()) });
            }
        }
    }
    Ok(())
}

/// One-line description of a diagram: sources per floor and floor edges.
fn summary(rec: &DiagramRecord) -> String {
    let floors: Vec<u64> = rec.vertices.iter().filter(|v| !v.source).map(|v| v.id).collect();
    let sources: Vec<String> = floors
        .iter()
        .map(|&f| {
            let n = rec.edges.iter().filter(|e| e.to == f && rec.vertices[e.from as usize].source).count();
            format!("v{f}:{n}")
        })
        .collect();
    let edges: Vec<String> = rec
        .edges
        .iter()
        .filter(|e| !rec.vertices[e.from as usize].source)
        .map(|e| format!("v{}->v{}:{}", e.from, e.to, e.weight))
        .collect();
    format!("sources {} edges {}", sources.join(" "), edges.join(" "))
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
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::significant;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(significant(-0.31326168751822286), "-0.313261687518");
        assert_eq!(significant(0.0), "0");
        assert_eq!(significant(-0.0), "0");
        assert_eq!(significant(1234.5), "1234.50000000");
    }
}
