use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use superk3::abelian::Atlas;
use superk3::gkm::{self, closed_form_incidence, derive_incidence};
use superk3::models::graph_iso;
use superk3::nslattice::gram_and_discriminant;
use superk3::quatorder::solve_generators;
use superk3::render::{IntersectionDocument, LatticeDocument, TorsionDocument};
use superk3::report::{VerifyReport, SCHEMA_VERSION};
use superk3::suites::{named_graph, run_suites, Suite};

#[derive(Parser)]
#[command(name = "superk3", version, about = "The (21)_5 configuration on the supersingular K3 surface in characteristic 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Markdown,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Intersection,
    F2,
    F4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Derived,
    Rules,
    Pg24,
    P2p2,
}

impl Source {
    fn name(self) -> &'static str {
        match self {
            Source::Derived => "derived",
            Source::Rules => "rules",
            Source::Pg24 => "pg24",
            Source::P2p2 => "p2p2",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites in dependency order.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Count documented disagreements with published data as failures.
        #[arg(long)]
        strict: bool,
        /// Run only these suites.
        #[arg(long, value_delimiter = ',', value_parser = parse_suite)]
        suite: Vec<Suite>,
    },
    /// Print the intersection or torsion incidence tables.
    Tables {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Emit a configuration graph.
    Config {
        #[arg(long, value_enum)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Hexagonal fibers, sections and the Shioda-Tate data.
    Fibration {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The 8x8 table and the Gram data of the 42 curves.
    Lattice {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search for an isomorphism between two configuration graphs.
    Iso {
        #[arg(long, value_enum)]
        a: Source,
        #[arg(long, value_enum)]
        b: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Quaternions realizing sigma, theta and F.
    Generators {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// List every solution.
        #[arg(long)]
        all: bool,
    },
}

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to a String")
    };
}

macro_rules! outp {
    ($out:expr, $($arg:tt)*) => {
        write!($out, $($arg)*).expect("writing to a String")
    };
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("documents serialize")
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: superk3::Error| e.to_string())
}

fn verify(out: &mut String, format: Format, strict: bool, suites: &[Suite]) -> superk3::Result<ExitCode> {
    let suites = if suites.is_empty() { &Suite::ALL[..] } else { suites };
    let report = VerifyReport::new(run_suites(suites), strict);
    match format {
        Format::Text => {
            for s in &report.suites {
                outp!(out, "{}", s.render_text());
            }
            outln!(out, "{}", if report.passes() { "all suites passed" } else { "verification failed" });
        }
        Format::Json => outln!(out, "{}", pretty(&report)),
    }
    Ok(match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(s) => {
            let suite: Suite = s.suite.parse()?;
            ExitCode::from(suite.exit_code() as u8)
        }
    })
}

fn run(out: &mut String, cli: Cli) -> superk3::Result<ExitCode> {
    match cli.command {
        Command::Verify { format, strict, suite } => return verify(out, format, strict, &suite),
        Command::Tables { which, format } => {
            let sol = solve_generators()?[0];
            let atlas = Atlas::new();
            let (md, js) = match which {
                Which::Intersection => {
                    let d = IntersectionDocument::new(&sol);
                    (d.to_markdown(), pretty(&d))
                }
                Which::F2 => {
                    let d = TorsionDocument::f2(&atlas);
                    (d.to_markdown(), pretty(&d))
                }
                Which::F4 => {
                    let d = TorsionDocument::f4(&atlas);
                    (d.to_markdown(), pretty(&d))
                }
            };
            match format {
                TableFormat::Markdown => outp!(out, "{md}"),
                TableFormat::Json => outln!(out, "{js}"),
            }
        }
        Command::Config { source, format } => {
            let config = match source {
                Source::Derived => Some(derive_incidence(&Atlas::new())?),
                Source::Rules => Some(closed_form_incidence()),
                _ => None,
            };
            let text = match (config, format) {
                (Some(g), GraphFormat::Json) => g.to_json(),
                (Some(g), GraphFormat::Dot) => g.to_dot(),
                (Some(g), GraphFormat::Csv) => g.to_csv(),
                (None, f) => {
                    let g = named_graph(source.name())?;
                    match f {
                        GraphFormat::Json => g.to_json(),
                        GraphFormat::Dot => g.to_dot(source.name()),
                        GraphFormat::Csv => g.to_csv(),
                    }
                }
            };
            outln!(out, "{}", text.trim_end());
        }
        Command::Fibration { format } => {
            let g = derive_incidence(&Atlas::new())?;
            let fib = gkm::fibration_analysis(&g);
            let st = gkm::shioda_tate_report(&fib, &gram_and_discriminant(&g.incidence));
            match format {
                Format::Text => {
                    for (i, h) in fib.hexagons.iter().enumerate() {
                        outln!(out, "fiber {i}: {} (square {})", h.cycle.join(" - "), h.square);
                    }
                    outln!(out, "sections: {}", fib.sections);
                    outln!(out, "every section meets each fiber once: {}", fib.every_section_meets_each_fiber_once);
                    outln!(out, "Euler number: {}", fib.euler_number);
                    outln!(out, "Picard number: {}", st.picard_number);
                    outln!(out, "discriminant: {} (Gram: {})", st.discriminant, st.gram_discriminant);
                    outln!(out, "Mordell-Weil order: {}", st.mordell_weil_order);
                    outln!(out, "Mordell-Weil structure: {} (stated, not verified)", st.mordell_weil_structure);
                }
                Format::Json => outln!(out, 
                    "{}",
                    pretty(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "fibration": fib,
                        "shioda_tate": st,
                    }))
                ),
            }
        }
        Command::Lattice { format } => {
            let doc = LatticeDocument::new(&solve_generators()?[0], &Atlas::new())?;
            match format {
                Format::Text => outp!(out, "{}", doc.to_text()),
                Format::Json => outln!(out, "{}", pretty(&doc)),
            }
        }
        Command::Iso { a, b, format } => {
            let (g1, g2) = (named_graph(a.name())?, named_graph(b.name())?);
            let iso = graph_iso(&g1, &g2);
            let pairs = iso.as_ref().map(|m| m.pairs(&g1, &g2)).unwrap_or_default();
            match format {
                Format::Text => match &iso {
                    Some(m) => {
                        outln!(out, "{} ~ {} (families swapped: {})", a.name(), b.name(), m.swapped);
                        for (x, y) in &pairs {
                            outln!(out, "{x} -> {y}");
                        }
                    }
                    None => outln!(out, "{} and {} are not isomorphic", a.name(), b.name()),
                },
                Format::Json => outln!(out, 
                    "{}",
                    pretty(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "a": a.name(),
                        "b": b.name(),
                        "isomorphic": iso.is_some(),
                        "swapped": iso.as_ref().map(|m| m.swapped),
                        "pairs": pairs,
                    }))
                ),
            }
            if iso.is_none() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Generators { format, all } => {
            let sols = solve_generators()?;
            let shown = if all { &sols[..] } else { &sols[..1] };
            match format {
                Format::Text => {
                    outln!(out, "solutions: {}", sols.len());
                    for s in shown {
                        outln!(out, "{s}");
                        outln!(out, "  V = {}, pi = {}", s.ver(), s.pi());
                    }
                }
                Format::Json => {
                    let list: Vec<_> = shown
                        .iter()
                        .map(|s| {
                            json!({
                                "sigma": s.sigma.to_string(),
                                "theta": s.theta.to_string(),
                                "frob": s.frob.to_string(),
                                "ver": s.ver().to_string(),
                                "pi": s.pi().to_string(),
                            })
                        })
                        .collect();
                    outln!(out, 
                        "{}",
                        pretty(&json!({
                            "schema_version": SCHEMA_VERSION,
                            "count": sols.len(),
                            "solutions": list,
                        }))
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(&mut out, cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    };
    // a closed pipe downstream is not an error of the computation
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    code
}
