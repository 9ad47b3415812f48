use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ncverify::algebras::{builtin, pbw_count, Presentation};
use ncverify::front::presfile;
use ncverify::homs::{builtin_hom, verify_hom, verify_mutually_inverse, verify_racah_hom};
use ncverify::repmat::{
    induced_rep, sl2_irrep, sl2_z2_rep, verify_racah_rep, verify_relations, verify_rep,
};
use ncverify::report::{CheckEntry, Document, SuiteReport};
use ncverify::rewrite::{check_confluence, set_default_fuel, ConfluenceReport, RewriteSystem};
use ncverify::{suites, Error};

#[derive(Parser)]
#[command(
    name = "ncverify",
    version,
    about = "Exact verification of algebra presentations over Q(i)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(long, required_unless_present = "file")]
        algebra: Option<String>,
        /// Presentation file to use instead of a built-in.
        #[arg(long, conflicts_with = "algebra")]
        file: Option<PathBuf>,
        #[arg(long)]
        expr: String,
    },
    /// Resolve every critical pair of a rewrite system.
    Confluence {
        #[arg(long, required_unless_present = "file")]
        algebra: Option<String>,
        #[arg(long, conflicts_with = "algebra")]
        file: Option<PathBuf>,
    },
    /// Check that generator images respect every defining relation.
    VerifyHom {
        #[arg(long, required_unless_present = "file")]
        name: Option<String>,
        /// Verify every homomorphism block of a presentation file.
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
    },
    /// Check a Racah homomorphism: the commutator chain and alpha, beta, gamma -> 0.
    VerifyRacah {
        #[arg(long)]
        name: String,
    },
    /// Check that two homomorphisms are mutually inverse.
    VerifyInverse {
        /// Two built-in homomorphism names, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        pair: Vec<String>,
    },
    /// Check that the Racah triangle commutes.
    VerifyDiagram,
    /// Check the defining relations on a finite-dimensional module.
    RepCheck {
        #[arg(long)]
        algebra: String,
        /// Module dimension (at least 1).
        #[arg(long)]
        dim: usize,
    },
    /// Count normal words by degree.
    PbwCount {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        max_degree: usize,
    },
    /// Run every verification suite.
    VerifyAll,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("NCVERIFY_FUEL") {
        match v.trim().parse::<u64>() {
            Ok(f) if f > 0 => set_default_fuel(f),
            _ => {
                eprintln!("error: NCVERIFY_FUEL must be a positive integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command, cli.format) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn presentation(algebra: Option<&str>, file: Option<&PathBuf>) -> Result<Presentation, Failure> {
    match (algebra, file) {
        (_, Some(path)) => Ok((*presfile::load(path)?.presentation).clone()),
        (Some(name), None) => Ok(builtin(name)?.clone()),
        (None, None) => Err(Failure::Usage("no algebra given".into())),
    }
}

/// Built-in systems are shared; a fresh copy picks up the fuel override.
fn system_of(p: &Presentation) -> Result<RewriteSystem, Failure> {
    let sys = p.system()?;
    Ok(RewriteSystem::new(
        sys.alphabet().clone(),
        sys.rules().to_vec(),
    )?)
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn out(args: std::fmt::Arguments<'_>) {
    let _ = std::io::stdout().lock().write_fmt(args);
}

fn emit(doc: &Document, format: Format) -> bool {
    match format {
        Format::Text => out(format_args!("{doc}")),
        Format::Structured => out(format_args!("{}\n", doc.to_json())),
    }
    doc.passed
}

fn confluence_suite(name: &str, report: &ConfluenceReport) -> SuiteReport {
    let mut s = SuiteReport::new(format!("confluence {name}"), report.summary());
    let a = &report.alphabet;
    for e in &report.entries {
        let mut c = CheckEntry::new(a.display_word(&e.word).to_string(), e.resolved)
            .with_residual(e.residual().display(a).to_string())
            .with_detail(format!("{} | {}", e.left.display(a), e.right.display(a)));
        if let Some(err) = &e.error {
            c = c.with_detail(err.clone());
        }
        s.push(c);
    }
    s
}

fn run(command: Command, format: Format) -> Result<bool, Failure> {
    match command {
        Command::Normalize {
            algebra,
            file,
            expr,
        } => {
            let p = presentation(algebra.as_deref(), file.as_ref())?;
            let sys = system_of(&p)?;
            let nf = sys.normalize_str(&expr)?;
            let text = nf.display(sys.alphabet()).to_string();
            match format {
                Format::Text => out(format_args!("{text}\n")),
                Format::Structured => out(format_args!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "command": "normalize",
                        "passed": true,
                        "algebra": p.name,
                        "input": expr,
                        "normal_form": text,
                    }))
                    .expect("json")
                )),
            }
            Ok(true)
        }
        Command::Confluence { algebra, file } => {
            let p = presentation(algebra.as_deref(), file.as_ref())?;
            let report = check_confluence(&system_of(&p)?);
            match format {
                Format::Text => out(format_args!("{report}")),
                Format::Structured => {
                    let doc = Document::new("confluence", vec![confluence_suite(&p.name, &report)]);
                    out(format_args!("{}\n", doc.to_json()));
                }
            }
            Ok(report.is_confluent())
        }
        Command::VerifyHom { name, file } => {
            let suites = match (name, file) {
                (_, Some(path)) => {
                    let f = presfile::load(&path)?;
                    if f.homomorphisms.is_empty() {
                        return Err(Failure::Usage(format!(
                            "{} has no homomorphism blocks",
                            path.display()
                        )));
                    }
                    f.homomorphisms
                        .iter()
                        .map(|h| Ok(verify_hom(h)?.to_suite(&h.name, "relations map to zero")))
                        .collect::<Result<Vec<_>, Failure>>()?
                }
                (Some(name), None) => {
                    let h = builtin_hom(&name)?;
                    vec![verify_hom(h)?.to_suite(&name, "relations map to zero")]
                }
                (None, None) => return Err(Failure::Usage("no homomorphism given".into())),
            };
            Ok(emit(&Document::new("verify-hom", suites), format))
        }
        Command::VerifyRacah { name } => {
            let h = builtin_hom(&name)?;
            let suite = verify_racah_hom(h)?
                .to_suite(&name, "Racah relations and alpha, beta, gamma map to zero");
            Ok(emit(&Document::new("verify-racah", vec![suite]), format))
        }
        Command::VerifyInverse { pair } => {
            let [first, second] = pair.as_slice() else {
                return Err(Failure::Usage("--pair takes exactly two names".into()));
            };
            let (a, b) = verify_mutually_inverse(builtin_hom(first)?, builtin_hom(second)?)?;
            let mut suite =
                SuiteReport::new(format!("{first},{second}"), "round trips are the identity");
            suite.extend(a.entries());
            suite.extend(b.entries());
            Ok(emit(&Document::new("verify-inverse", vec![suite]), format))
        }
        Command::VerifyDiagram => Ok(emit(
            &Document::new("verify-diagram", vec![suites::diagram()]),
            format,
        )),
        Command::RepCheck { algebra, dim } => {
            if dim == 0 {
                return Err(Failure::Usage("--dim must be at least 1".into()));
            }
            let n = dim - 1;
            let reports = match algebra.as_str() {
                "sl2" => vec![verify_rep(builtin("sl2")?.system()?, &sl2_irrep(n))?],
                "sl2_z2" => vec![verify_rep(builtin("sl2_z2")?.system()?, &sl2_z2_rep(n))?],
                "so3" | "acsa" | "acsa_z2" => {
                    vec![verify_rep(
                        builtin(&algebra)?.system()?,
                        &induced_rep(&algebra, n)?,
                    )?]
                }
                "racah" => {
                    let rep = induced_rep("racah_images", n)?;
                    vec![
                        verify_relations(&builtin("racah")?.relations, &rep)?,
                        verify_racah_rep(&rep)?,
                    ]
                }
                other => return Err(Error::UnknownAlgebra(other.to_string()).into()),
            };
            let mut suite = SuiteReport::new(
                format!("rep-check {algebra}"),
                format!("relations vanish in dimension {dim}"),
            );
            for r in &reports {
                suite.extend(r.entries());
            }
            Ok(emit(&Document::new("rep-check", vec![suite]), format))
        }
        Command::PbwCount {
            algebra,
            max_degree,
        } => {
            let p = builtin(&algebra)?;
            let sys = system_of(p)?;
            let tri = |d: usize| ((d + 1) * (d + 2) / 2) as u64;
            let mut suite =
                SuiteReport::new(format!("pbw-count {algebra}"), "normal words per degree");
            for d in 0..=max_degree {
                let count = pbw_count(&sys, d);
                let expected = if p.group.is_some() {
                    tri(d) + if d > 0 { tri(d - 1) } else { 0 }
                } else {
                    tri(d)
                };
                suite.push(
                    CheckEntry::new(format!("degree {d}: {count}"), count == expected)
                        .with_detail(format!("expected {expected}")),
                );
            }
            Ok(emit(&Document::new("pbw-count", vec![suite]), format))
        }
        Command::VerifyAll => Ok(emit(
            &Document::new("verify-all", suites::verify_all()),
            format,
        )),
    }
}
