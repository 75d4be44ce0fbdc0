use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lagtrace::json::Document;
use lagtrace::suites::{self, SuiteConfig};
use lagtrace::{autfile, builtin, CliError, CliResult};
use lagtrace_core::derivations::{basis_d, basis_g, lagrangian_trace, morita_trace};
use lagtrace_core::freegroup::MappingClassRep;
use lagtrace_core::groupring::{laurent_det, GroupRingElem};
use lagtrace_core::johnson::{johnson_degree, tau, JohnsonDegree};
use lagtrace_core::magnusrep::{det_handlebody, handlebody_magnus, magnus_rep, render_laurent_matrix};
use lagtrace_core::tensorlie::Alphabet;

#[derive(Parser)]
#[command(name = "lagtrace", version, about = "Johnson homomorphisms, Magnus representations and Lagrangian traces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Automorphism file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    file: Option<PathBuf>,
    /// Builtin fixture such as `phi`, `twist_a1`, `swap_1_2`.
    #[arg(long)]
    builtin: Option<String>,
    /// Genus for `--builtin`; files carry their own.
    #[arg(long, default_value_t = 2)]
    genus: usize,
}

impl Input {
    fn load(&self) -> CliResult<MappingClassRep> {
        match (&self.file, &self.builtin) {
            (Some(path), _) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                autfile::parse(&text)
            }
            (None, Some(name)) => builtin::lookup(name, self.genus),
            (None, None) => Err(CliError::Usage("give --file or --builtin".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceKind {
    Morita,
    Lagrangian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "G", alias = "g")]
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Fox derivative of every generator image with respect to one generator.
    Fox {
        #[arg(long)]
        gen: String,
        #[command(flatten)]
        input: Input,
    },
    /// Magnus matrix over Z[H], or over Z[H'] with --handlebody.
    Magnus {
        #[arg(long)]
        handlebody: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Determinant of the handlebody Magnus matrix (surface one with --surface).
    Det {
        #[arg(long)]
        surface: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Position in the Johnson filtration, searched up to --max.
    Degree {
        #[arg(long, default_value_t = 4)]
        max: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Johnson homomorphism tau_k.
    Tau {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Morita or Lagrangian trace of tau_k.
    Trace {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        kind: TraceKind,
        #[command(flatten)]
        input: Input,
    },
    /// Integer basis of D_k(H) or of its handlebody kernel G_k.
    Basis {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite; exits 0 only if every case holds.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES.iter().copied()))]
        suite: String,
        #[arg(long, default_value_t = 2)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Print a mapping class in the automorphism file format.
    Export {
        #[command(flatten)]
        input: Input,
    },
}

struct Output {
    text: String,
    doc: Option<Document>,
    failed: Option<String>,
}

impl Output {
    fn doc(text: String, doc: Document) -> Self {
        Output { text, doc: Some(doc), failed: None }
    }
}

fn run(cmd: Command) -> CliResult<Output> {
    Ok(match cmd {
        Command::Fox { gen, input } => {
            let m = input.load()?;
            let g = m.genus();
            let a = Alphabet::Surface(g);
            let pos = a
                .parse_letter(&gen)
                .ok_or_else(|| CliError::Usage(format!("`{gen}` is not a generator in genus {g}")))?;
            let derivatives = m
                .forward()
                .images()
                .iter()
                .map(|w| GroupRingElem::from_word(w).fox_derivative(pos))
                .collect::<Result<Vec<_>, _>>()?;
            let text = derivatives
                .iter()
                .enumerate()
                .map(|(j, x)| format!("d m({}) / d {gen} = {x}\n", a.letter_name(j)))
                .collect();
            Output::doc(text, Document::Fox { genus: g, gen: pos, derivatives })
        }
        Command::Magnus { handlebody, input } => {
            let m = input.load()?;
            let r = if handlebody { handlebody_magnus(&m)? } else { magnus_rep(&m) };
            Output::doc(format!("{}\n", render_laurent_matrix(&r)), Document::LaurentMatrix(r))
        }
        Command::Det { surface, input } => {
            let m = input.load()?;
            let det = if surface { laurent_det(&magnus_rep(&m)) } else { det_handlebody(&m)? };
            let doc = Document::Det(det.clone());
            let additive = doc.to_json()["additive"].as_str().map(str::to_string);
            let mut text = format!("{det}\n");
            if let Some(a) = additive {
                text.push_str(&format!("additive: {a}\n"));
            }
            Output::doc(text, doc)
        }
        Command::Degree { max, input } => {
            let degree = johnson_degree(&input.load()?, max)?;
            let text = match degree {
                JohnsonDegree::Degree(k) => format!("degree {k}\n"),
                JohnsonDegree::Exceeds(n) => format!("exceeds {n}\n"),
            };
            Output::doc(text, Document::Degree { degree })
        }
        Command::Tau { k, input } => {
            let d = tau(&input.load()?, k)?;
            Output::doc(d.render(), Document::Derivation(d))
        }
        Command::Trace { k, kind, input } => {
            let d = tau(&input.load()?, k)?;
            let p = match kind {
                TraceKind::Morita => morita_trace(&d)?,
                TraceKind::Lagrangian => lagrangian_trace(&d)?,
            };
            Output::doc(format!("{p}\n"), Document::Sym(p))
        }
        Command::Basis { space, genus, k } => {
            let (name, elements) = match space {
                Space::D => ("D", basis_d(genus, k)?),
                Space::G => ("G", basis_g(genus, k)?),
            };
            let mut text = format!("{name}_{k} in genus {genus}: rank {}\n", elements.len());
            for (i, d) in elements.iter().enumerate() {
                text.push_str(&format!("[{i}]\n{d}"));
            }
            Output::doc(text, Document::Basis { space: name.into(), genus, k, elements })
        }
        Command::Verify { suite, genus, seed, count } => {
            let report = suites::run(&suite, SuiteConfig { genus, seed, count })?;
            let failed = (!report.passed())
                .then(|| format!("{} of {} cases in `{suite}` failed", report.failures(), report.cases.len()));
            Output { text: report.render(), doc: Some(Document::Report(report)), failed }
        }
        Command::Export { input } => Output { text: autfile::render(&input.load()?), doc: None, failed: None },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = match (cli.format, &out.doc) {
                (Format::Json, Some(doc)) => format!("{}\n", doc.to_pretty()),
                _ => out.text,
            };
            // A closed pipe (`| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            match out.failed {
                Some(msg) => {
                    let e = CliError::VerifyFailed(msg);
                    eprintln!("lagtrace: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("lagtrace: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
