//! Command line surface. `run` returns the exit code and both output
//! streams so commands can be driven from tests.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use kcat::{CellType, Field, Space};

use crate::derive::{derive, DeriveOpts};
use crate::error::{CliError, Result};
use crate::format::{emit, parse, Document, Item};
use crate::run::{run_all, run_suite};

#[derive(Parser, Debug)]
#[command(name = "kcat", version, about = "Exact verification of bimonad-like structures in Vect")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Scalar field: `q` or `fp:<prime>`. Zoo instances default to `q`,
    /// files to their declared field.
    #[arg(long)]
    pub field: Option<String>,
    /// Comma separated objects for family checks, e.g. `F,F*F` or `I,F`.
    #[arg(long)]
    pub objects: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a suite on every structure of the inputs.
    Check {
        /// Files or `zoo:<name>`.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Suite id, or `auto` for the structure's own suite.
        #[arg(long, default_value = "auto")]
        suite: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Leave elapsed times out of the report.
        #[arg(long)]
        no_timings: bool,
    },
    /// Run every applicable suite on every structure of the inputs.
    Report {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
        #[arg(long)]
        no_timings: bool,
    },
    /// Build a structure from the inputs and write it as a structure file.
    Derive {
        /// crossed-product, alpha, mirror, tensor-yd or act.
        construction: String,
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, conflicts_with = "coquasi")]
        quasi: bool,
        #[arg(long)]
        coquasi: bool,
        /// Check the inputs' own suites first.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        verify_pre: bool,
        #[command(flatten)]
        common: Common,
        /// Output path; standard output when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Let a Yetter-Drinfel'd module act on a relative module.
    Act {
        yd: String,
        module: String,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        verify_pre: bool,
        #[command(flatten)]
        common: Common,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// The registry of example instances.
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum ZooCommand {
    List,
    Emit {
        name: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn field_arg(f: &Option<String>) -> Result<Option<Field>> {
    f.as_deref()
        .map(|s| s.parse::<Field>().map_err(CliError::from))
        .transpose()
}

/// A file path or `zoo:<name>`.
pub fn load(input: &str, field: Option<Field>) -> Result<Document> {
    if let Some(name) = input.strip_prefix("zoo:") {
        let f = field.unwrap_or(Field::Q);
        let s = kcat::zoo::get(name, f)?;
        return Ok(Document::single(name, Item::Structure(s), f));
    }
    let doc = parse(Path::new(input)).map_err(|e| match e {
        CliError::Parse { line, col, msg } => CliError::Parse {
            line,
            col,
            msg: format!("{input}: {msg}"),
        },
        CliError::ShapeMismatch { line, col, msg } => CliError::ShapeMismatch {
            line,
            col,
            msg: format!("{input}: {msg}"),
        },
        CliError::UnknownRole { line, col, msg } => CliError::UnknownRole {
            line,
            col,
            msg: format!("{input}: {msg}"),
        },
        e => e,
    })?;
    match field {
        Some(f) => doc.to_field(f),
        None => Ok(doc),
    }
}

fn load_all(inputs: &[String], field: Option<Field>) -> Result<Document> {
    let mut it = inputs.iter();
    let first = it.next().ok_or_else(|| CliError::Usage("no inputs".into()))?;
    let mut doc = load(first, field)?;
    for i in it {
        let d = load(i, field.or(Some(doc.field)))?;
        doc.merge(d)?;
    }
    Ok(doc)
}

/// `F,F*F,I` against the spaces used by the document.
fn objects_arg(doc: &Document, objects: &Option<String>) -> Result<Option<Vec<CellType>>> {
    let Some(list) = objects else { return Ok(None) };
    let mut spaces: Vec<Space> = vec![];
    for e in &doc.entries {
        if let Item::Family(f) = &e.item {
            for key in f.cells.keys() {
                spaces.extend(key.iter().flat_map(|t| t.legs.iter().cloned()));
            }
        }
    }
    list.split(',')
        .map(|w| {
            let w = w.trim();
            if w == kcat::lincat::UNIT {
                return Ok(CellType::unit());
            }
            w.split('*')
                .map(|p| {
                    spaces
                        .iter()
                        .find(|s| s.name == p)
                        .cloned()
                        .ok_or_else(|| CliError::Usage(format!("unknown object leg `{p}`")))
                })
                .collect::<Result<Vec<_>>>()
                .map(CellType::new)
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn write_doc(doc: &Document, out: &Option<PathBuf>, o: &mut Outcome) -> Result<()> {
    let text = emit(doc)?;
    match out {
        None => o.stdout.push_str(&text),
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            msg: e.to_string(),
        })?,
    }
    Ok(())
}

fn execute(cli: Cli, o: &mut Outcome) -> Result<i32> {
    match cli.command {
        Command::Check {
            inputs,
            suite,
            common,
            format,
            no_timings,
        } => {
            let doc = load_all(&inputs, field_arg(&common.field)?)?;
            let objs = objects_arg(&doc, &common.objects)?;
            let mut r = run_suite(&doc, &suite, objs.as_deref())?;
            if no_timings {
                r = r.without_timings();
            }
            o.stdout.push_str(&render(&r, format));
            Ok(r.exit_code())
        }
        Command::Report {
            inputs,
            common,
            format,
            no_timings,
        } => {
            let doc = load_all(&inputs, field_arg(&common.field)?)?;
            let objs = objects_arg(&doc, &common.objects)?;
            let mut r = run_all(&doc, objs.as_deref())?;
            if no_timings {
                r = r.without_timings();
            }
            o.stdout.push_str(&render(&r, format));
            Ok(r.exit_code())
        }
        Command::Derive {
            construction,
            inputs,
            quasi,
            coquasi,
            verify_pre,
            common,
            out,
        } => {
            let doc = load_all(&inputs, field_arg(&common.field)?)?;
            let opts = DeriveOpts {
                quasi,
                coquasi,
                objects: common.objects.map(|s| s.split(',').map(|w| w.trim().to_string()).collect()),
                verify_pre,
            };
            let d = derive(&doc, &construction, &opts)?;
            write_doc(&d, &out, o)?;
            Ok(0)
        }
        Command::Act {
            yd,
            module,
            verify_pre,
            common,
            out,
        } => {
            let doc = load_all(&[yd, module], field_arg(&common.field)?)?;
            let opts = DeriveOpts {
                verify_pre,
                ..DeriveOpts::default()
            };
            let d = derive(&doc, "act", &opts)?;
            write_doc(&d, &out, o)?;
            Ok(0)
        }
        Command::Zoo { command } => match command {
            ZooCommand::List => {
                for n in kcat::zoo::names() {
                    o.stdout.push_str(&n);
                    o.stdout.push('\n');
                }
                Ok(0)
            }
            ZooCommand::Emit { name, field, out } => {
                let doc = load(&format!("zoo:{name}"), field_arg(&field)?)?;
                write_doc(&doc, &out, o)?;
                Ok(0)
            }
        },
    }
}

fn render(r: &crate::run::Report, f: Format) -> String {
    match f {
        Format::Text => r.to_text(),
        Format::Structured => r.to_json(),
    }
}

/// Parse arguments and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut o = Outcome::default();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                o.stdout = text;
            } else {
                o.stderr = text;
            }
            o.code = code;
            return o;
        }
    };
    match execute(cli, &mut o) {
        Ok(code) => o.code = code,
        Err(e) => {
            o.stderr.push_str(&format!("error: {e}\n"));
            if let CliError::Precondition { report, .. } = &e {
                o.stderr.push_str(&report.to_string());
            }
            o.code = e.exit_code();
        }
    }
    o
}
