//! The `homjmp` command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when at least one
//! identity fails (the report with its witness is printed on standard output),
//! 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use homjmp::algebra::admissible_pair;
use homjmp::constructions::{
    an_family, beta_from_automorphism, t_star_extension, twisted_pseudo_euclidean, yau_twist, yau_twist_jmp,
    Requirement,
};
use homjmp::io::{self, AlgebraDocument, Object};
use homjmp::suite::{build_report, run_suite, Suite};
use homjmp::triples::hljp_from_homjmp;
use homjmp::{CheckReport, Error, HomJMPAlgebra};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "homjmp", version, about = "Exact checks and constructions for Hom-JMP algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a check suite on an algebra file.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, env = "HOMJMP_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Twist the products and the twist map by a (weak) self-morphism.
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// Only require the map to preserve the products.
        #[arg(long)]
        weak: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the T*-extension of a JMP algebra (twist must be the identity).
    Textend {
        file: PathBuf,
        /// Automorphism `a` of the base; emits the structure twisted by `a + ta`.
        #[arg(long)]
        auto: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the n-th member of the family of a pseudo-Euclidean Hom-JMP algebra.
    Anfamily {
        file: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the Hom-Lie-Jordan-Poisson triple system of a Hom-JMP algebra.
    Triple {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify an algebra file against every applicable suite.
    Report {
        file: PathBuf,
        #[arg(long, env = "HOMJMP_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Write one of the built-in examples (ex3, ex3-flat, ex5, p6, p6-flat).
    Example {
        name: String,
        /// Parameter assignment such as `lambda=5/7`; repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>()
        .map_err(|_| format!("expected one of: {}", Suite::NAMES.join(", ")))
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

enum Outcome {
    Pass,
    Fail,
}

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> Result<(), Error> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Error::format("stdout", e.to_string()))
    }

    fn emit(&mut self, text: &str, output: Option<&Path>) -> Result<(), Error> {
        match output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::format(path.display().to_string(), e.to_string())),
            None => self.print(text),
        }
    }
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    file: &'a str,
    suite: String,
    seed: u64,
    report: &'a CheckReport,
}

#[derive(Serialize)]
struct BetaOutput {
    beta_is_automorphism: bool,
    image_in_centers: bool,
    verdicts_agree: bool,
}

#[derive(Serialize)]
struct PreconditionOutput<'a> {
    file: &'a str,
    report: &'a CheckReport,
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("outputs serialize");
    s.push('\n');
    s
}

fn as_jmp(doc: &AlgebraDocument) -> Result<HomJMPAlgebra, Error> {
    match &doc.object {
        Object::Algebra(a) => Ok(admissible_pair(a)),
        Object::Jmp(j) => Ok(j.clone()),
        _ => Err(Error::Precondition("expected an algebra or jmp file".into())),
    }
}

fn derived(doc: &AlgebraDocument, suffix: &str, object: Object, by: &str) -> AlgebraDocument {
    let mut d = AlgebraDocument::new(format!("{}-{suffix}", doc.name), object).with_meta("constructed-by", by);
    d.meta.insert("source".into(), doc.name.clone().into());
    d
}

fn execute(command: Command, io_: &mut Io<'_>) -> Result<Outcome, Error> {
    match command {
        Command::Check { file, suite, seed } => {
            let doc = io::load_algebra(&file)?;
            let report = run_suite(&doc, suite, seed)?;
            let v = CheckOutput {
                file: &doc.name,
                suite: suite.to_string(),
                seed,
                report: &report,
            };
            io_.print(&pretty(&v))?;
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Twist {
            file,
            map,
            weak,
            output,
        } => {
            let doc = io::load_algebra(&file)?;
            let beta = io::load_map(&map)?;
            let require = if weak { Requirement::Weak } else { Requirement::Full };
            let object = match &doc.object {
                Object::Algebra(a) => Object::Algebra(yau_twist(a, &beta, require)?),
                Object::Jmp(j) => Object::Jmp(yau_twist_jmp(j, &beta, require)?),
                _ => return Err(Error::Precondition("twist expects an algebra or jmp file".into())),
            };
            let out = derived(&doc, "twisted", object, "twist");
            io_.emit(&io::to_canonical_json(&out), output.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Textend { file, auto, output } => {
            let doc = io::load_algebra(&file)?;
            let ext = t_star_extension(&as_jmp(&doc)?)?;
            let out = match auto {
                None => derived(&doc, "textension", Object::Jmp(ext.result.clone()), "textension")
                    .with_form(ext.form.clone()),
                Some(path) => {
                    let a = io::load_map(&path)?;
                    let beta = beta_from_automorphism(&ext, &a)?;
                    if !beta.beta_is_automorphism {
                        let v = BetaOutput {
                            beta_is_automorphism: false,
                            image_in_centers: beta.image_in_centers,
                            verdicts_agree: beta.verdicts_agree(),
                        };
                        io_.print(&pretty(&v))?;
                        return Ok(Outcome::Fail);
                    }
                    let (j, b) = twisted_pseudo_euclidean(&ext.result, &ext.form, &beta.beta)?;
                    derived(&doc, "textension-twisted", Object::Jmp(j), "textension")
                        .with_form(b)
                        .with_meta("image-in-centers", beta.image_in_centers)
                }
            };
            io_.emit(&io::to_canonical_json(&out), output.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Anfamily { file, n, output } => {
            let doc = io::load_algebra(&file)?;
            let form = doc
                .form
                .clone()
                .ok_or_else(|| Error::format("form", "anfamily needs a file with a form"))?;
            let (j, b) = an_family(&as_jmp(&doc)?, &form, n)?;
            let out = derived(&doc, &format!("a{n}"), Object::Jmp(j), "an-family").with_form(b);
            io_.emit(&io::to_canonical_json(&out), output.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Triple { file, output } => {
            let doc = io::load_algebra(&file)?;
            let j = as_jmp(&doc)?;
            let jmp = homjmp::identity::check_hom_jmp(&j);
            if !jmp.passed() {
                io_.print(&pretty(&PreconditionOutput {
                    file: &doc.name,
                    report: &jmp,
                }))?;
                return Ok(Outcome::Fail);
            }
            let out = derived(&doc, "triple", Object::Hljp(hljp_from_homjmp(&j)?), "triple");
            io_.emit(&io::to_canonical_json(&out), output.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Report { file, seed } => {
            let doc = io::load_algebra(&file)?;
            io_.print(&build_report(&doc, seed)?.to_json())?;
            Ok(Outcome::Pass)
        }
        Command::Example { name, params, output } => {
            let params: BTreeMap<String, String> = params.into_iter().collect();
            let doc = io::example(&name, &params)?;
            io_.emit(&io::to_canonical_json(&doc), output.as_deref())?;
            Ok(Outcome::Pass)
        }
    }
}

/// Runs the command line on `argv` (program name first) and returns the exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_PASS
            };
        }
    };
    let mut io_ = Io { out };
    match execute(cli.command, &mut io_) {
        Ok(Outcome::Pass) => EXIT_PASS,
        Ok(Outcome::Fail) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
