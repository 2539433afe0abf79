use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qsemicat::enumerate::DEFAULT_CAP;
use qsemicat::report::{self, PresheafClass, Report};
use qsemicat::{Error, Variance, Workspace};

/// Exit statuses.
mod exit {
    pub const OK: u8 = 0;
    pub const NO: u8 = 1;
    pub const CAP: u8 = 2;
    pub const NOT_REGULAR: u8 = 3;
    pub const USAGE: u8 = 4;
}

#[derive(Parser)]
#[command(name = "qsemicat", version, about = "Check quantaloid-enriched semicategories")]
struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Bound on enumerated candidates and search steps.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Reserved; all commands are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every object of a workspace document.
    Validate {
        /// Workspace document.
        path: PathBuf,
    },
    /// List presheaves on a semicategory.
    Presheaves {
        /// Workspace document.
        path: PathBuf,
        /// Semicategory name.
        name: String,
        /// Presheaf type (an object of the base); all types if omitted.
        #[arg(long = "type", value_name = "TYPE")]
        ty: Option<String>,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = VarianceArg::Contra)]
        variance: VarianceArg,
    },
    /// Decide Morita equivalence of two regular semicategories.
    Morita { path: PathBuf, a: String, b: String },
    /// Idempotent-splitting checks.
    #[command(subcommand)]
    Completion(CompletionCommand),
}

#[derive(Subcommand)]
enum CompletionCommand {
    /// Objects and homs of Idm(Q).
    Idm { path: PathBuf, quantaloid: String },
    /// Regular semidistributors A => B are the fixed matrices.
    Verify { path: PathBuf, a: String, b: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    Regular,
    Yoneda,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarianceArg {
    Contra,
    Co,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::EnumerationCapExceeded { .. } | Error::SearchCapExceeded { .. } => exit::CAP,
        Error::NotRegular(_) => exit::NOT_REGULAR,
        Error::Parse(_) => exit::USAGE,
        _ => exit::NO,
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let load = |p: &PathBuf| Workspace::load(p);
    match &cli.command {
        Command::Validate { path } => Ok(report::validate(&load(path)?)),
        Command::Presheaves {
            path,
            name,
            ty,
            class,
            variance,
        } => {
            let class = match class {
                ClassArg::All => PresheafClass::All,
                ClassArg::Regular => PresheafClass::Regular,
                ClassArg::Yoneda => PresheafClass::Yoneda,
            };
            let variance = match variance {
                VarianceArg::Contra => Variance::Contravariant,
                VarianceArg::Co => Variance::Covariant,
            };
            report::presheaves(&load(path)?, name, ty.as_deref(), class, variance, cli.cap)
        }
        Command::Morita { path, a, b } => report::morita(&load(path)?, a, b, cli.cap),
        Command::Completion(CompletionCommand::Idm { path, quantaloid }) => {
            report::completion_idm(&load(path)?, quantaloid)
        }
        Command::Completion(CompletionCommand::Verify { path, a, b }) => {
            report::completion_verify(&load(path)?, a, b, cli.cap)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match run(&cli) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.json).expect("json"));
            } else {
                print!("{}", r.text);
            }
            ExitCode::from(if r.ok { exit::OK } else { exit::NO })
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({"schema": report::SCHEMA, "error": report::error_json(&e)});
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
