use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shifted_csl::cli::{self, CliError, Format};

/// Coincidence site lattices of the square lattice and its shifted copies.
#[derive(Parser)]
#[command(name = "csl", version)]
struct Args {
    /// Output format; svg is only accepted by `render`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a Gaussian integer such as 4+7i.
    Factor {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// List coincidence isometries of a given index.
    Rotations {
        #[arg(long)]
        sigma: String,
        /// Rational shift (a/b+c/di) or irrational descriptor.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Tabulate f_x, fhat_x and Fhat_x up to a limit.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        #[arg(long, default_value_t = 100)]
        limit: u64,
    },
    /// Decide whether the coincidence isometries form a group.
    Structure {
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        /// Largest index searched when no point reflection survives.
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Compare the brute-force oracle with the analytic membership tests.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        #[arg(long, default_value_t = 65)]
        sigma_max: u64,
        /// Fixed window radius; defaults to three times the index.
        #[arg(long)]
        radius: Option<u32>,
    },
    /// Draw the shifted lattice, its image and their common coset as SVG.
    Render {
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        shift: String,
        #[arg(long, allow_hyphen_values = true)]
        numerator: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        eps: String,
        /// Compose with complex conjugation.
        #[arg(long)]
        reflect: bool,
        #[arg(long, default_value_t = 6)]
        radius: u32,
    },
}

fn run(args: &Args) -> Result<String, CliError> {
    let f = args.format;
    match &args.command {
        Command::Factor { z } => cli::cmd_factor(z, f),
        Command::Rotations { sigma, shift } => cli::cmd_rotations(sigma, shift.as_deref(), f),
        Command::Count { shift, limit } => cli::cmd_count(shift, *limit, f),
        Command::Structure { shift, bound } => cli::cmd_structure(shift, *bound, f),
        Command::Verify { shift, sigma_max, radius } => cli::cmd_verify(shift, *sigma_max, *radius, f),
        Command::Render { shift, numerator, eps, reflect, radius } => {
            cli::cmd_render(shift, numerator, eps, *reflect, *radius, f)
        }
    }
}

/// Joins the words of a multi-word shift (`--shift dep 0/1 -2/1`) into one
/// argument. Words run until the next option; `-2/1` is not one.
fn join_shift_words(raw: impl Iterator<Item = String>) -> Vec<String> {
    let is_option = |w: &str| w.starts_with("--") || matches!(w, "-o" | "-h" | "-V");
    let mut out: Vec<String> = Vec::new();
    // None: not inside a shift; Some(false): expecting the first word
    let mut shift: Option<bool> = None;
    for word in raw {
        match shift {
            Some(started) if !is_option(&word) => {
                if started {
                    let last = out.last_mut().expect("first shift word was pushed");
                    last.push(' ');
                    last.push_str(&word);
                } else {
                    out.push(word);
                }
                shift = Some(true);
            }
            _ => {
                shift = (word == "--shift").then_some(false);
                out.push(word);
            }
        }
    }
    out
}

fn emit(args: &Args, text: &str) -> Result<(), String> {
    match &args.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse_from(join_shift_words(std::env::args()));
    let (text, code) = match run(&args) {
        Ok(text) => (text, 0),
        Err(CliError::Mismatch { report }) => (report, 1),
        Err(e) => {
            eprintln!("csl: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Err(e) = emit(&args, &text) {
        eprintln!("csl: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
