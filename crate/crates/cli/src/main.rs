use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qgelgamal::Exponents;
use qgelgamal_cli::commands::{self, Ephemeral};
use qgelgamal_cli::{demo, CliError};

/// Quasigroup ElGamal: key generation, file encryption and worked examples.
#[derive(Parser)]
#[command(name = "qgelgamal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair of the given alphabet order.
    Keygen {
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..=256))]
        order: u16,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out_pub: PathBuf,
        #[arg(long)]
        out_priv: PathBuf,
    },
    /// Encrypt a file (or whitespace/comma separated symbols) to a public key.
    Encrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        #[arg(long, conflicts_with = "eph")]
        seed: Option<u64>,
        /// Explicit ephemeral exponents `r,s,t`.
        #[arg(long, value_parser = commands::parse_exponents)]
        eph: Option<Exponents>,
        #[arg(long)]
        raw_symbols: bool,
    },
    /// Decrypt a ciphertext file.
    Decrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long = "priv")]
        private: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Replay a worked example and check every intermediate value.
    Demo {
        #[arg(long = "paper-example", value_parser = clap::value_parser!(u8).range(1..=3))]
        example: u8,
    },
    /// Recover the private exponents from a public key.
    Attack {
        #[arg(long = "pub")]
        public: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Keygen {
            order,
            seed,
            out_pub,
            out_priv,
        } => commands::keygen(usize::from(order), seed, &out_pub, &out_priv),
        Command::Encrypt {
            public,
            input,
            output,
            seed,
            eph,
            raw_symbols,
        } => {
            let ephemeral = match (eph, seed) {
                (Some(e), _) => Ephemeral::Explicit(e),
                (None, Some(s)) => Ephemeral::Seed(s),
                (None, None) => Ephemeral::Entropy,
            };
            commands::encrypt(&public, &input, &output, ephemeral, raw_symbols)
        }
        Command::Decrypt {
            public,
            private,
            input,
            output,
        } => commands::decrypt(&public, &private, &input, &output),
        Command::Demo { example } => demo::run(example, &mut io::stdout().lock()),
        Command::Attack { public } => commands::cmd_attack(&public, &mut io::stdout().lock()).map(|_| ()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
