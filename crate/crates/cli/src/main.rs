mod cli;
mod cmd;
mod error;

use std::io::Write;

use clap::Parser;

use crate::cli::Cli;

fn main() {
    let cli = Cli::parse();
    let code = match cmd::run(&cli.command, cli.format, cli.cache_dir.as_deref()) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            if !text.is_empty() {
                let _ = write!(out, "{text}");
                if !text.ends_with('\n') {
                    let _ = writeln!(out);
                }
            }
            let _ = out.flush();
            code
        }
        Err(e) => {
            eprintln!("{e}");
            e.code
        }
    };
    std::process::exit(code);
}
