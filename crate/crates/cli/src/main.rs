mod cli;
mod commands;
mod util;

use clap::Parser;

fn main() {
    let args = cli::Cli::parse();
    match commands::run(args) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.code);
        }
    }
}
