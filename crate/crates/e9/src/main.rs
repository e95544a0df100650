use clap::Parser;

use e9::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match execute(&cli, &mut out) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
