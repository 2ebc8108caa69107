use clap::Parser;
use qlab::cli;

fn main() {
    let parsed = cli::Cli::parse(); // clap exits with code 2 on usage errors
    match cli::run(parsed) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("qlab: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}
