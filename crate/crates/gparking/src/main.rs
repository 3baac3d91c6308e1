use clap::Parser;
use gparking::cli;

fn main() {
    // Clap exits with status 2 on flag errors; domain errors come back as 1.
    let args = cli::Cli::parse();
    std::process::exit(cli::run(&args));
}
